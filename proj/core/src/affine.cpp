#include "cylcob/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cylcob {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long floor_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

std::string row_name(Row r) { return r == Row::bottom ? "bottom" : "top"; }

}  // namespace

std::pair<Row, long long> AffineDiagram::partner_of_lift(Row row, long long lift) const {
    const int p = period(row);
    const long long base = floor_mod(lift, p);
    const long long copies = floor_div(lift, p);
    const Partner& pr = partner(row, static_cast<int>(base));
    const int target_period = period(pr.row);
    return {pr.row, pr.index + (pr.shift + copies) * target_period};
}

void AffineDiagram::set_pair(Row row1, int i1, Row row2, int i2, long long shift) {
    auto& fwd = row1 == Row::bottom ? bottom_ : top_;
    auto& bwd = row2 == Row::bottom ? bottom_ : top_;
    fwd[static_cast<std::size_t>(i1)] = Partner{row2, i2, shift};
    bwd[static_cast<std::size_t>(i2)] = Partner{row1, i1, -shift};
}

AffineDiagram generator_diagram(const Generator& g) {
    const int k = g.arity();
    switch (g.kind()) {
        case GenKind::id: {
            AffineDiagram d(k, k);
            for (int i = 0; i < k; ++i) d.set_pair(Row::bottom, i, Row::top, i, 0);
            return d;
        }
        case GenKind::twist: {
            // bottom lift x connects to top lift x+1
            AffineDiagram d(k, k);
            for (int i = 0; i < k; ++i) {
                if (i + 1 < k)
                    d.set_pair(Row::bottom, i, Row::top, i + 1, 0);
                else
                    d.set_pair(Row::bottom, i, Row::top, (i + 1) % k, 1);
            }
            return d;
        }
        case GenKind::twist_inv: {
            // bottom lift x connects to top lift x-1
            AffineDiagram d(k, k);
            for (int i = 0; i < k; ++i) {
                if (i - 1 >= 0)
                    d.set_pair(Row::bottom, i, Row::top, i - 1, 0);
                else
                    d.set_pair(Row::bottom, i, Row::top, k - 1, -1);
            }
            return d;
        }
        case GenKind::birth: {
            const int i = g.slot();
            AffineDiagram d(k, k + 2);
            if (i <= k) {
                for (int j = 0; j < k; ++j)
                    d.set_pair(Row::bottom, j, Row::top, j < i ? j : j + 2, 0);
                d.set_pair(Row::top, i, Row::top, i + 1, 0);
            } else {
                // i = k+1: the cup wraps past the basepoint, lifts (k+1, k+2);
                // bottom 0 reaches top k counterclockwise (lift 0 <-> lift -2).
                if (k > 0) d.set_pair(Row::bottom, 0, Row::top, k, -1);
                for (int j = 1; j < k; ++j) d.set_pair(Row::bottom, j, Row::top, j, 0);
                d.set_pair(Row::top, k + 1, Row::top, 0, 1);
            }
            return d;
        }
        case GenKind::death: {
            const int i = g.slot();
            AffineDiagram d(k, k - 2);
            if (i <= k - 2) {
                d.set_pair(Row::bottom, i, Row::bottom, i + 1, 0);
                for (int j = 0; j < k; ++j) {
                    if (j == i || j == i + 1) continue;
                    d.set_pair(Row::bottom, j, Row::top, j < i ? j : j - 2, 0);
                }
            } else {
                // i = k-1: the cap wraps, lifts (k-1, k); the survivor k-2
                // becomes the new basepoint via the wrap lift.
                d.set_pair(Row::bottom, k - 1, Row::bottom, 0, 1);
                for (int j = 1; j <= k - 3; ++j) d.set_pair(Row::bottom, j, Row::top, j, 0);
                if (k >= 3) d.set_pair(Row::bottom, k - 2, Row::top, 0, 1);
            }
            return d;
        }
    }
    throw Error("unreachable generator kind");
}

AffineDiagram compose_diagrams(const AffineDiagram& first, const AffineDiagram& second) {
    if (first.top_period() != second.bottom_period())
        throw PeriodMismatch("cannot stack a diagram with " + std::to_string(first.top_period()) +
                             " outgoing points under one with " +
                             std::to_string(second.bottom_period()) + " ingoing points");

    const int p = first.bottom_period();
    const int q = first.top_period();
    const int r = second.top_period();

    AffineDiagram out(p, r);
    out.add_loops(first.loops() + second.loops());
    out.add_bracelets(first.bracelets() + second.bracelets());

    std::vector<char> seen(static_cast<std::size_t>(q), 0);
    std::vector<char> bottom_done(static_cast<std::size_t>(p), 0);
    std::vector<char> top_done(static_cast<std::size_t>(r), 0);
    const auto mark = [&](long long junction) {
        seen[static_cast<std::size_t>(floor_mod(junction, q))] = 1;
    };

    const auto record = [&](Row r1, int i1, Row r2, long long lift2) {
        const int period2 = r2 == Row::bottom ? p : r;
        const long long base = floor_mod(lift2, period2);
        out.set_pair(r1, i1, r2, static_cast<int>(base), floor_div(lift2, period2));
        if (r2 == Row::bottom)
            bottom_done[static_cast<std::size_t>(base)] = 1;
        else
            top_done[static_cast<std::size_t>(base)] = 1;
    };

    // Open strands touching the composite bottom.
    for (int x = 0; x < p; ++x) {
        if (bottom_done[static_cast<std::size_t>(x)]) continue;
        bottom_done[static_cast<std::size_t>(x)] = 1;
        auto [row, lift] = first.partner_of_lift(Row::bottom, x);
        if (row == Row::bottom) {
            record(Row::bottom, x, Row::bottom, lift);
            continue;
        }
        for (;;) {
            mark(lift);
            auto [brow, blift] = second.partner_of_lift(Row::bottom, lift);
            if (brow == Row::top) {  // composite through strand
                record(Row::bottom, x, Row::top, blift);
                break;
            }
            mark(blift);
            auto [arow, alift] = first.partner_of_lift(Row::top, blift);
            if (arow == Row::bottom) {  // composite cap
                record(Row::bottom, x, Row::bottom, alift);
                break;
            }
            lift = alift;
        }
    }

    // Remaining open strands touch only the composite top (cups).
    for (int z = 0; z < r; ++z) {
        if (top_done[static_cast<std::size_t>(z)]) continue;
        top_done[static_cast<std::size_t>(z)] = 1;
        auto [row, lift] = second.partner_of_lift(Row::top, z);
        if (row == Row::top) {
            record(Row::top, z, Row::top, lift);
            continue;
        }
        for (;;) {
            mark(lift);
            auto [arow, alift] = first.partner_of_lift(Row::top, lift);
            if (arow != Row::top)
                throw Error("internal: strand from the top boundary reached the bottom untraced");
            mark(alift);
            auto [brow, blift] = second.partner_of_lift(Row::bottom, alift);
            if (brow == Row::top) {  // composite cup
                record(Row::top, z, Row::top, blift);
                break;
            }
            lift = blift;
        }
    }

    // Every unvisited middle representative lies on a closed loop. Walk it:
    // the deck shift accumulated over one base circuit is its winding number.
    for (int m = 0; m < q; ++m) {
        if (seen[static_cast<std::size_t>(m)]) continue;
        long long cur = m;
        long long guard = 0;
        for (;;) {
            seen[static_cast<std::size_t>(floor_mod(cur, q))] = 1;
            auto [brow, blift] = second.partner_of_lift(Row::bottom, cur);
            if (brow != Row::bottom) throw Error("internal: open strand escaped the loop tracer");
            seen[static_cast<std::size_t>(floor_mod(blift, q))] = 1;
            auto [arow, alift] = first.partner_of_lift(Row::top, blift);
            if (arow != Row::top) throw Error("internal: open strand escaped the loop tracer");
            cur = alift;
            if (floor_mod(cur - m, q) == 0) break;
            if (++guard > q + 2) throw Error("internal: loop trace failed to close");
        }
        const long long winding = (cur - m) / q;
        if (winding == 0) {
            out.add_loops(1);
        } else if (winding == 1 || winding == -1) {
            out.add_bracelets(1);
        } else {
            throw WindingViolation("closed loop with winding " + std::to_string(winding));
        }
    }

    return out;
}

AffineDiagram evaluate(const GeneratorWord& w) {
    AffineDiagram d = generator_diagram(Generator::id(w.n_in()));
    d.validate();
    for (const Generator& g : w.gens()) {
        d = compose_diagrams(d, generator_diagram(g));
        d.validate();
    }
    return d;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// A base edge with one fixed lift; `span` ends are in lift coordinates.
struct BaseEdge {
    enum class Kind { through, bottom_arc, top_arc } kind;
    long long e1, e2;  // through: (bottom, top); arcs: (left, right) within the row
};

// Does some deck translate of `e` put exactly one endpoint of it strictly
// inside the interval (a1, a2), stepping by `step` per translate?
bool translate_hits_interval(long long x, long long step, long long a1, long long a2) {
    // need integer m with a1 < x + m*step < a2
    if (step <= 0) return a1 < x && x < a2;
    const long long lo = floor_div(a1 - x, step) + 1;  // smallest m with x+m*step > a1
    return x + lo * step < a2;
}

}  // namespace

void AffineDiagram::validate() const {
    const auto fail = [](const std::string& msg) { throw Error("invalid affine diagram: " + msg); };

    if (bottom_period_ < 0 || top_period_ < 0) fail("negative period");
    if ((bottom_period_ + top_period_) % 2 != 0) fail("boundary parity mismatch");
    if (bracelets_ < 0 || loops_ < 0) fail("negative loop counter");

    const auto check_row = [&](Row row, const std::vector<Partner>& tab) {
        const int n = period(row);
        for (int i = 0; i < n; ++i) {
            const Partner& pr = tab[static_cast<std::size_t>(i)];
            if (pr.index < 0 || pr.index >= period(pr.row))
                fail("partner index out of range at " + row_name(row) + " " + std::to_string(i));
            if (pr.row == row && pr.index == i)
                fail("fixed end at " + row_name(row) + " " + std::to_string(i));
            // involution
            const Partner& back = partner(pr.row, pr.index);
            if (back.row != row || back.index != i || back.shift != -pr.shift)
                fail("involution broken at " + row_name(row) + " " + std::to_string(i));
            // same-row arcs must span less than one period
            if (pr.row == row) {
                const long long span = pr.index + pr.shift * n - i;
                if (span == 0 || std::llabs(span) >= n)
                    fail("arc span " + std::to_string(span) + " at " + row_name(row) + " " +
                         std::to_string(i));
            }
        }
    };
    check_row(Row::bottom, bottom_);
    check_row(Row::top, top_);

    // Planarity of the lifted matching. Collect one lift per base edge; the
    // pairwise tests below quantify over deck translates in closed form, so
    // three fundamental domains' worth of explicit lifts are never needed.
    std::vector<BaseEdge> edges;
    for (int i = 0; i < bottom_period_; ++i) {
        const Partner& pr = bottom_[static_cast<std::size_t>(i)];
        if (pr.row == Row::top) {
            edges.push_back({BaseEdge::Kind::through, i, pr.index + pr.shift * top_period_});
        } else {
            const long long other = pr.index + pr.shift * bottom_period_;
            if (i < other) edges.push_back({BaseEdge::Kind::bottom_arc, i, other});
        }
    }
    for (int i = 0; i < top_period_; ++i) {
        const Partner& pr = top_[static_cast<std::size_t>(i)];
        if (pr.row == Row::top) {
            const long long other = pr.index + pr.shift * top_period_;
            if (i < other) edges.push_back({BaseEdge::Kind::top_arc, i, other});
        }
    }

    const long long p = bottom_period_;
    const long long q = top_period_;
    for (std::size_t s = 0; s < edges.size(); ++s) {
        for (std::size_t t = s + 1; t < edges.size(); ++t) {
            const BaseEdge& e = edges[s];
            const BaseEdge& f = edges[t];
            bool cross = false;
            if (e.kind == BaseEdge::Kind::through && f.kind == BaseEdge::Kind::through) {
                // Translating e by m: crosses f iff the m-ranges where the
                // bottom end precedes f's differ from the top ranges.
                cross = floor_div(f.e1 - e.e1 - 1, p) != floor_div(f.e2 - e.e2 - 1, q);
            } else if (e.kind == BaseEdge::Kind::through || f.kind == BaseEdge::Kind::through) {
                const BaseEdge& th = e.kind == BaseEdge::Kind::through ? e : f;
                const BaseEdge& arc = e.kind == BaseEdge::Kind::through ? f : e;
                const long long end =
                    arc.kind == BaseEdge::Kind::bottom_arc ? th.e1 : th.e2;
                const long long step = arc.kind == BaseEdge::Kind::bottom_arc ? p : q;
                cross = translate_hits_interval(end, step, arc.e1, arc.e2);
            } else if (e.kind == f.kind) {
                const long long step = e.kind == BaseEdge::Kind::bottom_arc ? p : q;
                const auto inside = [&](long long x, long long a1, long long a2) {
                    return translate_hits_interval(x, 0, a1, a2);
                };
                // exactly one endpoint of a translate of f inside e
                for (long long m = floor_div(e.e1 - f.e2, step); m <= floor_div(e.e2 - f.e1, step) + 1;
                     ++m) {
                    const bool in1 = inside(f.e1 + m * step, e.e1, e.e2);
                    const bool in2 = inside(f.e2 + m * step, e.e1, e.e2);
                    if (in1 != in2) {
                        cross = true;
                        break;
                    }
                }
            }
            // opposite-row arcs never interact
            if (cross) fail("crossing strands");
        }
    }
}

}  // namespace cylcob
