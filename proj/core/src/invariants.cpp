#include "cylcob/invariants.hpp"

#include <algorithm>

namespace cylcob {

namespace {

// Arcs within `row`, as (start label, end label): the start is min of the two
// lifts reduced mod the period, which is well defined because an embedded arc
// spans less than one period.
std::vector<std::pair<int, int>> row_arcs(const AffineDiagram& d, Row row) {
    const int n = d.period(row);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        const Partner& pr = d.partner(row, i);
        if (pr.row != row) continue;
        const long long other = pr.index + pr.shift * n;
        if (i > other) continue;  // count each arc once, from its left lift
        out.emplace_back(i, static_cast<int>(((other % n) + n) % n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> caps(const AffineDiagram& d) { return row_arcs(d, Row::bottom); }

std::vector<std::pair<int, int>> cups(const AffineDiagram& d) { return row_arcs(d, Row::top); }

std::vector<std::pair<int, int>> through_pairs(const AffineDiagram& d) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < d.bottom_period(); ++i) {
        const Partner& pr = d.bottom(i);
        if (pr.row == Row::top) out.emplace_back(i, pr.index);
    }
    return out;  // already ascending in the ingoing label
}

InvariantTuple invariants(const AffineDiagram& d) {
    InvariantTuple t;
    t.n_in = d.bottom_period();
    t.n_out = d.top_period();
    t.bracelets = d.bracelets();
    t.loops = d.loops();

    for (const auto& [start, end] : caps(d)) t.death_index.push_back(start);
    for (const auto& [start, end] : cups(d)) t.birth_index.push_back(start);
    std::sort(t.death_index.begin(), t.death_index.end());
    std::sort(t.birth_index.begin(), t.birth_index.end());

    const auto through = through_pairs(d);
    t.through_count = static_cast<int>(through.size());

    if (t.through_count > 0) {
        // Number the through ends 1..tau on each circle, clockwise from the
        // basepoint; t0 is the outgoing number wired to ingoing number 1.
        std::vector<int> top_ends;
        for (const auto& [in, out] : through) top_ends.push_back(out);
        std::sort(top_ends.begin(), top_ends.end());
        const int first_target = through.front().second;
        const auto it = std::lower_bound(top_ends.begin(), top_ends.end(), first_target);
        t.twist_class = static_cast<int>(it - top_ends.begin()) + 1;
    }
    return t;
}

bool eq_in(Category cat, const GeneratorWord& w1, const GeneratorWord& w2) {
    if (w1.signature() != w2.signature())
        throw SignatureMismatch("words of signature (" + std::to_string(w1.n_in()) + "," +
                                std::to_string(w1.n_out()) + ") and (" + std::to_string(w2.n_in()) +
                                "," + std::to_string(w2.n_out()) + ") live in distinct hom-sets");
    if (cat == Category::da) return evaluate(w1) == evaluate(w2);

    const InvariantTuple a = invariants(evaluate(eliminate_twist_inverses(w1)));
    const InvariantTuple b = invariants(evaluate(eliminate_twist_inverses(w2)));
    return cat == Category::cyla ? a == b : a.equal_ignoring_loops(b);
}

}  // namespace cylcob
