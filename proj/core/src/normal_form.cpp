#include "cylcob/normal_form.hpp"

#include <algorithm>
#include <set>

namespace cylcob {

// ---------------------------------------------------------------------------
// Cap reconstruction and type synthesis

namespace {

// Innermost-first peeling of the cap system, one cap per step: among the
// starts whose cap is currently adjacent (the next unconsumed clockwise point
// is a non-start, which is then necessarily the cap's own end), take the one
// with the smallest current label, emit the death, and renumber the circle the
// way that death renumbers survivors. With at most n/2 starts an adjacent cap
// always exists, so stalling means the start set is inconsistent.
struct PeelResult {
    std::vector<std::pair<int, int>> caps;  // (start, end) original labels, peel order
    GeneratorWord word = GeneratorWord::identity(0);
};

PeelResult peel_caps(int n, const std::vector<int>& starts) {
    if (n < 0) throw InconsistentIndex("negative circle size");
    std::set<int> pending;
    for (int s : starts) {
        if (s < 0 || s >= n)
            throw InconsistentIndex("cap start " + std::to_string(s) +
                                    " outside the circle of size " + std::to_string(n));
        if (!pending.insert(s).second)
            throw InconsistentIndex("duplicate cap start " + std::to_string(s));
    }
    if (2 * static_cast<int>(pending.size()) > n)
        throw InconsistentIndex("more cap starts than fit on " + std::to_string(n) + " points");

    // circle[pos] = original label currently at label pos
    std::vector<int> circle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) circle[static_cast<std::size_t>(i)] = i;

    PeelResult result;
    result.word = GeneratorWord::identity(n);
    while (!pending.empty()) {
        const int m = static_cast<int>(circle.size());
        int pos = -1;
        for (int c = 0; c < m; ++c) {
            const int s = circle[static_cast<std::size_t>(c)];
            const int t = circle[static_cast<std::size_t>((c + 1) % m)];
            if (pending.count(s) && !pending.count(t)) {
                pos = c;
                break;
            }
        }
        if (pos < 0)
            throw InconsistentIndex("cap starts force a start label to close another cap");

        const int s = circle[static_cast<std::size_t>(pos)];
        const int t = circle[static_cast<std::size_t>((pos + 1) % m)];
        result.caps.emplace_back(s, t);
        result.word.append(Generator::death(m, pos));
        pending.erase(s);

        if (pos < m - 1) {
            circle.erase(circle.begin() + pos, circle.begin() + pos + 2);
        } else {
            // wrap death: survivor at the old position m-2 becomes the basepoint
            std::vector<int> next;
            next.push_back(circle[static_cast<std::size_t>(m - 2)]);
            for (int c = 1; c <= m - 3; ++c) next.push_back(circle[static_cast<std::size_t>(c)]);
            circle = std::move(next);
        }
    }
    return result;
}

}  // namespace

std::vector<std::pair<int, int>> reconstruct_caps(int n, const std::vector<int>& starts) {
    return peel_caps(n, starts).caps;
}

GeneratorWord synthesize_type1(int n, const std::vector<int>& death_index) {
    return peel_caps(n, death_index).word;
}

GeneratorWord synthesize_type3(int m, const std::vector<int>& birth_index) {
    const GeneratorWord mirrored = synthesize_type1(m, birth_index);
    // A births word read upside down is a deaths word on the same circle with
    // the same starting points, so reverse and swap d(k,i) -> b(k-2,i).
    GeneratorWord out = GeneratorWord::identity(m - 2 * static_cast<int>(birth_index.size()));
    const auto& gens = mirrored.gens();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        out.append(Generator::birth(it->arity() - 2, it->slot()));
    return out;
}

// ---------------------------------------------------------------------------
// Normal form

GeneratorWord NormalForm::middle_word() const {
    switch (middle) {
        case MiddleKind::empty:
            return GeneratorWord::identity(deaths.n_out());
        case MiddleKind::twist_power:
            return power(Generator::twist(deaths.n_out()), middle_count);
        case MiddleKind::bracelets: {
            const GeneratorWord one =
                GeneratorWord::of({Generator::birth(0, 0), Generator::death(2, 1)});
            return power(one, middle_count);
        }
    }
    throw Error("unreachable middle kind");
}

GeneratorWord NormalForm::assemble() const {
    GeneratorWord w = then(then(deaths, middle_word()), births);
    const int m = w.n_out();
    for (long long i = 0; i < loops; ++i) {
        w.append(Generator::birth(m, 0));
        w.append(Generator::death(m + 2, 0));
    }
    return w;
}

NormalForm normal_form_from(const InvariantTuple& inv) {
    NormalForm nf;
    nf.deaths = synthesize_type1(inv.n_in, inv.death_index);
    nf.births = synthesize_type3(inv.n_out, inv.birth_index);
    nf.loops = inv.loops;

    if (inv.bracelets > 0) {
        nf.middle = MiddleKind::bracelets;
        nf.middle_count = inv.bracelets;
    } else if (inv.through_count == 0) {
        nf.middle = MiddleKind::empty;
    } else {
        // The twist power is pinned by matching t0 of the reassembled word;
        // each extra twist advances t0 by one mod tau, so exactly one power fits.
        nf.middle = MiddleKind::twist_power;
        const int tau = inv.through_count;
        bool found = false;
        for (int power_candidate = 0; power_candidate < tau; ++power_candidate) {
            nf.middle_count = power_candidate;
            GeneratorWord trial = then(then(nf.deaths, nf.middle_word()), nf.births);
            if (invariants(evaluate(trial)).twist_class == inv.twist_class) {
                found = true;
                break;
            }
        }
        if (!found) throw Error("internal: no twist power reproduces t0");
    }
    return nf;
}

NormalForm normalize(const GeneratorWord& w) { return normalize(evaluate(w)); }

// ---------------------------------------------------------------------------
// Relations

std::string relation_name(RelationId id) {
    switch (id) {
        case RelationId::circle: return "circle";
        case RelationId::snake: return "snake";
        case RelationId::bd_commute: return "birth-death commute";
        case RelationId::bb_commute: return "births commute";
        case RelationId::dd_commute: return "deaths commute";
        case RelationId::twist_birth: return "twist-birth slide";
        case RelationId::twist_death: return "twist-death slide";
        case RelationId::dehn: return "dehn twist";
        case RelationId::edge_bracelet: return "bracelet";
        case RelationId::edge_snake: return "edge snake";
        case RelationId::edge_twisted_snake: return "twisted snake";
        case RelationId::edge_bd_commute: return "edge birth-death commute";
        case RelationId::edge_bb_commute: return "edge births commute";
        case RelationId::edge_dd_commute: return "edge deaths commute";
    }
    return "?";
}

std::string RelationInstance::str() const {
    return relation_name(id) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
           " j=" + std::to_string(j) + " v=" + std::to_string(variant);
}

namespace {

GeneratorWord word2(const Generator& a, const Generator& b) { return GeneratorWord::of({a, b}); }

void require(bool ok, const RelationInstance& inst) {
    if (!ok) throw OutOfRange("relation instance outside its domain: " + inst.str());
}

}  // namespace

RelationSides relation_sides(const RelationInstance& inst) {
    using G = Generator;
    const int k = inst.k;
    const int i = inst.i;
    const int j = inst.j;
    switch (inst.id) {
        case RelationId::circle:
            require(k >= 0 && 0 <= i && i <= k, inst);
            return {word2(G::birth(k, i), G::death(k + 2, i)), GeneratorWord::identity(k), 1};
        case RelationId::snake:
            require(k >= 0 && 0 <= i && i <= k && 0 <= j && j <= k && (i == j + 1 || i + 1 == j),
                    inst);
            return {word2(G::birth(k, j), G::death(k + 2, i)), GeneratorWord::identity(k), 0};
        case RelationId::bd_commute:
            require(k >= 0 && 0 <= i && i <= k && 0 <= j && j <= k && (i < j - 1 || i > j + 1),
                    inst);
            if (i < j - 1)
                return {word2(G::birth(k, j), G::death(k + 2, i)),
                        word2(G::death(k, i), G::birth(k - 2, j - 2)), 0};
            return {word2(G::birth(k, j), G::death(k + 2, i)),
                    word2(G::death(k, i - 2), G::birth(k - 2, j)), 0};
        case RelationId::bb_commute:
            require(k >= 0 && 0 <= i && i <= j && j <= k, inst);
            return {word2(G::birth(k, j), G::birth(k + 2, i)),
                    word2(G::birth(k, i), G::birth(k + 2, j + 2)), 0};
        case RelationId::dd_commute:
            require(k >= 4 && 0 <= i && i < j - 1 && j < k - 1, inst);
            return {word2(G::death(k, j), G::death(k - 2, i)),
                    word2(G::death(k, i), G::death(k - 2, j - 2)), 0};
        case RelationId::twist_birth:
            require(k >= 0 && 0 <= i && i <= k, inst);
            return {word2(G::birth(k, i), G::twist(k + 2)),
                    word2(G::twist(k), G::birth(k, i + 1)), 0};
        case RelationId::twist_death:
            require(k >= 2 && 0 <= i && i < k - 1, inst);
            return {word2(G::death(k, i), G::twist(k - 2)),
                    word2(G::twist(k), G::death(k, i + 1)), 0};
        case RelationId::dehn:
            require(k >= 0, inst);
            return {power(G::twist(k), k), GeneratorWord::identity(k), 0};
        case RelationId::edge_bracelet:
            require(k == 0, inst);
            return {word2(G::birth(0, 0), G::death(2, 1)), word2(G::birth(0, 1), G::death(2, 0)),
                    0};
        case RelationId::edge_snake:
            // At k = 0 both words close into the bracelet, so the snakes
            // start at k = 1.
            require(k >= 1 && (inst.variant == 0 || inst.variant == 1), inst);
            if (inst.variant == 0)
                return {word2(G::birth(k, k + 1), G::death(k + 2, k)), GeneratorWord::identity(k),
                        0};
            return {word2(G::birth(k, k), G::death(k + 2, k + 1)), GeneratorWord::identity(k), 0};
        case RelationId::edge_twisted_snake: {
            // At k = 0 these words close into a bracelet rather than a snake,
            // so the family starts at k = 1; negative twist exponents reduce
            // mod k by the dehn relation.
            require(k >= 1 && (inst.variant == 0 || inst.variant == 1), inst);
            if (inst.variant == 0)
                return {word2(G::birth(k, 0), G::death(k + 2, k + 1)), power(G::twist(k), 2 % k),
                        0};
            return {word2(G::birth(k, k + 1), G::death(k + 2, 0)),
                    power(G::twist(k), ((k - 2) % k + k) % k), 0};
        }
        case RelationId::edge_bd_commute:
            require(k >= 2 && 1 <= i && i <= k - 1 && (inst.variant == 0 || inst.variant == 1),
                    inst);
            if (inst.variant == 0)
                return {word2(G::birth(k, k + 1), G::death(k + 2, i)),
                        word2(G::death(k, i), G::birth(k - 2, k - 1)), 0};
            return {word2(G::birth(k, i), G::death(k + 2, k + 1)),
                    word2(G::death(k, k - 1), G::birth(k - 2, i)), 0};
        case RelationId::edge_bb_commute:
            require(k >= 0 && 1 <= i && i <= k + 1, inst);
            return {word2(G::birth(k, k + 1), G::birth(k + 2, i)),
                    word2(G::birth(k, i), G::birth(k + 2, k + 3)), 0};
        case RelationId::edge_dd_commute:
            require(k >= 4 && 1 <= i && i <= k - 3, inst);
            return {word2(G::death(k, k - 1), G::death(k - 2, i)),
                    word2(G::death(k, i), G::death(k - 2, k - 3)), 0};
    }
    throw Error("unreachable relation id");
}

bool check_relation(const RelationInstance& inst) {
    const RelationSides sides = relation_sides(inst);
    if (!eq_in(Category::cyl, sides.lhs, sides.rhs)) return false;
    const InvariantTuple a = invariants(evaluate(sides.lhs));
    const InvariantTuple b = invariants(evaluate(sides.rhs));
    return a.loops == b.loops + sides.loop_gain;
}

std::vector<RelationInstance> all_relation_instances(int max_k) {
    std::vector<RelationInstance> out;
    const auto add = [&](RelationId id, int k, int i = 0, int j = 0, int v = 0) {
        out.push_back({id, k, i, j, v});
    };
    for (int k = 0; k <= max_k; ++k) {
        for (int i = 0; i <= k; ++i) add(RelationId::circle, k, i);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                if (i == j + 1 || i + 1 == j) add(RelationId::snake, k, i, j);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                if (i < j - 1 || i > j + 1) add(RelationId::bd_commute, k, i, j);
        for (int i = 0; i <= k; ++i)
            for (int j = i; j <= k; ++j) add(RelationId::bb_commute, k, i, j);
        if (k >= 4)
            for (int j = 0; j < k - 1; ++j)
                for (int i = 0; i < j - 1; ++i) add(RelationId::dd_commute, k, i, j);
        for (int i = 0; i <= k; ++i) add(RelationId::twist_birth, k, i);
        if (k >= 2)
            for (int i = 0; i < k - 1; ++i) add(RelationId::twist_death, k, i);
        add(RelationId::dehn, k);
        if (k == 0) add(RelationId::edge_bracelet, 0);
        if (k >= 1) {
            add(RelationId::edge_snake, k, 0, 0, 0);
            add(RelationId::edge_snake, k, 0, 0, 1);
        }
        if (k >= 1) {
            add(RelationId::edge_twisted_snake, k, 0, 0, 0);
            add(RelationId::edge_twisted_snake, k, 0, 0, 1);
        }
        for (int i = 1; i <= k - 1; ++i) {
            add(RelationId::edge_bd_commute, k, i, 0, 0);
            add(RelationId::edge_bd_commute, k, i, 0, 1);
        }
        for (int i = 1; i <= k + 1; ++i) add(RelationId::edge_bb_commute, k, i);
        for (int i = 1; i <= k - 3; ++i)
            if (k >= 4) add(RelationId::edge_dd_commute, k, i);
    }
    return out;
}

}  // namespace cylcob
