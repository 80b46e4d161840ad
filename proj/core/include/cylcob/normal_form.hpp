#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cylcob/invariants.hpp"

namespace cylcob {

// The unique deaths -> (twists | bracelets) -> births factorization of a
// cylinder morphism, with the contractible-loop count carried alongside for
// loop-counting contexts.
enum class MiddleKind { empty, twist_power, bracelets };

struct NormalForm {
    GeneratorWord deaths = GeneratorWord::identity(0);  // deaths only, possibly empty
    MiddleKind middle = MiddleKind::empty;
    long long middle_count = 0;  // twist power in 0..tau-1, or bracelet count >= 1
    GeneratorWord births = GeneratorWord::identity(0);  // births only, possibly empty
    long long loops = 0;                                // mu

    GeneratorWord middle_word() const;

    // deaths, middle, births, then `loops` canonical circle pairs
    // [b(m,0), d(m+2,0)] so the assembled word is loop-faithful.
    GeneratorWord assemble() const;

    bool operator==(const NormalForm&) const = default;
    // Equality of the cylinder class only (loop count ignored).
    bool equal_in_cyl(const NormalForm& o) const {
        return deaths == o.deaths && middle == o.middle && middle_count == o.middle_count &&
               births == o.births;
    }
};

// The unique non-crossing cap system on an n-marked circle whose caps start at
// exactly `starts`, as (start, end) pairs in the order the caps can be peeled
// innermost-first. Throws InconsistentIndex when no such system exists.
std::vector<std::pair<int, int>> reconstruct_caps(int n, const std::vector<int>& starts);

// The canonical deaths-only word from an n-marked circle realizing the given
// death index: peel the innermost cap with adjacent endpoints, smallest
// current start label first.
GeneratorWord synthesize_type1(int n, const std::vector<int>& death_index);

// The canonical births-only word into an m-marked circle realizing the given
// birth index; the upside-down mirror of synthesize_type1.
GeneratorWord synthesize_type3(int m, const std::vector<int>& birth_index);

// Normal form from the invariant data alone.
NormalForm normal_form_from(const InvariantTuple& inv);

inline NormalForm normalize(const AffineDiagram& d) { return normal_form_from(invariants(d)); }

// Normal form of a word; inverse twists must have been eliminated.
NormalForm normalize(const GeneratorWord& w);

// ---------------------------------------------------------------------------
// The defining relation families of the cylinder category, named by content.
// `edge_*` are the wrap-around companions obtained by twist conjugation.
enum class RelationId {
    circle,            // death on top of the matching birth: a contractible circle
    snake,             // death next to the birth: straighten
    bd_commute,        // distant death and birth pass each other
    bb_commute,        // distant births pass each other
    dd_commute,        // distant deaths pass each other
    twist_birth,       // birth slides through a twist, slot advancing
    twist_death,       // death slides through a twist, slot advancing
    dehn,              // the full twist is the identity
    edge_bracelet,     // both bracelet presentations agree
    edge_snake,        // wrap-around snakes straighten
    edge_twisted_snake,// wrap-around snakes that straighten up to twists
    edge_bd_commute,
    edge_bb_commute,
    edge_dd_commute,
};

std::string relation_name(RelationId id);

// One instantiation; j is ignored by single-parameter families, and `variant`
// picks the side for the two-sided edge families (0 or 1).
struct RelationInstance {
    RelationId id;
    int k = 0;
    int i = 0;
    int j = 0;
    int variant = 0;
    std::string str() const;
};

struct RelationSides {
    GeneratorWord lhs;
    GeneratorWord rhs;
    // expected loops(lhs) - loops(rhs) in the loop-counting category (1 for
    // the circle relation, 0 everywhere else)
    long long loop_gain = 0;
};

// Builds both sides; throws OutOfRange outside the relation's stated domain.
RelationSides relation_sides(const RelationInstance& inst);

// Both sides equal in the cylinder category, and in the loop-counting variant
// up to the stated loop gain.
bool check_relation(const RelationInstance& inst);

// Every legal instance of every relation family with arities bounded by
// max_k (the k parameter ranges over 0..max_k).
std::vector<RelationInstance> all_relation_instances(int max_k);

}  // namespace cylcob
