#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cylcob/affine.hpp"

namespace cylcob {

// The complete equality certificate for striped-cylinder morphisms:
//   death_index / birth_index  ascending cap / cup starting points
//   through_count              tau, the number of boundary-to-boundary strands
//   twist_class                t0 in 1..tau, present iff tau > 0: the outgoing
//                              through-numbering hit by the first ingoing one
//   bracelets / loops          beta and mu
// Cylinder equality compares everything but loops; the loop-counting variant
// compares everything.
struct InvariantTuple {
    int n_in = 0;
    int n_out = 0;
    std::vector<int> death_index;
    std::vector<int> birth_index;
    int through_count = 0;
    std::optional<int> twist_class;
    long long bracelets = 0;
    long long loops = 0;

    bool operator==(const InvariantTuple&) const = default;
    bool equal_ignoring_loops(const InvariantTuple& o) const {
        return n_in == o.n_in && n_out == o.n_out && death_index == o.death_index &&
               birth_index == o.birth_index && through_count == o.through_count &&
               twist_class == o.twist_class && bracelets == o.bracelets;
    }
};

InvariantTuple invariants(const AffineDiagram& d);

// Caps of the diagram as (start, end) label pairs on the ingoing circle,
// ascending by start; the start is the endpoint whose clockwise interval to
// the other end bounds the disc.
std::vector<std::pair<int, int>> caps(const AffineDiagram& d);

// Cups on the outgoing circle, same convention.
std::vector<std::pair<int, int>> cups(const AffineDiagram& d);

// Through strands as (ingoing label, outgoing label) pairs, ascending.
std::vector<std::pair<int, int>> through_pairs(const AffineDiagram& d);

// The three equality semantics: cylinder (loops discarded), loop-counting
// cylinder, and the affine-diagram category where Dehn twists act freely.
enum class Category { cyl, cyla, da };

// Decides equality of the two words in the given category. Both words must
// share a signature (SignatureMismatch otherwise: distinct hom-sets are a type
// error, not inequality). Inverse twists are rewritten away except under da.
bool eq_in(Category cat, const GeneratorWord& w1, const GeneratorWord& w2);

}  // namespace cylcob
