#pragma once

#include <vector>

#include "cylcob/matrix.hpp"
#include "cylcob/word.hpp"

namespace cylcob {

// Words in the simplex-category generators, opposite orientation: objects are
// levels [n], Face(n,i): [n] -> [n-1] (n >= 1, 0 <= i <= n) and
// Degen(n,j): [n] -> [n+1] (0 <= j <= n), in application order.
struct SimplicialGen {
    enum class Kind { face, degen } kind;
    int level;
    int index;
    auto operator<=>(const SimplicialGen&) const = default;
};

class SimplicialWord {
public:
    static SimplicialWord identity(int level);
    void append_face(int level, int index);
    void append_degen(int level, int index);

    const std::vector<SimplicialGen>& gens() const { return gens_; }
    int n_in() const { return n_in_; }
    int n_out() const { return n_out_; }
    bool operator==(const SimplicialWord&) const = default;

private:
    std::vector<SimplicialGen> gens_;
    int n_in_ = 0;
    int n_out_ = 0;
};

// Simplicial generators plus the rotation Cyc(n): [n] -> [n] of order n+1.
struct CyclicGen {
    enum class Kind { face, degen, cyc } kind;
    int level;
    int index;
    auto operator<=>(const CyclicGen&) const = default;
};

class CyclicWord {
public:
    static CyclicWord identity(int level);
    void append_face(int level, int index);
    void append_degen(int level, int index);
    void append_cyc(int level);

    const std::vector<CyclicGen>& gens() const { return gens_; }
    int n_in() const { return n_in_; }
    int n_out() const { return n_out_; }
    bool operator==(const CyclicWord&) const = default;

private:
    std::vector<CyclicGen> gens_;
    int n_in_ = 0;
    int n_out_ = 0;
};

// Simplicial generators plus a square root SqrtCyc(n) of the rotation,
// of order 2(n+1).
struct SqrtCyclicGen {
    enum class Kind { face, degen, sqrt_cyc } kind;
    int level;
    int index;
    auto operator<=>(const SqrtCyclicGen&) const = default;
};

class SqrtCyclicWord {
public:
    static SqrtCyclicWord identity(int level);
    void append_face(int level, int index);
    void append_degen(int level, int index);
    void append_sqrt_cyc(int level);

    const std::vector<SqrtCyclicGen>& gens() const { return gens_; }
    int n_in() const { return n_in_; }
    int n_out() const { return n_out_; }
    bool operator==(const SqrtCyclicWord&) const = default;

private:
    std::vector<SqrtCyclicGen> gens_;
    int n_in_ = 0;
    int n_out_ = 0;
};

// Annular tangle words at the generator level. Objects are [n] (a circle with
// 2n marked points) plus the two 0-point objects [0+], [0-]; the translation
// into cylinder words is shading-blind, so typing tracks the integer level
// only. Indices are 1-based per the usual annular presentation:
//   Cap(n,i):  [n] -> [n-1], 1 <= i <= n
//   Cup(n,i):  [n] -> [n+1], 1 <= i <= n+1
//   Rot(n):    [n] -> [n],   n >= 1 (the shading-preserving double rotation)
//   LoopId(n, unshaded, shaded): marked identity on [n]
struct AtlGen {
    enum class Kind { cap, cup, rot, loop_id } kind;
    int level;
    int index;
    long long unshaded = 0;
    long long shaded = 0;
    auto operator<=>(const AtlGen&) const = default;
};

class AtlWord {
public:
    static AtlWord identity(int level);
    void append_cap(int level, int index);
    void append_cup(int level, int index);
    void append_rot(int level);
    void append_loop_id(int level, long long unshaded, long long shaded);

    const std::vector<AtlGen>& gens() const { return gens_; }
    int n_in() const { return n_in_; }
    int n_out() const { return n_out_; }
    bool operator==(const AtlWord&) const = default;

private:
    std::vector<AtlGen> gens_;
    int n_in_ = 0;
    int n_out_ = 0;
};

// A weakly increasing map between finite ordinals, the classical semantics of
// a simplicial word read contravariantly; the equality oracle for simplicial
// identities.
struct MonotoneMap {
    int domain_points;    // m+1 values
    int codomain_points;  // values in 0..n
    std::vector<int> table;

    static MonotoneMap identity(int points);
    bool operator==(const MonotoneMap&) const = default;
    std::string str() const;
};

// The monotone map [m] -> [n] classifying a simplicial word [n] -> [m]:
// faces become the cofaces that skip their index, degeneracies the
// codegeneracies that repeat theirs.
MonotoneMap monotone_semantics(const SimplicialWord& w);

// Cyclic words land on even circles: level n on the 2(n+1)-marked circle,
// faces as even-slot deaths, degeneracies as odd-slot births, the rotation as
// the double twist.
GeneratorWord lambda_to_cyl(const CyclicWord& w);

// Same face/degeneracy assignment; the square-root rotation is the single
// twist, which has exactly the required order 2(n+1) on the 2n+2 circle.
GeneratorWord sqrtlambda_to_cyl(const SqrtCyclicWord& w);

// The doubling endofunctor: level n maps to level 2n+1 (two interleaved
// copies), a face removes the point in each copy, a degeneracy repeats it in
// each copy.
SimplicialWord delta_double(const SimplicialWord& w);

// Doubling of a cyclic word: the rotation factors through the square root,
// Cyc(n) becoming SqrtCyc(2n+1) twice.
SqrtCyclicWord delta_double(const CyclicWord& w);

// Translated cylinder word plus the contractible-loop tally contributed by
// the marked identities along the way.
struct AtlImage {
    GeneratorWord word;
    long long loop_tally = 0;
};

AtlImage atl_to_cyla(const AtlWord& w);

// Candidate structure maps extending a square-root cyclic object over the
// 0-marked circle: images of the two deaths from the 2-circle, the two births
// into it, and the twist on it.
struct Cyl0ExtensionData {
    Matrix death0;
    Matrix death1;
    Matrix birth0;
    Matrix birth1;
    Matrix twist;
};

struct Cyl0ExtensionCheck {
    bool retraction0 = false;  // death0 * birth0 is the identity
    bool retraction1 = false;  // death1 * birth1 is the identity
    bool twist_death = false;  // death0 * twist equals death1
    bool twist_birth = false;  // twist * birth0 equals birth1
    bool all() const { return retraction0 && retraction1 && twist_death && twist_birth; }
};

Cyl0ExtensionCheck check_cyl0_extension_detail(const Cyl0ExtensionData& data);

inline bool check_cyl0_extension(const Cyl0ExtensionData& data) {
    return check_cyl0_extension_detail(data).all();
}

}  // namespace cylcob
