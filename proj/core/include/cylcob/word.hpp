#pragma once

#include <initializer_list>
#include <vector>

#include "cylcob/generators.hpp"

namespace cylcob {

// A chain-typed sequence of generators in application order: gens()[0] acts on
// the ingoing circle first. Identity generators are normalized away at
// construction, so the empty word (which carries an explicit arity) is the
// unique representation of every identity.
class GeneratorWord {
public:
    static GeneratorWord identity(int arity);
    static GeneratorWord of(const Generator& g);
    static GeneratorWord of(std::initializer_list<Generator> gens);

    const std::vector<Generator>& gens() const { return gens_; }
    int n_in() const { return n_in_; }
    int n_out() const { return n_out_; }
    bool is_identity() const { return gens_.empty(); }
    Signature signature() const { return {n_in_, n_out_}; }

    // Appends one generator; throws ArityMismatch if it does not chain.
    void append(const Generator& g);

    bool operator==(const GeneratorWord&) const = default;

private:
    explicit GeneratorWord(int arity) : n_in_(arity), n_out_(arity) {
        if (arity < 0) throw OutOfRange("word arity must be non-negative");
    }

    std::vector<Generator> gens_;
    int n_in_;
    int n_out_;
};

// Sequential composition: f first, then g (mathematically g after f).
GeneratorWord then(const GeneratorWord& f, const GeneratorWord& g);

// p-fold repetition of an endomorphism generator; p = 0 gives the identity word.
GeneratorWord power(const Generator& g, long long p);

// p-fold repetition of an endomorphism word.
GeneratorWord power(const GeneratorWord& w, long long p);

// Rewrites every tw'(k) as tw(k)^{k-1} (and tw'(0) as the identity), which is
// the cylinder-level meaning of the inverse twist. Required before any
// equality query outside the affine-diagram category.
GeneratorWord eliminate_twist_inverses(const GeneratorWord& w);

}  // namespace cylcob
