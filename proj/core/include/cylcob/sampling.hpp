#pragma once

#include <random>
#include <utility>

#include "cylcob/word.hpp"

namespace cylcob {

// Deterministic generator of random typed words and related pairs; every
// suite that samples goes through this so a seed pins the whole run.
class WordSampler {
public:
    WordSampler(unsigned long long seed, int max_arity, int max_length)
        : rng_(seed), max_arity_(max_arity), max_length_(max_length) {}

    std::mt19937_64& rng() { return rng_; }

    int pick(int lo, int hi);  // uniform inclusive

    // Random typed word; arities stay within max_arity, length within
    // max_length. Inverse twists are included only when asked.
    GeneratorWord random_word(bool allow_twist_inv = false);

    // Random word with the given boundary arities.
    GeneratorWord random_word_between(int n_in, int n_out, bool allow_twist_inv = false);

    // Two words with composable signatures (first.n_out == second.n_in).
    std::pair<GeneratorWord, GeneratorWord> composable_pair(bool allow_twist_inv = false);

    // A word equal to w in the cylinder category, produced by a handful of
    // random relation rewrites: commuting distant generators, sliding through
    // twists, and inserting full twists, snakes, or circle pairs (the last
    // changes the loop count but not the cylinder class).
    GeneratorWord twin_of(const GeneratorWord& w);

private:
    std::mt19937_64 rng_;
    int max_arity_;
    int max_length_;
};

}  // namespace cylcob
