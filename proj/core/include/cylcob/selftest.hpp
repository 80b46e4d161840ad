#pragma once

#include <string>
#include <vector>

#include "cylcob/sampling.hpp"

namespace cylcob {

// One property suite's outcome; `detail` describes the first failure.
struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string detail;
    bool ok() const { return failures == 0; }
};

// Every defining relation instance with k <= max_k holds in the cylinder
// category, and in the loop-counting category up to the stated loop gain.
SuiteResult relation_suite(int max_k);

// Seeded random words: reassembled normal forms reproduce all invariants
// including the loop count, normalization is idempotent, and canonical forms
// decide equality on twin and independent pairs.
SuiteResult normal_form_suite(int samples, int pairs, unsigned long long seed, int max_arity,
                              int max_length);

// Relation instances map to equal matrices (the circle relation to dim times
// the identity) for dims 1..3, sizes bounded by max_entries per matrix; full
// twists act as the identity for arities <= 6.
SuiteResult matrix_relation_suite(int max_k, long long max_entries);

// word_matrix is a homomorphism on random composable pairs at dims 1..3.
SuiteResult matrix_homomorphism_suite(int pairs, unsigned long long seed);

// Loop bookkeeping: the two arity-0 compositions are told apart, and no
// random-word evaluation ever produces a winding outside {-1, 0, 1}.
SuiteResult loop_discrimination_suite(int samples, unsigned long long seed);

// da equality implies loop-counting equality implies cylinder equality on
// random pairs, and the standard witnesses keep both steps strict.
SuiteResult category_tower_suite(int pairs, unsigned long long seed);

// Rotation-category and square-root relations land on equal cylinder words;
// doubled simplicial identities have equal monotone semantics; annular
// relation instances agree with matching loop tallies.
SuiteResult cyclic_embedding_suite(int max_n);

// tl_compose exponents match the loop increments of diagram composition, and
// tl_evaluate at delta = dim agrees with word_matrix.
SuiteResult tl_suite(int pairs, unsigned long long seed);

// parse after print is the identity on random words; canonical printing is
// stable.
SuiteResult parser_roundtrip_suite(int samples, unsigned long long seed);

// All of the above with the CLI's default parameters.
std::vector<SuiteResult> run_all_suites(int max_arity, int samples, unsigned long long seed);

}  // namespace cylcob
