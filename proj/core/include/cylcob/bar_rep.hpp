#pragma once

#include <map>
#include <mutex>

#include "cylcob/matrix.hpp"
#include "cylcob/word.hpp"

namespace cylcob {

// The standard-basis tensor model on a dim-dimensional space V: a k-marked
// circle acts on V^(tensor k), twists permute the factors cyclically to the
// right, deaths contract two adjacent factors with the standard inner product,
// births insert sum_i e_i (x) e_i. Basis indices are base-dim digit strings,
// first factor most significant.

// Left action of the generator's matrix on m, computed structurally (never by
// forming the dense generator matrix). m must have dim^source(g) rows.
Matrix apply_generator(const Generator& g, int dim, const Matrix& m);

// The dense matrix of a single generator, shape dim^target x dim^source.
Matrix gen_matrix(const Generator& g, int dim);

// Ordered product of the generator images over the word: later generators
// multiply on the left. Shape dim^n_out x dim^n_in.
Matrix word_matrix(const GeneratorWord& w, int dim);

// A fixed dimension with a cache of generator matrices.
class BarRep {
public:
    explicit BarRep(int dim) : dim_(dim) {
        if (dim < 1) throw DimTooSmall("tensor model needs a space of dimension at least 1");
    }

    int dim() const { return dim_; }
    const Matrix& matrix_for(const Generator& g) const;

private:
    int dim_;
    mutable std::mutex lock_;
    mutable std::map<Generator, Matrix> cache_;
};

}  // namespace cylcob
