#include "cylcob/bar_rep.hpp"

namespace cylcob {

namespace {

long long int_pow(int base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out > (1LL << 28))
            throw Error("tensor space too large: " + std::to_string(base) + "^" +
                        std::to_string(exp));
    }
    return out;
}

// Right cyclic rotation of the k tensor factors: out row (x_{k-1}, x_0, ..)
// is in row (x_0, .., x_{k-1}); as a left action, out[r] = in[unrotate(r)].
Matrix rotate_rows(const Matrix& m, int dim, int k) {
    if (k <= 1) return m;
    const long long rows = m.rows();
    const long long high = rows / dim;  // dim^{k-1}
    Matrix out(m.rows(), m.cols());
    for (long long r = 0; r < rows; ++r) {
        // r = (y_0, y_1..y_{k-1}); preimage = (y_1..y_{k-1}, y_0)
        const long long lead = r / high;
        const long long rest = r % high;
        const long long pre = rest * dim + lead;
        for (int c = 0; c < m.cols(); ++c) out.at(static_cast<int>(r), c) = m.at(static_cast<int>(pre), c);
    }
    return out;
}

Matrix unrotate_rows(const Matrix& m, int dim, int k) {
    if (k <= 1) return m;
    const long long rows = m.rows();
    const long long high = rows / dim;
    Matrix out(m.rows(), m.cols());
    for (long long r = 0; r < rows; ++r) {
        const long long lead = r / high;
        const long long rest = r % high;
        const long long pre = rest * dim + lead;
        for (int c = 0; c < m.cols(); ++c) out.at(static_cast<int>(pre), c) = m.at(static_cast<int>(r), c);
    }
    return out;
}

// Contract factors (slot, slot+1) of k factors with the standard pairing.
Matrix contract_rows(const Matrix& m, int dim, int k, int slot) {
    const long long low = int_pow(dim, k - slot - 2);   // factors after the pair
    const long long rows_out = m.rows() / (static_cast<long long>(dim) * dim);
    Matrix out(static_cast<int>(rows_out), m.cols());
    for (long long r = 0; r < rows_out; ++r) {
        const long long head = r / low;
        const long long tail = r % low;
        for (int v = 0; v < dim; ++v) {
            const long long src = ((head * dim + v) * dim + v) * low + tail;
            for (int c = 0; c < m.cols(); ++c)
                out.at(static_cast<int>(r), c) += m.at(static_cast<int>(src), c);
        }
    }
    return out;
}

// Insert sum_v e_v (x) e_v at slot of k factors.
Matrix insert_rows(const Matrix& m, int dim, int k, int slot) {
    const long long low = int_pow(dim, k - slot);  // factors after the insertion point
    const long long rows_out = m.rows() * static_cast<long long>(dim) * dim;
    Matrix out(static_cast<int>(rows_out), m.cols());
    for (long long r = 0; r < m.rows(); ++r) {
        const long long head = r / low;
        const long long tail = r % low;
        for (int v = 0; v < dim; ++v) {
            const long long dst = ((head * dim + v) * dim + v) * low + tail;
            for (int c = 0; c < m.cols(); ++c)
                out.at(static_cast<int>(dst), c) = m.at(static_cast<int>(r), c);
        }
    }
    return out;
}

}  // namespace

Matrix apply_generator(const Generator& g, int dim, const Matrix& m) {
    if (dim < 1) throw DimTooSmall("tensor model needs a space of dimension at least 1");
    const int k = g.arity();
    if (m.rows() != int_pow(dim, k))
        throw ShapeMismatch("matrix has " + std::to_string(m.rows()) + " rows, generator " +
                            g.str() + " needs " + std::to_string(int_pow(dim, k)));
    switch (g.kind()) {
        case GenKind::id:
            return m;
        case GenKind::twist:
            return rotate_rows(m, dim, k);
        case GenKind::twist_inv:
            return unrotate_rows(m, dim, k);
        case GenKind::death:
            if (g.slot() <= k - 2) return contract_rows(m, dim, k, g.slot());
            // wrap death: twist twice, then contract right after the leading
            // factor; at k = 2 the double twist is the identity and the
            // contraction is the plain pairing.
            if (k == 2) return contract_rows(m, dim, 2, 0);
            return contract_rows(rotate_rows(rotate_rows(m, dim, k), dim, k), dim, k, 1);
        case GenKind::birth:
            if (g.slot() <= k) return insert_rows(m, dim, k, g.slot());
            // wrap birth: untwist, insert at the end, twist; the conjugating
            // untwist keeps the twist-slide relation exact at the top slot,
            // mirroring the double twist in the wrap death.
            return rotate_rows(insert_rows(unrotate_rows(m, dim, k), dim, k, k), dim, k + 2);
    }
    throw Error("unreachable generator kind");
}

Matrix gen_matrix(const Generator& g, int dim) {
    return apply_generator(g, dim, Matrix::identity(static_cast<int>(int_pow(dim, g.arity()))));
}

Matrix word_matrix(const GeneratorWord& w, int dim) {
    if (dim < 1) throw DimTooSmall("tensor model needs a space of dimension at least 1");
    Matrix m = Matrix::identity(static_cast<int>(int_pow(dim, w.n_in())));
    for (const Generator& g : w.gens()) m = apply_generator(g, dim, m);
    return m;
}

const Matrix& BarRep::matrix_for(const Generator& g) const {
    std::lock_guard<std::mutex> guard(lock_);
    auto it = cache_.find(g);
    if (it == cache_.end()) it = cache_.emplace(g, gen_matrix(g, dim_)).first;
    return it->second;
}

}  // namespace cylcob
