#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cylcob/errors.hpp"

namespace cylcob {

using Rational = mpq_class;

// Dense row-major matrix over exact rationals. Sized for desk-scale tensor
// arithmetic; no sparsity.
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }
    const Rational& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

// "p/q" for proper fractions, plain "p" for integers.
std::string rational_str(const Rational& r);

}  // namespace cylcob
