#include "cylcob/matrix.hpp"

namespace cylcob {

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw ShapeMismatch("cannot multiply " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " by " + std::to_string(o.rows_) + "x" +
                            std::to_string(o.cols_));
    Matrix out(rows_, o.cols_);
    Rational term;
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b == 0) continue;
                term = a * b;
                out.at(i, j) += term;
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ in sum");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

std::string rational_str(const Rational& r) {
    return r.get_str();  // canonical p/q, or p when the denominator is 1
}

}  // namespace cylcob
