#include "corospec/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace corospec {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= rhs.data_[i];
    return out;
}

Matrix Matrix::scaled(double s) const {
    Matrix out = *this;
    for (size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] *= s;
    return out;
}

SymmetricMatrix SymmetricMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("symmetric matrix must be square");
    SymmetricMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!std::isfinite(m(i, j)))
                throw std::invalid_argument("symmetric matrix entries must be finite");
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("matrix is not symmetric");
            s.m_(i, j) = m(i, j);
        }
    return s;
}

void SymmetricMatrix::set(int i, int j, double v) {
    if (!std::isfinite(v))
        throw std::invalid_argument("symmetric matrix entries must be finite");
    m_(i, j) = v;
    m_(j, i) = v;
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < order(); ++i)
        for (int j = 0; j < order(); ++j)
            m = std::max(m, std::fabs(m_(i, j)));
    return m;
}

} // namespace corospec
