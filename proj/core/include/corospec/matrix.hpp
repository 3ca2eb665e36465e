#pragma once

#include <cstddef>
#include <vector>

namespace corospec {

// Dense real matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0.0) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(double s) const;

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Square matrix constrained to stay symmetric with finite entries.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order) : m_(order, order) {}

    // Validates squareness, symmetry and finiteness.
    static SymmetricMatrix from_matrix(const Matrix& m);

    int order() const { return m_.rows(); }
    double at(int i, int j) const { return m_(i, j); }
    void set(int i, int j, double v); // writes (i,j) and (j,i)

    const Matrix& as_matrix() const { return m_; }

    double max_abs() const;

private:
    Matrix m_;
};

} // namespace corospec
