#pragma once

#include <cstddef>
#include <vector>

#include "simcube/errors.hpp"

namespace simcube {

/// Dense real matrix, row-major. The universal carrier for every construction.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
        if (rows == 0 || cols == 0)
            throw dimension_error("matrix dimensions must be positive");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    const std::vector<double>& data() const { return data_; }

    bool all_finite() const;

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

/// Largest absolute entry.
double max_norm(const Matrix& a);

/// Standard Kronecker product: entry (i*rB+k, j*cB+l) = a(i,j)*b(k,l).
Matrix kronecker(const Matrix& a, const Matrix& b);

/// max-norm of A'A - I. Zero means exactly orthogonal. Square input only.
double orthogonality_residual(const Matrix& a);

/// Drop column 0; requires at least two columns.
Matrix delete_first_column(const Matrix& a);

// Serial reference kernels. Kept alongside the parallel versions so the tests
// can assert bit-identical results and the benchmark can compare them.
namespace serial {
double max_norm(const Matrix& a);
Matrix kronecker(const Matrix& a, const Matrix& b);
double orthogonality_residual(const Matrix& a);
} // namespace serial

} // namespace simcube
