#include "simcube/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace simcube {

bool Matrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {

void check_nonempty(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0 || a.data().empty())
        throw dimension_error("operation requires a nonempty matrix");
}

// One output block row of the Kronecker product; shared by both kernels so the
// parallel version is bit-identical to the serial one.
void kron_block_row(const Matrix& a, const Matrix& b, std::size_t ia, Matrix& out) {
    const std::size_t rb = b.rows(), cb = b.cols(), ca = a.cols();
    for (std::size_t ib = 0; ib < rb; ++ib) {
        double* dst = out.row(ia * rb + ib);
        const double* brow = b.row(ib);
        for (std::size_t ja = 0; ja < ca; ++ja) {
            const double aij = a(ia, ja);
            double* d = dst + ja * cb;
            for (std::size_t jb = 0; jb < cb; ++jb) d[jb] = aij * brow[jb];
        }
    }
}

// Residual of row block j: max_k |dot(col_j, col_k) - delta_jk| for k >= j.
// A'A is symmetric, so scanning the upper triangle covers every entry.
double residual_strip(const Matrix& a, std::size_t j, std::vector<double>& acc) {
    const std::size_t n = a.rows();
    acc.assign(n - j, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double aij = a(i, j);
        const double* r = a.row(i);
        double* dst = acc.data();
        for (std::size_t k = j; k < n; ++k) dst[k - j] += aij * r[k];
    }
    double worst = 0.0;
    for (std::size_t k = j; k < n; ++k) {
        const double d = std::fabs(acc[k - j] - (k == j ? 1.0 : 0.0));
        worst = std::max(worst, d);
    }
    return worst;
}

} // namespace

double max_norm(const Matrix& a) {
    check_nonempty(a);
    const std::vector<double>& v = a.data();
    const std::int64_t n = static_cast<std::int64_t>(v.size());
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t i = 0; i < n; ++i) worst = std::max(worst, std::fabs(v[i]));
    return worst;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    check_nonempty(a);
    check_nonempty(b);
    const std::size_t kMax = std::numeric_limits<std::size_t>::max();
    if (a.rows() > kMax / b.rows() || a.cols() > kMax / b.cols())
        throw dimension_error("kronecker: dimension product overflows");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    const std::int64_t ra = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t ia = 0; ia < ra; ++ia)
        kron_block_row(a, b, static_cast<std::size_t>(ia), out);
    return out;
}

double orthogonality_residual(const Matrix& a) {
    if (a.rows() != a.cols())
        throw dimension_error("orthogonality residual requires a square matrix");
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    double worst = 0.0;
#pragma omp parallel
    {
        std::vector<double> acc;
        double local = 0.0;
#pragma omp for schedule(dynamic, 4) nowait
        for (std::int64_t j = 0; j < n; ++j)
            local = std::max(local, residual_strip(a, static_cast<std::size_t>(j), acc));
#pragma omp critical
        worst = std::max(worst, local);
    }
    return worst;
}

Matrix delete_first_column(const Matrix& a) {
    if (a.cols() < 2)
        throw dimension_error("delete_first_column requires at least two columns");
    Matrix out(a.rows(), a.cols() - 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* src = a.row(i);
        std::copy(src + 1, src + a.cols(), out.row(i));
    }
    return out;
}

namespace serial {

double max_norm(const Matrix& a) {
    check_nonempty(a);
    double worst = 0.0;
    for (double v : a.data()) worst = std::max(worst, std::fabs(v));
    return worst;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    check_nonempty(a);
    check_nonempty(b);
    const std::size_t kMax = std::numeric_limits<std::size_t>::max();
    if (a.rows() > kMax / b.rows() || a.cols() > kMax / b.cols())
        throw dimension_error("kronecker: dimension product overflows");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) kron_block_row(a, b, ia, out);
    return out;
}

double orthogonality_residual(const Matrix& a) {
    if (a.rows() != a.cols())
        throw dimension_error("orthogonality residual requires a square matrix");
    std::vector<double> acc;
    double worst = 0.0;
    for (std::size_t j = 0; j < a.rows(); ++j)
        worst = std::max(worst, residual_strip(a, j, acc));
    return worst;
}

} // namespace serial

} // namespace simcube
