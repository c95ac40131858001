#include "simcube/ohat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace simcube {

OhatMatrix::OhatMatrix(Matrix body) : body_(std::move(body)), norm_(max_norm(body_)) {
    const std::size_t n = body_.rows();
    if (n != body_.cols()) throw invariant_error("ohat body must be square");
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(body_(i, 0) - inv_sqrt_n) > kFirstColumnTol)
            throw invariant_error("ohat first column is not constant 1/sqrt(n)");
    if (norm_ < inv_sqrt_n * (1.0 - 1e-12))
        throw invariant_error("ohat max-norm below 1/sqrt(n)");
}

bool OhatMatrix::check_invariants(double* residual_out) const {
    const double res = residual();
    if (residual_out) *residual_out = res;
    return res <= kResidualTolPerDim * static_cast<double>(size());
}

OhatMatrix from_hadamard(const HadamardMatrix& h) {
    if (!verify_hadamard(h)) throw invariant_error("from_hadamard: input failed the exact check");
    const int m = h.order;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    Matrix body(m, m);
    for (int i = 0; i < m; ++i) {
        const double flip = h.at(i, 0) < 0 ? -1.0 : 1.0; // row sign so column 0 is +1
        for (int j = 0; j < m; ++j) body(i, j) = flip * h.at(i, j) * scale;
    }
    return OhatMatrix(std::move(body));
}

PhaseChoice optimal_phases(std::size_t n) {
    if (n < 2) throw dimension_error("optimal_phases: n >= 2 required");
    const double theta = (n % 4 == 0) ? std::numbers::pi / static_cast<double>(n)
                                      : std::numbers::pi / 4.0;
    return PhaseChoice((n - 1) / 2, theta);
}

double fourier_optimal_norm(std::size_t n) {
    if (n < 2) throw dimension_error("fourier_optimal_norm: n >= 2 required");
    const double c = (n % 4 == 0) ? 1.0 : (n % 4 == 2) ? 2.0 : 4.0;
    return std::sqrt(2.0 / static_cast<double>(n)) *
           std::cos(std::numbers::pi / (c * static_cast<double>(n)));
}

OhatMatrix fourier(std::size_t n, const PhaseChoice& phases) {
    if (n < 2) throw dimension_error("fourier: n >= 2 required");
    const std::size_t pairs = (n - 1) / 2;
    if (phases.size() != pairs)
        throw dimension_error("fourier: expected " + std::to_string(pairs) + " phases, got " +
                              std::to_string(phases.size()));
    for (double t : phases)
        if (!std::isfinite(t)) throw dimension_error("fourier: non-finite phase");

    const double scale = std::sqrt(2.0 / static_cast<double>(n));
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    Matrix body(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t i = r + 1; // row index in 1..n
        double* row = body.row(r);
        std::size_t col = 0;
        row[col++] = inv_sqrt_n;
        if (n % 2 == 0) row[col++] = (i % 2 == 0 ? 1.0 : -1.0) * inv_sqrt_n;
        for (std::size_t j = 1; j <= pairs; ++j) {
            // Reduce i*j mod n before forming the angle; cos/sin are 2pi-periodic
            // in (i*j)/n so this loses nothing and keeps the argument small.
            const std::uint64_t t = (static_cast<std::uint64_t>(i) * j) % n;
            const double angle =
                phases[j - 1] + 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
            row[col + (j - 1)] = scale * std::cos(angle);
            row[col + pairs + (j - 1)] = scale * std::sin(angle);
        }
    }
    return OhatMatrix(std::move(body));
}

OhatMatrix doubled(const OhatMatrix& a) {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix b2(2, 2);
    b2(0, 0) = s;
    b2(0, 1) = s;
    b2(1, 0) = s;
    b2(1, 1) = -s;
    return OhatMatrix(kronecker(b2, a.body()));
}

namespace {

// Index maps realizing "swap row 0 with `row`, swap column 1 with `col`".
inline std::size_t map_row(std::size_t i, std::size_t row) {
    if (i == 0) return row;
    if (i == row) return 0;
    return i;
}
inline std::size_t map_col(std::size_t j, std::size_t col) {
    if (j == 1) return col;
    if (j == col) return 1;
    return j;
}

struct ReduceInputs {
    double pivot = 0.0;       // a >= 0 after the sign flip
    double col_sign = 1.0;    // applied to the pivot column
    double correction = 0.0;  // 1 / (sqrt(n/(n+1)) + a)
    double ones_term = 0.0;   // 1 / sqrt(n (n+1))
};

ReduceInputs reduce_inputs(const OhatMatrix& a, std::size_t row, std::size_t col) {
    const std::size_t m = a.size();
    if (m < 3) throw dimension_error("reduce: input size must be at least 3");
    if (row >= m || col < 1 || col >= m) throw dimension_error("reduce: pivot out of range");
    ReduceInputs in;
    const double raw = a.body()(row, col);
    in.col_sign = raw < 0.0 ? -1.0 : 1.0;
    in.pivot = in.col_sign * raw;
    const double n = static_cast<double>(m - 1);
    in.correction = 1.0 / (std::sqrt(n / (n + 1.0)) + in.pivot);
    in.ones_term = 1.0 / std::sqrt(n * (n + 1.0));
    return in;
}

// Shared evaluation of the output body's trailing block. Row r (0-based in the
// output, r = 0..m-2) corresponds to source row map_row(r+1); column c
// (c = 1..m-2) corresponds to source column map_col(c+1).
template <typename Sink>
void reduce_eval(const OhatMatrix& a, std::size_t row, std::size_t col, const ReduceInputs& in,
                 Sink&& sink) {
    const Matrix& b = a.body();
    const std::size_t m = a.size();
    for (std::size_t r = 0; r + 1 < m; ++r) {
        const std::size_t sr = map_row(r + 1, row);
        const double v = in.col_sign * b(sr, col); // pivot-column entry of this row
        const double w = in.correction * (-v + in.ones_term);
        for (std::size_t c = 1; c + 1 < m; ++c) {
            const std::size_t sc = map_col(c + 1, col);
            const double u = b(row, sc); // top-row entry of this column
            sink(r, c, b(sr, sc) + w * u);
        }
    }
}

} // namespace

namespace detail {

double reduced_norm(const OhatMatrix& a, std::size_t row, std::size_t col) {
    const ReduceInputs in = reduce_inputs(a, row, col);
    const std::size_t n = a.size() - 1;
    double worst = 1.0 / std::sqrt(static_cast<double>(n));
    reduce_eval(a, row, col, in, [&](std::size_t, std::size_t, double y) {
        worst = std::max(worst, std::fabs(y));
    });
    return worst;
}

OhatMatrix reduce_unchecked(const OhatMatrix& a, std::size_t row, std::size_t col) {
    const ReduceInputs in = reduce_inputs(a, row, col);
    const std::size_t n = a.size() - 1;
    Matrix body(n, n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t r = 0; r < n; ++r) body(r, 0) = inv_sqrt_n;
    reduce_eval(a, row, col, in,
                [&](std::size_t r, std::size_t c, double y) { body(r, c) = y; });
    return OhatMatrix{std::move(body)};
}

ReduceChoice select_pivot(const OhatMatrix& a, PivotMode mode) {
    const std::size_t m = a.size();
    if (m < 3) throw dimension_error("reduce_best: input size must be at least 3");
    ReduceChoice best;
    if (mode == PivotMode::heuristic) {
        // Largest pivot magnitude shrinks the correction term fastest.
        double top = -1.0;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 1; c < m; ++c) {
                const double v = std::fabs(a.body()(r, c));
                if (v > top) {
                    top = v;
                    best.row = r;
                    best.col = c;
                }
            }
        best.norm = reduced_norm(a, best.row, best.col);
        return best;
    }
    best.norm = std::numeric_limits<double>::infinity();
    best.row = m;
    best.col = m;
    const std::int64_t total = static_cast<std::int64_t>(m) * static_cast<std::int64_t>(m - 1);
#pragma omp parallel
    {
        ReduceChoice local;
        local.norm = std::numeric_limits<double>::infinity();
        local.row = m;
        local.col = m;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            const std::size_t r = static_cast<std::size_t>(idx) / (m - 1);
            const std::size_t c = 1 + static_cast<std::size_t>(idx) % (m - 1);
            const double norm = reduced_norm(a, r, c);
            if (norm < local.norm ||
                (norm == local.norm && (r < local.row || (r == local.row && c < local.col)))) {
                local.norm = norm;
                local.row = r;
                local.col = c;
            }
        }
#pragma omp critical
        {
            if (local.norm < best.norm ||
                (local.norm == best.norm &&
                 (local.row < best.row || (local.row == best.row && local.col < best.col)))) {
                best = local;
            }
        }
    }
    return best;
}

OhatMatrix reduce_best_unchecked(const OhatMatrix& a, PivotMode mode, ReduceChoice* chosen) {
    const ReduceChoice best = select_pivot(a, mode);
    if (chosen) *chosen = best;
    return reduce_unchecked(a, best.row, best.col);
}

} // namespace detail

OhatMatrix reduce(const OhatMatrix& a, std::size_t row, std::size_t col) {
    OhatMatrix out = detail::reduce_unchecked(a, row, col);
    const std::size_t n = out.size();
    const double res = out.residual();
    if (res > OhatMatrix::kResidualTolPerDim * static_cast<double>(n))
        throw numerical_error("reduce: output residual " + std::to_string(res) +
                              " above tolerance");
    return out;
}

OhatMatrix reduce_best(const OhatMatrix& a, PivotMode mode, ReduceChoice* chosen) {
    const ReduceChoice best = detail::select_pivot(a, mode);
    if (chosen) *chosen = best;
    return reduce(a, best.row, best.col);
}

OhatMatrix random_ohat(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw dimension_error("random_ohat: n >= 2 required");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix body(n, n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) body(i, 0) = inv_sqrt_n;
    for (std::size_t j = 1; j < n; ++j) {
        while (true) {
            for (std::size_t i = 0; i < n; ++i) body(i, j) = gauss(rng);
            // Two orthogonalization passes keep the residual near machine level.
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < j; ++k) {
                    double dot = 0.0;
                    for (std::size_t i = 0; i < n; ++i) dot += body(i, j) * body(i, k);
                    for (std::size_t i = 0; i < n; ++i) body(i, j) -= dot * body(i, k);
                }
            }
            double len = 0.0;
            for (std::size_t i = 0; i < n; ++i) len += body(i, j) * body(i, j);
            len = std::sqrt(len);
            if (len > 1e-8) {
                for (std::size_t i = 0; i < n; ++i) body(i, j) /= len;
                break;
            }
        }
    }
    OhatMatrix out{std::move(body)};
    const double res = out.residual();
    if (res > OhatMatrix::kResidualTolPerDim * static_cast<double>(n))
        throw numerical_error("random_ohat: orthonormalization residual above tolerance");
    return out;
}

} // namespace simcube
