#pragma once

#include <cstdint>
#include <vector>

#include "simcube/hadamard.hpp"
#include "simcube/matrix.hpp"

namespace simcube {

/// One phase angle (radians) per frequency column pair, length floor((n-1)/2).
using PhaseChoice = std::vector<double>;

enum class PivotMode { heuristic, exhaustive };

class OhatMatrix;

namespace detail {
OhatMatrix reduce_unchecked(const OhatMatrix& a, std::size_t row, std::size_t col);
} // namespace detail

/// n x n real orthogonal matrix whose first column is (1/sqrt(n)) * ones.
/// Deleting that column leaves rows that are the vertices of a regular
/// (n-1)-simplex of edge sqrt(2) centered at the origin, so minimizing the
/// max-norm of the body maximizes the simplex inscribed in the unit cube.
///
/// Invariants: orthogonality residual <= 1e-10 * n, constant first column
/// within 1e-12, and max-norm >= 1/sqrt(n). The cheap checks run on every
/// construction; the O(n^3) residual is enforced on the numerically risky
/// paths (reduction, random sampling) and exposed via check_invariants() for
/// the structurally orthogonal ones.
class OhatMatrix {
public:
    std::size_t size() const { return body_.rows(); }
    const Matrix& body() const { return body_; }
    double norm() const { return norm_; }

    static constexpr double kResidualTolPerDim = 1e-10;
    static constexpr double kFirstColumnTol = 1e-12;

    /// Recompute the orthogonality residual from scratch.
    double residual() const { return orthogonality_residual(body_); }

    /// Full invariant check; optionally reports the residual.
    bool check_invariants(double* residual_out = nullptr) const;

private:
    explicit OhatMatrix(Matrix body);
    Matrix body_;
    double norm_;

    friend OhatMatrix from_hadamard(const HadamardMatrix&);
    friend OhatMatrix fourier(std::size_t, const PhaseChoice&);
    friend OhatMatrix doubled(const OhatMatrix&);
    friend OhatMatrix random_ohat(std::size_t, std::uint64_t);
    friend OhatMatrix detail::reduce_unchecked(const OhatMatrix&, std::size_t, std::size_t);
};

/// Negate rows so column 0 is all +1, then scale by 1/sqrt(m).
/// The result has max-norm exactly 1/sqrt(m), the smallest possible.
OhatMatrix from_hadamard(const HadamardMatrix& h);

/// Trigonometric construction, orthogonal for arbitrary phases:
///   even n:  sqrt(2/n) [ 1/sqrt(2) ones | 1/sqrt(2) v | C | S ]
///   odd  n:  sqrt(2/n) [ 1/sqrt(2) ones | C | S ]
/// with c_ij = cos(theta_j + 2 i j pi / n), s_ij likewise with sin,
/// v_i = (-1)^i, rows i = 1..n. Max-norm is at most sqrt(2/n).
OhatMatrix fourier(std::size_t n, const PhaseChoice& phases);

/// The uniform phase minimizing the fourier max-norm:
/// pi/n when n = 0 (mod 4), pi/4 otherwise.
PhaseChoice optimal_phases(std::size_t n);

/// Max-norm achieved by fourier(n, optimal_phases(n)), in closed form:
/// sqrt(2/n) * cos(pi/(c*n)) with c = 1, 2, 4 for n = 0, 2 (mod 4), odd.
double fourier_optimal_norm(std::size_t n);

/// B2 (x) A: doubles the size and divides the max-norm by exactly sqrt(2).
OhatMatrix doubled(const OhatMatrix& a);

/// Delete one row and one column of an (n+1) x (n+1) member, producing an
/// n x n member. The chosen row is moved to the top and the chosen column to
/// position 1, the column sign is flipped so the pivot a >= 0, and with first
/// row (1/sqrt(n+1), a, u) over lower block (v, X) the output body is
///   [ (1/sqrt(n)) ones | X + (sqrt(n/(n+1)) + a)^-1 (-v + ones/sqrt(n(n+1))) u ].
/// The inverse norm drops by strictly less than 1 per application.
OhatMatrix reduce(const OhatMatrix& a, std::size_t row, std::size_t col);

struct ReduceChoice {
    std::size_t row = 0, col = 1;
    double norm = 0.0;
};

/// Reduce at the best pivot. Heuristic: largest |entry| over columns >= 1
/// (ties: smallest row, then column). Exhaustive: scan every pivot for the
/// smallest resulting norm (ties lexicographic); pivots are scored in
/// parallel but the tie-break makes the result schedule-independent.
OhatMatrix reduce_best(const OhatMatrix& a, PivotMode mode, ReduceChoice* chosen = nullptr);

/// Seeded sampler: fixed first column completed with standard-normal columns,
/// orthonormalized in column order. For property tests.
OhatMatrix random_ohat(std::size_t n, std::uint64_t seed);

namespace detail {
// reduce_unchecked (declared above) is reduce() minus the output residual
// check; arithmetic is identical, so a later checked replay reproduces the
// same matrix bit for bit. The planner uses these to score candidate chains
// cheaply and re-checks only the winning chain.

/// Norm the reduction at (row, col) would achieve, without materializing or
/// residual-checking the result. Bit-identical to reduce()'s norm.
double reduced_norm(const OhatMatrix& a, std::size_t row, std::size_t col);

OhatMatrix reduce_best_unchecked(const OhatMatrix& a, PivotMode mode,
                                 ReduceChoice* chosen = nullptr);

/// Pivot selection shared by the checked and unchecked variants.
ReduceChoice select_pivot(const OhatMatrix& a, PivotMode mode);
} // namespace detail

} // namespace simcube
