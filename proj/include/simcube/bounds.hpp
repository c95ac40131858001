#pragma once

#include <cstddef>
#include <optional>

#include "simcube/hadamard.hpp"

namespace simcube {
namespace bounds {

/// Largest possible edge of a centered regular n-simplex in the unit cube:
/// sqrt((n+1)/2). Attained exactly when a Hadamard matrix of order n+1 exists.
double upper_bound(std::size_t n);

/// sqrt(n+1)/2, from the trigonometric construction with any phases.
double fourier_basic(std::size_t n);

/// The optimal-phase value, with m = n+1:
///   sqrt(m)/(2 cos(pi/m))   m = 0 (mod 4)
///   sqrt(m)/(2 cos(pi/2m))  m = 2 (mod 4)
///   sqrt(m)/(2 cos(pi/4m))  m odd
double fourier_refined(std::size_t n);

std::pair<double, double> fourier_bounds(std::size_t n); // (basic, refined)

/// (sqrt(n+k) - k + 1)/sqrt(2), valid when a Hadamard matrix of order n+k is
/// available; equality holds only at k = 1. Throws unsupported_order_error if
/// the registry has no recipe for order n+k.
double hadamard_gap_bound(std::size_t n, std::size_t k, const OrderRegistry& registry);

/// Same formula without an availability check (order existence assumed).
double hadamard_gap_formula(std::size_t n, std::size_t k);

struct ChainBound {
    double value = 0.0;        // (c - (1+sqrt(2))/sqrt(N)) * sqrt(n/2)
    double intermediate = 0.0; // c*sqrt(n/2) - (sqrt(2)^k - 1)/(2 - sqrt(2))
    int k = 0;                 // 2^k N <= n <= 2^(k+1) N - 1
};

/// Doubling-chain propagation of a ratio premise held on [N, 2N-1] to all
/// n >= N. The intermediate value is strictly tighter for every finite n.
ChainBound chain_bound(std::size_t n, std::size_t N, double c);

/// Seed interval start and coefficient used for the headline guarantee:
/// N = 332, c = (sqrt(336) - 3)/sqrt(332).
std::size_t chain_seed_start();
double chain_seed_coefficient();

/// The guaranteed edge-ratio floor (sqrt(336) - 4 - sqrt(2))/sqrt(664) = 0.5012...
double ratio_floor();

struct RatioGuarantee {
    double floor_constant = 0.0;
    double satisfied_by = 0.0; // best closed-form ratio bound valid at this n
};

/// Best proven lower bound on edge/sqrt(n) at dimension n, always strictly
/// above ratio_floor(): the max of sqrt(n+1)/(2 sqrt(n)), the gap bound
/// (sqrt(n+4)-3)/sqrt(2n) for n <= 663 (orders through 664 all exist), and the
/// chain intermediate for n >= 332.
RatioGuarantee ratio_guarantee(std::size_t n);

struct BoundReport {
    std::size_t n = 0;
    double upper = 0.0;
    double fourier_basic = 0.0;
    double fourier_refined = 0.0;
    std::optional<int> hadamard_k;       // smallest k >= 1 with n+k covered
    std::optional<double> hadamard_gap;
    std::optional<double> chain;         // present for n >= chain_seed_start()
    std::optional<double> chain_intermediate;
    double ratio_floor_times_sqrt_n = 0.0;
    double best_lower = 0.0;             // max of the lower bounds present
};

BoundReport bound_report(std::size_t n, const OrderRegistry& registry);

} // namespace bounds
} // namespace simcube
