#include "simcube/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace simcube {
namespace bounds {

namespace {

void require_positive(std::size_t n) {
    if (n < 1) throw dimension_error("dimension must be positive");
}

constexpr std::size_t kLargestReachableDim = 663; // orders 4m <= 664 all constructible

} // namespace

double upper_bound(std::size_t n) {
    require_positive(n);
    return std::sqrt(static_cast<double>(n) + 1.0) / std::sqrt(2.0);
}

double fourier_basic(std::size_t n) {
    require_positive(n);
    return std::sqrt(static_cast<double>(n) + 1.0) / 2.0;
}

double fourier_refined(std::size_t n) {
    require_positive(n);
    const double m = static_cast<double>(n) + 1.0;
    const double c = (static_cast<std::size_t>(n + 1) % 4 == 0) ? 1.0
                     : (static_cast<std::size_t>(n + 1) % 4 == 2) ? 2.0
                                                                  : 4.0;
    return std::sqrt(m) / (2.0 * std::cos(std::numbers::pi / (c * m)));
}

std::pair<double, double> fourier_bounds(std::size_t n) {
    return {fourier_basic(n), fourier_refined(n)};
}

double hadamard_gap_formula(std::size_t n, std::size_t k) {
    require_positive(n);
    if (k < 1) throw dimension_error("gap bound requires k >= 1");
    const double kk = static_cast<double>(k);
    // Written as sqrt(n+k) + (1-k) so the k = 1 case is bit-identical to
    // upper_bound(n).
    return (std::sqrt(static_cast<double>(n) + kk) + (1.0 - kk)) / std::sqrt(2.0);
}

double hadamard_gap_bound(std::size_t n, std::size_t k, const OrderRegistry& registry) {
    require_positive(n);
    if (k < 1) throw dimension_error("gap bound requires k >= 1");
    if (!registry.covered(static_cast<int>(n + k)))
        throw unsupported_order_error("no Hadamard matrix of order " + std::to_string(n + k) +
                                      " in the registry");
    return hadamard_gap_formula(n, k);
}

ChainBound chain_bound(std::size_t n, std::size_t N, double c) {
    if (N < 1) throw dimension_error("chain bound requires N >= 1");
    if (n < N) throw dimension_error("chain bound requires n >= N");
    ChainBound out;
    const double nn = static_cast<double>(n);
    out.value = (c - (1.0 + std::sqrt(2.0)) / std::sqrt(static_cast<double>(N))) *
                std::sqrt(nn / 2.0);
    int k = 0;
    // 2^k N <= n <= 2^(k+1) N - 1
    for (std::size_t lo = N; 2 * lo <= n; lo *= 2) ++k;
    out.k = k;
    const double pow2k = std::pow(std::sqrt(2.0), static_cast<double>(k));
    out.intermediate = c * std::sqrt(nn / 2.0) - (pow2k - 1.0) / (2.0 - std::sqrt(2.0));
    return out;
}

std::size_t chain_seed_start() { return 332; }

double chain_seed_coefficient() { return (std::sqrt(336.0) - 3.0) / std::sqrt(332.0); }

double ratio_floor() {
    return (std::sqrt(336.0) - 4.0 - std::sqrt(2.0)) / std::sqrt(664.0);
}

RatioGuarantee ratio_guarantee(std::size_t n) {
    require_positive(n);
    RatioGuarantee out;
    out.floor_constant = ratio_floor();
    const double nn = static_cast<double>(n);
    double best = fourier_basic(n) / std::sqrt(nn); // sqrt(n+1)/(2 sqrt(n))
    if (n <= kLargestReachableDim)
        best = std::max(best, (std::sqrt(nn + 4.0) - 3.0) / std::sqrt(2.0 * nn));
    if (n >= chain_seed_start()) {
        const ChainBound ch = chain_bound(n, chain_seed_start(), chain_seed_coefficient());
        best = std::max(best, ch.intermediate / std::sqrt(nn));
    }
    out.satisfied_by = best;
    return out;
}

BoundReport bound_report(std::size_t n, const OrderRegistry& registry) {
    require_positive(n);
    BoundReport r;
    r.n = n;
    r.upper = upper_bound(n);
    r.fourier_basic = fourier_basic(n);
    r.fourier_refined = fourier_refined(n);
    for (std::size_t k = 1; static_cast<int>(n + k) <= registry.limit(); ++k) {
        if (registry.covered(static_cast<int>(n + k))) {
            r.hadamard_k = static_cast<int>(k);
            r.hadamard_gap = hadamard_gap_formula(n, k);
            break;
        }
    }
    if (n >= chain_seed_start()) {
        const ChainBound ch = chain_bound(n, chain_seed_start(), chain_seed_coefficient());
        r.chain = ch.value;
        r.chain_intermediate = ch.intermediate;
    }
    r.ratio_floor_times_sqrt_n = ratio_floor() * std::sqrt(static_cast<double>(n));
    r.best_lower = std::max(r.fourier_basic, r.fourier_refined);
    if (r.hadamard_gap) r.best_lower = std::max(r.best_lower, *r.hadamard_gap);
    if (r.chain) r.best_lower = std::max(r.best_lower, *r.chain);
    return r;
}

} // namespace bounds
} // namespace simcube
