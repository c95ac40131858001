// Timing comparison of the OpenMP kernels against their serial reference
// implementations. The parallel versions must also produce identical values,
// which is asserted here on every run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "simcube/matrix.hpp"
#include "simcube/ohat.hpp"
#include "simcube/simplex.hpp"

using namespace simcube;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = u(rng);
    return m;
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   identical %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s, identical ? "yes" : "NO");
    if (!identical) std::exit(1);
}

} // namespace

int main() {
#if defined(_OPENMP)
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the same serial code\n");
#endif

    {
        const Matrix a = random_matrix(768, 768, 1);
        auto t0 = clock_type::now();
        const double rs = serial::orthogonality_residual(a);
        const double ts = seconds_since(t0);
        t0 = clock_type::now();
        const double rp = orthogonality_residual(a);
        const double tp = seconds_since(t0);
        report("orthogonality_residual 768", ts, tp, rs == rp);
    }
    {
        const Matrix a = random_matrix(96, 96, 2);
        const Matrix b = random_matrix(48, 48, 3);
        auto t0 = clock_type::now();
        const Matrix ks = serial::kronecker(a, b);
        const double ts = seconds_since(t0);
        t0 = clock_type::now();
        const Matrix kp = kronecker(a, b);
        const double tp = seconds_since(t0);
        report("kronecker 96x96 (x) 48x48", ts, tp, ks.data() == kp.data());
    }
    {
        const Matrix a = random_matrix(1 << 12, 1 << 12, 4);
        auto t0 = clock_type::now();
        const double ns = serial::max_norm(a);
        const double ts = seconds_since(t0);
        t0 = clock_type::now();
        const double np = max_norm(a);
        const double tp = seconds_since(t0);
        report("max_norm 4096x4096", ts, tp, ns == np);
    }
    {
        const OhatMatrix m = random_ohat(900, 5);
        const SimplexEmbedding s = extract(m);
        auto t0 = clock_type::now();
        const double ss = serial::regularity_spread(s);
        const double ts = seconds_since(t0);
        t0 = clock_type::now();
        const VerificationReport r = verify(s);
        const double tp = seconds_since(t0);
        report("pairwise distances n=899", ts, tp, ss == r.regularity_spread);
    }
    {
        const OhatMatrix m = random_ohat(96, 6);
        auto t0 = clock_type::now();
        ReduceChoice c1;
        (void)detail::reduce_best_unchecked(m, PivotMode::exhaustive, &c1);
        const double tp = seconds_since(t0);
        // Serial reference: score every pivot one by one.
        t0 = clock_type::now();
        ReduceChoice c2;
        c2.norm = 1e300;
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 1; c < m.size(); ++c) {
                const double norm = detail::reduced_norm(m, r, c);
                if (norm < c2.norm) {
                    c2.norm = norm;
                    c2.row = r;
                    c2.col = c;
                }
            }
        const double ts = seconds_since(t0);
        report("exhaustive pivot scan m=96", ts, tp,
               c1.norm == c2.norm && c1.row == c2.row && c1.col == c2.col);
    }
    return 0;
}
