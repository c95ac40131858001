#include "simcube/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace simcube {

namespace {

void check_shape(const SimplexEmbedding& s) {
    if (s.dim == 0) throw dimension_error("embedding dimension must be positive");
    if (s.vertices.size() != s.dim + 1)
        throw dimension_error("embedding must have dim+1 vertices");
    for (const auto& v : s.vertices)
        if (v.size() != s.dim) throw dimension_error("vertex dimension mismatch");
    if (!(s.edge_length > 0.0)) throw dimension_error("edge length must be positive");
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double spread_for_row(const SimplexEmbedding& s, std::size_t i) {
    double worst = 0.0;
    for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
        const double d = distance(s.vertices[i], s.vertices[j]);
        worst = std::max(worst, std::fabs(d - s.edge_length) / s.edge_length);
    }
    return worst;
}

} // namespace

SimplexEmbedding extract(const OhatMatrix& a) {
    if (a.size() < 2) throw dimension_error("extract: matrix size must be at least 2");
    const Matrix body1 = delete_first_column(a.body());
    const double m = max_norm(body1);
    if (!(m > 0.0)) throw invariant_error("extract: degenerate matrix");
    SimplexEmbedding s;
    s.dim = a.size() - 1;
    s.edge_length = 1.0 / (std::sqrt(2.0) * m);
    s.vertices.resize(a.size());
    const double denom = 2.0 * m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s.vertices[i].resize(s.dim);
        const double* src = body1.row(i);
        // Division (not multiplication by a reciprocal) so the extreme entries
        // land on exactly +-1/2.
        for (std::size_t j = 0; j < s.dim; ++j) s.vertices[i][j] = src[j] / denom;
    }
    return s;
}

VerificationReport verify(const SimplexEmbedding& s, const VerifyTolerances& tol) {
    check_shape(s);
    const std::int64_t count = static_cast<std::int64_t>(s.vertices.size());
    VerificationReport r;

    double spread = 0.0;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : spread)
    for (std::int64_t i = 0; i < count; ++i)
        spread = std::max(spread, spread_for_row(s, static_cast<std::size_t>(i)));
    r.regularity_spread = spread;

    std::vector<double> bary(s.dim, 0.0);
    double max_coord = 0.0;
    for (const auto& v : s.vertices)
        for (std::size_t k = 0; k < s.dim; ++k) {
            bary[k] += v[k];
            max_coord = std::max(max_coord, std::fabs(v[k]));
        }
    for (double& b : bary) b /= static_cast<double>(count);
    for (double b : bary) r.barycenter_norm = std::max(r.barycenter_norm, std::fabs(b));
    r.containment_margin = 0.5 - max_coord;

    const double n = static_cast<double>(s.dim);
    const double R = s.edge_length * std::sqrt(n / (2.0 * n + 2.0));
    for (const auto& v : s.vertices) {
        double acc = 0.0;
        for (std::size_t k = 0; k < s.dim; ++k) {
            const double d = v[k] - bary[k];
            acc += d * d;
        }
        r.circumradius_error = std::max(r.circumradius_error, std::fabs(std::sqrt(acc) - R) / R);
    }

    r.pass = r.regularity_spread <= tol.regularity && r.barycenter_norm <= tol.barycenter &&
             r.containment_margin >= -tol.containment && r.circumradius_error <= tol.circumradius;
    return r;
}

double edge_ratio(const SimplexEmbedding& s) {
    check_shape(s);
    return s.edge_length / std::sqrt(static_cast<double>(s.dim));
}

double gram_deviation(const SimplexEmbedding& s) {
    check_shape(s);
    const std::size_t count = s.vertices.size();
    const double half_sq = s.edge_length * s.edge_length / 2.0;
    const double off = -half_sq / static_cast<double>(count);
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i; j < count; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < s.dim; ++k) dot += s.vertices[i][k] * s.vertices[j][k];
            const double expect = (i == j) ? half_sq + off : off;
            worst = std::max(worst, std::fabs(dot - expect));
        }
    return worst;
}

namespace serial {

double regularity_spread(const SimplexEmbedding& s) {
    check_shape(s);
    double worst = 0.0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        worst = std::max(worst, spread_for_row(s, i));
    return worst;
}

} // namespace serial

} // namespace simcube
