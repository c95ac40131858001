#pragma once

#include <cstddef>
#include <vector>

#include "simcube/ohat.hpp"

namespace simcube {

/// Explicit coordinates of a regular n-simplex centered at the origin inside
/// the unit cube [-1/2, 1/2]^n: n+1 vertices of dimension n.
struct SimplexEmbedding {
    std::size_t dim = 0;
    std::vector<std::vector<double>> vertices;
    double edge_length = 0.0;
};

struct VerifyTolerances {
    double regularity = 1e-8;    // relative pairwise-distance deviation
    double barycenter = 1e-10;   // max-abs of the vertex average
    double containment = 1e-12;  // allowed overhang beyond the cube boundary
    double circumradius = 1e-8;  // relative deviation from edge * sqrt(n/(2n+2))
};

/// All metrics recomputed from raw coordinates; nothing is trusted from the
/// construction that produced them.
struct VerificationReport {
    double regularity_spread = 0.0;
    double barycenter_norm = 0.0;
    double containment_margin = 0.0; // 1/2 minus the largest coordinate magnitude
    double circumradius_error = 0.0;
    bool pass = false;
};

/// Vertices are the rows of the first-column-deleted body divided by twice its
/// max-norm, so the largest coordinate lands exactly on the cube boundary.
/// Edge length is 1/(sqrt(2) * max-norm).
SimplexEmbedding extract(const OhatMatrix& a);

VerificationReport verify(const SimplexEmbedding& s, const VerifyTolerances& tol = {});

/// edge_length / sqrt(n): the quantity bounded below by 0.5012... and above
/// by sqrt((n+1)/(2n)).
double edge_ratio(const SimplexEmbedding& s);

/// Max-norm distance between the vertex Gram matrix and
/// (edge^2/2)(I - J/(n+1)), an algebraic restatement of regularity plus zero
/// barycenter.
double gram_deviation(const SimplexEmbedding& s);

namespace serial {
/// Reference pairwise-distance scan used to cross-check the parallel one.
double regularity_spread(const SimplexEmbedding& s);
} // namespace serial

} // namespace simcube
