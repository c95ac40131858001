#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simcube/errors.hpp"

namespace simcube {

/// Square ±1 matrix H of order m with H H' = m I, checked in exact integer
/// arithmetic (no floating point anywhere in this module).
struct HadamardMatrix {
    int order = 0;
    std::vector<std::int8_t> entries; // row-major, values +1/-1

    std::int8_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
    std::int8_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * order + j]; }
};

/// Exact check: all entries ±1 and every pair of rows orthogonal.
bool verify_hadamard(const HadamardMatrix& h);

/// Order 2^k by repeated doubling: H_1 = [1], H_2m = [[H,H],[H,-H]].
HadamardMatrix sylvester(int k);

/// Order q+1 from the quadratic character of GF(q), q = 3 (mod 4).
HadamardMatrix paley_i(int q);

/// Order 2(q+1) from the quadratic character of GF(q), q = 1 (mod 4).
HadamardMatrix paley_ii(int q);

/// Kronecker product of two Hadamard matrices (order = product of orders).
HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b);

struct Recipe {
    enum class Kind { sylvester, paley1, paley2, kron };
    Kind kind;
    int a = 0; // sylvester: exponent; paley: q; kron: first factor order
    int b = 0; // kron: second factor order

    std::string to_string() const;
    bool operator==(const Recipe&) const = default;
};

/// Immutable map from Hadamard order to a deterministic generation recipe.
///
/// Recipes are chosen with fixed preference sylvester > paley I > paley II >
/// kronecker (smallest covered factor first), so two registries built with the
/// same limit are identical. Orders with no recipe (92 is the first multiple
/// of 4) are simply absent; callers compensate by reducing from the next
/// covered order.
class OrderRegistry {
public:
    explicit OrderRegistry(int limit = 668);

    int limit() const { return limit_; }
    bool covered(int order) const { return recipes_.count(order) != 0; }
    std::optional<Recipe> best_recipe(int order) const;
    std::vector<int> covered_orders(int limit) const;

    /// Smallest covered order strictly greater than `order`, if any <= limit.
    std::optional<int> next_covered(int order) const;

    /// Build the matrix for a covered order and verify it exactly.
    HadamardMatrix generate(int order) const;

private:
    int limit_;
    std::map<int, Recipe> recipes_;
};

} // namespace simcube
