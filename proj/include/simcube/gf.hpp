#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "simcube/errors.hpp"

namespace simcube {

/// Returns (p, e) with q = p^e and p prime, or nullopt.
std::optional<std::pair<int, int>> prime_power_decompose(int q);

/// Arithmetic in GF(p^e) for odd prime powers q = p^e <= ~2^15.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the code
/// are the coefficients of a polynomial over GF(p), reduced modulo the
/// lexicographically smallest monic irreducible polynomial of degree e
/// (searched at construction; for e = 1 this is plain arithmetic mod p).
class GaloisField {
public:
    explicit GaloisField(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;

    /// Quadratic character: 0 on 0, +1 on nonzero squares, -1 otherwise.
    int character(int a) const { return chi_[a]; }

    /// Coefficients of the irreducible modulus below the leading term,
    /// i.e. x^e + irr[e-1] x^(e-1) + ... + irr[0].
    const std::vector<int>& modulus() const { return irr_; }

private:
    int q_, p_, e_;
    std::vector<int> irr_;
    std::vector<std::int8_t> chi_;

    void find_irreducible();
    void build_character_table();
};

} // namespace simcube
