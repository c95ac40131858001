#include "simcube/hadamard.hpp"

#include <cstddef>
#include <limits>

#include "simcube/gf.hpp"

namespace simcube {

bool verify_hadamard(const HadamardMatrix& h) {
    const int m = h.order;
    if (m < 1 || h.entries.size() != static_cast<std::size_t>(m) * m) return false;
    for (std::int8_t v : h.entries)
        if (v != 1 && v != -1) return false;
    for (int i = 0; i < m; ++i) {
        const std::int8_t* ri = h.entries.data() + static_cast<std::size_t>(i) * m;
        for (int j = i + 1; j < m; ++j) {
            const std::int8_t* rj = h.entries.data() + static_cast<std::size_t>(j) * m;
            int dot = 0;
            for (int k = 0; k < m; ++k) dot += static_cast<int>(ri[k]) * rj[k];
            if (dot != 0) return false;
        }
    }
    return true;
}

HadamardMatrix sylvester(int k) {
    if (k < 0) throw dimension_error("sylvester: exponent must be nonnegative");
    if (k >= 20) throw dimension_error("sylvester: order 2^k overflows the supported range");
    const int m = 1 << k;
    HadamardMatrix h;
    h.order = m;
    h.entries.assign(static_cast<std::size_t>(m) * m, 1);
    // Entry (i,j) of the 2^k doubling is the parity of popcount(i & j).
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (__builtin_popcount(static_cast<unsigned>(i) & static_cast<unsigned>(j)) & 1)
                h.at(i, j) = -1;
    return h;
}

namespace {

// Jacobsthal matrix: Q(i,j) = chi(g_i - g_j) over the field's element codes.
std::vector<std::int8_t> jacobsthal(const GaloisField& gf) {
    const int q = gf.q();
    std::vector<std::int8_t> Q(static_cast<std::size_t>(q) * q, 0);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            Q[static_cast<std::size_t>(i) * q + j] =
                static_cast<std::int8_t>(gf.character(gf.sub(i, j)));
    return Q;
}

} // namespace

HadamardMatrix paley_i(int q) {
    auto pe = prime_power_decompose(q);
    if (!pe || pe->first == 2 || q % 4 != 3)
        throw unsupported_order_error("paley I requires a prime power q = 3 (mod 4)");
    GaloisField gf(q);
    std::vector<std::int8_t> Q = jacobsthal(gf);
    const int m = q + 1;
    HadamardMatrix h;
    h.order = m;
    h.entries.assign(static_cast<std::size_t>(m) * m, 1);
    // H = I + S with S = [[0, 1'],[-1, Q]]; S is skew because chi(-1) = -1.
    h.at(0, 0) = 1;
    for (int j = 0; j < q; ++j) h.at(0, j + 1) = 1;
    for (int i = 0; i < q; ++i) {
        h.at(i + 1, 0) = -1;
        for (int j = 0; j < q; ++j) {
            const int s = Q[static_cast<std::size_t>(i) * q + j];
            h.at(i + 1, j + 1) = static_cast<std::int8_t>(i == j ? 1 : s);
        }
    }
    return h;
}

HadamardMatrix paley_ii(int q) {
    auto pe = prime_power_decompose(q);
    if (!pe || pe->first == 2 || q % 4 != 1)
        throw unsupported_order_error("paley II requires a prime power q = 1 (mod 4)");
    GaloisField gf(q);
    std::vector<std::int8_t> Q = jacobsthal(gf);
    const int c = q + 1;
    // Symmetric conference-style core: S = [[0, 1'],[1, Q]].
    std::vector<std::int8_t> S(static_cast<std::size_t>(c) * c, 0);
    for (int j = 1; j < c; ++j) {
        S[j] = 1;
        S[static_cast<std::size_t>(j) * c] = 1;
    }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            S[static_cast<std::size_t>(i + 1) * c + (j + 1)] =
                Q[static_cast<std::size_t>(i) * q + j];

    const int m = 2 * c;
    HadamardMatrix h;
    h.order = m;
    h.entries.assign(static_cast<std::size_t>(m) * m, 0);
    // Each 0 of S becomes [[1,-1],[-1,-1]]; each s = ±1 becomes s*[[1,1],[1,-1]].
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < c; ++j) {
            const int s = S[static_cast<std::size_t>(i) * c + j];
            std::int8_t b00, b01, b10, b11;
            if (s == 0) {
                b00 = 1; b01 = -1; b10 = -1; b11 = -1;
            } else {
                b00 = static_cast<std::int8_t>(s);
                b01 = static_cast<std::int8_t>(s);
                b10 = static_cast<std::int8_t>(s);
                b11 = static_cast<std::int8_t>(-s);
            }
            h.at(2 * i, 2 * j) = b00;
            h.at(2 * i, 2 * j + 1) = b01;
            h.at(2 * i + 1, 2 * j) = b10;
            h.at(2 * i + 1, 2 * j + 1) = b11;
        }
    }
    return h;
}

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b) {
    if (a.order < 1 || b.order < 1) throw dimension_error("kronecker: empty factor");
    if (a.order > std::numeric_limits<int>::max() / b.order)
        throw dimension_error("kronecker: order product overflows");
    const int m = a.order * b.order;
    HadamardMatrix h;
    h.order = m;
    h.entries.assign(static_cast<std::size_t>(m) * m, 0);
    for (int ia = 0; ia < a.order; ++ia)
        for (int ib = 0; ib < b.order; ++ib)
            for (int ja = 0; ja < a.order; ++ja)
                for (int jb = 0; jb < b.order; ++jb)
                    h.at(ia * b.order + ib, ja * b.order + jb) =
                        static_cast<std::int8_t>(a.at(ia, ja) * b.at(ib, jb));
    return h;
}

std::string Recipe::to_string() const {
    switch (kind) {
    case Kind::sylvester: return "sylvester(2^" + std::to_string(a) + ")";
    case Kind::paley1: return "paley1(q=" + std::to_string(a) + ")";
    case Kind::paley2: return "paley2(q=" + std::to_string(a) + ")";
    case Kind::kron: return "kron(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return "?";
}

OrderRegistry::OrderRegistry(int limit) : limit_(limit) {
    if (limit < 1) throw dimension_error("registry limit must be positive");
    for (int k = 0; (1 << k) <= limit; ++k)
        recipes_.emplace(1 << k, Recipe{Recipe::Kind::sylvester, k, 0});
    for (int q = 3; q + 1 <= limit; q += 4)
        if (auto pe = prime_power_decompose(q); pe && pe->first != 2)
            recipes_.emplace(q + 1, Recipe{Recipe::Kind::paley1, q, 0});
    for (int q = 5; 2 * (q + 1) <= limit; q += 4)
        if (auto pe = prime_power_decompose(q); pe && pe->first != 2)
            recipes_.emplace(2 * (q + 1), Recipe{Recipe::Kind::paley2, q, 0});
    // Kronecker closure, ascending so both factors are already decided.
    for (int o = 4; o <= limit; o += 2) {
        if (recipes_.count(o)) continue;
        for (int d = 2; d * d <= o; ++d) {
            if (o % d == 0 && recipes_.count(d) && recipes_.count(o / d)) {
                recipes_.emplace(o, Recipe{Recipe::Kind::kron, d, o / d});
                break;
            }
        }
    }
}

std::optional<Recipe> OrderRegistry::best_recipe(int order) const {
    if (order < 1) throw dimension_error("order must be positive");
    auto it = recipes_.find(order);
    if (it == recipes_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> OrderRegistry::covered_orders(int limit) const {
    if (limit < 1) throw dimension_error("limit must be positive");
    std::vector<int> out;
    for (const auto& [order, recipe] : recipes_) {
        if (order > limit) break;
        out.push_back(order);
    }
    return out;
}

std::optional<int> OrderRegistry::next_covered(int order) const {
    auto it = recipes_.upper_bound(order);
    if (it == recipes_.end()) return std::nullopt;
    return it->first;
}

HadamardMatrix OrderRegistry::generate(int order) const {
    auto recipe = best_recipe(order);
    if (!recipe)
        throw unsupported_order_error("no Hadamard recipe for order " + std::to_string(order));
    HadamardMatrix h;
    switch (recipe->kind) {
    case Recipe::Kind::sylvester: h = sylvester(recipe->a); break;
    case Recipe::Kind::paley1: h = paley_i(recipe->a); break;
    case Recipe::Kind::paley2: h = paley_ii(recipe->a); break;
    case Recipe::Kind::kron: h = kronecker(generate(recipe->a), generate(recipe->b)); break;
    }
    if (!verify_hadamard(h))
        throw numerical_error("generated matrix failed the exact Hadamard check, order " +
                              std::to_string(order));
    return h;
}

} // namespace simcube
