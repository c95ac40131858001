#include "simcube/gf.hpp"

#include <algorithm>
#include <string>

namespace simcube {

namespace {

// Little-endian base-p digits of code, padded to len.
std::vector<int> digits_of(int code, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len && code > 0; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

int code_of(const std::vector<int>& d, int p) {
    int code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
}

// Degree of a coefficient vector, -1 for the zero polynomial.
int degree(const std::vector<int>& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

// Remainder of a modulo monic b over GF(p).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        const int c = a[da];
        // a -= c * x^(da-db) * b
        for (int i = 0; i <= db; ++i) {
            int& t = a[da - db + i];
            t = ((t - c * b[i]) % p + p) % p;
        }
    }
    a.resize(std::max(db, 1));
    return a;
}

} // namespace

std::optional<std::pair<int, int>> prime_power_decompose(int q) {
    if (q < 2) return std::nullopt;
    int p = q;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, e);
}

GaloisField::GaloisField(int q) : q_(q) {
    auto pe = prime_power_decompose(q);
    if (!pe || pe->first == 2)
        throw unsupported_order_error("GF(" + std::to_string(q) +
                                      "): odd prime power required");
    p_ = pe->first;
    e_ = pe->second;
    find_irreducible();
    build_character_table();
}

int GaloisField::add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    std::vector<int> da = digits_of(a, p_, e_), db = digits_of(b, p_, e_);
    for (int i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
    return code_of(da, p_);
}

int GaloisField::sub(int a, int b) const {
    if (e_ == 1) return ((a - b) % p_ + p_) % p_;
    std::vector<int> da = digits_of(a, p_, e_), db = digits_of(b, p_, e_);
    for (int i = 0; i < e_; ++i) da[i] = ((da[i] - db[i]) % p_ + p_) % p_;
    return code_of(da, p_);
}

int GaloisField::mul(int a, int b) const {
    if (e_ == 1) return (a * b) % p_;
    std::vector<int> da = digits_of(a, p_, e_), db = digits_of(b, p_, e_);
    std::vector<int> prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // Reduce modulo the irreducible: x^e == -sum irr_[i] x^i.
    for (int d = 2 * e_ - 2; d >= e_; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e_; ++i)
            prod[d - e_ + i] = ((prod[d - e_ + i] - c * irr_[i]) % p_ + p_) % p_;
    }
    prod.resize(e_);
    return code_of(prod, p_);
}

void GaloisField::find_irreducible() {
    irr_.assign(e_, 0);
    if (e_ == 1) return;
    // Enumerate lower coefficients in ascending integer encoding; a candidate
    // is irreducible iff no monic polynomial of degree <= e/2 divides it.
    const int total = [&] {
        int t = 1;
        for (int i = 0; i < e_; ++i) t *= p_;
        return t;
    }();
    for (int code = 0; code < total; ++code) {
        std::vector<int> cand = digits_of(code, p_, e_);
        cand.push_back(1); // monic, degree e
        bool irreducible = true;
        int ndiv = p_;
        for (int d = 1; d <= e_ / 2 && irreducible; ++d) {
            for (int dc = 0; dc < ndiv && irreducible; ++dc) {
                std::vector<int> div = digits_of(dc, p_, d);
                div.push_back(1); // monic, degree d
                if (degree(poly_mod(cand, div, p_)) < 0) irreducible = false;
            }
            ndiv *= p_;
        }
        if (irreducible) {
            irr_ = digits_of(code, p_, e_);
            return;
        }
    }
    throw numerical_error("no irreducible polynomial found"); // unreachable
}

void GaloisField::build_character_table() {
    chi_.assign(q_, -1);
    chi_[0] = 0;
    for (int g = 1; g < q_; ++g) chi_[mul(g, g)] = 1;
}

} // namespace simcube
