#include <doctest.h>

#include "simcube/gf.hpp"

using namespace simcube;

TEST_CASE("prime power decomposition") {
    auto d9 = prime_power_decompose(9);
    REQUIRE(d9.has_value());
    CHECK(d9->first == 3);
    CHECK(d9->second == 2);

    auto d27 = prime_power_decompose(27);
    REQUIRE(d27.has_value());
    CHECK(d27->first == 3);
    CHECK(d27->second == 3);

    CHECK(prime_power_decompose(331)->second == 1);
    CHECK(!prime_power_decompose(12).has_value());
    CHECK(!prime_power_decompose(91).has_value()); // 7 * 13
    CHECK(!prime_power_decompose(1).has_value());
}

TEST_CASE("GF(p) arithmetic and quadratic character") {
    GaloisField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    // Squares mod 7 are {1, 2, 4}.
    CHECK(f.character(0) == 0);
    for (int x : {1, 2, 4}) CHECK(f.character(x) == 1);
    for (int x : {3, 5, 6}) CHECK(f.character(x) == -1);
}

TEST_CASE("GF(9) and GF(27) satisfy the field axioms exhaustively") {
    for (int q : {9, 27}) {
        GaloisField f(q);
        // Commutativity and identities.
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
            }
        }
        // Distributivity on a sample grid.
        for (int a = 0; a < q; a += 2)
            for (int b = 1; b < q; b += 3)
                for (int c = 0; c < q; c += 5)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        // Every nonzero element has a multiplicative inverse.
        for (int a = 1; a < q; ++a) {
            bool inv = false;
            for (int b = 1; b < q && !inv; ++b) inv = f.mul(a, b) == 1;
            CHECK(inv);
        }
    }
}

TEST_CASE("quadratic character is multiplicative") {
    for (int q : {11, 13, 9, 25, 27, 49}) {
        GaloisField f(q);
        int squares = 0;
        for (int a = 1; a < q; ++a) {
            if (f.character(a) == 1) ++squares;
            for (int b = 1; b < q; ++b)
                CHECK(f.character(f.mul(a, b)) == f.character(a) * f.character(b));
        }
        CHECK(squares == (q - 1) / 2);
    }
}

TEST_CASE("even and composite sizes are rejected") {
    CHECK_THROWS_AS(GaloisField(8), unsupported_order_error);
    CHECK_THROWS_AS(GaloisField(12), unsupported_order_error);
    CHECK_THROWS_AS(GaloisField(15), unsupported_order_error);
}
