#include <doctest.h>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

using namespace hecke::arith;

TEST_CASE("kronecker agrees with Euler's criterion at odd primes") {
    for (i64 p : primes_up_to(400)) {
        if (p == 2) continue;
        for (i64 a = -60; a <= 60; ++a) {
            i64 e = powmod(mod(a, p), (p - 1) / 2, p);
            int expect = e == 0 ? 0 : (e == 1 ? 1 : -1);
            REQUIRE(kronecker(a, p) == expect);
        }
    }
}

TEST_CASE("kronecker at 2 follows the mod 8 rule") {
    for (i64 a = -40; a <= 40; ++a) {
        int expect = 0;
        if (a % 2 != 0) expect = (mod(a, 8) == 1 || mod(a, 8) == 7) ? 1 : -1;
        CHECK(kronecker(a, 2) == expect);
    }
}

TEST_CASE("square roots and primitive roots") {
    for (i64 p : primes_up_to(300)) {
        if (p == 2) continue;
        for (i64 a = 1; a < p; ++a) {
            if (kronecker(a, p) != 1) continue;
            i64 r = sqrt_mod_prime(a, p);
            REQUIRE(mulmod(r, r, p) == a);
        }
        i64 g = primitive_root(p);
        CHECK(multiplicative_order(g, p) == p - 1);
    }
}

TEST_CASE("factorisation and primality") {
    CHECK(factor(360) == std::vector<std::pair<i64, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(561));
    CHECK(is_squarefree(-30));
    CHECK_FALSE(is_squarefree(12));
    CHECK(valuation(96, 2) == 5);
    CHECK(isqrt(99) == 9);
    i64 r = 0;
    CHECK(is_square(144, &r));
    CHECK(r == 12);
    CHECK(invmod(3, 7) == 5);
    CHECK_THROWS_AS(invmod(2, 4), hecke::DomainError);
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(5));
    CHECK_FALSE(is_fundamental_discriminant(-16));
}
