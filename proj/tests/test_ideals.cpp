#include <doctest.h>

#include <random>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"
#include "hecke/ideals.hpp"

using namespace hecke;

TEST_CASE("splitting follows the Kronecker symbol") {
    for (long d : {-1L, -2L, -7L, 5L, 2L, 13L, 229L}) {
        QuadField K(d);
        for (long p : arith::primes_up_to(200)) {
            int k = arith::kronecker(K.disc(), p);
            auto ps = primes_above(K, p);
            SplitKind expect = k == 1 ? SplitKind::split : (k == 0 ? SplitKind::ramified : SplitKind::inert);
            CHECK(split_kind(K, p) == expect);
            CHECK(ps.size() == (k == 1 ? 2u : 1u));
            long total = 0;
            for (const auto& v : ps) total += v.e() * v.f();
            CHECK(total == 2);
        }
    }
}

TEST_CASE("split labels: label 1 carries the smaller root") {
    QuadField K(5);
    auto v1 = place(K, 29, 1);
    auto v2 = place(K, 29, 2);
    CHECK(v1.root == 6);
    CHECK(v2.root == 24);
    CHECK(conjugate_place(v1) == v2);
    // 6 + w generates the place over 41 on which w = 35
    auto I = factor_principal(K, K.element(6, 1));
    REQUIRE(I.factors().size() == 1);
    CHECK(I.factors().begin()->first.label == 2);
    CHECK(I.factors().begin()->first.root == 35);
    CHECK(place_from_string(K, "29:split:2") == v2);
    CHECK(place_from_string(K, "2:inert").kind == SplitKind::inert);
    CHECK_THROWS_AS(place_from_string(K, "31:inert"), DomainError);
}

TEST_CASE("principal factorisation is consistent with norms and containment") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-300, 300);
    for (long d : {-1L, -5L, -7L, -23L, 5L, 10L, 229L}) {
        QuadField K(d);
        for (int i = 0; i < 100; ++i) {
            auto x = K.element(dist(rng), dist(rng));
            if (x.is_zero()) continue;
            auto I = factor_principal(K, x);
            REQUIRE(I.norm() == abs(x.norm()));
            REQUIRE(contains(K, I, x));
            for (const auto& [v, e] : I.factors()) {
                REQUIRE(valuation(K, x, v) == e);
                REQUIRE_FALSE(contains(K, I * IntegralIdeal::prime(v), x));
            }
            REQUIRE(factor_principal(K, x.conj()) == conjugate_ideal(I));
        }
    }
}

TEST_CASE("ideal algebra") {
    QuadField K(-7);
    auto a = IntegralIdeal::prime(place(K, 2, 1), 2);
    auto b = IntegralIdeal::prime(place(K, 7));
    auto c = a * b;
    CHECK(c.norm() == 28);
    CHECK(a.divides(c));
    CHECK(a.coprime_to(b));
    CHECK_FALSE(c.coprime_to(b));
    CHECK(c.pow(2).norm() == 784);
    CHECK(IntegralIdeal().is_one());
    CHECK(c.to_string() == "2:split:1^2*7:ram");
}

TEST_CASE("class powers generate h-th powers of places") {
    for (long d : {-23L, -14L, 10L, 229L, -7L}) {
        QuadField K(d);
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            for (const auto& v : primes_above(K, p)) {
                auto [k, beta] = class_power(K, v);
                CAPTURE(d);
                CAPTURE(v.to_string());
                CHECK(K.class_number() % k == 0);
                CHECK(factor_principal(K, beta) == IntegralIdeal::prime(v, k));
                bool principal = is_principal(K, IntegralIdeal::prime(v)).has_value();
                CHECK(principal == (k == 1));
            }
        }
    }
    QuadField K(229);
    CHECK(class_power(K, place(K, 3, 1)).first == 3);
}

TEST_CASE("lifted roots are Hensel lifts") {
    QuadField K(-7);
    for (long p : {2L, 11L, 23L}) {
        auto v = place(K, p, 1);
        for (int k = 1; k <= 4; ++k) {
            BigInt r = lifted_root(K, v, k);
            BigInt pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            // omega^2 - omega + 2 = 0
            BigInt val = r * r - r + 2;
            CHECK(val % pk == 0);
        }
    }
}
