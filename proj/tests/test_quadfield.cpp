#include <doctest.h>

#include <cmath>
#include <random>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"
#include "hecke/ideals.hpp"
#include "hecke/quadfield.hpp"

using namespace hecke;

namespace {

// smallest unit x + y*omega > 1 with y > 0, by scanning y
std::pair<long, long> brute_unit(long d) {
    QuadField K(d);
    for (long y = 1; y < 100000; ++y) {
        // norm(x + y w) = +-1; solve via 4N = (2x + t y)^2 - D y^2 when d = 1 mod 4
        long D = K.disc();
        for (long s : {-4L, 4L}) {
            long rhs = D * y * y + s;
            long r = 0;
            if (rhs < 0 || !arith::is_square(rhs, &r)) continue;
            long t = K.tag().trace;
            for (long u : {r, -r}) {
                if ((u - t * y) % 2 != 0) continue;
                long x = (u - t * y) / 2;
                double w = (t + std::sqrt(static_cast<double>(D))) / 2;
                if (x + y * w > 1) return {x, y};
            }
        }
    }
    return {0, 0};
}

// analytic class number formula for imaginary fields
long analytic_h(long D, int w) {
    long s = 0;
    for (long a = 1; a < -D; ++a) s += a * arith::kronecker(D, a);
    return -w * s / (2 * -D);
}

} // namespace

TEST_CASE("field invariants") {
    QuadField K(5);
    CHECK(K.disc() == 5);
    CHECK(K.r1() == 2);
    CHECK(K.unit_norm() == -1);
    CHECK(*K.fundamental_unit() == K.omega());

    QuadField G(-1);
    CHECK(G.disc() == -4);
    CHECK(G.torsion_order() == 4);
    CHECK(G.r2() == 1);
    CHECK_FALSE(G.fundamental_unit().has_value());
    CHECK(QuadField(-3).torsion_order() == 6);
    CHECK(QuadField(-7).torsion_order() == 2);

    QuadField R(2);
    CHECK(R.disc() == 8);
    auto e = *R.fundamental_unit();
    CHECK(e == R.element(1, 1));
    CHECK(e * R.element(-1, 1) == R.one());
    CHECK(R.unit_norm() == -1);
}

TEST_CASE("invalid fields are rejected") {
    CHECK_THROWS_AS(QuadField(0), DomainError);
    CHECK_THROWS_AS(QuadField(1), DomainError);
    CHECK_THROWS_AS(QuadField(12), DomainError);
    CHECK_THROWS_AS(QuadField(-4), DomainError);
}

TEST_CASE("fundamental units match a brute force scan") {
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 14L, 17L, 19L, 21L, 22L, 29L, 31L, 37L, 41L, 43L, 46L, 53L, 61L, 97L}) {
        CAPTURE(d);
        QuadField K(d);
        auto [x, y] = brute_unit(d);
        auto e = *K.fundamental_unit();
        CHECK(e == K.element(x, y));
        CHECK(abs(e.norm()) == 1);
        CHECK(K.unit_norm() == e.norm().get_si());
    }
}

TEST_CASE("element arithmetic") {
    QuadField K(5);
    // 7 + 2 sqrt 5 = 5 + 4 w
    auto Q = K.element(5, 4);
    CHECK(Q.norm() == 29);
    auto e = *K.fundamental_unit();
    CHECK(e.pow(14) == Q * K.element(20, 33) + K.one());
    CHECK(e.pow(20) == K.element(6, 1) * K.element(549, 888) - K.one());
    CHECK(K.element(6, 1).norm() == 41);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (long d : {-1L, -2L, -3L, -7L, 5L, 2L, 229L}) {
        QuadField F(d);
        for (int i = 0; i < 200; ++i) {
            auto x = F.element(dist(rng), dist(rng));
            auto y = F.element(dist(rng), dist(rng));
            REQUIRE((x * y).norm() == x.norm() * y.norm());
            REQUIRE(x.conj().conj() == x);
            REQUIRE(x + x.conj() == F.from_int(x.trace()));
            REQUIRE(x * x.conj() == F.from_int(x.norm()));
            if (!y.is_zero()) REQUIRE((x * y).divide(y) == x);
        }
    }
    QuadField M(-1);
    CHECK_THROWS_AS(K.one() + M.one(), DomainError);
}

TEST_CASE("class numbers of imaginary fields match the analytic formula") {
    for (long d = -1; d >= -200; --d) {
        if (!arith::is_squarefree(d)) continue;
        QuadField K(d);
        CAPTURE(d);
        REQUIRE(K.class_number() == analytic_h(K.disc(), K.torsion_order()));
    }
}

TEST_CASE("class numbers of real fields") {
    CHECK(QuadField(2).class_number() == 1);
    CHECK(QuadField(5).class_number() == 1);
    CHECK(QuadField(10).class_number() == 2);
    CHECK(QuadField(15).class_number() == 2);
    CHECK(QuadField(79).class_number() == 3);
    CHECK(QuadField(229).class_number() == 3);
}

TEST_CASE("Q(sqrt 229) has a non-principal place above 3") {
    // 4 N(x + y w) = (2x + y)^2 - 229 y^2; no solution of norm +-3 in a window
    // that covers a fundamental domain for the unit (15 + sqrt 229) / 2
    for (long y = 0; y <= 50; ++y) {
        for (long s : {-12L, 12L}) {
            long rhs = 229 * y * y + s;
            long r = 0;
            CHECK_FALSE((rhs >= 0 && arith::is_square(rhs, &r)));
        }
    }
    QuadField K(229);
    auto v = place(K, 3, 1);
    CHECK_FALSE(is_principal(K, IntegralIdeal::prime(v)).has_value());
    auto gen = is_principal(K, IntegralIdeal::prime(v, 3));
    REQUIRE(gen.has_value());
    CHECK(abs(gen->norm()) == 27);
}

TEST_CASE("search limit is enforced") {
    auto old = search_limit();
    set_search_limit(1);
    QuadField K(-5);
    CHECK_THROWS_AS(norm_search(K, BigInt(1000000), [](const QuadInt&) { return false; }), ResourceLimit);
    QuadField R(229);
    CHECK_THROWS_AS((void)is_principal(R, IntegralIdeal::prime(place(R, 3, 1))), ResourceLimit);
    set_search_limit(old);
    CHECK_FALSE(is_principal(R, IntegralIdeal::prime(place(R, 3, 1))).has_value());
}

TEST_CASE("principal generators of large ideals") {
    for (long d : {229L, -23L, 79L, -47L, 10L}) {
        QuadField K(d);
        long h = K.class_number();
        for (long p : {1000003L, 999983L, 1299709L}) {
            for (const auto& v : primes_above(K, p)) {
                auto I = IntegralIdeal::prime(v, static_cast<int>(h));
                auto g = is_principal(K, I);
                REQUIRE(g.has_value());
                CHECK(abs(g->norm()) == I.norm());
                CHECK(contains(K, I, *g));
            }
        }
    }
}

TEST_CASE("the place over 29 containing 7 + 2 sqrt 5") {
    QuadField K(5);
    auto Q = K.element(5, 4);
    auto v = place(K, 29, 1);
    CHECK(v.root == 6);
    auto g = is_principal(K, IntegralIdeal::prime(v));
    REQUIRE(g.has_value());
    // g and 7 + 2 sqrt 5 are associates
    CHECK(abs(Q.divide(*g).norm()) == 1);
    CHECK(abs(g->divide(Q).norm()) == 1);
    // round trip through a principal ideal
    auto x = K.element(123, -45);
    auto h = is_principal(K, factor_principal(K, x));
    REQUIRE(h.has_value());
    CHECK(abs(x.divide(*h).norm()) == 1);
}
