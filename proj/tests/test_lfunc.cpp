#include <doctest.h>

#include "hecke/arith.hpp"
#include "hecke/lfunc.hpp"

using namespace hecke;

namespace {

HeckeCharacter over(const QuadField& K, long p, int label = 1) {
    auto v = place(K, p, label);
    return build_character(K, IntegralIdeal::prime(v), {{v, 1, {1}}});
}

} // namespace

TEST_CASE("Q(i) family: coefficients vanish at primes inert in either field") {
    QuadField K(-1);
    for (long q : {17L, 41L, 73L}) {
        auto chi = over(K, q);
        auto t = dirichlet_coeffs(chi, 3000);
        CHECK(t[1] == 1);
        for (long p : arith::primes_up_to(3000)) {
            if (p == 2 || p == q) continue;
            if (arith::kronecker(-4, p) == -1 || arith::kronecker(q, p) == -1) CHECK(t[p] == 0);
        }
    }
}

TEST_CASE("Hecke relation at good primes") {
    QuadField Ki(-1), K5(5), K7(-7);
    for (const auto& chi : {over(Ki, 17), over(K5, 29), over(K5, 41), over(K7, 29)}) {
        auto t = dirichlet_coeffs(chi, 10000);
        auto form = induced_descriptor(chi);
        for (long p : arith::primes_up_to(100)) {
            if (form.level % p == 0) continue;
            int psi = arith::kronecker(form.nebentypus, p);
            CHECK(nebentypus_value(chi, p) == psi);
            CHECK(t[p * p] == t[p] * t[p] - psi);
        }
    }
}

TEST_CASE("coefficients are multiplicative and bounded by the divisor function") {
    QuadField K(5);
    auto t = dirichlet_coeffs(over(K, 41), 2000);
    for (long m = 1; m <= 44; ++m) {
        for (long n = 1; n <= 44; ++n) {
            if (arith::gcd(m, n) == 1) CHECK(t[m * n] == t[m] * t[n]);
        }
    }
    for (long n = 1; n <= 2000; ++n) {
        long tau = 1;
        for (auto [p, e] : arith::factor(n)) tau *= e + 1;
        CHECK(std::abs(t[n]) <= tau);
    }
}

TEST_CASE("Euler product equals the ideal sum") {
    QuadField Ki(-1), K5(5), K229(229), K7(-7);
    std::vector<HeckeCharacter> chars{over(Ki, 17), over(K5, 29), over(K7, 37)};
    for (const auto& c : quadratic_characters(K229, IntegralIdeal::prime(place(K229, 5, 1)))) chars.push_back(c);
    for (const auto& chi : chars) {
        auto a = dirichlet_coeffs(chi, 3000, 3);
        auto b = ideal_sum_oracle(chi, 3000);
        CHECK(first_mismatch(a, b) == 0);
        CHECK(a.method == "euler_product");
        CHECK(b.method == "ideal_sum");
    }
}

TEST_CASE("local factors") {
    QuadField K(5);
    auto chi = over(K, 29);
    // only one of the two places over 29 is ramified
    CHECK(local_factor(chi, 29).coeffs.size() == 2);
    CHECK(local_factor(chi, 11).coeffs.size() == 3);
    // 2 is inert: 1 - chi((2)) T^2
    auto f2 = local_factor(chi, 2);
    REQUIRE(f2.coeffs.size() == 3);
    CHECK(f2.coeffs[1] == 0);
    // 5 is ramified: 1 - chi(v) T
    CHECK(local_factor(chi, 5).coeffs.size() == 2);
}

TEST_CASE("form descriptors") {
    QuadField Ki(-1), K5(5);
    auto f = induced_descriptor(over(Ki, 17));
    CHECK(f.level == 68);
    CHECK(f.nebentypus == -68);
    CHECK(f.parity == Parity::odd);
    CHECK(f.kind == FormKind::holomorphic_weight_one);
    CHECK(to_string(f.kind) == "holomorphic_weight_one");
    auto g = induced_descriptor(over(K5, 29));
    CHECK(g.level == 145);
    CHECK(g.parity == Parity::even);
    auto h = induced_descriptor(over(K5, 41));
    CHECK(h.level == 205);
    CHECK(to_csv(dirichlet_coeffs(over(K5, 29), 3)).rfind("n,a_n\n1,1\n", 0) == 0);
}
