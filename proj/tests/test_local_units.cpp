#include <doctest.h>

#include <set>

#include "hecke/error.hpp"
#include "hecke/local_units.hpp"

using namespace hecke;

namespace {

// units of Z_K / v^m counted by brute force over a + b w with 0 <= a, b < p^k
long brute_unit_count(const QuadField& K, const PrimePlace& v, int m) {
    ResidueRing R(K, v, m);
    std::set<std::int64_t> seen;
    long q = R.modulus();
    for (long a = 0; a < q; ++a) {
        for (long b = 0; b < q; ++b) {
            if (a == 0 && b == 0) continue;
            auto x = K.element(a, b);
            if (valuation(K, x, v) == 0) seen.insert(R.key(R.reduce(x)));
        }
    }
    return static_cast<long>(seen.size());
}

} // namespace

TEST_CASE("unit group orders match enumeration") {
    struct Case {
        long d;
        long p;
        int label;
        int m;
    };
    std::vector<Case> cases{{-1, 2, 0, 2}, {-1, 2, 0, 3}, {-1, 2, 0, 4}, {-1, 2, 0, 5}, {-2, 2, 0, 5},
                            {-7, 2, 1, 1}, {-7, 2, 1, 2}, {-7, 2, 1, 3}, {5, 2, 0, 1}, {5, 2, 0, 2},
                            {5, 2, 0, 3}, {2, 2, 0, 5}, {13, 2, 0, 3}, {-3, 2, 0, 3}, {5, 29, 1, 1},
                            {5, 3, 0, 1}, {-7, 7, 0, 1}, {-1, 17, 2, 1}};
    for (const auto& c : cases) {
        QuadField K(c.d);
        auto v = place(K, c.p, c.label);
        CAPTURE(c.d);
        CAPTURE(c.p);
        CAPTURE(c.m);
        auto G = local_unit_generators(K, v, c.m);
        long expect = brute_unit_count(K, v, c.m);
        CHECK(G->size() == expect);
        CHECK(G->ring().unit_count() == expect);
        long prod = G->tame_generator() ? 3 : 1;
        for (auto o : G->orders()) prod *= o;
        CHECK(prod == expect);
    }
}

TEST_CASE("decomposition reconstructs every unit at 2") {
    for (long d : {-1L, -2L, -3L, -7L, 2L, 5L, 13L, 3L}) {
        QuadField K(d);
        for (const auto& v : primes_above(K, 2)) {
            int top = v.kind == SplitKind::ramified ? 5 : 3;
            for (int m = 1; m <= top; ++m) {
                auto G = local_unit_generators(K, v, m);
                const auto& R = G->ring();
                for (const auto& u : R.units()) {
                    auto ex = G->decompose(u);
                    Residue acc = R.one();
                    for (std::size_t i = 0; i < ex.size(); ++i) {
                        REQUIRE(ex[i] >= 0);
                        REQUIRE(ex[i] < G->orders()[i]);
                        acc = R.mul(acc, R.pow(R.reduce(G->generators()[i]), static_cast<std::uint64_t>(ex[i])));
                    }
                    // the decomposition omits the cube roots of unity at inert 2
                    bool hit = R.equal(acc, u);
                    if (G->tame_generator()) {
                        auto mu = R.reduce(*G->tame_generator());
                        hit = hit || R.equal(R.mul(acc, mu), u) || R.equal(R.mul(acc, R.mul(mu, mu)), u);
                    }
                    REQUIRE(hit);
                }
            }
        }
    }
}

TEST_CASE("discrete logs at odd places") {
    QuadField K(-1);
    for (long p : {3L, 7L, 13L, 17L, 101L}) {
        for (const auto& v : primes_above(K, p)) {
            auto G = local_unit_generators(K, v, 1);
            REQUIRE(G->generators().size() == 1);
            const auto& R = G->ring();
            auto g = R.reduce(G->generators()[0]);
            CHECK(G->orders()[0] == R.unit_count());
            for (std::uint64_t e : {0ull, 1ull, 5ull, 17ull, 100ull}) {
                auto ex = G->decompose(R.pow(g, e));
                CHECK(ex[0] == static_cast<std::int64_t>(e % G->orders()[0]));
            }
        }
    }
}

TEST_CASE("-1 at the ramified place of Q(sqrt -2)") {
    QuadField K(-2);
    auto G = local_unit_generators(K, place(K, 2), 5);
    CHECK(G->orders() == std::vector<std::int64_t>{4, 2, 2});
    CHECK(G->decompose(K.from_int(-1)) == std::vector<std::int64_t>{2, 1, 0});
}

TEST_CASE("inert 2 keeps the cube roots of unity apart") {
    QuadField K(5);
    auto G = local_unit_generators(K, place(K, 2), 3);
    REQUIRE(G->tame_generator().has_value());
    auto z = *G->tame_generator();
    const auto& R = G->ring();
    auto r = R.reduce(z);
    CHECK_FALSE(R.equal(r, R.one()));
    CHECK(R.equal(R.pow(r, 3), R.one()));
}

TEST_CASE("unsupported precisions are rejected") {
    QuadField K(-1);
    CHECK_THROWS_AS(local_unit_generators(K, place(K, 2), 6), DomainError);
    CHECK_THROWS_AS(local_unit_generators(K, place(K, 5, 1), 2), DomainError);
    QuadField M(5);
    CHECK_THROWS_AS(local_unit_generators(M, place(M, 2), 4), DomainError);
}
