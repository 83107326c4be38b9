#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hecke/dihedral.hpp"
#include "hecke/error.hpp"

using namespace hecke;
using namespace hecke::dihedral;

namespace {

using C = std::complex<double>;
using CM = std::array<C, 4>;

CM to_complex(const Matrix& m) {
    CM out{};
    for (int i = 0; i < 4; ++i) {
        if (!m.e[i].zero) out[i] = std::polar(1.0, 2 * std::numbers::pi * m.e[i].k / m.L);
    }
    return out;
}

CM mul(const CM& x, const CM& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

bool close(const CM& x, const CM& y) {
    for (int i = 0; i < 4; ++i) {
        if (std::abs(x[i] - y[i]) > 1e-9) return false;
    }
    return true;
}

int find(const std::vector<CM>& set, const CM& x) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (close(set[i], x)) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

TEST_CASE("closure checked with floating point matrices") {
    for (int m : {2, 4, 6, 8}) {
        for (auto v : {Variant::cyclic, Variant::product}) {
            auto G = build_group(m, v);
            CAPTURE(m);
            std::vector<CM> mats;
            for (const auto& e : G.elements) mats.push_back(to_complex(e.matrix));
            CHECK(mats.size() == static_cast<std::size_t>(4 * m));
            for (std::size_t i = 0; i < mats.size(); ++i) {
                for (std::size_t j = 0; j < mats.size(); ++j) {
                    if (j < i) CHECK(!close(mats[i], mats[j]));
                    REQUIRE(find(mats, mul(mats[i], mats[j])) >= 0);
                }
            }
            // exact and floating products agree
            for (std::size_t i = 0; i < mats.size(); i += 3) {
                for (std::size_t j = 0; j < mats.size(); j += 5) {
                    CHECK(close(to_complex(G.elements[i].matrix * G.elements[j].matrix), mul(mats[i], mats[j])));
                }
            }
            // centre: commutes with everything; must be the scalars
            int centre = 0;
            for (const auto& x : mats) {
                bool central = true;
                for (const auto& y : mats) central = central && close(mul(x, y), mul(y, x));
                if (central) {
                    ++centre;
                    CHECK(std::abs(x[1]) < 1e-9);
                    CHECK(std::abs(x[0] - x[3]) < 1e-9);
                }
            }
            CHECK(centre == m);
        }
    }
}

TEST_CASE("structure reports") {
    for (int m : {2, 4, 6, 8}) {
        for (auto v : {Variant::cyclic, Variant::product}) {
            auto r = verify_structure(build_group(m, v));
            CHECK(r.order == 4 * m);
            CHECK(r.center_order == m);
            CHECK(r.ok());
        }
    }
    CHECK_THROWS_AS(build_group(3, Variant::cyclic), DomainError);
}

TEST_CASE("faithfulness criteria") {
    auto a = faithfulness_criteria(4, Variant::cyclic);
    CHECK(a.m == 2);
    CHECK(a.faithful_on_H);
    CHECK(a.kernel_contained);
    CHECK(a.power_is_delta);
    CHECK(a.conjugate_is_power);
    CHECK(a.equivalent());
    auto b = faithfulness_criteria(4, Variant::product);
    CHECK_FALSE(b.faithful_on_H);
    CHECK_FALSE(b.conjugate_is_power);
    CHECK(b.equivalent());
    auto c = faithfulness_criteria(8, Variant::cyclic);
    CHECK(c.m == 4);
    CHECK(c.power_is_delta);
    CHECK_THROWS_AS(faithfulness_criteria(6, Variant::cyclic), DomainError);
}
