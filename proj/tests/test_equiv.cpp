#include <doctest.h>

#include "hecke/equiv.hpp"
#include "hecke/error.hpp"

using namespace hecke;

namespace {

HeckeCharacter over(const QuadField& K, long p, int label = 1) {
    auto v = place(K, p, label);
    return build_character(K, IntegralIdeal::prime(v), {{v, 1, {1}}});
}

} // namespace

TEST_CASE("partner fields") {
    QuadField Ki(-1), K5(5);
    CHECK(partner_field(over(Ki, 17)).d() == 17);
    CHECK(partner_field(over(Ki, 41)).d() == 41);
    CHECK(partner_field(over(K5, 29)).d() == 29);
    CHECK(partner_field(over(K5, 41)).d() == 41);
}

TEST_CASE("partner for q = 17 in Q(i)") {
    QuadField K(-1);
    auto chi = over(K, 17);
    auto P = construct_partner(chi, PartnerOptions{200, 3000});
    const auto& c = P.certificate;
    CHECK(c.matched);
    CHECK(c.first_mismatch == 0);
    CHECK(c.d_M == 17);
    CHECK(c.level_chi == 68);
    CHECK(c.level_eta == 68);
    CHECK(c.oracle_agrees);
    CHECK(c.candidates_matched >= 1);
    // eta has conductor R^2 with R over 2
    const auto& f = P.eta.conductor();
    REQUIRE(f.factors().size() == 1);
    CHECK(f.factors().begin()->first.p == 2);
    CHECK(f.factors().begin()->second == 2);
}

TEST_CASE("a wrong partner is caught") {
    QuadField K(-1), M(17);
    auto chi = over(K, 17);
    auto good = construct_partner(chi, PartnerOptions{200, 2000}).eta;
    // a character of Q(sqrt 17) with a different conductor
    auto wrong = over(M, 13);
    auto c = verify_equiv(chi, wrong, 2000);
    CHECK_FALSE(c.matched);
    CHECK(c.first_mismatch > 0);
    CHECK(verify_equiv(chi, good, 2000).matched);
    CHECK(verify_equiv(chi, conjugate_char(good), 2000).matched);
    CHECK_THROWS_AS(verify_equiv(chi, chi, 100), DomainError);
}

TEST_CASE("Maass pairs") {
    QuadField K(5);
    auto a = construct_partner(over(K, 29), PartnerOptions{200, 3000}).certificate;
    CHECK(a.matched);
    CHECK(a.form.kind == FormKind::maass_even_cos);
    CHECK(a.form.level == 145);
    auto b = construct_partner(over(K, 41), PartnerOptions{200, 3000}).certificate;
    CHECK(b.matched);
    CHECK(b.form.kind == FormKind::maass_even_sin);
    CHECK(b.form.level == 205);
}
