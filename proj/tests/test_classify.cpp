#include <doctest.h>

#include "hecke/arith.hpp"
#include "hecke/classify.hpp"
#include "hecke/serialize.hpp"

using namespace hecke;

TEST_CASE("admitted families") {
    CHECK(admitted_family(QuadField(-1)) == Family::gaussian);
    CHECK(admitted_family(QuadField(-2)) == Family::imaginary);
    CHECK(admitted_family(QuadField(-7)) == Family::imaginary);
    CHECK(admitted_family(QuadField(-3)) == Family::imaginary);
    CHECK(admitted_family(QuadField(2)) == Family::real);
    CHECK(admitted_family(QuadField(13)) == Family::real);
    CHECK_FALSE(admitted_family(QuadField(-5)).has_value());
    CHECK_FALSE(admitted_family(QuadField(3)).has_value());
    CHECK_FALSE(admitted_family(QuadField(-15)).has_value());
}

TEST_CASE("admissibility clauses in Q(i)") {
    QuadField K(-1);
    auto adm = [&](const std::string& s) { return is_admissible(K, parse_conductor(K, s)); };
    CHECK(adm("17:split:1:1").admissible);
    CHECK(adm("13:split:1:1").admissible);
    CHECK(adm("3:inert:1").clause == "odd_inert_place");
    CHECK(adm("17:split:1:2").clause == "split_place");
    CHECK(adm("2:ram:3").clause == "place_above_two");
    CHECK(adm("2:ram:2").admissible);
    CHECK(adm("2:ram:5").admissible);
}

TEST_CASE("parity rule agrees with construction") {
    for (long d : {-7L, -1L, -2L, -3L, -11L, 2L, 5L, 13L, 17L}) {
        QuadField K(d);
        CAPTURE(d);
        for (const auto& f : admissible_conductors(K, 200)) {
            auto chars = construct_all(K, f);
            CAPTURE(f.to_string());
            CHECK(exists_character(K, f) == !chars.empty());
            for (const auto& chi : chars) CHECK(chi.conductor() == f);
        }
    }
}

TEST_CASE("q = 1 mod 8 gives a character in Q(i), q = 5 mod 8 needs more") {
    QuadField K(-1);
    for (long q : arith::primes_up_to(200)) {
        if (q % 4 != 1) continue;
        auto f = IntegralIdeal::prime(place(K, q, 1));
        CHECK(exists_character(K, f) == (q % 8 == 1));
        CHECK(r_count(K, f) == (q % 8 == 5 ? 1 : 0));
    }
    auto g = parse_conductor(K, "2:ram:2,5:split:1:1");
    CHECK(exists_character(K, g));
    CHECK(r_count(K, g) == 1);
}

TEST_CASE("classified characters are not base changes") {
    for (long d : {-7L, -1L, 5L}) {
        QuadField K(d);
        auto list = enumerate_characters(K, 150);
        CHECK_FALSE(list.empty());
        for (const auto& c : list) {
            CHECK_FALSE(c.base_change);
            CHECK_FALSE(is_base_change(c.character, 200));
        }
    }
}

TEST_CASE("worked examples in Q(sqrt -7)") {
    QuadField K(-7);
    auto v11 = IntegralIdeal::prime(place(K, 11, 1));
    auto v23 = IntegralIdeal::prime(place(K, 23, 1));
    CHECK(is_admissible(K, v11).admissible);
    CHECK(r_count(K, v11) == 1);
    CHECK_FALSE(exists_character(K, v11));
    CHECK(construct_all(K, v11).empty());
    CHECK(r_count(K, v11 * v23) == 2);
    CHECK(exists_character(K, v11 * v23));
    auto chars = construct_all(K, v11 * v23);
    REQUIRE_FALSE(chars.empty());
    CHECK(chars.front().conductor() == v11 * v23);
    CHECK(is_admissible(K, IntegralIdeal::prime(place(K, 3))).clause == "odd_inert_place");
    CHECK(is_admissible(K, IntegralIdeal()).admissible);
    // places outside the designated set (label 2) are not used
    CHECK_FALSE(is_admissible(K, IntegralIdeal::prime(place(K, 11, 2))).admissible);
    CHECK(enumerate_characters(K, 1).empty());
}

TEST_CASE("Q(i) with conductor v2^5 and real fields") {
    QuadField K(-1);
    auto f = IntegralIdeal::prime(place(K, 2), 5);
    CHECK(is_admissible(K, f).admissible);
    CHECK(exists_character(K, f) == !construct_all(K, f).empty());
    for (long d : {13L, 2L}) {
        QuadField R(d);
        for (const auto& g : admissible_conductors(R, 300)) CHECK(exists_character(R, g));
    }
}
