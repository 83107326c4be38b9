#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/characters.hpp"

namespace hecke {

// Fields with odd class number where quadratic characters are classified.
enum class Family {
    imaginary,  // Q(sqrt -2) and Q(sqrt -p), p = 3 mod 4 prime
    gaussian,   // Q(sqrt -1)
    real,       // Q(sqrt 2) and Q(sqrt p), p = 1 mod 4 prime
};

std::string to_string(Family f);
std::optional<Family> admitted_family(const QuadField& K);

struct AdmissibilityReport {
    bool admissible = true;
    // Empty when admissible, otherwise one of odd_inert_place, odd_ramified_place,
    // split_place, place_above_two.
    std::string clause;
    std::string detail;
};

// Conditions on the conductor alone; the first failing one is reported.
AdmissibilityReport is_admissible(const QuadField& K, const IntegralIdeal& f);

// Number of places in f over primes p = 3 mod 4 (p = 5 mod 8 for Q(sqrt -1)).
int r_count(const QuadField& K, const IntegralIdeal& f);

// Parity rule: whether an admissible f != 1 is the conductor of a classified character.
bool exists_character(const QuadField& K, const IntegralIdeal& f);

// Whether a local component satisfies the value conditions imposed at places over 2.
bool local_conditions_hold(const QuadField& K, const LocalComponent& c);

// Every classified character with conductor exactly f, by trying all primitive quadratic
// local data and keeping what passes the global unit conditions.
std::vector<HeckeCharacter> construct_all(const QuadField& K, const IntegralIdeal& f);

// Admissible conductors f != 1 with N(f) <= bound, by increasing norm.
std::vector<IntegralIdeal> admissible_conductors(const QuadField& K, long bound);

struct ClassifiedCharacter {
    HeckeCharacter character;
    int r_count = 0;
    bool base_change = false;  // expected false; true flags a failure of the classification
};

std::vector<ClassifiedCharacter> enumerate_characters(const QuadField& K, long bound);

} // namespace hecke
