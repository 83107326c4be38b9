#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/quadfield.hpp"

namespace hecke {

enum class SplitKind { split, inert, ramified };

std::string to_string(SplitKind k);

// A prime of the ring of integers lying over the rational prime p.
// Split primes carry label 1 or 2: label 1 is the place where omega reduces to the
// smaller of the two roots of its minimal polynomial mod p. Other kinds carry label 0.
struct PrimePlace {
    long p = 0;
    SplitKind kind = SplitKind::inert;
    int label = 0;
    long root = 0;       // omega = root mod this place (split, ramified)
    long conj_root = 0;  // omega = conj_root mod the conjugate place

    int f() const { return kind == SplitKind::inert ? 2 : 1; }
    int e() const { return kind == SplitKind::ramified ? 2 : 1; }
    long norm() const { return kind == SplitKind::inert ? p * p : p; }

    // "p:split:1", "p:inert" or "p:ram"
    std::string to_string() const;

    bool operator==(const PrimePlace& o) const { return p == o.p && label == o.label; }
    bool operator<(const PrimePlace& o) const { return p != o.p ? p < o.p : label < o.label; }
};

std::vector<PrimePlace> primes_above(const QuadField& K, long p);
SplitKind split_kind(const QuadField& K, long p);
PrimePlace conjugate_place(const PrimePlace& v);
PrimePlace place_from_string(const QuadField& K, std::string_view s);
PrimePlace place(const QuadField& K, long p, int label = 0);

class IntegralIdeal {
public:
    IntegralIdeal() = default;
    explicit IntegralIdeal(std::map<PrimePlace, int> factors);
    static IntegralIdeal prime(const PrimePlace& v, int exponent = 1);

    const std::map<PrimePlace, int>& factors() const { return factors_; }
    int exponent(const PrimePlace& v) const;
    BigInt norm() const;
    bool is_one() const { return factors_.empty(); }

    IntegralIdeal operator*(const IntegralIdeal& o) const;
    IntegralIdeal pow(int e) const;
    bool divides(const IntegralIdeal& o) const;
    bool coprime_to(const IntegralIdeal& o) const;
    bool operator==(const IntegralIdeal& o) const { return factors_ == o.factors_; }

    // Places joined by '*', exponent after '^'; "1" for the unit ideal.
    std::string to_string() const;

private:
    std::map<PrimePlace, int> factors_;
};

IntegralIdeal conjugate_ideal(const IntegralIdeal& I);

// Exponent of v in the principal ideal (x), x != 0.
int valuation(const QuadField& K, const QuadInt& x, const PrimePlace& v);
bool contains(const QuadField& K, const IntegralIdeal& I, const QuadInt& x);
IntegralIdeal factor_principal(const QuadField& K, const QuadInt& x);

// Root of the minimal polynomial of omega modulo p^k lifting v.root (split v).
BigInt lifted_root(const QuadField& K, const PrimePlace& v, int k);

// Order k of the class of v and a generator of v^k (cached per field).
std::pair<int, QuadInt> class_power(const QuadField& K, const PrimePlace& v);

} // namespace hecke
