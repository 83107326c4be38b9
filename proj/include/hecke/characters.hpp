#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/ideals.hpp"
#include "hecke/local_units.hpp"
#include "hecke/quadfield.hpp"

namespace hecke {

// Values of a character of order n are stored as exponents e, meaning exp(2 pi i e / n).

// Local component at a place dividing the conductor, as supplied by a caller:
// exponents[i] is the exponent of the value on the i-th local generator.
struct LocalData {
    PrimePlace place;
    int precision = 0;
    std::vector<std::int64_t> exponents;
};

class LocalComponent {
public:
    LocalComponent(std::shared_ptr<const LocalUnitGroup> group, std::vector<std::int64_t> exponents, int order);

    const PrimePlace& place() const { return group_->place(); }
    int precision() const { return group_->precision(); }
    const LocalUnitGroup& group() const { return *group_; }
    const std::shared_ptr<const LocalUnitGroup>& group_ptr() const { return group_; }
    const std::vector<std::int64_t>& exponents() const { return exps_; }

    // Value exponent on a unit at this place.
    std::int64_t value(const QuadInt& u) const;
    std::int64_t value(Residue u) const;

private:
    std::shared_ptr<const LocalUnitGroup> group_;
    std::vector<std::int64_t> exps_;
    int order_;
    // u^power_ lands in a small subgroup whose keys map straight to values.
    std::uint64_t power_ = 1;
    std::unordered_map<std::int64_t, std::int64_t> values_;
};

class HeckeCharacter {
public:
    const QuadField& field() const { return K_; }
    int order() const { return order_; }
    const IntegralIdeal& conductor() const { return cond_; }
    const std::vector<LocalComponent>& components() const { return comps_; }
    const LocalComponent* component(const PrimePlace& v) const;
    // One bit per real place: the sign character of that embedding occurs or not.
    const std::vector<int>& infinity_type() const { return inf_; }
    std::vector<LocalData> local_data() const;

    // Value on the prime ideal v, which must not divide the conductor.
    std::int64_t value_at(const PrimePlace& v) const;
    bool is_trivial() const;
    bool is_quadratic() const { return order_ <= 2; }

    bool operator==(const HeckeCharacter& o) const;
    std::string to_string() const;

private:
    friend HeckeCharacter build_character(const QuadField&, const IntegralIdeal&, const std::vector<LocalData>&, int,
                                          std::optional<std::vector<int>>);
    HeckeCharacter(QuadField K) : K_(std::move(K)) {}

    struct Cache {
        std::mutex mutex;
        std::map<PrimePlace, std::int64_t> values;
    };

    QuadField K_;
    int order_ = 2;
    IntegralIdeal cond_;
    std::vector<LocalComponent> comps_;
    std::vector<int> inf_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Validates the data (local well-definedness, primitivity, global units) and returns the
// unique character with these local components. infinity_hint is needed only when the
// units do not determine the archimedean part.
HeckeCharacter build_character(const QuadField& K, const IntegralIdeal& conductor, const std::vector<LocalData>& local,
                               int order = 2, std::optional<std::vector<int>> infinity_hint = std::nullopt);

std::int64_t eval_ideal(const HeckeCharacter& chi, const IntegralIdeal& I);
// Product of the local components at the conductor, on x prime to the conductor.
std::int64_t xi_eval(const HeckeCharacter& chi, const QuadInt& x);
// Archimedean part on x.
std::int64_t infinity_eval(const HeckeCharacter& chi, const QuadInt& x);

HeckeCharacter conjugate_char(const HeckeCharacter& chi);
HeckeCharacter mul_chars(const HeckeCharacter& a, const HeckeCharacter& b);
HeckeCharacter trivial_character(const QuadField& K, int order = 2);

// Whether chi equals its Galois conjugate: compares the local data, then confirms on
// primes of norm <= bound.
bool is_base_change(const HeckeCharacter& chi, long bound = 100);

// +1 / -1 for a value exponent of a quadratic character.
int sign_of(std::int64_t exponent, int order);

// Kronecker character n -> (D/n) of a fundamental discriminant D (D = 1 is trivial).
class DirichletQuadratic {
public:
    explicit DirichletQuadratic(long D);
    long discriminant() const { return D_; }
    int operator()(long n) const;
    // Component at p of the idele class character, on a p-adic unit known mod p^v_p(D).
    int local_component(long p, long u) const;

private:
    long D_;
};

// The character a -> nu(N a) of K.
HeckeCharacter base_change_of_dirichlet(const DirichletQuadratic& nu, const QuadField& K);

// Every quadratic character with conductor exactly f.
std::vector<HeckeCharacter> quadratic_characters(const QuadField& K, const IntegralIdeal& f);

// Primitive local datum at v with values vals on the generators of the level-M group;
// nullopt when the function is unramified at v.
std::optional<LocalData> primitive_local_data(const QuadField& K, const PrimePlace& v, int M,
                                              const std::vector<std::int64_t>& vals, int order);

} // namespace hecke
