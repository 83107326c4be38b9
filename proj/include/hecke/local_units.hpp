#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hecke/ideals.hpp"
#include "hecke/quadfield.hpp"

namespace hecke {

// a + b*omega with coordinates reduced mod p^k.
struct Residue {
    std::int64_t a = 0;
    std::int64_t b = 0;
};

// Z_K / v^m, computed inside Z_K / p^k (k = m, or ceil(m/2) when v is ramified).
class ResidueRing {
public:
    ResidueRing(const QuadField& K, const PrimePlace& v, int m);

    const PrimePlace& place() const { return v_; }
    int precision() const { return m_; }
    std::int64_t modulus() const { return pk_; }

    Residue reduce(const QuadInt& x) const;
    Residue from_int(std::int64_t n) const;
    Residue one() const { return from_int(1); }
    Residue add(Residue x, Residue y) const;
    Residue sub(Residue x, Residue y) const;
    Residue mul(Residue x, Residue y) const;
    Residue pow(Residue x, std::uint64_t e) const;
    Residue conj(Residue x) const;
    // Inverse in Z_K / p^k; needs N(x) prime to p.
    Residue inverse(Residue x) const;

    // Canonical key of x mod v^level, level <= precision.
    std::int64_t key(Residue x, int level) const;
    std::int64_t key(Residue x) const { return key(x, m_); }
    bool is_unit(Residue x) const;
    bool equal(Residue x, Residue y) const { return key(x) == key(y); }
    QuadInt lift(Residue x) const;

    // Number of units of Z_K / v^m.
    std::int64_t unit_count() const;
    // One representative per unit class; only sensible for small rings.
    std::vector<Residue> units() const;

private:
    FieldTag tag_;
    PrimePlace v_;
    int m_;
    int k_;
    std::int64_t pk_;
    std::int64_t root_;  // split: omega mod p^m; ramified: r with pi = omega - r
};

// Generators of (Z_K / v^m)^x modulo the odd-order part at inert 2.
//   odd p, m = 1  : one generator of the cyclic residue field group
//   split 2       : -1 (m >= 2), 5 (m = 3)
//   inert 2       : -1, 1 + 2 mu (m >= 2), 1 - 4 mu (m = 3); mu of order three is kept apart
//   ramified 2    : 1 + pi (m >= 2), 1 + pi^3 (m >= 4), 1 + pi^4 (m = 5)
class LocalUnitGroup {
public:
    LocalUnitGroup(const QuadField& K, const PrimePlace& v, int m);

    const PrimePlace& place() const { return ring_.place(); }
    int precision() const { return ring_.precision(); }
    const ResidueRing& ring() const { return ring_; }
    const std::vector<QuadInt>& generators() const { return gens_; }
    const std::vector<std::int64_t>& orders() const { return orders_; }
    // The cube root of unity at an inert 2; characters of 2-power order kill it.
    const std::optional<QuadInt>& tame_generator() const { return tame_; }
    bool is_cyclic_odd() const { return place().p != 2; }
    std::int64_t size() const;

    // Exponents of u on generators() (the tame part is dropped).
    std::vector<std::int64_t> decompose(const QuadInt& u) const;
    std::vector<std::int64_t> decompose(Residue u) const;

    // Every unit class with its exponent vector (2-adic groups only).
    struct Element {
        Residue value;
        std::vector<std::int64_t> exponents;
    };
    const std::vector<Element>& elements() const;

private:
    std::int64_t discrete_log(Residue u) const;

    ResidueRing ring_;
    std::vector<QuadInt> gens_;
    std::vector<std::int64_t> orders_;
    std::optional<QuadInt> tame_;
    std::vector<Element> elements_;
    std::unordered_map<std::int64_t, std::size_t> index_;
    // odd p: baby steps of the generator
    std::unordered_map<std::int64_t, std::int64_t> baby_;
    std::int64_t baby_count_ = 0;
    Residue giant_;
};

// Cached per field.
std::shared_ptr<const LocalUnitGroup> local_unit_generators(const QuadField& K, const PrimePlace& v, int m);
std::vector<std::int64_t> decompose_unit(const QuadInt& u, const LocalUnitGroup& group);

} // namespace hecke
