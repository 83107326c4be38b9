#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace hecke {

using BigInt = mpz_class;

class IntegralIdeal;

// Just enough of a field to do ring arithmetic: omega^2 = trace * omega - norm.
struct FieldTag {
    long d = 0;
    long trace = 0;
    long norm = 0;
    bool operator==(const FieldTag&) const = default;
};

// Element a + b*omega of the ring of integers.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(FieldTag tag, BigInt a, BigInt b) : tag_(tag), a_(std::move(a)), b_(std::move(b)) {}

    const FieldTag& tag() const { return tag_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator*(const QuadInt& o) const;
    QuadInt operator-() const;
    bool operator==(const QuadInt& o) const;

    QuadInt conj() const;
    BigInt norm() const;
    BigInt trace() const;
    QuadInt pow(unsigned long e) const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    // Exact division; throws DomainError if o does not divide *this.
    QuadInt divide(const QuadInt& o) const;

    // "a+b*w" with w = omega.
    std::string to_string() const;

private:
    void check_same(const QuadInt& o) const;

    FieldTag tag_;
    BigInt a_ = 0;
    BigInt b_ = 0;
};

// Q(sqrt d) for squarefree d != 0, 1. Copies share one set of caches.
class QuadField {
public:
    explicit QuadField(long d);

    long d() const;
    long disc() const;
    FieldTag tag() const;
    bool is_real() const { return d() > 0; }
    int r1() const { return is_real() ? 2 : 0; }
    int r2() const { return is_real() ? 0 : 1; }
    int torsion_order() const;

    QuadInt element(const BigInt& a, const BigInt& b) const { return QuadInt(tag(), a, b); }
    QuadInt from_int(const BigInt& a) const { return element(a, 0); }
    QuadInt one() const { return from_int(1); }
    QuadInt omega() const { return element(0, 1); }
    // -1, i or a primitive sixth root of unity.
    QuadInt torsion_generator() const;

    // Fundamental unit > 1 of a real field.
    const std::optional<QuadInt>& fundamental_unit() const;
    int unit_norm() const;

    // Sign of the element under the real embedding sqrt(d) > 0 (k = 0) or sqrt(d) < 0 (k = 1).
    int sign_at(const QuadInt& x, int k) const;

    long class_number() const;

    bool operator==(const QuadField& o) const { return d() == o.d(); }

    struct Impl;
    const std::shared_ptr<Impl>& impl() const { return impl_; }

private:
    std::shared_ptr<Impl> impl_;
};

// Budget for lattice-point searches; exceeding it raises ResourceLimit.
void set_search_limit(std::uint64_t max_candidates);
std::uint64_t search_limit();

// A generator of I, or nothing when I is not principal.
std::optional<QuadInt> is_principal(const QuadField& K, const IntegralIdeal& I);

// Calls visit on one element of absolute norm n from each class of associates,
// stopping early when visit returns true.
void norm_search(const QuadField& K, const BigInt& n, const std::function<bool(const QuadInt&)>& visit);

} // namespace hecke
