#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/characters.hpp"

namespace hecke {

// Inverse Euler factor at p as a polynomial in X = p^-s: coeffs[0] = 1.
struct LocalFactor {
    long p = 0;
    std::vector<std::int64_t> coeffs;
};

// Only quadratic characters are supported, so every coefficient is an integer.
LocalFactor local_factor(const HeckeCharacter& chi, long p);

struct CoeffTable {
    HeckeCharacter character;
    long N = 0;
    std::vector<std::int64_t> a;  // a[n] for 1 <= n <= N; a[0] unused
    std::string method;           // "euler_product" or "ideal_sum"

    std::int64_t operator[](long n) const { return a.at(static_cast<std::size_t>(n)); }
};

// Coefficients of L(s, chi) = sum a(n) n^-s for n <= N, by a multiplicative sieve over
// the Euler product. threads = 0 picks the hardware concurrency.
CoeffTable dirichlet_coeffs(const HeckeCharacter& chi, long N, unsigned threads = 0);

// Same coefficients, by summing chi over all integral ideals of norm <= N.
CoeffTable ideal_sum_oracle(const HeckeCharacter& chi, long N);

// First n where the tables differ, or 0.
long first_mismatch(const CoeffTable& x, const CoeffTable& y);

enum class Parity { odd, even };
enum class FormKind { holomorphic_weight_one, maass_even_cos, maass_even_sin };

std::string to_string(Parity p);
std::string to_string(FormKind k);

// The automorphic form attached to the induced representation.
struct FormDescriptor {
    long level = 0;
    long nebentypus = 1;  // discriminant of the quadratic central character
    Parity parity = Parity::odd;
    FormKind kind = FormKind::holomorphic_weight_one;
};

// Value of the central character at a prime p not dividing the level: (d_K/p) chi((p)).
int nebentypus_value(const HeckeCharacter& chi, long p);

// With a partner on a real field, an imaginary field's parity is read off the partner's
// signs and cross-checked against the intrinsic answer.
FormDescriptor induced_descriptor(const HeckeCharacter& chi, const HeckeCharacter* partner = nullptr);

// "n,a_n" lines with a header.
std::string to_csv(const CoeffTable& t);

} // namespace hecke
