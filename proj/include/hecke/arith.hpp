#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Elementary number theory on 64-bit integers.
namespace hecke::arith {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Least nonnegative residue.
i64 mod(i64 a, i64 m);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 base, u64 exp, i64 m);
// Throws DomainError when a is not invertible modulo m.
i64 invmod(i64 a, i64 m);
i64 gcd(i64 a, i64 b);
i64 ipow(i64 base, int exp);

i64 isqrt(i64 n);
bool is_square(i64 n, i64* root = nullptr);

bool is_prime(i64 n);
bool is_squarefree(i64 n);
int valuation(i64 n, i64 p);

// Trial division; fine up to about 1e12.
std::vector<std::pair<i64, int>> factor(i64 n);
std::vector<i64> primes_up_to(i64 n);

// Kronecker symbol (a/n) for any integers a, n.
int kronecker(i64 a, i64 n);

// Square root of a modulo an odd prime p; a must be a residue.
i64 sqrt_mod_prime(i64 a, i64 p);
i64 primitive_root(i64 p);
// Multiplicative order of a modulo n (gcd(a, n) = 1).
i64 multiplicative_order(i64 a, i64 n);

bool is_fundamental_discriminant(i64 D);

} // namespace hecke::arith
