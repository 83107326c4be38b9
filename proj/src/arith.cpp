#include "hecke/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hecke/error.hpp"

namespace hecke::arith {

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(mod(static_cast<i64>((static_cast<i128>(a) * b) % m), m));
}

i64 powmod(i64 base, u64 exp, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

i64 gcd(i64 a, i64 b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 invmod(i64 a, i64 m) {
    i64 old_r = mod(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw DomainError("not invertible: " + std::to_string(a) + " mod " + std::to_string(m));
    return mod(old_s, m);
}

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

i64 isqrt(i64 n) {
    if (n < 0) throw DomainError("isqrt of negative number");
    i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(i64 n, i64* root) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod(a, static_cast<u64>(d), n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int valuation(i64 n, i64 p) {
    if (n == 0) throw DomainError("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<std::pair<i64, int>> factor(i64 n) {
    std::vector<std::pair<i64, int>> out;
    if (n == 0) throw DomainError("cannot factor zero");
    n = std::llabs(n);
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(i64 n) {
    if (n == 0) return false;
    for (auto& [p, e] : factor(n)) {
        if (e > 1) return false;
    }
    return true;
}

std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
    for (i64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (i64 j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

int kronecker(i64 a, i64 b) {
    static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (b == 0) return std::llabs(a) == 1 ? 1 : 0;
    if ((a & 1) == 0 && (b & 1) == 0) return 0;
    int v = 0;
    while ((b & 1) == 0) {
        ++v;
        b /= 2;
    }
    int k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    while (true) {
        if (a == 0) return b > 1 ? 0 : k;
        v = 0;
        while ((a & 1) == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) k *= tab2[b & 7];
        if (a & b & 2) k = -k;
        i64 r = std::llabs(a);
        a = b % r;
        b = r;
    }
}

i64 sqrt_mod_prime(i64 a, i64 p) {
    a = mod(a, p);
    if (p == 2 || a == 0) return a;
    if (powmod(a, static_cast<u64>((p - 1) / 2), p) != 1)
        throw DomainError(std::to_string(a) + " is not a square mod " + std::to_string(p));
    i64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    i64 z = 2;
    while (powmod(z, static_cast<u64>((p - 1) / 2), p) != p - 1) ++z;
    i64 m = s;
    i64 c = powmod(z, static_cast<u64>(q), p);
    i64 t = powmod(a, static_cast<u64>(q), p);
    i64 r = powmod(a, static_cast<u64>((q + 1) / 2), p);
    while (t != 1) {
        i64 i = 0, t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        i64 b = c;
        for (i64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

i64 primitive_root(i64 p) {
    if (p == 2) return 1;
    auto fac = factor(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto& [q, e] : fac) {
            if (powmod(g, static_cast<u64>((p - 1) / q), p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw DomainError("no primitive root mod " + std::to_string(p));
}

i64 multiplicative_order(i64 a, i64 n) {
    if (gcd(a, n) != 1) throw DomainError("order of a non-unit");
    i64 phi = n;
    for (auto& [p, e] : factor(n)) phi = phi / p * (p - 1);
    i64 ord = phi;
    for (auto& [q, e] : factor(phi)) {
        while (ord % q == 0 && powmod(a, static_cast<u64>(ord / q), n) == 1) ord /= q;
    }
    return ord;
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 0) return false;
    if (mod(D, 4) == 1) return is_squarefree(D);
    if (mod(D, 4) != 0) return false;
    i64 m = D / 4;
    i64 r = mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(m);
}

} // namespace hecke::arith
