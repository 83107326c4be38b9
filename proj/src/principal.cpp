#include <atomic>
#include <cmath>
#include <map>

#include "field_impl.hpp"
#include "hecke/arith.hpp"
#include "hecke/error.hpp"
#include "hecke/ideals.hpp"

namespace hecke {

namespace {
std::atomic<std::uint64_t> g_search_limit{50'000'000};
}

void set_search_limit(std::uint64_t max_candidates) { g_search_limit = max_candidates; }
std::uint64_t search_limit() { return g_search_limit; }

void norm_search(const QuadField& K, const BigInt& n, const std::function<bool(const QuadInt&)>& visit) {
    if (n <= 0) throw DomainError("norm_search needs a positive norm");
    const FieldTag t = K.tag();
    const BigInt D = K.disc();
    BigInt ymax;
    if (K.is_real()) {
        // Some generator has |sigma_1|, |sigma_2| within [sqrt(n/eps), sqrt(n*eps)],
        // so |y| sqrt(D) = |sigma_1 - sigma_2| <= 2 sqrt(n*eps).
        const QuadInt& eps = *K.fundamental_unit();
        BigInt eps_up = abs(eps.a()) + eps.b() * (arith::isqrt(K.d()) + 2);
        BigInt q = 4 * n * eps_up / D;
        ymax = sqrt(q) + 1;
    } else {
        BigInt q = 4 * n / abs(D);
        ymax = sqrt(q);
    }
    if (ymax > BigInt(static_cast<unsigned long>(search_limit()))) {
        throw ResourceLimit("norm search for " + n.get_str() + " in Q(sqrt " + std::to_string(K.d()) +
                            ") exceeds the search limit");
    }
    const int signs = K.is_real() ? 2 : 1;
    BigInt disc, s, x;
    for (BigInt y = -ymax; y <= ymax; ++y) {
        for (int k = 0; k < signs; ++k) {
            // x^2 + t x y + norm y^2 = +-n, discriminant y^2 D +- 4n
            disc = y * y * D + (k == 0 ? 4 * n : -4 * n);
            if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
            s = sqrt(disc);
            for (int sign = -1; sign <= 1; sign += 2) {
                x = -t.trace * y + sign * s;
                if (!mpz_even_p(x.get_mpz_t())) continue;
                x /= 2;
                if (visit(QuadInt(t, x, y))) return;
                if (s == 0) break;
            }
        }
    }
}

namespace {

// The primitive ideal [A, (-B + sqrt D)/2] as a binary quadratic form (A, B, C), B^2 - 4AC = D.
struct Form {
    BigInt A, B, C;
};

// Generator bookkeeping: the starting ideal equals (num / den) times the current one.
struct Scaled {
    QuadInt num;
    BigInt den;
};

BigInt floor_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

QuadInt theta(const QuadField& K, const Form& f) {
    // (-B + sqrt D)/2 = omega - (B + t)/2
    BigInt shift = (f.B + K.tag().trace) / 2;
    return K.omega() - K.from_int(shift);
}

void set_c(Form& f, const BigInt& D) { f.C = (f.B * f.B - D) / (4 * f.A); }

// B into (-A, A], or for small A in a real field into (s - 2A, s] with s = isqrt(D)
void normalize(Form& f, const BigInt& D, const BigInt& s, bool real) {
    BigInt twoA = 2 * f.A;
    if (real && f.A < s) {
        f.B = s - floor_mod(s - f.B, twoA);
    } else {
        f.B = f.A - floor_mod(f.A - f.B, twoA);
    }
    set_c(f, D);
}

bool is_reduced_real(const Form& f, const BigInt& s) {
    // |sqrt D - 2A| < B < sqrt D
    if (f.B > s || f.B <= 0) return false;
    BigInt twoA = 2 * f.A;
    return twoA <= s ? f.B + twoA > s : twoA - f.B <= s;
}

// One rho step: J = conj(J') * theta / C with J' = [|C|, theta].
void rho(const QuadField& K, Form& f, Scaled& g, const BigInt& D, const BigInt& s) {
    QuadInt th = theta(K, f);
    g.num = g.num * th;
    g.den *= f.C;
    BigInt c = gcd(gcd(g.num.a(), g.num.b()), g.den);
    if (c > 1) {
        g.num = K.element(g.num.a() / c, g.num.b() / c);
        g.den /= c;
    }
    Form n{abs(f.C), -f.B, 0};
    normalize(n, D, s, K.is_real());
    f = n;
}

QuadInt finish(const QuadField& K, const Scaled& g, const BigInt& content, const IntegralIdeal& I) {
    if (g.num.a() % g.den != 0 || g.num.b() % g.den != 0) throw std::logic_error("generator is not integral");
    QuadInt x = K.element(g.num.a() / g.den * content, g.num.b() / g.den * content);
    if (abs(x.norm()) != I.norm() || !contains(K, I, x)) throw std::logic_error("reduction produced a wrong generator");
    return x;
}

} // namespace

std::optional<QuadInt> is_principal(const QuadField& K, const IntegralIdeal& I) {
    if (I.is_one()) return K.one();
    // Split off the rational content; what is left is [A, omega - r].
    BigInt content = 1, A = 1, r = 0;
    auto absorb = [&](const BigInt& q, const BigInt& root) {
        // CRT: r = r mod A, r = root mod q
        BigInt u, v, gg;
        mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), A.get_mpz_t(), q.get_mpz_t());
        r = floor_mod(r + (root - r) * u * A, A * q);
        A *= q;
    };
    std::map<long, std::pair<int, int>> split_exps;
    for (const auto& [v, e] : I.factors()) {
        BigInt p = v.p;
        switch (v.kind) {
            case SplitKind::inert: {
                BigInt pe;
                mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
                content *= pe;
                break;
            }
            case SplitKind::ramified: {
                BigInt pe;
                mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
                content *= pe;
                if (e % 2 == 1) absorb(p, v.root);
                break;
            }
            case SplitKind::split:
                (v.label == 1 ? split_exps[v.p].first : split_exps[v.p].second) = e;
                break;
        }
    }
    for (const auto& [p, ab] : split_exps) {
        auto [a, b] = ab;
        int common = std::min(a, b);
        BigInt pc;
        mpz_ui_pow_ui(pc.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(common));
        content *= pc;
        int k = std::max(a, b) - common;
        if (k == 0) continue;
        PrimePlace v = place(K, p, a > b ? 1 : 2);
        BigInt pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        absorb(pk, lifted_root(K, v, k));
    }

    const BigInt D = K.disc();
    const bool real = K.is_real();
    const BigInt s = real ? BigInt(sqrt(D)) : BigInt(0);
    // omega - r = (-B + sqrt D)/2 with B = 2r - t
    Form f{A, 2 * r - K.tag().trace, 0};
    normalize(f, D, s, real);
    Scaled g{K.one(), 1};

    if (!real) {
        while (f.A != 1) {
            if (f.A <= f.C) return std::nullopt;
            rho(K, f, g, D, s);
        }
        return finish(K, g, content, I);
    }

    const std::uint64_t limit = search_limit();
    std::uint64_t steps = 0;
    auto tick = [&] {
        if (++steps > limit) throw ResourceLimit("ideal reduction in Q(sqrt " + std::to_string(K.d()) + ") exceeds the search limit");
    };
    while (f.A != 1 && !is_reduced_real(f, s)) {
        rho(K, f, g, D, s);
        tick();
    }
    const Form start = f;
    while (f.A != 1) {
        rho(K, f, g, D, s);
        tick();
        if (f.A == start.A && f.B == start.B) return std::nullopt;
    }
    return finish(K, g, content, I);
}

long compute_class_number(const QuadField& K) {
    double root = std::sqrt(static_cast<double>(std::labs(K.disc())));
    long bound = static_cast<long>(K.is_real() ? root / 2 : root * 2 / M_PI) + 1;
    std::vector<IntegralIdeal> gens;
    for (long p : arith::primes_up_to(bound)) {
        auto places = primes_above(K, p);
        if (places.front().kind == SplitKind::inert) continue;
        gens.push_back(IntegralIdeal::prime(places.front()));
    }
    std::vector<IntegralIdeal> reps{IntegralIdeal()};
    auto equivalent = [&](const IntegralIdeal& a, const IntegralIdeal& b) {
        return is_principal(K, a * conjugate_ideal(b)).has_value();
    };
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const auto& g : gens) {
            IntegralIdeal cand = reps[i] * g;
            bool known = false;
            for (const auto& r : reps) {
                if (equivalent(cand, r)) {
                    known = true;
                    break;
                }
            }
            if (!known) reps.push_back(cand);
        }
    }
    return static_cast<long>(reps.size());
}

} // namespace hecke
