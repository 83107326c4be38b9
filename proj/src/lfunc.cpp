#include "hecke/lfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

using arith::i64;

namespace {

void require_quadratic(const HeckeCharacter& chi) {
    if (!chi.is_quadratic()) throw DomainError("L-series coefficients need a quadratic character");
}

int sign_at(const HeckeCharacter& chi, const PrimePlace& v) { return sign_of(chi.value_at(v), chi.order()); }

std::vector<i64> poly_mul(const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Power series coefficients of 1 / poly up to X^k.
std::vector<i64> inverse_series(const std::vector<i64>& poly, int k) {
    std::vector<i64> b(static_cast<std::size_t>(k + 1), 0);
    b[0] = 1;
    for (int n = 1; n <= k; ++n) {
        i64 s = 0;
        for (std::size_t j = 1; j < poly.size() && static_cast<int>(j) <= n; ++j) s -= poly[j] * b[n - j];
        b[n] = s;
    }
    return b;
}

} // namespace

LocalFactor local_factor(const HeckeCharacter& chi, long p) {
    require_quadratic(chi);
    LocalFactor f{p, {1}};
    for (const auto& v : primes_above(chi.field(), p)) {
        if (chi.conductor().exponent(v) > 0) continue;
        const i64 s = sign_at(chi, v);
        std::vector<i64> lin = v.f() == 2 ? std::vector<i64>{1, 0, -s} : std::vector<i64>{1, -s};
        f.coeffs = poly_mul(f.coeffs, lin);
    }
    return f;
}

CoeffTable dirichlet_coeffs(const HeckeCharacter& chi, long N, unsigned threads) {
    require_quadratic(chi);
    if (N < 1) throw DomainError("N must be positive");
    const auto primes = arith::primes_up_to(N);
    // series[i][k] = coefficient at primes[i]^k
    std::vector<std::vector<i64>> series(primes.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < primes.size(); i += step) {
            const long p = primes[i];
            int k = 0;
            for (long q = p; q <= N; q *= p) {
                ++k;
                if (q > N / p) break;
            }
            if (split_kind(chi.field(), p) == SplitKind::inert && k < 2) {
                series[i] = std::vector<i64>(static_cast<std::size_t>(k + 1), 0);
                series[i][0] = 1;
                continue;
            }
            series[i] = inverse_series(local_factor(chi, p).coeffs, k);
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, primes.size() / 64)));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& t : pool) t.join();
    }

    std::vector<i64> spf_index(static_cast<std::size_t>(N + 1), -1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (long m = primes[i]; m <= N; m += primes[i]) {
            if (spf_index[m] < 0) spf_index[m] = static_cast<i64>(i);
        }
    }
    CoeffTable t{chi, N, std::vector<i64>(static_cast<std::size_t>(N + 1), 0), "euler_product"};
    t.a[1] = 1;
    for (long n = 2; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(spf_index[n]);
        const long p = primes[i];
        long m = n;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        t.a[n] = t.a[m] * series[i][k];
    }
    return t;
}

CoeffTable ideal_sum_oracle(const HeckeCharacter& chi, long N) {
    require_quadratic(chi);
    if (N < 1) throw DomainError("N must be positive");
    struct Prime {
        long norm;
        int sign;
    };
    std::vector<Prime> list;
    for (long p : arith::primes_up_to(N)) {
        for (const auto& v : primes_above(chi.field(), p)) {
            if (v.norm() > N || chi.conductor().exponent(v) > 0) continue;
            list.push_back(Prime{v.norm(), sign_at(chi, v)});
        }
    }
    std::sort(list.begin(), list.end(), [](const Prime& a, const Prime& b) { return a.norm < b.norm; });
    CoeffTable t{chi, N, std::vector<i64>(static_cast<std::size_t>(N + 1), 0), "ideal_sum"};
    std::function<void(std::size_t, long, int)> rec = [&](std::size_t i, long norm, int sign) {
        t.a[norm] += sign;
        for (std::size_t j = i; j < list.size(); ++j) {
            if (norm > N / list[j].norm) break;
            long nn = norm;
            int s = sign;
            while (nn <= N / list[j].norm) {
                nn *= list[j].norm;
                s *= list[j].sign;
                rec(j + 1, nn, s);
            }
        }
    };
    rec(0, 1, 1);
    return t;
}

long first_mismatch(const CoeffTable& x, const CoeffTable& y) {
    const long n = std::min(x.N, y.N);
    for (long i = 1; i <= n; ++i) {
        if (x.a[i] != y.a[i]) return i;
    }
    return 0;
}

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::holomorphic_weight_one: return "holomorphic_weight_one";
        case FormKind::maass_even_cos: return "maass_even_cos";
        case FormKind::maass_even_sin: return "maass_even_sin";
    }
    return "?";
}

int nebentypus_value(const HeckeCharacter& chi, long p) {
    require_quadratic(chi);
    int s = 1;
    for (const auto& v : primes_above(chi.field(), p)) {
        if (chi.conductor().exponent(v) > 0) throw DomainError("p divides the level");
        s *= sign_at(chi, v);
    }
    int k = arith::kronecker(chi.field().disc(), p);
    if (k == 0) throw DomainError("p divides the level");
    return k * s;
}

FormDescriptor induced_descriptor(const HeckeCharacter& chi, const HeckeCharacter* partner) {
    require_quadratic(chi);
    const QuadField& K = chi.field();
    FormDescriptor out;
    BigInt level = BigInt(std::labs(K.disc())) * chi.conductor().norm();
    if (!level.fits_slong_p()) throw ResourceLimit("level too large");
    out.level = level.get_si();

    // central character: fit (D/p) with D | level on good primes
    std::vector<long> good;
    for (long p = 2; good.size() < 40 && p < 100000; ++p) {
        if (arith::is_prime(p) && out.level % p != 0) good.push_back(p);
    }
    std::vector<int> values;
    for (long p : good) values.push_back(nebentypus_value(chi, p));
    std::vector<long> divisors{1};
    for (auto& [q, e] : arith::factor(out.level)) {
        const std::size_t n = divisors.size();
        long qk = 1;
        for (int j = 1; j <= e; ++j) {
            qk *= q;
            for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * qk);
        }
    }
    std::vector<long> fits;
    for (long k : divisors) {
        for (long D : {k, -k}) {
            if (D == -1 || (D != 1 && !arith::is_fundamental_discriminant(D))) continue;
            bool ok = true;
            for (std::size_t i = 0; i < good.size() && ok; ++i) ok = arith::kronecker(D, good[i]) == values[i];
            if (ok) fits.push_back(D);
        }
    }
    if (fits.size() != 1) throw Ambiguous("central character not determined by the sampled primes");
    out.nebentypus = fits.front();

    if (K.is_real()) {
        const auto& inf = chi.infinity_type();
        out.parity = inf[0] != inf[1] ? Parity::odd : Parity::even;
        if (out.parity == Parity::even) out.kind = inf[0] ? FormKind::maass_even_sin : FormKind::maass_even_cos;
    } else {
        // complex conjugation acts through the Galois group of K, so rho(c) has eigenvalues +1, -1
        out.parity = Parity::odd;
        if (partner && partner->field().is_real()) {
            const auto& inf = partner->infinity_type();
            Parity via_partner = inf[0] != inf[1] ? Parity::odd : Parity::even;
            if (via_partner != out.parity) throw std::logic_error("partner parity disagrees with the imaginary field");
        }
    }
    if (out.parity == Parity::odd) out.kind = FormKind::holomorphic_weight_one;
    return out;
}

std::string to_csv(const CoeffTable& t) {
    std::ostringstream out;
    out << "n,a_n\n";
    for (long n = 1; n <= t.N; ++n) out << n << "," << t.a[n] << "\n";
    return out.str();
}

} // namespace hecke
