#include "hecke/equiv.hpp"

#include <functional>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

using arith::i64;

QuadField partner_field(const HeckeCharacter& chi, const PartnerOptions& opts) {
    if (!chi.is_quadratic()) throw DomainError("partner search needs a quadratic character");
    const QuadField& K = chi.field();
    HeckeCharacter delta = mul_chars(chi, conjugate_char(chi));
    if (delta.is_trivial()) throw DomainError("character is a base change and has no partner field");

    // delta(v) = (D_M / N v) at split and ramified p; inert p carry no information
    std::vector<std::pair<long, int>> samples;
    for (long p : arith::primes_up_to(opts.prime_bound)) {
        const PrimePlace v = primes_above(K, p).front();
        if (v.kind == SplitKind::inert || delta.conductor().exponent(v) > 0) continue;
        samples.emplace_back(p, sign_of(delta.value_at(v), delta.order()));
    }
    BigInt bound = BigInt(std::labs(K.disc())) * chi.conductor().norm() * chi.conductor().norm();
    if (!bound.fits_slong_p() || bound > 100000000) throw ResourceLimit("partner discriminant range too large");
    const long B = bound.get_si();
    std::vector<long> fits;
    for (long k = 3; k <= B; ++k) {
        for (long D : {k, -k}) {
            if (D == K.disc()) continue;
            bool ok = true;
            for (auto& [p, s] : samples) {
                if (arith::kronecker(D, p) != s) {
                    ok = false;
                    break;
                }
            }
            if (ok && arith::is_fundamental_discriminant(D)) fits.push_back(D);
        }
    }
    if (fits.empty()) throw DomainError("no quadratic field matches chi * chi^c");
    if (fits.size() > 1) {
        throw Ambiguous("primes up to " + std::to_string(opts.prime_bound) + " leave " + std::to_string(fits.size()) +
                        " candidate partner fields (e.g. " + std::to_string(fits[0]) + ", " + std::to_string(fits[1]) +
                        ")");
    }
    const long D = fits.front();
    return QuadField(arith::mod(D, 4) == 1 ? D : D / 4);
}

namespace {

// Ideals of norm n, as lists of (place, exponent).
std::vector<IntegralIdeal> ideals_of_norm(const QuadField& M, long n) {
    std::vector<std::vector<std::map<PrimePlace, int>>> per_prime;
    for (auto& [p, e] : arith::factor(n)) {
        auto places = primes_above(M, p);
        std::vector<std::map<PrimePlace, int>> opts;
        switch (places.front().kind) {
            case SplitKind::split:
                for (int i = e; i >= 0; --i) {
                    std::map<PrimePlace, int> f;
                    if (i > 0) f[places[0]] = i;
                    if (e - i > 0) f[places[1]] = e - i;
                    opts.push_back(f);
                }
                break;
            case SplitKind::inert:
                if (e % 2 == 0) opts.push_back({{places[0], e / 2}});
                break;
            case SplitKind::ramified: opts.push_back({{places[0], e}}); break;
        }
        if (opts.empty()) return {};
        per_prime.push_back(opts);
    }
    std::vector<IntegralIdeal> out;
    std::map<PrimePlace, int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == per_prime.size()) {
            out.emplace_back(cur);
            return;
        }
        for (const auto& o : per_prime[i]) {
            auto saved = cur;
            cur.insert(o.begin(), o.end());
            rec(i + 1);
            cur = saved;
        }
    };
    rec(0);
    return out;
}

} // namespace

EquivCertificate verify_equiv(const HeckeCharacter& chi, const HeckeCharacter& eta, long N) {
    if (chi.field() == eta.field()) throw DomainError("characters must live on different fields");
    EquivCertificate c;
    c.d_K = chi.field().d();
    c.d_M = eta.field().d();
    c.conductor_chi = chi.conductor().to_string();
    c.conductor_eta = eta.conductor().to_string();
    c.N = N;
    CoeffTable a = dirichlet_coeffs(chi, N), b = dirichlet_coeffs(eta, N);
    c.first_mismatch = first_mismatch(a, b);
    c.oracle_agrees = first_mismatch(a, ideal_sum_oracle(chi, N)) == 0 && first_mismatch(b, ideal_sum_oracle(eta, N)) == 0;
    // the parity cross-check only makes sense for a genuine partner
    const bool same = c.first_mismatch == 0;
    FormDescriptor fk = induced_descriptor(chi, same ? &eta : nullptr);
    FormDescriptor fm = induced_descriptor(eta, same ? &chi : nullptr);
    c.level_chi = fk.level;
    c.level_eta = fm.level;
    c.form = fk;
    c.matched = c.first_mismatch == 0 && fk.level == fm.level && fk.parity == fm.parity && fk.kind == fm.kind &&
                fk.nebentypus == fm.nebentypus;
    return c;
}

Partner construct_partner(const HeckeCharacter& chi, const PartnerOptions& opts) {
    QuadField M = partner_field(chi, opts);
    BigInt level = BigInt(std::labs(chi.field().disc())) * chi.conductor().norm();
    const long dM = std::labs(M.disc());
    if (level % dM != 0) throw DomainError("partner field discriminant does not divide the level");
    BigInt target = level / dM;
    if (!target.fits_slong_p()) throw ResourceLimit("target conductor norm too large");

    const long quick = std::min<long>(opts.coeff_bound, 500);
    CoeffTable ref = dirichlet_coeffs(chi, opts.coeff_bound);
    std::vector<HeckeCharacter> matches;
    long searched = 0;
    for (const auto& f : ideals_of_norm(M, target.get_si())) {
        for (auto& eta : quadratic_characters(M, f)) {
            ++searched;
            if (first_mismatch(ref, dirichlet_coeffs(eta, quick)) != 0) continue;
            if (first_mismatch(ref, dirichlet_coeffs(eta, opts.coeff_bound)) == 0) matches.push_back(eta);
        }
    }
    if (matches.empty()) {
        throw DomainError("no character of Q(sqrt " + std::to_string(M.d()) + ") among " + std::to_string(searched) +
                          " candidates matches");
    }
    Partner out{matches.front(), verify_equiv(chi, matches.front(), opts.coeff_bound)};
    out.certificate.candidates_searched = searched;
    out.certificate.candidates_matched = static_cast<long>(matches.size());
    return out;
}

} // namespace hecke
