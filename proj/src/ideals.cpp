#include "hecke/ideals.hpp"

#include <sstream>

#include "field_impl.hpp"
#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::split: return "split";
        case SplitKind::inert: return "inert";
        case SplitKind::ramified: return "ram";
    }
    return "?";
}

std::string PrimePlace::to_string() const {
    std::string s = std::to_string(p) + ":" + hecke::to_string(kind);
    if (kind == SplitKind::split) s += ":" + std::to_string(label);
    return s;
}

SplitKind split_kind(const QuadField& K, long p) {
    int k = arith::kronecker(K.disc(), p);
    if (k == 0) return SplitKind::ramified;
    return k == 1 ? SplitKind::split : SplitKind::inert;
}

std::vector<PrimePlace> primes_above(const QuadField& K, long p) {
    if (!arith::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    const FieldTag t = K.tag();
    SplitKind kind = split_kind(K, p);
    if (kind == SplitKind::inert) return {PrimePlace{p, kind, 0, 0, 0}};
    if (kind == SplitKind::ramified) {
        long r = (p == 2) ? arith::mod(t.norm, 2) : arith::mulmod(t.trace, arith::invmod(2, p), p);
        return {PrimePlace{p, kind, 0, r, r}};
    }
    long r1, r2;
    if (p == 2) {
        r1 = 0;
        r2 = 1;
    } else {
        long s = arith::sqrt_mod_prime(K.disc(), p);
        long inv2 = arith::invmod(2, p);
        r1 = arith::mulmod(arith::mod(t.trace + s, p), inv2, p);
        r2 = arith::mulmod(arith::mod(t.trace - s, p), inv2, p);
        if (r1 > r2) std::swap(r1, r2);
    }
    return {PrimePlace{p, kind, 1, r1, r2}, PrimePlace{p, kind, 2, r2, r1}};
}

PrimePlace place(const QuadField& K, long p, int label) {
    auto places = primes_above(K, p);
    for (auto& v : places) {
        if (v.label == label) return v;
    }
    if (places.size() == 1 && label <= 1) return places.front();
    throw DomainError("no place with label " + std::to_string(label) + " above " + std::to_string(p));
}

PrimePlace conjugate_place(const PrimePlace& v) {
    if (v.kind != SplitKind::split) return v;
    PrimePlace w = v;
    w.label = 3 - v.label;
    std::swap(w.root, w.conj_root);
    return w;
}

PrimePlace place_from_string(const QuadField& K, std::string_view s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 2 || parts.size() > 3) throw DomainError("bad place '" + std::string(s) + "'");
    long p;
    try {
        p = std::stol(parts[0]);
    } catch (const std::exception&) {
        throw DomainError("bad prime in place '" + std::string(s) + "'");
    }
    if (!arith::is_prime(p)) throw DomainError(parts[0] + " is not prime");
    SplitKind kind = split_kind(K, p);
    const std::string& k = parts[1];
    SplitKind want;
    if (k == "split")
        want = SplitKind::split;
    else if (k == "inert")
        want = SplitKind::inert;
    else if (k == "ram" || k == "ramified")
        want = SplitKind::ramified;
    else
        throw DomainError("unknown place kind '" + k + "'");
    if (want != kind) {
        throw DomainError(std::to_string(p) + " is " + hecke::to_string(kind) + " in Q(sqrt " + std::to_string(K.d()) +
                          "), not " + k);
    }
    int label = 0;
    if (kind == SplitKind::split) {
        if (parts.size() != 3) throw DomainError("split place needs a label: '" + std::string(s) + "'");
        label = std::stoi(parts[2]);
        if (label != 1 && label != 2) throw DomainError("split label must be 1 or 2");
    } else if (parts.size() == 3 && parts[2] != "0" && parts[2] != "1") {
        throw DomainError("non-split place takes no label: '" + std::string(s) + "'");
    }
    return place(K, p, label);
}

IntegralIdeal::IntegralIdeal(std::map<PrimePlace, int> factors) {
    for (auto& [v, e] : factors) {
        if (e < 0) throw DomainError("negative exponent in integral ideal");
        if (e > 0) factors_[v] = e;
    }
}

IntegralIdeal IntegralIdeal::prime(const PrimePlace& v, int exponent) { return IntegralIdeal({{v, exponent}}); }

int IntegralIdeal::exponent(const PrimePlace& v) const {
    auto it = factors_.find(v);
    return it == factors_.end() ? 0 : it->second;
}

BigInt IntegralIdeal::norm() const {
    BigInt n = 1;
    for (auto& [v, e] : factors_) {
        BigInt q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(v.p), static_cast<unsigned long>(v.f() * e));
        n *= q;
    }
    return n;
}

IntegralIdeal IntegralIdeal::operator*(const IntegralIdeal& o) const {
    IntegralIdeal r = *this;
    for (auto& [v, e] : o.factors_) r.factors_[v] += e;
    return r;
}

IntegralIdeal IntegralIdeal::pow(int e) const {
    if (e < 0) throw DomainError("negative power of an integral ideal");
    IntegralIdeal r;
    if (e == 0) return r;
    r = *this;
    for (auto& [v, m] : r.factors_) m *= e;
    return r;
}

bool IntegralIdeal::divides(const IntegralIdeal& o) const {
    for (auto& [v, e] : factors_) {
        if (o.exponent(v) < e) return false;
    }
    return true;
}

bool IntegralIdeal::coprime_to(const IntegralIdeal& o) const {
    for (auto& [v, e] : factors_) {
        if (o.exponent(v) > 0) return false;
    }
    return true;
}

std::string IntegralIdeal::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto& [v, e] : factors_) {
        if (!first) out << "*";
        first = false;
        out << v.to_string();
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

IntegralIdeal conjugate_ideal(const IntegralIdeal& I) {
    std::map<PrimePlace, int> f;
    for (auto& [v, e] : I.factors()) f[conjugate_place(v)] = e;
    return IntegralIdeal(f);
}

BigInt lifted_root(const QuadField& K, const PrimePlace& v, int k) {
    if (v.kind != SplitKind::split) throw DomainError("lifted_root needs a split place");
    const FieldTag t = K.tag();
    BigInt p = v.p, r = v.root, mod = p;
    int prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(prec));
        BigInt f = r * r - t.trace * r + t.norm;
        BigInt df = 2 * r - t.trace, inv;
        if (mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("Hensel lift failed");
        r = r - f * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    }
    return r;
}

namespace {

int bigint_valuation(BigInt n, long p) {
    if (n == 0) throw DomainError("valuation of zero");
    return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), BigInt(p).get_mpz_t()));
}

} // namespace

int valuation(const QuadField& K, const QuadInt& x, const PrimePlace& v) {
    if (x.is_zero()) throw DomainError("valuation of zero");
    switch (v.kind) {
        case SplitKind::inert: {
            int va = x.a() == 0 ? INT32_MAX : bigint_valuation(x.a(), v.p);
            int vb = x.b() == 0 ? INT32_MAX : bigint_valuation(x.b(), v.p);
            return std::min(va, vb);
        }
        case SplitKind::ramified:
            return bigint_valuation(x.norm(), v.p);
        case SplitKind::split: {
            int total = bigint_valuation(x.norm(), v.p);
            int j = 0;
            BigInt pk = 1;
            for (int k = 1; k <= total; ++k) {
                pk *= v.p;
                BigInt r = lifted_root(K, v, k);
                BigInt val = x.a() + x.b() * r;
                if (!mpz_divisible_p(val.get_mpz_t(), pk.get_mpz_t())) break;
                j = k;
            }
            return j;
        }
    }
    return 0;
}

bool contains(const QuadField& K, const IntegralIdeal& I, const QuadInt& x) {
    if (x.is_zero()) return true;
    for (auto& [v, e] : I.factors()) {
        if (valuation(K, x, v) < e) return false;
    }
    return true;
}

IntegralIdeal factor_principal(const QuadField& K, const QuadInt& x) {
    if (x.is_zero()) throw DomainError("cannot factor the zero ideal");
    BigInt n = abs(x.norm());
    if (!n.fits_slong_p() || n > BigInt("1000000000000")) throw ResourceLimit("norm too large to factor: " + n.get_str());
    std::map<PrimePlace, int> f;
    for (auto& [p, e] : arith::factor(n.get_si())) {
        auto places = primes_above(K, p);
        const PrimePlace& v = places.front();
        switch (v.kind) {
            case SplitKind::inert: f[v] = e / 2; break;
            case SplitKind::ramified: f[v] = e; break;
            case SplitKind::split: {
                int j = valuation(K, x, v);
                f[v] = j;
                f[places[1]] = e - j;
                break;
            }
        }
    }
    return IntegralIdeal(f);
}

std::pair<int, QuadInt> class_power(const QuadField& K, const PrimePlace& v) {
    auto& impl = *K.impl();
    auto key = std::make_pair(v.p, v.label);
    {
        std::lock_guard<std::mutex> lock(impl.power_mutex);
        auto it = impl.class_powers.find(key);
        if (it != impl.class_powers.end()) return it->second;
    }
    long h = K.class_number();
    std::pair<int, QuadInt> result;
    bool found = false;
    for (long k = 1; k <= h && !found; ++k) {
        if (h % k != 0) continue;
        auto g = is_principal(K, IntegralIdeal::prime(v, static_cast<int>(k)));
        if (g) {
            result = {static_cast<int>(k), *g};
            found = true;
        }
    }
    if (!found) throw std::logic_error("class order search failed for " + v.to_string());
    std::lock_guard<std::mutex> lock(impl.power_mutex);
    impl.class_powers.emplace(key, result);
    return result;
}

} // namespace hecke
