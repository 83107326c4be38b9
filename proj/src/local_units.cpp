#include "hecke/local_units.hpp"

#include <set>

#include "field_impl.hpp"
#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

using arith::i64;

ResidueRing::ResidueRing(const QuadField& K, const PrimePlace& v, int m) : tag_(K.tag()), v_(v), m_(m) {
    if (m < 1) throw DomainError("precision must be at least 1");
    k_ = (v.kind == SplitKind::ramified) ? (m + 1) / 2 : m;
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(v.p), static_cast<unsigned long>(k_));
    if (pk > BigInt("4611686018427387904")) throw ResourceLimit("residue ring modulus too large");
    pk_ = pk.get_si();
    if (v.kind == SplitKind::split) {
        BigInt r = lifted_root(K, v, m);
        root_ = r.get_si();
    } else {
        root_ = v.root;
    }
}

Residue ResidueRing::reduce(const QuadInt& x) const {
    if (!(x.tag() == tag_)) throw DomainError("element of a different field");
    BigInt a, b, m = pk_;
    mpz_fdiv_r(a.get_mpz_t(), x.a().get_mpz_t(), m.get_mpz_t());
    mpz_fdiv_r(b.get_mpz_t(), x.b().get_mpz_t(), m.get_mpz_t());
    return Residue{a.get_si(), b.get_si()};
}

Residue ResidueRing::from_int(i64 n) const { return Residue{arith::mod(n, pk_), 0}; }

Residue ResidueRing::add(Residue x, Residue y) const { return Residue{arith::mod(x.a + y.a, pk_), arith::mod(x.b + y.b, pk_)}; }

Residue ResidueRing::sub(Residue x, Residue y) const { return Residue{arith::mod(x.a - y.a, pk_), arith::mod(x.b - y.b, pk_)}; }

Residue ResidueRing::mul(Residue x, Residue y) const {
    using arith::mulmod;
    i64 bb = mulmod(x.b, y.b, pk_);
    i64 a = arith::mod(mulmod(x.a, y.a, pk_) - mulmod(bb, arith::mod(tag_.norm, pk_), pk_), pk_);
    i64 b = arith::mod(mulmod(x.a, y.b, pk_) + mulmod(x.b, y.a, pk_) + mulmod(bb, arith::mod(tag_.trace, pk_), pk_), pk_);
    return Residue{a, b};
}

Residue ResidueRing::pow(Residue x, std::uint64_t e) const {
    Residue r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Residue ResidueRing::conj(Residue x) const {
    return Residue{arith::mod(x.a + x.b * tag_.trace, pk_), arith::mod(-x.b, pk_)};
}

Residue ResidueRing::inverse(Residue x) const {
    using arith::mulmod;
    i64 n = arith::mod(mulmod(x.a, x.a, pk_) + mulmod(mulmod(x.a, x.b, pk_), arith::mod(tag_.trace, pk_), pk_) +
                           mulmod(mulmod(x.b, x.b, pk_), arith::mod(tag_.norm, pk_), pk_),
                       pk_);
    i64 inv = arith::invmod(n, pk_);
    Residue c = conj(x);
    return Residue{mulmod(c.a, inv, pk_), mulmod(c.b, inv, pk_)};
}

i64 ResidueRing::key(Residue x, int level) const {
    if (level < 0 || level > m_) throw DomainError("key level out of range");
    const i64 p = v_.p;
    switch (v_.kind) {
        case SplitKind::split: {
            i64 q = arith::ipow(p, level);
            return arith::mod(arith::mulmod(x.b, root_, pk_) + x.a, pk_) % q;
        }
        case SplitKind::inert: {
            i64 q = arith::ipow(p, level);
            return (x.a % q) * q + (x.b % q);
        }
        case SplitKind::ramified: {
            // x = (a + b r) + b pi
            i64 qa = arith::ipow(p, (level + 1) / 2), qb = arith::ipow(p, level / 2);
            i64 A = arith::mod(x.a + arith::mulmod(x.b, root_, pk_), pk_) % qa;
            return A * qb + x.b % qb;
        }
    }
    return 0;
}

bool ResidueRing::is_unit(Residue x) const { return key(x, 1) != 0; }

QuadInt ResidueRing::lift(Residue x) const { return QuadInt(tag_, x.a, x.b); }

i64 ResidueRing::unit_count() const {
    i64 q = v_.norm();
    return arith::ipow(q, m_ - 1) * (q - 1);
}

std::vector<Residue> ResidueRing::units() const {
    std::vector<Residue> out;
    const i64 p = v_.p;
    switch (v_.kind) {
        case SplitKind::split:
            for (i64 c = 0; c < arith::ipow(p, m_); ++c) {
                if (c % p != 0) out.push_back(Residue{c, 0});
            }
            break;
        case SplitKind::inert:
            for (i64 a = 0; a < pk_; ++a) {
                for (i64 b = 0; b < pk_; ++b) {
                    if (a % p != 0 || b % p != 0) out.push_back(Residue{a, b});
                }
            }
            break;
        case SplitKind::ramified: {
            i64 qa = arith::ipow(p, (m_ + 1) / 2), qb = arith::ipow(p, m_ / 2);
            for (i64 A = 0; A < qa; ++A) {
                if (A % p == 0) continue;
                for (i64 B = 0; B < qb; ++B) {
                    out.push_back(Residue{arith::mod(A - arith::mulmod(B, root_, pk_), pk_), B});
                }
            }
            break;
        }
    }
    return out;
}

namespace {

i64 residue_order(const ResidueRing& R, Residue x, i64 cap) {
    Residue y = x;
    const i64 one = R.key(R.one());
    for (i64 n = 1; n <= cap; ++n) {
        if (R.key(y) == one) return n;
        y = R.mul(y, x);
    }
    throw std::logic_error("element order exceeds " + std::to_string(cap));
}

// Solves x^2 + x + 1 = 0 in Z_K / 2^k by Newton's method from omega.
Residue cube_root_of_unity(const ResidueRing& R, const QuadField& K) {
    Residue x = R.reduce(K.omega());
    for (int i = 0; i < R.precision() + 1; ++i) {
        Residue f = R.add(R.add(R.mul(x, x), x), R.one());
        Residue df = R.add(R.add(x, x), R.one());
        x = R.sub(x, R.mul(f, R.inverse(df)));
    }
    return x;
}

} // namespace

LocalUnitGroup::LocalUnitGroup(const QuadField& K, const PrimePlace& v, int m) : ring_(K, v, m) {
    if (v.p != 2) {
        if (m != 1) {
            throw DomainError("precision " + std::to_string(m) + " at odd place " + v.to_string() +
                              " is outside the supported range (m = 1)");
        }
        const i64 n = v.norm() - 1;
        auto fac = arith::factor(n);
        auto has_full_order = [&](Residue g) {
            if (!ring_.is_unit(g)) return false;
            for (auto& [q, e] : fac) {
                if (ring_.key(ring_.pow(g, static_cast<std::uint64_t>(n / q))) == ring_.key(ring_.one())) return false;
            }
            return true;
        };
        Residue g{};
        bool found = false;
        if (v.kind == SplitKind::inert) {
            for (i64 b = 1; b < v.p && !found; ++b) {
                for (i64 a = 0; a < v.p && !found; ++a) {
                    if (has_full_order(Residue{a, b})) {
                        g = Residue{a, b};
                        found = true;
                    }
                }
            }
        } else {
            g = ring_.from_int(arith::primitive_root(v.p));
            found = has_full_order(g);
        }
        if (!found) throw std::logic_error("no generator of the residue field at " + v.to_string());
        gens_.push_back(ring_.lift(g));
        orders_.push_back(n);
        baby_count_ = arith::isqrt(n) + 1;
        Residue x = ring_.one();
        for (i64 j = 0; j < baby_count_; ++j) {
            baby_.emplace(ring_.key(x), j);
            x = ring_.mul(x, g);
        }
        giant_ = ring_.inverse(x);
        return;
    }

    std::vector<i64> expected;
    switch (v.kind) {
        case SplitKind::split:
            if (m > 3) throw DomainError("precision above 3 at a split place over 2 is outside the supported range");
            if (m >= 2) {
                gens_.push_back(K.from_int(-1));
                expected.push_back(2);
            }
            if (m == 3) {
                gens_.push_back(K.from_int(5));
                expected.push_back(2);
            }
            break;
        case SplitKind::inert: {
            if (m > 3) throw DomainError("precision above 3 at an inert place over 2 is outside the supported range");
            Residue mu = cube_root_of_unity(ring_, K);
            tame_ = ring_.lift(mu);
            QuadInt mu_q = *tame_;
            if (m >= 2) {
                gens_.push_back(K.from_int(-1));
                gens_.push_back(K.one() + K.from_int(2) * mu_q);
                expected.push_back(2);
                expected.push_back(m == 2 ? 2 : 4);
            }
            if (m == 3) {
                gens_.push_back(K.one() - K.from_int(4) * mu_q);
                expected.push_back(2);
            }
            break;
        }
        case SplitKind::ramified: {
            if (m > 5) throw DomainError("precision above 5 at a ramified place over 2 is outside the supported range");
            QuadInt pi = K.omega() - K.from_int(v.root);
            if (m >= 2) {
                gens_.push_back(K.one() + pi);
                expected.push_back(m == 2 ? 2 : 4);
            }
            if (m >= 4) {
                gens_.push_back(K.one() + pi.pow(3));
                expected.push_back(2);
            }
            if (m == 5) {
                gens_.push_back(K.one() + pi.pow(4));
                expected.push_back(2);
            }
            break;
        }
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        i64 ord = residue_order(ring_, ring_.reduce(gens_[i]), 64);
        if (ord != expected[i]) {
            throw std::logic_error("generator " + gens_[i].to_string() + " at " + v.to_string() + " has order " +
                                   std::to_string(ord) + ", expected " + std::to_string(expected[i]));
        }
    }
    orders_ = expected;

    // Enumerate the generated group and check it is everything.
    std::vector<Element> elems{Element{ring_.one(), std::vector<i64>(gens_.size(), 0)}};
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        Residue g = ring_.reduce(gens_[i]);
        std::vector<Element> next;
        for (const auto& e : elems) {
            Residue x = e.value;
            for (i64 j = 0; j < orders_[i]; ++j) {
                Element n = e;
                n.value = x;
                n.exponents[i] = j;
                next.push_back(n);
                x = ring_.mul(x, g);
            }
        }
        elems = std::move(next);
    }
    if (tame_) {
        Residue mu = ring_.reduce(*tame_);
        std::vector<Element> next;
        for (const auto& e : elems) {
            Residue x = e.value;
            for (int j = 0; j < 3; ++j) {
                next.push_back(Element{x, e.exponents});
                x = ring_.mul(x, mu);
            }
        }
        elems = std::move(next);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!index_.emplace(ring_.key(elems[i].value), i).second) {
            throw std::logic_error("local generators at " + v.to_string() + " are not independent");
        }
    }
    if (static_cast<i64>(elems.size()) != ring_.unit_count()) {
        throw std::logic_error("local generators at " + v.to_string() + " do not generate the unit group");
    }
    elements_ = std::move(elems);
}

i64 LocalUnitGroup::size() const {
    i64 s = tame_ ? 3 : 1;
    for (i64 o : orders_) s *= o;
    return s;
}

const std::vector<LocalUnitGroup::Element>& LocalUnitGroup::elements() const {
    if (is_cyclic_odd()) throw DomainError("element table is only kept for places over 2");
    return elements_;
}

i64 LocalUnitGroup::discrete_log(Residue u) const {
    Residue y = u;
    const i64 n = orders_.front();
    for (i64 i = 0; i * baby_count_ <= n; ++i) {
        auto it = baby_.find(ring_.key(y));
        if (it != baby_.end()) return arith::mod(i * baby_count_ + it->second, n);
        y = ring_.mul(y, giant_);
    }
    throw std::logic_error("discrete log failed");
}

std::vector<i64> LocalUnitGroup::decompose(Residue u) const {
    if (!ring_.is_unit(u)) throw DomainError("not a unit at " + place().to_string());
    if (is_cyclic_odd()) return {discrete_log(u)};
    auto it = index_.find(ring_.key(u));
    if (it == index_.end()) throw std::logic_error("unit missing from table");
    return elements_[it->second].exponents;
}

std::vector<i64> LocalUnitGroup::decompose(const QuadInt& u) const { return decompose(ring_.reduce(u)); }

std::vector<i64> decompose_unit(const QuadInt& u, const LocalUnitGroup& group) { return group.decompose(u); }

std::shared_ptr<const LocalUnitGroup> local_unit_generators(const QuadField& K, const PrimePlace& v, int m) {
    auto& impl = *K.impl();
    auto key = std::make_tuple(v.p, v.label, m);
    {
        std::lock_guard<std::mutex> lock(impl.group_mutex);
        auto it = impl.unit_groups.find(key);
        if (it != impl.unit_groups.end()) return it->second;
    }
    auto g = std::make_shared<const LocalUnitGroup>(K, v, m);
    std::lock_guard<std::mutex> lock(impl.group_mutex);
    return impl.unit_groups.emplace(key, g).first->second;
}

} // namespace hecke
