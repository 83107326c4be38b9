#include "hecke/characters.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

using arith::i64;

namespace {

i64 dot(const std::vector<i64>& a, const std::vector<i64>& b, i64 order) {
    i64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = arith::mod(s + arith::mulmod(a[i], b[i], order), order);
    return s;
}

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

// Whether the component is nontrivial on the units congruent to 1 mod v^(m-1).
bool nontrivial_at_top(const LocalComponent& c) {
    const int m = c.precision();
    if (m == 1) {
        for (i64 e : c.exponents()) {
            if (e != 0) return true;
        }
        return false;
    }
    const auto& R = c.group().ring();
    const i64 one = R.key(R.one(), m - 1);
    for (const auto& el : c.group().elements()) {
        if (R.key(el.value, m - 1) == one && c.value(el.value) != 0) return true;
    }
    return false;
}

} // namespace

LocalComponent::LocalComponent(std::shared_ptr<const LocalUnitGroup> group, std::vector<i64> exponents, int order)
    : group_(std::move(group)), exps_(std::move(exponents)), order_(order) {
    for (auto& e : exps_) e = arith::mod(e, order_);
    const auto& R = group_->ring();
    if (group_->is_cyclic_odd()) {
        const i64 n = group_->orders().front();
        i64 w = 1;
        while (n % (2 * w) == 0 && 2 * w <= order_) w *= 2;
        power_ = static_cast<std::uint64_t>(n / w);
        Residue h = R.pow(R.reduce(group_->generators().front()), power_);
        Residue x = R.one();
        for (i64 j = 0; j < w; ++j) {
            values_.emplace(R.key(x), arith::mod(exps_.front() * j, order_));
            x = R.mul(x, h);
        }
    } else {
        for (const auto& el : group_->elements()) values_.emplace(R.key(el.value), dot(exps_, el.exponents, order_));
    }
}

i64 LocalComponent::value(Residue u) const {
    const auto& R = group_->ring();
    if (!R.is_unit(u)) throw DomainError("element is not a unit at " + place().to_string());
    auto it = values_.find(R.key(R.pow(u, power_)));
    if (it == values_.end()) {
        throw ConstraintViolation("local_well_defined",
                                  "local component at " + place().to_string() + " is not a character of order " +
                                      std::to_string(order_));
    }
    return it->second;
}

i64 LocalComponent::value(const QuadInt& u) const { return value(group_->ring().reduce(u)); }

int sign_of(i64 exponent, int order) {
    exponent = arith::mod(exponent, order);
    if (exponent == 0) return 1;
    if (2 * exponent == order) return -1;
    throw DomainError("value is not +-1");
}

const LocalComponent* HeckeCharacter::component(const PrimePlace& v) const {
    for (const auto& c : comps_) {
        if (c.place() == v) return &c;
    }
    return nullptr;
}

std::vector<LocalData> HeckeCharacter::local_data() const {
    std::vector<LocalData> out;
    for (const auto& c : comps_) out.push_back(LocalData{c.place(), c.precision(), c.exponents()});
    return out;
}

bool HeckeCharacter::is_trivial() const {
    if (!cond_.is_one()) return false;
    for (int s : inf_) {
        if (s != 0) return false;
    }
    return true;
}

bool HeckeCharacter::operator==(const HeckeCharacter& o) const {
    if (!(K_ == o.K_) || order_ != o.order_ || !(cond_ == o.cond_) || inf_ != o.inf_) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (!(comps_[i].place() == o.comps_[i].place()) || comps_[i].exponents() != o.comps_[i].exponents())
            return false;
    }
    return true;
}

std::string HeckeCharacter::to_string() const {
    std::ostringstream out;
    out << "chi(d=" << K_.d() << ", order=" << order_ << ", conductor=" << cond_.to_string();
    for (const auto& c : comps_) {
        out << ", " << c.place().to_string() << "^" << c.precision() << "[";
        for (std::size_t i = 0; i < c.exponents().size(); ++i) out << (i ? "," : "") << c.exponents()[i];
        out << "]";
    }
    if (!inf_.empty()) out << ", inf=(" << inf_[0] << "," << inf_[1] << ")";
    out << ")";
    return out.str();
}

i64 xi_eval(const HeckeCharacter& chi, const QuadInt& x) {
    i64 s = 0;
    for (const auto& c : chi.components()) s += c.value(x);
    return arith::mod(s, chi.order());
}

i64 infinity_eval(const HeckeCharacter& chi, const QuadInt& x) {
    const auto& inf = chi.infinity_type();
    i64 s = 0;
    for (std::size_t k = 0; k < inf.size(); ++k) {
        if (inf[k] && chi.field().sign_at(x, static_cast<int>(k)) < 0) s += chi.order() / 2;
    }
    return arith::mod(s, chi.order());
}

i64 HeckeCharacter::value_at(const PrimePlace& v) const {
    if (cond_.exponent(v) > 0) throw DomainError("place " + v.to_string() + " divides the conductor");
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->values.find(v);
        if (it != cache_->values.end()) return it->second;
    }
    i64 value = 0;
    if (order_ > 1) {
        // chi((beta)) chi_inf(beta) xi(beta) = 1 with (beta) = v^k
        auto [k, beta] = class_power(K_, v);
        i64 e = arith::mod(-(infinity_eval(*this, beta) + xi_eval(*this, beta)), order_);
        value = arith::mulmod(e, arith::invmod(k, order_), order_);
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->values.emplace(v, value);
    return value;
}

i64 eval_ideal(const HeckeCharacter& chi, const IntegralIdeal& I) {
    if (!chi.conductor().coprime_to(I)) throw DomainError("ideal is not prime to the conductor");
    i64 s = 0;
    for (const auto& [v, e] : I.factors()) s = arith::mod(s + e * chi.value_at(v), chi.order());
    return s;
}

HeckeCharacter build_character(const QuadField& K, const IntegralIdeal& conductor, const std::vector<LocalData>& local,
                               int order, std::optional<std::vector<int>> infinity_hint) {
    if (!is_power_of_two(order)) throw DomainError("character order must be a power of two");
    if (order > 1 && K.class_number() % 2 == 0) {
        throw ConstraintViolation("class_number_odd", "class number " + std::to_string(K.class_number()) +
                                                          " of Q(sqrt " + std::to_string(K.d()) +
                                                          ") is not prime to the order");
    }
    HeckeCharacter chi(K);
    chi.order_ = order;
    chi.cond_ = conductor;

    std::set<PrimePlace> seen;
    for (const auto& ld : local) {
        if (!seen.insert(ld.place).second) throw DomainError("place " + ld.place.to_string() + " given twice");
        int m = conductor.exponent(ld.place);
        if (m == 0) throw DomainError("place " + ld.place.to_string() + " does not divide the conductor");
        if (m != ld.precision) {
            throw DomainError("precision " + std::to_string(ld.precision) + " at " + ld.place.to_string() +
                              " does not match conductor exponent " + std::to_string(m));
        }
        auto group = local_unit_generators(K, ld.place, m);
        if (ld.exponents.size() != group->generators().size()) {
            throw DomainError("expected " + std::to_string(group->generators().size()) + " exponents at " +
                              ld.place.to_string());
        }
        for (std::size_t i = 0; i < ld.exponents.size(); ++i) {
            if (arith::mod(ld.exponents[i] * group->orders()[i], order) != 0) {
                throw ConstraintViolation("local_well_defined", "exponent on generator " + std::to_string(i) + " at " +
                                                                    ld.place.to_string() +
                                                                    " is incompatible with its order");
            }
        }
        chi.comps_.emplace_back(group, ld.exponents, order);
    }
    for (const auto& [v, e] : conductor.factors()) {
        if (!seen.count(v)) throw DomainError("no local data for " + v.to_string());
    }
    std::sort(chi.comps_.begin(), chi.comps_.end(),
              [](const LocalComponent& a, const LocalComponent& b) { return a.place() < b.place(); });
    for (const auto& c : chi.comps_) {
        if (!nontrivial_at_top(c)) {
            throw ConstraintViolation("primitive", "local component at " + c.place().to_string() +
                                                       " is trivial on 1 + v^" + std::to_string(c.precision() - 1) +
                                                       "; conductor exponent is not exact");
        }
    }

    const i64 half = order / 2;
    if (!K.is_real()) {
        QuadInt z = K.torsion_generator();
        if (xi_eval(chi, z) != 0) {
            throw ConstraintViolation("imaginary_units_trivial",
                                      "local data is nontrivial on the root of unity " + z.to_string() +
                                          " of an imaginary field");
        }
    } else {
        i64 x_minus = xi_eval(chi, K.from_int(-1));
        i64 x_eps = xi_eval(chi, *K.fundamental_unit());
        for (i64 x : {x_minus, x_eps}) {
            if (x != 0 && x != half) {
                throw ConstraintViolation("real_units_sign", "local data takes a value other than +-1 on global units");
            }
        }
        std::vector<int> inf(2, 0);
        const int minus = x_minus != 0;
        if (K.unit_norm() == -1) {
            // chi_inf(eps) = (-1)^s2 since eps > 0 > eps'
            inf[1] = x_eps != 0;
            inf[0] = minus ^ inf[1];
            if (infinity_hint && *infinity_hint != inf) {
                throw ConstraintViolation("infinity_type", "infinity type is forced by the global units and differs "
                                                           "from the one requested");
            }
        } else {
            if (x_eps != 0) {
                throw ConstraintViolation("real_totally_positive_unit",
                                          "local data is nontrivial on a totally positive fundamental unit");
            }
            if (infinity_hint) {
                if (infinity_hint->size() != 2 || (((*infinity_hint)[0] ^ (*infinity_hint)[1]) & 1) != minus) {
                    throw ConstraintViolation("infinity_type", "requested infinity type does not match the value at -1");
                }
                inf = *infinity_hint;
            } else {
                inf[0] = minus;
            }
        }
        if (order == 1 && (inf[0] || inf[1])) throw ConstraintViolation("infinity_type", "order 1 with a sign");
        chi.inf_ = inf;
    }
    return chi;
}

HeckeCharacter trivial_character(const QuadField& K, int order) { return build_character(K, IntegralIdeal(), {}, order); }

std::optional<LocalData> primitive_local_data(const QuadField& K, const PrimePlace& v, int M, const std::vector<i64>& vals,
                                              int order) {
    if (M == 0) return std::nullopt;
    auto G = local_unit_generators(K, v, M);
    LocalComponent full(G, vals, order);
    int level = M;
    if (G->is_cyclic_odd()) {
        level = 0;
        for (i64 x : full.exponents()) {
            if (x != 0) level = 1;
        }
    } else {
        const auto& R = G->ring();
        for (int lv = 0; lv <= M; ++lv) {
            const i64 one = R.key(R.one(), lv);
            bool trivial = true;
            for (const auto& el : G->elements()) {
                if (R.key(el.value, lv) == one && full.value(el.value) != 0) {
                    trivial = false;
                    break;
                }
            }
            if (trivial) {
                level = lv;
                break;
            }
        }
    }
    if (level == 0) return std::nullopt;
    auto H = local_unit_generators(K, v, level);
    LocalData out{v, level, {}};
    for (const auto& g : H->generators()) out.exponents.push_back(full.value(g));
    return out;
}

namespace {

// Values of the local component at v (zero when v is unramified) on the level-M generators.
std::vector<i64> values_on(const HeckeCharacter& chi, const LocalUnitGroup& G, int scale) {
    std::vector<i64> vals;
    const LocalComponent* c = chi.component(G.place());
    for (const auto& g : G.generators()) vals.push_back(c ? c->value(g) * scale : 0);
    return vals;
}

} // namespace

HeckeCharacter mul_chars(const HeckeCharacter& a, const HeckeCharacter& b) {
    if (!(a.field() == b.field())) throw DomainError("characters of different fields");
    const QuadField& K = a.field();
    const int order = std::max(a.order(), b.order());
    const int sa = order / a.order(), sb = order / b.order();
    std::set<PrimePlace> places;
    for (auto& [v, e] : a.conductor().factors()) places.insert(v);
    for (auto& [v, e] : b.conductor().factors()) places.insert(v);
    std::map<PrimePlace, int> cond;
    std::vector<LocalData> local;
    for (const auto& v : places) {
        int M = std::max(a.conductor().exponent(v), b.conductor().exponent(v));
        auto G = local_unit_generators(K, v, M);
        auto va = values_on(a, *G, sa), vb = values_on(b, *G, sb);
        for (std::size_t i = 0; i < va.size(); ++i) va[i] = arith::mod(va[i] + vb[i], order);
        if (auto ld = primitive_local_data(K, v, M, va, order)) {
            cond[v] = ld->precision;
            local.push_back(*ld);
        }
    }
    std::optional<std::vector<int>> hint;
    if (K.is_real()) {
        hint = std::vector<int>{a.infinity_type()[0] ^ b.infinity_type()[0], a.infinity_type()[1] ^ b.infinity_type()[1]};
    }
    return build_character(K, IntegralIdeal(cond), local, order, hint);
}

HeckeCharacter conjugate_char(const HeckeCharacter& chi) {
    const QuadField& K = chi.field();
    std::vector<LocalData> local;
    for (const auto& c : chi.components()) {
        PrimePlace w = conjugate_place(c.place());
        auto G = local_unit_generators(K, w, c.precision());
        LocalData ld{w, c.precision(), {}};
        for (const auto& g : G->generators()) ld.exponents.push_back(c.value(g.conj()));
        local.push_back(ld);
    }
    std::optional<std::vector<int>> hint;
    if (K.is_real()) hint = std::vector<int>{chi.infinity_type()[1], chi.infinity_type()[0]};
    return build_character(K, conjugate_ideal(chi.conductor()), local, chi.order(), hint);
}

bool is_base_change(const HeckeCharacter& chi, long bound) {
    HeckeCharacter c = conjugate_char(chi);
    if (!(c == chi)) return false;
    for (long p : arith::primes_up_to(bound)) {
        for (const auto& v : primes_above(chi.field(), p)) {
            if (v.norm() > bound || chi.conductor().exponent(v) > 0) continue;
            if (chi.value_at(v) != c.value_at(v)) {
                throw std::logic_error("conjugate-invariant local data but different values at " + v.to_string());
            }
        }
    }
    return true;
}

DirichletQuadratic::DirichletQuadratic(long D) : D_(D) {
    if (D != 1 && !arith::is_fundamental_discriminant(D))
        throw DomainError(std::to_string(D) + " is not a fundamental discriminant");
}

int DirichletQuadratic::operator()(long n) const { return arith::kronecker(D_, n); }

int DirichletQuadratic::local_component(long p, long u) const {
    const long absD = std::labs(D_);
    if (absD % p != 0) throw DomainError("p does not divide the discriminant");
    long pe = 1;
    while (absD % (pe * p) == 0) pe *= p;
    const long rest = absD / pe;
    // n = u mod pe, n = 1 mod rest
    long n = arith::mod(u, pe);
    if (rest > 1) {
        long t = arith::mulmod(arith::mod(1 - n, rest), arith::invmod(pe, rest), rest);
        n = n + pe * t;
    }
    return arith::kronecker(D_, n);
}

HeckeCharacter base_change_of_dirichlet(const DirichletQuadratic& nu, const QuadField& K) {
    const long D = nu.discriminant();
    std::map<PrimePlace, int> cond;
    std::vector<LocalData> local;
    if (D != 1) {
        for (auto& [p, e] : arith::factor(std::labs(D))) {
            const long pe = arith::ipow(p, e);
            for (const auto& v : primes_above(K, p)) {
                const int L = (p != 2) ? 1 : (v.kind == SplitKind::ramified ? 5 : 3);
                auto G = local_unit_generators(K, v, L);
                const auto& R = G->ring();
                // local norm to Q_p, known mod p^e
                auto local_norm = [&](Residue x) -> long {
                    if (v.kind == SplitKind::split) return R.key(x, L) % pe;
                    BigInt n = R.lift(x).norm();
                    return static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(pe)));
                };
                std::vector<i64> vals;
                for (const auto& g : G->generators()) vals.push_back(nu.local_component(p, local_norm(R.reduce(g))) == 1 ? 0 : 1);
                if (!G->is_cyclic_odd()) {
                    LocalComponent check(G, vals, 2);
                    for (const auto& el : G->elements()) {
                        i64 want = nu.local_component(p, local_norm(el.value)) == 1 ? 0 : 1;
                        if (check.value(el.value) != want) throw std::logic_error("local norm character mismatch");
                    }
                }
                if (auto ld = primitive_local_data(K, v, L, vals, 2)) {
                    cond[v] = ld->precision;
                    local.push_back(*ld);
                }
            }
        }
    }
    std::optional<std::vector<int>> hint;
    if (K.is_real()) hint = std::vector<int>{D < 0, D < 0};
    return build_character(K, IntegralIdeal(cond), local, 2, hint);
}

namespace {

// Primitive quadratic local data at v with exponent m; empty if none is supported.
std::vector<LocalData> quadratic_local_data(const QuadField& M, const PrimePlace& v, int m) {
    std::shared_ptr<const LocalUnitGroup> G;
    try {
        G = local_unit_generators(M, v, m);
    } catch (const DomainError&) {
        return {};
    }
    const std::size_t n = G->generators().size();
    std::vector<LocalData> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<i64> e;
        for (std::size_t i = 0; i < n; ++i) e.push_back((mask >> i) & 1);
        auto ld = primitive_local_data(M, v, m, e, 2);
        if (ld && ld->precision == m) out.push_back(*ld);
    }
    return out;
}

}  // namespace

std::vector<HeckeCharacter> quadratic_characters(const QuadField& M, const IntegralIdeal& f) {
    std::vector<std::vector<LocalData>> options;
    for (const auto& [v, m] : f.factors()) {
        auto o = quadratic_local_data(M, v, m);
        if (o.empty()) return {};
        options.push_back(o);
    }
    std::vector<HeckeCharacter> out;
    std::vector<LocalData> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == options.size()) {
            try {
                out.push_back(build_character(M, f, cur, 2));
            } catch (const ConstraintViolation&) {
            }
            return;
        }
        for (const auto& o : options[i]) {
            cur.push_back(o);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace hecke
