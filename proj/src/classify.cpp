#include "hecke/classify.hpp"

#include <algorithm>
#include <functional>

#include "hecke/arith.hpp"
#include "hecke/error.hpp"

namespace hecke {

using arith::i64;

std::string to_string(Family f) {
    switch (f) {
        case Family::imaginary: return "imaginary";
        case Family::gaussian: return "gaussian";
        case Family::real: return "real";
    }
    return "?";
}

std::optional<Family> admitted_family(const QuadField& K) {
    const long d = K.d();
    if (d == -1) return Family::gaussian;
    if (d == -2 || (d < 0 && arith::is_prime(-d) && arith::mod(-d, 4) == 3)) return Family::imaginary;
    if (d == 2 || (d > 0 && arith::is_prime(d) && arith::mod(d, 4) == 1)) return Family::real;
    return std::nullopt;
}

namespace {

Family require_family(const QuadField& K) {
    auto f = admitted_family(K);
    if (!f) throw DomainError("Q(sqrt " + std::to_string(K.d()) + ") is outside the classified families");
    return *f;
}

AdmissibilityReport fail(std::string clause, std::string detail) { return {false, std::move(clause), std::move(detail)}; }

} // namespace

AdmissibilityReport is_admissible(const QuadField& K, const IntegralIdeal& f) {
    const Family fam = require_family(K);
    for (const auto& [v, m] : f.factors()) {
        if (v.p != 2 && v.kind == SplitKind::inert) return fail("odd_inert_place", v.to_string() + " is odd and inert");
    }
    int odd_ramified = 0;
    for (const auto& [v, m] : f.factors()) {
        if (v.p == 2 || v.kind != SplitKind::ramified) continue;
        if (fam == Family::real) return fail("odd_inert_place", v.to_string() + " is odd and ramified in a real field");
        ++odd_ramified;
        if (m != 1 || odd_ramified > 1)
            return fail("odd_ramified_place", v.to_string() + " must divide the conductor exactly once");
    }
    for (const auto& [v, m] : f.factors()) {
        if (v.kind != SplitKind::split) continue;
        if (v.label != 1) return fail("split_place", v.to_string() + " is not the designated place above " + std::to_string(v.p));
        if (v.p != 2 && m != 1) return fail("split_place", v.to_string() + " must have exponent 1");
        if (v.p == 2 && m != 2 && m != 3) return fail("split_place", v.to_string() + " must have exponent 2 or 3");
    }
    for (const auto& [v, m] : f.factors()) {
        if (v.p != 2 || v.kind == SplitKind::split) continue;
        bool ok = false;
        if (v.kind == SplitKind::inert) {
            ok = m == 2;
        } else if (fam == Family::imaginary) {
            ok = m == 4 || m == 5;
        } else if (fam == Family::gaussian) {
            ok = m == 2 || m == 5;
        } else {
            ok = m == 4;
        }
        if (!ok) return fail("place_above_two", "exponent " + std::to_string(m) + " at " + v.to_string() + " is not allowed");
    }
    return {};
}

int r_count(const QuadField& K, const IntegralIdeal& f) {
    const Family fam = require_family(K);
    int r = 0;
    for (const auto& [v, m] : f.factors()) {
        if (v.p == 2) continue;
        if (fam == Family::gaussian ? arith::mod(v.p, 8) == 5 : arith::mod(v.p, 4) == 3) ++r;
    }
    return r;
}

bool exists_character(const QuadField& K, const IntegralIdeal& f) {
    if (f.is_one() || !is_admissible(K, f).admissible) return false;
    const Family fam = require_family(K);
    if (fam == Family::real) return true;
    int m2 = 0;
    for (const auto& [v, m] : f.factors()) {
        if (v.p == 2) m2 = m;
    }
    const int r = r_count(K, f);
    if (m2 == 0) return r % 2 == 0;
    if (m2 == 2 || m2 == 4) return r % 2 == 1;
    return true;
}

bool local_conditions_hold(const QuadField& K, const LocalComponent& c) {
    const PrimePlace& v = c.place();
    if (v.p != 2 || v.kind == SplitKind::split) return true;
    const Family fam = require_family(K);
    const int m = c.precision();
    auto value = [&](const QuadInt& u) { return c.value(u); };
    if (v.kind == SplitKind::inert) {
        QuadInt mu = *c.group().tame_generator();
        return value(K.from_int(-1)) != 0 && value(K.one() + K.from_int(2) * mu) == 0;
    }
    QuadInt pi = K.omega() - K.from_int(v.root);
    QuadInt one = K.one();
    switch (fam) {
        case Family::imaginary: return value(one + pi) == 0;
        case Family::gaussian:
            if (m == 2) return value(K.omega()) != 0;
            return m != 5 || value(one + pi.pow(3)) == 0;
        case Family::real: return value(one + pi) == 0 && value(one + pi.pow(3)) != 0;
    }
    return false;
}

std::vector<HeckeCharacter> construct_all(const QuadField& K, const IntegralIdeal& f) {
    std::vector<std::vector<LocalData>> options;
    for (const auto& [v, m] : f.factors()) {
        auto G = local_unit_generators(K, v, m);
        const std::size_t n = G->generators().size();
        std::vector<LocalData> opts;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            LocalData ld{v, m, {}};
            for (std::size_t i = 0; i < n; ++i) ld.exponents.push_back((mask >> i) & 1);
            LocalComponent c(G, ld.exponents, 2);
            bool ramified_exactly = false;
            if (m == 1) {
                ramified_exactly = mask != 0;
            } else {
                const auto& R = G->ring();
                const i64 one = R.key(R.one(), m - 1);
                for (const auto& el : G->elements()) {
                    if (R.key(el.value, m - 1) == one && c.value(el.value) != 0) ramified_exactly = true;
                }
            }
            if (ramified_exactly && local_conditions_hold(K, c)) opts.push_back(ld);
        }
        options.push_back(opts);
    }
    std::vector<HeckeCharacter> out;
    std::vector<LocalData> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == options.size()) {
            try {
                out.push_back(build_character(K, f, current, 2));
            } catch (const ConstraintViolation&) {
            }
            return;
        }
        for (const auto& ld : options[i]) {
            current.push_back(ld);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<IntegralIdeal> admissible_conductors(const QuadField& K, long bound) {
    const Family fam = require_family(K);
    struct Atom {
        PrimePlace v;
        int m;
        long norm;
    };
    std::vector<std::vector<Atom>> by_prime;
    for (long p : arith::primes_up_to(bound)) {
        std::vector<Atom> atoms;
        for (const auto& v : primes_above(K, p)) {
            std::vector<int> exps;
            if (v.kind == SplitKind::split) {
                if (v.label != 1) continue;
                exps = (p == 2) ? std::vector<int>{2, 3} : std::vector<int>{1};
            } else if (p != 2) {
                if (v.kind == SplitKind::ramified && fam != Family::real) exps = {1};
            } else if (v.kind == SplitKind::inert) {
                exps = {2};
            } else {
                exps = fam == Family::imaginary ? std::vector<int>{4, 5}
                       : fam == Family::gaussian ? std::vector<int>{2, 5}
                                                 : std::vector<int>{4};
            }
            for (int m : exps) {
                BigInt n = IntegralIdeal::prime(v, m).norm();
                if (n <= bound) atoms.push_back(Atom{v, m, n.get_si()});
            }
        }
        if (!atoms.empty()) by_prime.push_back(atoms);
    }
    std::vector<std::pair<long, IntegralIdeal>> found;
    std::map<PrimePlace, int> cur;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long norm) {
        if (i == by_prime.size()) {
            if (!cur.empty()) found.emplace_back(norm, IntegralIdeal(cur));
            return;
        }
        // every atom has norm >= its prime and primes increase
        if (norm * by_prime[i].front().v.p > bound) {
            if (!cur.empty()) found.emplace_back(norm, IntegralIdeal(cur));
            return;
        }
        rec(i + 1, norm);
        for (const auto& a : by_prime[i]) {
            if (norm * a.norm > bound) continue;
            cur[a.v] = a.m;
            rec(i + 1, norm * a.norm);
            cur.erase(a.v);
        }
    };
    rec(0, 1);
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<IntegralIdeal> out;
    for (auto& [n, I] : found) {
        if (!is_admissible(K, I).admissible) throw std::logic_error("generated an inadmissible conductor");
        out.push_back(I);
    }
    return out;
}

std::vector<ClassifiedCharacter> enumerate_characters(const QuadField& K, long bound) {
    std::vector<ClassifiedCharacter> out;
    for (const auto& f : admissible_conductors(K, bound)) {
        for (auto& chi : construct_all(K, f)) {
            bool bc = is_base_change(chi, 50);
            out.push_back(ClassifiedCharacter{std::move(chi), r_count(K, f), bc});
        }
    }
    return out;
}

} // namespace hecke
