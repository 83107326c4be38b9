#include "hecke/serialize.hpp"

#include "hecke/error.hpp"

namespace hecke {

json to_json(const BigInt& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) {
        BigInt n;
        if (n.set_str(j.get<std::string>(), 10) != 0) throw DomainError("bad integer '" + j.get<std::string>() + "'");
        return n;
    }
    throw DomainError("expected an integer");
}

json to_json(const QuadInt& x) { return json::array({to_json(x.a()), to_json(x.b())}); }

QuadInt quadint_from_json(const QuadField& K, const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("element must be [a, b]");
    return K.element(bigint_from_json(j[0]), bigint_from_json(j[1]));
}

json field_summary(const QuadField& K) {
    json j;
    j["d"] = K.d();
    j["disc"] = K.disc();
    j["omega"] = K.tag().trace == 1 ? "(1+sqrt(d))/2" : "sqrt(d)";
    j["signature"] = {K.r1(), K.r2()};
    j["torsion_order"] = K.torsion_order();
    if (K.fundamental_unit()) {
        j["fundamental_unit"] = to_json(*K.fundamental_unit());
        j["unit_norm"] = K.unit_norm();
    } else {
        j["fundamental_unit"] = nullptr;
    }
    j["class_number"] = K.class_number();
    return j;
}

json to_json(const IntegralIdeal& I) {
    json j = json::array();
    for (const auto& [v, e] : I.factors()) {
        j.push_back({{"p", v.p}, {"kind", to_string(v.kind)}, {"label", v.label}, {"exponent", e}});
    }
    return j;
}

IntegralIdeal ideal_from_json(const QuadField& K, const json& j) {
    if (!j.is_array()) throw DomainError("ideal must be a list");
    std::map<PrimePlace, int> f;
    for (const auto& x : j) {
        PrimePlace v = place(K, x.at("p").get<long>(), x.value("label", 0));
        if (x.contains("kind") && x["kind"].get<std::string>() != to_string(v.kind))
            throw DomainError("place kind mismatch at " + v.to_string());
        f[v] += x.at("exponent").get<int>();
    }
    return IntegralIdeal(f);
}

IntegralIdeal parse_conductor(const QuadField& K, const std::string& s) {
    std::map<PrimePlace, int> f;
    if (s.empty() || s == "1") return IntegralIdeal();
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find_first_of(",*", start);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(start, end - start);
        start = end + 1;
        if (item.empty()) throw DomainError("empty factor in '" + s + "'");
        auto last = item.rfind(':');
        if (last == std::string::npos) throw DomainError("bad factor '" + item + "'");
        int e;
        try {
            e = std::stoi(item.substr(last + 1));
        } catch (const std::exception&) {
            throw DomainError("bad exponent in '" + item + "'");
        }
        if (e < 0) throw DomainError("negative exponent in '" + item + "'");
        f[place_from_string(K, item.substr(0, last))] += e;
        if (end == s.size()) break;
    }
    return IntegralIdeal(f);
}

json to_json(const HeckeCharacter& chi) {
    json j;
    j["field"] = chi.field().d();
    j["order"] = chi.order();
    j["conductor"] = to_json(chi.conductor());
    j["conductor_norm"] = to_json(chi.conductor().norm());
    json local = json::array();
    for (const auto& c : chi.components()) {
        json gens = json::array();
        for (const auto& g : c.group().generators()) gens.push_back(g.to_string());
        local.push_back({{"place", c.place().to_string()},
                         {"precision", c.precision()},
                         {"generators", gens},
                         {"exponents", c.exponents()}});
    }
    j["local"] = local;
    j["infinity"] = chi.infinity_type();
    return j;
}

HeckeCharacter character_from_json(const json& j) {
    QuadField K(j.at("field").get<long>());
    IntegralIdeal f = ideal_from_json(K, j.at("conductor"));
    std::vector<LocalData> local;
    for (const auto& x : j.at("local")) {
        LocalData ld;
        ld.place = place_from_string(K, x.at("place").get<std::string>());
        ld.precision = x.at("precision").get<int>();
        ld.exponents = x.at("exponents").get<std::vector<std::int64_t>>();
        local.push_back(ld);
    }
    std::optional<std::vector<int>> hint;
    if (j.contains("infinity") && !j["infinity"].empty()) hint = j["infinity"].get<std::vector<int>>();
    return build_character(K, f, local, j.value("order", 2), hint);
}

json to_json(const CoeffTable& t) {
    json j;
    j["character"] = to_json(t.character);
    j["N"] = t.N;
    j["method"] = t.method;
    j["coeffs"] = std::vector<std::int64_t>(t.a.begin() + 1, t.a.end());
    return j;
}

json to_json(const FormDescriptor& f) {
    return {{"level", f.level}, {"nebentypus", f.nebentypus}, {"parity", to_string(f.parity)}, {"kind", to_string(f.kind)}};
}

json to_json(const EquivCertificate& c) {
    json j;
    j["K"] = {{"d", c.d_K}, {"conductor", c.conductor_chi}};
    j["M"] = {{"d", c.d_M}, {"conductor", c.conductor_eta}};
    j["N"] = c.N;
    j["matched"] = c.matched;
    j["first_mismatch"] = c.first_mismatch == 0 ? json(nullptr) : json(c.first_mismatch);
    j["level"] = {c.level_chi, c.level_eta};
    j["form"] = to_json(c.form);
    j["oracle_agrees"] = c.oracle_agrees;
    j["candidates_searched"] = c.candidates_searched;
    j["candidates_matched"] = c.candidates_matched;
    return j;
}

json to_json(const dihedral::StructureReport& r) {
    return {{"order", r.order},
            {"center_order", r.center_order},
            {"center_is_kernel_of_delta", r.center_is_kernel_of_delta},
            {"quotient_is_klein_four", r.quotient_is_klein_four},
            {"c_action", r.c_action},
            {"faithful", r.faithful},
            {"ok", r.ok()}};
}

json to_json(const dihedral::FaithfulnessReport& r) {
    return {{"r", r.r},
            {"variant", dihedral::to_string(r.variant)},
            {"m", r.m},
            {"faithful_on_H", r.faithful_on_H},
            {"kernel_contained", r.kernel_contained},
            {"power_is_delta", r.power_is_delta},
            {"conjugate_is_power", r.conjugate_is_power},
            {"equivalent", r.equivalent()}};
}

} // namespace hecke
