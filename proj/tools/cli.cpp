#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hecke/classify.hpp"
#include "hecke/error.hpp"
#include "hecke/serialize.hpp"

namespace hecke::cli {

namespace {

struct CharOptions {
    long d = 0;
    std::string conductor = "1";
    std::string local;
    int order = 2;
    std::string infinity;
    int choice = -1;
};

void add_char_options(CLI::App* sub, CharOptions& o) {
    sub->add_option("--d", o.d, "squarefree d of Q(sqrt d)")->required()->allow_extra_args(false);
    sub->add_option("--conductor", o.conductor, "factors p:kind:label:exponent, comma separated");
    sub->add_option("--local", o.local, "local data 'place=e1,e2;...' (default: search quadratic data)");
    sub->add_option("--order", o.order, "character order, a power of two");
    sub->add_option("--infinity", o.infinity, "archimedean signs 's1,s2' for real fields");
    sub->add_option("--choice", o.choice, "index among the quadratic characters with this conductor");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

HeckeCharacter make_character(const CharOptions& o) {
    QuadField K(o.d);
    IntegralIdeal f = parse_conductor(K, o.conductor);
    std::optional<std::vector<int>> hint;
    if (!o.infinity.empty()) {
        hint = std::vector<int>{};
        for (const auto& s : split(o.infinity, ',')) hint->push_back(std::stoi(s));
    }
    if (!o.local.empty()) {
        std::vector<LocalData> local;
        for (const auto& item : split(o.local, ';')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw DomainError("local datum '" + item + "' needs place=exponents");
            PrimePlace v = place_from_string(K, item.substr(0, eq));
            LocalData ld{v, f.exponent(v), {}};
            for (const auto& e : split(item.substr(eq + 1), ',')) ld.exponents.push_back(std::stoll(e));
            local.push_back(ld);
        }
        return build_character(K, f, local, o.order, hint);
    }
    if (o.order != 2) throw DomainError("--local is required for characters of order above 2");
    auto all = quadratic_characters(K, f);
    if (hint) {
        std::vector<HeckeCharacter> keep;
        for (auto& c : all) {
            if (c.infinity_type() == *hint) keep.push_back(c);
        }
        all = keep;
    }
    if (all.empty()) throw DomainError("no quadratic character has conductor " + f.to_string());
    if (o.choice >= 0) {
        if (o.choice >= static_cast<int>(all.size())) throw DomainError("--choice out of range");
        return all[o.choice];
    }
    if (all.size() > 1) {
        throw Ambiguous(std::to_string(all.size()) + " quadratic characters have conductor " + f.to_string() +
                        "; pass --local or --choice");
    }
    return all.front();
}

void write_text(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw DomainError("cannot write " + path);
    file << text;
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", kind}, {"message", message}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* limit = std::getenv("HECKE_SEARCH_LIMIT")) set_search_limit(std::strtoull(limit, nullptr, 10));

    CLI::App app{"Quadratic Hecke characters, their L-series and dihedral equivalences"};
    app.require_subcommand(1);

    long field_d = 0;
    auto* field_cmd = app.add_subcommand("field", "field invariants");
    field_cmd->add_option("--d", field_d)->required();

    long cls_d = 0, cls_bound = 100;
    std::string cls_conductor, cls_format = "json";
    auto* classify_cmd = app.add_subcommand("classify", "admissible conductors and classified characters");
    classify_cmd->add_option("--d", cls_d)->required();
    classify_cmd->add_option("--norm-bound", cls_bound);
    classify_cmd->add_option("--conductor", cls_conductor, "check one conductor instead of listing");
    classify_cmd->add_option("--format", cls_format)->check(CLI::IsMember({"json", "csv"}));

    CharOptions char_opts;
    std::string eval_places;
    auto* char_cmd = app.add_subcommand("char", "build a character and evaluate it");
    add_char_options(char_cmd, char_opts);
    char_cmd->add_option("--eval", eval_places, "places to evaluate at, comma separated");

    CharOptions coeff_opts;
    long coeff_N = 100;
    std::string coeff_format = "csv", coeff_method = "euler", coeff_out;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Dirichlet coefficients of L(s, chi)");
    add_char_options(coeffs_cmd, coeff_opts);
    coeffs_cmd->add_option("--N", coeff_N);
    coeffs_cmd->add_option("--format", coeff_format)->check(CLI::IsMember({"json", "csv"}));
    coeffs_cmd->add_option("--method", coeff_method)->check(CLI::IsMember({"euler", "ideal-sum"}));
    coeffs_cmd->add_option("--out", coeff_out, "output file");

    CharOptions eq_opts;
    long eq_N = 10000, eq_primes = 200;
    auto* equiv_cmd = app.add_subcommand("equiv", "find and verify the partner character");
    add_char_options(equiv_cmd, eq_opts);
    equiv_cmd->add_option("--N", eq_N);
    equiv_cmd->add_option("--prime-bound", eq_primes);

    int rep_m = 0, rep_r = 0, rep_c2 = 0;
    std::string rep_variant = "both";
    auto* rep_cmd = app.add_subcommand("rep-check", "structure of the dihedral-type image group");
    rep_cmd->add_option("--m", rep_m);
    rep_cmd->add_option("--r", rep_r, "check the faithfulness conditions for a character of order r");
    rep_cmd->add_option("--variant", rep_variant)->check(CLI::IsMember({"cyclic", "product", "both"}));
    rep_cmd->add_option("--chi-c2", rep_c2, "exponent of chi(c^2) over lcm(2m, 4)");

    CharOptions form_opts;
    long form_N = 100;
    bool form_partner = false;
    std::string form_out;
    auto* form_cmd = app.add_subcommand("emit-form", "modular form record with coefficients");
    add_char_options(form_cmd, form_opts);
    form_cmd->add_option("--N", form_N);
    form_cmd->add_flag("--with-partner", form_partner, "also search the partner character");
    form_cmd->add_option("--out", form_out, "output file");

    std::vector<std::string> argv_store{"hecke"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("usage", e.what()).dump() << "\n";
        return 2;
    }

    try {
        if (*field_cmd) {
            out << field_summary(QuadField(field_d)).dump(2) << "\n";
        } else if (*classify_cmd) {
            QuadField K(cls_d);
            if (!cls_conductor.empty()) {
                IntegralIdeal f = parse_conductor(K, cls_conductor);
                AdmissibilityReport rep = is_admissible(K, f);
                json j{{"field", K.d()},
                       {"family", to_string(*admitted_family(K))},
                       {"conductor", f.to_string()},
                       {"admissible", rep.admissible},
                       {"clause", rep.clause.empty() ? json(nullptr) : json(rep.clause)},
                       {"detail", rep.detail},
                       {"r_count", r_count(K, f)},
                       {"exists", exists_character(K, f)}};
                out << j.dump(2) << "\n";
            } else {
                auto chars = enumerate_characters(K, cls_bound);
                if (cls_format == "csv") {
                    out << "conductor,norm,r_count,infinity,base_change\n";
                    for (const auto& c : chars) {
                        const auto& inf = c.character.infinity_type();
                        out << c.character.conductor().to_string() << "," << c.character.conductor().norm().get_str()
                            << "," << c.r_count << "," << (inf.empty() ? "" : std::to_string(inf[0]) + std::to_string(inf[1]))
                            << "," << (c.base_change ? "true" : "false") << "\n";
                    }
                } else {
                    json list = json::array();
                    for (const auto& c : chars) {
                        json x = to_json(c.character);
                        x["r_count"] = c.r_count;
                        x["base_change"] = c.base_change;
                        list.push_back(x);
                    }
                    out << json{{"field", K.d()},
                                {"family", to_string(*admitted_family(K))},
                                {"norm_bound", cls_bound},
                                {"characters", list}}
                               .dump(2)
                        << "\n";
                }
            }
        } else if (*char_cmd) {
            HeckeCharacter chi = make_character(char_opts);
            json j = to_json(chi);
            j["base_change"] = is_base_change(chi);
            if (!eval_places.empty()) {
                json vals = json::array();
                for (const auto& s : split(eval_places, ',')) {
                    PrimePlace v = place_from_string(chi.field(), s);
                    vals.push_back({{"place", v.to_string()}, {"exponent", chi.value_at(v)}});
                }
                j["values"] = vals;
            }
            out << j.dump(2) << "\n";
        } else if (*coeffs_cmd) {
            HeckeCharacter chi = make_character(coeff_opts);
            CoeffTable t = coeff_method == "euler" ? dirichlet_coeffs(chi, coeff_N) : ideal_sum_oracle(chi, coeff_N);
            write_text(out, coeff_out, coeff_format == "csv" ? to_csv(t) : to_json(t).dump(2) + "\n");
        } else if (*equiv_cmd) {
            HeckeCharacter chi = make_character(eq_opts);
            PartnerOptions po;
            po.coeff_bound = eq_N;
            po.prime_bound = eq_primes;
            Partner p = construct_partner(chi, po);
            out << json{{"certificate", to_json(p.certificate)}, {"chi", to_json(chi)}, {"eta", to_json(p.eta)}}.dump(2)
                << "\n";
        } else if (*rep_cmd) {
            std::vector<dihedral::Variant> variants;
            if (rep_variant != "product") variants.push_back(dihedral::Variant::cyclic);
            if (rep_variant != "cyclic") variants.push_back(dihedral::Variant::product);
            json j = json::array();
            if (rep_r != 0) {
                for (auto v : variants) j.push_back(to_json(dihedral::faithfulness_criteria(rep_r, v)));
            } else {
                for (auto v : variants) {
                    auto G = dihedral::build_group(rep_m, v, rep_c2);
                    json x = to_json(dihedral::verify_structure(G));
                    x["m"] = rep_m;
                    x["variant"] = dihedral::to_string(v);
                    json labels = json::array();
                    for (const auto& e : G.elements) labels.push_back(e.label);
                    x["elements"] = labels;
                    j.push_back(x);
                }
            }
            out << j.dump(2) << "\n";
        } else if (*form_cmd) {
            HeckeCharacter chi = make_character(form_opts);
            json j;
            std::optional<Partner> partner;
            if (form_partner) {
                PartnerOptions po;
                po.coeff_bound = form_N;
                partner = construct_partner(chi, po);
            }
            FormDescriptor f = induced_descriptor(chi, partner ? &partner->eta : nullptr);
            CoeffTable t = dirichlet_coeffs(chi, form_N);
            j["form"] = to_json(f);
            j["character"] = to_json(chi);
            if (partner) j["partner"] = {{"eta", to_json(partner->eta)}, {"certificate", to_json(partner->certificate)}};
            j["N"] = form_N;
            j["coeffs"] = std::vector<std::int64_t>(t.a.begin() + 1, t.a.end());
            write_text(out, form_out, j.dump(2) + "\n");
        }
    } catch (const ConstraintViolation& e) {
        json j = error_json(e.kind(), e.what());
        j["clause"] = e.clause();
        err << j.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        err << error_json(e.kind(), e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()).dump() << "\n";
        return 3;
    }
    return 0;
}

} // namespace hecke::cli
