#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "../tools/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = hecke::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("field subcommand accepts negative d") {
    auto r = run({"field", "--d", "-1"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["disc"] == -4);
    CHECK(j["torsion_order"] == 4);
}

TEST_CASE("errors are json with exit codes") {
    auto bad = run({"field", "--d", "12"});
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.err)["error"] == "domain_error");
    auto usage = run({"nonsense"});
    CHECK(usage.code == 2);
    CHECK(nlohmann::json::parse(usage.err)["error"] == "usage");
    auto clause = run({"char", "--d", "-1", "--conductor", "13:split:1:1", "--local", "13:split:1=1"});
    CHECK(clause.code == 1);
    auto j = nlohmann::json::parse(clause.err);
    CHECK(j["error"] == "constraint_violation");
    CHECK(j["clause"] == "imaginary_units_trivial");
}

TEST_CASE("char and coeffs") {
    auto c = run({"char", "--d", "5", "--conductor", "29:split:1:1", "--eval", "11:split:1,2:inert"});
    REQUIRE(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["conductor_norm"] == 29);
    CHECK(j["values"].size() == 2);
    auto k = run({"coeffs", "--d", "5", "--conductor", "29:split:1:1", "--N", "5"});
    CHECK(k.out == "n,a_n\n1,1\n2,0\n3,0\n4,-1\n5,-1\n");
    auto o = run({"coeffs", "--d", "5", "--conductor", "29:split:1:1", "--N", "5", "--method", "ideal-sum"});
    CHECK(o.out == k.out);
}

TEST_CASE("classify, equiv and rep-check") {
    auto c = run({"classify", "--d", "-7", "--norm-bound", "60", "--format", "csv"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find("29:split:1,29") != std::string::npos);
    auto one = run({"classify", "--d", "-1", "--conductor", "3:inert:1"});
    CHECK(nlohmann::json::parse(one.out)["clause"] == "odd_inert_place");
    auto e = run({"equiv", "--d", "-1", "--conductor", "17:split:1:1", "--N", "1000"});
    REQUIRE(e.code == 0);
    auto cert = nlohmann::json::parse(e.out)["certificate"];
    CHECK(cert["matched"] == true);
    CHECK(cert["M"]["d"] == 17);
    auto g = run({"rep-check", "--m", "4"});
    REQUIRE(g.code == 0);
    CHECK(nlohmann::json::parse(g.out).size() == 2);
    auto odd = run({"rep-check", "--m", "3", "--variant", "cyclic"});
    CHECK(odd.code == 1);
}
