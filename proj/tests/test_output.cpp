#include "hypspec/commands.hpp"
#include "hypspec/error.hpp"
#include "hypspec/output.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sys/wait.h>

using namespace hypspec;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPSPEC_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string group(const std::string& name) { return std::string(HYPSPEC_DATA_DIR) + "/groups/" + name; }

} // namespace

TEST_CASE("number formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(std::nan("")) == "NaN");
    ojson j = ojson::object();
    j["x"] = 0.25;
    j["z"] = complex_json(cplx(1.5, -2));
    j["bad"] = std::numeric_limits<double>::infinity();
    CHECK(dump_json(j, 0) == R"({"x":0.25,"z":{"re":1.5,"im":-2},"bad":"Infinity"})");
}

TEST_CASE("CSV projection") {
    OutputEnvelope env;
    env.command = "demo";
    env.format = OutputFormat::Csv;
    CHECK(render(env) == "\n");
    env.columns = {"a", "b"};
    CHECK(render(env) == "a,b\n");
    ojson r = ojson::object();
    r["a"] = 1;
    r["b"] = "x,y";
    r["c"] = complex_json(cplx(0.5, 1));
    env.rows.push_back(r);
    CHECK(render(env) == "a,b,c.re,c.im\n1,\"x,y\",0.5,1\n");
    env.format = OutputFormat::Json;
    const auto js = ojson::parse(render(env));
    CHECK(js["version"] == kVersion);
    CHECK(js["rows"][0]["c"]["im"] == 1.0);
}

TEST_CASE("grid and number parsing") {
    const auto g = parse_grid("0.1:10:100", false);
    CHECK(g.size() == 100);
    CHECK(g.front() == 0.1);
    CHECK(g.back() == doctest::Approx(10.0));
    const auto lg = parse_grid("0.1:10:3", true);
    CHECK(lg[1] == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_grid("1:2", false), ParseError);
    CHECK_THROWS_AS(parse_grid("a:2:3", false), ParseError);
    CHECK_THROWS_AS(parse_grid("-1:2:3", true), ParseError);
    CHECK(parse_complex("1.5") == cplx(1.5, 0));
    CHECK(parse_complex("2i") == cplx(0, 2));
    CHECK(parse_complex("1+0.5i") == cplx(1, 0.5));
    CHECK(parse_complex("0.5-2i") == cplx(0.5, -2));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK_THROWS_AS(parse_complex("abc"), ParseError);
    CHECK(parse_signs("+,-,+") == std::vector<int>{1, -1, 1});
    CHECK(parse_signs("1,-1") == std::vector<int>{1, -1});
    CHECK_THROWS_AS(parse_signs("+,x"), ParseError);
}

TEST_CASE("command envelopes") {
    auto env = cmd_alpha(Field::Quaternion, 2, std::nullopt);
    CHECK(env.rows.size() == 9);
    CHECK(env.rows[1]["alpha"] == "17");
    env = cmd_alpha(Field::Octonion, 2, std::pair{0, 3});
    CHECK(env.rows[2]["alpha"] == "unknown");
    CHECK(env.rows[1]["alpha"] == "97");
    env = cmd_alpha(Field::Real, 3, std::nullopt);
    CHECK(env.rows[1]["alpha"] == "0");

    const auto b = cmd_bounds(Field::Complex, 2, 1, 2.5);
    CHECK(b.rows[0]["theorem_b_bound"].get<double>() == doctest::Approx(0.75));
    CHECK(cmd_bounds(Field::Real, 5, 1, 2.0).rows[0]["difference"].get<double>() == doctest::Approx(1));
    CHECK(cmd_bounds(Field::Complex, 3, 2, 3.0).rows[0]["difference"].get<double>() == doctest::Approx(8));

    const auto gr = cmd_green(Field::Real, 3, 1.0, parse_grid("0.1:10:25", false));
    for (const auto& row : gr.rows) {
        const double r = row["r"].get<double>();
        const double exact = std::exp(-r) / (4 * std::numbers::pi * std::sinh(r));
        CHECK(std::abs(row["re_g0"].get<double>() / exact - 1) < 1e-10);
        CHECK(row["residual"].get<double>() < 1e-8);
    }
    CHECK_THROWS_AS(cmd_green(Field::Real, 3, 1.0, {0.0, 1.0}), DomainError);

    ResolventRequest req;
    req.n = 3;
    req.p = 0;
    req.t_grid = parse_grid("8:16:17", false);
    req.psi = false;
    const auto rs = cmd_resolvent(req);
    CHECK(rs.summary["scalar_oracle_agreement"].get<double>() < 1e-8);
    CHECK(rs.rows.size() == 17);
}

TEST_CASE("CLI exit codes and output") {
    auto r = run_cli("alpha --field H --n 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("p,alpha,alpha_value,status\n", 0) == 0);

    r = run_cli("alpha --field O --n 2");
    CHECK(r.exit_code == 0);
    CHECK(ojson::parse(r.out)["rows"][2]["alpha"] == "unknown");

    CHECK(run_cli("alpha --n 2").exit_code == 2);
    CHECK(run_cli("bounds --field R --n 5 --p 1 --delta 9").exit_code == 3);
    CHECK(run_cli("alpha --field Z --n 2").exit_code == 3);
    CHECK(run_cli("green --field R --n 3 --r-grid 1:2").exit_code == 2);

    r = run_cli("resolvent --n 5 --p 1 --s 1 --resonance reject --no-psi");
    CHECK(r.exit_code == 4);
    const auto err = ojson::parse(r.out);
    CHECK(err["error"]["kind"] == "ResonanceDetected");

    {
        std::ofstream f("malformed_group.json");
        f << "{\"model\": \"real_hyperboloid\", \"n\": 2, \"generators\": [";
    }
    r = run_cli("delta --group malformed_group.json");
    CHECK(r.exit_code == 2);
    CHECK(ojson::parse(r.out)["error"]["kind"] == "ParseError");

    r = run_cli("delta --group " + group("cyclic.json") + " --max-len 30");
    CHECK(r.exit_code == 0);
    const auto j = ojson::parse(r.out);
    CHECK(j["rows"][0]["estimate"].get<double>() < 0.05);
    CHECK(j["rows"][0]["sullivan_corlette_lambda00"].get<double>() == doctest::Approx(0.25));
}

TEST_CASE("CLI output is byte-identical across runs") {
    for (const std::string args : {std::string("delta --group ") + group("schottky_d2.json") + " --max-len 9",
                                   std::string("resolvent --n 4 --p 1 --s 1+0.5i"),
                                   std::string("green --field C --n 2 --s 1.5 --r-grid 0.1:5:20 --format csv")}) {
        const auto a = run_cli(args), b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}
