#include "hypspec/commands.hpp"
#include "hypspec/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hypspec;

namespace {

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::Json;
    if (f == "csv") return OutputFormat::Csv;
    throw ParseError("format must be json or csv");
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const int p = std::stoi(text);
            return {p, p};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ParseError("p range must be 'a:b' or a single integer");
    }
}

const char* class_name(ErrorClass c) {
    switch (c) {
    case ErrorClass::Usage: return "usage";
    case ErrorClass::Domain: return "domain";
    case ErrorClass::Numerical: return "numerical";
    }
    return "unknown";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral constants, Green kernels, form resolvents and critical exponents of hyperbolic spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::string format = "json";
    long seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", seed, "Reserved; no command samples randomly");
    };

    std::string field = "R";
    int n = 2, p = 0;
    double delta = 0;

    auto* alpha = app.add_subcommand("alpha", "Table of alpha_p for one space");
    std::string p_range;
    alpha->add_option("--field", field, "R, C, H or O")->required();
    alpha->add_option("--n", n, "Dimension over the field")->required();
    alpha->add_option("--p-range", p_range, "Degrees 'a:b' (default: all)");
    add_common(alpha);

    auto* bounds = app.add_subcommand("bounds", "Theorem-B and Bochner lower bounds for lambda_0^p");
    bounds->add_option("--field", field)->required();
    bounds->add_option("--n", n)->required();
    bounds->add_option("--p", p)->required();
    bounds->add_option("--delta", delta, "Critical exponent in [0, 2 rho]")->required();
    add_common(bounds);

    auto* green = app.add_subcommand("green", "Scalar Green kernel on an r-grid");
    std::string s_text = "1", r_grid = "0.1:10:100";
    bool log_grid = false;
    green->add_option("--field", field)->required();
    green->add_option("--n", n)->required();
    green->add_option("--s", s_text, "Spectral parameter, e.g. 1.5 or 2+1i");
    green->add_option("--r-grid", r_grid, "start:stop:count");
    green->add_flag("--log", log_grid, "Logarithmic grid spacing");
    add_common(green);

    auto* resolvent = app.add_subcommand("resolvent", "Form-valued resolvent kernel on real hyperbolic space");
    std::string signs_text, t_grid = "8:16:17", resonance = "log";
    int order = 40;
    bool no_psi = false;
    double t0 = 1e-3, T = 2.0;
    resolvent->add_option("--n", n)->required();
    resolvent->add_option("--p", p)->required();
    resolvent->add_option("--s", s_text);
    resolvent->add_option("--signs", signs_text, "Branch signs, e.g. '+,-'");
    resolvent->add_option("--order", order, "Frobenius truncation order");
    resolvent->add_option("--t-grid", t_grid, "Grid for kernel output and decay fit");
    resolvent->add_flag("--log", log_grid);
    resolvent->add_option("--resonance", resonance, "log | reject")->check(CLI::IsMember({"log", "reject"}));
    resolvent->add_flag("--no-psi", no_psi, "Skip psi_p extraction");
    resolvent->add_option("--t0", t0, "Inner point of the psi integration");
    resolvent->add_option("--T", T, "Matching point of the psi integration");
    add_common(resolvent);

    auto* dcmd = app.add_subcommand("delta", "Critical exponent estimate from a group file");
    std::string group_file, dedup = "free";
    int max_len = 10;
    dcmd->add_option("--group", group_file, "Group definition (JSON)")->required();
    dcmd->add_option("--max-len", max_len, "Maximal word length");
    dcmd->add_option("--dedup", dedup, "free | hash")->check(CLI::IsMember({"free", "hash"}));
    add_common(dcmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CLI::App* active = app.get_subcommands().front();
    const std::string command = active->get_name();
    try {
        OutputEnvelope env;
        if (active == alpha) {
            std::optional<std::pair<int, int>> range;
            if (!p_range.empty()) range = parse_range(p_range);
            env = cmd_alpha(parse_field(field), n, range);
        } else if (active == bounds) {
            env = cmd_bounds(parse_field(field), n, p, delta);
        } else if (active == green) {
            env = cmd_green(parse_field(field), n, parse_complex(s_text), parse_grid(r_grid, log_grid));
        } else if (active == resolvent) {
            ResolventRequest req;
            req.n = n;
            req.p = p;
            req.s = parse_complex(s_text);
            req.signs = parse_signs(signs_text);
            req.order = order;
            req.t_grid = parse_grid(t_grid, log_grid);
            req.policy = resonance == "log" ? ResonancePolicy::LogTerms : ResonancePolicy::Reject;
            req.psi = !no_psi;
            req.t0 = t0;
            req.T = T;
            env = cmd_resolvent(req);
        } else {
            env = cmd_delta(group_file, max_len, dedup == "hash" ? DedupPolicy::MatrixHash : DedupPolicy::FreeReduction);
        }
        env.format = parse_format(format);
        std::cout << render(env);
        return 0;
    } catch (const Error& e) {
        ojson params = ojson::object();
        for (const CLI::Option* opt : active->get_options())
            if (opt->count() > 0 && !opt->get_lnames().empty()) params[opt->get_lnames().front()] = opt->as<std::string>();
        std::cout << render_error(command, params, e.kind(), class_name(e.error_class()), e.what());
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
