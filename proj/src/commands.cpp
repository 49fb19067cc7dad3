#include "hypspec/commands.hpp"

#include "hypspec/bounds.hpp"
#include "hypspec/error.hpp"
#include "hypspec/group_io.hpp"
#include "hypspec/psi.hpp"
#include "hypspec/scalar_green.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

namespace hypspec {

std::vector<double> parse_grid(const std::string& spec, bool log_spacing) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw ParseError("grid must be 'start:stop:count', got '" + spec + "'");
    double a = 0, b = 0;
    long count = 0;
    try {
        std::size_t u1 = 0, u2 = 0, u3 = 0;
        a = std::stod(parts[0], &u1);
        b = std::stod(parts[1], &u2);
        count = std::stol(parts[2], &u3);
        if (u1 != parts[0].size() || u2 != parts[1].size() || u3 != parts[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("grid must be 'start:stop:count', got '" + spec + "'");
    }
    if (count < 1) throw ParseError("grid count must be >= 1");
    if (log_spacing && !(a > 0 && b > 0)) throw ParseError("logarithmic grids need positive endpoints");
    std::vector<double> out(count);
    for (long i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : double(i) / double(count - 1);
        out[i] = log_spacing ? std::exp(std::log(a) + f * (std::log(b) - std::log(a))) : a + f * (b - a);
    }
    return out;
}

cplx parse_complex(const std::string& text) {
    static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$)");
    static const std::regex imag_only(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, imag_only)) {
        const std::string v = m[1].str();
        double im = v.empty() || v == "+" ? 1.0 : v == "-" ? -1.0 : std::stod(v);
        return {0.0, im};
    }
    if (std::regex_match(text, m, re) && (m[1].matched || m[2].matched)) {
        const double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
        double im = 0;
        if (m[2].matched) {
            im = m[3].matched ? std::stod(m[3].str()) : 1.0;
            if (m[2].str() == "-") im = -im;
        }
        return {re_part, im};
    }
    throw ParseError("cannot parse complex number '" + text + "'");
}

std::vector<int> parse_signs(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item == "+" || item == "1" || item == "+1")
            out.push_back(1);
        else if (item == "-" || item == "-1")
            out.push_back(-1);
        else if (!item.empty())
            throw ParseError("branch signs must be '+' or '-', got '" + item + "'");
    }
    return out;
}

namespace {

ojson space_json(const SpaceDescriptor& sp) {
    ojson j = ojson::object();
    j["field"] = field_name(sp.field);
    j["n"] = sp.n;
    j["d"] = sp.d;
    j["dim"] = sp.dim;
    j["rho"] = to_string(sp.rho);
    return j;
}

ojson matrix_json(const Eigen::MatrixXcd& M) {
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        ojson row = ojson::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(complex_json(M(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string parity_label(const std::vector<int>& powers) {
    bool even = false, odd = false;
    for (int k : powers) (k % 2 ? odd : even) = true;
    if (even && odd) return "mixed";
    if (even) return "even";
    if (odd) return "odd";
    return "none";
}

} // namespace

OutputEnvelope cmd_alpha(Field field, int n, std::optional<std::pair<int, int>> p_range) {
    const SpaceDescriptor sp = make_space(field, n);
    int lo = 0, hi = sp.dim;
    if (p_range) {
        lo = p_range->first;
        hi = p_range->second;
        if (lo < 0 || hi > sp.dim || lo > hi) throw DomainError("p range must lie in [0, dim]");
    }
    OutputEnvelope env;
    env.command = "alpha";
    env.parameters["field"] = field_name(field);
    env.parameters["n"] = n;
    env.parameters["p_min"] = lo;
    env.parameters["p_max"] = hi;
    env.parameters["rho"] = to_string(sp.rho);
    env.columns = {"p", "alpha", "alpha_value", "status"};
    for (int p = lo; p <= hi; ++p) {
        ojson row = ojson::object();
        row["p"] = p;
        try {
            const Rational a = alpha_p(sp, p);
            row["alpha"] = to_string(a);
            row["alpha_value"] = to_double(a);
            row["status"] = "ok";
        } catch (const UnknownConstant&) {
            row["alpha"] = "unknown";
            row["alpha_value"] = nullptr;
            row["status"] = "unknown";
        }
        env.rows.push_back(row);
    }
    return env;
}

OutputEnvelope cmd_bounds(Field field, int n, int p, double delta) {
    const SpaceDescriptor sp = make_space(field, n);
    const auto rep = compare(sp, p, delta);
    OutputEnvelope env;
    env.command = "bounds";
    env.parameters["field"] = field_name(field);
    env.parameters["n"] = n;
    env.parameters["p"] = p;
    env.parameters["delta"] = delta;
    ojson row = ojson::object();
    row["field"] = field_name(field);
    row["n"] = n;
    row["p"] = p;
    row["delta"] = delta;
    row["rho"] = to_double(sp.rho);
    row["alpha_p"] = to_string(alpha_p(sp, p));
    row["theorem_b_bound"] = rep.theorem_b_bound;
    row["theorem_b_raw"] = rep.theorem_b_raw;
    row["clamped"] = rep.clamped;
    row["zero_possible"] = rep.zero_possible;
    row["zero_isolated"] = rep.zero_isolated;
    row["sullivan_corlette_lambda00"] = rep.sullivan_corlette_lambda00;
    row["bochner_bound"] = rep.bochner_bound ? ojson(*rep.bochner_bound) : ojson(nullptr);
    row["difference"] = rep.difference ? ojson(*rep.difference) : ojson(nullptr);
    env.rows.push_back(row);
    return env;
}

OutputEnvelope cmd_green(Field field, int n, cplx s, const std::vector<double>& r_grid) {
    const SpaceDescriptor sp = make_space(field, n);
    for (double r : r_grid)
        if (!(r > 0)) throw DomainError("green grid must contain only r > 0");
    OutputEnvelope env;
    env.command = "green";
    env.parameters["space"] = space_json(sp);
    env.parameters["s"] = complex_json(s);
    env.columns = {"r", "re_g0", "im_g0", "residual"};
    for (double r : r_grid) {
        const cplx g = green0_eval(sp, s, r);
        ojson row = ojson::object();
        row["r"] = r;
        row["re_g0"] = g.real();
        row["im_g0"] = g.imag();
        row["residual"] = green0_ode_residual(sp, s, r);
        env.rows.push_back(row);
    }
    return env;
}

OutputEnvelope cmd_resolvent(const ResolventRequest& req) {
    const SpaceDescriptor sp = make_space(Field::Real, req.n);
    const RadialOperator op = build_radial_operator(req.n, req.p, req.order);
    const CoverPoint pt = cover_point(op, req.s, req.signs);
    FrobeniusConfig cfg;
    cfg.order = req.order;
    cfg.policy = req.policy;
    const FrobeniusKernel K = frobenius_solve(op, pt, cfg);

    OutputEnvelope env;
    env.command = "resolvent";
    env.parameters["n"] = req.n;
    env.parameters["p"] = req.p;
    env.parameters["s"] = complex_json(req.s);
    ojson signs = ojson::array();
    for (int sg : req.signs) signs.push_back(sg);
    env.parameters["signs"] = signs;
    env.parameters["order"] = req.order;
    env.parameters["resonance"] = req.policy == ResonancePolicy::LogTerms ? "log" : "reject";

    env.columns = {"t"};
    for (std::size_t j = 0; j < K.blocks.size(); ++j) env.columns.push_back("block_" + std::to_string(j));
    env.columns.push_back("total_norm");
    for (double t : req.t_grid) {
        ojson row = ojson::object();
        row["t"] = t;
        kernel_eval(K, t); // validity check
        for (std::size_t j = 0; j < K.blocks.size(); ++j)
            row["block_" + std::to_string(j)] = operator_norm(kernel_jet(K, t, int(j)).F);
        row["total_norm"] = operator_norm(kernel_eval(K, t));
        env.rows.push_back(row);
    }

    ojson sum = ojson::object();
    sum["rho"] = to_string(sp.rho);
    sum["alpha_p"] = to_string(op.alpha_p);
    sum["dim_v"] = op.tau.dim_v;
    ojson ev = ojson::array(), exps = ojson::array(), branches = ojson::array();
    for (const auto& B : K.blocks) {
        ev.push_back(B.e);
        exps.push_back(complex_json(B.mu));
    }
    for (const auto& y : pt.branch_values) branches.push_back(complex_json(y));
    sum["e_values"] = ev;
    sum["exponents"] = exps;
    sum["branch_values"] = branches;
    sum["h"] = pt.h;
    sum["physical_sheet"] = pt.physical_sheet;
    ojson powers = ojson::array();
    for (int k : op.q_powers) powers.push_back(k);
    sum["q_powers"] = powers;
    sum["q_parity"] = parity_label(op.q_powers);
    sum["resonance_margin"] = K.resonance_margin;
    sum["log_terms"] = K.log_terms;
    sum["valid_from"] = K.valid_from;
    sum["tail_ratio"] = K.tail_ratio;
    sum["truncation_warning"] = K.truncation_warning;

    double residual = 0;
    for (int i = 0; i <= 24; ++i) residual = std::max(residual, kernel_ode_residual(op, K, 2.0 + 0.25 * i));
    sum["ode_residual_max"] = residual;
    sum["expected_rate"] = to_double(sp.rho) + pt.h;
    if (req.t_grid.size() >= 2)
        sum["decay_rate"] = decay_check(K, req.t_grid);
    else
        sum["decay_rate"] = nullptr;

    if (req.p == 0) {
        // F_0 is a constant multiple of the scalar kernel; report the spread of the ratio.
        cplx ref = 0;
        double worst = 0;
        for (int i = 0; i <= 32; ++i) {
            const double t = 2.0 + 0.25 * i;
            const cplx ratio = kernel_eval(K, t)(0, 0) / green0_eval(sp, req.s, t);
            if (i == 0) ref = ratio;
            worst = std::max(worst, std::abs(ratio / ref - 1.0));
        }
        sum["scalar_oracle_constant"] = complex_json(ref);
        sum["scalar_oracle_agreement"] = worst;
    }

    if (req.psi) {
        PsiConfig pc;
        pc.t0 = req.t0;
        pc.T = req.T;
        const PsiReport pr = psi_extract(op, K, pc);
        ojson psi = ojson::object();
        psi["singularity_exponent"] = pr.singularity_exponent;
        psi["expected_exponent"] = double(req.n - 2);
        psi["raw_exponent"] = pr.raw_exponent;
        psi["sigma_min"] = pr.sigma_min;
        psi["sigma_max"] = pr.sigma_max;
        psi["fit_residual"] = pr.fit_residual;
        ojson comb = ojson::array();
        for (const auto& c : pr.combination) comb.push_back(complex_json(c));
        psi["combination"] = comb;
        psi["matrix"] = matrix_json(pr.psi);
        sum["psi"] = psi;
    }
    env.summary = sum;
    return env;
}

OutputEnvelope cmd_delta(const std::string& group_file, int max_len, DedupPolicy dedup) {
    const GroupFile g = load_group_file(group_file);
    EnumerationConfig cfg;
    cfg.dedup = dedup;
    const OrbitSample sample = enumerate_orbit(g.generators, g.base_point, max_len, cfg);
    const DeltaEstimate est = estimate_delta(sample);
    const SpaceDescriptor sp = g.generators.model.space();

    OutputEnvelope env;
    env.command = "delta";
    env.parameters["group_file"] = group_file;
    env.parameters["max_len"] = max_len;
    env.parameters["dedup"] = dedup == DedupPolicy::FreeReduction ? "free" : "hash";
    ojson row = ojson::object();
    row["name"] = g.name;
    row["model"] = g.generators.model.kind == ModelKind::RealHyperboloid ? "real_hyperboloid" : "complex_projective";
    row["n"] = g.generators.model.n;
    row["generators"] = int(g.generators.generators.size());
    row["max_len"] = max_len;
    row["word_count"] = sample.word_count;
    row["rho"] = to_double(sp.rho);
    row["growth_fit"] = est.growth_fit;
    row["bisection"] = est.bisection;
    row["spread"] = est.spread;
    row["fit_radius_min"] = est.fit_radius_min;
    row["fit_radius_max"] = est.fit_radius_max;
    const double estimate = 0.5 * (est.growth_fit + est.bisection);
    const double clamped = std::clamp(estimate, 0.0, 2.0 * to_double(sp.rho));
    row["estimate"] = estimate;
    row["sullivan_corlette_lambda00"] = sullivan_corlette(sp, clamped);
    env.rows.push_back(row);
    return env;
}

std::string render_error(const std::string& command, const ojson& parameters, const std::string& kind,
                         const std::string& error_class, const std::string& message) {
    ojson j = ojson::object();
    j["command"] = command;
    j["version"] = kVersion;
    j["parameters"] = parameters;
    ojson e = ojson::object();
    e["kind"] = kind;
    e["class"] = error_class;
    e["message"] = message;
    j["error"] = e;
    return dump_json(j) + "\n";
}

} // namespace hypspec
