#pragma once

#include "hypspec/frobenius.hpp"
#include "hypspec/orbit.hpp"
#include "hypspec/output.hpp"
#include "hypspec/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypspec {

/// "start:stop:count", linear or logarithmic spacing.
std::vector<double> parse_grid(const std::string& spec, bool log_spacing);
/// "1.5", "2i", "1+0.5i", "0.5-2i".
cplx parse_complex(const std::string& text);
/// "+,-,+" or "1,-1".
std::vector<int> parse_signs(const std::string& text);

OutputEnvelope cmd_alpha(Field field, int n, std::optional<std::pair<int, int>> p_range);
OutputEnvelope cmd_bounds(Field field, int n, int p, double delta);
OutputEnvelope cmd_green(Field field, int n, cplx s, const std::vector<double>& r_grid);

struct ResolventRequest {
    int n = 3;
    int p = 1;
    cplx s = 1.0;
    std::vector<int> signs;
    int order = 40;
    std::vector<double> t_grid;          ///< decay-fit and output grid
    ResonancePolicy policy = ResonancePolicy::LogTerms;
    bool psi = true;
    double t0 = 1e-3;
    double T = 2.0;
};

OutputEnvelope cmd_resolvent(const ResolventRequest& req);
OutputEnvelope cmd_delta(const std::string& group_file, int max_len, DedupPolicy dedup);

/// Structured error report, used when a command fails after argument parsing.
std::string render_error(const std::string& command, const ojson& parameters, const std::string& kind,
                         const std::string& error_class, const std::string& message);

} // namespace hypspec
