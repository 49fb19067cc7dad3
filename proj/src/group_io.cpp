#include "hypspec/group_io.hpp"

#include "hypspec/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hypspec {

namespace {

using json = nlohmann::json;

double parse_real(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ParseError("invalid numeric entry '" + s + "'");
        }
        if (used != s.size()) throw ParseError("invalid numeric entry '" + s + "'");
        return x;
    }
    throw ParseError("matrix entries must be decimal strings or numbers");
}

cplx parse_entry(const json& v) {
    if (v.is_object()) {
        if (!v.contains("re")) throw ParseError("complex entry needs a 're' field");
        return {parse_real(v.at("re")), v.contains("im") ? parse_real(v.at("im")) : 0.0};
    }
    return parse_real(v);
}

} // namespace

GroupFile parse_group(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed group file: ") + e.what());
    }
    try {
        GroupFile g;
        g.name = j.value("name", "");
        IsometryModel model;
        const std::string kind = j.at("model").get<std::string>();
        if (kind == "real_hyperboloid")
            model.kind = ModelKind::RealHyperboloid;
        else if (kind == "complex_projective")
            model.kind = ModelKind::ComplexProjective;
        else
            throw ParseError("unknown model '" + kind + "'");
        model.n = j.at("n").get<int>();
        if (model.n < 1) throw ParseError("model dimension must be positive");
        const int N = model.ambient_dim();
        std::vector<Eigen::MatrixXcd> mats;
        std::vector<std::string> labels;
        for (const auto& gen : j.at("generators")) {
            const auto& rows = gen.at("matrix");
            if (!rows.is_array() || int(rows.size()) != N) throw ParseError("generator matrix must have n+1 rows");
            Eigen::MatrixXcd M(N, N);
            for (int r = 0; r < N; ++r) {
                if (!rows[r].is_array() || int(rows[r].size()) != N)
                    throw ParseError("generator matrix must have n+1 columns");
                for (int c = 0; c < N; ++c) M(r, c) = parse_entry(rows[r][c]);
            }
            mats.push_back(M);
            labels.push_back(gen.value("label", "g" + std::to_string(labels.size())));
        }
        g.generators = make_generators(model, std::move(mats), std::move(labels));
        g.generators.assumed_free = j.value("free", true);
        if (j.contains("base_point")) {
            const auto& b = j.at("base_point");
            if (!b.is_array() || int(b.size()) != N) throw ParseError("base_point must have n+1 entries");
            g.base_point.resize(N);
            for (int i = 0; i < N; ++i) g.base_point(i) = parse_entry(b[i]);
        } else {
            g.base_point = model.origin();
        }
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid group file: ") + e.what());
    }
}

GroupFile load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group(ss.str());
}

} // namespace hypspec
