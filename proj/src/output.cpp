#include "hypspec/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypspec {

std::string format_double(double x) {
    if (std::isnan(x)) return "NaN";
    if (std::isinf(x)) return x > 0 ? "Infinity" : "-Infinity";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ojson complex_json(cplx z) {
    ojson j = ojson::object();
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

namespace {

void write_json(std::ostringstream& os, const ojson& v, int indent, int depth) {
    const std::string pad = indent > 0 ? std::string(std::size_t(indent * (depth + 1)), ' ') : "";
    const std::string pad_close = indent > 0 ? std::string(std::size_t(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (v.type()) {
    case ojson::value_t::object: {
        if (v.empty()) {
            os << "{}";
            return;
        }
        os << "{" << nl;
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) os << "," << nl;
            first = false;
            os << pad << ojson(it.key()).dump() << (indent > 0 ? ": " : ":");
            write_json(os, it.value(), indent, depth + 1);
        }
        os << nl << pad_close << "}";
        return;
    }
    case ojson::value_t::array: {
        if (v.empty()) {
            os << "[]";
            return;
        }
        os << "[" << nl;
        bool first = true;
        for (const auto& e : v) {
            if (!first) os << "," << nl;
            first = false;
            os << pad;
            write_json(os, e, indent, depth + 1);
        }
        os << nl << pad_close << "]";
        return;
    }
    case ojson::value_t::number_float: {
        const double x = v.get<double>();
        // JSON has no non-finite numbers; emit them as strings.
        if (!std::isfinite(x))
            os << '"' << format_double(x) << '"';
        else
            os << format_double(x);
        return;
    }
    default:
        os << v.dump();
    }
}

void flatten(const ojson& v, const std::string& prefix, ojson& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else {
        out[prefix] = v;
    }
}

std::string csv_cell(const ojson& v) {
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_number_float())
        s = format_double(v.get<double>());
    else if (v.is_null())
        s = "";
    else
        s = dump_json(v, 0);
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

} // namespace

std::string dump_json(const ojson& value, int indent) {
    std::ostringstream os;
    write_json(os, value, indent, 0);
    return os.str();
}

std::string render_json(const OutputEnvelope& env) {
    ojson j = ojson::object();
    j["command"] = env.command;
    j["version"] = kVersion;
    j["parameters"] = env.parameters;
    j["rows"] = ojson::array();
    for (const auto& r : env.rows) j["rows"].push_back(r);
    if (!env.summary.is_null()) j["summary"] = env.summary;
    return dump_json(j) + "\n";
}

std::string render_csv(const OutputEnvelope& env) {
    std::vector<ojson> flat;
    std::vector<std::string> header = env.columns;
    for (const auto& r : env.rows) {
        ojson f = ojson::object();
        flatten(r, "", f);
        for (auto it = f.begin(); it != f.end(); ++it)
            if (std::find(header.begin(), header.end(), it.key()) == header.end()) header.push_back(it.key());
        flat.push_back(std::move(f));
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_cell(header[i]);
    os << "\n";
    for (const auto& f : flat) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) os << ",";
            if (f.contains(header[i])) os << csv_cell(f.at(header[i]));
        }
        os << "\n";
    }
    return os.str();
}

std::string render(const OutputEnvelope& env) {
    return env.format == OutputFormat::Json ? render_json(env) : render_csv(env);
}

} // namespace hypspec
