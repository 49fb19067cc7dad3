#pragma once

#include "hypspec/special.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hypspec {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { Json, Csv };

/// Machine-readable command output. Field order is insertion order, so output is deterministic.
struct OutputEnvelope {
    std::string command;
    ojson parameters = ojson::object();
    std::vector<ojson> rows;
    ojson summary;              ///< optional structured report (null when absent)
    std::vector<std::string> columns; ///< CSV header; inferred from the rows when empty
    OutputFormat format = OutputFormat::Json;
};

ojson complex_json(cplx z);

/// JSON with every floating-point value printed as %.17g.
std::string dump_json(const ojson& value, int indent = 2);
std::string render_json(const OutputEnvelope& env);
/// Header row plus one line per row; nested objects are flattened with dotted keys.
std::string render_csv(const OutputEnvelope& env);
std::string render(const OutputEnvelope& env);

std::string format_double(double x);

} // namespace hypspec
