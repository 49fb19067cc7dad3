#pragma once

#include "hypspec/orbit.hpp"

#include <string>

namespace hypspec {

struct GroupFile {
    std::string name;
    GroupGenerators generators;
    Eigen::VectorXcd base_point;
};

/// Parses a group definition:
///   {"name": ..., "model": "real_hyperboloid" | "complex_projective", "n": 2,
///    "generators": [{"label": "a", "matrix": [["1", "0", ...], ...]}, ...],
///    "base_point": ["0", "0", "1"]}   (optional; defaults to the model origin)
/// Entries are decimal strings (or numbers); complex entries are {"re": ..., "im": ...}.
GroupFile parse_group(const std::string& text);
GroupFile load_group_file(const std::string& path);

} // namespace hypspec
