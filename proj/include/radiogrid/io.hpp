#pragma once

#include <iosfwd>
#include <string>

#include "radiogrid/grid.hpp"
#include "radiogrid/labeling.hpp"

namespace radiogrid {

inline constexpr const char* kToolVersion = "1.0.0";

/// Serializable labeling artifact: dimensions, one {x,y,label} entry per
/// vertex, the span, and formula metadata. Round-trips losslessly.
struct LabelingDocument {
    int a = 0;
    int b = 0;
    std::vector<long long> labels_by_index;  // row-major by y then x
    long long span = 0;
    std::string parity_case;
    long long formula_rn = 0;
    long long formula_t_plus = 0;
    std::string tool_version = kToolVersion;

    static LabelingDocument from_labeling(const GridGraph& g, const Labeling& f);
    Labeling to_labeling() const;  // throws on inconsistent content
};

std::string to_json(const LabelingDocument& doc);
LabelingDocument document_from_json(const std::string& text);  // throws std::invalid_argument

/// a x b table of labels, y increasing upward (row y=b printed first).
std::string to_ascii(const LabelingDocument& doc);

/// Graphviz graph with grid edges, label attributes and pos pinning.
std::string to_dot(const LabelingDocument& doc);

/// Command-line entry point (subcommands rn, tplus, label, verify, analyze,
/// oracle). Exit codes: 0 ok/valid, 1 invalid labeling, 2 input or parse
/// error, 3 resource guard.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace radiogrid
