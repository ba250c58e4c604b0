#pragma once

// Engine behind the C API: parses JacobianDocument JSON, runs one analysis
// command, and renders a deterministic AnalysisReport. All exported entry
// points catch; failures are reported through the exit code and message.

#include <optional>
#include <string>
#include <vector>

#include "screw/matrix.hpp"
#include "screw/scalar.hpp"

namespace screw::engine {

struct Document {
    bool rational = true; // scalar mode for all computations
    Matrix<Rat> exact;    // 6 x m; authoritative in rational mode
    Matrix<double> approx;
    std::vector<std::string> labels; // empty or one per column
    std::string digest;              // FNV-1a over the canonical entries
};

/// Throws Error(Errc::InvalidInput) on malformed JSON or a bad matrix.
Document parse_document(const std::string& text);

/// exit_code in {0, 2, 3}; report is valid JSON whenever parsing succeeded.
struct CommandResult {
    int exit_code = 0;
    std::string report;
};

struct ProjectOptions {
    std::optional<std::vector<std::string>> twist; // 6 entries
    std::string h = "0";
    std::optional<std::string> damp;
    std::optional<std::vector<std::string>> point;     // 3 entries
    std::optional<std::vector<std::string>> direction; // 3 entries
};

CommandResult cmd_pinv(const Document& doc, const std::string& h);
CommandResult cmd_classify(const Document& doc, const std::optional<std::string>& reciprocal_h);
CommandResult cmd_involution(const Document& doc);
CommandResult cmd_reciprocal(const Document& doc, const std::string& h);
CommandResult cmd_project(const Document& doc, const ProjectOptions& opts);

} // namespace screw::engine
