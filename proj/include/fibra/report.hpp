#pragma once

#include <json.hpp>

#include <string>

namespace fibra::cli {

/// Exit codes shared by every command.
enum class ExitCode : int { Success = 0, Violation = 1, Usage = 2 };

/// Outcome of one CLI command. `verdict` is one of "pass", "holonomic"
/// (exit 0), "fail", "anholonomic" (exit 1) or "error" (exit 2); the exit
/// code is derived from it rather than stored, so the two cannot disagree.
struct Report {
    std::string command;
    std::string verdict;
    /// Violations: error kind, message and witness fields.
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json payload = nlohmann::json::object();

    ExitCode exit_code() const;

    bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
/// Throws SchemaViolation for malformed input.
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r);

}  // namespace fibra::cli
