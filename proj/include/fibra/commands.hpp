#pragma once

#include "fibra/report.hpp"
#include "fibra/spec.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibra::cli {

enum class Command { Validate, Holonomy, Orbits, Coords, Twin, Kernel };

/// Throws UsageError for an unknown command name.
Command parse_command(std::string_view name);
std::string_view to_string(Command c);

struct CommandOptions {
    std::optional<std::string> base_chart;
    std::optional<std::string> reference;
    /// Overrides the section-enumeration and group-closure caps.
    std::optional<std::size_t> cap;
};

/// Runs one analysis on a parsed document and never throws for library
/// errors: violations become verdict "fail" (or "anholonomic") with the
/// error recorded as a witness; missing input blocks, unknown names on the
/// command line and exceeded caps become verdict "error".
Report run_command(Command cmd, const spec::SpecDocument& doc, const CommandOptions& options);

struct DemoOptions {
    /// Row-major entries of a square matrix.
    std::vector<double> matrix = {0.0, 1.0, -1.0, 0.0};
    double t_min = -1.0;
    double t_max = 1.0;
    std::size_t steps = 5;
    std::vector<double> vector = {1.0, 0.0};
};

/// `demo exp-shift`: samples a(t) = exp(tA) on a grid of the real line and
/// applies the induced left shift to a constant vector section.
Report run_demo(std::string_view name, const DemoOptions& options);

/// Report for an error raised before a command could run (parse failures,
/// unreadable files).
Report error_report(std::string command, const std::exception& e);

}  // namespace fibra::cli
