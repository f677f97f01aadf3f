#include "fibra/commands.hpp"
#include "fibra/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using fibra::cli::ExitCode;
using fibra::cli::Report;

int emit(const Report& r, bool json)
{
    if (json) {
        std::cout << fibra::cli::to_json(r).dump(2) << '\n';
    } else {
        std::cout << fibra::cli::render_text(r);
    }
    return static_cast<int>(r.exit_code());
}

std::optional<std::size_t> env_cap()
{
    const char* raw = std::getenv("FIBRA_CAP");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) {
        throw fibra::Error(fibra::ErrorKind::UsageError, "FIBRA_CAP must be a positive integer");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fibra: finite fibered algebras, holonomy and group representations"};

    std::string command;
    std::string target;
    std::string format = "text";
    std::optional<std::string> base_chart;
    std::optional<std::string> reference;
    std::optional<std::size_t> cap;
    fibra::cli::DemoOptions demo;

    app.add_option("command", command, "validate | holonomy | orbits | coords | twin | kernel | demo")->required();
    app.add_option("spec", target, "spec file (JSON); for `demo`, the demo name (exp-shift)");
    app.add_option("--base-chart", base_chart, "base chart for holonomy");
    app.add_option("--reference", reference, "reference section for coords and twin");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--matrix", demo.matrix, "demo: row-major square matrix entries")->delimiter(',');
    app.add_option("--t-min", demo.t_min, "demo: grid start");
    app.add_option("--t-max", demo.t_max, "demo: grid end");
    app.add_option("--steps", demo.steps, "demo: grid size")->check(CLI::PositiveNumber);
    app.add_option("--vector", demo.vector, "demo: constant section value")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ExitCode::Usage);
    }
    const bool json = format == "json";

    try {
        if (!cap) {
            cap = env_cap();
        }
        if (command == "demo") {
            return emit(fibra::cli::run_demo(target.empty() ? "exp-shift" : target, demo), json);
        }
        const fibra::cli::Command cmd = fibra::cli::parse_command(command);
        if (target.empty()) {
            throw fibra::Error(fibra::ErrorKind::UsageError, "missing spec file argument");
        }
        const fibra::spec::SpecDocument doc = fibra::spec::parse_spec_file(target);
        return emit(fibra::cli::run_command(cmd, doc, {base_chart, reference, cap}), json);
    } catch (const std::exception& e) {
        return emit(fibra::cli::error_report(command, e), json);
    }
}
