#include "fibra/report.hpp"

#include "fibra/error.hpp"

#include <sstream>

namespace fibra::cli {

using nlohmann::json;

ExitCode Report::exit_code() const
{
    if (verdict == "pass" || verdict == "holonomic") {
        return ExitCode::Success;
    }
    if (verdict == "fail" || verdict == "anholonomic") {
        return ExitCode::Violation;
    }
    return ExitCode::Usage;
}

json to_json(const Report& r)
{
    return json{{"command", r.command},
                {"verdict", r.verdict},
                {"exit_code", static_cast<int>(r.exit_code())},
                {"witnesses", r.witnesses},
                {"payload", r.payload}};
}

Report report_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("command") || !j.contains("verdict") || !j["command"].is_string()
        || !j["verdict"].is_string()) {
        throw Error(ErrorKind::SchemaViolation, "report needs string fields 'command' and 'verdict'",
                    {{"field", "report"}});
    }
    Report r;
    r.command = j["command"].get<std::string>();
    r.verdict = j["verdict"].get<std::string>();
    r.witnesses = j.value("witnesses", json::array());
    r.payload = j.value("payload", json::object());
    if (j.contains("exit_code") && j["exit_code"] != static_cast<int>(r.exit_code())) {
        throw Error(ErrorKind::SchemaViolation, "exit_code disagrees with verdict", {{"field", "exit_code"}});
    }
    return r;
}

namespace {

void render_value(std::ostringstream& out, const std::string& key, const json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object() && !v.empty()) {
        out << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it) {
            render_value(out, it.key(), it.value(), indent + 1);
        }
    } else if (v.is_string()) {
        out << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
        out << pad << key << ": " << v.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Report& r)
{
    std::ostringstream out;
    out << r.command << ": " << r.verdict << "\n";
    for (const auto& w : r.witnesses) {
        out << "  " << w.value("kind", "violation") << ": " << w.value("message", "") << "\n";
    }
    for (auto it = r.payload.begin(); it != r.payload.end(); ++it) {
        render_value(out, it.key(), it.value(), 1);
    }
    return out.str();
}

}  // namespace fibra::cli
