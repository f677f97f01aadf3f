#include "fibra/commands.hpp"

#include "fibra/error.hpp"
#include "fibra/holonomy.hpp"
#include "fibra/matrix_exp.hpp"

#include <cmath>

namespace fibra::cli {

using nlohmann::json;

Command parse_command(std::string_view name)
{
    if (name == "validate") return Command::Validate;
    if (name == "holonomy") return Command::Holonomy;
    if (name == "orbits") return Command::Orbits;
    if (name == "coords") return Command::Coords;
    if (name == "twin") return Command::Twin;
    if (name == "kernel") return Command::Kernel;
    throw Error(ErrorKind::UsageError, "unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c)
{
    switch (c) {
    case Command::Validate: return "validate";
    case Command::Holonomy: return "holonomy";
    case Command::Orbits: return "orbits";
    case Command::Coords: return "coords";
    case Command::Twin: return "twin";
    case Command::Kernel: return "kernel";
    }
    return "unknown";
}

namespace {

json witness_of(const Error& e)
{
    json details = json::object();
    for (const auto& [k, v] : e.details()) {
        details[k] = v;
    }
    return json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"details", details}};
}

bool is_usage_kind(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MissingSection:
    case ErrorKind::CapExceeded:
    case ErrorKind::UsageError:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownReference:
    case ErrorKind::SchemaViolation:
        return true;
    default:
        return false;
    }
}

json values_of(const Section& s)
{
    return json(std::vector<Element>(s.values().begin(), s.values().end()));
}

json chart_names(const BaseSpace& base, const ChartLoop& loop)
{
    json out = json::array();
    for (ChartIndex c : loop.charts) {
        out.push_back(base.chart_name(c));
    }
    return out;
}

json action_tables(const GroupRepresentation& r)
{
    json out = json::object();
    const BaseSpace& base = r.target().base();
    for (PointIndex x = 0; x < base.point_count(); ++x) {
        out[base.point_name(x)] = r.tables()[x];
    }
    return out;
}

std::size_t section_cap(const CommandOptions& o)
{
    return o.cap.value_or(kDefaultSectionCap);
}

std::string reference_name(const spec::SpecDocument& doc, const CommandOptions& o)
{
    if (o.reference) {
        return *o.reference;
    }
    if (doc.sections.empty()) {
        throw Error(ErrorKind::MissingSection, "command needs a reference section; the document lists none",
                    {{"field", "sections"}});
    }
    return doc.sections.begin()->first;
}

Report validate(const spec::SpecDocument& doc, const CommandOptions&)
{
    Report r{"validate", "pass", json::array(), json::object()};
    json checks = json::array();
    const BundleAtlas atlas = spec::build_atlas(doc);
    checks.push_back("atlas");
    if (doc.signature) {
        spec::build_fibered_algebra(doc);
        checks.push_back("fibered_algebra");
    }
    if (doc.group) {
        spec::build_fibered_group(doc);
        checks.push_back("fibered_group");
    }
    for (const auto& [name, _] : doc.sections) {
        spec::build_section(doc, atlas, name);
    }
    if (!doc.sections.empty()) {
        checks.push_back("sections");
    }
    if (doc.representation) {
        spec::build_representation(doc);
        checks.push_back("representation");
    }
    r.payload = {{"points", atlas.base().point_count()},
                 {"charts", atlas.base().chart_count()},
                 {"fiber_size", atlas.fiber_size()},
                 {"checks", checks}};
    return r;
}

Report holonomy(const spec::SpecDocument& doc, const CommandOptions& o)
{
    const BundleAtlas atlas = spec::build_atlas(doc);
    const BaseSpace& base = atlas.base();
    ChartIndex chart = 0;
    if (o.base_chart) {
        auto c = base.find_chart(*o.base_chart);
        if (!c) {
            throw Error(ErrorKind::UnknownReference, "unknown base chart '" + *o.base_chart + "'",
                        {{"name", *o.base_chart}});
        }
        chart = *c;
    }
    const HolonomyReport h =
        classify_holonomic(atlas, spec::build_fiber(doc), chart, o.cap.value_or(kDefaultGroupCap));
    Report r{"holonomy", h.verdict == HolonomyVerdict::Holonomic ? "holonomic" : "anholonomic", json::array(),
             json::object()};
    json generators = json::array();
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
        generators.push_back({{"loop", chart_names(base, h.generator_loops[i])}, {"permutation", h.generators[i]}});
    }
    r.payload = {{"base_chart", base.chart_name(chart)},
                 {"group_order", h.elements.size()},
                 {"generators", generators},
                 {"elements", h.elements}};
    if (h.witness) {
        r.witnesses.push_back({{"kind", "NotAnAutomorphism"},
                               {"message", "loop transport is not an automorphism of the fiber algebra"},
                               {"details", generators[*h.witness]}});
    }
    return r;
}

Report orbits(const spec::SpecDocument& doc, const CommandOptions& o)
{
    const GroupRepresentation rep = spec::build_representation(doc);
    const OrbitPartition part = orbit_partition(rep, section_cap(o));
    const TransitivityReport t = transitivity_report(rep, section_cap(o));
    json sizes = json::array();
    json blocks = json::array();
    for (const auto& b : part.blocks) {
        sizes.push_back(b.size());
        json block = json::array();
        for (std::size_t i : b) {
            block.push_back(values_of(part.universe[i]));
        }
        blocks.push_back(std::move(block));
    }
    Report r{"orbits", "pass", json::array(), json::object()};
    r.payload = {{"section_count", part.universe.size()},
                 {"orbit_count", part.blocks.size()},
                 {"orbit_sizes", sizes},
                 {"transitive", t.transitive},
                 {"single_transitive", t.single_transitive},
                 {"effective", t.effective},
                 {"orbits", blocks}};
    return r;
}

Report coords(const spec::SpecDocument& doc, const CommandOptions& o)
{
    const GroupRepresentation rep = spec::build_representation(doc);
    const std::string ref_name = reference_name(doc, o);
    const Section v = spec::build_section(doc, rep.target(), ref_name);
    json coordinates = json::object();
    for (const auto& [name, _] : doc.sections) {
        const Section w = spec::build_section(doc, rep.target(), name);
        const Section g = fibra::coordinates(rep, v, w);
        if (!(rep.act(g, v) == w)) {
            throw Error(ErrorKind::MismatchDetected, "coordinates do not reproduce section '" + name + "'");
        }
        coordinates[name] = values_of(g);
    }
    Report r{"coords", "pass", json::array(), json::object()};
    r.payload = {{"reference", ref_name}, {"coordinates", coordinates}};
    return r;
}

Report twin(const spec::SpecDocument& doc, const CommandOptions& o)
{
    const GroupRepresentation rep = spec::build_representation(doc);
    const std::string ref_name = reference_name(doc, o);
    const Section v = spec::build_section(doc, rep.target(), ref_name);
    const GroupRepresentation h = twin_representation(rep, v);
    Report r{"twin", "pass", json::array(), json::object()};
    r.payload = {{"reference", ref_name},
                 {"variance", std::string(to_string(h.variance()))},
                 {"commutes", true},
                 {"action", action_tables(h)}};
    return r;
}

Report kernel(const spec::SpecDocument& doc, const CommandOptions& o)
{
    const GroupRepresentation rep = spec::build_representation(doc);
    const auto k = kernel_of_inefficiency(rep, section_cap(o));
    json elems = json::array();
    for (const auto& s : k) {
        elems.push_back(values_of(s));
    }
    Report r{"kernel", "pass", json::array(), json::object()};
    r.payload = {{"kernel_size", k.size()},
                 {"effective", k.size() == 1 && k.front() == rep.group().unit_section()},
                 {"kernel", elems}};
    return r;
}

}  // namespace

Report error_report(std::string command, const std::exception& e)
{
    Report r{std::move(command), "error", json::array(), json::object()};
    if (const auto* fe = dynamic_cast<const Error*>(&e)) {
        r.witnesses.push_back(witness_of(*fe));
    } else {
        r.witnesses.push_back({{"kind", "Exception"}, {"message", e.what()}, {"details", json::object()}});
    }
    return r;
}

Report run_command(Command cmd, const spec::SpecDocument& doc, const CommandOptions& options)
{
    const std::string name(to_string(cmd));
    try {
        switch (cmd) {
        case Command::Validate: return validate(doc, options);
        case Command::Holonomy: return holonomy(doc, options);
        case Command::Orbits: return orbits(doc, options);
        case Command::Coords: return coords(doc, options);
        case Command::Twin: return twin(doc, options);
        case Command::Kernel: return kernel(doc, options);
        }
    } catch (const Error& e) {
        if (is_usage_kind(e.kind())) {
            return error_report(name, e);
        }
        Report r{name, "fail", json::array({witness_of(e)}), json::object()};
        return r;
    }
    return error_report(name, Error(ErrorKind::UsageError, "unhandled command"));
}

Report run_demo(std::string_view name, const DemoOptions& options)
{
    const std::string command = "demo " + std::string(name);
    try {
        if (name != "exp-shift") {
            throw Error(ErrorKind::UsageError, "unknown demo '" + std::string(name) + "'");
        }
        const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(options.matrix.size()))));
        if (n * n != static_cast<Eigen::Index>(options.matrix.size()) || n == 0) {
            throw Error(ErrorKind::NonSquare, "matrix entries do not form a square matrix");
        }
        Eigen::MatrixXd a(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                a(i, j) = options.matrix[static_cast<std::size_t>(i * n + j)];
            }
        }
        if (static_cast<Eigen::Index>(options.vector.size()) != n) {
            throw Error(ErrorKind::UsageError, "section vector length differs from the matrix dimension");
        }
        const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(options.vector.data(), n);
        std::vector<double> grid;
        const std::size_t steps = std::max<std::size_t>(options.steps, 1);
        for (std::size_t i = 0; i < steps; ++i) {
            grid.push_back(steps == 1 ? options.t_min
                                      : options.t_min + (options.t_max - options.t_min) * static_cast<double>(i)
                                                            / static_cast<double>(steps - 1));
        }
        json samples = json::array();
        for (const auto& s : numeric::exp_shift(a, grid, v)) {
            json m = json::array();
            for (Eigen::Index i = 0; i < n; ++i) {
                json row = json::array();
                for (Eigen::Index j = 0; j < n; ++j) {
                    row.push_back(s.group_value(i, j));
                }
                m.push_back(row);
            }
            samples.push_back({{"t", s.t},
                               {"exp_tA", m},
                               {"section", std::vector<double>(s.section_value.data(), s.section_value.data() + n)},
                               {"shifted", std::vector<double>(s.shifted_value.data(), s.shifted_value.data() + n)}});
        }
        Report r{command, "pass", json::array(), json::object()};
        r.payload = {{"matrix", options.matrix}, {"samples", samples}};
        return r;
    } catch (const Error& e) {
        return error_report(command, e);
    }
}

}  // namespace fibra::cli
