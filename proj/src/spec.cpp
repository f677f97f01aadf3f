#include "fibra/spec.hpp"

#include "fibra/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fibra::spec {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what)
{
    throw Error(ErrorKind::SchemaViolation, field + ": " + what, {{"field", field}});
}

[[noreturn]] void unknown(const std::string& field, const std::string& name)
{
    throw Error(ErrorKind::UnknownReference, field + ": unknown name '" + name + "'",
                {{"field", field}, {"name", name}});
}

const json& require(const json& obj, const char* key, const std::string& field)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema(field + "." + key, "missing");
    }
    return *it;
}

void allow_keys(const json& obj, std::initializer_list<std::string_view> keys, const std::string& field)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
            schema(field + "." + it.key(), "unexpected key");
        }
    }
}

const json& object(const json& j, const std::string& field)
{
    if (!j.is_object()) {
        schema(field, "expected an object");
    }
    return j;
}

const json& array(const json& j, const std::string& field)
{
    if (!j.is_array()) {
        schema(field, "expected an array");
    }
    return j;
}

std::string string(const json& j, const std::string& field)
{
    if (!j.is_string()) {
        schema(field, "expected a string");
    }
    return j.get<std::string>();
}

std::int64_t integer(const json& j, const std::string& field)
{
    if (!j.is_number_integer()) {
        schema(field, "expected an integer");
    }
    return j.get<std::int64_t>();
}

std::size_t count(const json& j, const std::string& field)
{
    const std::int64_t v = integer(j, field);
    if (v < 0) {
        schema(field, "expected a non-negative integer");
    }
    return static_cast<std::size_t>(v);
}

std::vector<std::int64_t> int_list(const json& j, const std::string& field)
{
    array(j, field);
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(integer(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

// Nested arrays to a RawTable. Ragged input gets a shape that no carrier
// size matches, so table validation reports ArityMismatch for it.
RawTable nested_table(const json& j, const std::string& field)
{
    if (j.is_number_integer()) {
        return {{}, {j.get<std::int64_t>()}};
    }
    if (!j.is_array()) {
        schema(field, "expected an integer or nested integer array");
    }
    RawTable out;
    out.shape.push_back(j.size());
    std::optional<std::vector<std::size_t>> inner;
    bool ragged = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        RawTable child = nested_table(j[i], field + "[" + std::to_string(i) + "]");
        if (inner && *inner != child.shape) {
            ragged = true;
        }
        inner = child.shape;
        out.entries.insert(out.entries.end(), child.entries.begin(), child.entries.end());
    }
    if (ragged) {
        out.shape.push_back(0);
        out.shape.push_back(0);
    } else if (inner) {
        out.shape.insert(out.shape.end(), inner->begin(), inner->end());
    }
    return out;
}

std::size_t line_of(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
        }
    }
    return line;
}

SpecDocument parse_document(const json& root, const std::filesystem::path& base_dir);

RawActionTable action_table(const json& j, std::size_t order, const std::string& field)
{
    RawActionTable table(order);
    if (j.is_array()) {
        if (j.size() != order) {
            schema(field, "expected one row per group element");
        }
        for (std::size_t g = 0; g < order; ++g) {
            table[g] = int_list(j[g], field + "[" + std::to_string(g) + "]");
        }
        return table;
    }
    object(j, field);
    std::vector<bool> seen(order, false);
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t g = 0;
        try {
            std::size_t used = 0;
            g = std::stoul(it.key(), &used);
            if (used != it.key().size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            schema(field + "." + it.key(), "group element keys must be integers");
        }
        if (g >= order) {
            unknown(field, it.key());
        }
        table[g] = int_list(it.value(), field + "." + it.key());
        seen[g] = true;
    }
    for (std::size_t g = 0; g < order; ++g) {
        if (!seen[g]) {
            schema(field + "." + std::to_string(g), "missing group element");
        }
    }
    return table;
}

SpecDocument parse_document(const json& root, const std::filesystem::path& base_dir)
{
    object(root, "$");
    allow_keys(root, {"signature", "fiber", "base", "transitions", "sections", "representation"}, "$");
    SpecDocument doc;

    if (auto it = root.find("signature"); it != root.end()) {
        array(*it, "signature");
        std::vector<OpSymbol> ops;
        std::set<std::string> names;
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string f = "signature[" + std::to_string(i) + "]";
            const json& op = object((*it)[i], f);
            allow_keys(op, {"name", "arity"}, f);
            OpSymbol sym{string(require(op, "name", f), f + ".name"), count(require(op, "arity", f), f + ".arity")};
            if (sym.name.empty() || !names.insert(sym.name).second) {
                schema(f + ".name", "symbol names must be non-empty and distinct");
            }
            ops.push_back(std::move(sym));
        }
        doc.signature = Signature(std::move(ops));
    }

    const json& fiber = object(require(root, "fiber", "$"), "fiber");
    allow_keys(fiber, {"size", "tables", "group"}, "fiber");
    doc.fiber_size = count(require(fiber, "size", "fiber"), "fiber.size");
    if (doc.fiber_size == 0) {
        schema("fiber.size", "must be positive");
    }
    if (auto it = fiber.find("tables"); it != fiber.end()) {
        object(*it, "fiber.tables");
        for (auto t = it->begin(); t != it->end(); ++t) {
            if (!doc.signature || !doc.signature->find(t.key())) {
                unknown("fiber.tables", t.key());
            }
            doc.tables.emplace(t.key(), nested_table(t.value(), "fiber.tables." + t.key()));
        }
    }
    if (auto it = fiber.find("group"); it != fiber.end()) {
        object(*it, "fiber.group");
        allow_keys(*it, {"mul", "inv", "unit"}, "fiber.group");
        GroupDesignation g{string(require(*it, "mul", "fiber.group"), "fiber.group.mul"),
                           string(require(*it, "inv", "fiber.group"), "fiber.group.inv"),
                           string(require(*it, "unit", "fiber.group"), "fiber.group.unit")};
        for (const std::string* s : {&g.mul, &g.inv, &g.unit}) {
            if (!doc.signature || !doc.signature->find(*s)) {
                unknown("fiber.group", *s);
            }
        }
        doc.group = std::move(g);
    }

    const json& base = object(require(root, "base", "$"), "base");
    allow_keys(base, {"points", "charts"}, "base");
    std::set<std::string> point_names;
    const json& points = array(require(base, "points", "base"), "base.points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::string p = string(points[i], "base.points[" + std::to_string(i) + "]");
        if (p.empty() || !point_names.insert(p).second) {
            schema("base.points", "point names must be non-empty and distinct: '" + p + "'");
        }
        doc.points.push_back(std::move(p));
    }
    std::set<std::string> chart_names;
    const json& charts = array(require(base, "charts", "base"), "base.charts");
    for (std::size_t i = 0; i < charts.size(); ++i) {
        const std::string f = "base.charts[" + std::to_string(i) + "]";
        object(charts[i], f);
        allow_keys(charts[i], {"name", "points"}, f);
        ChartSpec c;
        c.name = string(require(charts[i], "name", f), f + ".name");
        if (c.name.empty() || !chart_names.insert(c.name).second) {
            schema(f + ".name", "chart names must be non-empty and distinct: '" + c.name + "'");
        }
        const json& members = array(require(charts[i], "points", f), f + ".points");
        for (std::size_t m = 0; m < members.size(); ++m) {
            std::string p = string(members[m], f + ".points[" + std::to_string(m) + "]");
            if (!point_names.count(p)) {
                unknown(f + ".points", p);
            }
            c.points.push_back(std::move(p));
        }
        doc.charts.push_back(std::move(c));
    }

    if (auto it = root.find("transitions"); it != root.end()) {
        array(*it, "transitions");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string f = "transitions[" + std::to_string(i) + "]";
            const json& t = object((*it)[i], f);
            allow_keys(t, {"from", "to", "map"}, f);
            RawTransition rt{string(require(t, "from", f), f + ".from"), string(require(t, "to", f), f + ".to"),
                             int_list(require(t, "map", f), f + ".map")};
            if (!chart_names.count(rt.from)) {
                unknown(f + ".from", rt.from);
            }
            if (!chart_names.count(rt.to)) {
                unknown(f + ".to", rt.to);
            }
            doc.transitions.push_back(std::move(rt));
        }
    }

    auto point_values = [&](const json& j, const std::string& f) {
        object(j, f);
        std::vector<std::int64_t> values(doc.points.size());
        std::vector<bool> seen(doc.points.size(), false);
        for (auto v = j.begin(); v != j.end(); ++v) {
            auto p = std::find(doc.points.begin(), doc.points.end(), v.key());
            if (p == doc.points.end()) {
                unknown(f, v.key());
            }
            const auto idx = static_cast<std::size_t>(p - doc.points.begin());
            values[idx] = integer(v.value(), f + "." + v.key());
            seen[idx] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i]) {
                schema(f + "." + doc.points[i], "missing value for point");
            }
        }
        return values;
    };

    if (auto it = root.find("sections"); it != root.end()) {
        object(*it, "sections");
        for (auto s = it->begin(); s != it->end(); ++s) {
            doc.sections.emplace(s.key(), point_values(s.value(), "sections." + s.key()));
        }
    }

    if (auto it = root.find("representation"); it != root.end()) {
        const json& r = object(*it, "representation");
        allow_keys(r, {"variance", "group_spec", "action"}, "representation");
        RepresentationSpec rep;
        const std::string variance = string(require(r, "variance", "representation"), "representation.variance");
        if (variance == "covariant") {
            rep.variance = Variance::Covariant;
        } else if (variance == "contravariant") {
            rep.variance = Variance::Contravariant;
        } else {
            schema("representation.variance", "expected 'covariant' or 'contravariant'");
        }
        std::size_t order = 0;
        if (auto g = r.find("group_spec"); g != r.end()) {
            if (g->is_string()) {
                rep.group_spec = std::make_shared<SpecDocument>(parse_spec_file(base_dir / g->get<std::string>()));
            } else if (g->is_object()) {
                rep.group_spec = std::make_shared<SpecDocument>(parse_document(*g, base_dir));
            } else {
                schema("representation.group_spec", "expected a path or an inline document");
            }
            order = rep.group_spec->fiber_size;
            if (rep.group_spec->points != doc.points) {
                schema("representation.group_spec.base.points", "group bundle must have the same points");
            }
        } else {
            order = doc.fiber_size;
        }
        const json& action = object(require(r, "action", "representation"), "representation.action");
        std::vector<std::optional<RawActionTable>> tables(doc.points.size());
        for (auto a = action.begin(); a != action.end(); ++a) {
            auto p = std::find(doc.points.begin(), doc.points.end(), a.key());
            if (p == doc.points.end()) {
                unknown("representation.action", a.key());
            }
            tables[static_cast<std::size_t>(p - doc.points.begin())] =
                action_table(a.value(), order, "representation.action." + a.key());
        }
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (!tables[i]) {
                schema("representation.action." + doc.points[i], "missing action for point");
            }
            rep.action.points.push_back(std::move(*tables[i]));
        }
        doc.representation = std::move(rep);
    }
    return doc;
}

}  // namespace

SpecDocument parse_spec(std::string_view text, const std::filesystem::path& base_dir)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + e.what(),
                    {{"line", std::to_string(line)}});
    }
    return parse_document(root, base_dir);
}

SpecDocument parse_spec_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::UsageError, "cannot open spec file '" + path.string() + "'", {{"path", path.string()}});
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path.parent_path());
}

BundleAtlas build_atlas(const SpecDocument& doc)
{
    BaseSpace base = BaseSpace::make(doc.points, doc.charts);
    return BundleAtlas::validate(std::move(base), doc.fiber_size, std::span<const RawTransition>(doc.transitions));
}

FiniteAlgebra build_fiber(const SpecDocument& doc)
{
    return validate_algebra(doc.signature.value_or(Signature{}), doc.fiber_size, doc.tables);
}

FiberedAlgebra build_fibered_algebra(const SpecDocument& doc)
{
    return make_fibered_algebra(build_atlas(doc), build_fiber(doc));
}

FiberedGroup build_fibered_group(const SpecDocument& doc)
{
    if (!doc.group) {
        throw Error(ErrorKind::MissingSection, "document has no fiber.group designation", {{"field", "fiber.group"}});
    }
    return FiberedGroup(build_fibered_algebra(doc), doc.group->mul, doc.group->inv, doc.group->unit);
}

GroupRepresentation build_representation(const SpecDocument& doc)
{
    if (!doc.representation) {
        throw Error(ErrorKind::MissingSection, "document has no representation block", {{"field", "representation"}});
    }
    const auto& rep = *doc.representation;
    FiberedGroup group = build_fibered_group(rep.group_spec ? *rep.group_spec : doc);
    return make_representation(std::move(group), build_atlas(doc), rep.variance, rep.action);
}

Section build_section(const SpecDocument& doc, const BundleAtlas& atlas, std::string_view name)
{
    auto it = doc.sections.find(name);
    if (it == doc.sections.end()) {
        throw Error(ErrorKind::MissingSection, "no section named '" + std::string(name) + "'",
                    {{"section", std::string(name)}});
    }
    std::vector<Element> values;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
        const std::int64_t v = it->second[i];
        if (v < 0 || static_cast<std::uint64_t>(v) >= atlas.fiber_size()) {
            throw Error(ErrorKind::ElementOutOfRange,
                        "section '" + it->first + "' leaves the fiber at point '" + doc.points[i] + "'",
                        {{"section", it->first}, {"point", doc.points[i]}});
        }
        values.push_back(static_cast<Element>(v));
    }
    return Section(atlas, std::move(values));
}

}  // namespace fibra::spec
