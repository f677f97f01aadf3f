#pragma once

// JSON input documents describing a bundle, its fiber algebra and optionally
// a representation. Schema (UTF-8 JSON object):
//
//   signature       [{ "name": str, "arity": int }]               optional
//   fiber           { "size": int,
//                     "tables": { symbol: nested int array },      arity-k symbols nest k deep
//                     "group": { "mul", "inv", "unit" } }          group optional
//   base            { "points": [str], "charts": [{ "name": str, "points": [str] }] }
//   transitions     [{ "from": chart, "to": chart, "map": [int] }] reverse/diagonal auto-completed
//   sections        { name: { point: int } }                       optional, canonical charts
//   representation  { "variance": "covariant" | "contravariant",   optional
//                     "group_spec": path | inline document,        omitted: this document
//                     "action": { point: { g: [int] } | [[int]] } }

#include "fibra/algebra.hpp"
#include "fibra/bundle.hpp"
#include "fibra/fibered_algebra.hpp"
#include "fibra/representation.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibra::spec {

struct GroupDesignation {
    std::string mul;
    std::string inv;
    std::string unit;
};

struct SpecDocument;

struct RepresentationSpec {
    Variance variance = Variance::Covariant;
    /// Null when the document acts on itself.
    std::shared_ptr<const SpecDocument> group_spec;
    /// Per point (document order), per group element, the image list.
    RawAction action;
};

struct SpecDocument {
    std::optional<Signature> signature;
    std::size_t fiber_size = 0;
    std::map<std::string, RawTable, std::less<>> tables;
    std::optional<GroupDesignation> group;
    std::vector<std::string> points;
    std::vector<ChartSpec> charts;
    std::vector<RawTransition> transitions;
    /// Sorted by name; values in point order.
    std::map<std::string, std::vector<std::int64_t>, std::less<>> sections;
    std::optional<RepresentationSpec> representation;
};

/// Parses and resolves every cross-reference (chart, point and symbol
/// names). Throws SyntaxError (detail "line"), UnknownReference (detail
/// "name"), SchemaViolation (detail "field"). Relative `group_spec` paths
/// resolve against `base_dir`.
SpecDocument parse_spec(std::string_view text, const std::filesystem::path& base_dir = {});
SpecDocument parse_spec_file(const std::filesystem::path& path);

// Library objects built from a parsed document; these raise the library's
// validation errors.

BundleAtlas build_atlas(const SpecDocument& doc);
/// Bare set of the fiber size when the document has no signature.
FiniteAlgebra build_fiber(const SpecDocument& doc);
FiberedAlgebra build_fibered_algebra(const SpecDocument& doc);
/// Throws MissingSection without a group designation.
FiberedGroup build_fibered_group(const SpecDocument& doc);
/// Throws MissingSection without a representation block.
GroupRepresentation build_representation(const SpecDocument& doc);
/// Throws MissingSection for an unknown name.
Section build_section(const SpecDocument& doc, const BundleAtlas& atlas, std::string_view name);

}  // namespace fibra::spec
