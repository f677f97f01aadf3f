#pragma once

#include "fibra/algebra.hpp"
#include "fibra/bundle.hpp"
#include "fibra/fibered_algebra.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fibra {

// ------------------------------------------------------------ transformations

/// Per-point bijections of the fiber, each written in the point's canonical
/// chart. Only nonsingular (bijective) transformations are representable.
class BundleTransformation {
public:
    /// Throws SizeMismatch, NotBijective.
    BundleTransformation(BundleAtlas bundle, std::vector<Permutation> maps);

    const BundleAtlas& bundle() const noexcept { return bundle_; }
    const Permutation& at(PointIndex x) const { return maps_.at(x); }
    std::span<const Permutation> maps() const noexcept { return maps_; }

    bool operator==(const BundleTransformation& o) const { return maps_ == o.maps_ && bundle_ == o.bundle_; }

private:
    BundleAtlas bundle_;
    std::vector<Permutation> maps_;
};

BundleTransformation identity_transformation(const BundleAtlas& bundle);
/// result(x) = t_x(u(x)). Throws BundleMismatch.
Section apply_transformation(const BundleTransformation& t, const Section& u);
/// (outer ∘ inner)_x = outer_x ∘ inner_x. Throws BundleMismatch.
BundleTransformation compose(const BundleTransformation& outer, const BundleTransformation& inner);
BundleTransformation inverse(const BundleTransformation& t);

// --------------------------------------------------------------- fibered group

/// Fibered algebra whose fiber is a group; transitions are group automorphisms.
class FiberedGroup {
public:
    /// Throws NotAGroup (plus the symbol lookup errors of is_group).
    FiberedGroup(FiberedAlgebra fa, std::string mul, std::string inv, std::string unit);

    const FiberedAlgebra& algebra() const noexcept { return fa_; }
    const BundleAtlas& atlas() const noexcept { return fa_.atlas(); }
    const GroupStructure& group() const noexcept { return group_; }
    std::size_t order() const noexcept { return group_.order(); }

    Section unit_section() const;
    /// Pointwise product (g h)(x) = g(x) h(x).
    Section multiply(const Section& g, const Section& h) const;
    Section inverse(const Section& g) const;

    bool operator==(const FiberedGroup& o) const { return fa_ == o.fa_ && group_ == o.group_; }

private:
    FiberedAlgebra fa_;
    GroupStructure group_;
};

/// Same atlas over the opposite fiber group.
FiberedGroup opposite(const FiberedGroup& g);

// ------------------------------------------------------------- representation

/// Covariant: ρ(ab) = ρ(a)∘ρ(b) (a left action).
/// Contravariant: ρ(ab) = ρ(b)∘ρ(a), i.e. μ·(ab) = (μ·a)·b (a right action).
enum class Variance { Covariant, Contravariant };

std::string_view to_string(Variance v);

/// Unvalidated action data for one point: `table[g][μ]` is the image of fiber
/// element μ under ρ_x(g).
using RawActionTable = std::vector<std::vector<std::int64_t>>;

/// Action tables per base point, in canonical charts of both bundles.
struct RawAction {
    std::vector<RawActionTable> points;
};

/// Action table of one point written in a non-canonical pair of charts: the
/// group element is read in `group_chart` of the group bundle and fiber
/// elements in `target_chart` of the target bundle.
struct LocalActionEntry {
    PointIndex point = 0;
    ChartIndex group_chart = 0;
    ChartIndex target_chart = 0;
    RawActionTable table;
};

/// Representation of a fibered group on a bundle over the same points.
///
/// Stored as one action table per point in canonical charts. For a chart
/// pair (γ, α) the same action reads
///   ρ^{γα}_x(g) = t^A_{α c} ∘ ρ_x(t^G_{c_G γ}(g)) ∘ t^A_{c α}
/// where c, c_G are the canonical charts; data supplied per chart must agree
/// with this conjugation rule (see make_representation_local).
class GroupRepresentation {
public:
    const FiberedGroup& group() const noexcept { return group_; }
    const BundleAtlas& target() const noexcept { return target_; }
    Variance variance() const noexcept { return variance_; }

    /// ρ_x(g) in canonical charts.
    const Permutation& action(PointIndex x, Element g) const { return tables_.at(x).at(g); }
    std::span<const std::vector<Permutation>> tables() const noexcept { return tables_; }

    /// ρ_x(g) with g read in `group_chart` and fiber values in `target_chart`.
    /// Throws PointNotInChart.
    Permutation action_in_charts(PointIndex x, ChartIndex group_chart, ChartIndex target_chart, Element g) const;

    /// Section-level f(g): the transformation x ↦ ρ_x(g(x)).
    BundleTransformation transformation(const Section& group_section) const;
    /// f(g)u. Throws BundleMismatch.
    Section act(const Section& group_section, const Section& u) const;

private:
    friend GroupRepresentation make_representation(FiberedGroup, BundleAtlas, Variance, const RawAction&);
    GroupRepresentation(FiberedGroup g, BundleAtlas target, Variance v, std::vector<std::vector<Permutation>> tables);

    FiberedGroup group_;
    BundleAtlas target_;
    Variance variance_;
    std::vector<std::vector<Permutation>> tables_;  // [point][group element]
};

/// Validates shape, bijectivity, the unit law ρ_x(ε) = id and the composition
/// law for the declared variance, exhaustively. Errors carry witnesses:
/// BaseMismatch, SizeMismatch, NotBijective, UnitLawViolated,
/// CompositionLawViolated (point, a, b, mu).
GroupRepresentation make_representation(FiberedGroup g, BundleAtlas target, Variance variance, const RawAction& action);

/// Tabulates `rho(x, g, mu)` over canonical charts, then validates.
GroupRepresentation make_representation(FiberedGroup g, BundleAtlas target, Variance variance,
                                        const std::function<Element(PointIndex, Element, Element)>& rho);

/// Accepts action tables written in arbitrary chart pairs, at least one per
/// point. Each entry is transported to canonical charts; all entries of a
/// point must agree (EquivarianceViolated otherwise). The result is then
/// validated by make_representation.
GroupRepresentation make_representation_local(FiberedGroup g, BundleAtlas target, Variance variance,
                                              std::span<const LocalActionEntry> entries);

enum class ShiftSide { Left, Right };

/// Left shift ρ(a)b = ab (covariant) or right shift ρ(a)b = ba
/// (contravariant) of the fibered group on itself. The multiplication rule is
/// applied in every chart and the chart-local tables go through
/// make_representation_local.
GroupRepresentation shift_representation(const FiberedGroup& g, ShiftSide side);

/// ρ ≡ id on `target`.
GroupRepresentation trivial_representation(const FiberedGroup& g, const BundleAtlas& target,
                                           Variance variance = Variance::Covariant);

/// ρ_x(a⁻¹), after checking it equals ρ_x(a)⁻¹ (MismatchDetected otherwise).
Permutation rep_inverse_image(const GroupRepresentation& r, Element a, PointIndex x);

/// {g ∈ Γ(G) : f(g) = e}, sorted. Verified to be a subgroup under pointwise
/// multiplication (MismatchDetected otherwise). Throws CapExceeded.
std::vector<Section> kernel_of_inefficiency(const GroupRepresentation& r, std::size_t cap = kDefaultSectionCap);
bool is_effective(const GroupRepresentation& r, std::size_t cap = kDefaultSectionCap);

/// {f(g)u : g ∈ Γ(G)}, sorted. Throws CapExceeded.
std::vector<Section> orbit(const GroupRepresentation& r, const Section& u, std::size_t cap = kDefaultSectionCap);

struct OrbitPartition {
    SectionEnumeration universe;
    /// Blocks of section indices into `universe`, each sorted, ordered by
    /// their least element.
    std::vector<std::vector<std::size_t>> blocks;
};

/// Distinct orbits of Γ(A). Overlapping orbits would contradict the orbit
/// equality law and raise MismatchDetected.
OrbitPartition orbit_partition(const GroupRepresentation& r, std::size_t cap = kDefaultSectionCap);

struct TransitivityReport {
    bool transitive = false;
    bool single_transitive = false;
    bool effective = false;

    bool operator==(const TransitivityReport&) const = default;
};

/// Per-fiber test: for every x and every b ∈ A_x, g ↦ ρ_x(g)b is a bijection
/// G → A_x.
bool fiberwise_single_transitive(const GroupRepresentation& r);

/// Section-level verdicts. `single_transitive` counts group sections per
/// section pair and is cross-checked against fiberwise_single_transitive
/// (CriterionDisagreement on mismatch).
TransitivityReport transitivity_report(const GroupRepresentation& r, std::size_t cap = kDefaultSectionCap);

/// The unique group section g with w = f(g)v, solved point by point.
/// Throws NotSingleTransitive, BundleMismatch.
Section coordinates(const GroupRepresentation& r, const Section& reference, const Section& w);

/// Twin of a single-transitive covariant representation f with respect to a
/// reference section v: per fiber, φ_x(g) = ρ_x(g)v(x) transports right
/// multiplication, h_x(a) = φ_x ∘ (· a) ∘ φ_x⁻¹. The result is a
/// contravariant (right) representation commuting with f; commutation is
/// re-verified for all a, b, x. Throws NotCovariant, NotSingleTransitive.
GroupRepresentation twin_representation(const GroupRepresentation& r, const Section& reference);

/// f(g) = (f₁(g), f₂(g)) on the reduced product of the two target bundles.
/// Throws GroupMismatch, BaseMismatch, VarianceMismatch.
GroupRepresentation direct_product_representations(const GroupRepresentation& r1, const GroupRepresentation& r2);

/// The same action data read over the opposite fibered group, with the
/// variance flipped. Applying it twice returns the original tables.
GroupRepresentation to_star_t(const GroupRepresentation& r);

// ---------------------------------------------- general algebra representation

/// How the carrier of a transformation algebra relates to composition of its
/// listed transformations, when it does.
struct CompositionLaw {
    std::string mul;
    std::string unit;
    /// Covariant: mul(i, j) lists t_i ∘ t_j; contravariant: t_j ∘ t_i.
    Variance order = Variance::Covariant;
};

/// A finite algebra whose carrier indexes a list of bundle transformations.
struct TransformationAlgebra {
    FiniteAlgebra algebra;
    std::vector<BundleTransformation> elements;
    std::optional<CompositionLaw> composition;
};

/// True iff, at every point x, `map_per_point[x]` (fiber of `b` → carrier of
/// the transformation algebra) is a homomorphism. Throws SignatureMismatch;
/// NotClosed when the list does not match the carrier, mixes bundles, or
/// disagrees with the declared composition law; SizeMismatch,
/// ElementOutOfRange for malformed map data.
bool general_representation_validate(const FiberedAlgebra& b, const TransformationAlgebra& t,
                                     std::span<const Permutation> map_per_point);

/// ρ_x(e) = elements[map_per_point[x][e]]_x as raw action data.
RawAction action_from_transformation_map(const TransformationAlgebra& t, std::span<const Permutation> map_per_point);

}  // namespace fibra
