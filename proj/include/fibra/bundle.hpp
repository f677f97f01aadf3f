#pragma once

#include "fibra/algebra.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibra {

using PointIndex = std::size_t;
using ChartIndex = std::size_t;

struct ChartSpec {
    std::string name;
    std::vector<std::string> points;
};

/// Finite base: named points and a named chart cover.
///
/// Charts are kept in input order; the canonical chart of a point is the
/// least-index chart containing it.
class BaseSpace {
public:
    BaseSpace() = default;

    /// Throws InvalidBase (duplicate or unknown names, a chart named like a
    /// point) and NotACover (a point in no chart).
    static BaseSpace make(std::vector<std::string> points, std::vector<ChartSpec> charts);
    /// Index-based form; chart members are point indices.
    static BaseSpace make_indexed(std::vector<std::string> points,
                                  std::vector<std::pair<std::string, std::vector<PointIndex>>> charts);

    std::size_t point_count() const noexcept { return points_.size(); }
    std::size_t chart_count() const noexcept { return chart_names_.size(); }
    const std::string& point_name(PointIndex x) const { return points_.at(x); }
    const std::string& chart_name(ChartIndex c) const { return chart_names_.at(c); }
    std::span<const std::string> point_names() const noexcept { return points_; }
    std::span<const std::string> chart_names() const noexcept { return chart_names_; }

    std::optional<PointIndex> find_point(std::string_view name) const;
    std::optional<ChartIndex> find_chart(std::string_view name) const;

    bool contains(ChartIndex c, PointIndex x) const { return members_.at(c).at(x); }
    /// Sorted point indices of the chart.
    std::vector<PointIndex> chart_points(ChartIndex c) const;
    std::vector<ChartIndex> charts_containing(PointIndex x) const;
    ChartIndex canonical_chart(PointIndex x) const { return canonical_.at(x); }

    bool overlaps(ChartIndex a, ChartIndex b) const;
    bool overlaps(ChartIndex a, ChartIndex b, ChartIndex c) const;

    bool operator==(const BaseSpace&) const = default;

private:
    std::vector<std::string> points_;
    std::vector<std::string> chart_names_;
    std::vector<std::vector<bool>> members_;  // [chart][point]
    std::vector<ChartIndex> canonical_;
};

/// Transition given by chart names: `map` sends coordinates in chart `from`
/// to coordinates in chart `to`, i.e. it is t_{to,from}.
struct RawTransition {
    std::string from;
    std::string to;
    std::vector<std::int64_t> map;
};

/// Transition given by chart indices.
struct IndexedTransition {
    ChartIndex from;
    ChartIndex to;
    Permutation map;
};

/// Base, fiber carrier size and one transition bijection per ordered pair of
/// overlapping charts, constant over the overlap.
///
/// Validated atlases satisfy t_{αα} = id, t_{αβ} = t_{βα}⁻¹ and the cocycle
/// law on triple overlaps. Missing reverse and diagonal entries are completed
/// from the first two laws. The atlas is an immutable shared value: copies are
/// cheap and compare structurally.
class BundleAtlas {
public:
    /// Throws UnknownChart, DuplicateTransition, NonOverlappingTransition,
    /// NotABijection, IdentityLawViolated, InverseLawViolated,
    /// MissingTransition, CocycleViolated.
    static BundleAtlas validate(BaseSpace base, std::size_t fiber_size, std::span<const RawTransition> transitions);
    static BundleAtlas validate(BaseSpace base, std::size_t fiber_size, std::span<const IndexedTransition> transitions);
    /// Every transition is the identity.
    static BundleAtlas trivial(BaseSpace base, std::size_t fiber_size);

    const BaseSpace& base() const noexcept;
    std::size_t fiber_size() const noexcept;

    /// t_{to,from}; throws NonOverlappingStep when the charts do not overlap.
    const Permutation& transition(ChartIndex to, ChartIndex from) const;

    /// All explicitly stored (to, from) pairs, from < to and from > to alike.
    std::vector<IndexedTransition> transitions() const;

    friend bool operator==(const BundleAtlas& a, const BundleAtlas& b);

private:
    struct Impl;
    explicit BundleAtlas(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// A point of the total space written in some chart.
struct TotalPoint {
    PointIndex point = 0;
    ChartIndex chart = 0;
    Element value = 0;

    bool operator==(const TotalPoint&) const = default;
};

/// Rewrites `p` in the canonical chart of its base point. Throws PointNotInChart.
TotalPoint normalize_point(const BundleAtlas& atlas, const TotalPoint& p);

/// A global section: one fiber value per base point, stored in each point's
/// canonical chart.
class Section {
public:
    /// Throws SizeMismatch or ElementOutOfRange.
    Section(BundleAtlas bundle, std::vector<Element> values);

    const BundleAtlas& bundle() const noexcept { return bundle_; }
    std::span<const Element> values() const noexcept { return values_; }
    Element value(PointIndex x) const { return values_.at(x); }

    bool operator==(const Section& other) const { return values_ == other.values_ && bundle_ == other.bundle_; }
    bool operator<(const Section& other) const { return values_ < other.values_; }

private:
    BundleAtlas bundle_;
    std::vector<Element> values_;
};

Section constant_section(const BundleAtlas& bundle, Element value_in_canonical_charts);

/// Value of `s` at `x` read in `chart`. Throws PointNotInChart.
Element section_value(const Section& s, PointIndex x, ChartIndex chart);

inline constexpr std::size_t kDefaultSectionCap = 100000;

/// Γ of a bundle as an indexed family: section `i` has the MixedRadix digits of
/// `i` (point 0 most significant) as its canonical values.
class SectionEnumeration {
public:
    /// Throws CapExceeded when fiber_size^|M| > cap.
    explicit SectionEnumeration(BundleAtlas bundle, std::size_t cap = kDefaultSectionCap);

    std::size_t size() const noexcept { return count_; }
    const BundleAtlas& bundle() const noexcept { return bundle_; }
    Section operator[](std::size_t index) const;
    std::size_t index_of(const Section& s) const;

    class iterator {
    public:
        using value_type = Section;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const SectionEnumeration* owner, std::size_t pos) : owner_(owner), pos_(pos) {}
        Section operator*() const { return (*owner_)[pos_]; }
        iterator& operator++() { ++pos_; return *this; }
        iterator operator++(int) { auto t = *this; ++pos_; return t; }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }
    private:
        const SectionEnumeration* owner_ = nullptr;
        std::size_t pos_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }

private:
    BundleAtlas bundle_;
    std::size_t count_ = 0;
};

SectionEnumeration enumerate_sections(const BundleAtlas& bundle, std::size_t cap = kDefaultSectionCap);

/// Product over distinct bases. Base points are tuples of points and charts
/// are tuples of charts, both MixedRadix-ordered with the first factor most
/// significant and named "(a,b,...)". Fiber is the product carrier and
/// transitions act componentwise. Throws EmptyList.
BundleAtlas cartesian_product_bundles(std::span<const BundleAtlas> bundles);

/// Product over one shared base. Points are unchanged; charts are the tuples
/// (α₁..α_n) with nonempty U_{α₁}∩...∩U_{α_n}, in MixedRadix order and named
/// "(a,b,...)". Fiber is the product carrier and transitions act
/// componentwise. Throws EmptyList, BaseMismatch.
BundleAtlas reduced_product_bundles(std::span<const BundleAtlas> bundles);

/// n = 0: fiber of size 1 over the same base. n > 0: n-fold reduced product.
BundleAtlas bundle_power(const BundleAtlas& bundle, std::size_t n);

/// Splits a section of `reduced_product_bundles(factors)` into the tuple of
/// factor sections.
std::vector<Section> split_product_section(const Section& product, std::span<const BundleAtlas> factors);
/// Inverse of `split_product_section`.
Section join_product_section(const BundleAtlas& product, std::span<const Section> components);

/// Bundle map: base map F plus, for each source point x, a map from the fiber
/// over x (canonical chart) to the fiber over F(x) (canonical chart).
class FiberedMap {
public:
    /// Throws SizeMismatch or ElementOutOfRange.
    FiberedMap(BundleAtlas source, BundleAtlas target, std::vector<PointIndex> base_map,
               std::vector<Permutation> fiber_maps);

    static FiberedMap identity(const BundleAtlas& bundle);

    const BundleAtlas& source() const noexcept { return source_; }
    const BundleAtlas& target() const noexcept { return target_; }
    std::span<const PointIndex> base_map() const noexcept { return base_map_; }
    const Permutation& fiber_map(PointIndex x) const { return fiber_maps_.at(x); }

    bool base_is_bijective() const;

private:
    BundleAtlas source_;
    BundleAtlas target_;
    std::vector<PointIndex> base_map_;
    std::vector<Permutation> fiber_maps_;
};

/// outer ∘ inner. Throws BundleMismatch when inner's target is not outer's source.
FiberedMap compose(const FiberedMap& outer, const FiberedMap& inner);

/// u'(y) = f_{F⁻¹(y)}(u(F⁻¹(y))). Throws BaseMapNotBijective, BundleMismatch.
Section pushforward_section(const FiberedMap& f, const Section& u);

}  // namespace fibra
