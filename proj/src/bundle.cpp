#include "fibra/bundle.hpp"

#include "fibra/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fibra {

// ---------------------------------------------------------------- BaseSpace

BaseSpace BaseSpace::make(std::vector<std::string> points, std::vector<ChartSpec> charts)
{
    std::map<std::string, PointIndex, std::less<>> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        index.emplace(points[i], i);
    }
    std::vector<std::pair<std::string, std::vector<PointIndex>>> indexed;
    indexed.reserve(charts.size());
    for (auto& c : charts) {
        std::vector<PointIndex> members;
        for (const auto& p : c.points) {
            auto it = index.find(p);
            if (it == index.end()) {
                throw Error(ErrorKind::InvalidBase, "chart '" + c.name + "' names unknown point '" + p + "'",
                            {{"chart", c.name}, {"point", p}});
            }
            members.push_back(it->second);
        }
        indexed.emplace_back(std::move(c.name), std::move(members));
    }
    return make_indexed(std::move(points), std::move(indexed));
}

BaseSpace BaseSpace::make_indexed(std::vector<std::string> points,
                                  std::vector<std::pair<std::string, std::vector<PointIndex>>> charts)
{
    BaseSpace b;
    std::set<std::string_view> seen;
    for (const auto& p : points) {
        if (p.empty() || !seen.insert(p).second) {
            throw Error(ErrorKind::InvalidBase, "point names must be non-empty and distinct: '" + p + "'",
                        {{"point", p}});
        }
    }
    seen.clear();
    for (const auto& [name, _] : charts) {
        if (name.empty() || !seen.insert(name).second) {
            throw Error(ErrorKind::InvalidBase, "chart names must be non-empty and distinct: '" + name + "'",
                        {{"chart", name}});
        }
    }
    b.points_ = std::move(points);
    const std::size_t n = b.points_.size();
    for (auto& [name, members] : charts) {
        std::vector<bool> row(n, false);
        for (PointIndex x : members) {
            if (x >= n) {
                throw Error(ErrorKind::InvalidBase, "chart '" + name + "' names point index out of range",
                            {{"chart", name}});
            }
            row[x] = true;
        }
        b.chart_names_.push_back(std::move(name));
        b.members_.push_back(std::move(row));
    }
    b.canonical_.resize(n);
    for (PointIndex x = 0; x < n; ++x) {
        auto c = std::find_if(b.members_.begin(), b.members_.end(), [x](const auto& row) { return row[x]; });
        if (c == b.members_.end()) {
            throw Error(ErrorKind::NotACover, "point '" + b.points_[x] + "' lies in no chart",
                        {{"point", b.points_[x]}});
        }
        b.canonical_[x] = static_cast<ChartIndex>(c - b.members_.begin());
    }
    return b;
}

std::optional<PointIndex> BaseSpace::find_point(std::string_view name) const
{
    auto it = std::find(points_.begin(), points_.end(), name);
    if (it == points_.end()) {
        return std::nullopt;
    }
    return static_cast<PointIndex>(it - points_.begin());
}

std::optional<ChartIndex> BaseSpace::find_chart(std::string_view name) const
{
    auto it = std::find(chart_names_.begin(), chart_names_.end(), name);
    if (it == chart_names_.end()) {
        return std::nullopt;
    }
    return static_cast<ChartIndex>(it - chart_names_.begin());
}

std::vector<PointIndex> BaseSpace::chart_points(ChartIndex c) const
{
    std::vector<PointIndex> out;
    for (PointIndex x = 0; x < points_.size(); ++x) {
        if (members_.at(c)[x]) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<ChartIndex> BaseSpace::charts_containing(PointIndex x) const
{
    std::vector<ChartIndex> out;
    for (ChartIndex c = 0; c < members_.size(); ++c) {
        if (members_[c].at(x)) {
            out.push_back(c);
        }
    }
    return out;
}

bool BaseSpace::overlaps(ChartIndex a, ChartIndex b) const
{
    for (PointIndex x = 0; x < points_.size(); ++x) {
        if (members_.at(a)[x] && members_.at(b)[x]) {
            return true;
        }
    }
    return false;
}

bool BaseSpace::overlaps(ChartIndex a, ChartIndex b, ChartIndex c) const
{
    for (PointIndex x = 0; x < points_.size(); ++x) {
        if (members_.at(a)[x] && members_.at(b)[x] && members_.at(c)[x]) {
            return true;
        }
    }
    return false;
}

// -------------------------------------------------------------- BundleAtlas

struct BundleAtlas::Impl {
    BaseSpace base;
    std::size_t fiber_size = 0;
    std::vector<std::optional<Permutation>> table;  // [to * charts + from]

    const std::optional<Permutation>& at(ChartIndex to, ChartIndex from) const
    {
        return table[to * base.chart_count() + from];
    }
};

namespace {

std::string pair_label(const BaseSpace& b, ChartIndex from, ChartIndex to)
{
    return b.chart_name(from) + "->" + b.chart_name(to);
}

}  // namespace

BundleAtlas BundleAtlas::validate(BaseSpace base, std::size_t fiber_size, std::span<const RawTransition> transitions)
{
    std::vector<IndexedTransition> indexed;
    indexed.reserve(transitions.size());
    for (const auto& t : transitions) {
        auto from = base.find_chart(t.from);
        auto to = base.find_chart(t.to);
        if (!from || !to) {
            const std::string& bad = from ? t.to : t.from;
            throw Error(ErrorKind::UnknownChart, "transition names unknown chart '" + bad + "'", {{"chart", bad}});
        }
        Permutation map(t.map.size());
        for (std::size_t i = 0; i < t.map.size(); ++i) {
            const std::int64_t v = t.map[i];
            if (v < 0 || static_cast<std::uint64_t>(v) >= fiber_size) {
                throw Error(ErrorKind::NotABijection,
                            "transition " + t.from + "->" + t.to + " leaves the fiber at index " + std::to_string(i),
                            {{"from", t.from}, {"to", t.to}, {"index", std::to_string(i)}});
            }
            map[i] = static_cast<Element>(v);
        }
        indexed.push_back({*from, *to, std::move(map)});
    }
    return validate(std::move(base), fiber_size, std::span<const IndexedTransition>(indexed));
}

BundleAtlas BundleAtlas::validate(BaseSpace base, std::size_t fiber_size,
                                  std::span<const IndexedTransition> transitions)
{
    if (fiber_size == 0) {
        throw Error(ErrorKind::SizeMismatch, "fiber size must be positive");
    }
    auto impl = std::make_shared<Impl>();
    const std::size_t k = base.chart_count();
    impl->fiber_size = fiber_size;
    impl->table.assign(k * k, std::nullopt);

    for (const auto& t : transitions) {
        if (t.from >= k || t.to >= k) {
            throw Error(ErrorKind::UnknownChart, "transition chart index out of range");
        }
        const std::string label = pair_label(base, t.from, t.to);
        const Error::Details where = {{"from", base.chart_name(t.from)}, {"to", base.chart_name(t.to)}};
        if (!base.overlaps(t.from, t.to)) {
            throw Error(ErrorKind::NonOverlappingTransition, "transition " + label + " between disjoint charts", where);
        }
        if (!is_bijection(t.map, fiber_size)) {
            throw Error(ErrorKind::NotABijection, "transition " + label + " is not a bijection of the fiber", where);
        }
        if (t.from == t.to && t.map != identity_permutation(fiber_size)) {
            throw Error(ErrorKind::IdentityLawViolated, "transition " + label + " is not the identity", where);
        }
        auto& slot = impl->table[t.to * k + t.from];
        if (slot) {
            throw Error(ErrorKind::DuplicateTransition, "transition " + label + " given twice", where);
        }
        slot = t.map;
    }

    for (ChartIndex a = 0; a < k; ++a) {
        for (ChartIndex b = 0; b < k; ++b) {
            if (!base.overlaps(a, b)) {
                continue;
            }
            auto& ba = impl->table[b * k + a];
            auto& ab = impl->table[a * k + b];
            if (a == b) {
                if (!ba) {
                    ba = identity_permutation(fiber_size);
                }
                continue;
            }
            if (ba && ab) {
                if (compose(*ab, *ba) != identity_permutation(fiber_size)) {
                    throw Error(ErrorKind::InverseLawViolated,
                                "transitions " + pair_label(base, a, b) + " and " + pair_label(base, b, a)
                                    + " are not mutually inverse",
                                {{"from", base.chart_name(a)}, {"to", base.chart_name(b)}});
                }
            } else if (ba) {
                ab = inverse(*ba);
            } else if (ab) {
                ba = inverse(*ab);
            } else {
                throw Error(ErrorKind::MissingTransition,
                            "overlapping charts " + base.chart_name(a) + " and " + base.chart_name(b)
                                + " have no transition",
                            {{"from", base.chart_name(a)}, {"to", base.chart_name(b)}});
            }
        }
    }

    for (ChartIndex a = 0; a < k; ++a) {
        for (ChartIndex b = 0; b < k; ++b) {
            for (ChartIndex c = 0; c < k; ++c) {
                if (a == b || b == c || a == c || !base.overlaps(a, b, c)) {
                    continue;
                }
                const auto& ba = *impl->table[b * k + a];
                const auto& cb = *impl->table[c * k + b];
                const auto& ca = *impl->table[c * k + a];
                if (compose(cb, ba) != ca) {
                    throw Error(ErrorKind::CocycleViolated,
                                "cocycle fails on charts (" + base.chart_name(a) + ", " + base.chart_name(b) + ", "
                                    + base.chart_name(c) + ")",
                                {{"alpha", base.chart_name(a)}, {"beta", base.chart_name(b)}, {"gamma", base.chart_name(c)}});
                }
            }
        }
    }
    impl->base = std::move(base);
    return BundleAtlas(std::move(impl));
}

BundleAtlas BundleAtlas::trivial(BaseSpace base, std::size_t fiber_size)
{
    std::vector<IndexedTransition> ts;
    for (ChartIndex a = 0; a < base.chart_count(); ++a) {
        for (ChartIndex b = a + 1; b < base.chart_count(); ++b) {
            if (base.overlaps(a, b)) {
                ts.push_back({a, b, identity_permutation(fiber_size)});
            }
        }
    }
    return validate(std::move(base), fiber_size, ts);
}

const BaseSpace& BundleAtlas::base() const noexcept
{
    return impl_->base;
}

std::size_t BundleAtlas::fiber_size() const noexcept
{
    return impl_->fiber_size;
}

const Permutation& BundleAtlas::transition(ChartIndex to, ChartIndex from) const
{
    const std::size_t k = impl_->base.chart_count();
    if (to >= k || from >= k || !impl_->at(to, from)) {
        throw Error(ErrorKind::NonOverlappingStep, "no transition between these charts");
    }
    return *impl_->at(to, from);
}

std::vector<IndexedTransition> BundleAtlas::transitions() const
{
    std::vector<IndexedTransition> out;
    const std::size_t k = impl_->base.chart_count();
    for (ChartIndex to = 0; to < k; ++to) {
        for (ChartIndex from = 0; from < k; ++from) {
            if (from != to && impl_->at(to, from)) {
                out.push_back({from, to, *impl_->at(to, from)});
            }
        }
    }
    return out;
}

bool operator==(const BundleAtlas& a, const BundleAtlas& b)
{
    if (a.impl_ == b.impl_) {
        return true;
    }
    return a.impl_->fiber_size == b.impl_->fiber_size && a.impl_->base == b.impl_->base
           && a.impl_->table == b.impl_->table;
}

// ------------------------------------------------------- points and sections

TotalPoint normalize_point(const BundleAtlas& atlas, const TotalPoint& p)
{
    const BaseSpace& base = atlas.base();
    if (p.point >= base.point_count() || p.chart >= base.chart_count() || !base.contains(p.chart, p.point)) {
        throw Error(ErrorKind::PointNotInChart, "point is not in the given chart");
    }
    if (p.value >= atlas.fiber_size()) {
        throw Error(ErrorKind::ElementOutOfRange, "fiber value outside the carrier");
    }
    const ChartIndex c = base.canonical_chart(p.point);
    return {p.point, c, atlas.transition(c, p.chart)[p.value]};
}

Section::Section(BundleAtlas bundle, std::vector<Element> values) : bundle_(std::move(bundle)), values_(std::move(values))
{
    if (values_.size() != bundle_.base().point_count()) {
        throw Error(ErrorKind::SizeMismatch, "section needs one value per base point");
    }
    for (std::size_t x = 0; x < values_.size(); ++x) {
        if (values_[x] >= bundle_.fiber_size()) {
            throw Error(ErrorKind::ElementOutOfRange, "section value outside the fiber at point '"
                                                          + bundle_.base().point_name(x) + "'",
                        {{"point", bundle_.base().point_name(x)}});
        }
    }
}

Section constant_section(const BundleAtlas& bundle, Element value)
{
    return Section(bundle, std::vector<Element>(bundle.base().point_count(), value));
}

Element section_value(const Section& s, PointIndex x, ChartIndex chart)
{
    const BaseSpace& base = s.bundle().base();
    if (x >= base.point_count() || chart >= base.chart_count() || !base.contains(chart, x)) {
        throw Error(ErrorKind::PointNotInChart, "point is not in the given chart");
    }
    return s.bundle().transition(chart, base.canonical_chart(x))[s.value(x)];
}

SectionEnumeration::SectionEnumeration(BundleAtlas bundle, std::size_t cap) : bundle_(std::move(bundle))
{
    const std::size_t points = bundle_.base().point_count();
    const std::size_t fiber = bundle_.fiber_size();
    count_ = 1;
    for (std::size_t i = 0; i < points; ++i) {
        if (count_ > cap / fiber) {
            throw Error(ErrorKind::CapExceeded,
                        "section count " + std::to_string(fiber) + "^" + std::to_string(points) + " exceeds cap "
                            + std::to_string(cap),
                        {{"cap", std::to_string(cap)}});
        }
        count_ *= fiber;
    }
    if (count_ > cap) {
        throw Error(ErrorKind::CapExceeded, "section count exceeds cap", {{"cap", std::to_string(cap)}});
    }
}

Section SectionEnumeration::operator[](std::size_t index) const
{
    const std::size_t points = bundle_.base().point_count();
    const std::size_t fiber = bundle_.fiber_size();
    std::vector<Element> values(points);
    for (std::size_t x = points; x-- > 0;) {
        values[x] = static_cast<Element>(index % fiber);
        index /= fiber;
    }
    return Section(bundle_, std::move(values));
}

std::size_t SectionEnumeration::index_of(const Section& s) const
{
    std::size_t idx = 0;
    for (Element v : s.values()) {
        idx = idx * bundle_.fiber_size() + v;
    }
    return idx;
}

SectionEnumeration enumerate_sections(const BundleAtlas& bundle, std::size_t cap)
{
    return SectionEnumeration(bundle, cap);
}

// ----------------------------------------------------------------- products

namespace {

std::string tuple_name(const std::vector<std::string>& parts)
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += parts[i];
    }
    return s + ")";
}

MixedRadix fiber_radix(std::span<const BundleAtlas> bundles)
{
    std::vector<std::size_t> sizes;
    for (const auto& b : bundles) {
        sizes.push_back(b.fiber_size());
    }
    return MixedRadix(std::move(sizes));
}

Permutation componentwise(const MixedRadix& radix, const std::vector<const Permutation*>& maps)
{
    Permutation out(radix.size());
    for (std::size_t v = 0; v < radix.size(); ++v) {
        auto digits = radix.decode(v);
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (maps[i]) {
                digits[i] = (*maps[i])[digits[i]];
            }
        }
        out[v] = static_cast<Element>(radix.encode(digits));
    }
    return out;
}

}  // namespace

BundleAtlas cartesian_product_bundles(std::span<const BundleAtlas> bundles)
{
    if (bundles.empty()) {
        throw Error(ErrorKind::EmptyList, "product of an empty list of bundles");
    }
    std::vector<std::size_t> point_counts, chart_counts;
    for (const auto& b : bundles) {
        point_counts.push_back(b.base().point_count());
        chart_counts.push_back(b.base().chart_count());
    }
    const MixedRadix points(point_counts);
    const MixedRadix charts(chart_counts);
    const std::size_t n = bundles.size();

    std::vector<std::string> point_names;
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto d = points.decode(p);
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < n; ++i) {
            parts.push_back(bundles[i].base().point_name(d[i]));
        }
        point_names.push_back(tuple_name(parts));
    }

    std::vector<std::pair<std::string, std::vector<PointIndex>>> chart_specs;
    std::vector<std::vector<std::size_t>> chart_tuples;
    for (std::size_t c = 0; c < charts.size(); ++c) {
        const auto d = charts.decode(c);
        std::vector<PointIndex> members;
        for (std::size_t p = 0; p < points.size(); ++p) {
            const auto pd = points.decode(p);
            bool in = true;
            for (std::size_t i = 0; i < n && in; ++i) {
                in = bundles[i].base().contains(d[i], pd[i]);
            }
            if (in) {
                members.push_back(p);
            }
        }
        if (members.empty()) {
            continue;
        }
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < n; ++i) {
            parts.push_back(bundles[i].base().chart_name(d[i]));
        }
        chart_specs.emplace_back(tuple_name(parts), std::move(members));
        chart_tuples.push_back(d);
    }
    BaseSpace base = BaseSpace::make_indexed(std::move(point_names), std::move(chart_specs));

    const MixedRadix fiber = fiber_radix(bundles);
    std::vector<IndexedTransition> transitions;
    for (ChartIndex a = 0; a < chart_tuples.size(); ++a) {
        for (ChartIndex b = 0; b < chart_tuples.size(); ++b) {
            if (a == b || !base.overlaps(a, b)) {
                continue;
            }
            std::vector<const Permutation*> maps(n);
            for (std::size_t i = 0; i < n; ++i) {
                maps[i] = &bundles[i].transition(chart_tuples[b][i], chart_tuples[a][i]);
            }
            transitions.push_back({a, b, componentwise(fiber, maps)});
        }
    }
    return BundleAtlas::validate(std::move(base), fiber.size(), std::span<const IndexedTransition>(transitions));
}

BundleAtlas reduced_product_bundles(std::span<const BundleAtlas> bundles)
{
    if (bundles.empty()) {
        throw Error(ErrorKind::EmptyList, "reduced product of an empty list of bundles");
    }
    const BaseSpace& shared = bundles.front().base();
    for (const auto& b : bundles) {
        if (!(b.base() == shared)) {
            throw Error(ErrorKind::BaseMismatch, "reduced product needs one shared base");
        }
    }
    const std::size_t n = bundles.size();
    const MixedRadix charts(std::vector<std::size_t>(n, shared.chart_count()));

    std::vector<std::pair<std::string, std::vector<PointIndex>>> chart_specs;
    std::vector<std::vector<std::size_t>> chart_tuples;
    for (std::size_t c = 0; c < charts.size(); ++c) {
        const auto d = charts.decode(c);
        std::vector<PointIndex> members;
        for (PointIndex x = 0; x < shared.point_count(); ++x) {
            if (std::all_of(d.begin(), d.end(), [&](std::size_t ci) { return shared.contains(ci, x); })) {
                members.push_back(x);
            }
        }
        if (members.empty()) {
            continue;
        }
        std::vector<std::string> parts;
        for (std::size_t ci : d) {
            parts.push_back(shared.chart_name(ci));
        }
        chart_specs.emplace_back(tuple_name(parts), std::move(members));
        chart_tuples.push_back(d);
    }
    BaseSpace base = BaseSpace::make_indexed(std::vector<std::string>(shared.point_names().begin(), shared.point_names().end()),
                                             std::move(chart_specs));

    const MixedRadix fiber = fiber_radix(bundles);
    std::vector<IndexedTransition> transitions;
    for (ChartIndex a = 0; a < chart_tuples.size(); ++a) {
        for (ChartIndex b = 0; b < chart_tuples.size(); ++b) {
            if (a == b || !base.overlaps(a, b)) {
                continue;
            }
            std::vector<const Permutation*> maps(n);
            for (std::size_t i = 0; i < n; ++i) {
                maps[i] = &bundles[i].transition(chart_tuples[b][i], chart_tuples[a][i]);
            }
            transitions.push_back({a, b, componentwise(fiber, maps)});
        }
    }
    return BundleAtlas::validate(std::move(base), fiber.size(), std::span<const IndexedTransition>(transitions));
}

BundleAtlas bundle_power(const BundleAtlas& bundle, std::size_t n)
{
    if (n == 0) {
        return BundleAtlas::trivial(bundle.base(), 1);
    }
    const std::vector<BundleAtlas> copies(n, bundle);
    return reduced_product_bundles(copies);
}

// The canonical chart of x in a reduced product is the tuple (c, ..., c) of
// x's canonical base chart: tuples are MixedRadix-ordered and c is the least
// chart containing x. Product canonical values therefore decode directly into
// factor canonical values.
std::vector<Section> split_product_section(const Section& product, std::span<const BundleAtlas> factors)
{
    const MixedRadix radix = fiber_radix(factors);
    if (radix.size() != product.bundle().fiber_size()) {
        throw Error(ErrorKind::BundleMismatch, "factors do not match the product fiber");
    }
    const std::size_t points = product.bundle().base().point_count();
    std::vector<std::vector<Element>> values(factors.size(), std::vector<Element>(points));
    for (PointIndex x = 0; x < points; ++x) {
        const auto d = radix.decode(product.value(x));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            values[i][x] = static_cast<Element>(d[i]);
        }
    }
    std::vector<Section> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out.emplace_back(factors[i], std::move(values[i]));
    }
    return out;
}

Section join_product_section(const BundleAtlas& product, std::span<const Section> components)
{
    std::vector<std::size_t> sizes;
    for (const auto& s : components) {
        sizes.push_back(s.bundle().fiber_size());
    }
    const MixedRadix radix(std::move(sizes));
    if (radix.size() != product.fiber_size()) {
        throw Error(ErrorKind::BundleMismatch, "components do not match the product fiber");
    }
    std::vector<Element> values(product.base().point_count());
    std::vector<std::size_t> digits(components.size());
    for (PointIndex x = 0; x < values.size(); ++x) {
        for (std::size_t i = 0; i < components.size(); ++i) {
            digits[i] = components[i].value(x);
        }
        values[x] = static_cast<Element>(radix.encode(digits));
    }
    return Section(product, std::move(values));
}

// -------------------------------------------------------------- FiberedMap

FiberedMap::FiberedMap(BundleAtlas source, BundleAtlas target, std::vector<PointIndex> base_map,
                       std::vector<Permutation> fiber_maps)
    : source_(std::move(source)), target_(std::move(target)), base_map_(std::move(base_map)),
      fiber_maps_(std::move(fiber_maps))
{
    const std::size_t points = source_.base().point_count();
    if (base_map_.size() != points || fiber_maps_.size() != points) {
        throw Error(ErrorKind::SizeMismatch, "fibered map needs one base image and one fiber map per point");
    }
    for (PointIndex x = 0; x < points; ++x) {
        if (base_map_[x] >= target_.base().point_count()) {
            throw Error(ErrorKind::ElementOutOfRange, "base map leaves the target base");
        }
        if (fiber_maps_[x].size() != source_.fiber_size()) {
            throw Error(ErrorKind::SizeMismatch, "fiber map has the wrong length");
        }
        for (Element v : fiber_maps_[x]) {
            if (v >= target_.fiber_size()) {
                throw Error(ErrorKind::ElementOutOfRange, "fiber map leaves the target fiber");
            }
        }
    }
}

FiberedMap FiberedMap::identity(const BundleAtlas& bundle)
{
    const std::size_t points = bundle.base().point_count();
    std::vector<PointIndex> base(points);
    for (PointIndex x = 0; x < points; ++x) {
        base[x] = x;
    }
    return FiberedMap(bundle, bundle, std::move(base),
                      std::vector<Permutation>(points, identity_permutation(bundle.fiber_size())));
}

bool FiberedMap::base_is_bijective() const
{
    if (source_.base().point_count() != target_.base().point_count()) {
        return false;
    }
    Permutation p(base_map_.begin(), base_map_.end());
    return is_bijection(p, target_.base().point_count());
}

FiberedMap compose(const FiberedMap& outer, const FiberedMap& inner)
{
    if (!(inner.target() == outer.source())) {
        throw Error(ErrorKind::BundleMismatch, "cannot compose fibered maps with mismatched bundles");
    }
    const std::size_t points = inner.source().base().point_count();
    std::vector<PointIndex> base(points);
    std::vector<Permutation> fibers(points);
    for (PointIndex x = 0; x < points; ++x) {
        const PointIndex y = inner.base_map()[x];
        base[x] = outer.base_map()[y];
        fibers[x] = compose(outer.fiber_map(y), inner.fiber_map(x));
    }
    return FiberedMap(inner.source(), outer.target(), std::move(base), std::move(fibers));
}

Section pushforward_section(const FiberedMap& f, const Section& u)
{
    if (!(u.bundle() == f.source())) {
        throw Error(ErrorKind::BundleMismatch, "section does not belong to the map's source bundle");
    }
    if (!f.base_is_bijective()) {
        throw Error(ErrorKind::BaseMapNotBijective, "pushforward needs a bijective base map");
    }
    std::vector<Element> values(f.target().base().point_count());
    for (PointIndex x = 0; x < f.source().base().point_count(); ++x) {
        values[f.base_map()[x]] = f.fiber_map(x)[u.value(x)];
    }
    return Section(f.target(), std::move(values));
}

}  // namespace fibra
