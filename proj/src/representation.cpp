#include "fibra/representation.hpp"

#include "fibra/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fibra {

// ------------------------------------------------------------ transformations

BundleTransformation::BundleTransformation(BundleAtlas bundle, std::vector<Permutation> maps)
    : bundle_(std::move(bundle)), maps_(std::move(maps))
{
    if (maps_.size() != bundle_.base().point_count()) {
        throw Error(ErrorKind::SizeMismatch, "transformation needs one fiber map per point");
    }
    for (PointIndex x = 0; x < maps_.size(); ++x) {
        if (!is_bijection(maps_[x], bundle_.fiber_size())) {
            throw Error(ErrorKind::NotBijective,
                        "transformation is singular at point '" + bundle_.base().point_name(x) + "'",
                        {{"point", bundle_.base().point_name(x)}});
        }
    }
}

BundleTransformation identity_transformation(const BundleAtlas& bundle)
{
    return BundleTransformation(bundle, std::vector<Permutation>(bundle.base().point_count(),
                                                                 identity_permutation(bundle.fiber_size())));
}

Section apply_transformation(const BundleTransformation& t, const Section& u)
{
    if (!(t.bundle() == u.bundle())) {
        throw Error(ErrorKind::BundleMismatch, "section and transformation live on different bundles");
    }
    std::vector<Element> values(u.values().size());
    for (PointIndex x = 0; x < values.size(); ++x) {
        values[x] = t.at(x)[u.value(x)];
    }
    return Section(u.bundle(), std::move(values));
}

BundleTransformation compose(const BundleTransformation& outer, const BundleTransformation& inner)
{
    if (!(outer.bundle() == inner.bundle())) {
        throw Error(ErrorKind::BundleMismatch, "cannot compose transformations of different bundles");
    }
    std::vector<Permutation> maps;
    for (PointIndex x = 0; x < outer.maps().size(); ++x) {
        maps.push_back(compose(outer.at(x), inner.at(x)));
    }
    return BundleTransformation(outer.bundle(), std::move(maps));
}

BundleTransformation inverse(const BundleTransformation& t)
{
    std::vector<Permutation> maps;
    for (const auto& m : t.maps()) {
        maps.push_back(inverse(m));
    }
    return BundleTransformation(t.bundle(), std::move(maps));
}

// --------------------------------------------------------------- fibered group

FiberedGroup::FiberedGroup(FiberedAlgebra fa, std::string mul, std::string inv, std::string unit)
    : fa_(std::move(fa)), group_(fa_.fiber(), std::move(mul), std::move(inv), std::move(unit))
{
}

Section FiberedGroup::unit_section() const
{
    return constant_section(atlas(), group_.unit());
}

Section FiberedGroup::multiply(const Section& g, const Section& h) const
{
    const Section args[] = {g, h};
    return apply_operation_sections(fa_, group_.mul_symbol(), args);
}

Section FiberedGroup::inverse(const Section& g) const
{
    const Section args[] = {g};
    return apply_operation_sections(fa_, group_.inv_symbol(), args);
}

FiberedGroup opposite(const FiberedGroup& g)
{
    const GroupStructure op = opposite_group(g.group());
    return FiberedGroup(FiberedAlgebra(g.atlas(), op.algebra()), op.mul_symbol(), op.inv_symbol(), op.unit_symbol());
}

// ------------------------------------------------------------- representation

std::string_view to_string(Variance v)
{
    return v == Variance::Covariant ? "covariant" : "contravariant";
}

GroupRepresentation::GroupRepresentation(FiberedGroup g, BundleAtlas target, Variance v,
                                         std::vector<std::vector<Permutation>> tables)
    : group_(std::move(g)), target_(std::move(target)), variance_(v), tables_(std::move(tables))
{
}

Permutation GroupRepresentation::action_in_charts(PointIndex x, ChartIndex group_chart, ChartIndex target_chart,
                                                  Element g) const
{
    const BaseSpace& gb = group_.atlas().base();
    const BaseSpace& ab = target_.base();
    if (!gb.contains(group_chart, x) || !ab.contains(target_chart, x)) {
        throw Error(ErrorKind::PointNotInChart, "point is not in the given charts");
    }
    const ChartIndex cg = gb.canonical_chart(x);
    const ChartIndex ca = ab.canonical_chart(x);
    const Element g_canonical = group_.atlas().transition(cg, group_chart)[g];
    return compose(target_.transition(target_chart, ca),
                   compose(action(x, g_canonical), target_.transition(ca, target_chart)));
}

BundleTransformation GroupRepresentation::transformation(const Section& group_section) const
{
    if (!(group_section.bundle() == group_.atlas())) {
        throw Error(ErrorKind::BundleMismatch, "not a section of the representation's group bundle");
    }
    std::vector<Permutation> maps;
    for (PointIndex x = 0; x < tables_.size(); ++x) {
        maps.push_back(action(x, group_section.value(x)));
    }
    return BundleTransformation(target_, std::move(maps));
}

Section GroupRepresentation::act(const Section& group_section, const Section& u) const
{
    if (!(u.bundle() == target_)) {
        throw Error(ErrorKind::BundleMismatch, "not a section of the representation's target bundle");
    }
    if (!(group_section.bundle() == group_.atlas())) {
        throw Error(ErrorKind::BundleMismatch, "not a section of the representation's group bundle");
    }
    std::vector<Element> values(u.values().size());
    for (PointIndex x = 0; x < values.size(); ++x) {
        values[x] = action(x, group_section.value(x))[u.value(x)];
    }
    return Section(target_, std::move(values));
}

namespace {

void check_same_points(const BaseSpace& a, const BaseSpace& b)
{
    if (a.point_count() != b.point_count()
        || !std::equal(a.point_names().begin(), a.point_names().end(), b.point_names().begin())) {
        throw Error(ErrorKind::BaseMismatch, "group and target bundles have different base points");
    }
}

}  // namespace

GroupRepresentation make_representation(FiberedGroup g, BundleAtlas target, Variance variance, const RawAction& action)
{
    const BaseSpace& base = target.base();
    check_same_points(g.atlas().base(), base);
    const std::size_t points = base.point_count();
    const std::size_t order = g.order();
    const std::size_t fiber = target.fiber_size();
    if (action.points.size() != points) {
        throw Error(ErrorKind::SizeMismatch, "action needs one table per base point");
    }

    std::vector<std::vector<Permutation>> tables(points);
    for (PointIndex x = 0; x < points; ++x) {
        const auto& raw = action.points[x];
        const std::string& pname = base.point_name(x);
        if (raw.size() != order) {
            throw Error(ErrorKind::SizeMismatch, "action at '" + pname + "' needs one row per group element",
                        {{"point", pname}});
        }
        for (Element a = 0; a < order; ++a) {
            if (raw[a].size() != fiber) {
                throw Error(ErrorKind::SizeMismatch, "action row has the wrong length at '" + pname + "'",
                            {{"point", pname}, {"a", std::to_string(a)}});
            }
            Permutation p(fiber);
            bool in_range = true;
            for (std::size_t mu = 0; mu < fiber; ++mu) {
                in_range = in_range && raw[a][mu] >= 0 && static_cast<std::uint64_t>(raw[a][mu]) < fiber;
                p[mu] = in_range ? static_cast<Element>(raw[a][mu]) : 0;
            }
            if (!in_range || !is_bijection(p, fiber)) {
                throw Error(ErrorKind::NotBijective,
                            "rho(" + std::to_string(a) + ") at '" + pname + "' is not a bijection of the fiber",
                            {{"point", pname}, {"a", std::to_string(a)}});
            }
            tables[x].push_back(std::move(p));
        }
    }

    const GroupStructure& grp = g.group();
    const Permutation id = identity_permutation(fiber);
    for (PointIndex x = 0; x < points; ++x) {
        const std::string& pname = base.point_name(x);
        const auto& t = tables[x];
        if (t[grp.unit()] != id) {
            throw Error(ErrorKind::UnitLawViolated, "rho(unit) at '" + pname + "' is not the identity",
                        {{"point", pname}});
        }
        for (Element a = 0; a < order; ++a) {
            for (Element b = 0; b < order; ++b) {
                const Permutation& ab = t[grp.multiply(a, b)];
                for (Element mu = 0; mu < fiber; ++mu) {
                    const Element expected = variance == Variance::Covariant ? t[a][t[b][mu]] : t[b][t[a][mu]];
                    if (ab[mu] != expected) {
                        throw Error(ErrorKind::CompositionLawViolated,
                                    "composition law (" + std::string(to_string(variance)) + ") fails at '" + pname
                                        + "' for a=" + std::to_string(a) + ", b=" + std::to_string(b)
                                        + ", mu=" + std::to_string(mu),
                                    {{"point", pname},
                                     {"a", std::to_string(a)},
                                     {"b", std::to_string(b)},
                                     {"mu", std::to_string(mu)}});
                    }
                }
            }
        }
    }
    return GroupRepresentation(std::move(g), std::move(target), variance, std::move(tables));
}

GroupRepresentation make_representation(FiberedGroup g, BundleAtlas target, Variance variance,
                                        const std::function<Element(PointIndex, Element, Element)>& rho)
{
    RawAction raw;
    const std::size_t fiber = target.fiber_size();
    for (PointIndex x = 0; x < target.base().point_count(); ++x) {
        RawActionTable table(g.order(), std::vector<std::int64_t>(fiber));
        for (Element a = 0; a < g.order(); ++a) {
            for (Element mu = 0; mu < fiber; ++mu) {
                table[a][mu] = rho(x, a, mu);
            }
        }
        raw.points.push_back(std::move(table));
    }
    return make_representation(std::move(g), std::move(target), variance, raw);
}

GroupRepresentation make_representation_local(FiberedGroup g, BundleAtlas target, Variance variance,
                                              std::span<const LocalActionEntry> entries)
{
    const BaseSpace& base = target.base();
    const BaseSpace& gbase = g.atlas().base();
    check_same_points(gbase, base);
    const std::size_t fiber = target.fiber_size();
    std::vector<std::optional<RawActionTable>> canonical(base.point_count());

    for (const auto& e : entries) {
        if (e.point >= base.point_count() || e.group_chart >= gbase.chart_count()
            || e.target_chart >= base.chart_count() || !gbase.contains(e.group_chart, e.point)
            || !base.contains(e.target_chart, e.point)) {
            throw Error(ErrorKind::PointNotInChart, "local action entry names a chart not containing its point");
        }
        const std::string& pname = base.point_name(e.point);
        if (e.table.size() != g.order()) {
            throw Error(ErrorKind::SizeMismatch, "local action needs one row per group element", {{"point", pname}});
        }
        const ChartIndex cg = gbase.canonical_chart(e.point);
        const ChartIndex ca = base.canonical_chart(e.point);
        const Permutation& group_to_local = g.atlas().transition(e.group_chart, cg);
        const Permutation& target_to_local = target.transition(e.target_chart, ca);
        const Permutation& target_to_canonical = target.transition(ca, e.target_chart);

        RawActionTable table(g.order(), std::vector<std::int64_t>(fiber));
        for (Element a = 0; a < g.order(); ++a) {
            const auto& row = e.table[group_to_local[a]];
            if (row.size() != fiber) {
                throw Error(ErrorKind::SizeMismatch, "local action row has the wrong length", {{"point", pname}});
            }
            for (Element mu = 0; mu < fiber; ++mu) {
                const std::int64_t v = row[target_to_local[mu]];
                if (v < 0 || static_cast<std::uint64_t>(v) >= fiber) {
                    throw Error(ErrorKind::NotBijective, "local action leaves the fiber", {{"point", pname}});
                }
                table[a][mu] = target_to_canonical[static_cast<Element>(v)];
            }
        }
        auto& slot = canonical[e.point];
        if (!slot) {
            slot = std::move(table);
        } else if (*slot != table) {
            throw Error(ErrorKind::EquivarianceViolated,
                        "action in charts (" + gbase.chart_name(e.group_chart) + ", " + base.chart_name(e.target_chart)
                            + ") at '" + pname + "' disagrees with its transport from another chart",
                        {{"point", pname},
                         {"group_chart", gbase.chart_name(e.group_chart)},
                         {"target_chart", base.chart_name(e.target_chart)}});
        }
    }

    RawAction raw;
    for (PointIndex x = 0; x < canonical.size(); ++x) {
        if (!canonical[x]) {
            throw Error(ErrorKind::SizeMismatch, "no action given at point '" + base.point_name(x) + "'",
                        {{"point", base.point_name(x)}});
        }
        raw.points.push_back(std::move(*canonical[x]));
    }
    return make_representation(std::move(g), std::move(target), variance, raw);
}

GroupRepresentation shift_representation(const FiberedGroup& g, ShiftSide side)
{
    const BaseSpace& base = g.atlas().base();
    const GroupStructure& grp = g.group();
    std::vector<LocalActionEntry> entries;
    for (PointIndex x = 0; x < base.point_count(); ++x) {
        for (ChartIndex c : base.charts_containing(x)) {
            LocalActionEntry e{x, c, c, RawActionTable(grp.order(), std::vector<std::int64_t>(grp.order()))};
            for (Element a = 0; a < grp.order(); ++a) {
                for (Element b = 0; b < grp.order(); ++b) {
                    e.table[a][b] = side == ShiftSide::Left ? grp.multiply(a, b) : grp.multiply(b, a);
                }
            }
            entries.push_back(std::move(e));
        }
    }
    const Variance v = side == ShiftSide::Left ? Variance::Covariant : Variance::Contravariant;
    return make_representation_local(g, g.atlas(), v, entries);
}

GroupRepresentation trivial_representation(const FiberedGroup& g, const BundleAtlas& target, Variance variance)
{
    return make_representation(g, target, variance, [](PointIndex, Element, Element mu) { return mu; });
}

Permutation rep_inverse_image(const GroupRepresentation& r, Element a, PointIndex x)
{
    const GroupStructure& grp = r.group().group();
    if (a >= grp.order() || x >= r.target().base().point_count()) {
        throw Error(ErrorKind::ElementOutOfRange, "group element or point out of range");
    }
    const Permutation& of_inverse = r.action(x, grp.inverse(a));
    if (of_inverse != inverse(r.action(x, a))) {
        throw Error(ErrorKind::MismatchDetected, "rho(a^-1) differs from rho(a)^-1",
                    {{"point", r.target().base().point_name(x)}, {"a", std::to_string(a)}});
    }
    return of_inverse;
}

namespace {

bool acts_trivially(const GroupRepresentation& r, const Section& g)
{
    for (PointIndex x = 0; x < g.values().size(); ++x) {
        const Permutation& p = r.action(x, g.value(x));
        for (Element mu = 0; mu < p.size(); ++mu) {
            if (p[mu] != mu) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<Section> kernel_of_inefficiency(const GroupRepresentation& r, std::size_t cap)
{
    const FiberedGroup& g = r.group();
    const SectionEnumeration sections(g.atlas(), cap);
    std::vector<Section> kernel;
    for (const Section& s : sections) {
        if (acts_trivially(r, s)) {
            kernel.push_back(s);
        }
    }
    const std::set<Section> members(kernel.begin(), kernel.end());
    const bool has_unit = members.count(g.unit_section()) == 1;
    bool closed = has_unit;
    for (std::size_t i = 0; closed && i < kernel.size(); ++i) {
        closed = members.count(g.inverse(kernel[i])) == 1;
        for (std::size_t j = 0; closed && j < kernel.size(); ++j) {
            closed = members.count(g.multiply(kernel[i], kernel[j])) == 1;
        }
    }
    if (!closed) {
        throw Error(ErrorKind::MismatchDetected, "kernel of inefficiency is not a subgroup");
    }
    return kernel;
}

bool is_effective(const GroupRepresentation& r, std::size_t cap)
{
    const auto kernel = kernel_of_inefficiency(r, cap);
    return kernel.size() == 1 && kernel.front() == r.group().unit_section();
}

std::vector<Section> orbit(const GroupRepresentation& r, const Section& u, std::size_t cap)
{
    const SectionEnumeration group_sections(r.group().atlas(), cap);
    std::set<Section> out;
    for (const Section& g : group_sections) {
        out.insert(r.act(g, u));
    }
    return {out.begin(), out.end()};
}

OrbitPartition orbit_partition(const GroupRepresentation& r, std::size_t cap)
{
    OrbitPartition part{SectionEnumeration(r.target(), cap), {}};
    const SectionEnumeration group_sections(r.group().atlas(), cap);
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(part.universe.size(), unassigned);
    for (std::size_t i = 0; i < part.universe.size(); ++i) {
        if (block_of[i] != unassigned) {
            continue;
        }
        const Section u = part.universe[i];
        std::set<std::size_t> members;
        for (const Section& g : group_sections) {
            members.insert(part.universe.index_of(r.act(g, u)));
        }
        const std::size_t id = part.blocks.size();
        for (std::size_t m : members) {
            if (block_of[m] != unassigned) {
                throw Error(ErrorKind::MismatchDetected, "orbits overlap without coinciding");
            }
            block_of[m] = id;
        }
        part.blocks.emplace_back(members.begin(), members.end());
    }
    return part;
}

bool fiberwise_single_transitive(const GroupRepresentation& r)
{
    const std::size_t order = r.group().order();
    const std::size_t fiber = r.target().fiber_size();
    if (order != fiber) {
        return false;
    }
    for (PointIndex x = 0; x < r.tables().size(); ++x) {
        for (Element b = 0; b < fiber; ++b) {
            std::vector<bool> hit(fiber, false);
            for (Element g = 0; g < order; ++g) {
                const Element a = r.action(x, g)[b];
                if (hit[a]) {
                    return false;
                }
                hit[a] = true;
            }
        }
    }
    return true;
}

TransitivityReport transitivity_report(const GroupRepresentation& r, std::size_t cap)
{
    TransitivityReport rep;
    rep.transitive = orbit_partition(r, cap).blocks.size() == 1;

    const SectionEnumeration targets(r.target(), cap);
    const SectionEnumeration group_sections(r.group().atlas(), cap);
    bool single = true;
    for (std::size_t bi = 0; single && bi < targets.size(); ++bi) {
        const Section b = targets[bi];
        std::vector<std::size_t> count(targets.size(), 0);
        for (const Section& g : group_sections) {
            ++count[targets.index_of(r.act(g, b))];
        }
        single = std::all_of(count.begin(), count.end(), [](std::size_t c) { return c == 1; });
    }
    rep.single_transitive = single;
    if (single != fiberwise_single_transitive(r)) {
        throw Error(ErrorKind::CriterionDisagreement,
                    "section-level and fiberwise single-transitivity verdicts disagree");
    }
    rep.effective = is_effective(r, cap);
    return rep;
}

Section coordinates(const GroupRepresentation& r, const Section& reference, const Section& w)
{
    if (!(reference.bundle() == r.target()) || !(w.bundle() == r.target())) {
        throw Error(ErrorKind::BundleMismatch, "sections do not belong to the representation's target bundle");
    }
    if (!fiberwise_single_transitive(r)) {
        throw Error(ErrorKind::NotSingleTransitive, "coordinates need a single transitive representation");
    }
    std::vector<Element> g(reference.values().size());
    for (PointIndex x = 0; x < g.size(); ++x) {
        Element found = 0;
        for (Element a = 0; a < r.group().order(); ++a) {
            if (r.action(x, a)[reference.value(x)] == w.value(x)) {
                found = a;
                break;
            }
        }
        g[x] = found;
    }
    return Section(r.group().atlas(), std::move(g));
}

GroupRepresentation twin_representation(const GroupRepresentation& r, const Section& reference)
{
    if (r.variance() != Variance::Covariant) {
        throw Error(ErrorKind::NotCovariant, "twin construction needs a covariant representation");
    }
    if (!(reference.bundle() == r.target())) {
        throw Error(ErrorKind::BundleMismatch, "reference section does not belong to the target bundle");
    }
    if (!fiberwise_single_transitive(r)) {
        throw Error(ErrorKind::NotSingleTransitive, "twin construction needs a single transitive representation");
    }
    const GroupStructure& grp = r.group().group();
    const std::size_t n = grp.order();
    RawAction raw;
    for (PointIndex x = 0; x < r.tables().size(); ++x) {
        Permutation phi(n);
        for (Element g = 0; g < n; ++g) {
            phi[g] = r.action(x, g)[reference.value(x)];
        }
        const Permutation phi_inv = inverse(phi);
        RawActionTable table(n, std::vector<std::int64_t>(n));
        for (Element a = 0; a < n; ++a) {
            for (Element mu = 0; mu < n; ++mu) {
                table[a][mu] = phi[grp.multiply(phi_inv[mu], a)];
            }
        }
        raw.points.push_back(std::move(table));
    }
    GroupRepresentation twin = make_representation(r.group(), r.target(), Variance::Contravariant, raw);

    for (PointIndex x = 0; x < r.tables().size(); ++x) {
        for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
                if (compose(twin.action(x, b), r.action(x, a)) != compose(r.action(x, a), twin.action(x, b))) {
                    throw Error(ErrorKind::MismatchDetected, "twin does not commute with the original representation");
                }
            }
        }
    }
    return twin;
}

GroupRepresentation direct_product_representations(const GroupRepresentation& r1, const GroupRepresentation& r2)
{
    if (!(r1.group() == r2.group())) {
        throw Error(ErrorKind::GroupMismatch, "direct product needs representations of one fibered group");
    }
    if (r1.variance() != r2.variance()) {
        throw Error(ErrorKind::VarianceMismatch, "direct product needs representations of equal variance");
    }
    const BundleAtlas factors[] = {r1.target(), r2.target()};
    BundleAtlas product = reduced_product_bundles(factors);
    const std::size_t n2 = r2.target().fiber_size();
    return make_representation(r1.group(), product, r1.variance(), [&](PointIndex x, Element g, Element mu) {
        const Element m1 = mu / static_cast<Element>(n2);
        const Element m2 = mu % static_cast<Element>(n2);
        return static_cast<Element>(r1.action(x, g)[m1] * n2 + r2.action(x, g)[m2]);
    });
}

GroupRepresentation to_star_t(const GroupRepresentation& r)
{
    const Variance flipped = r.variance() == Variance::Covariant ? Variance::Contravariant : Variance::Covariant;
    return make_representation(opposite(r.group()), r.target(), flipped,
                               [&](PointIndex x, Element g, Element mu) { return r.action(x, g)[mu]; });
}

// ---------------------------------------------- general algebra representation

namespace {

void check_transformation_algebra(const TransformationAlgebra& t)
{
    if (t.elements.size() != t.algebra.size()) {
        throw Error(ErrorKind::NotClosed, "transformation list does not match the algebra carrier");
    }
    for (const auto& e : t.elements) {
        if (!(e.bundle() == t.elements.front().bundle())) {
            throw Error(ErrorKind::NotClosed, "listed transformations act on different bundles");
        }
    }
    if (!t.composition) {
        return;
    }
    const auto& law = *t.composition;
    const Signature& sig = t.algebra.signature();
    const std::size_t mul = sig.index_of(law.mul);
    const std::size_t unit = sig.index_of(law.unit);
    if (sig.ops()[mul].arity != 2 || sig.ops()[unit].arity != 0) {
        throw Error(ErrorKind::ArityMismatch, "composition law needs a binary and a nullary symbol");
    }
    const Element u = t.algebra.table(unit)[0];
    if (!(t.elements[u] == identity_transformation(t.elements[u].bundle()))) {
        throw Error(ErrorKind::NotClosed, "designated unit is not the identity transformation");
    }
    for (Element i = 0; i < t.algebra.size(); ++i) {
        for (Element j = 0; j < t.algebra.size(); ++j) {
            const Element args[] = {i, j};
            const auto expected = law.order == Variance::Covariant ? compose(t.elements[i], t.elements[j])
                                                                   : compose(t.elements[j], t.elements[i]);
            if (!(t.elements[t.algebra.apply(mul, args)] == expected)) {
                throw Error(ErrorKind::NotClosed,
                            "table entry " + law.mul + "(" + std::to_string(i) + ", " + std::to_string(j)
                                + ") is not the composite of the listed transformations",
                            {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
            }
        }
    }
}

void check_map_data(const FiberedAlgebra& b, const TransformationAlgebra& t, std::span<const Permutation> maps)
{
    if (maps.size() != b.atlas().base().point_count()) {
        throw Error(ErrorKind::SizeMismatch, "map data needs one map per base point");
    }
    for (const auto& m : maps) {
        if (m.size() != b.fiber().size()) {
            throw Error(ErrorKind::SizeMismatch, "per-point map has the wrong length");
        }
        for (Element v : m) {
            if (v >= t.algebra.size()) {
                throw Error(ErrorKind::ElementOutOfRange, "per-point map leaves the transformation algebra");
            }
        }
    }
}

}  // namespace

bool general_representation_validate(const FiberedAlgebra& b, const TransformationAlgebra& t,
                                     std::span<const Permutation> map_per_point)
{
    if (!(b.fiber().signature() == t.algebra.signature())) {
        throw Error(ErrorKind::SignatureMismatch, "transformation algebra has another signature");
    }
    check_transformation_algebra(t);
    check_map_data(b, t, map_per_point);
    return std::all_of(map_per_point.begin(), map_per_point.end(),
                       [&](const Permutation& m) { return is_homomorphism(b.fiber(), t.algebra, m); });
}

RawAction action_from_transformation_map(const TransformationAlgebra& t, std::span<const Permutation> map_per_point)
{
    RawAction raw;
    for (PointIndex x = 0; x < map_per_point.size(); ++x) {
        RawActionTable table;
        for (Element e : map_per_point[x]) {
            const Permutation& p = t.elements.at(e).at(x);
            table.emplace_back(p.begin(), p.end());
        }
        raw.points.push_back(std::move(table));
    }
    return raw;
}

}  // namespace fibra
