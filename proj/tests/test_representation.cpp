#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace fibra;
using namespace fibra::testing;

namespace {

RawAction raw_from(const std::function<Element(PointIndex, Element, Element)>& f, std::size_t points,
                   std::size_t order, std::size_t m)
{
    RawAction raw;
    for (PointIndex x = 0; x < points; ++x) {
        RawActionTable t(order);
        for (Element g = 0; g < order; ++g) {
            for (Element mu = 0; mu < m; ++mu) {
                t[g].push_back(f(x, g, mu));
            }
        }
        raw.points.push_back(t);
    }
    return raw;
}

std::vector<Element> vals(const Section& s)
{
    return {s.values().begin(), s.values().end()};
}

}  // namespace

TEST_CASE("bundle transformations")
{
    const BundleAtlas e = BundleAtlas::trivial(two_point_base(), 5);
    const BundleTransformation plus1(e, {affine_map(5, 1, 1), affine_map(5, 1, 1)});
    CHECK(vals(apply_transformation(plus1, Section(e, {0, 3}))) == std::vector<Element>{1, 4});
    CHECK(throws_kind(ErrorKind::NotBijective, [&] { BundleTransformation(e, {Permutation(5, 0), affine_map(5, 1, 1)}); }));
    CHECK(throws_kind(ErrorKind::SizeMismatch, [&] { BundleTransformation(e, {affine_map(5, 1, 1)}); }));

    const BundleAtlas e3 = BundleAtlas::trivial(two_point_base(), 3);
    const auto bij = all_bijections(3);
    for (const auto& s0 : bij) {
        for (const auto& t0 : bij) {
            const BundleTransformation s(e3, {s0, t0}), t(e3, {t0, s0});
            for (const Section& u : SectionEnumeration(e3)) {
                CHECK(apply_transformation(compose(s, t), u) == apply_transformation(s, apply_transformation(t, u)));
                CHECK(apply_transformation(inverse(s), apply_transformation(s, u)) == u);
            }
        }
    }
    CHECK(apply_transformation(identity_transformation(e3), Section(e3, {2, 1})) == Section(e3, {2, 1}));
}

TEST_CASE("representation validation")
{
    const FiberedGroup z3 = z_over_two_points(3);
    const BundleAtlas target3 = BundleAtlas::trivial(two_point_base(), 3);
    auto left = [](PointIndex, Element g, Element mu) { return static_cast<Element>((g + mu) % 3); };
    CHECK_NOTHROW(make_representation(z3, target3, Variance::Covariant, raw_from(left, 2, 3, 3)));

    auto not_unit = [](PointIndex, Element g, Element mu) { return static_cast<Element>((g + mu + 1) % 3); };
    CHECK(throws_kind(ErrorKind::UnitLawViolated,
                      [&] { make_representation(z3, target3, Variance::Covariant, raw_from(not_unit, 2, 3, 3)); }));
    auto collapse = [](PointIndex, Element g, Element mu) { return g == 0 ? mu : Element{0}; };
    CHECK(throws_kind(ErrorKind::NotBijective,
                      [&] { make_representation(z3, target3, Variance::Covariant, raw_from(collapse, 2, 3, 3)); }));
    auto doubled = [](PointIndex, Element g, Element mu) { return static_cast<Element>((2 * g * g + mu) % 3); };
    CHECK(throws_kind(ErrorKind::CompositionLawViolated,
                      [&] { make_representation(z3, target3, Variance::Covariant, raw_from(doubled, 2, 3, 3)); }));
    CHECK(throws_kind(ErrorKind::BaseMismatch, [&] {
        make_representation(z3, BundleAtlas::trivial(three_cycle_base(), 3), Variance::Covariant,
                            raw_from(left, 3, 3, 3));
    }));
    CHECK(throws_kind(ErrorKind::SizeMismatch,
                      [&] { make_representation(z3, target3, Variance::Covariant, raw_from(left, 2, 2, 3)); }));
}

TEST_CASE("right regular S3 is a contravariant representation")
{
    const FiberedGroup s3 = s3_over_two_points();
    const GroupStructure& g = s3.group();
    auto right = [&](PointIndex, Element a, Element mu) { return g.multiply(mu, a); };
    const RawAction raw = raw_from(right, 2, 6, 6);
    try {
        make_representation(s3, s3.atlas(), Variance::Covariant, raw);
        FAIL("expected CompositionLawViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CompositionLawViolated);
        CHECK_FALSE(e.detail("a").empty());
    }
    const GroupRepresentation r = make_representation(s3, s3.atlas(), Variance::Contravariant, raw);
    CHECK(brute_force_action_laws(r));
}

TEST_CASE("shifts")
{
    const GroupRepresentation z3 = shift_representation(z_over_two_points(3), ShiftSide::Left);
    CHECK(z3.action(0, 1) == Permutation{1, 2, 0});
    CHECK(z3.variance() == Variance::Covariant);
    const FiberedGroup s3 = s3_over_two_points();
    const GroupRepresentation left = shift_representation(s3, ShiftSide::Left);
    const GroupStructure& g = s3.group();
    for (PointIndex x = 0; x < 2; ++x) {
        for (Element a = 0; a < 6; ++a) {
            for (Element b = 0; b < 6; ++b) {
                CHECK(compose(left.action(x, a), left.action(x, b)) == left.action(x, g.multiply(a, b)));
                CHECK(left.action(x, a)[b] == g.multiply(a, b));
            }
        }
    }
    const GroupRepresentation right = shift_representation(s3, ShiftSide::Right);
    CHECK(right.variance() == Variance::Contravariant);
    CHECK(brute_force_action_laws(right));
}

TEST_CASE("actions agree in every chart pair")
{
    const FiberedGroup s3 = s3_over_two_points();
    const GroupRepresentation left = shift_representation(s3, ShiftSide::Left);
    const GroupStructure& g = s3.group();
    const BundleAtlas& atlas = s3.atlas();
    // in chart B both the group element and the fiber value are conjugated, so ρ is still left multiplication
    for (Element a = 0; a < 6; ++a) {
        const Permutation p = left.action_in_charts(1, 1, 1, a);
        for (Element mu = 0; mu < 6; ++mu) {
            CHECK(p[mu] == g.multiply(a, mu));
        }
        const Permutation mixed = left.action_in_charts(1, 0, 1, a);
        for (Element mu = 0; mu < 6; ++mu) {
            CHECK(mixed[mu] == g.multiply(atlas.transition(1, 0)[a], mu));
        }
    }
    CHECK(throws_kind(ErrorKind::PointNotInChart, [&] { left.action_in_charts(0, 1, 0, 0); }));

    // chart-local data that ignores the conjugation in chart B is rejected
    std::vector<LocalActionEntry> entries;
    for (PointIndex x = 0; x < 2; ++x) {
        for (ChartIndex c : atlas.base().charts_containing(x)) {
            LocalActionEntry e{x, c, c, RawActionTable(6)};
            for (Element a = 0; a < 6; ++a) {
                for (Element mu = 0; mu < 6; ++mu) {
                    e.table[a].push_back(c == 0 ? g.multiply(a, mu) : g.multiply(mu, a));
                }
            }
            entries.push_back(e);
        }
    }
    try {
        make_representation_local(s3, atlas, Variance::Covariant, entries);
        FAIL("expected EquivarianceViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EquivarianceViolated);
        CHECK(e.detail("point") == "q");
    }
}

TEST_CASE("inverse images")
{
    const GroupRepresentation z3 = shift_representation(z_over_two_points(3), ShiftSide::Left);
    CHECK(rep_inverse_image(z3, 1, 0) == z3.action(0, 2));
    for (const auto& f : fixture_representations()) {
        const GroupStructure& g = f.rep.group().group();
        for (PointIndex x = 0; x < 2; ++x) {
            for (Element a = 0; a < g.order(); ++a) {
                CHECK(rep_inverse_image(f.rep, a, x) == inverse(f.rep.action(x, a)));
            }
        }
    }
}

TEST_CASE("kernel of inefficiency")
{
    const auto fixtures = fixture_representations();
    const GroupRepresentation& left = fixtures[0].rep;
    const auto k = kernel_of_inefficiency(left);
    REQUIRE(k.size() == 1);
    CHECK(k.front() == left.group().unit_section());
    CHECK(is_effective(left));

    const GroupRepresentation mod2 = mod2_shift();
    const auto km = kernel_of_inefficiency(mod2);
    CHECK(km.size() == 4);
    for (const Section& s : km) {
        for (PointIndex x = 0; x < 2; ++x) {
            CHECK(s.value(x) % 2 == 0);
        }
    }
    CHECK_FALSE(is_effective(mod2));
    CHECK(kernel_of_inefficiency(fixtures[1].rep).size() == 9);
}

TEST_CASE("orbits")
{
    const GroupRepresentation left = shift_representation(z_over_two_points(3), ShiftSide::Left);
    CHECK(orbit(left, Section(left.target(), {0, 0})).size() == 9);
    CHECK(orbit_partition(left).blocks.size() == 1);

    // Z2 acting on Z4 by +2
    const FiberedGroup z2 = z_over_two_points(2);
    const BundleAtlas z4 = BundleAtlas::trivial(two_point_base(), 4);
    const GroupRepresentation plus2 = make_representation(
        z2, z4, Variance::Covariant, [](PointIndex, Element g, Element mu) { return static_cast<Element>((mu + 2 * g) % 4); });
    const auto o = orbit(plus2, Section(z4, {0, 0}));
    std::vector<std::vector<Element>> got;
    for (const Section& s : o) {
        got.push_back(vals(s));
    }
    CHECK(got == std::vector<std::vector<Element>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
    const OrbitPartition part = orbit_partition(plus2);
    CHECK(part.blocks.size() == 4);
    for (const auto& b : part.blocks) {
        CHECK(b.size() == 4);
    }
}

TEST_CASE("transitivity")
{
    const GroupRepresentation left = shift_representation(z_over_two_points(3), ShiftSide::Left);
    CHECK(transitivity_report(left) == TransitivityReport{true, true, true});
    CHECK(fiberwise_single_transitive(left));
    CHECK(transitivity_report(mod2_shift()) == TransitivityReport{true, false, false});
    CHECK_FALSE(fiberwise_single_transitive(mod2_shift()));
    const auto fixtures = fixture_representations();
    CHECK(transitivity_report(fixtures[1].rep) == TransitivityReport{false, false, false});
}

TEST_CASE("coordinates")
{
    const GroupRepresentation z3 = shift_representation(z_over_two_points(3), ShiftSide::Left);
    const Section v(z3.target(), {0, 0}), w(z3.target(), {1, 2});
    CHECK(vals(coordinates(z3, v, w)) == std::vector<Element>{1, 2});

    const FiberedGroup s3 = s3_over_two_points();
    const GroupRepresentation left = shift_representation(s3, ShiftSide::Left);
    const GroupStructure& g = s3.group();
    const SectionEnumeration all(left.target());
    for (const Section& a : all) {
        for (const Section& b : all) {
            const Section c = coordinates(left, a, b);
            for (PointIndex x = 0; x < 2; ++x) {
                CHECK(c.value(x) == g.multiply(b.value(x), g.inverse(a.value(x))));
            }
        }
    }
    CHECK(throws_kind(ErrorKind::NotSingleTransitive, [] {
        const GroupRepresentation m = mod2_shift();
        coordinates(m, Section(m.target(), {0, 0}), Section(m.target(), {1, 0}));
    }));
}

TEST_CASE("twin of the left regular representation is the right shift")
{
    for (const FiberedGroup& g : {z_over_two_points(3), s3_over_two_points(), z_over_two_points(4)}) {
        const GroupRepresentation left = shift_representation(g, ShiftSide::Left);
        const GroupRepresentation right = shift_representation(g, ShiftSide::Right);
        const GroupRepresentation twin = twin_representation(left, g.unit_section());
        CHECK(twin.variance() == Variance::Contravariant);
        for (PointIndex x = 0; x < 2; ++x) {
            for (Element a = 0; a < g.order(); ++a) {
                CHECK(twin.action(x, a) == right.action(x, a));
                for (Element b = 0; b < g.order(); ++b) {
                    CHECK(compose(left.action(x, a), right.action(x, b)) == compose(right.action(x, b), left.action(x, a)));
                }
            }
        }
    }
    // another reference gives a twin that still commutes and fixes the identity h(a)v = f(a)v
    const FiberedGroup s3 = s3_over_two_points();
    const GroupRepresentation left = shift_representation(s3, ShiftSide::Left);
    const Section v(s3.atlas(), {3, 4});
    const GroupRepresentation twin = twin_representation(left, v);
    CHECK(brute_force_action_laws(twin));
    for (PointIndex x = 0; x < 2; ++x) {
        for (Element a = 0; a < 6; ++a) {
            CHECK(twin.action(x, a)[v.value(x)] == left.action(x, a)[v.value(x)]);
        }
    }
    CHECK(throws_kind(ErrorKind::NotCovariant,
                      [&] { twin_representation(shift_representation(s3, ShiftSide::Right), s3.unit_section()); }));
    CHECK(throws_kind(ErrorKind::NotSingleTransitive, [] {
        const GroupRepresentation m = mod2_shift();
        twin_representation(m, Section(m.target(), {0, 0}));
    }));
}

TEST_CASE("direct product of representations")
{
    const FiberedGroup z2 = z_over_two_points(2);
    const GroupRepresentation left = shift_representation(z2, ShiftSide::Left);
    const GroupRepresentation p = direct_product_representations(left, left);
    CHECK(p.target().fiber_size() == 4);
    // (m1, m2) encoded 2 m1 + m2; ρ(1) flips both components
    CHECK(p.action(0, 1) == Permutation{3, 2, 1, 0});
    CHECK(brute_force_action_laws(p));
    CHECK(throws_kind(ErrorKind::GroupMismatch,
                      [&] { direct_product_representations(left, shift_representation(z_over_two_points(3), ShiftSide::Left)); }));
    CHECK(throws_kind(ErrorKind::VarianceMismatch,
                      [&] { direct_product_representations(left, shift_representation(z2, ShiftSide::Right)); }));
}

TEST_CASE("opposite-group reading of an action")
{
    const FiberedGroup s3 = s3_over_two_points();
    const GroupRepresentation left = shift_representation(s3, ShiftSide::Left);
    const GroupRepresentation star = to_star_t(left);
    CHECK(star.variance() == Variance::Contravariant);
    CHECK(brute_force_action_laws(star));
    const GroupRepresentation back = to_star_t(star);
    CHECK(back.variance() == Variance::Covariant);
    for (PointIndex x = 0; x < 2; ++x) {
        for (Element a = 0; a < 6; ++a) {
            CHECK(back.action(x, a) == left.action(x, a));
        }
    }
    CHECK(back.group().group() == left.group().group());
}

TEST_CASE("general representations reduce to the group case")
{
    const FiberedGroup z3 = z_over_two_points(3);
    const BundleAtlas target = BundleAtlas::trivial(two_point_base(), 3);
    std::vector<BundleTransformation> shifts;
    for (std::size_t k = 0; k < 3; ++k) {
        shifts.emplace_back(target, std::vector<Permutation>{affine_map(3, 1, k), affine_map(3, 1, k)});
    }
    const TransformationAlgebra t{standard::cyclic(3), shifts, CompositionLaw{"+", "0", Variance::Covariant}};
    for (std::size_t code = 0; code < 27; ++code) {
        const Permutation m{static_cast<Element>(code / 9), static_cast<Element>(code / 3 % 3),
                            static_cast<Element>(code % 3)};
        const std::vector<Permutation> maps{m, m};
        const bool general = general_representation_validate(z3.algebra(), t, maps);
        bool group_case = true;
        try {
            make_representation(z3, target, Variance::Covariant, action_from_transformation_map(t, maps));
        } catch (const Error&) {
            group_case = false;
        }
        CHECK(general == group_case);
    }
    const std::vector<Permutation> faulty{identity_permutation(3), affine_map(3, 1, 1)};
    CHECK_FALSE(general_representation_validate(z3.algebra(), t, faulty));

    TransformationAlgebra wrong = t;
    wrong.elements[1] = wrong.elements[2];
    const std::vector<Permutation> ident{identity_permutation(3), identity_permutation(3)};
    CHECK(throws_kind(ErrorKind::NotClosed, [&] { general_representation_validate(z3.algebra(), wrong, ident); }));
    TransformationAlgebra short_list = t;
    short_list.elements.pop_back();
    CHECK(throws_kind(ErrorKind::NotClosed, [&] { general_representation_validate(z3.algebra(), short_list, ident); }));
    const TransformationAlgebra other{standard::symmetric(3), {}, std::nullopt};
    CHECK(throws_kind(ErrorKind::SignatureMismatch, [&] { general_representation_validate(z3.algebra(), other, ident); }));
    const std::vector<Permutation> out_of_range{Permutation{0, 1, 5}, identity_permutation(3)};
    CHECK(throws_kind(ErrorKind::ElementOutOfRange,
                      [&] { general_representation_validate(z3.algebra(), t, out_of_range); }));
}
