#include "support.hpp"

#include <doctest.h>

using namespace fibra;
using namespace fibra::testing;

namespace {

BundleAtlas two_chart_atlas(std::size_t n, const Permutation& t10)
{
    const BaseSpace b = BaseSpace::make({"x", "y"}, {{"U0", {"x", "y"}}, {"U1", {"y"}}});
    return BundleAtlas::validate(b, n, std::vector<IndexedTransition>{{0, 1, t10}});
}

}  // namespace

TEST_CASE("transition-homomorphism law")
{
    CHECK_NOTHROW(make_fibered_algebra(two_chart_atlas(5, affine_map(5, 2, 0)), standard::cyclic(5)));
    try {
        make_fibered_algebra(two_chart_atlas(5, affine_map(5, 1, 1)), standard::cyclic(5));
        FAIL("expected TransitionNotHomomorphism");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TransitionNotHomomorphism);
        CHECK(e.detail("from") == "U0");
        CHECK(e.detail("to") == "U1");
    }
    CHECK(throws_kind(ErrorKind::SizeMismatch,
                      [] { make_fibered_algebra(two_chart_atlas(4, affine_map(4, 1, 0)), standard::cyclic(5)); }));
    // any bijection works for a bare set
    CHECK_NOTHROW(make_fibered_algebra(two_chart_atlas(5, affine_map(5, 1, 1)), standard::plain_set(5)));
}

TEST_CASE("operations on sections: modular oracle")
{
    const FiberedAlgebra fa(BundleAtlas::trivial(two_point_base(), 3), standard::cyclic(3));
    const Section s1(fa.atlas(), {1, 2}), s2(fa.atlas(), {2, 2});
    const std::vector<Section> args{s1, s2};
    CHECK(apply_operation_sections(fa, "+", args) == Section(fa.atlas(), {0, 1}));
    const std::vector<Section> none;
    CHECK(apply_operation_sections(fa, "0", none) == Section(fa.atlas(), {0, 0}));
    CHECK(throws_kind(ErrorKind::ArityMismatch, [&] { apply_operation_sections(fa, "-", args); }));
    CHECK(throws_kind(ErrorKind::UnknownSymbol, [&] { apply_operation_sections(fa, "*", args); }));
    const Section foreign(BundleAtlas::trivial(three_cycle_base(), 3), {0, 0, 0});
    const std::vector<Section> mixed{s1, foreign};
    CHECK(throws_kind(ErrorKind::BundleMismatch, [&] { apply_operation_sections(fa, "+", mixed); }));
}

TEST_CASE("operations commute with chart reads")
{
    for (const Permutation& t : enumerate_automorphisms(standard::cyclic(3))) {
        const FiberedAlgebra fa(two_chart_atlas(3, t), standard::cyclic(3));
        const SectionEnumeration all(fa.atlas());
        for (const Section& a : all) {
            for (const Section& b : all) {
                const std::vector<Section> ab{a, b};
                const Section sum = apply_operation_sections(fa, "+", ab);
                const std::vector<Section> just_a{a};
                const Section neg = apply_operation_sections(fa, "-", just_a);
                for (PointIndex x = 0; x < 2; ++x) {
                    for (ChartIndex c : fa.atlas().base().charts_containing(x)) {
                        CHECK(section_value(sum, x, c) == (section_value(a, x, c) + section_value(b, x, c)) % 3);
                        CHECK(section_value(neg, x, c) == (3 - section_value(a, x, c)) % 3);
                    }
                }
            }
        }
    }
}

TEST_CASE("fibered homomorphisms")
{
    const FiberedAlgebra z5(two_chart_atlas(5, affine_map(5, 4, 0)), standard::cyclic(5));
    const BundleAtlas& e = z5.atlas();
    const Permutation dbl = affine_map(5, 2, 0);
    const FiberedMap doubling(e, e, {0, 1}, {dbl, dbl});
    CHECK(is_fibered_homomorphism(doubling, z5, z5));
    CHECK(is_fibered_isomorphism(doubling, z5, z5));
    const FiberedMap broken(e, e, {0, 1}, {dbl, affine_map(5, 1, 1)});
    CHECK_FALSE(is_fibered_homomorphism(broken, z5, z5));
    const FiberedMap zero(e, e, {0, 1}, {Permutation(5, 0), Permutation(5, 0)});
    CHECK(is_fibered_homomorphism(zero, z5, z5));
    CHECK_FALSE(is_fibered_isomorphism(zero, z5, z5));
}

TEST_CASE("fibered subalgebras")
{
    const FiberedAlgebra neg(two_chart_atlas(4, affine_map(4, 3, 0)), standard::cyclic(4));
    const std::vector<Element> evens{0, 2};
    CHECK(is_fibered_subalgebra(evens, neg));
    CHECK(throws_kind(ErrorKind::TransitionNotHomomorphism,
                      [] { FiberedAlgebra(two_chart_atlas(4, affine_map(4, 1, 1)), standard::cyclic(4)); }));
    const std::vector<Element> small{0, 1};
    CHECK_FALSE(is_fibered_subalgebra(small, neg));
    // {0,2} of Z2 x Z2 is a subgroup but a swap transition moves it
    const Permutation swap_factors{0, 2, 1, 3};
    const FiberedAlgebra k4(two_chart_atlas(4, swap_factors), standard::klein_four());
    CHECK_FALSE(is_fibered_subalgebra(std::vector<Element>{0, 1}, k4));
    CHECK(is_fibered_subalgebra(std::vector<Element>{0, 3}, k4));
}

TEST_CASE("reduced product of fibered algebras")
{
    const FiberedAlgebra a(two_chart_atlas(3, affine_map(3, 2, 0)), standard::cyclic(3));
    const FiberedAlgebra b(two_chart_atlas(2, identity_permutation(2)), standard::cyclic(2));
    const std::vector<FiberedAlgebra> f{a, b};
    const FiberedAlgebra p = reduced_product(f);
    CHECK(p.fiber().size() == 6);
    const std::vector<BundleAtlas> atlases{a.atlas(), b.atlas()};
    const SectionEnumeration all(p.atlas());
    for (const Section& s : all) {
        for (const Section& t : all) {
            const std::vector<Section> st{s, t};
            const auto parts = split_product_section(apply_operation_sections(p, "+", st), atlases);
            const auto ps = split_product_section(s, atlases);
            const auto pt = split_product_section(t, atlases);
            const std::vector<Section> a_args{ps[0], pt[0]}, b_args{ps[1], pt[1]};
            CHECK(parts[0] == apply_operation_sections(a, "+", a_args));
            CHECK(parts[1] == apply_operation_sections(b, "+", b_args));
        }
    }
}
