#include "fibra/holonomy.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace fibra;
using namespace fibra::testing;

namespace {

/// Closure oracle: repeatedly multiply by generators until nothing new appears.
std::set<Permutation> closure_oracle(const std::vector<Permutation>& gens, std::size_t n)
{
    std::set<Permutation> seen{identity_permutation(n)};
    std::vector<Permutation> frontier{identity_permutation(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& p : frontier) {
            for (const Permutation& g : gens) {
                Permutation q(n);
                for (std::size_t i = 0; i < n; ++i) {
                    q[i] = g[p[i]];
                }
                if (seen.insert(q).second) {
                    next.push_back(q);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("loop transport around the Z5 cycle")
{
    const BundleAtlas atlas = three_cycle_atlas(5, affine_map(5, 1, 1));
    const ChartLoop loop{{0, 1, 2, 0}};
    CHECK(loop_transport(atlas, loop) == affine_map(5, 1, 3));
    CHECK(loop_transport(atlas, ChartLoop{{0}}) == identity_permutation(5));
    CHECK(loop_transport(atlas, ChartLoop{{0, 1, 0}}) == identity_permutation(5));
    CHECK(loop_transport(atlas, concatenate(loop, loop)) == affine_map(5, 1, 6 % 5));
    CHECK(throws_kind(ErrorKind::NotALoop, [&] { loop_transport(atlas, ChartLoop{{0, 1}}); }));
    const BundleAtlas apart = BundleAtlas::trivial(BaseSpace::make({"x", "y"}, {{"A", {"x"}}, {"B", {"y"}}}), 2);
    CHECK(throws_kind(ErrorKind::NonOverlappingStep, [&] { loop_transport(apart, ChartLoop{{0, 1, 0}}); }));
    CHECK(throws_kind(ErrorKind::NerveDisconnected, [&] { holonomy_group(apart, 0); }));
}

TEST_CASE("generated group matches the closure oracle")
{
    const std::vector<Permutation> gens{Permutation{1, 0, 2, 3}, Permutation{1, 2, 3, 0}};
    const auto g = generated_group(gens, 4);
    CHECK(g.size() == 24);
    const auto oracle = closure_oracle(gens, 4);
    CHECK(std::vector<Permutation>(oracle.begin(), oracle.end()) == g);
    CHECK(generated_group(std::span<const Permutation>{}, 3).size() == 1);
    CHECK(throws_kind(ErrorKind::CapExceeded, [&] { generated_group(gens, 4, 10); }));
}

TEST_CASE("Z5 cycle with net +3 is anholonomic with a group of order 5")
{
    const BundleAtlas atlas = three_cycle_atlas(5, affine_map(5, 1, 1));
    for (ChartIndex c = 0; c < 3; ++c) {
        const HolonomyReport h = classify_holonomic(atlas, standard::cyclic(5), c);
        CHECK(h.verdict == HolonomyVerdict::Anholonomic);
        CHECK(h.elements.size() == 5);
        REQUIRE(h.witness.has_value());
        CHECK_FALSE(brute_force_hom(standard::cyclic(5), standard::cyclic(5), h.generators[*h.witness]));
    }
    // as a bare set the same atlas is holonomic
    CHECK(classify_holonomic(atlas, standard::plain_set(5), 0).verdict == HolonomyVerdict::Holonomic);
}

TEST_CASE("doubling cycle is holonomic inside Aut(Z5)")
{
    const BundleAtlas atlas = three_cycle_atlas(5, affine_map(5, 2, 0));
    const auto auts = enumerate_automorphisms(standard::cyclic(5));
    for (ChartIndex c = 0; c < 3; ++c) {
        const HolonomyReport h = classify_holonomic(atlas, standard::cyclic(5), c);
        CHECK(h.verdict == HolonomyVerdict::Holonomic);
        CHECK(4 % h.elements.size() == 0);
        for (const Permutation& p : h.elements) {
            CHECK(std::find(auts.begin(), auts.end(), p) != auts.end());
        }
    }
    const FiberedAlgebra fa(atlas, standard::cyclic(5));
    CHECK(classify_holonomic(fa, 0).verdict == HolonomyVerdict::Holonomic);
}

TEST_CASE("holonomy generators of a nerve with two independent cycles")
{
    // two nerve triangles through C0 with no triple overlap; C0, C2, C4 share b, so identities there
    const BaseSpace b = BaseSpace::make(
        {"a", "b", "c", "d", "e"},
        {{"C0", {"a", "b", "d"}}, {"C1", {"a", "c"}}, {"C2", {"b", "c"}}, {"C3", {"d", "e"}}, {"C4", {"b", "e"}}});
    REQUIRE_FALSE(b.overlaps(0, 1, 2));
    const Permutation swap01{1, 0, 2}, cyc{1, 2, 0};
    const std::vector<IndexedTransition> ts{
        {0, 1, swap01}, {1, 2, identity_permutation(3)}, {0, 2, identity_permutation(3)},
        {0, 3, cyc},    {3, 4, identity_permutation(3)}, {0, 4, identity_permutation(3)},
        {2, 4, identity_permutation(3)}};
    const BundleAtlas atlas = BundleAtlas::validate(b, 3, ts);
    const HolonomyReport h = holonomy_group(atlas, 0);
    // every generator loop starts and ends at the base chart and transports as reported
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
        CHECK(h.generator_loops[i].charts.front() == 0);
        CHECK(h.generator_loops[i].charts.back() == 0);
        CHECK(loop_transport(atlas, h.generator_loops[i]) == h.generators[i]);
    }
    const auto oracle = closure_oracle(h.generators, 3);
    CHECK(std::vector<Permutation>(oracle.begin(), oracle.end()) == h.elements);
    CHECK(h.elements.size() == 6);
}

TEST_CASE("group order does not depend on the base chart")
{
    std::mt19937 rng(11);
    const auto bij = all_bijections(4);
    const auto auts = enumerate_automorphisms(standard::klein_four());
    std::uniform_int_distribution<std::size_t> pick(0, bij.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        // arbitrary bijections on a 4-cycle of charts
        const BaseSpace b = BaseSpace::make({"a", "b", "c", "d"}, {{"U0", {"a", "b"}},
                                                                  {"U1", {"b", "c"}},
                                                                  {"U2", {"c", "d"}},
                                                                  {"U3", {"d", "a"}}});
        const std::vector<IndexedTransition> ts{
            {0, 1, bij[pick(rng)]}, {1, 2, bij[pick(rng)]}, {2, 3, bij[pick(rng)]}, {3, 0, bij[pick(rng)]}};
        const BundleAtlas atlas = BundleAtlas::validate(b, 4, ts);
        const std::size_t order = holonomy_group(atlas, 0).elements.size();
        for (ChartIndex c = 1; c < 4; ++c) {
            CHECK(holonomy_group(atlas, c).elements.size() == order);
        }
        // with automorphism transitions the verdict is also base-independent
        std::uniform_int_distribution<std::size_t> pick_aut(0, auts.size() - 1);
        const std::vector<IndexedTransition> ats{{0, 1, auts[pick_aut(rng)]},
                                                 {1, 2, auts[pick_aut(rng)]},
                                                 {2, 3, auts[pick_aut(rng)]},
                                                 {3, 0, auts[pick_aut(rng)]}};
        const BundleAtlas aut_atlas = BundleAtlas::validate(b, 4, ats);
        for (ChartIndex c = 0; c < 4; ++c) {
            CHECK(classify_holonomic(aut_atlas, standard::klein_four(), c).verdict == HolonomyVerdict::Holonomic);
        }
    }
}

TEST_CASE("verdict can depend on the base chart when transitions are not automorphisms")
{
    // t10 = +1, t21 = id, t02 = x -> 2(x - 1): the loop is x -> 2x from U0 but 2x - 1 from U1
    const std::vector<IndexedTransition> ts{
        {0, 1, affine_map(5, 1, 1)}, {1, 2, identity_permutation(5)}, {2, 0, affine_map(5, 2, 3)}};
    const BundleAtlas atlas = BundleAtlas::validate(three_cycle_base(), 5, ts);
    CHECK(classify_holonomic(atlas, standard::cyclic(5), 0).verdict == HolonomyVerdict::Holonomic);
    CHECK(classify_holonomic(atlas, standard::cyclic(5), 1).verdict == HolonomyVerdict::Anholonomic);
    CHECK(holonomy_group(atlas, 0).elements.size() == holonomy_group(atlas, 1).elements.size());
}
