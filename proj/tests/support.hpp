#pragma once

// Fixtures and brute-force oracles shared by the unit tests and the
// acceptance binary. Oracles never call the library routine they check.

#include "fibra/algebra.hpp"
#include "fibra/bundle.hpp"
#include "fibra/error.hpp"
#include "fibra/fibered_algebra.hpp"
#include "fibra/representation.hpp"
#include "fibra/standard.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace fibra::testing {

/// Points p, q; charts A = {p, q}, B = {q}.
inline BaseSpace two_point_base()
{
    return BaseSpace::make({"p", "q"}, {{"A", {"p", "q"}}, {"B", {"q"}}});
}

/// Points p0, p1, p2 covered by U0 = {p0,p1}, U1 = {p1,p2}, U2 = {p2,p0}.
inline BaseSpace three_cycle_base()
{
    return BaseSpace::make({"p0", "p1", "p2"},
                           {{"U0", {"p0", "p1"}}, {"U1", {"p1", "p2"}}, {"U2", {"p2", "p0"}}});
}

/// t_{U1,U0} = t_{U2,U1} = t_{U0,U2} = `step`.
inline BundleAtlas three_cycle_atlas(std::size_t n, const Permutation& step)
{
    const std::vector<IndexedTransition> ts{{0, 1, step}, {1, 2, step}, {2, 0, step}};
    return BundleAtlas::validate(three_cycle_base(), n, ts);
}

inline Permutation affine_map(std::size_t n, std::size_t mul, std::size_t add)
{
    Permutation p(n);
    for (std::size_t x = 0; x < n; ++x) {
        p[x] = static_cast<Element>((mul * x + add) % n);
    }
    return p;
}

/// Every bijection of {0..n-1}, lexicographic.
inline std::vector<Permutation> all_bijections(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), Element{0});
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Direct table walk: every symbol, every argument tuple.
inline bool brute_force_hom(const FiniteAlgebra& src, const FiniteAlgebra& dst, const Permutation& m)
{
    for (std::size_t op = 0; op < src.signature().size(); ++op) {
        const std::size_t k = src.signature().ops()[op].arity;
        std::size_t tuples = 1;
        for (std::size_t i = 0; i < k; ++i) {
            tuples *= src.size();
        }
        std::vector<Element> args(k), images(k);
        for (std::size_t t = 0; t < tuples; ++t) {
            std::size_t rest = t;
            for (std::size_t i = k; i-- > 0;) {
                args[i] = static_cast<Element>(rest % src.size());
                rest /= src.size();
                images[i] = m[args[i]];
            }
            if (m[src.table(op)[t]] != dst.apply(op, images)) {
                return false;
            }
        }
    }
    return true;
}

/// Gauge atlas: t_{βα} = g_β ∘ g_α⁻¹ for one random automorphism per chart,
/// so identity, inverse and cocycle hold by construction.
struct RandomAtlas {
    BaseSpace base;
    std::vector<Permutation> gauge;
    std::vector<IndexedTransition> transitions;
};

inline RandomAtlas random_gauge_atlas(std::mt19937& rng, const std::vector<Permutation>& automorphisms)
{
    std::uniform_int_distribution<std::size_t> point_count(2, 5);
    const std::size_t n_points = point_count(rng);
    std::uniform_int_distribution<std::size_t> chart_count(2, 4);
    const std::size_t n_charts = chart_count(rng);
    std::vector<std::string> points;
    for (std::size_t i = 0; i < n_points; ++i) {
        points.push_back("x" + std::to_string(i));
    }
    std::vector<std::vector<PointIndex>> members(n_charts);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::size_t> pick_chart(0, n_charts - 1);
    for (PointIndex x = 0; x < n_points; ++x) {
        bool placed = false;
        for (std::size_t c = 0; c < n_charts; ++c) {
            if (coin(rng)) {
                members[c].push_back(x);
                placed = true;
            }
        }
        if (!placed) {
            members[pick_chart(rng)].push_back(x);
        }
    }
    for (auto& m : members) {
        if (m.empty()) {
            m.push_back(0);
        }
        std::sort(m.begin(), m.end());
    }
    std::vector<std::pair<std::string, std::vector<PointIndex>>> charts;
    for (std::size_t c = 0; c < n_charts; ++c) {
        charts.emplace_back("C" + std::to_string(c), members[c]);
    }
    RandomAtlas out{BaseSpace::make_indexed(points, charts), {}, {}};
    std::uniform_int_distribution<std::size_t> pick_aut(0, automorphisms.size() - 1);
    for (std::size_t c = 0; c < n_charts; ++c) {
        out.gauge.push_back(automorphisms[pick_aut(rng)]);
    }
    for (ChartIndex a = 0; a < n_charts; ++a) {
        for (ChartIndex b = a + 1; b < n_charts; ++b) {
            if (out.base.overlaps(a, b)) {
                out.transitions.push_back({a, b, compose(out.gauge[b], inverse(out.gauge[a]))});
            }
        }
    }
    return out;
}

struct FixtureRep {
    std::string name;
    GroupRepresentation rep;
};

inline FiberedGroup additive_fibered_group(const BundleAtlas& atlas, std::size_t n)
{
    return FiberedGroup(FiberedAlgebra(atlas, standard::cyclic(n)), "+", "-", "0");
}

/// Z_n over the two-point base with t_{BA} = negation.
inline FiberedGroup z_over_two_points(std::size_t n)
{
    const std::vector<IndexedTransition> ts{{0, 1, affine_map(n, n - 1, 0)}};
    return additive_fibered_group(BundleAtlas::validate(two_point_base(), n, ts), n);
}

/// S_3 over the two-point base with t_{BA} = conjugation by a transposition.
inline FiberedGroup s3_over_two_points()
{
    const GroupStructure s3 = standard::symmetric_group(3);
    Permutation conj(6);
    for (Element g = 0; g < 6; ++g) {
        conj[g] = s3.multiply(s3.multiply(1, g), s3.inverse(1));
    }
    const std::vector<IndexedTransition> ts{{0, 1, conj}};
    return FiberedGroup(FiberedAlgebra(BundleAtlas::validate(two_point_base(), 6, ts), standard::symmetric(3)), "*",
                        "inv", "e");
}

/// Z₄ acting on a two-element set by μ ↦ μ + g mod 2.
inline GroupRepresentation mod2_shift()
{
    const FiberedGroup z4 = z_over_two_points(4);
    const BundleAtlas target = BundleAtlas::trivial(two_point_base(), 2);
    return make_representation(z4, target, Variance::Covariant,
                               [](PointIndex, Element g, Element mu) { return static_cast<Element>((mu + g) % 2); });
}

/// The fixture set over the two-point base: left regular Z₃, trivial Z₃ on a
/// three-element fiber, the Z₄ → Z₂ mod-2 shift, and left and right regular
/// S₃.
inline std::vector<FixtureRep> fixture_representations()
{
    const FiberedGroup z3 = z_over_two_points(3);
    const FiberedGroup s3 = s3_over_two_points();
    return {
        {"left regular Z3", shift_representation(z3, ShiftSide::Left)},
        {"trivial Z3", trivial_representation(z3, BundleAtlas::trivial(two_point_base(), 3))},
        {"mod-2 shift Z4", mod2_shift()},
        {"left regular S3", shift_representation(s3, ShiftSide::Left)},
        {"right regular S3", shift_representation(s3, ShiftSide::Right)},
    };
}

/// Exhaustive law check on the stored canonical tables, independent of
/// make_representation.
inline bool brute_force_action_laws(const GroupRepresentation& r)
{
    const GroupStructure& g = r.group().group();
    const std::size_t m = r.target().fiber_size();
    for (PointIndex x = 0; x < r.target().base().point_count(); ++x) {
        for (Element mu = 0; mu < m; ++mu) {
            if (r.action(x, g.unit())[mu] != mu) {
                return false;
            }
        }
        for (Element a = 0; a < g.order(); ++a) {
            for (Element b = 0; b < g.order(); ++b) {
                const Permutation& ra = r.action(x, a);
                const Permutation& rb = r.action(x, b);
                const Permutation& rab = r.action(x, g.multiply(a, b));
                for (Element mu = 0; mu < m; ++mu) {
                    const Element lhs = rab[mu];
                    const Element rhs = r.variance() == Variance::Covariant ? ra[rb[mu]] : rb[ra[mu]];
                    if (lhs != rhs) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Pointwise group-section multiplication over canonical charts.
inline Section multiply_sections(const GroupRepresentation& r, const Section& a, const Section& b)
{
    const GroupStructure& g = r.group().group();
    std::vector<Element> v(a.values().size());
    for (std::size_t x = 0; x < v.size(); ++x) {
        v[x] = g.multiply(a.value(x), b.value(x));
    }
    return Section(a.bundle(), v);
}

template <class F>
bool throws_kind(ErrorKind kind, F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

}  // namespace fibra::testing
