#pragma once

// Holonomy of a finite atlas, computed on the nerve of its chart cover: one
// vertex per (nonempty) chart, one edge per overlapping pair. Because
// transitions are constant per overlap and satisfy the cocycle law, every
// edge loop through a triple overlap transports trivially; holonomy comes
// only from cycles in the nerve with no common triple overlap. A circle
// covered by two charts whose intersection has two components therefore
// carries no holonomy here; use three or more charts arranged in a cycle.

#include "fibra/algebra.hpp"
#include "fibra/bundle.hpp"
#include "fibra/fibered_algebra.hpp"

#include <optional>
#include <vector>

namespace fibra {

/// Chart sequence c₀, c₁, ..., c_k = c₀. Empty or single-chart loops are
/// trivial.
struct ChartLoop {
    std::vector<ChartIndex> charts;

    bool operator==(const ChartLoop&) const = default;
};

/// t_{c_k c_{k-1}} ∘ ... ∘ t_{c₁ c₀}. Throws NotALoop, NonOverlappingStep.
Permutation loop_transport(const BundleAtlas& atlas, const ChartLoop& loop);

/// Concatenation of two loops at the same base chart.
ChartLoop concatenate(const ChartLoop& first, const ChartLoop& second);

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Closure of `generators` (bijections of {0..n-1}) under composition.
/// Elements are returned in lexicographic order. Throws CapExceeded.
std::vector<Permutation> generated_group(std::span<const Permutation> generators, std::size_t n,
                                         std::size_t cap = kDefaultGroupCap);

enum class HolonomyVerdict { Holonomic, Anholonomic };

struct HolonomyReport {
    ChartIndex base_chart = 0;
    std::vector<ChartLoop> generator_loops;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
    /// Set by classify_holonomic only.
    std::optional<HolonomyVerdict> verdict;
    /// Index into `generators` of the first one that is not an automorphism.
    std::optional<std::size_t> witness;
};

/// Spanning tree by breadth-first search from `base_chart`, visiting
/// neighbours in chart-index order. One generator per non-tree edge {u, v}
/// (u < v): tree path to u, the edge u→v, tree path back from v.
/// Throws NerveDisconnected, UnknownChart, CapExceeded.
HolonomyReport holonomy_group(const BundleAtlas& atlas, ChartIndex base_chart, std::size_t cap = kDefaultGroupCap);

/// Holonomic iff the holonomy group lies in Aut(fiber). Aut(fiber) is a
/// group, so it suffices to test the generators. The atlas is not required
/// to form a fibered algebra with `fiber`: that is exactly what the
/// classification probes. Throws SizeMismatch in addition to holonomy_group's
/// errors.
HolonomyReport classify_holonomic(const BundleAtlas& atlas, const FiniteAlgebra& fiber, ChartIndex base_chart,
                                  std::size_t cap = kDefaultGroupCap);
/// A validated fibered algebra has automorphism transitions, so this always
/// reports holonomic.
HolonomyReport classify_holonomic(const FiberedAlgebra& fa, ChartIndex base_chart, std::size_t cap = kDefaultGroupCap);

}  // namespace fibra
