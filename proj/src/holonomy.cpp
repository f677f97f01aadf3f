#include "fibra/holonomy.hpp"

#include "fibra/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fibra {

Permutation loop_transport(const BundleAtlas& atlas, const ChartLoop& loop)
{
    const BaseSpace& base = atlas.base();
    Permutation total = identity_permutation(atlas.fiber_size());
    if (loop.charts.empty()) {
        return total;
    }
    for (ChartIndex c : loop.charts) {
        if (c >= base.chart_count()) {
            throw Error(ErrorKind::NotALoop, "loop names a chart index out of range");
        }
    }
    if (loop.charts.front() != loop.charts.back()) {
        throw Error(ErrorKind::NotALoop, "loop does not return to its first chart",
                    {{"first", base.chart_name(loop.charts.front())}, {"last", base.chart_name(loop.charts.back())}});
    }
    for (std::size_t i = 0; i + 1 < loop.charts.size(); ++i) {
        const ChartIndex from = loop.charts[i];
        const ChartIndex to = loop.charts[i + 1];
        if (!base.overlaps(from, to)) {
            throw Error(ErrorKind::NonOverlappingStep,
                        "loop steps between disjoint charts " + base.chart_name(from) + " and " + base.chart_name(to),
                        {{"from", base.chart_name(from)}, {"to", base.chart_name(to)}});
        }
        total = compose(atlas.transition(to, from), total);
    }
    return total;
}

ChartLoop concatenate(const ChartLoop& first, const ChartLoop& second)
{
    if (first.charts.empty()) {
        return second;
    }
    if (second.charts.empty()) {
        return first;
    }
    if (first.charts.back() != second.charts.front()) {
        throw Error(ErrorKind::NotALoop, "loops do not share a base chart");
    }
    ChartLoop out = first;
    out.charts.insert(out.charts.end(), second.charts.begin() + 1, second.charts.end());
    return out;
}

std::vector<Permutation> generated_group(std::span<const Permutation> generators, std::size_t n, std::size_t cap)
{
    std::set<Permutation> seen;
    std::deque<Permutation> frontier;
    seen.insert(identity_permutation(n));
    frontier.push_back(identity_permutation(n));
    while (!frontier.empty()) {
        const Permutation g = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& s : generators) {
            Permutation h = compose(g, s);
            if (seen.insert(h).second) {
                if (seen.size() > cap) {
                    throw Error(ErrorKind::CapExceeded, "generated group exceeds " + std::to_string(cap) + " elements",
                                {{"cap", std::to_string(cap)}});
                }
                frontier.push_back(std::move(h));
            }
        }
    }
    // Finite: closure under composition already contains inverses.
    return {seen.begin(), seen.end()};
}

HolonomyReport holonomy_group(const BundleAtlas& atlas, ChartIndex base_chart, std::size_t cap)
{
    const BaseSpace& base = atlas.base();
    const std::size_t k = base.chart_count();
    if (base_chart >= k) {
        throw Error(ErrorKind::UnknownChart, "base chart index out of range");
    }
    std::vector<bool> nonempty(k);
    for (ChartIndex c = 0; c < k; ++c) {
        nonempty[c] = !base.chart_points(c).empty();
    }

    constexpr ChartIndex none = static_cast<ChartIndex>(-1);
    std::vector<ChartIndex> parent(k, none);
    std::vector<bool> visited(k, false);
    std::deque<ChartIndex> queue{base_chart};
    visited[base_chart] = true;
    while (!queue.empty()) {
        const ChartIndex u = queue.front();
        queue.pop_front();
        for (ChartIndex v = 0; v < k; ++v) {
            if (v != u && !visited[v] && base.overlaps(u, v)) {
                visited[v] = true;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    for (ChartIndex c = 0; c < k; ++c) {
        if (nonempty[c] && !visited[c]) {
            throw Error(ErrorKind::NerveDisconnected,
                        "chart " + base.chart_name(c) + " is not connected to " + base.chart_name(base_chart),
                        {{"chart", base.chart_name(c)}});
        }
    }

    // Path from the base chart to c along the tree.
    auto tree_path = [&](ChartIndex c) {
        std::vector<ChartIndex> path;
        for (ChartIndex at = c; at != none; at = parent[at]) {
            path.push_back(at);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    HolonomyReport report;
    report.base_chart = base_chart;
    for (ChartIndex u = 0; u < k; ++u) {
        for (ChartIndex v = u + 1; v < k; ++v) {
            if (!base.overlaps(u, v) || parent[v] == u || parent[u] == v) {
                continue;
            }
            ChartLoop loop;
            loop.charts = tree_path(u);
            auto back = tree_path(v);
            std::reverse(back.begin(), back.end());
            loop.charts.insert(loop.charts.end(), back.begin(), back.end());
            report.generators.push_back(loop_transport(atlas, loop));
            report.generator_loops.push_back(std::move(loop));
        }
    }
    report.elements = generated_group(report.generators, atlas.fiber_size(), cap);
    return report;
}

HolonomyReport classify_holonomic(const BundleAtlas& atlas, const FiniteAlgebra& fiber, ChartIndex base_chart,
                                  std::size_t cap)
{
    if (atlas.fiber_size() != fiber.size()) {
        throw Error(ErrorKind::SizeMismatch, "atlas fiber size differs from the algebra carrier");
    }
    HolonomyReport report = holonomy_group(atlas, base_chart, cap);
    report.verdict = HolonomyVerdict::Holonomic;
    for (std::size_t i = 0; i < report.generators.size(); ++i) {
        if (!is_homomorphism(fiber, fiber, report.generators[i])) {
            report.verdict = HolonomyVerdict::Anholonomic;
            report.witness = i;
            break;
        }
    }
    return report;
}

HolonomyReport classify_holonomic(const FiberedAlgebra& fa, ChartIndex base_chart, std::size_t cap)
{
    return classify_holonomic(fa.atlas(), fa.fiber(), base_chart, cap);
}

}  // namespace fibra
