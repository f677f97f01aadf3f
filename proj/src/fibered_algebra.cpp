#include "fibra/fibered_algebra.hpp"

#include "fibra/error.hpp"

#include <algorithm>

namespace fibra {

FiberedAlgebra::FiberedAlgebra(BundleAtlas atlas, FiniteAlgebra fiber) : atlas_(std::move(atlas)), fiber_(std::move(fiber))
{
    if (atlas_.fiber_size() != fiber_.size()) {
        throw Error(ErrorKind::SizeMismatch, "atlas fiber size " + std::to_string(atlas_.fiber_size())
                                                 + " differs from algebra size " + std::to_string(fiber_.size()));
    }
    // transitions() lists pairs by ascending target then source; scan in
    // (from, to) order so the reported pair is the lexicographically first.
    auto all = atlas_.transitions();
    std::sort(all.begin(), all.end(),
              [](const IndexedTransition& a, const IndexedTransition& b) {
                  return std::pair(a.from, a.to) < std::pair(b.from, b.to);
              });
    const BaseSpace& base = atlas_.base();
    for (const auto& t : all) {
        if (!is_homomorphism(fiber_, fiber_, t.map)) {
            throw Error(ErrorKind::TransitionNotHomomorphism,
                        "transition " + base.chart_name(t.from) + "->" + base.chart_name(t.to)
                            + " is not a homomorphism of the fiber algebra",
                        {{"from", base.chart_name(t.from)}, {"to", base.chart_name(t.to)}});
        }
    }
}

FiberedAlgebra make_fibered_algebra(BundleAtlas atlas, FiniteAlgebra fiber)
{
    return FiberedAlgebra(std::move(atlas), std::move(fiber));
}

Section apply_operation_sections(const FiberedAlgebra& fa, std::string_view op, std::span<const Section> args)
{
    const std::size_t op_index = fa.fiber().signature().index_of(op);
    const std::size_t arity = fa.fiber().signature().ops()[op_index].arity;
    if (args.size() != arity) {
        throw Error(ErrorKind::ArityMismatch,
                    "symbol '" + std::string(op) + "' takes " + std::to_string(arity) + " sections",
                    {{"symbol", std::string(op)}});
    }
    for (const auto& s : args) {
        if (!(s.bundle() == fa.atlas())) {
            throw Error(ErrorKind::BundleMismatch, "argument section belongs to another bundle");
        }
    }
    const std::size_t points = fa.atlas().base().point_count();
    std::vector<Element> values(points);
    std::vector<Element> at(arity);
    for (PointIndex x = 0; x < points; ++x) {
        for (std::size_t k = 0; k < arity; ++k) {
            at[k] = args[k].value(x);
        }
        values[x] = fa.fiber().apply(op_index, at);
    }
    return Section(fa.atlas(), std::move(values));
}

namespace {

void check_endpoints(const FiberedMap& m, const FiberedAlgebra& src, const FiberedAlgebra& dst)
{
    if (!(m.source() == src.atlas()) || !(m.target() == dst.atlas())) {
        throw Error(ErrorKind::BundleMismatch, "fibered map endpoints differ from the given fibered algebras");
    }
}

}  // namespace

bool is_fibered_homomorphism(const FiberedMap& m, const FiberedAlgebra& src, const FiberedAlgebra& dst)
{
    check_endpoints(m, src, dst);
    for (PointIndex x = 0; x < src.atlas().base().point_count(); ++x) {
        if (!is_homomorphism(src.fiber(), dst.fiber(), m.fiber_map(x))) {
            return false;
        }
    }
    return true;
}

bool is_fibered_isomorphism(const FiberedMap& m, const FiberedAlgebra& src, const FiberedAlgebra& dst)
{
    if (!is_fibered_homomorphism(m, src, dst)) {
        return false;
    }
    for (PointIndex x = 0; x < src.atlas().base().point_count(); ++x) {
        if (!is_bijection(m.fiber_map(x), dst.fiber().size())) {
            return false;
        }
    }
    return true;
}

bool is_fibered_subalgebra(std::span<const Element> sub_carrier, const FiberedAlgebra& fa)
{
    if (!subalgebra_closed(fa.fiber(), sub_carrier)) {
        return false;
    }
    std::vector<bool> member(fa.fiber().size(), false);
    for (Element e : sub_carrier) {
        member[e] = true;
    }
    // Transitions are bijections, so mapping the finite subset into itself is
    // the same as mapping it onto itself.
    for (const auto& t : fa.atlas().transitions()) {
        for (Element e : sub_carrier) {
            if (!member[t.map[e]]) {
                return false;
            }
        }
    }
    return true;
}

FiberedAlgebra reduced_product(std::span<const FiberedAlgebra> factors)
{
    std::vector<BundleAtlas> atlases;
    std::vector<FiniteAlgebra> fibers;
    for (const auto& f : factors) {
        atlases.push_back(f.atlas());
        fibers.push_back(f.fiber());
    }
    BundleAtlas atlas = reduced_product_bundles(atlases);
    return FiberedAlgebra(std::move(atlas), product_algebra(fibers));
}

}  // namespace fibra
