#pragma once

#include "fibra/algebra.hpp"
#include "fibra/bundle.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace fibra {

/// A bundle whose fiber carries a finite algebra, with every transition an
/// automorphism of that algebra. Operations act fiberwise.
class FiberedAlgebra {
public:
    /// Throws SizeMismatch, or TransitionNotHomomorphism naming the first
    /// failing ordered chart pair (details "from", "to").
    FiberedAlgebra(BundleAtlas atlas, FiniteAlgebra fiber);

    const BundleAtlas& atlas() const noexcept { return atlas_; }
    const FiniteAlgebra& fiber() const noexcept { return fiber_; }

    bool operator==(const FiberedAlgebra& o) const { return atlas_ == o.atlas_ && fiber_ == o.fiber_; }

private:
    BundleAtlas atlas_;
    FiniteAlgebra fiber_;
};

FiberedAlgebra make_fibered_algebra(BundleAtlas atlas, FiniteAlgebra fiber);

/// Pointwise ω(s₁(x), ..., s_k(x)) evaluated in each point's canonical chart.
/// Throws UnknownSymbol, ArityMismatch, BundleMismatch.
Section apply_operation_sections(const FiberedAlgebra& fa, std::string_view op, std::span<const Section> args);

/// Every fiber map f_x : A_x → A'_{F(x)} is an algebra homomorphism.
/// Throws BundleMismatch when the map's bundles are not those of src/dst.
bool is_fibered_homomorphism(const FiberedMap& m, const FiberedAlgebra& src, const FiberedAlgebra& dst);
/// Homomorphism with every fiber map bijective.
bool is_fibered_isomorphism(const FiberedMap& m, const FiberedAlgebra& src, const FiberedAlgebra& dst);

/// `sub_carrier` is a subalgebra of the fiber and every transition maps it
/// onto itself, so it defines a sub-bundle in every chart at once.
/// Throws ElementOutOfRange.
bool is_fibered_subalgebra(std::span<const Element> sub_carrier, const FiberedAlgebra& fa);

/// Reduced product of fibered algebras over one base with the product
/// algebra as fiber.
FiberedAlgebra reduced_product(std::span<const FiberedAlgebra> factors);

}  // namespace fibra
