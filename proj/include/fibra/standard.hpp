#pragma once

// Small standard algebras used by fixtures, tests and the CLI examples.

#include "fibra/algebra.hpp"

namespace fibra::standard {

/// Signature {"+":2, "-":1, "0":0} used for additive groups.
Signature additive_signature();
/// Signature {"*":2, "inv":1, "e":0} used for multiplicative groups.
Signature multiplicative_signature();

/// Z_n with addition, negation and zero.
FiniteAlgebra cyclic(std::size_t n);
GroupStructure cyclic_group(std::size_t n);

/// Z_2 × Z_2 as the product of two copies of Z_2 (mixed-radix carrier).
FiniteAlgebra klein_four();
GroupStructure klein_four_group();

/// Symmetric group on {0..k-1}. Elements are the permutations in lexicographic
/// order of their image lists (so 0 is the identity), and (a*b)(i) = a(b(i)).
FiniteAlgebra symmetric(std::size_t k);
GroupStructure symmetric_group(std::size_t k);
/// Image list of the permutation with index `element` in `symmetric(k)`.
Permutation symmetric_element(std::size_t k, Element element);

/// A bare set of size n (empty signature).
FiniteAlgebra plain_set(std::size_t n);

}  // namespace fibra::standard
