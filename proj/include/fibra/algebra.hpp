#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibra {

/// Carrier element. Every finite carrier is the integer range {0..n-1}.
using Element = std::uint32_t;

/// A total map on a carrier, stored as its image list: `p[i]` is the image of `i`.
/// Used for bijections as well as for arbitrary maps between carriers.
using Permutation = std::vector<Element>;

Permutation identity_permutation(std::size_t n);
/// (outer ∘ inner)(i) = outer[inner[i]]
Permutation compose(const Permutation& outer, const Permutation& inner);
/// Precondition: `p` is a bijection.
Permutation inverse(const Permutation& p);
bool is_bijection(const Permutation& p, std::size_t n);

/// Mixed-radix encoding of tuples over {0..r_0-1} × ... × {0..r_{k-1}-1}.
///
/// index = Σ x_i · ∏_{j>i} r_j, so the first component is the most significant
/// digit. This layout is used for product carriers, product base points and
/// section enumeration alike.
class MixedRadix {
public:
    explicit MixedRadix(std::vector<std::size_t> radices);

    std::size_t size() const noexcept { return size_; }
    std::span<const std::size_t> radices() const noexcept { return radices_; }

    std::size_t encode(std::span<const std::size_t> digits) const;
    std::vector<std::size_t> decode(std::size_t index) const;

private:
    std::vector<std::size_t> radices_;
    std::size_t size_ = 1;
};

struct OpSymbol {
    std::string name;
    std::size_t arity = 0;

    bool operator==(const OpSymbol&) const = default;
};

class Signature {
public:
    Signature() = default;
    /// Throws InvalidSignature on empty or repeated symbol names.
    explicit Signature(std::vector<OpSymbol> ops);

    std::span<const OpSymbol> ops() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws UnknownSymbol.
    std::size_t index_of(std::string_view name) const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<OpSymbol> ops_;
};

/// Unvalidated operation table as read from input. `shape` is the nested
/// dimension list (one entry per nesting level); an arity-k table over a
/// carrier of size n must have shape {n, ..., n} (k times).
struct RawTable {
    std::vector<std::size_t> shape;
    std::vector<std::int64_t> entries;
};

/// Finite universal algebra: a carrier {0..n-1} with one total table per
/// signature symbol. Tables are flattened in row-major order with the first
/// argument most significant. Arity-0 symbols hold one designated element.
class FiniteAlgebra {
public:
    using OpFunction = std::function<Element(std::string_view op, std::span<const Element> args)>;

    /// Checks totality and closure; errors name the offending symbol and index.
    static FiniteAlgebra validate(Signature signature, std::size_t size,
                                  const std::map<std::string, RawTable, std::less<>>& raw_tables);

    /// Builds every table by calling `fn` on all argument tuples. Throws
    /// OutOfRangeEntry if `fn` leaves the carrier.
    static FiniteAlgebra tabulate(Signature signature, std::size_t size, const OpFunction& fn);

    const Signature& signature() const noexcept { return signature_; }
    std::size_t size() const noexcept { return size_; }

    /// Checked lookup: UnknownSymbol, ArityMismatch, ElementOutOfRange.
    Element evaluate(std::string_view op, std::span<const Element> args) const;
    /// Unchecked lookup by signature position.
    Element apply(std::size_t op_index, std::span<const Element> args) const;

    std::span<const Element> table(std::size_t op_index) const { return tables_[op_index]; }

    bool operator==(const FiniteAlgebra&) const = default;

private:
    FiniteAlgebra(Signature signature, std::size_t size, std::vector<std::vector<Element>> tables);

    Signature signature_;
    std::size_t size_ = 0;
    std::vector<std::vector<Element>> tables_;
};

FiniteAlgebra validate_algebra(Signature signature, std::size_t size,
                               const std::map<std::string, RawTable, std::less<>>& raw_tables);

Element evaluate(const FiniteAlgebra& alg, std::string_view op, std::span<const Element> args);

/// A total function between the carriers of two algebras over one signature.
struct AlgebraMap {
    /// Throws ElementOutOfRange if `mapping` leaves the target carrier or has
    /// the wrong length.
    AlgebraMap(FiniteAlgebra source, FiniteAlgebra target, Permutation mapping);

    FiniteAlgebra source;
    FiniteAlgebra target;
    Permutation mapping;
};

/// m(ω(x₁..x_k)) = ω(m(x₁)..m(x_k)) for every symbol and tuple. Arity-0
/// symbols are included, so designated elements must map to designated
/// elements. Throws SignatureMismatch.
bool is_homomorphism(const AlgebraMap& m);
bool is_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target, const Permutation& mapping);

inline constexpr std::size_t kDefaultAutomorphismCap = 8;

/// All bijective endomorphisms in lexicographic order of their image lists.
/// Throws CapExceeded when the carrier is larger than `cap`.
std::vector<Permutation> enumerate_automorphisms(const FiniteAlgebra& alg,
                                                 std::size_t cap = kDefaultAutomorphismCap);

/// Componentwise product; carrier index is the MixedRadix encoding of the
/// tuple over the factor sizes.
FiniteAlgebra product_algebra(std::span<const FiniteAlgebra> factors);

/// Every designated element is in `subset` and `subset` is closed under all
/// operations. Throws ElementOutOfRange.
bool subalgebra_closed(const FiniteAlgebra& alg, std::span<const Element> subset);

/// Associativity, two-sided unit and two-sided inverse, by full enumeration.
/// Throws UnknownSymbol (or ArityMismatch when a symbol has the wrong arity).
bool is_group(const FiniteAlgebra& alg, std::string_view mul, std::string_view inv, std::string_view unit);

/// A finite algebra together with the designation of its group symbols.
class GroupStructure {
public:
    /// Throws NotAGroup if the group axioms fail.
    GroupStructure(FiniteAlgebra algebra, std::string mul, std::string inv, std::string unit);

    const FiniteAlgebra& algebra() const noexcept { return algebra_; }
    const std::string& mul_symbol() const noexcept { return mul_; }
    const std::string& inv_symbol() const noexcept { return inv_; }
    const std::string& unit_symbol() const noexcept { return unit_; }

    std::size_t order() const noexcept { return algebra_.size(); }
    Element multiply(Element a, Element b) const;
    Element inverse(Element a) const;
    Element unit() const noexcept { return unit_element_; }

    bool operator==(const GroupStructure&) const = default;

private:
    FiniteAlgebra algebra_;
    std::string mul_, inv_, unit_;
    std::size_t mul_index_ = 0, inv_index_ = 0;
    Element unit_element_ = 0;
};

/// a ∘ᵒᵖ b = b ∘ a; inverse and unit tables are unchanged. Every other
/// symbol of the signature is carried over as is.
GroupStructure opposite_group(const GroupStructure& g);

}  // namespace fibra
