#include "fibra/algebra.hpp"

#include "fibra/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fibra {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && r > SIZE_MAX / base) {
            throw Error(ErrorKind::CapExceeded, "table size overflows");
        }
        r *= base;
    }
    return r;
}

// Calls fn(args) for every tuple in {0..n-1}^k, last argument fastest; the
// running index matches the flattened table layout.
template <class Fn>
void for_each_tuple(std::size_t n, std::size_t k, Fn&& fn)
{
    std::vector<Element> args(k, 0);
    const std::size_t total = checked_power(n, k);
    for (std::size_t idx = 0; idx < total; ++idx) {
        fn(std::span<const Element>(args), idx);
        for (std::size_t pos = k; pos-- > 0;) {
            if (++args[pos] < n) {
                break;
            }
            args[pos] = 0;
        }
    }
}

std::size_t flat_index(std::size_t n, std::span<const Element> args)
{
    std::size_t idx = 0;
    for (Element a : args) {
        idx = idx * n + a;
    }
    return idx;
}

}  // namespace

Permutation identity_permutation(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), Element{0});
    return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner)
{
    Permutation r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        r[i] = outer[inner[i]];
    }
    return r;
}

Permutation inverse(const Permutation& p)
{
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[p[i]] = static_cast<Element>(i);
    }
    return r;
}

bool is_bijection(const Permutation& p, std::size_t n)
{
    if (p.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (Element v : p) {
        if (v >= n || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

MixedRadix::MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices))
{
    for (std::size_t r : radices_) {
        if (r != 0 && size_ > SIZE_MAX / r) {
            throw Error(ErrorKind::CapExceeded, "mixed-radix size overflows");
        }
        size_ *= r;
    }
}

std::size_t MixedRadix::encode(std::span<const std::size_t> digits) const
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        idx = idx * radices_[i] + digits[i];
    }
    return idx;
}

std::vector<std::size_t> MixedRadix::decode(std::size_t index) const
{
    std::vector<std::size_t> digits(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
        digits[i] = index % radices_[i];
        index /= radices_[i];
    }
    return digits;
}

Signature::Signature(std::vector<OpSymbol> ops) : ops_(std::move(ops))
{
    std::set<std::string_view> names;
    for (const auto& op : ops_) {
        if (op.name.empty()) {
            throw Error(ErrorKind::InvalidSignature, "empty operation symbol");
        }
        if (!names.insert(op.name).second) {
            throw Error(ErrorKind::InvalidSignature, "duplicate operation symbol '" + op.name + "'",
                        {{"symbol", op.name}});
        }
    }
}

std::optional<std::size_t> Signature::find(std::string_view name) const
{
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        if (ops_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw Error(ErrorKind::UnknownSymbol, "unknown operation symbol '" + std::string(name) + "'",
                {{"symbol", std::string(name)}});
}

FiniteAlgebra::FiniteAlgebra(Signature signature, std::size_t size, std::vector<std::vector<Element>> tables)
    : signature_(std::move(signature)), size_(size), tables_(std::move(tables))
{
}

FiniteAlgebra FiniteAlgebra::validate(Signature signature, std::size_t size,
                                      const std::map<std::string, RawTable, std::less<>>& raw_tables)
{
    if (size == 0) {
        throw Error(ErrorKind::OutOfRangeEntry, "carrier size must be positive");
    }
    for (const auto& [name, _] : raw_tables) {
        if (!signature.find(name)) {
            throw Error(ErrorKind::UnknownSymbol, "table given for unknown symbol '" + name + "'",
                        {{"symbol", name}});
        }
    }
    std::vector<std::vector<Element>> tables;
    tables.reserve(signature.size());
    for (const auto& op : signature.ops()) {
        auto it = raw_tables.find(op.name);
        if (it == raw_tables.end()) {
            throw Error(ErrorKind::MissingTable, "no table for symbol '" + op.name + "'", {{"symbol", op.name}});
        }
        const RawTable& raw = it->second;
        const bool shape_ok = raw.shape.size() == op.arity
                              && std::all_of(raw.shape.begin(), raw.shape.end(), [&](std::size_t d) { return d == size; });
        const std::size_t expected = checked_power(size, op.arity);
        if (!shape_ok || raw.entries.size() != expected) {
            throw Error(ErrorKind::ArityMismatch,
                        "table for '" + op.name + "' does not have shape " + std::to_string(size) + "^"
                            + std::to_string(op.arity),
                        {{"symbol", op.name}});
        }
        std::vector<Element> table(expected);
        for (std::size_t i = 0; i < expected; ++i) {
            const std::int64_t v = raw.entries[i];
            if (v < 0 || static_cast<std::uint64_t>(v) >= size) {
                throw Error(ErrorKind::OutOfRangeEntry,
                            "entry " + std::to_string(v) + " of '" + op.name + "' at flat index " + std::to_string(i)
                                + " is outside the carrier",
                            {{"symbol", op.name}, {"index", std::to_string(i)}, {"value", std::to_string(v)}});
            }
            table[i] = static_cast<Element>(v);
        }
        tables.push_back(std::move(table));
    }
    return FiniteAlgebra(std::move(signature), size, std::move(tables));
}

FiniteAlgebra FiniteAlgebra::tabulate(Signature signature, std::size_t size, const OpFunction& fn)
{
    std::map<std::string, RawTable, std::less<>> raw;
    for (const auto& op : signature.ops()) {
        RawTable t;
        t.shape.assign(op.arity, size);
        t.entries.resize(checked_power(size, op.arity));
        for_each_tuple(size, op.arity, [&](std::span<const Element> args, std::size_t idx) {
            t.entries[idx] = static_cast<std::int64_t>(fn(op.name, args));
        });
        raw.emplace(op.name, std::move(t));
    }
    return validate(std::move(signature), size, raw);
}

Element FiniteAlgebra::evaluate(std::string_view op, std::span<const Element> args) const
{
    const std::size_t i = signature_.index_of(op);
    if (args.size() != signature_.ops()[i].arity) {
        throw Error(ErrorKind::ArityMismatch,
                    "symbol '" + std::string(op) + "' takes " + std::to_string(signature_.ops()[i].arity)
                        + " arguments, got " + std::to_string(args.size()),
                    {{"symbol", std::string(op)}});
    }
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] >= size_) {
            throw Error(ErrorKind::ElementOutOfRange, "argument " + std::to_string(k) + " is outside the carrier",
                        {{"index", std::to_string(k)}, {"value", std::to_string(args[k])}});
        }
    }
    return apply(i, args);
}

Element FiniteAlgebra::apply(std::size_t op_index, std::span<const Element> args) const
{
    return tables_[op_index][flat_index(size_, args)];
}

FiniteAlgebra validate_algebra(Signature signature, std::size_t size,
                               const std::map<std::string, RawTable, std::less<>>& raw_tables)
{
    return FiniteAlgebra::validate(std::move(signature), size, raw_tables);
}

Element evaluate(const FiniteAlgebra& alg, std::string_view op, std::span<const Element> args)
{
    return alg.evaluate(op, args);
}

AlgebraMap::AlgebraMap(FiniteAlgebra src, FiniteAlgebra tgt, Permutation m)
    : source(std::move(src)), target(std::move(tgt)), mapping(std::move(m))
{
    if (mapping.size() != source.size()) {
        throw Error(ErrorKind::ElementOutOfRange, "mapping length differs from source carrier size");
    }
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        if (mapping[i] >= target.size()) {
            throw Error(ErrorKind::ElementOutOfRange, "mapping sends " + std::to_string(i) + " outside the target",
                        {{"index", std::to_string(i)}});
        }
    }
}

bool is_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target, const Permutation& mapping)
{
    if (!(source.signature() == target.signature())) {
        throw Error(ErrorKind::SignatureMismatch, "source and target signatures differ");
    }
    const auto ops = source.signature().ops();
    std::vector<Element> image;
    for (std::size_t op = 0; op < ops.size(); ++op) {
        bool ok = true;
        image.resize(ops[op].arity);
        for_each_tuple(source.size(), ops[op].arity, [&](std::span<const Element> args, std::size_t) {
            if (!ok) {
                return;
            }
            for (std::size_t k = 0; k < args.size(); ++k) {
                image[k] = mapping[args[k]];
            }
            ok = mapping[source.apply(op, args)] == target.apply(op, image);
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

bool is_homomorphism(const AlgebraMap& m)
{
    return is_homomorphism(m.source, m.target, m.mapping);
}

std::vector<Permutation> enumerate_automorphisms(const FiniteAlgebra& alg, std::size_t cap)
{
    if (alg.size() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "automorphism enumeration over " + std::to_string(alg.size()) + " elements exceeds cap "
                        + std::to_string(cap),
                    {{"size", std::to_string(alg.size())}, {"cap", std::to_string(cap)}});
    }
    std::vector<Permutation> out;
    Permutation p = identity_permutation(alg.size());
    do {
        if (is_homomorphism(alg, alg, p)) {
            out.push_back(p);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

FiniteAlgebra product_algebra(std::span<const FiniteAlgebra> factors)
{
    if (factors.empty()) {
        throw Error(ErrorKind::EmptyList, "product of an empty list of algebras");
    }
    const Signature& sig = factors.front().signature();
    std::vector<std::size_t> radices;
    for (const auto& f : factors) {
        if (!(f.signature() == sig)) {
            throw Error(ErrorKind::SignatureMismatch, "product factors have different signatures");
        }
        radices.push_back(f.size());
    }
    const MixedRadix radix(std::move(radices));
    return FiniteAlgebra::tabulate(sig, radix.size(), [&](std::string_view op, std::span<const Element> args) {
        const std::size_t op_index = sig.index_of(op);
        std::vector<std::vector<std::size_t>> decoded;
        decoded.reserve(args.size());
        for (Element a : args) {
            decoded.push_back(radix.decode(a));
        }
        std::vector<std::size_t> result(factors.size());
        std::vector<Element> component(args.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::size_t k = 0; k < args.size(); ++k) {
                component[k] = static_cast<Element>(decoded[k][i]);
            }
            result[i] = factors[i].apply(op_index, component);
        }
        return static_cast<Element>(radix.encode(result));
    });
}

bool subalgebra_closed(const FiniteAlgebra& alg, std::span<const Element> subset)
{
    std::vector<bool> member(alg.size(), false);
    for (Element e : subset) {
        if (e >= alg.size()) {
            throw Error(ErrorKind::ElementOutOfRange, "subset element " + std::to_string(e) + " is outside the carrier",
                        {{"value", std::to_string(e)}});
        }
        member[e] = true;
    }
    std::vector<Element> elems;
    for (Element e = 0; e < alg.size(); ++e) {
        if (member[e]) {
            elems.push_back(e);
        }
    }
    const auto ops = alg.signature().ops();
    for (std::size_t op = 0; op < ops.size(); ++op) {
        bool ok = true;
        std::vector<Element> args(ops[op].arity);
        for_each_tuple(elems.size(), ops[op].arity, [&](std::span<const Element> pos, std::size_t) {
            if (!ok) {
                return;
            }
            for (std::size_t k = 0; k < pos.size(); ++k) {
                args[k] = elems[pos[k]];
            }
            ok = member[alg.apply(op, args)];
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

namespace {

std::size_t symbol_with_arity(const Signature& sig, std::string_view name, std::size_t arity)
{
    const std::size_t i = sig.index_of(name);
    if (sig.ops()[i].arity != arity) {
        throw Error(ErrorKind::ArityMismatch,
                    "group symbol '" + std::string(name) + "' must have arity " + std::to_string(arity),
                    {{"symbol", std::string(name)}});
    }
    return i;
}

}  // namespace

bool is_group(const FiniteAlgebra& alg, std::string_view mul, std::string_view inv, std::string_view unit)
{
    const Signature& sig = alg.signature();
    const std::size_t m = symbol_with_arity(sig, mul, 2);
    const std::size_t i = symbol_with_arity(sig, inv, 1);
    const std::size_t u = symbol_with_arity(sig, unit, 0);
    const std::size_t n = alg.size();
    auto mul_ = [&](Element a, Element b) { return alg.table(m)[a * n + b]; };
    const Element e = alg.table(u)[0];
    for (Element a = 0; a < n; ++a) {
        if (mul_(e, a) != a || mul_(a, e) != a) {
            return false;
        }
        const Element ai = alg.table(i)[a];
        if (mul_(a, ai) != e || mul_(ai, a) != e) {
            return false;
        }
        for (Element b = 0; b < n; ++b) {
            for (Element c = 0; c < n; ++c) {
                if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c))) {
                    return false;
                }
            }
        }
    }
    return true;
}

GroupStructure::GroupStructure(FiniteAlgebra algebra, std::string mul, std::string inv, std::string unit)
    : algebra_(std::move(algebra)), mul_(std::move(mul)), inv_(std::move(inv)), unit_(std::move(unit))
{
    if (!is_group(algebra_, mul_, inv_, unit_)) {
        throw Error(ErrorKind::NotAGroup, "group axioms fail for (" + mul_ + ", " + inv_ + ", " + unit_ + ")");
    }
    mul_index_ = algebra_.signature().index_of(mul_);
    inv_index_ = algebra_.signature().index_of(inv_);
    unit_element_ = algebra_.table(algebra_.signature().index_of(unit_))[0];
}

Element GroupStructure::multiply(Element a, Element b) const
{
    return algebra_.table(mul_index_)[a * algebra_.size() + b];
}

Element GroupStructure::inverse(Element a) const
{
    return algebra_.table(inv_index_)[a];
}

GroupStructure opposite_group(const GroupStructure& g)
{
    const FiniteAlgebra& alg = g.algebra();
    const std::size_t mul_index = alg.signature().index_of(g.mul_symbol());
    auto opposite = FiniteAlgebra::tabulate(
        alg.signature(), alg.size(), [&](std::string_view op, std::span<const Element> args) {
            const std::size_t i = alg.signature().index_of(op);
            if (i == mul_index) {
                const Element swapped[2] = {args[1], args[0]};
                return alg.apply(i, swapped);
            }
            return alg.apply(i, args);
        });
    return GroupStructure(std::move(opposite), g.mul_symbol(), g.inv_symbol(), g.unit_symbol());
}

}  // namespace fibra
