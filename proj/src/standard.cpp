#include "fibra/standard.hpp"

#include <algorithm>
#include <map>

namespace fibra::standard {

namespace {

std::vector<Permutation> all_permutations(std::size_t k)
{
    std::vector<Permutation> out;
    Permutation p = identity_permutation(k);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

Signature additive_signature()
{
    return Signature({{"+", 2}, {"-", 1}, {"0", 0}});
}

Signature multiplicative_signature()
{
    return Signature({{"*", 2}, {"inv", 1}, {"e", 0}});
}

FiniteAlgebra cyclic(std::size_t n)
{
    return FiniteAlgebra::tabulate(additive_signature(), n, [n](std::string_view op, std::span<const Element> a) {
        if (op == "+") {
            return static_cast<Element>((a[0] + a[1]) % n);
        }
        if (op == "-") {
            return static_cast<Element>((n - a[0]) % n);
        }
        return Element{0};
    });
}

GroupStructure cyclic_group(std::size_t n)
{
    return GroupStructure(cyclic(n), "+", "-", "0");
}

FiniteAlgebra klein_four()
{
    const FiniteAlgebra factors[] = {cyclic(2), cyclic(2)};
    return product_algebra(factors);
}

GroupStructure klein_four_group()
{
    return GroupStructure(klein_four(), "+", "-", "0");
}

FiniteAlgebra symmetric(std::size_t k)
{
    const auto perms = all_permutations(k);
    std::map<Permutation, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        index.emplace(perms[i], static_cast<Element>(i));
    }
    return FiniteAlgebra::tabulate(multiplicative_signature(), perms.size(),
                                   [&](std::string_view op, std::span<const Element> a) {
                                       if (op == "*") {
                                           return index.at(compose(perms[a[0]], perms[a[1]]));
                                       }
                                       if (op == "inv") {
                                           return index.at(inverse(perms[a[0]]));
                                       }
                                       return Element{0};
                                   });
}

GroupStructure symmetric_group(std::size_t k)
{
    return GroupStructure(symmetric(k), "*", "inv", "e");
}

Permutation symmetric_element(std::size_t k, Element element)
{
    return all_permutations(k).at(element);
}

FiniteAlgebra plain_set(std::size_t n)
{
    return FiniteAlgebra::tabulate(Signature{}, n, [](std::string_view, std::span<const Element>) { return Element{0}; });
}

}  // namespace fibra::standard
