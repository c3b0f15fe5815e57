#ifndef NSYMM_HOPF_HPP
#define NSYMM_HOPF_HPP

#include <optional>
#include <string>
#include <utility>

#include "nsymm/freealg.hpp"

namespace nsymm {

/// Which coproduct rule applies to a single generator of index n.
///   nsymm:   mu(Z_n) = sum_{i+j=n} Z_i (x) Z_j, with Z_0 = 1
///   liehopf: mu(U_n) = U_n (x) 1 + 1 (x) U_n
enum class HopfFamily { nsymm, liehopf };

inline const char* to_string(HopfFamily f) { return f == HopfFamily::nsymm ? "NSYMM" : "LIEHOPF"; }

template <class Basis>
Tensor<Basis> generator_coproduct(int n, HopfFamily family)
{
    Tensor<Basis> r;
    if (family == HopfFamily::liehopf) {
        r.add_term({Composition{n}, Composition{}}, 1);
        r.add_term({Composition{}, Composition{n}}, 1);
        return r;
    }
    auto letter = [](int i) { return i == 0 ? Composition{} : Composition{i}; };
    for (int i = 0; i <= n; ++i) r.add_term({letter(i), letter(n - i)}, 1);
    return r;
}

/// Coproduct of a single word, by multiplicative extension over its letters.
template <class Basis>
Tensor<Basis> word_coproduct(const Composition& word, HopfFamily family)
{
    Tensor<Basis> acc = tensor_unit<Basis>();
    for (int n : word.parts()) acc = acc * generator_coproduct<Basis>(n, family);
    return acc;
}

template <class Basis>
Tensor<Basis> coproduct(const Poly<Basis>& p, HopfFamily family, const DegreeBound& bound = {})
{
    bound.check(degree(p), "coproduct");
    Tensor<Basis> r;
    for (const auto& [word, c] : p) r += c * word_coproduct<Basis>(word, family);
    return r;
}

/// Coefficient of the empty word. Same rule for both families.
template <class Basis>
Rational counit(const Poly<Basis>& p)
{
    return p.coefficient(Composition{});
}

/// Outcome of a primitivity test. On failure `witness` is one nonzero term
/// of mu(p) - p (x) 1 - 1 (x) p.
template <class Basis>
struct PrimitivityCheck {
    bool primitive = true;
    std::optional<std::pair<std::array<Composition, 2>, Rational>> witness;

    explicit operator bool() const { return primitive; }
};

template <class Basis>
Tensor<Basis> primitivity_defect(const Poly<Basis>& p, HopfFamily family, const DegreeBound& bound = {})
{
    Tensor<Basis> defect = coproduct(p, family, bound);
    defect -= tensor_product(p, unit<Basis>());
    defect -= tensor_product(unit<Basis>(), p);
    return defect;
}

template <class Basis>
PrimitivityCheck<Basis> check_primitive(const Poly<Basis>& p, HopfFamily family, const DegreeBound& bound = {})
{
    PrimitivityCheck<Basis> r;
    auto defect = primitivity_defect(p, family, bound);
    if (!defect.is_zero()) {
        r.primitive = false;
        r.witness = *defect.begin();
    }
    return r;
}

template <class Basis>
bool is_primitive(const Poly<Basis>& p, HopfFamily family, const DegreeBound& bound = {})
{
    return check_primitive(p, family, bound).primitive;
}

// Hopf-law helpers. Each returns a defect that is zero iff the law holds.

/// (mu (x) id) mu(p) - (id (x) mu) mu(p).
template <class Basis>
Tensor<Basis, 3> coassociativity_defect(const Poly<Basis>& p, HopfFamily family, const DegreeBound& bound = {})
{
    Tensor<Basis, 3> defect;
    for (const auto& [key, c] : coproduct(p, family, bound)) {
        for (const auto& [inner, c2] : word_coproduct<Basis>(key[0], family)) {
            defect.add_term({inner[0], inner[1], key[1]}, c * c2);
        }
        for (const auto& [inner, c2] : word_coproduct<Basis>(key[1], family)) {
            defect.add_term({key[0], inner[0], inner[1]}, -(c * c2));
        }
    }
    return defect;
}

/// (eps (x) id)(t): keeps terms whose left leg is the empty word.
template <class Basis>
Poly<Basis> counit_left(const Tensor<Basis>& t)
{
    Poly<Basis> r;
    for (const auto& [key, c] : t) {
        if (key[0].empty()) r.add_term(key[1], c);
    }
    return r;
}

template <class Basis>
Poly<Basis> counit_right(const Tensor<Basis>& t)
{
    Poly<Basis> r;
    for (const auto& [key, c] : t) {
        if (key[1].empty()) r.add_term(key[0], c);
    }
    return r;
}

/// Pair of defects (eps (x) id)mu(p) - p and (id (x) eps)mu(p) - p.
template <class Basis>
std::pair<Poly<Basis>, Poly<Basis>> counit_defects(const Poly<Basis>& p, HopfFamily family,
                                                   const DegreeBound& bound = {})
{
    auto mu = coproduct(p, family, bound);
    return {counit_left(mu) - p, counit_right(mu) - p};
}

/// mu(pq) - mu(p) mu(q).
template <class Basis>
Tensor<Basis> morphism_defect(const Poly<Basis>& p, const Poly<Basis>& q, HopfFamily family,
                              const DegreeBound& bound = {})
{
    auto pq = p * q;
    bound.check(degree(pq), "coproduct");
    return coproduct(pq, family, bound) - coproduct(p, family, bound) * coproduct(q, family, bound);
}

/// Applies `f` to both legs: sum c * f(a) (x) f(b).
template <class To, class From>
Tensor<To> map_legs(const Tensor<From>& t, const std::function<Poly<To>(const Composition&)>& f)
{
    Tensor<To> r;
    for (const auto& [key, c] : t) r += c * tensor_product(f(key[0]), f(key[1]));
    return r;
}

}  // namespace nsymm

#endif  // NSYMM_HOPF_HPP
