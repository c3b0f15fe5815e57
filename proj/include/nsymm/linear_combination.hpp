#ifndef NSYMM_LINEAR_COMBINATION_HPP
#define NSYMM_LINEAR_COMBINATION_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <map>
#include <utility>

#include "nsymm/composition.hpp"
#include "nsymm/rational.hpp"

namespace nsymm {

/// Finite rational linear combination of basis keys.
///
/// Canonical form: no stored coefficient is zero, keys iterate in term order.
/// `Basis` is a tag naming the alphabet (Z, P', U, M) so that elements of
/// different bases do not mix by accident.
template <class Key, class Basis>
class LinearCombination {
public:
    using key_type = Key;
    using basis_type = Basis;
    using container_type = std::map<Key, Rational>;

    LinearCombination() = default;

    /// Drops zero coefficients of an arbitrary term map.
    static LinearCombination from_terms(container_type terms)
    {
        LinearCombination r;
        for (auto it = terms.begin(); it != terms.end();) {
            it = it->second.is_zero() ? terms.erase(it) : std::next(it);
        }
        r.terms_ = std::move(terms);
        return r;
    }

    static LinearCombination term(Key key, Rational coeff = 1)
    {
        LinearCombination r;
        r.add_term(std::move(key), coeff);
        return r;
    }

    void add_term(const Key& key, const Rational& coeff)
    {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] Rational coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational{} : it->second;
    }

    [[nodiscard]] const container_type& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] auto begin() const { return terms_.begin(); }
    [[nodiscard]] auto end() const { return terms_.end(); }

    /// True iff every coefficient has denominator 1.
    [[nodiscard]] bool is_integral() const
    {
        for (const auto& [k, c] : terms_) {
            if (!c.is_integer()) return false;
        }
        return true;
    }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Rational& r)
    {
        if (r.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= r;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(const Rational& r, LinearCombination a) { return a *= r; }
    friend LinearCombination operator*(LinearCombination a, const Rational& r) { return a *= r; }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    container_type terms_;
};

/// Basis tags. `tag` prefixes each letter when rendering words; `name` is the
/// basis field in serialized form.
struct ZBasis {
    static constexpr const char* tag = "Z";
    static constexpr const char* name = "Z";
};
struct PrimeBasis {
    static constexpr const char* tag = "P'";
    static constexpr const char* name = "Pprime";
};
struct UBasis {
    static constexpr const char* tag = "U";
    static constexpr const char* name = "U";
};
struct MBasis {
    static constexpr const char* tag = "M";
    static constexpr const char* name = "M";
};

/// Noncommutative polynomial: keys are words in the basis' letters.
template <class Basis>
using Poly = LinearCombination<Composition, Basis>;

/// Element of the K-fold tensor power; keys are K-tuples of words.
template <class Basis, std::size_t K = 2>
using Tensor = LinearCombination<std::array<Composition, K>, Basis>;

using NCPoly = Poly<ZBasis>;       ///< NSymm, Z-alphabet
using PBasisPoly = Poly<PrimeBasis>;  ///< words in the right Newton primitives P'_n
using UPoly = Poly<UBasis>;        ///< LieHopf, U-alphabet
using QSPoly = Poly<MBasis>;       ///< QSymm, monomial basis M_c
using Tensor2 = Tensor<ZBasis, 2>;

/// Highest weight among stored words; 0 for constants and zero.
template <class Basis>
int degree(const Poly<Basis>& p)
{
    return p.is_zero() ? 0 : std::prev(p.end())->first.weight();
}

/// Highest total weight among stored tuples.
template <class Basis, std::size_t K>
int degree(const Tensor<Basis, K>& t)
{
    int d = 0;
    for (const auto& [key, c] : t) {
        int w = 0;
        for (const auto& part : key) w += part.weight();
        d = std::max(d, w);
    }
    return d;
}

}  // namespace nsymm

#endif  // NSYMM_LINEAR_COMBINATION_HPP
