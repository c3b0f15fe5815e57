#ifndef NSYMM_HSOPS_HPP
#define NSYMM_HSOPS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nsymm/algebra.hpp"
#include "nsymm/freealg.hpp"
#include "nsymm/newton.hpp"

namespace nsymm {

/// A sequence (d_1, ..., d_N) of linear maps on one algebra; d_0 = id.
///
/// Construction does not validate: use hs_violation / is_hs. Every producer in
/// this header returns families that satisfy the Hasse-Schmidt law.
struct HSFamily {
    std::shared_ptr<const TestAlgebra> algebra;
    std::vector<LinMap> maps;

    [[nodiscard]] int order() const { return static_cast<int>(maps.size()); }

    /// d_n for 0 <= n <= order().
    [[nodiscard]] LinMap d(int n) const
    {
        if (n == 0) return LinMap::identity(algebra->dim());
        return maps.at(static_cast<std::size_t>(n - 1));
    }

    friend bool operator==(const HSFamily& a, const HSFamily& b)
    {
        return a.algebra == b.algebra && a.maps == b.maps;
    }
};

/// Basis pair (i, j) where a Leibniz-type law fails, with the level n for
/// Hasse-Schmidt checks (n = 1 for plain derivations).
struct LeibnizViolation {
    int n = 1;
    std::size_t i = 0;
    std::size_t j = 0;

    [[nodiscard]] std::string to_string() const
    {
        return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
    }
};

/// First basis pair violating D(e_i e_j) = e_i D(e_j) + D(e_i) e_j, if any.
/// Complete over all defined pairs, so nullopt is a proof at this dimension.
inline std::optional<LeibnizViolation> derivation_violation(const LinMap& d, const TestAlgebra& a)
{
    if (d.dim() != a.dim()) throw std::invalid_argument("is_derivation: dimension mismatch");
    const std::size_t n = a.dim();
    std::vector<Vector> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = d.column(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!a.defined(i, j)) continue;
            Vector lhs = d.apply(a.multiply(a.basis(i), a.basis(j)));
            Vector rhs = a.multiply(a.basis(i), images[j]);
            axpy(rhs, Rational(1), a.multiply(images[i], a.basis(j)));
            if (lhs != rhs) return LeibnizViolation{1, i, j};
        }
    }
    return std::nullopt;
}

inline bool is_derivation(const LinMap& d, const TestAlgebra& a) { return !derivation_violation(d, a); }

/// First (n, i, j) violating d_n(e_i e_j) = sum_k d_k(e_i) d_{n-k}(e_j).
inline std::optional<LeibnizViolation> hs_violation(const HSFamily& f)
{
    const TestAlgebra& a = *f.algebra;
    const std::size_t dim = a.dim();
    for (const auto& m : f.maps) {
        if (m.dim() != dim) throw std::invalid_argument("is_hs: map dimension mismatch");
    }
    // images[k][i] = d_k(e_i)
    std::vector<std::vector<Vector>> images(static_cast<std::size_t>(f.order() + 1));
    for (int k = 0; k <= f.order(); ++k) {
        for (std::size_t i = 0; i < dim; ++i) {
            images[k].push_back(k == 0 ? a.basis(i) : f.maps[k - 1].column(i));
        }
    }
    for (int n = 1; n <= f.order(); ++n) {
        const LinMap& dn = f.maps[n - 1];
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                if (!a.defined(i, j)) continue;
                Vector lhs = dn.apply(a.multiply(images[0][i], images[0][j]));
                Vector rhs(dim);
                for (int k = 0; k <= n; ++k) axpy(rhs, Rational(1), a.multiply(images[k][i], images[n - k][j]));
                if (lhs != rhs) return LeibnizViolation{n, i, j};
            }
        }
    }
    return std::nullopt;
}

inline bool is_hs(const HSFamily& f) { return !hs_violation(f); }

namespace detail {

inline void require_derivations(std::span<const LinMap> maps, const TestAlgebra& a, const char* what)
{
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (auto v = derivation_violation(maps[k], a)) {
            throw std::invalid_argument(std::string(what) + ": map " + std::to_string(k + 1) +
                                        " is not a derivation, fails at " + v->to_string());
        }
    }
}

/// Composition L_{r_1} o ... o L_{r_m}; the rightmost factor is applied first.
inline LinMap compose_word(const Composition& w, std::span<const LinMap> letters, std::size_t dim)
{
    LinMap acc = LinMap::identity(dim);
    for (int r : w.parts()) acc = acc * letters[static_cast<std::size_t>(r - 1)];
    return acc;
}

}  // namespace detail

/// Evaluates a polynomial in some alphabet as an operator, letter k acting as
/// `letters[k-1]`. A word a_1...a_m acts as L_{a_1} o ... o L_{a_m} (module
/// convention: (XY).v = X.(Y.v)).
template <class Basis>
LinMap act(const Poly<Basis>& p, std::span<const LinMap> letters, std::size_t dim)
{
    LinMap r(dim);
    for (const auto& [w, c] : p) {
        for (int k : w.parts()) {
            if (k < 1 || static_cast<std::size_t>(k) > letters.size()) {
                throw std::out_of_range("act: letter index " + std::to_string(k) + " has no operator");
            }
        }
        r += c * detail::compose_word(w, letters, dim);
    }
    return r;
}

/// The Hasse-Schmidt family of divided-power derivatives on polynomials of
/// degree <= trunc: d_n(x^k) = C(k, n) x^(k-n), for n = 1..trunc.
inline HSFamily taylor_hs(int trunc)
{
    auto a = truncated_polynomial_algebra(trunc);
    HSFamily f{a, {}};
    const auto dim = static_cast<std::size_t>(trunc + 1);
    for (int n = 1; n <= trunc; ++n) {
        LinMap d(dim);
        for (int k = n; k <= trunc; ++k) {
            Rational binom = 1;
            for (int t = 0; t < n; ++t) binom = binom * (k - t) / (t + 1);
            d(static_cast<std::size_t>(k - n), static_cast<std::size_t>(k)) = binom;
        }
        f.maps.push_back(std::move(d));
    }
    return f;
}

/// delta_n = n d_n - delta_1 d_{n-1} - ... - delta_{n-1} d_1.
inline std::vector<LinMap> delta_from_d(const HSFamily& f)
{
    std::vector<LinMap> deltas;
    for (int n = 1; n <= f.order(); ++n) {
        LinMap delta = Rational(n) * f.d(n);
        for (int i = 1; i < n; ++i) delta -= deltas[i - 1] * f.d(n - i);
        deltas.push_back(std::move(delta));
    }
    return deltas;
}

/// d_n = sum over compositions r of n of c(r) delta_{r_1} o ... o delta_{r_m},
/// with c(r) the product of reciprocal suffix sums of r.
inline HSFamily d_from_delta(std::span<const LinMap> deltas, std::shared_ptr<const TestAlgebra> algebra)
{
    detail::require_derivations(deltas, *algebra, "d_from_delta");
    HSFamily f{std::move(algebra), {}};
    const std::size_t dim = f.algebra->dim();
    for (int n = 1; n <= static_cast<int>(deltas.size()); ++n) {
        LinMap d(dim);
        for (const auto& w : compositions_of(n)) {
            d += c_coeff(w) * detail::compose_word(w, deltas, dim);
        }
        f.maps.push_back(std::move(d));
    }
    return f;
}

/// partial_n = sum over compositions r of n of (-1)^(m+1)/m d_{r_1} o ... o d_{r_m}.
inline std::vector<LinMap> partial_from_d(const HSFamily& f)
{
    std::vector<LinMap> partials;
    const std::size_t dim = f.algebra->dim();
    for (int n = 1; n <= f.order(); ++n) {
        LinMap p(dim);
        for (const auto& w : compositions_of(n)) {
            auto m = static_cast<int>(w.length());
            p += (Rational(m % 2 == 1 ? 1 : -1) / m) * detail::compose_word(w, f.maps, dim);
        }
        partials.push_back(std::move(p));
    }
    return partials;
}

/// d_n = sum over compositions r of n of partial_{r_1} o ... o partial_{r_m} / m!.
/// Any sequence of derivations yields a Hasse-Schmidt family.
inline HSFamily d_from_partial(std::span<const LinMap> partials, std::shared_ptr<const TestAlgebra> algebra)
{
    detail::require_derivations(partials, *algebra, "d_from_partial");
    HSFamily f{std::move(algebra), {}};
    const std::size_t dim = f.algebra->dim();
    for (int n = 1; n <= static_cast<int>(partials.size()); ++n) {
        LinMap d(dim);
        for (const auto& w : compositions_of(n)) {
            d += (Rational(1) / factorial(static_cast<int>(w.length()))) * detail::compose_word(w, partials, dim);
        }
        f.maps.push_back(std::move(d));
    }
    return f;
}

/// Prescribed values d_n(g) on the generators g in {x, y}, n >= 1.
/// Missing entries are zero.
using GeneratorImages = std::map<std::pair<int, int>, Vector>;  // (generator, n) -> element

/// Extends generator values to a Hasse-Schmidt family of the given order on
/// the truncated free algebra, via d_n(g v) = sum_k d_k(g) d_{n-k}(v).
///
/// Images must lie in the span of nonempty words: the truncation ideal is then
/// stable under every d_n and the family descends to the quotient. An image
/// with a constant term throws DegreeOverflow.
inline HSFamily free_hs_extend(const TruncatedFreeAlgebra& free, const GeneratorImages& images, int order)
{
    if (order < 1) throw std::invalid_argument("free_hs_extend: order must be >= 1");
    const std::size_t dim = free.dim();
    for (const auto& [key, v] : images) {
        auto [g, n] = key;
        if (g != TruncatedFreeAlgebra::x && g != TruncatedFreeAlgebra::y) {
            throw std::invalid_argument("free_hs_extend: unknown generator");
        }
        if (n < 1 || n > order) throw std::invalid_argument("free_hs_extend: level out of range");
        if (v.size() != dim) throw std::invalid_argument("free_hs_extend: image has wrong length");
        if (!v[0].is_zero()) {
            throw DegreeOverflow("free_hs_extend: truncation overflow, image of " +
                                        TruncatedFreeAlgebra::label({g}) + " at level " + std::to_string(n) +
                                        " has a constant term");
        }
    }
    auto gen_image = [&](int g, int n) -> Vector {
        if (n == 0) return free.generator(g);
        auto it = images.find({g, n});
        return it == images.end() ? zero_vector(dim) : it->second;
    };

    const TestAlgebra& a = *free.algebra();
    // values[n][k] = d_n(word_k); words are ordered by length, so suffixes come first.
    std::vector<std::vector<Vector>> values(static_cast<std::size_t>(order + 1), std::vector<Vector>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        const auto& word = free.words()[k];
        if (word.empty()) {
            values[0][k] = free.element(word);
            for (int n = 1; n <= order; ++n) values[n][k] = zero_vector(dim);
            continue;
        }
        const std::size_t tail = free.index(TruncatedFreeAlgebra::Word(word.begin() + 1, word.end()));
        for (int n = 0; n <= order; ++n) {
            Vector v = zero_vector(dim);
            for (int i = 0; i <= n; ++i) axpy(v, Rational(1), a.multiply(gen_image(word.front(), i), values[n - i][tail]));
            values[n][k] = std::move(v);
        }
    }
    HSFamily f{free.algebra(), {}};
    for (int n = 1; n <= order; ++n) f.maps.push_back(LinMap::from_columns(values[n]));
    return f;
}

}  // namespace nsymm

#endif  // NSYMM_HSOPS_HPP
