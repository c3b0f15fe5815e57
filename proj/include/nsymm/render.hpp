#ifndef NSYMM_RENDER_HPP
#define NSYMM_RENDER_HPP

#include <cstring>
#include <string>

#include "nsymm/linear_combination.hpp"

namespace nsymm {

// Text rendering. Letters print as Z1, P'1, U1; monomial quasi-symmetric
// basis elements as M(1,2); the empty word as 1. Terms follow term order.

template <class Basis>
std::string render_word(const Composition& w)
{
    if (w.empty()) return "1";
    if (std::strcmp(Basis::tag, "M") == 0) return std::string("M") + w.to_string();
    std::string s;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) s += "·";
        s += Basis::tag + std::to_string(w[i]);
    }
    return s;
}

namespace detail {

/// "body" scaled by a nonnegative coefficient.
inline std::string scaled(const Rational& magnitude, const std::string& body, bool body_is_unit)
{
    if (body_is_unit) return magnitude.to_string();
    if (magnitude == Rational(1)) return body;
    std::string c = magnitude.is_integer() ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
    return c + "·" + body;
}

template <class Range, class Body>
std::string join_terms(const Range& terms, Body&& body)
{
    if (terms.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (first) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        auto [text, is_unit] = body(key);
        s += scaled(c.abs(), text, is_unit);
        first = false;
    }
    return s;
}

}  // namespace detail

template <class Basis>
std::string to_text(const Poly<Basis>& p)
{
    return detail::join_terms(p, [](const Composition& w) {
        return std::pair<std::string, bool>{render_word<Basis>(w), w.empty()};
    });
}

template <class Basis, std::size_t K>
std::string to_text(const Tensor<Basis, K>& t)
{
    return detail::join_terms(t, [](const std::array<Composition, K>& key) {
        std::string s;
        for (std::size_t i = 0; i < K; ++i) {
            if (i) s += " ⊗ ";
            s += render_word<Basis>(key[i]);
        }
        return std::pair<std::string, bool>{K == 1 ? s : "(" + s + ")", false};
    });
}

/// Renders a single term; used for verification witnesses.
template <class Basis, std::size_t K>
std::string term_text(const std::array<Composition, K>& key, const Rational& c)
{
    return to_text(Tensor<Basis, K>::term(key, c));
}

template <class Basis>
std::string term_text(const Composition& w, const Rational& c)
{
    return to_text(Poly<Basis>::term(w, c));
}

}  // namespace nsymm

#endif  // NSYMM_RENDER_HPP
