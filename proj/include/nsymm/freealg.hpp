#ifndef NSYMM_FREEALG_HPP
#define NSYMM_FREEALG_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "nsymm/linear_combination.hpp"

namespace nsymm {

/// Thrown when a result would exceed the configured maximum degree.
class DegreeOverflow : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Global truncation degree. Operations reject inputs above it instead of
/// silently dropping high-degree terms.
class DegreeBound {
public:
    static constexpr int default_max_degree = 8;

    constexpr DegreeBound() = default;
    explicit DegreeBound(int max_degree) : max_(max_degree)
    {
        if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
    }

    [[nodiscard]] constexpr int max_degree() const { return max_; }

    void check(int degree, const char* what) const
    {
        if (degree > max_) {
            throw DegreeOverflow(std::string(what) + ": degree " + std::to_string(degree) +
                                 " exceeds maximum " + std::to_string(max_));
        }
    }

    /// Index n of a generator-level operation must satisfy 1 <= n <= max.
    void check_index(int n, const char* what) const
    {
        if (n < 1) throw std::invalid_argument(std::string(what) + ": index must be >= 1");
        check(n, what);
    }

private:
    int max_ = default_max_degree;
};

template <class Basis>
Poly<Basis> unit()
{
    return Poly<Basis>::term(Composition{});
}

template <class Basis>
Poly<Basis> scalar(const Rational& r)
{
    return Poly<Basis>::term(Composition{}, r);
}

/// The single-letter word of index n.
template <class Basis>
Poly<Basis> generator(int n)
{
    return Poly<Basis>::term(Composition{n});
}

/// Concatenation product, extended bilinearly. Associative, not commutative.
template <class Basis>
Poly<Basis> operator*(const Poly<Basis>& p, const Poly<Basis>& q)
{
    Poly<Basis> r;
    for (const auto& [v, a] : p) {
        for (const auto& [w, b] : q) r.add_term(v.concat(w), a * b);
    }
    return r;
}

/// Componentwise product (a1 x ... x aK)(b1 x ... x bK) = a1b1 x ... x aKbK.
template <class Basis, std::size_t K>
Tensor<Basis, K> operator*(const Tensor<Basis, K>& s, const Tensor<Basis, K>& t)
{
    Tensor<Basis, K> r;
    for (const auto& [v, a] : s) {
        for (const auto& [w, b] : t) {
            std::array<Composition, K> key;
            for (std::size_t i = 0; i < K; ++i) key[i] = v[i].concat(w[i]);
            r.add_term(key, a * b);
        }
    }
    return r;
}

template <class Basis, std::size_t K = 2>
Tensor<Basis, K> tensor_unit()
{
    return Tensor<Basis, K>::term(std::array<Composition, K>{});
}

/// p (x) q.
template <class Basis>
Tensor<Basis, 2> tensor_product(const Poly<Basis>& p, const Poly<Basis>& q)
{
    Tensor<Basis, 2> r;
    for (const auto& [v, a] : p) {
        for (const auto& [w, b] : q) r.add_term({v, w}, a * b);
    }
    return r;
}

template <class Basis>
Tensor<Basis, 2> tensor_term(Composition left, Composition right, const Rational& c = 1)
{
    return Tensor<Basis, 2>::term({std::move(left), std::move(right)}, c);
}

/// Algebra morphism determined by letter images: each letter n of a word is
/// replaced by `image(n)` and the results are multiplied left to right.
template <class To, class From>
Poly<To> substitute(const Poly<From>& p, const std::function<Poly<To>(int)>& image)
{
    std::map<int, Poly<To>> cache;
    auto letter = [&](int n) -> const Poly<To>& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, image(n)).first;
        return it->second;
    };
    Poly<To> r;
    for (const auto& [word, c] : p) {
        Poly<To> acc = scalar<To>(c);
        for (int n : word.parts()) acc = acc * letter(n);
        r += acc;
    }
    return r;
}

/// Same polynomial read in another alphabet (words unchanged).
template <class To, class From>
Poly<To> rebase(const Poly<From>& p)
{
    Poly<To> r;
    for (const auto& [w, c] : p) r.add_term(w, c);
    return r;
}

/// Reverses every word (the anti-automorphism of the free algebra).
template <class Basis>
Poly<Basis> reverse_words(const Poly<Basis>& p)
{
    Poly<Basis> r;
    for (const auto& [w, c] : p) r.add_term(w.reversed(), c);
    return r;
}

}  // namespace nsymm

#endif  // NSYMM_FREEALG_HPP
