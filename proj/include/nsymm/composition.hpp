#ifndef NSYMM_COMPOSITION_HPP
#define NSYMM_COMPOSITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsymm {

/// A finite word of positive integers.
///
/// Read as a monomial index (Z_{i1}...Z_{im}), a summation index of a
/// composition of n, or a monomial quasi-symmetric basis label. The empty
/// composition is the unit word.
///
/// Ordering: by weight, then by length, then lexicographically on parts.
/// This is the term order used for iteration and serialization everywhere.
class Composition {
public:
    Composition() = default;

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
            weight_ += p;
        }
    }

    [[nodiscard]] std::span<const int> parts() const { return parts_; }
    [[nodiscard]] const std::vector<int>& vector() const { return parts_; }
    [[nodiscard]] int weight() const { return weight_; }
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
    [[nodiscard]] int front() const { return parts_.front(); }
    [[nodiscard]] int back() const { return parts_.back(); }

    /// Word concatenation.
    [[nodiscard]] Composition concat(const Composition& other) const
    {
        Composition r;
        r.parts_.reserve(parts_.size() + other.parts_.size());
        r.parts_.insert(r.parts_.end(), parts_.begin(), parts_.end());
        r.parts_.insert(r.parts_.end(), other.parts_.begin(), other.parts_.end());
        r.weight_ = weight_ + other.weight_;
        return r;
    }

    [[nodiscard]] Composition reversed() const
    {
        Composition r = *this;
        std::reverse(r.parts_.begin(), r.parts_.end());
        return r;
    }

    /// Parts [first, first + count).
    [[nodiscard]] Composition slice(std::size_t first, std::size_t count) const
    {
        return Composition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(first),
                                            parts_.begin() + static_cast<std::ptrdiff_t>(first + count)));
    }

    [[nodiscard]] Composition prefix(std::size_t count) const { return slice(0, count); }
    [[nodiscard]] Composition suffix_from(std::size_t first) const { return slice(first, length() - first); }

    /// "(1,2,1)"; the empty composition is "()".
    [[nodiscard]] std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b)
    {
        if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
        if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                      b.parts_.end());
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

namespace detail {

inline void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        compositions_rec(remaining - part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All compositions of n, each exactly once, in term order.
/// There are 2^(n-1) of them for n >= 1 and one (the empty word) for n = 0.
inline std::vector<Composition> compositions_of(int n)
{
    if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
    std::vector<Composition> out;
    out.reserve(n == 0 ? 1 : std::size_t{1} << (n - 1));
    std::vector<int> prefix;
    detail::compositions_rec(n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Compositions of every weight 0..max_weight, in term order.
inline std::vector<Composition> compositions_up_to(int max_weight)
{
    std::vector<Composition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto level = compositions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace nsymm

#endif  // NSYMM_COMPOSITION_HPP
