#ifndef NSYMM_ALGEBRA_HPP
#define NSYMM_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nsymm/freealg.hpp"
#include "nsymm/rational.hpp"

namespace nsymm {

using Vector = std::vector<Rational>;

inline Vector zero_vector(std::size_t dim) { return Vector(dim); }

inline Vector basis_vector(std::size_t dim, std::size_t i)
{
    Vector v(dim);
    v.at(i) = 1;
    return v;
}

inline Vector& axpy(Vector& y, const Rational& a, const Vector& x)
{
    if (a.is_zero()) return y;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!x[i].is_zero()) y[i] += a * x[i];
    }
    return y;
}

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

/// Square rational matrix acting on coordinate vectors.
/// Column j is the image of basis element e_j.
class LinMap {
public:
    LinMap() = default;
    explicit LinMap(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static LinMap identity(std::size_t dim)
    {
        LinMap m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds the map from the images of the basis elements.
    static LinMap from_columns(const std::vector<Vector>& columns)
    {
        LinMap m(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != m.dim_) throw std::invalid_argument("LinMap: column has wrong length");
            for (std::size_t i = 0; i < m.dim_; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }

    Rational& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    [[nodiscard]] Vector column(std::size_t j) const
    {
        Vector v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    [[nodiscard]] Vector apply(const Vector& v) const
    {
        if (v.size() != dim_) throw std::invalid_argument("LinMap::apply: dimension mismatch");
        Vector r(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i) {
                const auto& a = (*this)(i, j);
                if (!a.is_zero()) r[i] += a * v[j];
            }
        }
        return r;
    }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& x : data_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    LinMap& operator+=(const LinMap& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    LinMap& operator-=(const LinMap& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    LinMap& operator*=(const Rational& r)
    {
        for (auto& x : data_) x *= r;
        return *this;
    }

    friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
    friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
    friend LinMap operator*(const Rational& r, LinMap a) { return a *= r; }

    /// Composition: (a * b)(v) = a(b(v)).
    friend LinMap operator*(const LinMap& a, const LinMap& b)
    {
        a.check_same(b);
        LinMap r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) {
            for (std::size_t k = 0; k < a.dim_; ++k) {
                const auto& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < a.dim_; ++j) {
                    const auto& y = b(k, j);
                    if (!y.is_zero()) r(i, j) += x * y;
                }
            }
        }
        return r;
    }

    friend bool operator==(const LinMap&, const LinMap&) = default;

private:
    void check_same(const LinMap& o) const
    {
        if (o.dim_ != dim_) throw std::invalid_argument("LinMap: dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<Rational> data_;
};

/// Degree of each basis element and a cap. Products of total degree above the
/// cap are undefined: the space is the low-degree part of a graded algebra,
/// not a quotient by the high-degree part.
struct Grading {
    std::vector<int> degrees;
    int max_degree = 0;

    friend bool operator==(const Grading&, const Grading&) = default;
};

/// Finite-dimensional associative unital algebra over Q, given by structure
/// constants on a basis e_0..e_{dim-1}.
///
/// Associativity on all basis triples and the unit law on all basis elements
/// are checked at construction; a failing table throws std::invalid_argument.
/// With a grading, only triples inside the cap are checked, and multiplying a
/// pair past the cap throws DegreeOverflow.
class TestAlgebra {
public:
    using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
    /// (i, j) -> coordinates of e_i e_j; missing pairs multiply to zero.
    using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, Vector>;

    TestAlgebra(std::vector<std::string> labels, Vector unit, const StructureConstants& products,
                std::optional<Grading> grading = std::nullopt)
        : labels_(std::move(labels)), unit_(std::move(unit)), grading_(std::move(grading)),
          table_(labels_.size() * labels_.size())
    {
        const std::size_t n = dim();
        if (n == 0) throw std::invalid_argument("TestAlgebra: dimension must be positive");
        if (unit_.size() != n) throw std::invalid_argument("TestAlgebra: unit has wrong length");
        if (grading_) {
            if (grading_->degrees.size() != n) throw std::invalid_argument("TestAlgebra: grading has wrong length");
            for (int d : grading_->degrees) {
                if (d < 0 || d > grading_->max_degree) {
                    throw std::invalid_argument("TestAlgebra: basis degree outside 0..max_degree");
                }
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (!unit_[k].is_zero() && grading_->degrees[k] != 0) {
                    throw std::invalid_argument("TestAlgebra: unit must have degree 0");
                }
            }
        }
        for (const auto& [ij, coords] : products) {
            auto [i, j] = ij;
            if (i >= n || j >= n) throw std::invalid_argument("TestAlgebra: structure constant index out of range");
            if (coords.size() != n) throw std::invalid_argument("TestAlgebra: structure constant has wrong length");
            if (grading_) {
                if (!defined(i, j)) throw std::invalid_argument("TestAlgebra: structure constant past the degree cap");
                for (std::size_t k = 0; k < n; ++k) {
                    if (!coords[k].is_zero() && grading_->degrees[k] != grading_->degrees[i] + grading_->degrees[j]) {
                        throw std::invalid_argument("TestAlgebra: structure constant is not homogeneous");
                    }
                }
            }
            auto& entry = table_[i * n + j];
            entry.clear();
            for (std::size_t k = 0; k < n; ++k) {
                if (!coords[k].is_zero()) entry.emplace_back(k, coords[k]);
            }
        }
        validate();
    }

    [[nodiscard]] std::size_t dim() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const Vector& unit() const { return unit_; }
    [[nodiscard]] const std::optional<Grading>& grading() const { return grading_; }

    /// Whether e_i e_j is defined, i.e. within the degree cap.
    [[nodiscard]] bool defined(std::size_t i, std::size_t j) const
    {
        return !grading_ || grading_->degrees[i] + grading_->degrees[j] <= grading_->max_degree;
    }
    [[nodiscard]] const SparseVector& product_of_basis(std::size_t i, std::size_t j) const
    {
        return table_[i * dim() + j];
    }

    [[nodiscard]] Vector basis(std::size_t i) const { return basis_vector(dim(), i); }

    [[nodiscard]] Vector multiply(const Vector& u, const Vector& v) const
    {
        const std::size_t n = dim();
        if (u.size() != n || v.size() != n) throw std::invalid_argument("TestAlgebra::multiply: dimension mismatch");
        Vector r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                if (!defined(i, j)) {
                    throw DegreeOverflow("TestAlgebra::multiply: " + labels_[i] + " * " + labels_[j] +
                                         " exceeds the degree cap");
                }
                Rational c = u[i] * v[j];
                for (const auto& [k, x] : table_[i * n + j]) r[k] += c * x;
            }
        }
        return r;
    }

private:
    void validate() const
    {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i) {
            Vector e = basis(i);
            if (multiply(unit_, e) != e || multiply(e, unit_) != e) {
                throw std::invalid_argument("TestAlgebra: unit law fails on basis element " + labels_[i]);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!defined(i, j)) continue;
                Vector ij = multiply(basis(i), basis(j));
                for (std::size_t k = 0; k < n; ++k) {
                    if (grading_ && grading_->degrees[i] + grading_->degrees[j] + grading_->degrees[k] >
                                        grading_->max_degree) {
                        continue;
                    }
                    if (multiply(ij, basis(k)) != multiply(basis(i), multiply(basis(j), basis(k)))) {
                        throw std::invalid_argument("TestAlgebra: associativity fails on (" + labels_[i] + ", " +
                                                    labels_[j] + ", " + labels_[k] + ")");
                    }
                }
            }
        }
    }

    std::vector<std::string> labels_;
    Vector unit_;
    std::optional<Grading> grading_;
    std::vector<SparseVector> table_;
};

// Catalog of shipped test algebras.

/// Polynomials of degree <= trunc in Q[x], basis 1, x, ..., x^trunc, with
/// products past x^trunc undefined. Unlike Q[x]/(x^(trunc+1)), this space is
/// stable under d/dx together with its Leibniz rule.
inline std::shared_ptr<const TestAlgebra> truncated_polynomial_algebra(int trunc)
{
    if (trunc < 1) throw std::invalid_argument("truncated_polynomial_algebra: trunc must be >= 1");
    const auto n = static_cast<std::size_t>(trunc + 1);
    std::vector<std::string> labels;
    Grading grading{{}, trunc};
    for (std::size_t k = 0; k < n; ++k) grading.degrees.push_back(static_cast<int>(k));
    for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
    TestAlgebra::StructureConstants products;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) products[{i, j}] = basis_vector(n, i + j);
    }
    return std::make_shared<const TestAlgebra>(std::move(labels), basis_vector(n, 0), products, std::move(grading));
}

/// Upper-triangular size x size rational matrices, basis E_ij (i <= j) in
/// row-major order.
inline std::shared_ptr<const TestAlgebra> upper_triangular_algebra(int size)
{
    if (size < 1) throw std::invalid_argument("upper_triangular_algebra: size must be >= 1");
    std::vector<std::pair<int, int>> units;
    for (int i = 0; i < size; ++i) {
        for (int j = i; j < size; ++j) units.emplace_back(i, j);
    }
    const std::size_t n = units.size();
    auto index = [&units](int i, int j) {
        for (std::size_t k = 0; k < units.size(); ++k) {
            if (units[k] == std::pair{i, j}) return k;
        }
        throw std::logic_error("not an upper-triangular index");
    };
    std::vector<std::string> labels;
    Vector unit(n);
    TestAlgebra::StructureConstants products;
    for (std::size_t a = 0; a < n; ++a) {
        auto [i, j] = units[a];
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        if (i == j) unit[a] = 1;
        for (std::size_t b = 0; b < n; ++b) {
            auto [k, l] = units[b];
            if (j == k) products[{a, b}] = basis_vector(n, index(i, l));
        }
    }
    return std::make_shared<const TestAlgebra>(std::move(labels), std::move(unit), products);
}

/// Free algebra on two generators x, y modulo words of length > trunc.
/// Basis: words of length <= trunc, ordered by length then lexicographically.
class TruncatedFreeAlgebra {
public:
    using Word = std::vector<int>;  // letters: 0 = x, 1 = y
    static constexpr int x = 0;
    static constexpr int y = 1;

    explicit TruncatedFreeAlgebra(int trunc) : trunc_(trunc)
    {
        if (trunc < 1) throw std::invalid_argument("TruncatedFreeAlgebra: trunc must be >= 1");
        words_.push_back({});
        for (std::size_t start = 0; start < words_.size(); ++start) {
            if (static_cast<int>(words_[start].size()) == trunc) continue;
            for (int letter : {x, y}) {
                Word w = words_[start];
                w.push_back(letter);
                words_.push_back(std::move(w));
            }
        }
        for (std::size_t k = 0; k < words_.size(); ++k) index_[words_[k]] = k;

        const std::size_t n = words_.size();
        std::vector<std::string> labels;
        for (const auto& w : words_) labels.push_back(label(w));
        TestAlgebra::StructureConstants products;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (words_[a].size() + words_[b].size() > static_cast<std::size_t>(trunc)) continue;
                Word w = words_[a];
                w.insert(w.end(), words_[b].begin(), words_[b].end());
                products[{a, b}] = basis_vector(n, index_.at(w));
            }
        }
        algebra_ = std::make_shared<const TestAlgebra>(std::move(labels), basis_vector(n, 0), products);
    }

    [[nodiscard]] int trunc() const { return trunc_; }
    [[nodiscard]] std::size_t dim() const { return words_.size(); }
    [[nodiscard]] const std::shared_ptr<const TestAlgebra>& algebra() const { return algebra_; }
    [[nodiscard]] const std::vector<Word>& words() const { return words_; }
    [[nodiscard]] std::size_t index(const Word& w) const { return index_.at(w); }
    [[nodiscard]] Vector element(const Word& w) const { return basis_vector(dim(), index(w)); }
    [[nodiscard]] Vector generator(int letter) const { return element(Word{letter}); }

    static std::string label(const Word& w)
    {
        if (w.empty()) return "1";
        std::string s;
        for (int l : w) s += l == x ? 'x' : 'y';
        return s;
    }

private:
    int trunc_;
    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
    std::shared_ptr<const TestAlgebra> algebra_;
};

/// X -> mX - Xm.
inline LinMap inner_derivation(const TestAlgebra& a, const Vector& m)
{
    std::vector<Vector> columns;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vector e = a.basis(j);
        Vector col = a.multiply(m, e);
        axpy(col, Rational(-1), a.multiply(e, m));
        columns.push_back(std::move(col));
    }
    return LinMap::from_columns(columns);
}

/// d/dx on polynomials of degree <= trunc.
inline LinMap differentiation(int trunc)
{
    LinMap d(static_cast<std::size_t>(trunc + 1));
    for (int k = 1; k <= trunc; ++k) d(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k)) = k;
    return d;
}

}  // namespace nsymm

#endif  // NSYMM_ALGEBRA_HPP
