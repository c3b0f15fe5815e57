#ifndef NSYMM_QSYMM_HPP
#define NSYMM_QSYMM_HPP

#include <map>
#include <set>
#include <utility>

#include "nsymm/hopf.hpp"
#include "nsymm/render.hpp"
#include "nsymm/report.hpp"

namespace nsymm {

// Quasi-symmetric functions as the graded dual of NSymm, in the monomial
// basis M_c. The pairing makes M_c dual to the Z-word c.

/// <q, p> with <M_a, Z-word w> = [a == w].
inline Rational pairing(const QSPoly& q, const NCPoly& p)
{
    Rational r;
    const auto& small = q.size() <= p.size() ? q.terms() : p.terms();
    const auto& large = q.size() <= p.size() ? p.terms() : q.terms();
    for (const auto& [w, c] : small) {
        if (auto it = large.find(w); it != large.end()) r += c * it->second;
    }
    return r;
}

/// <M_a (x) M_b, t> for a Z-tensor t.
inline Rational pairing(const Tensor<MBasis>& s, const Tensor2& t)
{
    Rational r;
    for (const auto& [key, c] : s) r += c * t.coefficient(key);
    return r;
}

namespace detail {

using QuasiShuffleMemo = std::map<std::pair<Composition, Composition>, QSPoly>;

/// Overlapping shuffle on the first letters:
///   (a1 a') * (b1 b') = a1 (a' * b) + b1 (a * b') + (a1 + b1)(a' * b').
inline const QSPoly& quasi_shuffle_words(const Composition& a, const Composition& b, QuasiShuffleMemo& memo)
{
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QSPoly r;
    if (a.empty()) {
        r = QSPoly::term(b);
    } else if (b.empty()) {
        r = QSPoly::term(a);
    } else {
        auto prepend = [&r](int letter, const QSPoly& tail) {
            for (const auto& [w, c] : tail) r.add_term(Composition{letter}.concat(w), c);
        };
        Composition a_tail = a.suffix_from(1);
        Composition b_tail = b.suffix_from(1);
        prepend(a.front(), quasi_shuffle_words(a_tail, b, memo));
        prepend(b.front(), quasi_shuffle_words(a, b_tail, memo));
        prepend(a.front() + b.front(), quasi_shuffle_words(a_tail, b_tail, memo));
    }
    return memo.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace detail

/// Quasi-shuffle product (combinatorial recursion). Unit is M_().
inline QSPoly quasi_shuffle(const QSPoly& a, const QSPoly& b, const DegreeBound& bound = {})
{
    bound.check(degree(a) + degree(b), "quasi_shuffle");
    detail::QuasiShuffleMemo memo;
    QSPoly r;
    for (const auto& [u, x] : a) {
        for (const auto& [v, y] : b) r += (x * y) * detail::quasi_shuffle_words(u, v, memo);
    }
    return r;
}

/// Quasi-shuffle defined purely by duality:
///   <a.b, w> = <a (x) b, mu_NSymm(w)> for every Z-word w.
/// Independent of the combinatorial recursion; used as its oracle.
inline QSPoly quasi_shuffle_by_duality(const QSPoly& a, const QSPoly& b, const DegreeBound& bound = {})
{
    bound.check(degree(a) + degree(b), "quasi_shuffle_by_duality");
    auto ab = tensor_product(a, b);
    std::set<int> weights;
    for (const auto& [key, c] : ab) weights.insert(key[0].weight() + key[1].weight());
    QSPoly r;
    for (int n : weights) {
        for (const auto& w : compositions_of(n)) {
            r.add_term(w, pairing(ab, word_coproduct<ZBasis>(w, HopfFamily::nsymm)));
        }
    }
    return r;
}

/// Deconcatenation: M_(c1..ck) -> sum_i M_(c1..ci) (x) M_(c(i+1)..ck).
inline Tensor<MBasis> deconcat(const QSPoly& q)
{
    Tensor<MBasis> r;
    for (const auto& [w, c] : q) {
        for (std::size_t i = 0; i <= w.length(); ++i) r.add_term({w.prefix(i), w.suffix_from(i)}, c);
    }
    return r;
}

/// alpha_n(q) = <q, Z_n>: the coefficient of M_(n).
inline Rational alpha(int n, const QSPoly& q)
{
    if (n < 1) throw std::invalid_argument("alpha: index must be >= 1");
    return q.coefficient(Composition{n});
}

/// alpha_0 is the counit.
inline Rational alpha_or_counit(int n, const QSPoly& q)
{
    return n == 0 ? q.coefficient(Composition{}) : alpha(n, q);
}

/// d_n = (id (x) alpha_n) o deconcat: drops a final part equal to n, kills
/// everything else. d_0 = id.
inline QSPoly d_qsymm(int n, const QSPoly& q)
{
    if (n < 0) throw std::invalid_argument("d_qsymm: index must be >= 0");
    if (n == 0) return q;
    QSPoly r;
    for (const auto& [w, c] : q) {
        if (!w.empty() && w.back() == n) r.add_term(w.prefix(w.length() - 1), c);
    }
    return r;
}

/// The same endomorphism computed literally as (id (x) alpha_n) o deconcat.
inline QSPoly d_qsymm_composed(int n, const QSPoly& q)
{
    QSPoly r;
    for (const auto& [key, c] : deconcat(q)) {
        Rational a = alpha_or_counit(n, QSPoly::term(key[1]));
        r.add_term(key[0], c * a);
    }
    return r;
}

/// Exhaustive check of d_n(ab) = sum_k d_k(a) d_{n-k}(b) over all monomial
/// pairs (M_a, M_b) with |a| + |b| <= max_degree and 1 <= n <= |a| + |b|.
/// For larger n both sides vanish by weight.
inline VerificationReport verify_hs_qsymm(int max_degree, const DegreeBound& bound = DegreeBound{})
{
    bound.check_index(max_degree, "verify_hs_qsymm");
    VerificationReport report;
    report.suite = "qsymm-hs";
    detail::QuasiShuffleMemo memo;
    auto product = [&memo](const QSPoly& a, const QSPoly& b) {
        QSPoly r;
        for (const auto& [u, x] : a) {
            for (const auto& [v, y] : b) r += (x * y) * detail::quasi_shuffle_words(u, v, memo);
        }
        return r;
    };
    for (int total = 0; total <= max_degree; ++total) {
        Stopwatch clock;
        bool ok = true;
        std::optional<std::string> witness;
        for (int wa = 0; wa <= total; ++wa) {
            for (const auto& a : compositions_of(wa)) {
                for (const auto& b : compositions_of(total - wa)) {
                    ++report.pairs_checked;
                    auto ma = QSPoly::term(a);
                    auto mb = QSPoly::term(b);
                    auto ab = product(ma, mb);
                    for (int n = 1; n <= total; ++n) {
                        QSPoly rhs;
                        for (int k = 0; k <= n; ++k) rhs += product(d_qsymm(k, ma), d_qsymm(n - k, mb));
                        if (d_qsymm(n, ab) != rhs && ok) {
                            ok = false;
                            witness = "n=" + std::to_string(n) + " a=" + render_word<MBasis>(a) +
                                      " b=" + render_word<MBasis>(b);
                        }
                    }
                }
            }
        }
        report.add(total, "hs-leibniz", ok, witness);
        report.degree_millis.emplace_back(total, clock.millis());
    }
    return report;
}

/// Checks quasi_shuffle against its duality oracle on all monomial pairs of
/// total weight <= max_degree.
inline VerificationReport verify_quasi_shuffle_duality(int max_degree, const DegreeBound& bound = DegreeBound{})
{
    bound.check_index(max_degree, "verify_quasi_shuffle_duality");
    VerificationReport report;
    report.suite = "qsymm-duality";
    for (int total = 0; total <= max_degree; ++total) {
        Stopwatch clock;
        bool ok = true;
        std::optional<std::string> witness;
        for (int wa = 0; wa <= total; ++wa) {
            for (const auto& a : compositions_of(wa)) {
                for (const auto& b : compositions_of(total - wa)) {
                    ++report.pairs_checked;
                    auto ma = QSPoly::term(a);
                    auto mb = QSPoly::term(b);
                    if (quasi_shuffle(ma, mb, bound) != quasi_shuffle_by_duality(ma, mb, bound) && ok) {
                        ok = false;
                        witness = "a=" + render_word<MBasis>(a) + " b=" + render_word<MBasis>(b);
                    }
                }
            }
        }
        report.add(total, "quasi-shuffle-duality", ok, witness);
        report.degree_millis.emplace_back(total, clock.millis());
    }
    return report;
}

}  // namespace nsymm

#endif  // NSYMM_QSYMM_HPP
