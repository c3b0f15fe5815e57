#ifndef NSYMM_SUITES_HPP
#define NSYMM_SUITES_HPP

#include <functional>
#include <optional>
#include <tuple>
#include <type_traits>
#include <map>
#include <string>
#include <vector>

#include "nsymm/explog.hpp"
#include "nsymm/hopf.hpp"
#include "nsymm/newton.hpp"
#include "nsymm/qsymm.hpp"
#include "nsymm/render.hpp"
#include "nsymm/report.hpp"

namespace nsymm {

// Named verification suites, each a deterministic report ordered by degree.

namespace detail {

template <class Lc>
std::optional<std::string> first_term_witness(const Lc& defect)
{
    if (defect.is_zero()) return std::nullopt;
    using Basis = typename Lc::basis_type;
    const auto& [key, c] = *defect.begin();
    if constexpr (std::is_same_v<typename Lc::key_type, Composition>) {
        return term_text<Basis>(key, c);
    } else {
        return term_text<Basis, std::tuple_size_v<typename Lc::key_type>>(key, c);
    }
}

template <class Lc>
void add_zero_check(VerificationReport& r, int degree, const std::string& law, const Lc& defect)
{
    r.add(degree, law, defect.is_zero(), first_term_witness(defect));
}

}  // namespace detail

/// P_n and P'_n are primitive in NSymm for 1 <= n <= max_degree.
inline VerificationReport verify_primitivity(int max_degree)
{
    DegreeBound bound(max_degree);
    NewtonEngine newton(bound);
    VerificationReport r;
    r.suite = "primitivity";
    for (int n = 1; n <= max_degree; ++n) {
        Stopwatch clock;
        detail::add_zero_check(r, n, "P primitive", primitivity_defect(newton.p_left(n), HopfFamily::nsymm, bound));
        detail::add_zero_check(r, n, "P' primitive", primitivity_defect(newton.p_right(n), HopfFamily::nsymm, bound));
        r.degree_millis.emplace_back(n, clock.millis());
    }
    return r;
}

/// Agreement of the independent Newton-primitive constructions.
inline VerificationReport verify_newton_consistency(int max_degree)
{
    DegreeBound bound(max_degree);
    NewtonEngine newton(bound);
    VerificationReport r;
    r.suite = "newton-consistency";
    for (int n = 1; n <= max_degree; ++n) {
        Stopwatch clock;
        detail::add_zero_check(r, n, "explicit == recursive P", newton.p_explicit(n) - newton.p_left(n));
        detail::add_zero_check(r, n, "reverse(P) == P'", reverse_words(newton.p_left(n)) - newton.p_right(n));

        NCPoly lower = newton.p_right(n) - Rational(n) * generator<ZBasis>(n);
        bool single_letter_free = true;
        for (const auto& [w, c] : lower) single_letter_free = single_letter_free && w.length() >= 2;
        r.add(n, "P' - n Z_n has no single-letter terms", single_letter_free,
              single_letter_free ? std::nullopt : detail::first_term_witness(lower));

        detail::add_zero_check(r, n, "z_in_pprime == z_in_pprime_via_c",
                               newton.z_in_pprime(n) - newton.z_in_pprime_via_c(n));
        detail::add_zero_check(r, n, "z_in_pprime round-trip",
                               newton.expand_pprime(newton.z_in_pprime(n)) - generator<ZBasis>(n));
        if (n >= 2) {
            bool integral = newton.z_in_pprime(n).is_integral();
            r.add(n, "z_in_pprime not integral", !integral, std::string("all coefficients integral"));
        }
        r.degree_millis.emplace_back(n, clock.millis());
    }
    return r;
}

/// Coassociativity, counit laws and multiplicativity for both coproducts on
/// every word of weight <= max_degree (pairs of words for multiplicativity).
inline VerificationReport verify_hopf_laws(int max_degree)
{
    DegreeBound bound(max_degree);
    VerificationReport r;
    r.suite = "hopf-laws";
    auto run = [&]<class Basis>(HopfFamily family) {
        const std::string tag = to_string(family);
        for (int n = 1; n <= max_degree; ++n) {
            Stopwatch clock;
            // Keep the first nonzero defect per law; words are checked one by one.
            Tensor<Basis, 3> coassoc;
            Poly<Basis> left;
            Poly<Basis> right;
            Tensor<Basis> morph;
            for (const auto& w : compositions_of(n)) {
                auto p = Poly<Basis>::term(w);
                if (coassoc.is_zero()) coassoc = coassociativity_defect(p, family, bound);
                auto [l, rr] = counit_defects(p, family, bound);
                if (left.is_zero()) left = l;
                if (right.is_zero()) right = rr;
            }
            for (int k = 1; k < n; ++k) {
                for (const auto& a : compositions_of(k)) {
                    for (const auto& b : compositions_of(n - k)) {
                        if (!morph.is_zero()) break;
                        morph = morphism_defect(Poly<Basis>::term(a), Poly<Basis>::term(b), family, bound);
                    }
                }
            }
            detail::add_zero_check(r, n, tag + " coassociativity", coassoc);
            detail::add_zero_check(r, n, tag + " left counit", left);
            detail::add_zero_check(r, n, tag + " right counit", right);
            detail::add_zero_check(r, n, tag + " multiplicativity", morph);
            r.degree_millis.emplace_back(n, clock.millis());
        }
    };
    run.template operator()<ZBasis>(HopfFamily::nsymm);
    run.template operator()<UBasis>(HopfFamily::liehopf);
    return r;
}

inline VerificationReport verify_iso(int max_degree)
{
    ExpLogEngine engine{DegreeBound(max_degree)};
    return engine.verify_iso(max_degree);
}

/// Hasse-Schmidt law of the QSymm family plus the quasi-shuffle duality check.
inline VerificationReport verify_qsymm(int max_degree)
{
    DegreeBound bound(max_degree);
    VerificationReport r = verify_hs_qsymm(max_degree, bound);
    r.append(verify_quasi_shuffle_duality(max_degree, bound));
    r.suite = "qsymm-hs";
    return r;
}

inline const std::map<std::string, std::function<VerificationReport(int)>>& verification_suites()
{
    static const std::map<std::string, std::function<VerificationReport(int)>> suites{
        {"primitivity", verify_primitivity},
        {"newton-consistency", verify_newton_consistency},
        {"iso", verify_iso},
        {"qsymm-hs", verify_qsymm},
        {"hopf-laws", verify_hopf_laws},
    };
    return suites;
}

}  // namespace nsymm

#endif  // NSYMM_SUITES_HPP
