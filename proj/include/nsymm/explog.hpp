#ifndef NSYMM_EXPLOG_HPP
#define NSYMM_EXPLOG_HPP

#include <map>

#include "nsymm/hopf.hpp"
#include "nsymm/render.hpp"
#include "nsymm/report.hpp"

namespace nsymm {

/// Change of generators between NSymm (Z) and LieHopf (U) over Q given by
///   1 + Z_1 t + Z_2 t^2 + ... = exp(U_1 t + U_2 t^2 + ...).
///
/// Images are memoized per index; not safe for concurrent use.
class ExpLogEngine {
public:
    explicit ExpLogEngine(DegreeBound bound = {}) : bound_(bound) {}

    [[nodiscard]] const DegreeBound& bound() const { return bound_; }

    /// Z_n = sum over compositions r of n of U_{r_1}...U_{r_m} / m!.
    const UPoly& z_of_u(int n)
    {
        bound_.check_index(n, "z_of_u");
        if (auto it = z_of_u_.find(n); it != z_of_u_.end()) return it->second;
        UPoly p;
        for (const auto& w : compositions_of(n)) {
            p.add_term(w, Rational(1) / factorial(static_cast<int>(w.length())));
        }
        return z_of_u_.emplace(n, std::move(p)).first->second;
    }

    /// U_n = sum over compositions r of n of (-1)^(m+1) Z_{r_1}...Z_{r_m} / m.
    const NCPoly& u_of_z(int n)
    {
        bound_.check_index(n, "u_of_z");
        if (auto it = u_of_z_.find(n); it != u_of_z_.end()) return it->second;
        NCPoly p;
        for (const auto& w : compositions_of(n)) {
            auto m = static_cast<int>(w.length());
            p.add_term(w, Rational(m % 2 == 1 ? 1 : -1) / m);
        }
        return u_of_z_.emplace(n, std::move(p)).first->second;
    }

    /// Image of a Z-polynomial in the U-alphabet.
    UPoly to_u(const NCPoly& p)
    {
        return substitute<UBasis>(p, std::function<UPoly(int)>([this](int k) { return z_of_u(k); }));
    }

    /// Image of a U-polynomial in the Z-alphabet.
    NCPoly to_z(const UPoly& p)
    {
        return substitute<ZBasis>(p, std::function<NCPoly(int)>([this](int k) { return u_of_z(k); }));
    }

    /// Checks, for every 1 <= n <= max_degree:
    ///   roundtrip-z-u:  to_z(z_of_u(n)) == Z_n
    ///   roundtrip-u-z:  to_u(u_of_z(n)) == U_n
    ///   coalgebra-morphism:  mu_LieHopf(z_of_u(n)) == (phi (x) phi) mu_NSymm(Z_n), phi = to_u
    VerificationReport verify_iso(int max_degree)
    {
        bound_.check_index(max_degree, "verify_iso");
        VerificationReport report;
        report.suite = "iso";
        for (int n = 1; n <= max_degree; ++n) {
            Stopwatch clock;

            auto back_to_z = to_z(z_of_u(n)) - generator<ZBasis>(n);
            report.add(n, "roundtrip-z-u", back_to_z.is_zero(),
                       back_to_z.is_zero() ? "" : term_text<ZBasis>(back_to_z.begin()->first, back_to_z.begin()->second));

            auto back_to_u = to_u(u_of_z(n)) - generator<UBasis>(n);
            report.add(n, "roundtrip-u-z", back_to_u.is_zero(),
                       back_to_u.is_zero() ? "" : term_text<UBasis>(back_to_u.begin()->first, back_to_u.begin()->second));

            auto lhs = coproduct(z_of_u(n), HopfFamily::liehopf, bound_);
            auto rhs = map_legs<UBasis>(coproduct(generator<ZBasis>(n), HopfFamily::nsymm, bound_),
                                        std::function<UPoly(const Composition&)>([this](const Composition& w) {
                                            return to_u(NCPoly::term(w));
                                        }));
            auto defect = lhs - rhs;
            report.add(n, "coalgebra-morphism", defect.is_zero(),
                       defect.is_zero() ? "" : term_text<UBasis, 2>(defect.begin()->first, defect.begin()->second));

            report.degree_millis.emplace_back(n, clock.millis());
        }
        return report;
    }

private:
    DegreeBound bound_;
    std::map<int, UPoly> z_of_u_;
    std::map<int, NCPoly> u_of_z_;
};

}  // namespace nsymm

#endif  // NSYMM_EXPLOG_HPP
