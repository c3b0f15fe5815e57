#ifndef NSYMM_NEWTON_HPP
#define NSYMM_NEWTON_HPP

#include <map>
#include <stdexcept>

#include "nsymm/freealg.hpp"

namespace nsymm {

/// Reciprocal of every suffix sum of w: prod_k 1/(w_k + ... + w_m).
/// These are the coefficients of Z_n as a polynomial in the P'_k.
inline Rational c_coeff(const Composition& w)
{
    if (w.empty()) throw std::invalid_argument("c_coeff: empty composition");
    Rational r = 1;
    int suffix = 0;
    for (auto it = w.parts().rbegin(); it != w.parts().rend(); ++it) {
        suffix += *it;
        r /= suffix;
    }
    return r;
}

/// Newton primitives of NSymm and the inverse expansion of Z_n in them.
///
/// P_n and P'_n are returned in the Z-word basis. The two expansions of Z_n
/// (recursive inversion and the c-coefficient closed form) are returned as
/// words in the P' alphabet.
///
/// Results are memoized per index. An engine is not safe for concurrent use;
/// give each thread its own.
class NewtonEngine {
public:
    explicit NewtonEngine(DegreeBound bound = {}) : bound_(bound) {}

    [[nodiscard]] const DegreeBound& bound() const { return bound_; }

    /// P_n = n Z_n - (Z_{n-1} P_1 + ... + Z_1 P_{n-1}).
    const NCPoly& p_left(int n)
    {
        bound_.check_index(n, "newton_p_left");
        if (auto it = left_.find(n); it != left_.end()) return it->second;
        NCPoly p = Rational(n) * generator<ZBasis>(n);
        for (int i = 1; i < n; ++i) p -= generator<ZBasis>(n - i) * p_left(i);
        return left_.emplace(n, std::move(p)).first->second;
    }

    /// P'_n = n Z_n - (P'_1 Z_{n-1} + ... + P'_{n-1} Z_1).
    const NCPoly& p_right(int n)
    {
        bound_.check_index(n, "newton_p_right");
        if (auto it = right_.find(n); it != right_.end()) return it->second;
        NCPoly p = Rational(n) * generator<ZBasis>(n);
        for (int i = 1; i < n; ++i) p -= p_right(i) * generator<ZBasis>(n - i);
        return right_.emplace(n, std::move(p)).first->second;
    }

    /// Closed form: sum over compositions (i_1..i_m) of n of (-1)^(m+1) i_m Z_{i_1}...Z_{i_m}.
    [[nodiscard]] NCPoly p_explicit(int n) const
    {
        bound_.check_index(n, "newton_p_explicit");
        NCPoly p;
        for (const auto& w : compositions_of(n)) {
            Rational c = w.back();
            if (w.length() % 2 == 0) c = -c;
            p.add_term(w, c);
        }
        return p;
    }

    /// Z_n = (1/n)(P'_n + sum_{i<n} P'_i Z_{n-i}), solved recursively.
    const PBasisPoly& z_in_pprime(int n)
    {
        bound_.check_index(n, "z_in_pprime");
        if (auto it = z_.find(n); it != z_.end()) return it->second;
        PBasisPoly z = generator<PrimeBasis>(n);
        for (int i = 1; i < n; ++i) z += generator<PrimeBasis>(i) * z_in_pprime(n - i);
        z *= Rational(1) / n;
        return z_.emplace(n, std::move(z)).first->second;
    }

    /// Z_n = sum over compositions r of n of c_coeff(r) P'_{r_1}...P'_{r_m}.
    [[nodiscard]] PBasisPoly z_in_pprime_via_c(int n) const
    {
        bound_.check_index(n, "z_in_pprime_via_c");
        PBasisPoly z;
        for (const auto& w : compositions_of(n)) z.add_term(w, c_coeff(w));
        return z;
    }

    /// Substitutes P'_k -> p_right(k) into a P'-word polynomial.
    NCPoly expand_pprime(const PBasisPoly& p)
    {
        return substitute<ZBasis>(p, std::function<NCPoly(int)>([this](int k) { return p_right(k); }));
    }

private:
    DegreeBound bound_;
    std::map<int, NCPoly> left_;
    std::map<int, NCPoly> right_;
    std::map<int, PBasisPoly> z_;
};

}  // namespace nsymm

#endif  // NSYMM_NEWTON_HPP
