#ifndef NSYMM_RATIONAL_HPP
#define NSYMM_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nsymm {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. Every constructor canonicalizes,
/// so two Rationals compare equal iff their numerator/denominator strings do.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value)  // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            static_assert(sizeof(T) <= sizeof(long), "integer too wide for mpq_class");
            value_ = static_cast<long>(value);
        } else {
            static_assert(sizeof(T) <= sizeof(unsigned long), "integer too wide for mpq_class");
            value_ = static_cast<unsigned long>(value);
        }
    }

    Rational(std::string_view numerator, std::string_view denominator)
    {
        mpz_class num;
        mpz_class den;
        if (num.set_str(std::string(numerator), 10) != 0 || den.set_str(std::string(denominator), 10) != 0) {
            throw std::invalid_argument("malformed rational: " + std::string(numerator) + "/" +
                                        std::string(denominator));
        }
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "a" or "a/b" (optional leading sign on a).
    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.empty()) {
            throw std::invalid_argument("empty rational literal");
        }
        std::string_view num = text;
        std::string_view den = "1";
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = trim(text.substr(0, slash));
            den = trim(text.substr(slash + 1));
        }
        if (num.size() > 1 && num.front() == '+') num.remove_prefix(1);
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s) {
                if (c < '0' || c > '9') return false;
            }
            return true;
        };
        if (!digits_ok(num, true) || !digits_ok(den, false)) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        return Rational(num, den);
    }

    [[nodiscard]] std::string numerator_string() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator_string() const { return value_.get_den().get_str(); }

    /// "n" when the denominator is 1, otherwise "n/d".
    [[nodiscard]] std::string to_string() const
    {
        if (is_integer()) return numerator_string();
        return numerator_string() + "/" + denominator_string();
    }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] Rational abs() const
    {
        Rational r;
        r.value_ = ::abs(value_);
        return r;
    }

    /// Denominator as an integer value; used for lcm/divisibility checks.
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }

    Rational& operator+=(const Rational& o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a)
    {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

inline Rational factorial(int n)
{
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace nsymm

#endif  // NSYMM_RATIONAL_HPP
