#include <vector>

#include <gtest/gtest.h>

#include "nsymm/explog.hpp"
#include "nsymm/hopf.hpp"

using namespace nsymm;

namespace {

// Oracle: noncommutative power series in t truncated at degree N, with
// exp(X) = sum X^m / m! and log(1 + Y) = sum (-1)^(m+1) Y^m / m evaluated by
// repeated series multiplication.
template <class Basis>
using Series = std::vector<Poly<Basis>>;  // index = power of t

template <class Basis>
Series<Basis> series_mul(const Series<Basis>& a, const Series<Basis>& b)
{
    Series<Basis> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

template <class Basis>
Series<Basis> generating_series(int N)
{
    Series<Basis> x(static_cast<std::size_t>(N + 1));
    for (int k = 1; k <= N; ++k) x[k] = generator<Basis>(k);
    return x;
}

Series<UBasis> exp_oracle(int N)
{
    auto x = generating_series<UBasis>(N);
    Series<UBasis> power(static_cast<std::size_t>(N + 1));
    power[0] = unit<UBasis>();
    Series<UBasis> sum = power;
    for (int m = 1; m <= N; ++m) {
        power = series_mul(power, x);
        for (int k = 0; k <= N; ++k) sum[k] += (Rational(1) / factorial(m)) * power[k];
    }
    return sum;
}

Series<ZBasis> log_oracle(int N)
{
    auto y = generating_series<ZBasis>(N);
    Series<ZBasis> power(static_cast<std::size_t>(N + 1));
    power[0] = unit<ZBasis>();
    Series<ZBasis> sum(static_cast<std::size_t>(N + 1));
    for (int m = 1; m <= N; ++m) {
        power = series_mul(power, y);
        for (int k = 0; k <= N; ++k) sum[k] += (Rational(m % 2 ? 1 : -1) / m) * power[k];
    }
    return sum;
}

Rational q(long n, long d) { return Rational(n) / Rational(d); }

}  // namespace

TEST(ExpLog, ZOfUExamples)
{
    ExpLogEngine e;
    EXPECT_EQ(e.z_of_u(1), generator<UBasis>(1));
    EXPECT_EQ(e.z_of_u(2), generator<UBasis>(2) + q(1, 2) * UPoly::term({1, 1}));
    EXPECT_EQ(e.z_of_u(3), generator<UBasis>(3) + q(1, 2) * (UPoly::term({1, 2}) + UPoly::term({2, 1})) +
                               q(1, 6) * UPoly::term({1, 1, 1}));
}

TEST(ExpLog, UOfZExamples)
{
    ExpLogEngine e;
    EXPECT_EQ(e.u_of_z(1), generator<ZBasis>(1));
    EXPECT_EQ(e.u_of_z(2), generator<ZBasis>(2) - q(1, 2) * NCPoly::term({1, 1}));
    EXPECT_EQ(e.u_of_z(3), generator<ZBasis>(3) - q(1, 2) * (NCPoly::term({1, 2}) + NCPoly::term({2, 1})) +
                               q(1, 3) * NCPoly::term({1, 1, 1}));
}

TEST(ExpLog, MatchesPowerSeriesOracle)
{
    const int N = 7;
    auto ex = exp_oracle(N);
    auto lg = log_oracle(N);
    ExpLogEngine e;
    for (int n = 1; n <= N; ++n) {
        EXPECT_EQ(e.z_of_u(n), ex[n]) << n;
        EXPECT_EQ(e.u_of_z(n), lg[n]) << n;
    }
}

TEST(ExpLog, RoundTripsBothDirections)
{
    ExpLogEngine e;
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(e.to_z(e.z_of_u(n)), generator<ZBasis>(n)) << n;
        EXPECT_EQ(e.to_u(e.u_of_z(n)), generator<UBasis>(n)) << n;
    }
}

TEST(ExpLog, UOfZIsPrimitiveInNSymm)
{
    ExpLogEngine e;
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(is_primitive(e.u_of_z(n), HopfFamily::nsymm)) << n;
}

TEST(ExpLog, DenominatorsDivideFactorial)
{
    ExpLogEngine e;
    for (int n = 1; n <= 8; ++n) {
        mpz_class lcm = 1;
        for (const auto& [w, c] : e.z_of_u(n)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_class fact = factorial(n).numerator();
        EXPECT_TRUE(mpz_divisible_p(fact.get_mpz_t(), lcm.get_mpz_t())) << n;
    }
}

TEST(ExpLog, VerifyIsoReport)
{
    ExpLogEngine e;
    auto one = e.verify_iso(1);
    EXPECT_TRUE(one.passed());
    EXPECT_EQ(one.records.size(), 3u);

    auto six = e.verify_iso(6);
    EXPECT_TRUE(six.passed());
    EXPECT_EQ(six.degree_millis.size(), 6u);
    for (const auto& rec : six.records) EXPECT_FALSE(rec.witness.has_value());

    EXPECT_THROW(e.verify_iso(9), DegreeOverflow);
}

TEST(ExpLog, CoalgebraLawAtDegreeTwoByHand)
{
    // mu(U_2 + U_1^2/2) = (U_2 + U_1^2/2) (x) 1 + U_1 (x) U_1 + 1 (x) (U_2 + U_1^2/2)
    ExpLogEngine e;
    const auto& z2 = e.z_of_u(2);
    auto expected = tensor_product(z2, unit<UBasis>()) + tensor_term<UBasis>({1}, {1}) +
                    tensor_product(unit<UBasis>(), z2);
    EXPECT_EQ(coproduct(z2, HopfFamily::liehopf), expected);
}
