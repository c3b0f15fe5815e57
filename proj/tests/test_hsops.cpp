#include <random>

#include <gtest/gtest.h>

#include "nsymm/explog.hpp"
#include "nsymm/hsops.hpp"
#include "nsymm/newton.hpp"

using namespace nsymm;

namespace {

using Free = TruncatedFreeAlgebra;

std::vector<LinMap> zero_maps(std::size_t dim, int count)
{
    return std::vector<LinMap>(static_cast<std::size_t>(count), LinMap(dim));
}

LinMap power(const LinMap& m, int k)
{
    LinMap r = LinMap::identity(m.dim());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

Vector random_element(std::mt19937_64& rng, std::size_t dim, bool constant_term = true)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vector v(dim);
    for (std::size_t i = constant_term ? 0 : 1; i < dim; ++i) v[i] = coeff(rng);
    return v;
}

HSFamily free_nonexp(int order)
{
    static const Free free(4);
    GeneratorImages images;
    images[{Free::x, 1}] = free.generator(Free::y);
    images[{Free::x, 2}] = free.generator(Free::x);
    return free_hs_extend(free, images, order);
}

HSFamily inner_build(int order)
{
    auto a = upper_triangular_algebra(3);
    Vector m{1, 2, 0, 0, 1, 3};
    Vector m2{0, 1, -1, 2, 0, 1};
    std::vector<LinMap> partials{inner_derivation(*a, m), inner_derivation(*a, m2)};
    while (static_cast<int>(partials.size()) < order) partials.emplace_back(a->dim());
    return d_from_partial(partials, a);
}

}  // namespace

TEST(TestAlgebra, CatalogIsValid)
{
    EXPECT_EQ(truncated_polynomial_algebra(5)->dim(), 6u);
    EXPECT_EQ(upper_triangular_algebra(2)->dim(), 3u);
    EXPECT_EQ(upper_triangular_algebra(4)->dim(), 10u);
    Free free(3);
    EXPECT_EQ(free.dim(), 15u);
    EXPECT_EQ(free.algebra()->labels()[3], "xx");
    // x * yx = xyx
    auto xyx = free.algebra()->multiply(free.generator(Free::x), free.element({Free::y, Free::x}));
    EXPECT_EQ(xyx, free.element({Free::x, Free::y, Free::x}));
    // Products beyond the truncation vanish.
    auto long_word = free.algebra()->multiply(free.element({0, 0}), free.element({1, 1}));
    EXPECT_TRUE(is_zero(long_word));
}

TEST(TestAlgebra, RejectsBadStructureConstants)
{
    TestAlgebra::StructureConstants products{
        {{0, 0}, {1, 0, 0}}, {{0, 1}, {0, 1, 0}}, {{1, 0}, {0, 1, 0}},
        {{0, 2}, {0, 0, 1}}, {{2, 0}, {0, 0, 1}}, {{1, 1}, {0, 0, 1}},
        {{1, 2}, {0, 1, 0}},  // x * x^2 = x, while x^2 * x = 0
    };
    EXPECT_THROW(TestAlgebra({"1", "x", "y"}, Vector{1, 0, 0}, products), std::invalid_argument);

    TestAlgebra::StructureConstants no_unit{{{0, 0}, {1, 0}}};
    EXPECT_THROW(TestAlgebra({"a", "b"}, Vector{1, 0}, no_unit), std::invalid_argument);
}

TEST(TestAlgebra, GradingCapsProducts)
{
    auto a = truncated_polynomial_algebra(4);
    ASSERT_TRUE(a->grading().has_value());
    EXPECT_EQ(a->multiply(a->basis(1), a->basis(3)), a->basis(4));
    EXPECT_THROW(a->multiply(a->basis(2), a->basis(3)), DegreeOverflow);
    EXPECT_FALSE(a->defined(2, 3));
}

TEST(TestAlgebra, QuotientDoesNotCarryTaylor)
{
    // Same table as the graded algebra but with x^5 = 0 imposed: d/dx(x * x^4)
    // would have to equal 5 x^4, so the divided powers stop being a family.
    auto graded = truncated_polynomial_algebra(4);
    TestAlgebra::StructureConstants products;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; i + j < 5; ++j) products[{i, j}] = basis_vector(5, i + j);
    }
    auto quotient = std::make_shared<const TestAlgebra>(graded->labels(), graded->unit(), products);
    HSFamily f{quotient, taylor_hs(4).maps};
    auto v = hs_violation(f);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->n, 1);
    EXPECT_GT(v->i + v->j, 4u);
}

TEST(IsDerivation, Examples)
{
    auto a = upper_triangular_algebra(2);
    EXPECT_TRUE(is_derivation(LinMap(a->dim()), *a));
    EXPECT_FALSE(is_derivation(LinMap::identity(a->dim()), *a));
    Vector m{1, 5, -2};  // [[1, 5], [0, -2]]
    EXPECT_TRUE(is_derivation(inner_derivation(*a, m), *a));
    EXPECT_TRUE(is_derivation(differentiation(6), *truncated_polynomial_algebra(6)));
    EXPECT_THROW(is_derivation(LinMap(2), *a), std::invalid_argument);
}

TEST(Taylor, Values)
{
    auto f = taylor_hs(6);
    ASSERT_EQ(f.order(), 6);
    EXPECT_EQ(f.d(1).apply(basis_vector(7, 2)), (Vector{0, 2, 0, 0, 0, 0, 0}));
    EXPECT_EQ(f.d(2).apply(basis_vector(7, 2)), basis_vector(7, 0));
    EXPECT_TRUE(f.d(3).apply(basis_vector(7, 2)) == zero_vector(7));
}

TEST(Taylor, IsDividedPowerOfDifferentiation)
{
    // Independent oracle: d_n = D^n / n!.
    auto f = taylor_hs(6);
    LinMap D = differentiation(6);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(f.d(n), (Rational(1) / factorial(n)) * power(D, n)) << n;
}

TEST(IsHS, ExamplesAndWitness)
{
    auto a = truncated_polynomial_algebra(4);
    EXPECT_TRUE(is_hs(HSFamily{a, zero_maps(a->dim(), 4)}));
    EXPECT_TRUE(is_hs(taylor_hs(4)));
    EXPECT_TRUE(is_hs(taylor_hs(6)));

    auto broken = taylor_hs(5);
    broken.maps[1](0, 3) += 1;  // d_2(x^3) gains a constant term
    auto v = hs_violation(broken);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->n, 2);
    EXPECT_FALSE(is_hs(broken));
}

TEST(DeltaFromD, Taylor)
{
    auto f = taylor_hs(6);
    auto deltas = delta_from_d(f);
    ASSERT_EQ(deltas.size(), 6u);
    EXPECT_EQ(deltas[0], differentiation(6));
    for (int n = 2; n <= 6; ++n) EXPECT_TRUE(deltas[n - 1].is_zero()) << n;

    auto a = truncated_polynomial_algebra(6);
    for (const auto& d : delta_from_d(HSFamily{a, zero_maps(7, 5)})) EXPECT_TRUE(d.is_zero());
}

TEST(DFromDelta, RecoversTaylor)
{
    auto a = truncated_polynomial_algebra(6);
    std::vector<LinMap> deltas = zero_maps(7, 6);
    deltas[0] = differentiation(6);
    auto f = d_from_delta(deltas, a);
    EXPECT_EQ(f.maps, taylor_hs(6).maps);

    auto zero = d_from_delta(zero_maps(7, 4), a);
    for (const auto& m : zero.maps) EXPECT_TRUE(m.is_zero());
}

TEST(DFromDelta, RejectsNonDerivations)
{
    auto a = truncated_polynomial_algebra(3);
    std::vector<LinMap> bad{LinMap::identity(4)};
    EXPECT_THROW(d_from_delta(bad, a), std::invalid_argument);
    EXPECT_THROW(d_from_partial(bad, a), std::invalid_argument);
}

TEST(PartialFromD, Examples)
{
    auto partials = partial_from_d(taylor_hs(6));
    EXPECT_EQ(partials[0], differentiation(6));
    for (int n = 2; n <= 6; ++n) EXPECT_TRUE(partials[n - 1].is_zero()) << n;

    auto f = free_nonexp(5);
    EXPECT_EQ(partial_from_d(f)[0], f.d(1));
    EXPECT_EQ(delta_from_d(f)[0], f.d(1));
}

TEST(DFromPartial, ExponentialOfOneDerivation)
{
    auto a = truncated_polynomial_algebra(6);
    std::vector<LinMap> partials = zero_maps(7, 6);
    partials[0] = differentiation(6);
    EXPECT_EQ(d_from_partial(partials, a).maps, taylor_hs(6).maps);
}

TEST(DFromPartial, NoncommutingInnerDerivations)
{
    auto a = upper_triangular_algebra(3);
    Vector m{1, 2, 0, 0, 1, 3};
    Vector m2{0, 1, -1, 2, 0, 1};
    auto ad = inner_derivation(*a, m);
    auto ad2 = inner_derivation(*a, m2);
    ASSERT_NE(ad * ad2, ad2 * ad);
    auto f = d_from_partial(std::vector<LinMap>{ad, ad2}, a);
    EXPECT_TRUE(is_hs(f));
    EXPECT_TRUE(is_hs(inner_build(6)));
}

TEST(RoundTrips, AllShippedFamilies)
{
    std::vector<HSFamily> families{taylor_hs(6), free_nonexp(6), inner_build(6)};
    for (const auto& f : families) {
        ASSERT_TRUE(is_hs(f));
        auto deltas = delta_from_d(f);
        auto partials = partial_from_d(f);
        for (const auto& d : deltas) EXPECT_TRUE(is_derivation(d, *f.algebra));
        for (const auto& p : partials) EXPECT_TRUE(is_derivation(p, *f.algebra));
        EXPECT_EQ(d_from_delta(deltas, f.algebra), f);
        EXPECT_EQ(d_from_partial(partials, f.algebra), f);
    }
}

TEST(RoundTrips, RandomFamilies)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = upper_triangular_algebra(trial % 2 ? 3 : 4);
        std::vector<LinMap> partials;
        for (int k = 0; k < 4; ++k) partials.push_back(inner_derivation(*a, random_element(rng, a->dim())));
        auto f = d_from_partial(partials, a);
        ASSERT_TRUE(is_hs(f));
        EXPECT_EQ(partial_from_d(f), partials);
        auto deltas = delta_from_d(f);
        for (const auto& d : deltas) ASSERT_TRUE(is_derivation(d, *a));
        EXPECT_EQ(d_from_delta(deltas, a), f);
    }
    const Free free(3);
    for (int trial = 0; trial < 4; ++trial) {
        GeneratorImages images;
        for (int g : {Free::x, Free::y}) {
            for (int n = 1; n <= 4; ++n) images[{g, n}] = random_element(rng, free.dim(), false);
        }
        auto f = free_hs_extend(free, images, 4);
        ASSERT_TRUE(is_hs(f));
        EXPECT_EQ(d_from_delta(delta_from_d(f), f.algebra), f);
        EXPECT_EQ(d_from_partial(partial_from_d(f), f.algebra), f);
    }
}

TEST(FreeExtend, Examples)
{
    const Free free(4);
    auto zero = free_hs_extend(free, {}, 4);
    for (const auto& m : zero.maps) EXPECT_TRUE(m.is_zero());

    GeneratorImages exp_images;
    exp_images[{Free::x, 1}] = free.generator(Free::y);
    auto f = free_hs_extend(free, exp_images, 4);
    EXPECT_TRUE(is_hs(f));
    auto deltas = delta_from_d(f);
    EXPECT_TRUE(deltas[1].is_zero());
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(f.d(n), (Rational(1) / factorial(n)) * power(f.d(1), n)) << n;

    auto g = free_nonexp(4);
    EXPECT_TRUE(is_hs(g));
    auto gd = delta_from_d(g);
    EXPECT_FALSE(gd[1].is_zero());
    EXPECT_TRUE(is_derivation(gd[1], *g.algebra));
}

TEST(FreeExtend, RejectsConstantTerms)
{
    const Free free(2);
    GeneratorImages images;
    images[{Free::x, 1}] = free.element({});
    EXPECT_THROW(free_hs_extend(free, images, 2), DegreeOverflow);
    GeneratorImages out_of_range;
    out_of_range[{Free::y, 3}] = free.generator(Free::x);
    EXPECT_THROW(free_hs_extend(free, out_of_range, 2), std::invalid_argument);
}

TEST(OperatorCalculus, SymbolicExpansionActsAsFamily)
{
    auto f = free_nonexp(5);
    auto deltas = delta_from_d(f);
    NewtonEngine newton;
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(act(newton.z_in_pprime(n), std::span<const LinMap>(deltas), f.algebra->dim()), f.d(n)) << n;
        EXPECT_EQ(act(newton.p_right(n), std::span<const LinMap>(f.maps), f.algebra->dim()), deltas[n - 1]) << n;
    }
}

TEST(OperatorCalculus, LeftmostFirstOrderFails)
{
    // Acting with the first letter applied first breaks the reconstruction on
    // a noncommutative family; this pins the rightmost-first convention.
    auto f = free_nonexp(5);
    auto deltas = delta_from_d(f);
    NewtonEngine newton;
    bool some_differ = false;
    for (int n = 1; n <= 5; ++n) {
        auto reversed = act(reverse_words(newton.z_in_pprime(n)), std::span<const LinMap>(deltas), f.algebra->dim());
        some_differ = some_differ || reversed != f.d(n);
    }
    EXPECT_TRUE(some_differ);
}

TEST(OperatorCalculus, LogarithmActsAsPartials)
{
    ExpLogEngine explog;
    for (const auto& f : {free_nonexp(5), inner_build(5)}) {
        auto partials = partial_from_d(f);
        for (int n = 1; n <= 5; ++n) {
            EXPECT_EQ(act(explog.u_of_z(n), std::span<const LinMap>(f.maps), f.algebra->dim()), partials[n - 1]);
        }
    }
}
