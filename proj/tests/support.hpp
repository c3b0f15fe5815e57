#ifndef NSYMM_TESTS_SUPPORT_HPP
#define NSYMM_TESTS_SUPPORT_HPP

// Hand-rolled generators for property-style tests.

#include <random>

#include "nsymm/freealg.hpp"

namespace nsymm::gen {

inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng)) / den(rng);
}

inline Composition random_composition(std::mt19937_64& rng, int weight)
{
    std::vector<int> parts;
    while (weight > 0) {
        std::uniform_int_distribution<int> part(1, weight);
        int p = part(rng);
        parts.push_back(p);
        weight -= p;
    }
    return Composition(std::move(parts));
}

/// Up to `terms` random words of weight <= max_degree with small rational
/// coefficients.
template <class Basis>
Poly<Basis> random_poly(std::mt19937_64& rng, int max_degree, int terms = 4)
{
    std::uniform_int_distribution<int> weight(0, max_degree);
    Poly<Basis> p;
    for (int k = 0; k < terms; ++k) p.add_term(random_composition(rng, weight(rng)), random_rational(rng));
    return p;
}

template <class Basis>
Tensor<Basis> random_tensor(std::mt19937_64& rng, int max_total_degree, int terms = 3)
{
    std::uniform_int_distribution<int> total(0, max_total_degree);
    Tensor<Basis> t;
    for (int k = 0; k < terms; ++k) {
        int w = total(rng);
        std::uniform_int_distribution<int> split(0, w);
        int left = split(rng);
        t.add_term({random_composition(rng, left), random_composition(rng, w - left)}, random_rational(rng));
    }
    return t;
}

}  // namespace nsymm::gen

#endif  // NSYMM_TESTS_SUPPORT_HPP
