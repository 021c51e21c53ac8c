#pragma once

#include "metallic/polynomial.hpp"

#include <cstddef>
#include <random>
#include <vector>

// Deterministic random values for property tests; every suite seeds its own
// engine so runs are reproducible byte for byte.
namespace metallic::testing {

inline Rat random_rational(std::mt19937& rng, long long max_abs_num,
                           long long max_den) {
    std::uniform_int_distribution<long long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long long> den(1, max_den);
    return make_rat(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t max_degree,
                                    long long max_abs_num, long long max_den) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Rat> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) {
        c = random_rational(rng, max_abs_num, max_den);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace metallic::testing
