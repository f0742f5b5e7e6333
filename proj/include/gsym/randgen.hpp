#ifndef GSYM_RANDGEN_HPP
#define GSYM_RANDGEN_HPP

#include <cstdint>
#include <random>

#include "gsym/superpoly.hpp"

namespace gsym {

// Seeded generator of random polynomials with small integer coefficients.
// Deterministic across platforms (mt19937 + explicit distributions).
class RandGen {
public:
    explicit RandGen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi); // inclusive
    Rat small_coeff();           // nonzero integer in [-3, 3]

    // Polynomial in the weight-0 (base) variables only, total degree <= deg.
    Poly base_poly(const ChartPtr& ctx, int deg, int n_terms = 3);
    // Weight-1 section: sum over fiber variables of base_poly coefficients.
    Poly section(const ChartPtr& ctx, int deg = 2);
    // Random monomial of the given weight built from arbitrary variables,
    // with base exponents bounded by max_qdeg. Returns zero if impossible.
    Poly monomial(const ChartPtr& ctx, int weight, int max_qdeg = 2);

private:
    std::mt19937_64 rng_;
};

} // namespace gsym

#endif
