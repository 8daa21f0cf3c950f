#pragma once

#include <complex>
#include <random>
#include <vector>

#include "symmod/rational.hpp"

namespace symmod {

// Deterministic source of rational test data: same seed, same sequence.
class RandomSource {
  public:
    explicit RandomSource(unsigned long seed) : gen_(seed) {}

    // Rational with |value| < 1, numerator/denominator bounded by 32.
    Rat proper_rational();

    // Point in the open polydisc with pairwise-distinct real rational coordinates.
    std::vector<Rat> rational_point_distinct(int n);

    // Positive rational weight in (0, 4], denominator <= 32.
    Rat weight();

    // Complex point with pairwise-distinct coordinates, each of modulus <= max_abs,
    // rational real/imaginary parts with denominators <= 32.
    std::vector<std::complex<double>> complex_point_distinct(int n, double max_abs);

    std::mt19937_64& engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

} // namespace symmod
