#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jbmeans/algebra.hpp"

namespace jbmeans {

using Rng = std::mt19937_64;

/// Spectrum bounds [spectrum_low, spectrum_high] and seed for
/// `random_positive`.
struct PositiveGenSpec {
  double spectrum_low = 1.0;
  double spectrum_high = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// A random Jordan frame: a complete system of rank-one orthogonal
/// idempotents (rank() of them).
std::vector<Element> random_frame(const AlgebraDescriptor& desc, Rng& rng);

/// sum_i lambda_i e_i over a random frame, lambda_i log-uniform in
/// [low, high].
Element random_positive(const AlgebraDescriptor& desc, const PositiveGenSpec& spec);
Element random_positive(const AlgebraDescriptor& desc, double low, double high,
                        Rng& rng);

/// Invertible, generally indefinite: |lambda_i| log-uniform in [low, high],
/// each sign chosen at random.
Element random_invertible(const AlgebraDescriptor& desc, double low, double high,
                          Rng& rng);

/// Standard Gaussian coordinates.
Element random_element(const AlgebraDescriptor& desc, Rng& rng);

}  // namespace jbmeans
