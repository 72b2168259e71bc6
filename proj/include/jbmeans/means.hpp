#pragma once

#include <string>

#include "jbmeans/algebra.hpp"
#include "jbmeans/spectral.hpp"

namespace jbmeans {

enum class MeanKind { Harmonic, Geometric, Arithmetic };

std::string mean_kind_name(MeanKind kind);
MeanKind parse_mean_kind(const std::string& name);

/// A !_w B = ((1 - w) A^-1 + w B^-1)^-1.
Element harmonic_mean(const Element& a, const Element& b, double weight);

/// A #_w B = {A^1/2 {A^-1/2 B A^-1/2}^w A^1/2}. Weights 0 and 1 return A and
/// B unchanged.
Element geometric_mean(const Element& a, const Element& b, double weight);

/// A v_w B = (1 - w) A + w B.
Element arithmetic_mean(const Element& a, const Element& b, double weight);

Element mean(MeanKind kind, const Element& a, const Element& b, double weight);

/// Functions defining the perspective P_{f,h}; h must be positive on the
/// spectrum of the second argument.
struct PerspectiveSpec {
  ScalarFunction f;
  ScalarFunction h;
};

/// P_{f,h}(A, B) = {h(B)^1/2 f({h(B)^-1/2 A h(B)^-1/2}) h(B)^1/2}.
///
/// With h(t) = t and f = x^w this is B #_w A; with f the harmonic profile it
/// is B !_w A.
Element perspective(const PerspectiveSpec& spec, const Element& a, const Element& b);

/// Specht's ratio S(h) = h^(1/(h-1)) / (e log h^(1/(h-1))), S(1) = 1.
double specht_ratio(double h);

}  // namespace jbmeans
