#pragma once

#include <vector>

#include "sqz/domain.hpp"
#include "sqz/types.hpp"

namespace sqz {

// Distances are plain nonnegative doubles; +infinity is representable for
// the distance to an empty set, though the set operations below reject
// empty input outright.

// σ(x) = log((1+x)/(1−x)) on [0,1). Strictly increasing, σ(0) = 0.
double sigma(double x);

// σ⁻¹(y) = tanh(y/2) on [0,∞), clamped strictly below 1 so that huge y
// saturates without ever returning 1.
double sigma_inv(double y);

// Poincaré distance on the unit disk, normalized so that
// poincare_disk(0, x) = σ(x): ρ(a,b) = σ(|a−b| / |1 − ā b|).
double poincare_disk(Complex a, Complex b);

// Kobayashi distance, normalized so K_𝔻(0,x) = σ(x) (so σ⁻¹∘K is the
// Euclidean/sup radius it bounds). Supported: balls (σ(‖φ_a(b)‖)),
// polydisks (max of per-coordinate Poincaré distances after rescaling),
// and products of supported factors (max over factors). Cartan and
// punctured domains throw UnsupportedDomain; punctured domains are handled
// through their ambient via kobayashi_to_set. Both points must lie in the
// domain.
double kobayashi(const DomainSpec& d, const CVector& a, const CVector& b);

// min over a ∈ points of kobayashi(ambient, z, a). Empty point sets are a
// contract violation.
double kobayashi_to_set(const DomainSpec& ambient, const CVector& z,
                        const std::vector<CVector>& points);

}  // namespace sqz
