#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sqz/domain.hpp"
#include "sqz/errors.hpp"
#include "sqz/types.hpp"

namespace sqz {

// A composable holomorphic map with forward and (where available) inverse
// evaluation. Values are immutable once built and freely shareable between
// threads; evaluation is pure.
//
// `exact_preimages` is an optional table of (image point, source point)
// pairs registered by constructors that know specific preimages exactly —
// the images of puncture points under a candidate embedding. apply_inverse
// consults the table first, so certification witnesses replay bit-exactly
// instead of drifting through the floating-point inverse.
struct HoloMap {
  DomainSpec source = DomainSpec::polydisk(1);
  DomainSpec target = DomainSpec::polydisk(1);
  std::function<CVector(const CVector&)> forward;
  std::function<CVector(const CVector&)> inverse;  // empty when unavailable
  std::string descriptor;
  std::shared_ptr<const std::vector<std::pair<CVector, CVector>>> exact_preimages;

  bool has_inverse() const { return static_cast<bool>(inverse); }

  CVector apply(const CVector& z) const;

  // Throws UnsupportedMap when no inverse is available.
  CVector apply_inverse(const CVector& w) const;
};

HoloMap identity_map(DomainSpec d);

// ζ ↦ (ζ − a)/(1 − ā ζ), the disk automorphism sending a to 0. Operates on
// length-1 vectors; |a| < 1 required.
HoloMap mobius_disk(Complex a);

// One-coordinate automorphism of the disk of radius `radius` centered at 0,
// sending `center` to 0 (rescale to the unit disk, then Möbius).
HoloMap disk_automorphism(Complex center, double radius);

// The standard involutive automorphism φ_a of the unit ball with
// φ_a(a) = 0, φ_a(0) = a:
//   φ_a(w) = (a − P_a w − √(1−‖a‖²)(w − P_a w)) / (1 − ⟨w,a⟩),
// P_a the orthogonal projection onto span(a). Requires ‖a‖ < 1.
HoloMap ball_automorphism(CVector a);

// z ↦ c·z on the unit polydisk (c > 0), with inverse z ↦ z/c. Declared
// source and target are Polydisk(n); for c ≤ 1/√n the image also fits in
// the unit ball.
HoloMap scale_map(int n, double c);

// Linear map z ↦ U z for a unitary U (validated to 1e-10); inverse is U*.
HoloMap unitary_map(CMatrix u);

// A unitary U with U v = ‖v‖·e₁ (complex Householder plus phase fix).
CMatrix align_to_first_axis(const CVector& v);

// z ↦ (f(z) − f(w)) / (1 + eps). Sends w to 0 and keeps the image inside
// the unit polydisk provided every |f_j(w)| < eps, which is checked at
// construction time.
HoloMap recenter(const HoloMap& f, const CVector& w, double eps);

// Value-level composition: compose(outer, inner)(z) = outer(inner(z)).
// Dimensions must chain; inverse present when both parts have one.
HoloMap compose(HoloMap outer, HoloMap inner);

enum class WeightPolicy {
  Ball,      // w_i = r_i / sqrt(Σ r_j²)
  Polydisk,  // w_i = r_i / max_j r_j
};

std::vector<double> product_weights(WeightPolicy policy,
                                    const std::vector<double>& factor_radii);

// Block-diagonal map (z₁,…,z_k) ↦ (w₁f₁(z₁),…,w_k f_k(z_k)) with weights
// w_i ∈ (0,1]. Source is the product of the factor sources (or the single
// source when k = 1); target is the unit polydisk of the total dimension.
HoloMap product_map(std::vector<HoloMap> factors, std::vector<double> weights);

// The explicit extremal candidate embedding for the supported domains,
// sending z to 0:
//   polydisk       — componentwise disk automorphisms (image: whole 𝔻ⁿ)
//   ball, R_I(1,s) — φ_z viewed inside 𝔻ⁿ (image: whole ball)
//   punctured ball/polydisk — ambient candidate restricted, with a unitary
//                     aligning the nearest excluded image point to the first
//                     axis for ball ambients; puncture images are registered
//                     as exact preimages
//   product        — recursive candidates combined by product_map with the
//                     Polydisk weight policy, radii 1/T_lower per factor
// Other domains throw UnsupportedDomain.
HoloMap candidate_embedding(const DomainSpec& d, const CVector& z);

HoloMap with_exact_preimages(HoloMap f,
                             std::vector<std::pair<CVector, CVector>> table);

}  // namespace sqz
