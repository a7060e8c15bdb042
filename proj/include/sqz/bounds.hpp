#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqz/domain.hpp"
#include "sqz/types.hpp"

namespace sqz {

// Rule identifiers for the bound engine. Each rule encodes one closed-form
// fact about the squeezing functions T (polydisk target) and S (ball
// target):
//
//   EXACT_POLYDISK    T ≡ 1 and S ≡ 1/√n on the polydisk (any radii).
//   EXACT_BALL        T ≡ 1/√n and S ≡ 1 on the ball and on R_I(1,s) = Bˢ.
//   PUNCTURED_BALL_T  T(z) = ‖z‖ on Bⁿ∖{0} for ‖z‖ ≤ 1/√n (closure ties
//                     resolve toward the exact value).
//   PUNCTURED_BALL_S  S(z) = ‖z‖ on Bⁿ∖{0} for every z.
//   LEMMA_RELATE_A    T ≥ S/√n — transfers the S lower bound to T.
//   LEMMA_RELATE_B    S ≥ T/√n — transfers the T lower bound to S.
//   ALEXANDER_UPPER   T ≤ 1/√n on punctured balls (embeddings extend over
//                     finite point sets, and ball embeddings cap at 1/√n).
//   EXTENSION_UPPER   T(z) ≤ σ⁻¹(K_ambient(z, A)) on ambient∖A when the
//                     ambient Kobayashi distance is computable.
//   CARTAN_T          1/(√n·√m) ≤ t(R) ≤ 1/√m with m the polydisk direction
//                     count, for the four Cartan families.
//   CARTAN_S          s(R) = 1/√m exactly for the Cartan families.
//   PRODUCT_S_LOWER   S(a) ≥ [Σ S_i(a_i)⁻²]^(−1/2) over the factors.
//   PRODUCT_T_LOWER   T(a) ≥ min_i T_i(a_i) over the factors.
//   CARTAN_PRODUCT    for products of Cartan/ball/polydisk factors:
//                     s(D) = [Σ s(R_i)⁻²]^(−1/2) exactly, and
//                     s(D)/√n ≤ t(D) ≤ s(D).
//   TRIVIAL_RANGE     [0,1] always applies.
enum class RuleId {
  ExactPolydisk,
  ExactBall,
  PuncturedBallT,
  PuncturedBallS,
  LemmaRelateA,
  LemmaRelateB,
  AlexanderUpper,
  ExtensionUpper,
  CartanT,
  CartanS,
  ProductSLower,
  ProductTLower,
  CartanProduct,
  TrivialRange,
};

// Wire/display name, e.g. "EXACT_BALL".
std::string rule_name(RuleId id);

// [lower, upper] ⊆ [0,1] for a squeezing value, plus the rules that set the
// endpoints.
struct BoundInterval {
  double lower = 0.0;
  double upper = 1.0;
  std::vector<RuleId> provenance;

  bool exact() const { return lower == upper; }
};

// A rule may constrain T, S, or both.
struct RuleBounds {
  std::optional<BoundInterval> t;
  std::optional<BoundInterval> s;
};

struct Evaluation {
  BoundInterval T;
  BoundInterval S;
};

// Applies a single rule, or returns nothing when it is inapplicable to (d,z).
// The two LEMMA_RELATE transfer rules read the other function's current
// lower bound from `current` and are inapplicable without it; every other
// rule ignores `current`.
std::optional<RuleBounds> apply_rule(RuleId rule, const DomainSpec& d,
                                     const CVector& z,
                                     const std::optional<Evaluation>& current = {});

// [max of lowers, min of uppers]; provenance is the union of the first
// contributors achieving either endpoint. A lower exceeding the upper by
// more than 1e-12 throws InconsistencyError; smaller inversions (float
// noise between algebraically equal routes) snap to the lower endpoint.
BoundInterval intersect(std::span<const BoundInterval> intervals);

// Evaluates both squeezing functions by intersecting every applicable rule
// and running the transfer pair to a fixed point (cap 4 passes; the
// transfers provably settle in 2). Requires z ∈ d.
Evaluation evaluate_pair(const DomainSpec& d, const CVector& z);

BoundInterval evaluate_T(const DomainSpec& d, const CVector& z);
BoundInterval evaluate_S(const DomainSpec& d, const CVector& z);

struct EqualityFlags {
  bool relateA_equality = false;  // T = S/√n within 1e-12
  bool relateB_equality = false;  // S = T/√n within 1e-12
};

// Diagnostic only; requires both intervals exact, otherwise returns nothing.
std::optional<EqualityFlags> equality_flags(const DomainSpec& d, const CVector& z);

}  // namespace sqz
