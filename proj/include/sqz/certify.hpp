#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqz/bounds.hpp"
#include "sqz/domain.hpp"
#include "sqz/maps.hpp"

namespace sqz {

struct CertifyConfig {
  int boundary_samples = 20000;  // distinguished-boundary torus rays
  int interior_samples = 5000;   // uniform polydisk rays
  double bisection_tol = 1e-3;
  int max_bisections = 40;
  std::uint64_t rng_seed = 1;
};

enum class CertifyStatus {
  SampledOk,      // no interior obstruction found; only the unit cap binds
  WitnessFound,   // a replayable point outside the image capped the radius
};

std::string status_name(CertifyStatus s);

// Sampling-based estimate of the largest r with 𝔻ⁿ(0,r) contained in the
// image. The estimate is a certificate backed by the recorded seed, never a
// proof.
struct CertificateReport {
  double radius_estimate = 0.0;
  CertifyStatus status = CertifyStatus::SampledOk;
  std::optional<CVector> witness;  // in-target point whose preimage escapes
  long long samples_used = 0;
  std::string construction;
  std::uint64_t seed = 0;
  double achieved_tol = 0.0;
  bool tolerance_widened = false;  // bisection budget ran out first
};

// w ∈ f(Ω), decided through the inverse: true iff f⁻¹(w) is defined and lies
// in f.source. Maps without an inverse throw UnsupportedMap.
bool image_contains(const HoloMap& f, const CVector& w);

// Bisection on r ∈ (0,1]: each trial tests the obstruction probes and the
// scaled ray set; any failure shrinks r (recording the witness), success
// grows r. Returns the largest sampled-valid r. The caller guarantees f is
// centered (forward maps some point to 0).
CertificateReport inscribed_radius(const HoloMap& f, const CertifyConfig& cfg);

// candidate_embedding followed by inscribed_radius.
CertificateReport certify_candidate(const DomainSpec& d, const CVector& z,
                                    const CertifyConfig& cfg);

// A parametric family of embeddings over a box of parameters. make() may
// return maps that do not send z to 0; search_family recenters them before
// scoring. Parameter points where the family is undefined should throw
// RangeError; the search treats them as worthless.
struct MapFamily {
  std::string name;
  std::vector<std::pair<double, double>> parameter_box;
  std::function<HoloMap(const std::vector<double>&)> make;
};

// Derivative-free maximization of the inscribed radius over the family:
// multi-start coordinate search with step halving, seeded by cfg.rng_seed.
// `budget` caps the number of inscribed_radius evaluations (>= 1). The best
// report is a lower-bound witness for T, never the supremum.
CertificateReport search_family(const DomainSpec& d, const CVector& z,
                                const MapFamily& family,
                                const CertifyConfig& cfg, int budget);

MapFamily singleton_family(HoloMap f);

// scale(c)∘φ_a on a ball, parameters (c, Re a₁, Im a₁, …); members with
// a ≠ 0 get recentered, so the optimum sits at a = 0, c = 1.
MapFamily scaled_ball_automorphism_family(const DomainSpec& ball,
                                          const CVector& z);

// U∘φ_z on an origin-punctured ball, parameters the rotation angles of U.
// Every member sends z to 0 exactly; the rotation moves the excluded image
// point, so the search recovers the best axis alignment.
MapFamily rotated_candidate_family(const DomainSpec& punctured_ball,
                                   const CVector& z);

}  // namespace sqz
