#include "sqz/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sqz/ray_scan.hpp"

namespace sqz {

std::string status_name(CertifyStatus s) {
  return s == CertifyStatus::WitnessFound ? "WITNESS_FOUND" : "SAMPLED_OK";
}

bool image_contains(const HoloMap& f, const CVector& w) {
  if (!f.has_inverse())
    throw UnsupportedMap("image_contains: map has no inverse");
  const CVector z = f.apply_inverse(w);
  return membership(f.source, z);
}

CertificateReport inscribed_radius(const HoloMap& f, const CertifyConfig& cfg) {
  if (!f.has_inverse())
    throw UnsupportedMap("inscribed_radius: map has no inverse");

  RaySet rs = build_rays(f.target.dimension(), cfg);
  add_puncture_probes(f, rs);
  const long long per_trial =
      static_cast<long long>(rs.probes.size() + rs.rays.size());

  CertificateReport rep;
  rep.seed = cfg.rng_seed;
  rep.construction = f.descriptor;

  // Invariant: lo sampled-valid (0 trivially), hi failed. The open unit
  // polydisk can never contain the closed one, so hi = 1 needs no trial and
  // estimates stay strictly below 1.
  double lo = 0.0;
  double hi = 1.0;
  std::optional<CVector> witness;
  int iters = 0;
  while (hi - lo > cfg.bisection_tol && iters < cfg.max_bisections) {
    const double r = 0.5 * (lo + hi);
    const std::ptrdiff_t fail = scan_first_failure(f, rs, r);
    rep.samples_used += per_trial;
    ++iters;
    if (fail < 0) {
      lo = r;
    } else {
      hi = r;
      // later failures happen at smaller radii, so this converges to the
      // binding obstruction
      const auto np = static_cast<std::ptrdiff_t>(rs.probes.size());
      witness = fail < np ? rs.probes[static_cast<std::size_t>(fail)]
                          : CVector(r * rs.rays[static_cast<std::size_t>(fail - np)]);
    }
  }
  rep.radius_estimate = lo;
  rep.achieved_tol = hi - lo;
  rep.tolerance_widened = (hi - lo) > cfg.bisection_tol;

  if (witness) {
    bool replays = false;
    try {
      replays = !image_contains(f, *witness);
    } catch (const Error&) {
      replays = false;
    }
    if (replays) {
      rep.status = CertifyStatus::WitnessFound;
      rep.witness = std::move(witness);
    }
  }
  return rep;
}

CertificateReport certify_candidate(const DomainSpec& d, const CVector& z,
                                    const CertifyConfig& cfg) {
  return inscribed_radius(candidate_embedding(d, z), cfg);
}

namespace {

// Post-compose with recenter when the member misses f(z) = 0, as a uniform
// way to keep family members admissible. The 1/(1+eps) shrink is the
// penalty for being off-center.
HoloMap centered_at(HoloMap m, const CVector& z) {
  const double off = sup_norm(m.apply(z));
  if (off <= 1e-12) return m;
  const double eps = off * (1.0 + 1e-9) + 1e-12;
  return recenter(m, z, eps);
}

}  // namespace

CertificateReport search_family(const DomainSpec& d, const CVector& z,
                                const MapFamily& family,
                                const CertifyConfig& cfg, int budget) {
  if (budget < 1) throw RangeError("search_family: budget must be >= 1");
  if (!membership(d, z))
    throw ContractViolation("search_family: point must lie in the domain");

  const std::size_t np = family.parameter_box.size();
  int evals = 0;
  long long samples_total = 0;
  std::optional<CertificateReport> best;

  auto score = [&](const std::vector<double>& params) -> double {
    if (evals >= budget) return -1.0;
    ++evals;
    HoloMap m;
    try {
      m = centered_at(family.make(params), z);
    } catch (const Error&) {
      return -1.0;  // invalid member
    }
    CertificateReport rep = inscribed_radius(m, cfg);
    samples_total += rep.samples_used;
    if (!best || rep.radius_estimate > best->radius_estimate) best = rep;
    return rep.radius_estimate;
  };

  if (np == 0) {
    score({});
  } else {
    std::mt19937_64 rng(cfg.rng_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int starts = std::max(1, std::min(3, budget / (2 * static_cast<int>(np) + 1)));
    for (int s = 0; s < starts && evals < budget; ++s) {
      std::vector<double> x(np), step(np);
      for (std::size_t i = 0; i < np; ++i) {
        const auto [a, b] = family.parameter_box[i];
        x[i] = s == 0 ? 0.5 * (a + b) : a + (b - a) * unif(rng);
        step[i] = 0.25 * (b - a);
      }
      double fx = score(x);
      double max_step = 1.0;
      while (evals < budget && max_step > 1e-3) {
        bool improved = false;
        for (std::size_t i = 0; i < np && evals < budget; ++i) {
          const auto [a, b] = family.parameter_box[i];
          for (const double dir : {+1.0, -1.0}) {
            std::vector<double> y = x;
            y[i] = std::clamp(x[i] + dir * step[i], a, b);
            if (y[i] == x[i]) continue;
            const double fy = score(y);
            if (fy > fx) {
              x = y;
              fx = fy;
              improved = true;
              break;
            }
          }
        }
        if (!improved) {
          max_step = 0.0;
          for (std::size_t i = 0; i < np; ++i) {
            step[i] *= 0.5;
            const auto [a, b] = family.parameter_box[i];
            max_step = std::max(max_step, step[i] / std::max(b - a, 1e-30));
          }
        }
      }
    }
  }

  if (!best)
    throw ContractViolation("search_family: family produced no valid map");
  best->samples_used = samples_total;
  return *best;
}

MapFamily singleton_family(HoloMap f) {
  MapFamily fam;
  fam.name = "singleton(" + f.descriptor + ")";
  fam.make = [f = std::move(f)](const std::vector<double>&) { return f; };
  return fam;
}

MapFamily scaled_ball_automorphism_family(const DomainSpec& ball,
                                          const CVector& z) {
  if (ball.kind() != DomainKind::Ball)
    throw UnsupportedDomain("scaled_ball_automorphism_family: needs a ball");
  const int n = ball.dimension();
  if (z.size() != n)
    throw ContractViolation("scaled_ball_automorphism_family: dimension mismatch");

  MapFamily fam;
  fam.name = "scale*ball_automorphism";
  fam.parameter_box.emplace_back(0.2, 1.0);  // scale factor
  const double coord_bound = 0.9 / std::sqrt(2.0 * n);
  for (int i = 0; i < 2 * n; ++i)
    fam.parameter_box.emplace_back(-coord_bound, coord_bound);

  fam.make = [n, z, ball](const std::vector<double>& params) {
    const double c = params[0];
    CVector a(n);
    for (int i = 0; i < n; ++i)
      a[i] = Complex(params[1 + 2 * i], params[2 + 2 * i]);
    if (!(a.norm() < 1.0))
      throw RangeError("family member outside the automorphism range");
    HoloMap m = compose(scale_map(n, c),
                        compose(ball_automorphism(a), ball_automorphism(z)));
    m.source = ball;
    return m;
  };
  return fam;
}

namespace {

CMatrix givens_rotation(int n, int k, double theta, double phase) {
  CMatrix u = CMatrix::Identity(n, n);
  const Complex e = std::polar(1.0, phase);
  u(0, 0) = std::cos(theta);
  u(0, k) = -e * std::sin(theta);
  u(k, 0) = std::conj(e) * std::sin(theta);
  u(k, k) = std::cos(theta);
  return u;
}

}  // namespace

MapFamily rotated_candidate_family(const DomainSpec& punctured_ball,
                                   const CVector& z) {
  const auto* p = punctured_ball.get_if<PunctureSpec>();
  if (!p || p->ambient.kind() != DomainKind::Ball)
    throw UnsupportedDomain("rotated_candidate_family: needs a punctured ball");
  const int n = p->ambient.dimension();

  MapFamily fam;
  fam.name = "unitary*ball_automorphism";
  for (int k = 1; k < n; ++k) {
    fam.parameter_box.emplace_back(-std::numbers::pi / 2, std::numbers::pi / 2);
    fam.parameter_box.emplace_back(0.0, 2.0 * std::numbers::pi);
  }

  const DomainSpec domain = punctured_ball;
  const std::vector<CVector> punctures = p->points;
  fam.make = [n, z, domain, punctures](const std::vector<double>& params) {
    CMatrix u = CMatrix::Identity(n, n);
    for (int k = 1; k < n; ++k)
      u = givens_rotation(n, k, params[2 * (k - 1)], params[2 * (k - 1) + 1]) * u;
    HoloMap m = compose(unitary_map(std::move(u)), ball_automorphism(z));
    m.source = domain;
    std::vector<std::pair<CVector, CVector>> table;
    table.reserve(punctures.size());
    for (const auto& pt : punctures) table.emplace_back(m.forward(pt), pt);
    return with_exact_preimages(std::move(m), std::move(table));
  };
  return fam;
}

}  // namespace sqz
