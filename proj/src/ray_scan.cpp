#include "sqz/ray_scan.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sqz/certify.hpp"

namespace sqz {
namespace {

// Generalized golden ratio: the positive root of x^(d+1) = x + 1. The
// per-coordinate rotation steps 1/phi, 1/phi², ... give a well-spread
// additive sequence on the d-torus.
double generalized_golden(int d) {
  double x = 1.5;
  for (int i = 0; i < 64; ++i) x = std::pow(1.0 + x, 1.0 / (d + 1));
  return x;
}

double frac(double x) { return x - std::floor(x); }

Complex unit_phase(double t) {
  const double a = 2.0 * std::numbers::pi * t;
  return Complex(std::cos(a), std::sin(a));
}

}  // namespace

RaySet build_rays(int dim, const CertifyConfig& cfg) {
  if (cfg.boundary_samples < 100 || cfg.interior_samples < 100)
    throw ContractViolation("build_rays: sample counts must be >= 100");
  if (!(cfg.bisection_tol > 0.0))
    throw ContractViolation("build_rays: tolerance must be positive");

  RaySet out;
  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const double g = generalized_golden(dim);
  std::vector<double> alpha(dim), phase(dim);
  double ak = 1.0;
  for (int j = 0; j < dim; ++j) {
    ak /= g;
    alpha[j] = ak;
    phase[j] = unif(rng);
  }

  // (i) distinguished boundary torus, |u_j| = 1 for all j
  out.torus_count = static_cast<std::size_t>(cfg.boundary_samples);
  for (std::size_t k = 0; k < out.torus_count; ++k) {
    CVector u(dim);
    for (int j = 0; j < dim; ++j)
      u[j] = unit_phase(frac(phase[j] + static_cast<double>(k + 1) * alpha[j]));
    out.rays.push_back(std::move(u));
  }

  // (ii) faces: |u_j| = 1, the other coordinates uniform in the closed disk
  const std::size_t per_face =
      std::max<std::size_t>(100, static_cast<std::size_t>(cfg.boundary_samples) /
                                     (2 * static_cast<std::size_t>(dim)));
  for (int j = 0; j < dim; ++j) {
    const double face_phase = unif(rng);
    for (std::size_t k = 0; k < per_face; ++k) {
      CVector u(dim);
      for (int i = 0; i < dim; ++i) {
        if (i == j) {
          u[i] = unit_phase(frac(face_phase + static_cast<double>(k + 1) / g));
        } else {
          const double r = std::sqrt(unif(rng));
          u[i] = r * unit_phase(unif(rng));
        }
      }
      out.rays.push_back(std::move(u));
      ++out.face_count;
    }
  }

  // (iii) interior: uniform in the closed unit polydisk
  out.interior_count = static_cast<std::size_t>(cfg.interior_samples);
  for (std::size_t k = 0; k < out.interior_count; ++k) {
    CVector u(dim);
    for (int i = 0; i < dim; ++i) {
      const double r = std::sqrt(unif(rng));
      u[i] = r * unit_phase(unif(rng));
    }
    out.rays.push_back(std::move(u));
  }
  return out;
}

void add_puncture_probes(const HoloMap& f, RaySet& rays) {
  // Prefer the exact-preimage table registered by the map's constructor:
  // those witnesses replay bit-exactly.
  if (f.exact_preimages && !f.exact_preimages->empty()) {
    for (const auto& [img, src] : *f.exact_preimages) {
      rays.probes.push_back(img);
      rays.probe_preimages.push_back(src);
    }
    return;
  }
  if (!f.has_inverse()) return;
  CVector center = f.apply_inverse(zero_vector(f.target.dimension()));
  for (auto& p : excluded_representatives(f.source, center)) {
    rays.probes.push_back(f.forward(p));
    rays.probe_preimages.push_back(std::move(p));
  }
}

namespace {

bool sample_passes(const HoloMap& f, const RaySet& rs, double r,
                   std::size_t index) {
  const std::size_t np = rs.probes.size();
  if (index < np) {
    // probe fails when it falls inside the open polydisk of radius r
    return !(sup_norm(rs.probes[index]) < r);
  }
  const CVector& u = rs.rays[index - np];
  try {
    return image_contains(f, CVector(r * u));
  } catch (const Error&) {
    return false;  // treat evaluation breakdowns as exclusion
  }
}

}  // namespace

std::ptrdiff_t scan_first_failure_serial(const HoloMap& f, const RaySet& rs,
                                         double r) {
  const std::ptrdiff_t total =
      static_cast<std::ptrdiff_t>(rs.probes.size() + rs.rays.size());
  for (std::ptrdiff_t i = 0; i < total; ++i)
    if (!sample_passes(f, rs, r, static_cast<std::size_t>(i))) return i;
  return -1;
}

std::ptrdiff_t scan_first_failure_parallel(const HoloMap& f, const RaySet& rs,
                                           double r) {
  const std::ptrdiff_t total =
      static_cast<std::ptrdiff_t>(rs.probes.size() + rs.rays.size());
  // Blocks scan in order so the min-index reduction matches the serial
  // kernel exactly while still exiting early on failing trials.
  constexpr std::ptrdiff_t kBlock = 8192;
  for (std::ptrdiff_t start = 0; start < total; start += kBlock) {
    const std::ptrdiff_t end = std::min(start + kBlock, total);
    std::ptrdiff_t first = end;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : first)
#endif
    for (std::ptrdiff_t i = start; i < end; ++i) {
      if (!sample_passes(f, rs, r, static_cast<std::size_t>(i)))
        first = std::min(first, i);
    }
    if (first < end) return first;
  }
  return -1;
}

std::ptrdiff_t scan_first_failure(const HoloMap& f, const RaySet& rs, double r) {
#ifdef _OPENMP
  if (rs.rays.size() > 2048) return scan_first_failure_parallel(f, rs, r);
#endif
  return scan_first_failure_serial(f, rs, r);
}

}  // namespace sqz
