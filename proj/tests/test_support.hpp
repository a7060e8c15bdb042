#pragma once

// Shared helpers for the test suites: seeded generators for in-domain
// points and small random matrices. Deterministic by construction — every
// suite passes its own fixed seed.

#include <random>

#include "sqz/domain.hpp"
#include "sqz/types.hpp"

namespace sqz::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_unit_phase(Rng& rng) {
  const double a = uniform(rng, 0.0, 6.283185307179586);
  return Complex(std::cos(a), std::sin(a));
}

// Complex vector with coordinates uniform in the square [-b, b]^2.
inline CVector random_box_vector(Rng& rng, int n, double b) {
  CVector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = Complex(uniform(rng, -b, b), uniform(rng, -b, b));
  return v;
}

// Point of the open ball with norm at most max_norm (default keeps a safety
// margin from the boundary so metric tests stay well-conditioned).
inline CVector random_in_ball(Rng& rng, int n, double max_norm = 0.9) {
  CVector v = random_box_vector(rng, n, 1.0);
  const double target = max_norm * std::pow(uniform(rng, 0.0, 1.0),
                                            1.0 / (2.0 * n));
  return v * (target / v.norm());
}

inline CVector random_in_polydisk(Rng& rng, int n, double max_abs = 0.9) {
  CVector v(n);
  for (int i = 0; i < n; ++i) {
    const double r = max_abs * std::sqrt(uniform(rng, 0.0, 1.0));
    v[i] = r * random_unit_phase(rng);
  }
  return v;
}

// In-domain point for any supported domain spec. Cartan points are drawn by
// scaling a random matrix below unit operator norm.
inline CVector random_in_domain(Rng& rng, const DomainSpec& d,
                                double margin = 0.9) {
  switch (d.kind()) {
    case DomainKind::Ball:
      return random_in_ball(rng, d.dimension(), margin);
    case DomainKind::Polydisk: {
      const auto& p = d.as<PolydiskSpec>();
      CVector v = random_in_polydisk(rng, p.n, margin);
      for (int i = 0; i < p.n; ++i) v[i] *= p.radii[i];
      return v;
    }
    case DomainKind::CartanI:
    case DomainKind::CartanII:
    case DomainKind::CartanIII: {
      CVector z = random_box_vector(rng, d.dimension(), 1.0);
      CMatrix Z = to_cartan_matrix(d, z);
      const double op = Z.jacobiSvd().singularValues().maxCoeff();
      const double scale = margin * uniform(rng, 0.1, 1.0) / op;
      return CVector(z * scale);
    }
    case DomainKind::CartanIV: {
      CVector z = random_box_vector(rng, d.dimension(), 1.0);
      double s = 0.5;
      while (!membership(d, CVector(z * s))) s *= 0.5;
      return CVector(z * s * uniform(rng, 0.2, 1.0));
    }
    case DomainKind::Puncture: {
      const auto& p = d.as<PunctureSpec>();
      for (int tries = 0; tries < 64; ++tries) {
        CVector z = random_in_domain(rng, p.ambient, margin);
        if (membership(d, z)) return z;
      }
      throw ContractViolation("random_in_domain: puncture sampling failed");
    }
    case DomainKind::Product: {
      const auto& p = d.as<ProductSpec>();
      CVector z(d.dimension());
      Eigen::Index off = 0;
      for (const auto& f : p.factors) {
        const int nf = dimension(f);
        z.segment(off, nf) = random_in_domain(rng, f, margin);
        off += nf;
      }
      return z;
    }
  }
  throw ContractViolation("random_in_domain: unreachable");
}

}  // namespace sqz::testing
