#include <cmath>
#include <sstream>

#include "sqz/bounds.hpp"
#include "sqz/maps.hpp"

namespace sqz {
namespace {

// Componentwise disk automorphisms sending z to 0; image is the whole 𝔻ⁿ.
HoloMap polydisk_candidate(const DomainSpec& d, const CVector& z) {
  const auto& spec = d.as<PolydiskSpec>();
  const int n = spec.n;
  const std::vector<double> radii = spec.radii;
  CVector a(n);
  for (int j = 0; j < n; ++j) a[j] = z[j] / radii[j];

  HoloMap m;
  m.source = d;
  m.target = DomainSpec::polydisk(n);
  m.forward = [a, radii, n](const CVector& zz) {
    CVector w(n);
    for (int j = 0; j < n; ++j) {
      const Complex u = zz[j] / radii[j];
      w[j] = (u - a[j]) / (1.0 - std::conj(a[j]) * u);
    }
    return w;
  };
  m.inverse = [a, radii, n](const CVector& w) {
    CVector zz(n);
    for (int j = 0; j < n; ++j) {
      const Complex u = (w[j] + a[j]) / (1.0 + std::conj(a[j]) * w[j]);
      zz[j] = radii[j] * u;
    }
    return zz;
  };
  m.descriptor = "polydisk_automorphism";
  return m;
}

// φ_z viewed inside 𝔻ⁿ; image is the whole ball, inscribed polyradius 1/√n.
HoloMap ball_candidate(const DomainSpec& d, const CVector& z) {
  HoloMap m = ball_automorphism(z);
  m.source = d;  // keep the caller's spec (Ball or R_I(1,s))
  m.target = DomainSpec::polydisk(d.dimension());
  return m;
}

bool is_ball_coordinates(const DomainSpec& d) {
  if (d.kind() == DomainKind::Ball) return true;
  const auto* c = d.get_if<CartanISpec>();
  return c && c->r == 1;
}

// Ambient candidate restricted to the punctured domain. For ball ambients,
// a unitary aligns the nearest excluded image point to the first axis so
// its sup-norm matches its Euclidean norm; the puncture images are then
// registered as exact preimages.
HoloMap puncture_candidate(const DomainSpec& d, const CVector& z) {
  const auto& spec = d.as<PunctureSpec>();
  const DomainSpec& ambient = spec.ambient;

  HoloMap base;
  if (is_ball_coordinates(ambient)) {
    base = ball_candidate(ambient, z);
    CVector nearest = base.forward(spec.points.front());
    for (const auto& p : spec.points) {
      CVector img = base.forward(p);
      if (img.norm() < nearest.norm()) nearest = img;
    }
    base = compose(unitary_map(align_to_first_axis(nearest)), base);
  } else if (ambient.kind() == DomainKind::Polydisk) {
    base = polydisk_candidate(ambient, z);
  } else {
    throw UnsupportedDomain(
        "candidate_embedding: punctures supported over ball and polydisk "
        "ambients only");
  }

  base.source = d;
  std::vector<std::pair<CVector, CVector>> table;
  table.reserve(spec.points.size());
  for (const auto& p : spec.points) table.emplace_back(base.forward(p), p);
  base = with_exact_preimages(std::move(base), std::move(table));
  base.descriptor = "restricted(" + base.descriptor + ")";
  return base;
}

HoloMap product_candidate(const DomainSpec& d, const CVector& z) {
  const auto& spec = d.as<ProductSpec>();
  std::vector<HoloMap> subs;
  std::vector<double> inv_lowers;
  Eigen::Index off = 0;
  for (const auto& factor : spec.factors) {
    const int nf = dimension(factor);
    const CVector zf = z.segment(off, nf);
    subs.push_back(candidate_embedding(factor, zf));
    const double lo = evaluate_T(factor, zf).lower;
    if (!(lo > 0.0))
      throw UnsupportedDomain(
          "candidate_embedding: product factor has no positive lower bound");
    inv_lowers.push_back(1.0 / lo);
    off += nf;
  }
  HoloMap m = product_map(std::move(subs),
                          product_weights(WeightPolicy::Polydisk, inv_lowers));
  m.source = d;

  auto excluded = excluded_representatives(d, z);
  if (!excluded.empty()) {
    std::vector<std::pair<CVector, CVector>> table;
    table.reserve(excluded.size());
    for (auto& p : excluded) table.emplace_back(m.forward(p), std::move(p));
    m = with_exact_preimages(std::move(m), std::move(table));
  }
  return m;
}

}  // namespace

HoloMap candidate_embedding(const DomainSpec& d, const CVector& z) {
  if (!membership(d, z))
    throw ContractViolation("candidate_embedding: point must lie in the domain");
  switch (d.kind()) {
    case DomainKind::Polydisk:
      return polydisk_candidate(d, z);
    case DomainKind::Ball:
      return ball_candidate(d, z);
    case DomainKind::CartanI:
      if (d.as<CartanISpec>().r == 1) return ball_candidate(d, z);
      throw UnsupportedDomain(
          "candidate_embedding: Cartan domains beyond R_I(1,s) are unsupported");
    case DomainKind::Puncture:
      return puncture_candidate(d, z);
    case DomainKind::Product:
      return product_candidate(d, z);
    default:
      throw UnsupportedDomain(
          "candidate_embedding: unsupported domain kind");
  }
}

}  // namespace sqz
