#include "sqz/metrics.hpp"

#include <cmath>
#include <limits>

#include "sqz/maps.hpp"

namespace sqz {

double sigma(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw RangeError("sigma: requires 0 <= x < 1");
  return std::log1p(x) - std::log1p(-x);
}

double sigma_inv(double y) {
  if (!(y >= 0.0)) throw RangeError("sigma_inv: requires y >= 0");
  double v = std::tanh(0.5 * y);
  if (v >= 1.0) v = std::nextafter(1.0, 0.0);
  return v;
}

double poincare_disk(Complex a, Complex b) {
  if (!(std::abs(a) < 1.0 && std::abs(b) < 1.0))
    throw ContractViolation("poincare_disk: points must lie in the unit disk");
  const double num = std::abs(a - b);
  const double den = std::abs(1.0 - std::conj(a) * b);
  return sigma(num / den);
}

namespace {

double kobayashi_impl(const DomainSpec& d, const CVector& a, const CVector& b) {
  switch (d.kind()) {
    case DomainKind::Ball: {
      if (a.squaredNorm() == 0.0) return sigma(b.norm());
      HoloMap phi = ball_automorphism(a);
      return sigma(phi.forward(b).norm());
    }
    case DomainKind::Polydisk: {
      const auto& p = d.as<PolydiskSpec>();
      double best = 0.0;
      for (int j = 0; j < p.n; ++j)
        best = std::max(best, poincare_disk(a[j] / p.radii[j], b[j] / p.radii[j]));
      return best;
    }
    case DomainKind::Product: {
      const auto& p = d.as<ProductSpec>();
      double best = 0.0;
      Eigen::Index off = 0;
      for (const auto& f : p.factors) {
        const int nf = dimension(f);
        best = std::max(
            best, kobayashi_impl(f, a.segment(off, nf), b.segment(off, nf)));
        off += nf;
      }
      return best;
    }
    default:
      throw UnsupportedDomain(
          "kobayashi: supported on balls, polydisks and their products only");
  }
}

}  // namespace

double kobayashi(const DomainSpec& d, const CVector& a, const CVector& b) {
  if (!membership(d, a) || !membership(d, b))
    throw ContractViolation("kobayashi: both points must lie in the domain");
  return kobayashi_impl(d, a, b);
}

double kobayashi_to_set(const DomainSpec& ambient, const CVector& z,
                        const std::vector<CVector>& points) {
  if (points.empty())
    throw ContractViolation("kobayashi_to_set: empty point set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : points) best = std::min(best, kobayashi(ambient, z, a));
  return best;
}

}  // namespace sqz
