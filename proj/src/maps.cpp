#include "sqz/maps.hpp"

#include <cmath>
#include <sstream>

namespace sqz {

CVector HoloMap::apply(const CVector& z) const {
  if (z.size() != source.dimension())
    throw ContractViolation("HoloMap::apply: dimension mismatch");
  return forward(z);
}

CVector HoloMap::apply_inverse(const CVector& w) const {
  if (!inverse) throw UnsupportedMap("HoloMap: no inverse available");
  if (w.size() != target.dimension())
    throw ContractViolation("HoloMap::apply_inverse: dimension mismatch");
  if (exact_preimages) {
    for (const auto& [img, src] : *exact_preimages)
      if (exactly_equal(img, w)) return src;
  }
  return inverse(w);
}

HoloMap identity_map(DomainSpec d) {
  HoloMap m;
  m.source = d;
  m.target = std::move(d);
  m.forward = [](const CVector& z) { return z; };
  m.inverse = [](const CVector& z) { return z; };
  m.descriptor = "identity";
  return m;
}

HoloMap mobius_disk(Complex a) {
  if (!(std::abs(a) < 1.0)) throw RangeError("mobius_disk: requires |a| < 1");
  HoloMap m;
  m.source = DomainSpec::polydisk(1);
  m.target = DomainSpec::polydisk(1);
  const Complex ac = std::conj(a);
  m.forward = [a, ac](const CVector& z) {
    CVector w(1);
    w[0] = (z[0] - a) / (1.0 - ac * z[0]);
    return w;
  };
  m.inverse = [a, ac](const CVector& w) {
    CVector z(1);
    z[0] = (w[0] + a) / (1.0 + ac * w[0]);
    return z;
  };
  std::ostringstream os;
  os << "mobius(" << a.real() << (a.imag() < 0 ? "-" : "+")
     << std::abs(a.imag()) << "i)";
  m.descriptor = os.str();
  return m;
}

HoloMap disk_automorphism(Complex center, double radius) {
  if (!(radius > 0.0)) throw RangeError("disk_automorphism: radius must be positive");
  if (!(std::abs(center) < radius))
    throw RangeError("disk_automorphism: center must lie inside the disk");
  const Complex a = center / radius;
  HoloMap mob = mobius_disk(a);
  HoloMap m;
  m.source = DomainSpec::polydisk(1, {radius});
  m.target = DomainSpec::polydisk(1);
  m.forward = [mob, radius](const CVector& z) {
    CVector u(1);
    u[0] = z[0] / radius;
    return mob.forward(u);
  };
  m.inverse = [mob, radius](const CVector& w) {
    CVector z = mob.inverse(w);
    z[0] *= radius;
    return z;
  };
  m.descriptor = "disk_automorphism";
  return m;
}

HoloMap ball_automorphism(CVector a) {
  const double norm2 = a.squaredNorm();
  if (!(norm2 < 1.0)) throw RangeError("ball_automorphism: requires ||a|| < 1");
  const int n = static_cast<int>(a.size());
  const DomainSpec ball = DomainSpec::ball(n);

  HoloMap m;
  m.source = ball;
  m.target = ball;
  if (norm2 == 0.0) {
    // φ_0 is the identity.
    m.forward = [](const CVector& w) { return w; };
    m.inverse = m.forward;
    m.descriptor = "ball_automorphism(0)";
    return m;
  }
  const double s = std::sqrt(1.0 - norm2);
  auto phi = [a, norm2, s](const CVector& w) -> CVector {
    // ⟨w,a⟩ = Σ w_i · conj(a_i)
    const Complex inner = a.dot(w);  // Eigen conjugates the left argument
    const Complex coeff = inner / norm2;
    CVector proj = coeff * a;                   // P_a w
    CVector num = a - proj - s * (w - proj);    // a − P_a w − s·Q_a w
    return num / (1.0 - inner);
  };
  m.forward = phi;
  m.inverse = phi;  // involution
  std::ostringstream os;
  os << "ball_automorphism(|a|=" << std::sqrt(norm2) << ")";
  m.descriptor = os.str();
  return m;
}

HoloMap scale_map(int n, double c) {
  if (!(c > 0.0)) throw RangeError("scale_map: factor must be positive");
  if (n < 1) throw ContractViolation("scale_map: dimension must be positive");
  HoloMap m;
  m.source = DomainSpec::polydisk(n);
  m.target = DomainSpec::polydisk(n);
  m.forward = [c](const CVector& z) { return CVector(c * z); };
  m.inverse = [c](const CVector& w) { return CVector(w / c); };
  std::ostringstream os;
  os << "scale(" << c << ")";
  m.descriptor = os.str();
  return m;
}

HoloMap unitary_map(CMatrix u) {
  if (u.rows() != u.cols() || u.rows() < 1)
    throw ContractViolation("unitary_map: expected a square matrix");
  const Eigen::Index n = u.rows();
  if ((u.adjoint() * u - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw ContractViolation("unitary_map: matrix is not unitary");
  HoloMap m;
  m.source = DomainSpec::ball(static_cast<int>(n));
  m.target = DomainSpec::ball(static_cast<int>(n));
  CMatrix uh = u.adjoint();
  m.forward = [u = std::move(u)](const CVector& z) { return CVector(u * z); };
  m.inverse = [uh = std::move(uh)](const CVector& w) { return CVector(uh * w); };
  m.descriptor = "unitary";
  return m;
}

CMatrix align_to_first_axis(const CVector& v) {
  const Eigen::Index n = v.size();
  if (n < 1 || !(v.norm() > 0.0))
    throw ContractViolation("align_to_first_axis: needs a nonzero vector");
  CVector u = v / v.norm();
  const Complex u0 = u[0];
  // Reflect toward the opposite phase so ||w||^2 = 2(1+|u_1|) never cancels.
  const Complex mu = std::abs(u0) > 0.0 ? -u0 / std::abs(u0) : Complex(-1.0, 0.0);
  CVector w = u;
  w[0] -= mu;
  CMatrix h = CMatrix::Identity(n, n);
  h -= (2.0 / w.squaredNorm()) * (w * w.adjoint());
  // h·u = mu·e1; peel the phase off the first coordinate.
  CMatrix phase = CMatrix::Identity(n, n);
  phase(0, 0) = std::conj(mu);
  return phase * h;
}

HoloMap recenter(const HoloMap& f, const CVector& w, double eps) {
  if (!(eps > 0.0)) throw RangeError("recenter: eps must be positive");
  CVector fw = f.apply(w);
  if (sup_norm(fw) >= eps)
    throw ContractViolation("recenter: requires |f_j(w)| < eps for every j");
  const double denom = 1.0 + eps;
  HoloMap m;
  m.source = f.source;
  m.target = DomainSpec::polydisk(f.target.dimension());
  m.forward = [f, fw, denom](const CVector& z) {
    return CVector((f.forward(z) - fw) / denom);
  };
  if (f.has_inverse()) {
    m.inverse = [f, fw, denom](const CVector& y) {
      return f.inverse(CVector(y * denom + fw));
    };
  }
  m.descriptor = "recenter(" + f.descriptor + ")";
  return m;
}

HoloMap compose(HoloMap outer, HoloMap inner) {
  if (inner.target.dimension() != outer.source.dimension())
    throw ContractViolation("compose: dimensions do not chain");
  HoloMap m;
  m.source = inner.source;
  m.target = outer.target;
  m.forward = [o = outer.forward, i = inner.forward](const CVector& z) {
    return o(i(z));
  };
  if (outer.has_inverse() && inner.has_inverse()) {
    m.inverse = [o = outer.inverse, i = inner.inverse](const CVector& w) {
      return i(o(w));
    };
  }
  m.descriptor = "compose(" + outer.descriptor + ", " + inner.descriptor + ")";
  return m;
}

std::vector<double> product_weights(WeightPolicy policy,
                                    const std::vector<double>& factor_radii) {
  if (factor_radii.empty())
    throw ContractViolation("product_weights: empty radius list");
  for (double r : factor_radii)
    if (!(r > 0.0)) throw RangeError("product_weights: radii must be positive");
  double denom = 0.0;
  if (policy == WeightPolicy::Ball) {
    for (double r : factor_radii) denom += r * r;
    denom = std::sqrt(denom);
  } else {
    for (double r : factor_radii) denom = std::max(denom, r);
  }
  std::vector<double> w;
  w.reserve(factor_radii.size());
  for (double r : factor_radii) w.push_back(r / denom);
  return w;
}

HoloMap product_map(std::vector<HoloMap> factors, std::vector<double> weights) {
  if (factors.empty()) throw ContractViolation("product_map: no factor maps");
  if (factors.size() != weights.size())
    throw ContractViolation("product_map: one weight per factor required");
  for (double w : weights)
    if (!(w > 0.0 && w <= 1.0))
      throw ContractViolation("product_map: weights must lie in (0,1]");

  std::vector<int> dims;
  int total = 0;
  bool invertible = true;
  for (const auto& f : factors) {
    if (f.source.dimension() != f.target.dimension())
      throw ContractViolation("product_map: factor source/target dimensions differ");
    dims.push_back(f.source.dimension());
    total += dims.back();
    invertible = invertible && f.has_inverse();
  }

  HoloMap m;
  if (factors.size() == 1) {
    m.source = factors[0].source;
  } else {
    std::vector<DomainSpec> sources;
    sources.reserve(factors.size());
    for (const auto& f : factors) sources.push_back(f.source);
    m.source = DomainSpec::product(std::move(sources));
  }
  m.target = DomainSpec::polydisk(total);

  auto fwd = [factors, weights, dims, total](const CVector& z) {
    CVector out(total);
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out.segment(off, dims[i]) =
          weights[i] * factors[i].forward(z.segment(off, dims[i]));
      off += dims[i];
    }
    return out;
  };
  m.forward = fwd;
  if (invertible) {
    m.inverse = [factors, weights, dims, total](const CVector& w) {
      CVector out(total);
      Eigen::Index off = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out.segment(off, dims[i]) =
            factors[i].inverse(CVector(w.segment(off, dims[i]) / weights[i]));
        off += dims[i];
      }
      return out;
    };
  }
  std::ostringstream os;
  os << "product(";
  for (std::size_t i = 0; i < factors.size(); ++i)
    os << (i ? ", " : "") << weights[i] << "*" << factors[i].descriptor;
  os << ")";
  m.descriptor = os.str();
  return m;
}

HoloMap with_exact_preimages(HoloMap f,
                             std::vector<std::pair<CVector, CVector>> table) {
  f.exact_preimages =
      std::make_shared<const std::vector<std::pair<CVector, CVector>>>(
          std::move(table));
  return f;
}

}  // namespace sqz
