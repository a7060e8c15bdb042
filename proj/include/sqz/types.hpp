#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>

namespace sqz {

using Complex = std::complex<double>;

// Complex coordinate vector (z ∈ ℂⁿ) and complex matrix. Dimension metadata
// lives in the Eigen types themselves.
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline CVector cvec(std::initializer_list<Complex> entries) {
  CVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Complex& c : entries) v[i++] = c;
  return v;
}

inline CVector zero_vector(Eigen::Index n) { return CVector::Zero(n); }

// max_j |v_j| — the polydisk (sup) norm.
inline double sup_norm(const CVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Coordinate-wise exact equality, used for puncture exclusion and the
// exact-preimage table. Deliberately bitwise-strict (no tolerance).
inline bool exactly_equal(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace sqz
