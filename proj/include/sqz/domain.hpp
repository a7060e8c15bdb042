#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sqz/errors.hpp"
#include "sqz/types.hpp"

namespace sqz {

// Positive-definiteness margin for the Cartan membership tests. Points whose
// defining matrix has smallest eigenvalue within the margin are classified
// as outside, so inscribed-radius certification never over-claims inclusion.
inline constexpr double kPdMargin = 1e-10;

// Tolerance for validating that a user-supplied matrix is (skew-)symmetric
// before packing it into domain coordinates.
inline constexpr double kSymmetryTol = 1e-12;

enum class DomainKind {
  Ball,
  Polydisk,
  CartanI,
  CartanII,
  CartanIII,
  CartanIV,
  Puncture,
  Product,
};

struct DomainNode;

// Immutable, cheaply copyable description of a bounded domain in ℂⁿ.
// Construct through the static factories; they enforce the structural
// invariants (shape parameters, puncture points inside the ambient domain,
// product arity) and throw ContractViolation when violated.
class DomainSpec {
 public:
  static DomainSpec ball(int n);
  static DomainSpec polydisk(int n);
  static DomainSpec polydisk(int n, std::vector<double> radii);
  static DomainSpec cartan_i(int r, int s);
  static DomainSpec cartan_ii(int p);
  static DomainSpec cartan_iii(int q);
  static DomainSpec cartan_iv(int n);
  static DomainSpec puncture(DomainSpec ambient, std::vector<CVector> points);
  static DomainSpec product(std::vector<DomainSpec> factors);

  DomainKind kind() const;
  int dimension() const;

  template <class T>
  const T& as() const;
  template <class T>
  const T* get_if() const;

  // Compact human-readable tag, e.g. "B^3", "D^2", "R_I(2,3)", "B^2\{1 pt}".
  std::string describe() const;

 private:
  explicit DomainSpec(std::shared_ptr<const DomainNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const DomainNode> node_;
};

struct BallSpec {
  int n;
};

struct PolydiskSpec {
  int n;
  std::vector<double> radii;  // per-coordinate radii, length n
};

struct CartanISpec {
  int r, s;  // r×s matrices, r ≤ s
};

struct CartanIISpec {
  int p;  // symmetric p×p
};

struct CartanIIISpec {
  int q;  // skew-symmetric q×q, q ≥ 2
};

struct CartanIVSpec {
  int n;  // quadric in ℂⁿ, n ≥ 2
};

struct PunctureSpec {
  DomainSpec ambient;
  std::vector<CVector> points;  // finite, pairwise distinct, inside ambient
};

struct ProductSpec {
  std::vector<DomainSpec> factors;  // at least two
};

struct DomainNode {
  std::variant<BallSpec, PolydiskSpec, CartanISpec, CartanIISpec,
               CartanIIISpec, CartanIVSpec, PunctureSpec, ProductSpec>
      v;
};

template <class T>
const T& DomainSpec::as() const {
  return std::get<T>(node_->v);
}

template <class T>
const T* DomainSpec::get_if() const {
  return std::get_if<T>(&node_->v);
}

// True iff z lies in the open domain. Cartan I–III test that I − Z·Z̄ᵀ is
// Hermitian positive definite with smallest eigenvalue > kPdMargin; Cartan IV
// uses the standard quadric inequalities. Throws ContractViolation on a
// dimension mismatch. Non-finite coordinates are classified as outside.
bool membership(const DomainSpec& d, const CVector& z);

int dimension(const DomainSpec& d);

// Number m of independent polydisk directions the domain supports:
// m(R_I(r,s)) = r, m(R_II(p)) = p, m(R_III(q)) = ⌊q/2⌋, m(R_IV(n)) = 2.
// Only defined for the Cartan kinds; throws UnsupportedDomain otherwise.
int polydisk_direction_count(const DomainSpec& d);

// True for the domains whose automorphism group acts transitively: balls,
// polydisks, the Cartan domains, and products of homogeneous factors.
// Removing points destroys transitivity, so punctured domains are not
// homogeneous.
bool is_homogeneous(const DomainSpec& d);

bool is_cartan(const DomainSpec& d);

// Reshape packed coordinates into the matrix a Cartan domain is defined by:
// row-major r×s for type I, upper-triangle packing (diagonal included) for
// the symmetric type II, strict-upper-triangle packing for the
// skew-symmetric type III.
CMatrix to_cartan_matrix(const DomainSpec& d, const CVector& z);

// Inverse of to_cartan_matrix. Validates shape and the (skew-)symmetry of Z
// within kSymmetryTol; throws MalformedInput when violated.
CVector from_cartan_matrix(const DomainSpec& d, const CMatrix& Z);

// Representative points of the excluded set, as full vectors. A punctured
// product factor excludes a whole slice; its representative keeps the other
// blocks at `center`. Empty for domains without punctures.
std::vector<CVector> excluded_representatives(const DomainSpec& d,
                                              const CVector& center);

}  // namespace sqz
