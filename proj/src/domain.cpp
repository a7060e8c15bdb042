#include "sqz/domain.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <utility>

namespace sqz {
namespace {

std::shared_ptr<const DomainNode> make_node(DomainNode&& n) {
  return std::make_shared<const DomainNode>(std::move(n));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace

DomainSpec DomainSpec::ball(int n) {
  require(n >= 1, "ball: n must be positive");
  return DomainSpec(make_node({BallSpec{n}}));
}

DomainSpec DomainSpec::polydisk(int n) {
  require(n >= 1, "polydisk: n must be positive");
  return DomainSpec(make_node({PolydiskSpec{n, std::vector<double>(n, 1.0)}}));
}

DomainSpec DomainSpec::polydisk(int n, std::vector<double> radii) {
  require(n >= 1, "polydisk: n must be positive");
  require(static_cast<int>(radii.size()) == n,
          "polydisk: radii length must equal n");
  for (double r : radii) require(r > 0.0, "polydisk: radii must be positive");
  return DomainSpec(make_node({PolydiskSpec{n, std::move(radii)}}));
}

DomainSpec DomainSpec::cartan_i(int r, int s) {
  require(r >= 1 && s >= 1, "cartan_i: r and s must be positive");
  require(r <= s, "cartan_i: requires r <= s");
  return DomainSpec(make_node({CartanISpec{r, s}}));
}

DomainSpec DomainSpec::cartan_ii(int p) {
  require(p >= 1, "cartan_ii: p must be positive");
  return DomainSpec(make_node({CartanIISpec{p}}));
}

DomainSpec DomainSpec::cartan_iii(int q) {
  require(q >= 2, "cartan_iii: requires q >= 2");
  return DomainSpec(make_node({CartanIIISpec{q}}));
}

DomainSpec DomainSpec::cartan_iv(int n) {
  // n = 1 degenerates to the disk, where the type-IV direction count m = 2
  // no longer makes sense.
  require(n >= 2, "cartan_iv: requires n >= 2");
  return DomainSpec(make_node({CartanIVSpec{n}}));
}

DomainSpec DomainSpec::puncture(DomainSpec ambient, std::vector<CVector> points) {
  require(!points.empty(), "puncture: needs at least one point");
  const int n = ambient.dimension();
  for (std::size_t i = 0; i < points.size(); ++i) {
    require(points[i].size() == n, "puncture: point dimension mismatch");
    require(membership(ambient, points[i]),
            "puncture: point must lie inside the ambient domain");
    for (std::size_t j = 0; j < i; ++j)
      require(!exactly_equal(points[i], points[j]),
              "puncture: points must be pairwise distinct");
  }
  return DomainSpec(make_node({PunctureSpec{std::move(ambient), std::move(points)}}));
}

DomainSpec DomainSpec::product(std::vector<DomainSpec> factors) {
  require(factors.size() >= 2, "product: needs at least two factors");
  return DomainSpec(make_node({ProductSpec{std::move(factors)}}));
}

DomainKind DomainSpec::kind() const {
  struct Visitor {
    DomainKind operator()(const BallSpec&) const { return DomainKind::Ball; }
    DomainKind operator()(const PolydiskSpec&) const { return DomainKind::Polydisk; }
    DomainKind operator()(const CartanISpec&) const { return DomainKind::CartanI; }
    DomainKind operator()(const CartanIISpec&) const { return DomainKind::CartanII; }
    DomainKind operator()(const CartanIIISpec&) const { return DomainKind::CartanIII; }
    DomainKind operator()(const CartanIVSpec&) const { return DomainKind::CartanIV; }
    DomainKind operator()(const PunctureSpec&) const { return DomainKind::Puncture; }
    DomainKind operator()(const ProductSpec&) const { return DomainKind::Product; }
  };
  return std::visit(Visitor{}, node_->v);
}

int DomainSpec::dimension() const { return sqz::dimension(*this); }

int dimension(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::Ball:
      return d.as<BallSpec>().n;
    case DomainKind::Polydisk:
      return d.as<PolydiskSpec>().n;
    case DomainKind::CartanI: {
      const auto& c = d.as<CartanISpec>();
      return c.r * c.s;
    }
    case DomainKind::CartanII: {
      const int p = d.as<CartanIISpec>().p;
      return p * (p + 1) / 2;
    }
    case DomainKind::CartanIII: {
      const int q = d.as<CartanIIISpec>().q;
      return q * (q - 1) / 2;
    }
    case DomainKind::CartanIV:
      return d.as<CartanIVSpec>().n;
    case DomainKind::Puncture:
      return dimension(d.as<PunctureSpec>().ambient);
    case DomainKind::Product: {
      int total = 0;
      for (const auto& f : d.as<ProductSpec>().factors) total += dimension(f);
      return total;
    }
  }
  throw Error("dimension: unreachable");
}

int polydisk_direction_count(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::CartanI:
      return d.as<CartanISpec>().r;
    case DomainKind::CartanII:
      return d.as<CartanIISpec>().p;
    case DomainKind::CartanIII:
      return d.as<CartanIIISpec>().q / 2;
    case DomainKind::CartanIV:
      return 2;
    default:
      throw UnsupportedDomain(
          "polydisk_direction_count: only defined for Cartan domains");
  }
}

bool is_homogeneous(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::Puncture:
      return false;
    case DomainKind::Product: {
      for (const auto& f : d.as<ProductSpec>().factors)
        if (!is_homogeneous(f)) return false;
      return true;
    }
    default:
      return true;
  }
}

bool is_cartan(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::CartanI:
    case DomainKind::CartanII:
    case DomainKind::CartanIII:
    case DomainKind::CartanIV:
      return true;
    default:
      return false;
  }
}

CMatrix to_cartan_matrix(const DomainSpec& d, const CVector& z) {
  if (z.size() != d.dimension())
    throw ContractViolation("to_cartan_matrix: dimension mismatch");
  switch (d.kind()) {
    case DomainKind::CartanI: {
      const auto& c = d.as<CartanISpec>();
      CMatrix Z(c.r, c.s);
      for (int i = 0; i < c.r; ++i)
        for (int j = 0; j < c.s; ++j) Z(i, j) = z[i * c.s + j];
      return Z;
    }
    case DomainKind::CartanII: {
      const int p = d.as<CartanIISpec>().p;
      CMatrix Z(p, p);
      int k = 0;
      for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) {
          Z(i, j) = z[k];
          Z(j, i) = z[k];
          ++k;
        }
      return Z;
    }
    case DomainKind::CartanIII: {
      const int q = d.as<CartanIIISpec>().q;
      CMatrix Z = CMatrix::Zero(q, q);
      int k = 0;
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
          Z(i, j) = z[k];
          Z(j, i) = -z[k];
          ++k;
        }
      return Z;
    }
    default:
      throw UnsupportedDomain("to_cartan_matrix: no matrix layout for this kind");
  }
}

CVector from_cartan_matrix(const DomainSpec& d, const CMatrix& Z) {
  switch (d.kind()) {
    case DomainKind::CartanI: {
      const auto& c = d.as<CartanISpec>();
      if (Z.rows() != c.r || Z.cols() != c.s)
        throw MalformedInput("from_cartan_matrix: expected r x s matrix");
      CVector z(c.r * c.s);
      for (int i = 0; i < c.r; ++i)
        for (int j = 0; j < c.s; ++j) z[i * c.s + j] = Z(i, j);
      return z;
    }
    case DomainKind::CartanII: {
      const int p = d.as<CartanIISpec>().p;
      if (Z.rows() != p || Z.cols() != p)
        throw MalformedInput("from_cartan_matrix: expected p x p matrix");
      if ((Z - Z.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
        throw MalformedInput("from_cartan_matrix: matrix is not symmetric");
      CVector z(p * (p + 1) / 2);
      int k = 0;
      for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) z[k++] = Z(i, j);
      return z;
    }
    case DomainKind::CartanIII: {
      const int q = d.as<CartanIIISpec>().q;
      if (Z.rows() != q || Z.cols() != q)
        throw MalformedInput("from_cartan_matrix: expected q x q matrix");
      if ((Z + Z.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
        throw MalformedInput("from_cartan_matrix: matrix is not skew-symmetric");
      CVector z(q * (q - 1) / 2);
      int k = 0;
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) z[k++] = Z(i, j);
      return z;
    }
    default:
      throw UnsupportedDomain("from_cartan_matrix: no matrix layout for this kind");
  }
}

namespace {

// Smallest eigenvalue of I − Z·Z̄ᵀ exceeds the margin. The matrix is
// Hermitian by construction, so the self-adjoint solver applies.
bool contraction_test(const CMatrix& Z) {
  CMatrix H = CMatrix::Identity(Z.rows(), Z.rows()) - Z * Z.adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return false;
  return es.eigenvalues().minCoeff() > kPdMargin;
}

}  // namespace

bool membership(const DomainSpec& d, const CVector& z) {
  if (z.size() != d.dimension())
    throw ContractViolation("membership: dimension mismatch");
  if (!z.allFinite()) return false;
  switch (d.kind()) {
    case DomainKind::Ball:
      return z.squaredNorm() < 1.0;
    case DomainKind::Polydisk: {
      const auto& p = d.as<PolydiskSpec>();
      for (int j = 0; j < p.n; ++j)
        if (!(std::abs(z[j]) < p.radii[j])) return false;
      return true;
    }
    case DomainKind::CartanI:
    case DomainKind::CartanII:
    case DomainKind::CartanIII:
      return contraction_test(to_cartan_matrix(d, z));
    case DomainKind::CartanIV: {
      // Hua's inequalities: 1 + |zz'|² − 2 Σ|z_i|² > 0 and 1 − |zz'| > 0,
      // with zz' = Σ z_i² (plain transpose, no conjugation).
      Complex u = (z.transpose() * z).value();
      const double v = z.squaredNorm();
      const double au = std::abs(u);
      return (1.0 + au * au - 2.0 * v > kPdMargin) && (1.0 - au > kPdMargin);
    }
    case DomainKind::Puncture: {
      const auto& p = d.as<PunctureSpec>();
      if (!membership(p.ambient, z)) return false;
      for (const auto& pt : p.points)
        if (exactly_equal(z, pt)) return false;
      return true;
    }
    case DomainKind::Product: {
      const auto& p = d.as<ProductSpec>();
      Eigen::Index off = 0;
      for (const auto& f : p.factors) {
        const int nf = dimension(f);
        if (!membership(f, z.segment(off, nf))) return false;
        off += nf;
      }
      return true;
    }
  }
  throw Error("membership: unreachable");
}

namespace {

void collect_excluded(const DomainSpec& d, const CVector& center,
                      Eigen::Index off, std::vector<CVector>& out) {
  if (const auto* p = d.get_if<PunctureSpec>()) {
    for (const auto& pt : p->points) {
      CVector full = center;
      full.segment(off, pt.size()) = pt;
      out.push_back(std::move(full));
    }
    collect_excluded(p->ambient, center, off, out);
    return;
  }
  if (const auto* p = d.get_if<ProductSpec>()) {
    Eigen::Index o = off;
    for (const auto& f : p->factors) {
      collect_excluded(f, center, o, out);
      o += dimension(f);
    }
  }
}

}  // namespace

std::vector<CVector> excluded_representatives(const DomainSpec& d,
                                              const CVector& center) {
  if (center.size() != d.dimension())
    throw ContractViolation("excluded_representatives: dimension mismatch");
  std::vector<CVector> out;
  collect_excluded(d, center, 0, out);
  return out;
}

std::string DomainSpec::describe() const {
  std::ostringstream os;
  switch (kind()) {
    case DomainKind::Ball:
      os << "B^" << as<BallSpec>().n;
      break;
    case DomainKind::Polydisk: {
      const auto& p = as<PolydiskSpec>();
      os << "D^" << p.n;
      bool unit = true;
      for (double r : p.radii) unit = unit && r == 1.0;
      if (!unit) {
        os << "(r=";
        for (std::size_t i = 0; i < p.radii.size(); ++i)
          os << (i ? "," : "") << p.radii[i];
        os << ")";
      }
      break;
    }
    case DomainKind::CartanI: {
      const auto& c = as<CartanISpec>();
      os << "R_I(" << c.r << "," << c.s << ")";
      break;
    }
    case DomainKind::CartanII:
      os << "R_II(" << as<CartanIISpec>().p << ")";
      break;
    case DomainKind::CartanIII:
      os << "R_III(" << as<CartanIIISpec>().q << ")";
      break;
    case DomainKind::CartanIV:
      os << "R_IV(" << as<CartanIVSpec>().n << ")";
      break;
    case DomainKind::Puncture: {
      const auto& p = as<PunctureSpec>();
      os << p.ambient.describe() << "\\{" << p.points.size() << " pt"
         << (p.points.size() > 1 ? "s" : "") << "}";
      break;
    }
    case DomainKind::Product: {
      const auto& p = as<ProductSpec>();
      for (std::size_t i = 0; i < p.factors.size(); ++i)
        os << (i ? " x " : "") << p.factors[i].describe();
      break;
    }
  }
  return os.str();
}

}  // namespace sqz
