#include "sqz/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sqz/metrics.hpp"

namespace sqz {
namespace {

constexpr double kIntersectTol = 1e-12;
constexpr double kFixedPointTol = 1e-15;
constexpr int kMaxTransferPasses = 4;

BoundInterval make_interval(double lo, double hi, RuleId id) {
  BoundInterval b;
  b.lower = lo;
  b.upper = hi;
  b.provenance = {id};
  return b;
}

BoundInterval make_exact(double v, RuleId id) { return make_interval(v, v, id); }

// Puncture of a plain ball at the origin only — the configuration with
// closed-form T and S values.
const PunctureSpec* as_origin_punctured_ball(const DomainSpec& d) {
  const auto* p = d.get_if<PunctureSpec>();
  if (!p) return nullptr;
  if (p->ambient.kind() != DomainKind::Ball) return nullptr;
  if (p->points.size() != 1) return nullptr;
  if (p->points[0].norm() != 0.0) return nullptr;
  return p;
}

bool is_punctured_ball(const DomainSpec& d) {
  const auto* p = d.get_if<PunctureSpec>();
  return p && p->ambient.kind() == DomainKind::Ball;
}

bool kobayashi_supported(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::Ball:
    case DomainKind::Polydisk:
      return true;
    case DomainKind::Product: {
      for (const auto& f : d.as<ProductSpec>().factors)
        if (!kobayashi_supported(f)) return false;
      return true;
    }
    default:
      return false;
  }
}

// R_I(1,s) is the unit ball in coordinates, so the exact ball values apply.
bool is_ball_like(const DomainSpec& d) {
  if (d.kind() == DomainKind::Ball) return true;
  const auto* c = d.get_if<CartanISpec>();
  return c && c->r == 1;
}

// Closed-form constructive lower bound for T on Cartan/ball/polydisk
// domains and their products (no point dependence; these domains are
// homogeneous).
std::optional<double> closed_form_t_lower(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::Polydisk:
      return 1.0;
    case DomainKind::Ball:
      return 1.0 / std::sqrt(static_cast<double>(d.dimension()));
    case DomainKind::CartanI:
      if (d.as<CartanISpec>().r == 1)
        return 1.0 / std::sqrt(static_cast<double>(d.dimension()));
      [[fallthrough]];
    case DomainKind::CartanII:
    case DomainKind::CartanIII:
    case DomainKind::CartanIV: {
      const double n = static_cast<double>(d.dimension());
      const double m = static_cast<double>(polydisk_direction_count(d));
      return 1.0 / std::sqrt(n * m);
    }
    case DomainKind::Product: {
      double lo = 1.0;
      for (const auto& f : d.as<ProductSpec>().factors) {
        auto v = closed_form_t_lower(f);
        if (!v) return std::nullopt;
        lo = std::min(lo, *v);
      }
      return lo;
    }
    default:
      return std::nullopt;
  }
}

// Exact ball-squeezing constant for Cartan/ball/polydisk factors, or nothing.
std::optional<double> homogeneous_s_value(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::Ball:
      return 1.0;
    case DomainKind::Polydisk:
      return 1.0 / std::sqrt(static_cast<double>(d.dimension()));
    case DomainKind::CartanI:
    case DomainKind::CartanII:
    case DomainKind::CartanIII:
    case DomainKind::CartanIV:
      return 1.0 / std::sqrt(static_cast<double>(polydisk_direction_count(d)));
    case DomainKind::Product: {
      double acc = 0.0;
      for (const auto& f : d.as<ProductSpec>().factors) {
        auto sv = homogeneous_s_value(f);
        if (!sv) return std::nullopt;
        acc += 1.0 / (*sv * *sv);
      }
      return 1.0 / std::sqrt(acc);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::string rule_name(RuleId id) {
  switch (id) {
    case RuleId::ExactPolydisk: return "EXACT_POLYDISK";
    case RuleId::ExactBall: return "EXACT_BALL";
    case RuleId::PuncturedBallT: return "PUNCTURED_BALL_T";
    case RuleId::PuncturedBallS: return "PUNCTURED_BALL_S";
    case RuleId::LemmaRelateA: return "LEMMA_RELATE_A";
    case RuleId::LemmaRelateB: return "LEMMA_RELATE_B";
    case RuleId::AlexanderUpper: return "ALEXANDER_UPPER";
    case RuleId::ExtensionUpper: return "EXTENSION_UPPER";
    case RuleId::CartanT: return "CARTAN_T";
    case RuleId::CartanS: return "CARTAN_S";
    case RuleId::ProductSLower: return "PRODUCT_S_LOWER";
    case RuleId::ProductTLower: return "PRODUCT_T_LOWER";
    case RuleId::CartanProduct: return "CARTAN_PRODUCT";
    case RuleId::TrivialRange: return "TRIVIAL_RANGE";
  }
  return "?";
}

std::optional<RuleBounds> apply_rule(RuleId rule, const DomainSpec& d,
                                     const CVector& z,
                                     const std::optional<Evaluation>& current) {
  const double n = static_cast<double>(d.dimension());
  const double inv_sqrt_n = 1.0 / std::sqrt(n);

  switch (rule) {
    case RuleId::TrivialRange: {
      RuleBounds rb;
      rb.t = make_interval(0.0, 1.0, rule);
      rb.s = make_interval(0.0, 1.0, rule);
      return rb;
    }

    case RuleId::ExactPolydisk: {
      if (d.kind() != DomainKind::Polydisk) return std::nullopt;
      RuleBounds rb;
      rb.t = make_exact(1.0, rule);
      rb.s = make_exact(inv_sqrt_n, rule);
      return rb;
    }

    case RuleId::ExactBall: {
      if (!is_ball_like(d)) return std::nullopt;
      RuleBounds rb;
      rb.t = make_exact(inv_sqrt_n, rule);
      rb.s = make_exact(1.0, rule);
      return rb;
    }

    case RuleId::PuncturedBallT: {
      const auto* p = as_origin_punctured_ball(d);
      if (!p) return std::nullopt;
      const double r = z.norm();
      // Exact on the closed region ‖z‖ ≤ 1/√n; resolve float ties toward
      // the exact value.
      if (r > inv_sqrt_n + kIntersectTol) return std::nullopt;
      RuleBounds rb;
      rb.t = make_exact(std::min(r, inv_sqrt_n), rule);
      return rb;
    }

    case RuleId::PuncturedBallS: {
      if (!as_origin_punctured_ball(d)) return std::nullopt;
      RuleBounds rb;
      rb.s = make_exact(z.norm(), rule);
      return rb;
    }

    case RuleId::LemmaRelateA: {
      if (!current) return std::nullopt;
      RuleBounds rb;
      rb.t = make_interval(current->S.lower * inv_sqrt_n, 1.0, rule);
      return rb;
    }

    case RuleId::LemmaRelateB: {
      if (!current) return std::nullopt;
      RuleBounds rb;
      rb.s = make_interval(current->T.lower * inv_sqrt_n, 1.0, rule);
      return rb;
    }

    case RuleId::AlexanderUpper: {
      if (!is_punctured_ball(d)) return std::nullopt;
      RuleBounds rb;
      rb.t = make_interval(0.0, inv_sqrt_n, rule);
      return rb;
    }

    case RuleId::ExtensionUpper: {
      const auto* p = d.get_if<PunctureSpec>();
      if (!p || !kobayashi_supported(p->ambient)) return std::nullopt;
      const double dist = kobayashi_to_set(p->ambient, z, p->points);
      RuleBounds rb;
      rb.t = make_interval(0.0, sigma_inv(dist), rule);
      return rb;
    }

    case RuleId::CartanT: {
      if (!is_cartan(d)) return std::nullopt;
      const double m = static_cast<double>(polydisk_direction_count(d));
      const double upper = 1.0 / std::sqrt(m);
      RuleBounds rb;
      rb.t = make_interval(inv_sqrt_n * upper, upper, rule);
      return rb;
    }

    case RuleId::CartanS: {
      if (!is_cartan(d)) return std::nullopt;
      const double m = static_cast<double>(polydisk_direction_count(d));
      RuleBounds rb;
      rb.s = make_exact(1.0 / std::sqrt(m), rule);
      return rb;
    }

    case RuleId::ProductSLower: {
      const auto* p = d.get_if<ProductSpec>();
      if (!p) return std::nullopt;
      double acc = 0.0;
      Eigen::Index off = 0;
      for (const auto& f : p->factors) {
        const int nf = dimension(f);
        const double lo = evaluate_pair(f, z.segment(off, nf)).S.lower;
        if (!(lo > 0.0)) return std::nullopt;
        acc += 1.0 / (lo * lo);
        off += nf;
      }
      RuleBounds rb;
      rb.s = make_interval(1.0 / std::sqrt(acc), 1.0, rule);
      return rb;
    }

    case RuleId::ProductTLower: {
      const auto* p = d.get_if<ProductSpec>();
      if (!p) return std::nullopt;
      double lo = 1.0;
      Eigen::Index off = 0;
      for (const auto& f : p->factors) {
        const int nf = dimension(f);
        lo = std::min(lo, evaluate_pair(f, z.segment(off, nf)).T.lower);
        off += nf;
      }
      RuleBounds rb;
      rb.t = make_interval(lo, 1.0, rule);
      return rb;
    }

    case RuleId::CartanProduct: {
      const auto* p = d.get_if<ProductSpec>();
      if (!p) return std::nullopt;
      const auto sD = homogeneous_s_value(d);
      if (!sD) return std::nullopt;
      RuleBounds rb;
      rb.s = make_exact(*sD, rule);
      // The t-interval is stated for products of classical domains, but its
      // upper bound fails whenever a factor already supports a larger
      // explicit embedding (a polydisk factor gives T = 1 while s(D) <= 1/√2,
      // and e.g. B²×B²×B² has the constructive T >= 1/√2 > s(D) = 1/√3).
      // The constructive product embedding is explicit, so where the two
      // collide the t-part is withheld.
      const auto t_lo = closed_form_t_lower(d);
      if (t_lo && *t_lo <= *sD * (1.0 + 1e-12))
        rb.t = make_interval(*sD * inv_sqrt_n, *sD, rule);
      return rb;
    }
  }
  return std::nullopt;
}

BoundInterval intersect(std::span<const BoundInterval> intervals) {
  if (intervals.empty())
    throw ContractViolation("intersect: empty interval list");

  const BoundInterval* lo_src = &intervals.front();
  const BoundInterval* hi_src = &intervals.front();
  double lo = intervals.front().lower;
  double hi = intervals.front().upper;
  for (const auto& b : intervals.subspan(1)) {
    if (b.lower > lo) {
      lo = b.lower;
      lo_src = &b;
    }
    if (b.upper < hi) {
      hi = b.upper;
      hi_src = &b;
    }
  }
  if (lo > hi + kIntersectTol)
    throw InconsistencyError("intersect: empty intersection");
  if (lo > hi) hi = lo;  // float noise between algebraically equal routes

  BoundInterval out;
  out.lower = lo;
  out.upper = hi;
  out.provenance = lo_src->provenance;
  if (hi_src != lo_src)
    out.provenance.insert(out.provenance.end(), hi_src->provenance.begin(),
                          hi_src->provenance.end());
  std::sort(out.provenance.begin(), out.provenance.end());
  out.provenance.erase(
      std::unique(out.provenance.begin(), out.provenance.end()),
      out.provenance.end());
  return out;
}

namespace {

// Intersect an accumulated interval with a rule output, keeping the
// first-achiever provenance discipline of intersect().
void tighten(BoundInterval& acc, const BoundInterval& rule_out) {
  const BoundInterval both[2] = {acc, rule_out};
  acc = intersect(both);
}

const RuleId kBaseRuleOrder[] = {
    RuleId::ExactPolydisk, RuleId::ExactBall,     RuleId::PuncturedBallT,
    RuleId::PuncturedBallS, RuleId::AlexanderUpper, RuleId::ExtensionUpper,
    RuleId::CartanT,        RuleId::CartanS,       RuleId::ProductSLower,
    RuleId::ProductTLower,  RuleId::CartanProduct, RuleId::TrivialRange,
};

}  // namespace

Evaluation evaluate_pair(const DomainSpec& d, const CVector& z) {
  if (!membership(d, z))
    throw ContractViolation("evaluate: point must lie in the domain");

  Evaluation ev;
  ev.T = make_interval(0.0, 1.0, RuleId::TrivialRange);
  ev.S = make_interval(0.0, 1.0, RuleId::TrivialRange);

  bool first_t = true, first_s = true;
  for (RuleId rule : kBaseRuleOrder) {
    auto rb = apply_rule(rule, d, z);
    if (!rb) continue;
    if (rb->t) {
      if (first_t) {
        ev.T = *rb->t;
        first_t = false;
      } else {
        tighten(ev.T, *rb->t);
      }
    }
    if (rb->s) {
      if (first_s) {
        ev.S = *rb->s;
        first_s = false;
      } else {
        tighten(ev.S, *rb->s);
      }
    }
  }

  // Transfer fixed point: each pass propagates the other function's lower
  // bound; lowers are monotone, so two passes settle.
  for (int pass = 0; pass < kMaxTransferPasses; ++pass) {
    double delta = 0.0;
    if (auto a = apply_rule(RuleId::LemmaRelateA, d, z, ev)) {
      if (a->t->lower > ev.T.lower + kFixedPointTol) {
        delta = std::max(delta, a->t->lower - ev.T.lower);
        tighten(ev.T, *a->t);
      }
    }
    if (auto b = apply_rule(RuleId::LemmaRelateB, d, z, ev)) {
      if (b->s->lower > ev.S.lower + kFixedPointTol) {
        delta = std::max(delta, b->s->lower - ev.S.lower);
        tighten(ev.S, *b->s);
      }
    }
    if (delta <= kFixedPointTol) return ev;
  }
  throw InconsistencyError("evaluate: transfer pass failed to settle");
}

BoundInterval evaluate_T(const DomainSpec& d, const CVector& z) {
  return evaluate_pair(d, z).T;
}

BoundInterval evaluate_S(const DomainSpec& d, const CVector& z) {
  return evaluate_pair(d, z).S;
}

std::optional<EqualityFlags> equality_flags(const DomainSpec& d, const CVector& z) {
  const Evaluation ev = evaluate_pair(d, z);
  if (!ev.T.exact() || !ev.S.exact()) return std::nullopt;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(d.dimension()));
  EqualityFlags flags;
  flags.relateA_equality = std::abs(ev.T.lower - ev.S.lower * inv_sqrt_n) <= 1e-12;
  flags.relateB_equality = std::abs(ev.S.lower - ev.T.lower * inv_sqrt_n) <= 1e-12;
  return flags;
}

}  // namespace sqz
