// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exits nonzero when anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "sqz/bounds.hpp"
#include "sqz/certify.hpp"
#include "sqz/cli.hpp"
#include "sqz/metrics.hpp"
#include "sqz/ray_scan.hpp"
#include "test_support.hpp"

using namespace sqz;
using sqz::testing::Rng;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  std::string detail;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

void report(int index, const std::string& title, const Criterion& c) {
  std::printf("%s  criterion %2d: %s%s%s\n", c.ok ? "PASS" : "FAIL", index,
              title.c_str(), c.detail.empty() ? "" : " — ",
              c.detail.c_str());
  if (!c.ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

DomainSpec dotted_ball(int n) {
  return DomainSpec::puncture(DomainSpec::ball(n), {zero_vector(n)});
}

CVector axis_point(int n, double t) {
  CVector z = zero_vector(n);
  z[0] = Complex(t, 0.0);
  return z;
}

// ---------------------------------------------------------------------------

void criterion_1_exact_values() {
  Criterion c;
  const auto t0 = Clock::now();
  int evals = 0;
  for (int n = 1; n <= 6; ++n) {
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    const CVector z = zero_vector(n);
    const Evaluation pd = evaluate_pair(DomainSpec::polydisk(n), z);
    const Evaluation bl = evaluate_pair(DomainSpec::ball(n), z);
    evals += 2;
    c.require(pd.T.lower == 1.0 && pd.T.upper == 1.0,
              "T(polydisk " + std::to_string(n) + ") != 1");
    c.require(pd.S.lower == inv_sqrt_n && pd.S.upper == inv_sqrt_n,
              "S(polydisk " + std::to_string(n) + ") != 1/sqrt(n)");
    c.require(bl.T.lower == inv_sqrt_n && bl.T.upper == inv_sqrt_n,
              "T(ball " + std::to_string(n) + ") != 1/sqrt(n)");
    c.require(bl.S.lower == 1.0 && bl.S.upper == 1.0,
              "S(ball " + std::to_string(n) + ") != 1");
  }
  const double per_eval_ms = seconds_since(t0) * 1e3 / evals;
  c.require(per_eval_ms < 1.0, "evaluation exceeded 1 ms");
  {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f ms/eval", per_eval_ms);
    c.note(buf);
  }
  report(1, "exact polydisk/ball values, n = 1..6", c);
}

void criterion_2_punctured_ball() {
  Criterion c;
  const DomainSpec d = dotted_ball(2);
  const double cap = 1.0 / std::sqrt(2.0);
  for (int k = 1; k <= 20; ++k) {
    const double t = cap * k / 20.0;
    const Evaluation ev = evaluate_pair(d, axis_point(2, t));
    c.require(std::abs(ev.T.lower - t) <= 1e-12 &&
                  std::abs(ev.T.upper - t) <= 1e-12,
              "T not exact at ||z|| = " + std::to_string(t));
    c.require(std::abs(ev.S.lower - t) <= 1e-12 && ev.S.exact(),
              "S != ||z|| at " + std::to_string(t));
  }
  for (int k = 1; k <= 20; ++k) {
    const double t = cap + (1.0 - cap) * k / 21.0;
    const Evaluation ev = evaluate_pair(d, axis_point(2, t));
    c.require(std::abs(ev.T.lower - t * cap) <= 1e-12,
              "band lower wrong at " + std::to_string(t));
    c.require(std::abs(ev.T.upper - cap) <= 1e-12,
              "band upper wrong at " + std::to_string(t));
    c.require(std::abs(ev.S.lower - t) <= 1e-12 && ev.S.exact(),
              "S != ||z|| at " + std::to_string(t));
  }
  report(2, "punctured ball: exact region and band, n = 2", c);
}

void criterion_3_cartan_table() {
  Criterion c;
  std::ostringstream out, err;
  const int code = sqz::cli::run({"table", "--kind", "cartan", "--max", "5"},
                                 out, err);
  c.require(code == 0, "table command failed");

  struct Expect {
    std::string type, params;
    double n, m;
  };
  const Expect expects[] = {
      {"I", "2x2", 4, 2},  {"I", "2x3", 6, 2},  {"II", "2", 3, 2},
      {"II", "3", 6, 3},   {"III", "4", 6, 2},  {"III", "5", 10, 2},
      {"IV", "2", 2, 2},   {"IV", "3", 3, 2},   {"IV", "4", 4, 2},
      {"IV", "5", 5, 2},
  };
  std::istringstream ss(out.str());
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(ss, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  for (const auto& e : expects) {
    bool found = false;
    for (const auto& row : rows) {
      if (row.size() == 6 && row[0] == e.type && row[1] == e.params) {
        found = true;
        const double lower = std::stod(row[4]);
        const double upper = std::stod(row[5]);
        c.require(std::abs(lower - 1.0 / std::sqrt(e.n * e.m)) <= 1e-12,
                  "lower mismatch for R_" + e.type + "(" + e.params + ")");
        c.require(std::abs(upper - 1.0 / std::sqrt(e.m)) <= 1e-12,
                  "upper mismatch for R_" + e.type + "(" + e.params + ")");
      }
    }
    c.require(found, "row missing for R_" + e.type + "(" + e.params + ")");
  }
  report(3, "Cartan bound table matches the closed forms", c);
}

void criterion_4_product_bounds() {
  Criterion c;
  const DomainSpec prod =
      DomainSpec::product({DomainSpec::ball(3), DomainSpec::ball(2)});
  const Evaluation ev = evaluate_pair(prod, zero_vector(5));
  c.require(std::abs(ev.T.lower - 1.0 / std::sqrt(3.0)) <= 1e-12,
            "T lower != 1/sqrt(3)");
  c.require(ev.T.lower > 1.0 / std::sqrt(5.0),
            "product bound does not beat the harmonic combination");
  c.require(std::abs(ev.S.lower - 1.0 / std::sqrt(2.0)) <= 1e-12,
            "S lower != 1/sqrt(2)");
  report(4, "product bounds for B^3 x B^2", c);
}

void criterion_5_extension_consistency() {
  Criterion c;
  Rng rng(50505);
  for (int n : {2, 3}) {
    const DomainSpec ball = DomainSpec::ball(n);
    for (int i = 0; i < 100; ++i) {
      const CVector z = sqz::testing::random_in_ball(rng, n, 0.98);
      const double r = sigma_inv(kobayashi(ball, z, zero_vector(n)));
      c.require(std::abs(r - z.norm()) < 1e-10, "sigma_inv(K(z,0)) != ||z||");
    }
    // the extension rule reproduces the exact value on the exact region
    const DomainSpec d = dotted_ball(n);
    const double cap = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < 100; ++i) {
      const CVector z = sqz::testing::uniform(rng, 0.02, cap - 1e-3) *
                        sqz::testing::random_in_ball(rng, n, 1.0).normalized();
      const auto ext = apply_rule(RuleId::ExtensionUpper, d, z);
      if (!ext) {
        c.require(false, "extension rule inapplicable");
        continue;
      }
      c.require(std::abs(ext->t->upper - z.norm()) < 1e-10,
                "extension upper != exact value");
      const BoundInterval t = evaluate_T(d, z);
      c.require(std::abs(t.lower - z.norm()) < 1e-10 && t.exact(),
                "engine value differs from exact on the exact region");
    }
  }
  report(5, "extension upper bound consistency", c);
}

void criterion_6_polydisk_identity() {
  Criterion c;
  const auto t0 = Clock::now();
  CertifyConfig cfg;  // defaults
  const CertificateReport rep =
      inscribed_radius(identity_map(DomainSpec::polydisk(2)), cfg);
  const double secs = seconds_since(t0);
  c.require(rep.radius_estimate >= 0.995, "estimate below 0.995");
  c.require(secs < 10.0, "exceeded 10 s");
  {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "estimate %.6f in %.2f s",
                  rep.radius_estimate, secs);
    c.note(buf);
  }
  report(6, "certification: identity on the bidisk", c);
}

void criterion_7_ball_certificate() {
  Criterion c;
  const auto t0 = Clock::now();
  CertifyConfig cfg;
  const CertificateReport rep =
      certify_candidate(DomainSpec::ball(2), zero_vector(2), cfg);
  const double secs = seconds_since(t0);
  c.require(std::abs(rep.radius_estimate - 1.0 / std::sqrt(2.0)) <= 0.01,
            "estimate not within 0.01 of 1/sqrt(2)");
  c.require(secs < 30.0, "exceeded 30 s");
  {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "estimate %.6f in %.2f s",
                  rep.radius_estimate, secs);
    c.note(buf);
  }
  report(7, "certification: ball B^2", c);
}

void criterion_8_punctured_certificate() {
  Criterion c;
  const auto t0 = Clock::now();
  CertifyConfig cfg;
  const DomainSpec d = dotted_ball(2);
  const CVector z = axis_point(2, 0.3);
  const CertificateReport rep = certify_candidate(d, z, cfg);
  const double secs = seconds_since(t0);
  c.require(rep.radius_estimate >= 0.29, "estimate below 0.29");
  c.require(rep.radius_estimate <= 0.3 + 1e-3, "estimate above 0.3 + tol");
  const BoundInterval t = evaluate_T(d, z);
  c.require(rep.radius_estimate <= t.upper + cfg.bisection_tol,
            "estimate exceeds the proven upper bound");
  c.require(secs < 60.0, "exceeded 60 s");
  {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "estimate %.6f in %.2f s",
                  rep.radius_estimate, secs);
    c.note(buf);
  }
  report(8, "certification: punctured ball at (0.3, 0)", c);
}

void criterion_9_transfer_suite() {
  Criterion c;
  // Domains with exact T and S. Dimension 1 is excluded: there 1/sqrt(n) = 1
  // makes both transfer inequalities equalities trivially.
  struct Case {
    DomainSpec domain;
    CVector z;
    bool expect_a, expect_b;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 6; ++n) {
    cases.push_back({DomainSpec::polydisk(n), zero_vector(n), false, true});
    cases.push_back({DomainSpec::ball(n), zero_vector(n), true, false});
  }
  for (int s = 2; s <= 4; ++s)
    cases.push_back({DomainSpec::cartan_i(1, s), zero_vector(s), true, false});
  // punctured-ball exact region: T = S = ||z||, neither equality holds
  cases.push_back({dotted_ball(2), axis_point(2, 0.5), false, false});
  cases.push_back({dotted_ball(3), axis_point(3, 0.4), false, false});

  for (const auto& k : cases) {
    const Evaluation ev = evaluate_pair(k.domain, k.z);
    const double inv_sqrt_n =
        1.0 / std::sqrt(static_cast<double>(k.domain.dimension()));
    c.require(ev.T.exact() && ev.S.exact(), "values not exact");
    const double T = ev.T.lower, S = ev.S.lower;
    c.require(T >= S * inv_sqrt_n - 1e-12, "T >= S/sqrt(n) violated");
    c.require(S >= T * inv_sqrt_n - 1e-12, "S >= T/sqrt(n) violated");
    const auto flags = equality_flags(k.domain, k.z);
    if (!flags) {
      c.require(false, "flags not applicable on exact domain");
      continue;
    }
    c.require(!(flags->relateA_equality && flags->relateB_equality),
              "both equalities hold simultaneously");
    c.require(flags->relateA_equality == k.expect_a &&
                  flags->relateB_equality == k.expect_b,
              "equality pattern mismatch on " + k.domain.describe());
  }
  report(9, "transfer lemma suite and equality flags", c);
}

void criterion_10_membership_oracle() {
  Criterion c;
  Rng rng(606060);
  const DomainSpec specs[] = {
      DomainSpec::cartan_i(2, 2), DomainSpec::cartan_i(2, 3),
      DomainSpec::cartan_ii(2),   DomainSpec::cartan_ii(3),
      DomainSpec::cartan_iii(4)};
  for (const auto& d : specs) {
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
      CVector z = sqz::testing::random_box_vector(rng, d.dimension(), 1.0);
      z *= sqz::testing::uniform(rng, 0.1, 1.3);
      const CMatrix Z = to_cartan_matrix(d, z);
      const CMatrix H = CMatrix::Identity(Z.rows(), Z.rows()) - Z * Z.adjoint();
      Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
      if (std::abs(es.eigenvalues().minCoeff()) <= 1e-9) continue;
      bool minors_pd = true;
      for (Eigen::Index k = 1; k <= H.rows(); ++k)
        minors_pd =
            minors_pd && H.topLeftCorner(k, k).determinant().real() > 0.0;
      if (membership(d, z) != minors_pd) ++disagreements;
    }
    c.require(disagreements == 0,
              d.describe() + ": " + std::to_string(disagreements) +
                  " oracle disagreements");
  }
  const DomainSpec b = DomainSpec::cartan_i(1, 3);
  for (int i = 0; i < 1000; ++i) {
    const CVector z = sqz::testing::random_box_vector(rng, 3, 1.0);
    c.require(membership(b, z) == (z.norm() < 1.0),
              "R_I(1,3) membership differs from the ball test");
  }
  report(10, "membership vs principal-minors oracle", c);
}

void criterion_11_property_suites() {
  Criterion c;
  const auto t0 = Clock::now();
  Rng rng(111111);

  // holomorphic-map round trips at 1e-10
  const DomainSpec dotted = dotted_ball(2);
  const CVector zc = axis_point(2, 0.3);
  const HoloMap maps[] = {
      ball_automorphism(cvec({{0.2, 0.3}, {0.1, 0.0}})),
      candidate_embedding(dotted, zc),
      candidate_embedding(DomainSpec::product(
                              {DomainSpec::ball(3), DomainSpec::ball(2)}),
                          zero_vector(5)),
  };
  for (const auto& f : maps) {
    for (int i = 0; i < 1000; ++i) {
      const CVector z = sqz::testing::random_in_domain(rng, f.source, 0.9);
      c.require((f.apply_inverse(f.apply(z)) - z).norm() < 1e-10,
                "round trip exceeded 1e-10");
    }
  }

  // metric axioms at 1e-9
  for (const DomainSpec& d :
       {DomainSpec::ball(2), DomainSpec::polydisk(3)}) {
    for (int i = 0; i < 1000; ++i) {
      const CVector a = sqz::testing::random_in_domain(rng, d, 0.92);
      const CVector b = sqz::testing::random_in_domain(rng, d, 0.92);
      const CVector e = sqz::testing::random_in_domain(rng, d, 0.92);
      c.require(std::abs(kobayashi(d, a, b) - kobayashi(d, b, a)) < 1e-12,
                "symmetry violated");
      c.require(kobayashi(d, a, e) <=
                    kobayashi(d, a, b) + kobayashi(d, b, e) + 1e-9,
                "triangle inequality violated");
    }
  }

  // bit-exact seed determinism and witness replay on 10^3-sample runs
  CertifyConfig cfg;
  cfg.boundary_samples = 1000;
  cfg.interior_samples = 250;
  cfg.rng_seed = 9001;
  const CertificateReport r1 = certify_candidate(dotted, zc, cfg);
  const CertificateReport r2 = certify_candidate(dotted, zc, cfg);
  c.require(r1.radius_estimate == r2.radius_estimate &&
                r1.samples_used == r2.samples_used &&
                r1.status == r2.status &&
                r1.witness.has_value() == r2.witness.has_value() &&
                (!r1.witness || exactly_equal(*r1.witness, *r2.witness)),
            "reports differ across identical seeds");
  c.require(r1.status == CertifyStatus::WitnessFound && r1.witness.has_value(),
            "punctured certification produced no witness");
  if (r1.witness) {
    const HoloMap f = candidate_embedding(dotted, zc);
    c.require(!image_contains(f, *r1.witness), "witness does not replay");
  }

  const double secs = seconds_since(t0);
  c.require(secs < 300.0, "property suites exceeded 5 minutes");
  {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f s total", secs);
    c.note(buf);
  }
  report(11, "property suites: round trips, metric axioms, determinism", c);
}

}  // namespace

int main() {
  criterion_1_exact_values();
  criterion_2_punctured_ball();
  criterion_3_cartan_table();
  criterion_4_product_bounds();
  criterion_5_extension_consistency();
  criterion_6_polydisk_identity();
  criterion_7_ball_certificate();
  criterion_8_punctured_certificate();
  criterion_9_transfer_suite();
  criterion_10_membership_oracle();
  criterion_11_property_suites();

  if (g_failures == 0) {
    std::printf("SUMMARY: all 11 criteria passed\n");
    return 0;
  }
  std::printf("SUMMARY: %d criteria FAILED\n", g_failures);
  return 1;
}
