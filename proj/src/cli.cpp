#include "sqz/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "sqz/bounds.hpp"
#include "sqz/certify.hpp"
#include "sqz/domain_json.hpp"
#include "sqz/metrics.hpp"

namespace sqz::cli {
namespace {

using nlohmann::json;

struct IoFailure : Error {
  using Error::Error;
};

// All CSV numerics use 12 significant digits; reparsing a printed value and
// printing it again reproduces the same text.
std::string num12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json parse_json_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw MalformedInput("invalid JSON in '" + what + "'");
  return j;
}

DomainSpec parse_domain_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw IoFailure("cannot open domain file '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return domain_from_json(parse_json_text(ss.str(), "domain"));
  }
  return domain_from_json(parse_json_text(arg, "domain"));
}

CVector parse_point_arg(const std::string& arg, const DomainSpec& d) {
  if (arg == "0") return zero_vector(d.dimension());
  CVector z = cvector_from_json(parse_json_text(arg, "point"));
  if (z.size() != d.dimension())
    throw MalformedInput("'point' has dimension " + std::to_string(z.size()) +
                         ", domain expects " + std::to_string(d.dimension()));
  return z;
}

json bound_to_json(const BoundInterval& b) {
  json prov = json::array();
  for (RuleId id : b.provenance) prov.push_back(rule_name(id));
  return json{{"lower", b.lower},
              {"upper", b.upper},
              {"exact", b.exact()},
              {"provenance", prov}};
}

json report_to_json(const CertificateReport& rep) {
  json j{{"radius_estimate", rep.radius_estimate},
         {"status", status_name(rep.status)},
         {"samples_used", rep.samples_used},
         {"construction", rep.construction},
         {"seed", rep.seed},
         {"achieved_tol", rep.achieved_tol},
         {"tolerance_widened", rep.tolerance_widened}};
  j["witness"] = rep.witness ? cvector_to_json(*rep.witness) : json(nullptr);
  return j;
}

struct CommonOptions {
  std::uint64_t seed = 1;
  int samples = 20000;
  double tol = 1e-3;

  CertifyConfig config() const {
    CertifyConfig cfg;
    cfg.boundary_samples = samples;
    cfg.interior_samples = std::max(100, samples / 4);
    cfg.bisection_tol = tol;
    cfg.rng_seed = seed;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--seed", opt.seed, "RNG seed for sampling");
  cmd->add_option("--samples", opt.samples,
                  "boundary sample count (interior scales with it)");
  cmd->add_option("--tol", opt.tol, "bisection tolerance");
}

int cmd_eval(const std::string& domain_arg, const std::string& point_arg,
             bool with_certificate, const CommonOptions& opt,
             std::ostream& out) {
  const DomainSpec d = parse_domain_arg(domain_arg);
  const CVector z = parse_point_arg(point_arg, d);
  const Evaluation ev = evaluate_pair(d, z);

  json j{{"T", bound_to_json(ev.T)}, {"S", bound_to_json(ev.S)}};
  if (auto flags = equality_flags(d, z)) {
    j["flags"] = json{{"relateA_equality", flags->relateA_equality},
                      {"relateB_equality", flags->relateB_equality}};
  } else {
    j["flags"] = nullptr;
  }
  if (with_certificate) {
    CertificateReport rep = certify_candidate(d, z, opt.config());
    j["certificate"] = report_to_json(rep);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_table(const std::string& kind, int max_param, std::ostream& out) {
  if (kind != "cartan")
    throw MalformedInput("'kind' must be 'cartan'");
  if (max_param < 1 || max_param > 8)
    throw MalformedInput("'max' must lie in 1..8");

  out << "type,params,n,m,lower,upper\n";
  auto row = [&](const char* type, const std::string& params,
                 const DomainSpec& d) {
    const CVector z = zero_vector(d.dimension());
    const auto rb = apply_rule(RuleId::CartanT, d, z);
    out << type << ',' << params << ',' << d.dimension() << ','
        << polydisk_direction_count(d) << ',' << num12(rb->t->lower) << ','
        << num12(rb->t->upper) << '\n';
  };
  for (int r = 1; r <= max_param; ++r)
    for (int s = r; s <= max_param; ++s)
      row("I", std::to_string(r) + "x" + std::to_string(s),
          DomainSpec::cartan_i(r, s));
  for (int p = 1; p <= max_param; ++p)
    row("II", std::to_string(p), DomainSpec::cartan_ii(p));
  for (int q = 2; q <= max_param; ++q)
    row("III", std::to_string(q), DomainSpec::cartan_iii(q));
  for (int n = 2; n <= max_param; ++n)
    row("IV", std::to_string(n), DomainSpec::cartan_iv(n));
  return kExitOk;
}

std::vector<double> parse_grid(const std::string& spec) {
  double start = 0, step = 0, stop = 0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':')
    throw MalformedInput("'grid' must look like start:step:stop");
  if (!(step > 0) || !(start > 0) || !(stop < 1) || stop < start)
    throw MalformedInput("'grid' must satisfy 0 < start <= stop < 1, step > 0");
  std::vector<double> out;
  for (double t = start; t <= stop + 0.5 * step; t += step)
    out.push_back(std::min(t, stop));
  return out;
}

int cmd_profile(int n, const std::string& grid_spec, const std::string& out_path,
                bool with_certificate, const CommonOptions& opt,
                std::ostream& stdout_stream) {
  if (n < 1 || n > 8) throw MalformedInput("'n' must lie in 1..8");
  const std::vector<double> grid = parse_grid(grid_spec);
  const DomainSpec domain =
      DomainSpec::puncture(DomainSpec::ball(n), {zero_vector(n)});

  std::ofstream file;
  std::ostream* os = &stdout_stream;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw IoFailure("cannot open output file '" + out_path + "'");
    os = &file;
  }

  *os << "norm,T_lower,T_upper,S_exact";
  if (with_certificate) *os << ",certified_estimate";
  *os << '\n';
  for (double t : grid) {
    CVector z = zero_vector(n);
    z[0] = t;
    const Evaluation ev = evaluate_pair(domain, z);
    *os << num12(t) << ',' << num12(ev.T.lower) << ',' << num12(ev.T.upper)
        << ',' << num12(ev.S.lower);
    if (with_certificate) {
      CertificateReport rep = certify_candidate(domain, z, opt.config());
      *os << ',' << num12(rep.radius_estimate);
    }
    *os << '\n';
    if (!*os) throw IoFailure("write failed for '" + out_path + "'");
  }
  return kExitOk;
}

int cmd_certify(const std::string& domain_arg, const std::string& point_arg,
                const std::string& family, int budget, const CommonOptions& opt,
                std::ostream& out) {
  const DomainSpec d = parse_domain_arg(domain_arg);
  const CVector z = parse_point_arg(point_arg, d);
  const CertifyConfig cfg = opt.config();

  CertificateReport rep;
  if (family == "none") {
    rep = certify_candidate(d, z, cfg);
  } else if (family == "ball") {
    rep = search_family(d, z, scaled_ball_automorphism_family(d, z), cfg, budget);
  } else if (family == "unitary") {
    rep = search_family(d, z, rotated_candidate_family(d, z), cfg, budget);
  } else {
    throw MalformedInput("'family' must be one of none|ball|unitary");
  }

  const BoundInterval theory = evaluate_T(d, z);
  json j = report_to_json(rep);
  j["theory_lower"] = theory.lower;
  j["theory_upper"] = theory.upper;
  out << j.dump(2) << '\n';

  // Regression signal: the construction is supposed to realize the proven
  // lower bound up to sampling slack.
  if (rep.radius_estimate < theory.lower - 0.02) return kExitTheoryMismatch;
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"squeezing-function bounds and certification"};
  app.require_subcommand(1);

  std::string domain_arg, point_arg = "0";
  CommonOptions opt;

  auto* eval = app.add_subcommand("eval", "evaluate T and S bounds at a point");
  eval->add_option("--domain", domain_arg, "domain JSON (inline or @file)")
      ->required();
  eval->add_option("--point", point_arg, "point JSON [[re,im],...] or 0");
  bool eval_certify = false;
  eval->add_flag("--certify", eval_certify, "attach a certification report");
  add_common(eval, opt);

  auto* table = app.add_subcommand("table", "closed-form Cartan bound table (CSV)");
  std::string kind = "cartan";
  int max_param = 4;
  table->add_option("--kind", kind, "table kind (cartan)");
  table->add_option("--max", max_param, "largest shape parameter (<= 8)");

  auto* profile =
      app.add_subcommand("profile", "punctured-ball radial profile (CSV)");
  int profile_n = 2;
  std::string grid_spec = "0.1:0.1:0.9";
  std::string out_path = "-";
  profile->add_option("--n", profile_n, "ambient ball dimension");
  profile->add_option("--grid", grid_spec, "radius grid start:step:stop");
  profile->add_option("--out", out_path, "output CSV path (- for stdout)");
  bool profile_certify = false;
  profile->add_flag("--certify", profile_certify,
                    "append a certified-estimate column");
  add_common(profile, opt);

  auto* certify = app.add_subcommand("certify", "certify an embedding's radius");
  certify->add_option("--domain", domain_arg, "domain JSON (inline or @file)");
  certify->add_option("--point", point_arg, "point JSON [[re,im],...] or 0");
  std::string family = "none";
  int budget = 40;
  certify->add_option("--family", family,
                      "search family: none|ball|unitary");
  certify->add_option("--budget", budget, "family-search evaluation budget");
  add_common(certify, opt);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));

    if (eval->parsed())
      return cmd_eval(domain_arg, point_arg, eval_certify, opt, out);
    if (table->parsed()) return cmd_table(kind, max_param, out);
    if (profile->parsed())
      return cmd_profile(profile_n, grid_spec, out_path, profile_certify, opt, out);
    if (certify->parsed()) {
      if (domain_arg.empty()) throw MalformedInput("'--domain' is required");
      return cmd_certify(domain_arg, point_arg, family, budget, opt, out);
    }
    return kExitValidation;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnsupportedDomain& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnsupportedMap& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace sqz::cli
