#include "sqz/domain_json.hpp"

#include <string>

namespace sqz {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw MalformedInput("invalid domain JSON at '" + field + "': " + why);
}

int get_positive_int(const json& j, const std::string& field) {
  if (!j.contains(field)) bad(field, "missing");
  const json& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    bad(field, "expected a positive integer");
  return v.get<int>();
}

}  // namespace

json cvector_to_json(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(json::array({v[i].real(), v[i].imag()}));
  return a;
}

CVector cvector_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    bad("point", "expected a non-empty array of [re,im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& c = j[i];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
      bad("point[" + std::to_string(i) + "]", "expected [re,im]");
    v[static_cast<Eigen::Index>(i)] =
        Complex(c[0].get<double>(), c[1].get<double>());
  }
  return v;
}

json domain_to_json(const DomainSpec& d) {
  json j;
  switch (d.kind()) {
    case DomainKind::Ball:
      j["type"] = "ball";
      j["n"] = d.as<BallSpec>().n;
      break;
    case DomainKind::Polydisk: {
      const auto& p = d.as<PolydiskSpec>();
      j["type"] = "polydisk";
      j["n"] = p.n;
      bool unit = true;
      for (double r : p.radii) unit = unit && r == 1.0;
      if (!unit) j["radii"] = p.radii;
      break;
    }
    case DomainKind::CartanI: {
      const auto& c = d.as<CartanISpec>();
      j["type"] = "cartan1";
      j["r"] = c.r;
      j["s"] = c.s;
      break;
    }
    case DomainKind::CartanII:
      j["type"] = "cartan2";
      j["p"] = d.as<CartanIISpec>().p;
      break;
    case DomainKind::CartanIII:
      j["type"] = "cartan3";
      j["q"] = d.as<CartanIIISpec>().q;
      break;
    case DomainKind::CartanIV:
      j["type"] = "cartan4";
      j["n"] = d.as<CartanIVSpec>().n;
      break;
    case DomainKind::Puncture: {
      const auto& p = d.as<PunctureSpec>();
      j["type"] = "puncture";
      j["ambient"] = domain_to_json(p.ambient);
      json pts = json::array();
      for (const auto& pt : p.points) pts.push_back(cvector_to_json(pt));
      j["points"] = pts;
      break;
    }
    case DomainKind::Product: {
      const auto& p = d.as<ProductSpec>();
      j["type"] = "product";
      json fs = json::array();
      for (const auto& f : p.factors) fs.push_back(domain_to_json(f));
      j["factors"] = fs;
      break;
    }
  }
  return j;
}

DomainSpec domain_from_json(const json& j) {
  if (!j.is_object()) bad("<root>", "expected an object");
  if (!j.contains("type")) bad("type", "missing");
  if (!j.at("type").is_string()) bad("type", "expected a string");
  const std::string type = j.at("type").get<std::string>();

  if (type == "ball") return DomainSpec::ball(get_positive_int(j, "n"));
  if (type == "polydisk") {
    const int n = get_positive_int(j, "n");
    if (j.contains("radii")) {
      const json& r = j.at("radii");
      if (!r.is_array() || static_cast<int>(r.size()) != n)
        bad("radii", "expected an array of length n");
      std::vector<double> radii;
      radii.reserve(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r[i].is_number() || r[i].get<double>() <= 0.0)
          bad("radii[" + std::to_string(i) + "]", "expected a positive number");
        radii.push_back(r[i].get<double>());
      }
      return DomainSpec::polydisk(n, std::move(radii));
    }
    return DomainSpec::polydisk(n);
  }
  if (type == "cartan1")
    return DomainSpec::cartan_i(get_positive_int(j, "r"), get_positive_int(j, "s"));
  if (type == "cartan2") return DomainSpec::cartan_ii(get_positive_int(j, "p"));
  if (type == "cartan3") return DomainSpec::cartan_iii(get_positive_int(j, "q"));
  if (type == "cartan4") return DomainSpec::cartan_iv(get_positive_int(j, "n"));
  if (type == "puncture") {
    if (!j.contains("ambient")) bad("ambient", "missing");
    DomainSpec ambient = domain_from_json(j.at("ambient"));
    if (!j.contains("points") || !j.at("points").is_array() ||
        j.at("points").empty())
      bad("points", "expected a non-empty array of points");
    std::vector<CVector> points;
    points.reserve(j.at("points").size());
    for (const auto& p : j.at("points")) points.push_back(cvector_from_json(p));
    return DomainSpec::puncture(std::move(ambient), std::move(points));
  }
  if (type == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array() ||
        j.at("factors").size() < 2)
      bad("factors", "expected an array of at least two domains");
    std::vector<DomainSpec> factors;
    factors.reserve(j.at("factors").size());
    for (const auto& f : j.at("factors")) factors.push_back(domain_from_json(f));
    return DomainSpec::product(std::move(factors));
  }
  bad("type", "unknown domain type '" + type + "'");
}

}  // namespace sqz
