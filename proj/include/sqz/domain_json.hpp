#pragma once

#include <json.hpp>

#include "sqz/domain.hpp"

namespace sqz {

// JSON wire format for domains, shared by the CLI and any file inputs:
//   {"type":"ball","n":3}
//   {"type":"polydisk","n":2}            optional "radii":[r1,...,rn]
//   {"type":"cartan1","r":2,"s":3}
//   {"type":"cartan2","p":2}
//   {"type":"cartan3","q":4}
//   {"type":"cartan4","n":3}
//   {"type":"puncture","ambient":{...},"points":[[[re,im],...],...]}
//   {"type":"product","factors":[{...},{...}]}
// Complex numbers are 2-element arrays [re, im].

nlohmann::json domain_to_json(const DomainSpec& d);

// Throws MalformedInput naming the offending field on schema violations and
// ContractViolation when the decoded spec breaks a structural invariant.
DomainSpec domain_from_json(const nlohmann::json& j);

nlohmann::json cvector_to_json(const CVector& v);
CVector cvector_from_json(const nlohmann::json& j);

}  // namespace sqz
