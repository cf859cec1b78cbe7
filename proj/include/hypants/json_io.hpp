#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"

#include "hypants/claim_report.hpp"
#include "hypants/orbit.hpp"
#include "hypants/pantsrep.hpp"

namespace hypants {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im]; ∞ is {"inf": true}; a transform is
// {"m": [[z11, z12], [z21, z22]]}. Readers throw std::invalid_argument on
// malformed input.

Json to_json(Complex z);
Json to_json(const ComplexValue& z);
Json to_json(const Mobius& m);
Json to_json(const Horoball& b);
Json to_json(const ClaimReport& r);

Complex complex_from_json(const Json& j);
ComplexValue complex_value_from_json(const Json& j);
Mobius mobius_from_json(const Json& j);

/// {"C1": {"m": ...}, "C2": {"m": ...}}
PantsRepresentation pants_from_json(const Json& j);

/// {"generators": [{"name": ..., "m": ...}, ...], "lattice": {"t1": z, "t2": z}}
GroupGenerators group_from_json(const Json& j);
Json to_json(const GroupGenerators& g);

/// "RE,IM" or "RE" on the command line.
Complex parse_complex(std::string_view text);

/// {"claims": [...], "summary": {"pass": n, "fail": n, "assumed": n}}
Json report_json(const std::vector<ClaimReport>& reports);

}  // namespace hypants
