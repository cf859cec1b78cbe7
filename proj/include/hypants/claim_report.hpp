#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypants/complex_value.hpp"

namespace hypants {

enum class Verdict { pass, fail, assumed_constant };
std::string_view to_string(Verdict verdict);

struct NamedValue {
  std::string name;
  std::variant<double, Complex> value;
};

/// A number taken from the literature rather than recomputed here.
struct LiteratureConstant {
  std::string name;
  double value;
  std::string provenance;
};

/// Verdict record for one checked statement.
///
/// Claims that rest only on cited constants carry assumed_constant, never pass.
struct ClaimReport {
  std::string claim_id;
  std::string anchor;
  std::vector<NamedValue> computed;
  double tolerance = 0.0;
  Verdict verdict = Verdict::fail;
  std::vector<LiteratureConstant> constants;
  /// Free-form remark, e.g. the message of an unexpected exception.
  std::string note;

  void add(std::string name, double v) { computed.push_back({std::move(name), v}); }
  void add(std::string name, Complex v) { computed.push_back({std::move(name), v}); }
  /// Lookup by name; throws std::out_of_range if absent or not real.
  double real(std::string_view name) const;
};

}  // namespace hypants
