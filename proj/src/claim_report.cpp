#include "hypants/claim_report.hpp"

#include <stdexcept>

namespace hypants {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::assumed_constant: return "assumed-constant";
  }
  return "unknown";
}

double ClaimReport::real(std::string_view name) const {
  for (const auto& v : computed) {
    if (v.name == name) {
      if (const double* d = std::get_if<double>(&v.value)) return *d;
      throw std::out_of_range("ClaimReport: value '" + std::string(name) + "' is complex");
    }
  }
  throw std::out_of_range("ClaimReport: no value named '" + std::string(name) + "'");
}

}  // namespace hypants
