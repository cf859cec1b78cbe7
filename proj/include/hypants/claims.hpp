#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypants/claim_report.hpp"

namespace hypants {

struct ClaimContext {
  double eps = kDefaultEpsilon;
};

struct ClaimDescriptor {
  std::string id;
  std::vector<std::string> dependencies;
  std::function<ClaimReport(const ClaimContext&)> runner;
};

/// Ordered list of claims. Every dependency must appear earlier in the list,
/// which rules out cycles; the constructor throws std::invalid_argument
/// otherwise, or on duplicate ids.
class ClaimRegistry {
 public:
  explicit ClaimRegistry(std::vector<ClaimDescriptor> claims);

  /// The built-in registry covering every quantitative step.
  static const ClaimRegistry& standard();

  const std::vector<ClaimDescriptor>& claims() const { return claims_; }
  bool contains(std::string_view id) const;

  /// Requested ids plus their transitive dependencies, in registry order.
  /// Empty `ids` means all. Throws std::invalid_argument on an unknown id.
  std::vector<std::size_t> closure(std::span<const std::string> ids) const;

 private:
  std::vector<ClaimDescriptor> claims_;
};

/// (id, anchor) for every built-in claim; anchors name the statement checked.
const std::vector<std::pair<std::string_view, std::string_view>>& anchor_table();
std::string_view anchor_for(std::string_view id);

/// Run claims in dependency order. Independent claims run concurrently; the
/// returned order is registry order regardless.
std::vector<ClaimReport> run_claims(const ClaimRegistry& registry,
                                    std::span<const std::string> ids,
                                    const ClaimContext& context = {});

inline std::vector<ClaimReport> run_claims(std::span<const std::string> ids,
                                           const ClaimContext& context = {}) {
  return run_claims(ClaimRegistry::standard(), ids, context);
}

bool any_failed(const std::vector<ClaimReport>& reports);

/// Independent quadrature route for the Lobachevsky function (composite
/// Simpson on the smooth part of log|2 sin t|).
double lobachevsky_by_quadrature(double theta, int intervals = 4096);

}  // namespace hypants
