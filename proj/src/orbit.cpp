#include "hypants/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace hypants {

GroupGenerators::GroupGenerators(std::vector<NamedTransform> generators, CuspLattice lattice,
                                 double eps)
    : generators_(std::move(generators)), lattice_(lattice) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Mobius& m = generators_[i].transform;
    if (!m.fixes_infinity(eps)) continue;
    const auto kind = classify(m, eps).kind;
    if (kind != IsometryKind::parabolic && kind != IsometryKind::identity) {
      throw std::invalid_argument("GroupGenerators: stabilizer generator '" +
                                  generators_[i].name + "' is not parabolic");
    }
    stabilizer_.push_back(i);
  }
}

std::vector<NamedTransform> GroupGenerators::letters() const {
  std::vector<NamedTransform> out;
  out.reserve(2 * generators_.size());
  for (const auto& g : generators_) {
    out.push_back(g);
    out.push_back({g.name + "^-1", g.transform.inverse()});
  }
  return out;
}

namespace {

// Tolerant set of horoballs: cells of side `tol` in (re, im, log size), with
// the 27 neighbouring cells probed so values straddling a cell wall still
// collide.
class BallIndex {
 public:
  explicit BallIndex(double tol) : tol_(tol) {}

  // Returns true if inserted (no existing ball within tolerance).
  bool insert(const Horoball& b) {
    const Key k = key(b);
    if (find_near(b, k)) return false;
    cells_.emplace(k, b);
    return true;
  }

  bool contains(const Horoball& b) const { return find_near(b, key(b)); }

 private:
  using Key = std::tuple<long long, long long, long long, bool>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<long long>{}(std::get<0>(k));
      h = h * 1000003u ^ std::hash<long long>{}(std::get<1>(k));
      h = h * 1000003u ^ std::hash<long long>{}(std::get<2>(k));
      return h * 2u + (std::get<3>(k) ? 1u : 0u);
    }
  };

  Key key(const Horoball& b) const {
    const auto ls = static_cast<long long>(std::floor(std::log(b.size()) / tol_));
    if (b.at_infinity()) return {0, 0, ls, true};
    const Complex z = b.center().value();
    return {static_cast<long long>(std::floor(z.real() / tol_)),
            static_cast<long long>(std::floor(z.imag() / tol_)), ls, false};
  }

  bool close(const Horoball& a, const Horoball& b) const {
    if (a.at_infinity() != b.at_infinity()) return false;
    if (std::abs(std::log(a.size()) - std::log(b.size())) > tol_) return false;
    if (a.at_infinity()) return true;
    return std::abs(a.center().value() - b.center().value()) <= tol_;
  }

  bool find_near(const Horoball& b, const Key& k) const {
    const int span = std::get<3>(k) ? 0 : 1;
    for (int dx = -span; dx <= span; ++dx) {
      for (int dy = -span; dy <= span; ++dy) {
        for (int dl = -1; dl <= 1; ++dl) {
          const Key probe{std::get<0>(k) + dx, std::get<1>(k) + dy, std::get<2>(k) + dl,
                          std::get<3>(k)};
          auto [lo, hi] = cells_.equal_range(probe);
          for (auto it = lo; it != hi; ++it) {
            if (close(it->second, b)) return true;
          }
        }
      }
    }
    return false;
  }

  double tol_;
  std::unordered_multimap<Key, Horoball, KeyHash> cells_;
};

struct Node {
  Horoball ball;
  std::string word;
};

std::string prepend(const std::string& letter, const std::string& word) {
  return word.empty() ? letter : letter + " " + word;
}

// One-letter extensions of a frontier node that survive the size cutoff.
// The image of H_∞ under a word w has diameter 1/|a21(w)|^2, so the cutoff is
// the lower-bound test |a21(w)|^2 <= 1/cutoff on the extended word.
void expand(const Node& node, const std::vector<NamedTransform>& letters, double cutoff,
            std::vector<Node>& out) {
  out.clear();
  for (const auto& letter : letters) {
    Horoball child = apply_to_horoball(letter.transform, node.ball);
    if (!child.at_infinity() && child.size() < cutoff) continue;
    out.push_back({child, prepend(letter.name, node.word)});
  }
}

double center_tolerance(const GroupGenerators& group, double eps) {
  return eps * std::max(1.0, group.lattice().diameter());
}

OrbitResult finish(const GroupGenerators& group, std::vector<Node>&& visited, bool limited,
                   double eps) {
  const double tol = center_tolerance(group, eps);
  OrbitResult result;
  result.explored = visited.size();
  result.depth_limited = limited;

  BallIndex seen(tol);
  for (auto& node : visited) {
    Horoball reduced =
        node.ball.at_infinity()
            ? node.ball
            : Horoball(ComplexValue(group.lattice().reduce(node.ball.center().value(), eps)),
                       node.ball.size());
    if (seen.insert(reduced)) result.balls.push_back({reduced, std::move(node.word)});
  }

  auto sort_key = [tol](const OrbitBall& b) {
    const bool inf = b.ball.at_infinity();
    const Complex z = inf ? Complex{} : b.ball.center().value();
    return std::tuple(inf ? 0 : 1, -std::llround(b.ball.size() / tol), std::llround(z.real() / tol),
                      std::llround(z.imag() / tol));
  };
  std::stable_sort(result.balls.begin(), result.balls.end(),
                   [&](const OrbitBall& a, const OrbitBall& b) { return sort_key(a) < sort_key(b); });
  return result;
}

void check_arguments(double cutoff, int max_word_len) {
  if (!(cutoff > 0.0)) throw std::invalid_argument("orbit_enumerate: cutoff must be positive");
  if (max_word_len < 0) throw std::invalid_argument("orbit_enumerate: max_word_len must be >= 0");
}

}  // namespace

OrbitResult orbit_enumerate_serial(const GroupGenerators& group, double cutoff, int max_word_len,
                                   double eps) {
  check_arguments(cutoff, max_word_len);
  const auto letters = group.letters();
  BallIndex visited_index(center_tolerance(group, eps));
  std::vector<Node> visited;
  std::vector<Node> frontier{{Horoball::at_infinity(1.0), ""}};
  visited_index.insert(frontier.front().ball);
  visited.push_back(frontier.front());

  std::vector<Node> children;
  int depth = 0;
  for (; depth < max_word_len && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      expand(node, letters, cutoff, children);
      for (auto& child : children) {
        if (!visited_index.insert(child.ball)) continue;
        visited.push_back(child);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return finish(group, std::move(visited), !frontier.empty() && depth == max_word_len, eps);
}

OrbitResult orbit_enumerate(const GroupGenerators& group, double cutoff, int max_word_len,
                            double eps) {
  check_arguments(cutoff, max_word_len);
  const auto letters = group.letters();
  BallIndex visited_index(center_tolerance(group, eps));
  std::vector<Node> visited;
  std::vector<Node> frontier{{Horoball::at_infinity(1.0), ""}};
  visited_index.insert(frontier.front().ball);
  visited.push_back(frontier.front());

  int depth = 0;
  for (; depth < max_word_len && !frontier.empty(); ++depth) {
    std::vector<std::vector<Node>> candidates(frontier.size());
    const auto n = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      expand(frontier[i], letters, cutoff, candidates[i]);
    }
    // Merge in frontier order: the first word to reach a ball wins, exactly
    // as in the serial sweep.
    std::vector<Node> next;
    for (auto& group_children : candidates) {
      for (auto& child : group_children) {
        if (!visited_index.insert(child.ball)) continue;
        visited.push_back(child);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return finish(group, std::move(visited), !frontier.empty() && depth == max_word_len, eps);
}

CuspHeightResult maximal_cusp_height(const GroupGenerators& group, int max_word_len, double eps) {
  if (max_word_len < 1) throw std::invalid_argument("maximal_cusp_height: max_word_len must be >= 1");
  const auto letters = group.letters();
  CuspHeightResult best{0.0, 0.0, ""};
  for (const auto& letter : letters) {
    if (letter.transform.fixes_infinity(eps)) continue;
    const double c = std::abs(letter.transform.a21());
    if (best.word.empty() || c < best.min_lower_left) best = {1.0 / c, c, letter.name};
  }
  if (best.word.empty()) {
    throw std::invalid_argument("maximal_cusp_height: every generator fixes infinity");
  }

  // Only balls at least as large as the current best image can improve it.
  BallIndex visited(center_tolerance(group, eps));
  std::vector<Node> frontier{{Horoball::at_infinity(1.0), ""}};
  visited.insert(frontier.front().ball);
  std::vector<Node> children;
  for (int depth = 0; depth < max_word_len && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      const double cutoff = (1.0 - 1e-12) / (best.min_lower_left * best.min_lower_left);
      expand(node, letters, cutoff, children);
      for (auto& child : children) {
        if (!visited.insert(child.ball)) continue;
        if (!child.ball.at_infinity()) {
          const double c = 1.0 / std::sqrt(child.ball.size());
          if (c < best.min_lower_left * (1.0 - 1e-12)) best = {1.0 / c, c, child.word};
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return best;
}

GroupGenerators rigid_pants_group() {
  return GroupGenerators({{"C1", Mobius(1.0, 2.0, 0.0, 1.0)}, {"C2", Mobius(1.0, 0.0, -2.0, 1.0)}},
                         CuspLattice(2.0, Complex(0.0, 2.0)));
}

}  // namespace hypants
