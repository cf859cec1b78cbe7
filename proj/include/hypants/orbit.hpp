#pragma once

#include <string>
#include <vector>

#include "hypants/horoball.hpp"

namespace hypants {

struct NamedTransform {
  std::string name;
  Mobius transform;
};

/// Generators of a (presumed discrete) group plus the translation lattice of
/// the stabilizer of ∞. Discreteness is assumed, never checked.
class GroupGenerators {
 public:
  /// Generators fixing ∞ form the designated stabilizer subset and must be
  /// parabolic (or trivial); throws std::invalid_argument otherwise.
  GroupGenerators(std::vector<NamedTransform> generators, CuspLattice lattice,
                  double eps = kDefaultEpsilon);

  const std::vector<NamedTransform>& generators() const { return generators_; }
  const CuspLattice& lattice() const { return lattice_; }
  /// Indices of generators fixing ∞.
  const std::vector<std::size_t>& stabilizer() const { return stabilizer_; }

  /// Generators interleaved with their inverses ("X", "X^-1", ...).
  std::vector<NamedTransform> letters() const;

 private:
  std::vector<NamedTransform> generators_;
  CuspLattice lattice_;
  std::vector<std::size_t> stabilizer_;
};

struct OrbitBall {
  Horoball ball;     ///< center reduced into the fundamental parallelogram
  std::string word;  ///< a shortest word found, letters space-separated
};

struct OrbitResult {
  /// H_∞ first, then by (diameter desc, re, im).
  std::vector<OrbitBall> balls;
  /// Distinct (unreduced) balls touched by the search.
  std::size_t explored = 0;
  /// True when the search stopped at max_word_len with work left.
  bool depth_limited = false;
};

/// Images of H_∞ (height 1) with diameter >= cutoff under words of length at
/// most max_word_len, modulo the lattice.
///
/// Breadth-first over left multiplication by generators and inverses.
/// Identical balls reached by different words are expanded once; a ball below
/// the cutoff is abandoned. Frontier expansion runs under OpenMP and is merged
/// in frontier order, so the output equals orbit_enumerate_serial.
OrbitResult orbit_enumerate(const GroupGenerators& group, double cutoff, int max_word_len = 16,
                            double eps = kDefaultEpsilon);

/// Single-threaded reference for orbit_enumerate.
OrbitResult orbit_enumerate_serial(const GroupGenerators& group, double cutoff,
                                   int max_word_len = 16, double eps = kDefaultEpsilon);

struct CuspHeightResult {
  double height;
  double min_lower_left;  ///< min |a21| over the enumerated elements
  std::string word;
};

/// h* = 1 / min |a21| over non-stabilizer elements of word length at most
/// max_word_len. Throws std::invalid_argument if every generator fixes ∞.
CuspHeightResult maximal_cusp_height(const GroupGenerators& group, int max_word_len = 16,
                                     double eps = kDefaultEpsilon);

/// The group of the rigid pants representation, c1 = [[1,2],[0,1]],
/// c2 = [[1,0],[-2,1]]. Its cusp at ∞ has rank one, so the lattice is
/// completed with the vertical vector 2i.
GroupGenerators rigid_pants_group();

}  // namespace hypants
