#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ckf/quadfield.hpp"

namespace ckf {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

bool is_classical(LieType t);
std::string type_name(LieType t);
LieType type_from_name(const std::string& s);

/// Thrown when a (type, rank) combination is outside the supported range.
struct RangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Number of roots: q(q+1), 2q^2, 2q^2, 2q(q-1) for A,B,C,D and the fixed
/// counts 72, 126, 240, 48, 12 for E6, E7, E8, F4, G2.
long expected_root_count(LieType t, int rank);

struct RootSystem {
  LieType type;
  std::string label;
  int rank = 0;
  int coord_dim = 0;  // n+1 for A_n, rank otherwise
  std::vector<ExactVec> roots;
  std::vector<ExactVec> simple_roots;
  std::string scale_note;

  bool contains_root(const ExactVec& alpha) const;
  std::vector<ExactVec> positive_roots() const;  // relative to the simple base
};

RootSystem build_root_system(LieType t, int rank);

/// Reflection in the mirror normal alpha: v - (2<v,a>/<a,a>) a, exact.
ExactVec reflect(const ExactVec& v, const ExactVec& alpha);

struct OrbitSet {
  std::vector<ExactVec> vectors;  // vectors[0] is the seed
  std::vector<int> parent;        // BFS tree, -1 for the seed
  std::vector<int> via_generator;
  bool truncated = false;
  std::size_t cap = 0;

  /// generator indices applied seed-to-element, in application order
  std::vector<int> word(std::size_t index) const;
};

/// Breadth-first closure of v under reflections in the generator roots.
OrbitSet weyl_orbit(const ExactVec& v, const std::vector<ExactVec>& generators, std::size_t cap);

/// The unique orbit element in the closed chamber <v, alpha_i> >= 0.
ExactVec dominant_representative(const ExactVec& v, const std::vector<ExactVec>& simple_roots);

/// All unordered pairs {alpha, beta} of roots with <alpha,beta> = 0 and
/// beta != +-alpha.
std::vector<std::pair<ExactVec, ExactVec>> orthogonal_root_pairs(const RootSystem& rs);

/// Root-closed subset selected by a predicate, re-based over the same
/// coordinates. Throws if the selection is not closed under negation.
RootSystem subsystem(const RootSystem& rs, const std::function<bool(const ExactVec&)>& pred,
                     const std::string& label);

/// Canonical form of v up to the Weyl group generated by `simple_roots`,
/// positive/negative scaling, and optionally the D_n outer flip (reflection
/// in the last coordinate axis). Scales so the largest |coordinate| is 1.
ExactVec canonical_up_to_weyl_scale(const ExactVec& v, const std::vector<ExactVec>& simple_roots,
                                    bool dn_outer_flip);

}  // namespace ckf
