#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "permon/perm.hpp"

namespace permon::telescope {

// A direct system of permutation groups along injective homomorphisms.
// Groups are never materialized; levels are visited through degrees,
// generator lists and a per-step transition on elements.
struct DirectSystem {
  int base = 2;  // p >= 2
  std::function<int(int)> degree_at;
  std::function<perm::Permutation(const perm::Permutation&, int)> transition;  // level k -> k+1
  std::function<std::vector<perm::Permutation>(int)> generators_at;
  int max_level = 6;

  // Levels k >= 0 carry Sym(p^k); transitions are diagonal block embeddings.
  static DirectSystem symmetric_powers(int p);
  // Constant system: the same generators at every level, identity transitions.
  static DirectSystem constant(std::vector<perm::Permutation> gens, int base = 2);

  // Sampled sanity check: transitions are injective homomorphisms on the
  // level generators and their pairwise products.
  void validate(int levels) const;
};

struct TelescopeElement {
  int level = 0;
  perm::Permutation value;
};

TelescopeElement stabilize(const DirectSystem& sys, TelescopeElement e, int target);
bool colimit_equal(const DirectSystem& sys, const TelescopeElement& a, const TelescopeElement& b);

struct AbelianProbe {
  bool abelian = true;
  int levels_checked = 0;
  std::optional<std::pair<TelescopeElement, TelescopeElement>> witness;
};
// Scans generator pairs level by level; a non-commuting pair at level k stays
// non-commuting at all later levels because transitions are injective.
AbelianProbe abelianness_probe(const DirectSystem& sys, int max_level);

struct BlockFactorReport {
  bool splits = false;                // value preserves the level's blocks
  bool factors_pairwise_conjugate = false;
  std::vector<perm::CycleType> factor_types;
};

struct DivisibilityLevel {
  int level = 0;
  int degree = 0;
  perm::CycleType cycle_type;
  bool has_root = false;
  std::optional<perm::Permutation> witness;
  std::optional<BlockFactorReport> blocks;  // relative to the previous level
};

std::vector<DivisibilityLevel> divisibility_probe(const DirectSystem& sys, TelescopeElement e,
                                                  int q, int max_level);

}  // namespace permon::telescope
