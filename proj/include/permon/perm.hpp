#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permon::perm {

// Permutations act on {0, ..., n-1}. Composition applies the right factor
// first: (p * q)(x) = p(q(x)). All serialization respects the image array.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return (int)images_.size(); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;  // apply rhs first
  Permutation inverse() const;
  Permutation power(long long e) const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

  std::string cycle_string() const;

 private:
  std::vector<int> images_;
};

struct CycleType {
  std::map<int, int> length_counts;  // cycle length (>= 2) -> count
  int fixed_points = 0;
  int degree() const;
  bool operator==(const CycleType&) const = default;
  std::string str() const;
};

struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;  // each length >= 2, least element first
  int fixed_points = 0;
  CycleType type() const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);
int sign(const Permutation& p);

// Diagonal embedding sigma -> (sigma, ..., sigma): block k holds a copy of p.
Permutation block_diagonal_embed(const Permutation& p, int copies);

// Transpose of an a x b grid under x = i + a*j: sends i + a*j to j + b*i.
Permutation grid_transpose(int a, int b);

struct RootResult {
  bool exists = false;
  std::optional<Permutation> witness;
};
// Existence of r with r^q = p, q prime, by the cycle-type criterion; the
// witness is built by interleaving cycles and is verified.
RootResult has_pth_root(const Permutation& p, int q);

// Conjugator g with g p g^{-1} = r, when cycle types agree.
std::optional<Permutation> conjugator(const Permutation& p, const Permutation& r);

class GroupTooLargeError : public std::runtime_error {
 public:
  explicit GroupTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, closed; contains identity
  long long order() const { return (long long)elements.size(); }
  bool contains(const Permutation& p) const;
};

constexpr long long kDefaultOrderBound = 10000;

PermGroup generate_group(const std::vector<Permutation>& gens,
                         long long order_bound = kDefaultOrderBound);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);

// Commutator subgroup computed as the normal closure of generator
// commutators; agrees with the subgroup generated by all commutators.
PermGroup commutator_subgroup(const PermGroup& g);
std::vector<PermGroup> derived_series(const PermGroup& g);
PermGroup perfect_core(const PermGroup& g);
bool is_perfect(const PermGroup& g);
bool is_hypoabelian(const PermGroup& g);

}  // namespace permon::perm
