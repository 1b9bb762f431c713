#pragma once

#include <string>
#include <vector>

#include "permon/perm.hpp"

namespace permon::grp {

// A finite group by its multiplication table. Axioms are checked exhaustively
// at construction.
struct FiniteGroupTable {
  int n = 1;
  std::vector<int> table;  // row-major: table[a*n + b] = a*b
  int id = 0;
  std::string name;

  int mul(int a, int b) const { return table[a * n + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int order_of(int a) const;
  long long exponent() const;
  bool abelian() const;

  static FiniteGroupTable validated(int n, std::vector<int> table, int id,
                                    std::string name = "");
};

FiniteGroupTable trivial_group();
FiniteGroupTable cyclic_group(int n);
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
FiniteGroupTable dihedral_group(int n);   // order 2n
FiniteGroupTable quaternion_group();      // order 8
FiniteGroupTable from_perm_group(const perm::PermGroup& g, std::string name = "");

// All groups of order n up to isomorphism, as canonical tables. Backtracking
// over Cayley tables with Latin-square and associativity pruning; feasible
// for n <= 8.
std::vector<FiniteGroupTable> enumerate_groups(int n);

// Subgroup of indices generated by a set, as sorted element ids.
std::vector<int> generated_subgroup(const FiniteGroupTable& g, std::vector<int> gens);
std::vector<int> generating_set(const FiniteGroupTable& g);

}  // namespace permon::grp
