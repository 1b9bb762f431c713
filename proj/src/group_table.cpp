#include "permon/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace permon::grp {

int FiniteGroupTable::inv(int a) const {
  for (int b = 0; b < n; ++b)
    if (mul(a, b) == id) return b;
  throw std::logic_error("element has no inverse");
}

int FiniteGroupTable::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int acc = id, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroupTable::order_of(int a) const {
  int k = 1, x = a;
  while (x != id) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long long FiniteGroupTable::exponent() const {
  long long e = 1;
  for (int a = 0; a < n; ++a) e = std::lcm(e, (long long)order_of(a));
  return e;
}

bool FiniteGroupTable::abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroupTable FiniteGroupTable::validated(int n, std::vector<int> table, int id,
                                             std::string name) {
  if (n < 1 || (int)table.size() != n * n || id < 0 || id >= n)
    throw std::invalid_argument("malformed group table");
  FiniteGroupTable g;
  g.n = n;
  g.table = std::move(table);
  g.id = id;
  g.name = std::move(name);
  for (int a = 0; a < n; ++a) {
    if (g.mul(g.id, a) != a || g.mul(a, g.id) != a)
      throw std::invalid_argument("identity law fails");
    std::vector<bool> seen(n, false);
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b);
      if (ab < 0 || ab >= n) throw std::invalid_argument("table entry out of range");
      if (seen[ab]) throw std::invalid_argument("row is not a permutation");
      seen[ab] = true;
      if (ab == g.id) has_inverse = true;
    }
    if (!has_inverse) throw std::invalid_argument("element has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("associativity fails");
  return g;
}

FiniteGroupTable trivial_group() { return FiniteGroupTable::validated(1, {0}, 0, "1"); }

FiniteGroupTable cyclic_group(int n) {
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroupTable::validated(n, std::move(t), 0, "Z" + std::to_string(n));
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  int n = a.n * b.n;
  std::vector<int> t(n * n);
  auto enc = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[enc(x1, y1) * n + enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroupTable::validated(n, std::move(t), enc(a.id, b.id),
                                     a.name + "x" + b.name);
}

FiniteGroupTable dihedral_group(int n) {
  // elements r^i s^e, encoded i + n*e
  int m = 2 * n;
  std::vector<int> t(m * m);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < n; ++j)
        for (int f = 0; f < 2; ++f) {
          // (r^i s^e)(r^j s^f) = r^(i + (-1)^e j) s^(e+f)
          int k = ((i + (e ? n - j : j)) % n + n) % n;
          t[(i + n * e) * m + (j + n * f)] = k + n * ((e + f) % 2);
        }
  return FiniteGroupTable::validated(m, std::move(t), 0, "D" + std::to_string(n));
}

FiniteGroupTable quaternion_group() {
  // 1, -1, i, -i, j, -j, k, -k as 0..7; sign bit is the low bit
  auto enc = [](int unit, int sign) { return unit * 2 + sign; };
  // unit multiplication with sign: 0=1,1=i,2=j,3=k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mul[a][b]: extra sign of e_a * e_b (i*i=-1, i*j=k, j*i=-k, ...)
  std::vector<int> t(64);
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          int u = unit_mul[a][b];
          int s = (sa + sb + sign_mul[a][b]) % 2;
          t[enc(a, sa) * 8 + enc(b, sb)] = enc(u, s);
        }
  return FiniteGroupTable::validated(8, std::move(t), 0, "Q8");
}

FiniteGroupTable from_perm_group(const perm::PermGroup& g, std::string name) {
  int n = (int)g.elements.size();
  std::vector<int> t(n * (size_t)n);
  auto index_of = [&](const perm::Permutation& p) {
    return (int)(std::lower_bound(g.elements.begin(), g.elements.end(), p) - g.elements.begin());
  };
  int id = index_of(perm::Permutation::identity(g.degree));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * (size_t)n + b] = index_of(g.elements[a] * g.elements[b]);
  return FiniteGroupTable::validated(n, std::move(t), id, std::move(name));
}

namespace {

// Lexicographically minimal relabeling (identity fixed at 0) decides
// canonicity; cheap at n <= 8.
bool is_canonical(int n, const std::vector<int>& t) {
  std::vector<int> perm(n), relabeled(n * n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> inv(n);
  do {
    if (perm[0] != 0) break;  // identity stays at 0; permutations sorted, prune rest
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    bool smaller = false, bigger = false;
    for (int a = 0; a < n && !smaller && !bigger; ++a)
      for (int b = 0; b < n; ++b) {
        int v = perm[t[inv[a] * n + inv[b]]];
        int w = t[a * n + b];
        if (v < w) {
          smaller = true;
          break;
        }
        if (v > w) {
          bigger = true;
          break;
        }
      }
    if (smaller) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

void search_groups(int n, std::vector<int>& t, std::vector<unsigned>& row_used,
                   std::vector<unsigned>& col_used, int pos,
                   std::vector<FiniteGroupTable>& out) {
  // skip cells fixed by the identity row/column
  while (pos < n * n) {
    int a = pos / n, b = pos % n;
    if (a == 0 || b == 0) ++pos;
    else break;
  }
  if (pos == n * n) {
    // full associativity check, then canonicity
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return;
    if (!is_canonical(n, t)) return;
    out.push_back(FiniteGroupTable::validated(n, t, 0));
    return;
  }
  int a = pos / n, b = pos % n;
  for (int v = 0; v < n; ++v) {
    if (row_used[a] & (1u << v)) continue;
    if (col_used[b] & (1u << v)) continue;
    t[a * n + b] = v;
    // partial associativity: every triple whose products are all decided
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      // (a*b)*x vs a*(b*x)
      if (t[b * n + x] >= 0 && t[v * n + x] >= 0 && t[a * n + t[b * n + x]] >= 0 &&
          t[v * n + x] != t[a * n + t[b * n + x]])
        ok = false;
      // (x*a)*b vs x*(a*b)
      if (ok && t[x * n + a] >= 0 && t[t[x * n + a] * n + b] >= 0 && t[x * n + v] >= 0 &&
          t[t[x * n + a] * n + b] != t[x * n + v])
        ok = false;
    }
    if (ok) {
      row_used[a] |= 1u << v;
      col_used[b] |= 1u << v;
      search_groups(n, t, row_used, col_used, pos + 1, out);
      row_used[a] &= ~(1u << v);
      col_used[b] &= ~(1u << v);
    }
    t[a * n + b] = -1;
  }
}

}  // namespace

std::vector<FiniteGroupTable> enumerate_groups(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("group enumeration supports 1 <= n <= 8");
  std::vector<int> t(n * n, -1);
  std::vector<unsigned> row_used(n, 0), col_used(n, 0);
  for (int i = 0; i < n; ++i) {
    t[0 * n + i] = i;
    t[i * n + 0] = i;
    row_used[0] |= 1u << i;
    col_used[0] |= 1u << i;
    row_used[i] |= 1u << i;
    col_used[i] |= 1u << i;
  }
  std::vector<FiniteGroupTable> out;
  search_groups(n, t, row_used, col_used, 0, out);
  return out;
}

std::vector<int> generated_subgroup(const FiniteGroupTable& g, std::vector<int> gens) {
  std::set<int> seen{g.id};
  std::queue<int> todo;
  todo.push(g.id);
  for (int x : gens)
    if (seen.insert(x).second) todo.push(x);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int x : gens) {
      for (int y : {g.mul(cur, x), g.mul(x, cur)})
        if (seen.insert(y).second) todo.push(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> generating_set(const FiniteGroupTable& g) {
  std::vector<int> gens;
  std::vector<int> have{g.id};
  while ((int)have.size() < g.n) {
    for (int x = 0; x < g.n; ++x)
      if (!std::binary_search(have.begin(), have.end(), x)) {
        gens.push_back(x);
        break;
      }
    have = generated_subgroup(g, gens);
  }
  return gens;
}

}  // namespace permon::grp
