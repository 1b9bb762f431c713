#include "permon/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace permon::perm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= (int)images_.size() || seen[v])
      throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) {
      int x = c[i], y = c[(i + 1) % c.size()];
      if (x < 0 || x >= degree) throw std::invalid_argument("cycle entry out of range");
      im[x] = y;
    }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> im(degree());
  for (int x = 0; x < degree(); ++x) im[x] = images_[rhs.images_[x]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(degree());
  for (int x = 0; x < degree(); ++x) im[images_[x]] = x;
  return Permutation(std::move(im));
}

Permutation Permutation::power(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Permutation acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  auto dec = cycle_decomposition(*this);
  if (dec.cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : dec.cycles) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

int CycleType::degree() const {
  int d = fixed_points;
  for (auto& [len, cnt] : length_counts) d += len * cnt;
  return d;
}

std::string CycleType::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = length_counts.rbegin(); it != length_counts.rend(); ++it)
    for (int k = 0; k < it->second; ++k) {
      if (!first) os << '+';
      os << it->first;
      first = false;
    }
  for (int k = 0; k < fixed_points; ++k) {
    if (!first) os << '+';
    os << 1;
    first = false;
  }
  return os.str();
}

CycleType CycleDecomposition::type() const {
  CycleType t;
  t.fixed_points = fixed_points;
  for (const auto& c : cycles) ++t.length_counts[(int)c.size()];
  return t;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  std::vector<bool> seen(p.degree(), false);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    int y = x;
    do {
      seen[y] = true;
      orbit.push_back(y);
      y = p(y);
    } while (y != x);
    if (orbit.size() == 1)
      ++out.fixed_points;
    else
      out.cycles.push_back(std::move(orbit));
  }
  return out;
}

int sign(const Permutation& p) {
  // (-1)^(n - #orbits): each k-cycle contributes k - 1 transpositions
  auto dec = cycle_decomposition(p);
  int transpositions = 0;
  for (const auto& c : dec.cycles) transpositions += (int)c.size() - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

Permutation block_diagonal_embed(const Permutation& p, int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  int n = p.degree();
  std::vector<int> im(n * copies);
  for (int k = 0; k < copies; ++k)
    for (int i = 0; i < n; ++i) im[i + n * k] = p(i) + n * k;
  return Permutation(std::move(im));
}

Permutation grid_transpose(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("grid sides must be >= 1");
  std::vector<int> im(a * b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) im[i + a * j] = j + b * i;
  return Permutation(std::move(im));
}

RootResult has_pth_root(const Permutation& p, int q) {
  if (q < 2) throw std::invalid_argument("root exponent must be a prime >= 2");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("root exponent must be prime");

  auto dec = cycle_decomposition(p);
  std::map<int, std::vector<std::vector<int>>> by_length;
  for (auto& c : dec.cycles) by_length[(int)c.size()].push_back(c);

  // criterion: lengths divisible by q must occur a multiple of q times
  for (auto& [len, cycles] : by_length)
    if (len % q == 0 && cycles.size() % q != 0) return {false, std::nullopt};

  // witness: cycles of length m with q | m are interleaved in groups of q
  // into a single qm-cycle; a lone m-cycle c (gcd(m, q) = 1) has root c^u
  // with u q = 1 mod m.
  std::vector<int> im(p.degree());
  std::iota(im.begin(), im.end(), 0);
  auto set_cycle = [&](const std::vector<int>& c) {
    for (size_t i = 0; i < c.size(); ++i) im[c[i]] = c[(i + 1) % c.size()];
  };
  for (auto& [len, cycles] : by_length) {
    if (len % q == 0) {
      for (size_t g = 0; g < cycles.size(); g += q) {
        std::vector<int> big;
        big.reserve((size_t)len * q);
        for (int i = 0; i < len; ++i)
          for (int j = 0; j < q; ++j) big.push_back(cycles[g + j][i]);
        set_cycle(big);
      }
    } else {
      int u = 1;
      while ((u * q) % len != 1) ++u;
      for (auto& c : cycles) {
        std::vector<int> r;
        r.reserve(c.size());
        for (size_t i = 0, pos = 0; i < c.size(); ++i, pos = (pos + u) % len)
          r.push_back(c[pos]);
        set_cycle(r);
      }
    }
  }
  Permutation witness{std::move(im)};
  if (!(witness.power(q) == p)) throw std::logic_error("root witness failed verification");
  return {true, witness};
}

std::optional<Permutation> conjugator(const Permutation& p, const Permutation& r) {
  if (p.degree() != r.degree()) throw std::invalid_argument("degree mismatch");
  auto dp = cycle_decomposition(p), dr = cycle_decomposition(r);
  if (dp.type() != dr.type()) return std::nullopt;

  auto sort_by_length = [](std::vector<std::vector<int>>& cs) {
    std::stable_sort(cs.begin(), cs.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  };
  sort_by_length(dp.cycles);
  sort_by_length(dr.cycles);

  std::vector<int> im(p.degree(), -1);
  for (size_t k = 0; k < dp.cycles.size(); ++k)
    for (size_t i = 0; i < dp.cycles[k].size(); ++i) im[dp.cycles[k][i]] = dr.cycles[k][i];
  std::vector<int> fp, fr;
  for (int x = 0; x < p.degree(); ++x) {
    if (p(x) == x) fp.push_back(x);
    if (r(x) == x) fr.push_back(x);
  }
  for (size_t i = 0; i < fp.size(); ++i) im[fp[i]] = fr[i];
  Permutation g{std::move(im)};
  if (!(g * p * g.inverse() == r)) throw std::logic_error("conjugator failed verification");
  return g;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup generate_group(const std::vector<Permutation>& gens, long long order_bound) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

  std::set<Permutation> seen;
  std::queue<Permutation> todo;
  auto push = [&](Permutation p) {
    if (seen.insert(p).second) {
      if ((long long)seen.size() > order_bound)
        throw GroupTooLargeError("group order exceeds bound " + std::to_string(order_bound));
      todo.push(std::move(p));
    }
  };
  push(Permutation::identity(degree));
  for (const auto& g : gens) push(g);
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      push(cur * g);
      push(g * cur);
    }
  }
  PermGroup out;
  out.degree = degree;
  out.generators = gens;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

PermGroup symmetric_group(int n) {
  if (n <= 1) return generate_group({Permutation::identity(std::max(n, 1))}, 2);
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(Permutation::from_cycles(n, {{i, i + 1}}));
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  return generate_group(gens, order);
}

PermGroup alternating_group(int n) {
  if (n <= 2) return generate_group({Permutation::identity(std::max(n, 1))}, 2);
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) gens.push_back(Permutation::from_cycles(n, {{i, i + 1, i + 2}}));
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  return generate_group(gens, order / 2);
}

PermGroup commutator_subgroup(const PermGroup& g) {
  // normal closure of commutators of generators
  std::vector<Permutation> hgens;
  auto add_unique = [&](const Permutation& p) {
    if (!p.is_identity() && std::find(hgens.begin(), hgens.end(), p) == hgens.end())
      hgens.push_back(p);
  };
  for (const auto& a : g.generators)
    for (const auto& b : g.generators) add_unique(a * b * a.inverse() * b.inverse());
  if (hgens.empty()) {
    PermGroup triv;
    triv.degree = g.degree;
    triv.generators = {Permutation::identity(g.degree)};
    triv.elements = {Permutation::identity(g.degree)};
    return triv;
  }
  // close under conjugation by the generators of g
  for (size_t i = 0; i < hgens.size(); ++i)
    for (const auto& c : g.generators) {
      Permutation conj = c * hgens[i] * c.inverse();
      add_unique(conj);
    }
  return generate_group(hgens, g.order());
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = commutator_subgroup(series.back());
    bool stabilized = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stabilized || series.back().order() == 1) break;
  }
  return series;
}

PermGroup perfect_core(const PermGroup& g) { return derived_series(g).back(); }

bool is_perfect(const PermGroup& g) { return commutator_subgroup(g).order() == g.order(); }

bool is_hypoabelian(const PermGroup& g) { return perfect_core(g).order() == 1; }

}  // namespace permon::perm
