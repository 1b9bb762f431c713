#include "permon/telescope.hpp"

#include <set>
#include <stdexcept>

namespace permon::telescope {

using perm::Permutation;

DirectSystem DirectSystem::symmetric_powers(int p) {
  if (p < 2) throw std::invalid_argument("base must be >= 2");
  DirectSystem sys;
  sys.base = p;
  sys.degree_at = [p](int level) {
    int d = 1;
    for (int i = 0; i < level; ++i) d *= p;
    return d;
  };
  sys.transition = [p](const Permutation& g, int) { return perm::block_diagonal_embed(g, p); };
  sys.generators_at = [p, deg = sys.degree_at](int level) {
    int n = deg(level);
    std::vector<Permutation> gens;
    for (int i = 0; i + 1 < n; ++i) gens.push_back(Permutation::from_cycles(n, {{i, i + 1}}));
    if (gens.empty()) gens.push_back(Permutation::identity(n));
    return gens;
  };
  sys.max_level = p == 2 ? 6 : 4;
  return sys;
}

DirectSystem DirectSystem::constant(std::vector<Permutation> gens, int base) {
  if (gens.empty()) throw std::invalid_argument("need generators");
  int n = gens[0].degree();
  DirectSystem sys;
  sys.base = base;
  sys.degree_at = [n](int) { return n; };
  sys.transition = [](const Permutation& g, int) { return g; };
  sys.generators_at = [gens](int) { return gens; };
  sys.max_level = 8;
  return sys;
}

void DirectSystem::validate(int levels) const {
  for (int k = 0; k < levels; ++k) {
    auto gens = generators_at(k);
    std::vector<Permutation> sample = gens;
    for (const auto& a : gens)
      for (const auto& b : gens) sample.push_back(a * b);
    std::set<Permutation> images;
    std::set<Permutation> inputs;
    for (const auto& s : sample) {
      if (!inputs.insert(s).second) continue;
      Permutation t = transition(s, k);
      if (t.degree() != degree_at(k + 1))
        throw std::logic_error("transition lands in the wrong degree");
      if (!images.insert(t).second)
        throw std::logic_error("transition is not injective on sampled elements");
    }
    for (const auto& a : gens)
      for (const auto& b : gens)
        if (!(transition(a * b, k) == transition(a, k) * transition(b, k)))
          throw std::logic_error("transition is not a homomorphism on sampled elements");
  }
}

TelescopeElement stabilize(const DirectSystem& sys, TelescopeElement e, int target) {
  if (target < e.level) throw std::invalid_argument("target below element level");
  while (e.level < target) {
    e.value = sys.transition(e.value, e.level);
    ++e.level;
  }
  return e;
}

bool colimit_equal(const DirectSystem& sys, const TelescopeElement& a, const TelescopeElement& b) {
  int to = std::max(a.level, b.level);
  return stabilize(sys, a, to).value == stabilize(sys, b, to).value;
}

AbelianProbe abelianness_probe(const DirectSystem& sys, int max_level) {
  if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
  AbelianProbe out;
  for (int level = 1; level <= max_level; ++level) {
    auto gens = sys.generators_at(level);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        if (!(gens[i] * gens[j] == gens[j] * gens[i])) {
          out.abelian = false;
          out.levels_checked = level;
          out.witness = {{level, gens[i]}, {level, gens[j]}};
          return out;
        }
    out.levels_checked = level;
  }
  return out;
}

namespace {

BlockFactorReport block_factors(const Permutation& v, int block_size) {
  BlockFactorReport rep;
  int n = v.degree();
  if (block_size <= 0 || n % block_size != 0) return rep;
  int blocks = n / block_size;
  for (int x = 0; x < n; ++x)
    if (v(x) / block_size != x / block_size) return rep;  // not block-diagonal
  rep.splits = true;
  std::vector<Permutation> factors;
  for (int k = 0; k < blocks; ++k) {
    // factor supported on block k, identity elsewhere
    std::vector<int> im(n);
    for (int x = 0; x < n; ++x) im[x] = (x / block_size == k) ? v(x) : x;
    factors.push_back(Permutation(std::move(im)));
  }
  rep.factors_pairwise_conjugate = true;
  for (auto& f : factors) rep.factor_types.push_back(perm::cycle_decomposition(f).type());
  for (size_t i = 0; i + 1 < factors.size(); ++i)
    if (!perm::conjugator(factors[i], factors[i + 1])) rep.factors_pairwise_conjugate = false;
  return rep;
}

}  // namespace

std::vector<DivisibilityLevel> divisibility_probe(const DirectSystem& sys, TelescopeElement e,
                                                  int q, int max_level) {
  if (max_level < e.level) throw std::invalid_argument("max_level below element level");
  if (max_level > sys.max_level)
    throw std::invalid_argument("max_level exceeds the system level cap");
  std::vector<DivisibilityLevel> out;
  for (int level = e.level; level <= max_level; ++level) {
    TelescopeElement cur = stabilize(sys, e, level);
    DivisibilityLevel rep;
    rep.level = level;
    rep.degree = cur.value.degree();
    rep.cycle_type = perm::cycle_decomposition(cur.value).type();
    auto root = perm::has_pth_root(cur.value, q);
    rep.has_root = root.exists;
    rep.witness = root.witness;
    if (level > e.level) {
      int prev_degree = sys.degree_at(level - 1);
      rep.blocks = block_factors(cur.value, prev_degree);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace permon::telescope
