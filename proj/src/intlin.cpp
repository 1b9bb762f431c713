#include "permon/intlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace permon::intlin {

namespace {

Int checked_mul(Int a, Int b) {
  __int128 r = (__int128)a * b;
  if (r > INT64_MAX / 4 || r < INT64_MIN / 4)
    throw std::overflow_error("integer overflow in exact arithmetic");
  return (Int)r;
}

Int gcd_ll(Int a, Int b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  int n = (int)a.size(), k = (int)b.size(), m = k ? (int)b[0].size() : 0;
  Mat out(n, Vec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (!a[i][t]) continue;
      for (int j = 0; j < m; ++j) out[i][j] += checked_mul(a[i][t], b[t][j]);
    }
  return out;
}

Vec matvec(const Mat& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += checked_mul(a[i][j], v[j]);
  return out;
}

std::vector<Int> Smith::diagonal() const {
  std::vector<Int> out;
  size_t n = d.size(), m = n ? d[0].size() : 0;
  for (size_t i = 0; i < std::min(n, m); ++i) out.push_back(d[i][i]);
  return out;
}

Smith smith_normal_form(Mat a) {
  int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
  Smith s{identity(n), std::move(a), identity(m)};
  Mat& d = s.d;

  auto row_op = [&](int i, int j, Int q) {  // row i -= q * row j
    for (int c = 0; c < m; ++c) d[i][c] -= checked_mul(q, d[j][c]);
    for (int c = 0; c < n; ++c) s.u[i][c] -= checked_mul(q, s.u[j][c]);
  };
  auto col_op = [&](int i, int j, Int q) {  // col i -= q * col j
    for (int r = 0; r < n; ++r) d[r][i] -= checked_mul(q, d[r][j]);
    for (int r = 0; r < m; ++r) s.v[r][i] -= checked_mul(q, s.v[r][j]);
  };
  auto swap_rows = [&](int i, int j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(d[r][i], d[r][j]);
    for (int r = 0; r < m; ++r) std::swap(s.v[r][i], s.v[r][j]);
  };

  int t = 0;
  while (t < n && t < m) {
    // find minimal nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (d[i][j] != 0 &&
            (pi < 0 || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool again = false;
    for (int i = t + 1; i < n; ++i) {
      if (d[i][t] == 0) continue;
      Int q = d[i][t] / d[t][t];
      row_op(i, t, q);
      if (d[i][t] != 0) again = true;
    }
    for (int j = t + 1; j < m; ++j) {
      if (d[t][j] == 0) continue;
      Int q = d[t][j] / d[t][t];
      col_op(j, t, q);
      if (d[t][j] != 0) again = true;
    }
    if (again) continue;
    // enforce divisibility d[t][t] | d[i][j]
    bool fixed = true;
    for (int i = t + 1; i < n && fixed; ++i)
      for (int j = t + 1; j < m && fixed; ++j)
        if (d[i][j] % d[t][t] != 0) {
          // add row i to row t, then restart the step
          for (int c = 0; c < m; ++c) d[t][c] += d[i][c];
          for (int c = 0; c < n; ++c) s.u[t][c] += s.u[i][c];
          fixed = false;
        }
    if (!fixed) continue;
    if (d[t][t] < 0) {
      for (int c = 0; c < m; ++c) d[t][c] = -d[t][c];
      for (int c = 0; c < n; ++c) s.u[t][c] = -s.u[t][c];
    }
    ++t;
  }
  return s;
}

int integer_rank(Mat a) {
  auto s = smith_normal_form(std::move(a));
  int r = 0;
  for (Int x : s.diagonal())
    if (x != 0) ++r;
  return r;
}

std::optional<Vec> solve_integer(const Mat& a, const Vec& b) {
  int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
  auto s = smith_normal_form(a);
  Vec c = matvec(s.u, b);  // d y = c with x = v y
  Vec y(m, 0);
  auto diag = s.diagonal();
  for (int i = 0; i < n; ++i) {
    Int di = (i < (int)diag.size()) ? diag[i] : 0;
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    }
  }
  return matvec(s.v, y);
}

Rat::Rat(Int n) : num(n), den(1) {}

Rat::Rat(Int n, Int d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = gcd_ll(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(checked_mul(num, o.den) + checked_mul(o.num, den), checked_mul(den, o.den));
}
Rat Rat::operator-(const Rat& o) const {
  return Rat(checked_mul(num, o.den) - checked_mul(o.num, den), checked_mul(den, o.den));
}
Rat Rat::operator*(const Rat& o) const {
  return Rat(checked_mul(num, o.num), checked_mul(den, o.den));
}
Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw std::invalid_argument("division by zero");
  return Rat(checked_mul(num, o.den), checked_mul(den, o.num));
}
Rat Rat::operator-() const {
  Rat r;
  r.num = -num;
  r.den = den;
  return r;
}
bool Rat::operator<(const Rat& o) const {
  return (__int128)num * o.den < (__int128)o.num * den;
}

std::optional<std::vector<Rat>> fm_feasible(std::vector<Constraint> cons, int nvars) {
  // Eliminate variables from the back; then back-substitute a witness.
  std::vector<std::vector<Constraint>> stages;
  for (int v = nvars - 1; v >= 0; --v) {
    stages.push_back(cons);
    std::vector<Constraint> lower, upper, rest;
    for (auto& c : cons) {
      if (c.coef[v].sign() > 0)
        lower.push_back(c);  // x_v >= (rhs - other) / coef
      else if (c.coef[v].sign() < 0)
        upper.push_back(c);
      else
        rest.push_back(c);
    }
    for (auto& lo : lower)
      for (auto& up : upper) {
        // combine: coef_lo > 0, coef_up < 0
        Constraint nc;
        nc.coef.assign(nvars, Rat(0));
        Rat a = lo.coef[v], b = -up.coef[v];
        for (int j = 0; j < nvars; ++j) nc.coef[j] = lo.coef[j] * b + up.coef[j] * a;
        nc.rhs = lo.rhs * b + up.rhs * a;
        nc.strict = lo.strict || up.strict;
        nc.coef[v] = Rat(0);
        rest.push_back(std::move(nc));
      }
    cons = std::move(rest);
  }
  // constant constraints: 0 >= rhs
  for (auto& c : cons) {
    bool ok = c.strict ? (c.rhs < Rat(0)) : (c.rhs < Rat(0) || c.rhs == Rat(0));
    if (!ok) return std::nullopt;
  }
  // back-substitute
  std::vector<Rat> x(nvars, Rat(0));
  for (int v = 0; v < nvars; ++v) {
    auto& stage = stages[nvars - 1 - v];
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    Rat lo, up;
    for (auto& c : stage) {
      if (c.coef[v].sign() == 0) continue;
      Rat bound = c.rhs;
      for (int j = 0; j < nvars; ++j)
        if (j != v) bound = bound - c.coef[j] * x[j];
      bound = bound / c.coef[v];
      if (c.coef[v].sign() > 0) {  // x_v >= bound
        if (!has_lo || lo < bound || (lo == bound && c.strict)) {
          lo = bound;
          lo_strict = c.strict;
          has_lo = true;
        }
      } else {  // x_v <= bound
        if (!has_up || bound < up || (up == bound && c.strict)) {
          up = bound;
          up_strict = c.strict;
          has_up = true;
        }
      }
    }
    if (!has_lo && !has_up)
      x[v] = Rat(0);
    else if (has_lo && !has_up)
      x[v] = lo_strict ? lo + Rat(1) : lo;
    else if (!has_lo && has_up)
      x[v] = up_strict ? up - Rat(1) : up;
    else
      x[v] = (lo + up) * Rat(1, 2);
  }
  return x;
}

std::optional<Vec> separating_functional(const Mat& nonneg, const Mat& zero,
                                         const Mat& positive, int dim) {
  std::vector<Constraint> cons;
  auto push = [&](const Vec& g, Rat rhs, bool flip) {
    Constraint c;
    c.coef.reserve(dim);
    for (int j = 0; j < dim; ++j) c.coef.push_back(Rat(flip ? -g[j] : g[j]));
    c.rhs = rhs;
    cons.push_back(std::move(c));
  };
  for (auto& g : nonneg) push(g, Rat(0), false);
  for (auto& g : zero) {
    push(g, Rat(0), false);
    push(g, Rat(0), true);
  }
  for (auto& g : positive) push(g, Rat(1), false);
  auto w = fm_feasible(std::move(cons), dim);
  if (!w) return std::nullopt;
  Int l = 1;
  for (auto& r : *w) l = checked_mul(l / gcd_ll(l, r.den), r.den);
  Vec phi(dim);
  for (int j = 0; j < dim; ++j) phi[j] = checked_mul((*w)[j].num, l / (*w)[j].den);
  // sanity: integer scaling preserves all three families
  for (auto& g : nonneg) {
    Int s = 0;
    for (int j = 0; j < dim; ++j) s += checked_mul(phi[j], g[j]);
    if (s < 0) return std::nullopt;
  }
  for (auto& g : zero) {
    Int s = 0;
    for (int j = 0; j < dim; ++j) s += checked_mul(phi[j], g[j]);
    if (s != 0) return std::nullopt;
  }
  for (auto& g : positive) {
    Int s = 0;
    for (int j = 0; j < dim; ++j) s += checked_mul(phi[j], g[j]);
    if (s <= 0) return std::nullopt;
  }
  return phi;
}

}  // namespace permon::intlin
