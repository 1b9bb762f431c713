#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace permon::intlin {

using Int = long long;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;  // row-major, rectangular

Mat identity(int n);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& v);

// Smith normal form: u * a * v = d with u, v unimodular and d diagonal with
// d[0] | d[1] | ... (nonnegative). Entries must stay small; overflow aborts.
struct Smith {
  Mat u, d, v;
  std::vector<Int> diagonal() const;
};
Smith smith_normal_form(Mat a);

int integer_rank(Mat a);

// Solves a x = b over the integers (one solution), if any.
std::optional<Vec> solve_integer(const Mat& a, const Vec& b);

// Exact rationals on 64-bit words with overflow checks; fine at desk scale.
struct Rat {
  Int num = 0, den = 1;
  Rat() = default;
  Rat(Int n);
  Rat(Int n, Int d);
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const;
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }
  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
};

// Linear constraint sum(coef[i] * x[i]) >= rhs, strict when `strict`.
struct Constraint {
  std::vector<Rat> coef;
  Rat rhs;
  bool strict = false;
};

// Fourier-Motzkin feasibility over the rationals; returns a witness point.
std::optional<std::vector<Rat>> fm_feasible(std::vector<Constraint> cons, int nvars);

// Integer functional phi with phi.g >= 0 for all rows of `nonneg`,
// phi.g == 0 for rows of `zero`, phi.g >= 1 for rows of `positive`.
std::optional<Vec> separating_functional(const Mat& nonneg, const Mat& zero,
                                         const Mat& positive, int dim);

}  // namespace permon::intlin
