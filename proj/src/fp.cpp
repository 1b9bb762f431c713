#include "permon/fp.hpp"

#include <algorithm>

namespace permon::fp {

Field::Field(int prime) : p(prime) {
  if (prime < 2) throw std::invalid_argument("field characteristic must be >= 2");
  for (int d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("field characteristic must be prime");
}

int Field::inv(int a) const {
  if (a % p == 0) throw std::invalid_argument("inverse of zero");
  // extended euclid
  int t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return t < 0 ? t + p : t;
}

SparseVec sparse_normalize(const Field& F, std::vector<std::pair<int, int>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  size_t i = 0;
  while (i < terms.size()) {
    int idx = terms[i].first;
    int c = 0;
    while (i < terms.size() && terms[i].first == idx) {
      c = F.add(c, F.of_int(terms[i].second));
      ++i;
    }
    if (c != 0) out.emplace_back(idx, c);
  }
  return out;
}

SparseVec sparse_add(const Field& F, const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      int c = F.add(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const Field& F, const SparseVec& a, int c) {
  c = F.of_int(c);
  if (c == 0) return {};
  SparseVec out;
  out.reserve(a.size());
  for (auto& [i, v] : a) out.emplace_back(i, F.mul(v, c));
  return out;
}

Eliminator::Eliminator(int p, int rows)
    : p_(p), rows_(rows), words_((rows + 63) / 64), npiv_(0), F_(p), row_pivot_(rows, -1) {
  if (p_ == 2)
    wbuf_.assign(words_, 0);
  else
    bbuf_.assign(rows_, 0);
}

int Eliminator::tag_of(int pivot_id) const {
  return p_ == 2 ? bpiv_[pivot_id].tag : fpiv_[pivot_id].tag;
}

SparseVec Eliminator::column_of(int pivot_id) const {
  SparseVec out;
  if (p_ == 2) {
    const auto& pv = bpiv_[pivot_id];
    for (int w = 0; w < words_; ++w) {
      uint64_t x = pv.bits[w];
      while (x) {
        int b = __builtin_ctzll(x);
        out.emplace_back(w * 64 + b, 1);
        x &= x - 1;
      }
    }
  } else {
    const auto& pv = fpiv_[pivot_id];
    for (int r = 0; r < rows_; ++r)
      if (pv.col[r]) out.emplace_back(r, pv.col[r]);
  }
  return out;
}

Eliminator::Reduction Eliminator::reduce(const SparseVec& col, bool insert, int tag,
                                         bool track_used) {
  Reduction res;
  if (p_ == 2) {
    std::fill(wbuf_.begin(), wbuf_.end(), 0);
    for (auto& [r, c] : col)
      if (c & 1) wbuf_[r >> 6] ^= 1ull << (r & 63);
    int w = 0;
    while (true) {
      while (w < words_ && wbuf_[w] == 0) ++w;
      if (w == words_) {
        res.zero = true;
        return res;
      }
      int r = w * 64 + __builtin_ctzll(wbuf_[w]);
      int id = row_pivot_[r];
      if (id < 0) {
        if (!insert) return res;
        PivotBits pv;
        pv.row = r;
        pv.tag = tag;
        pv.bits = wbuf_;
        bpiv_.push_back(std::move(pv));
        row_pivot_[r] = res.pivot_id = (int)bpiv_.size() - 1;
        ++npiv_;
        return res;
      }
      const auto& pb = bpiv_[id].bits;
      for (int k = w; k < words_; ++k) wbuf_[k] ^= pb[k];
      if (track_used) res.used.emplace_back(id, 1);
    }
  } else {
    std::fill(bbuf_.begin(), bbuf_.end(), 0);
    for (auto& [r, c] : col) bbuf_[r] = (uint8_t)F_.of_int(bbuf_[r] + c);
    int r = 0;
    while (true) {
      while (r < rows_ && bbuf_[r] == 0) ++r;
      if (r == rows_) {
        res.zero = true;
        return res;
      }
      int id = row_pivot_[r];
      if (id < 0) {
        if (!insert) return res;
        PivotBytes pv;
        pv.row = r;
        pv.tag = tag;
        pv.col.assign(bbuf_.begin(), bbuf_.end());
        int s = F_.inv(pv.col[r]);
        if (s != 1)
          for (auto& x : pv.col) x = (uint8_t)F_.mul(x, s);
        fpiv_.push_back(std::move(pv));
        row_pivot_[r] = res.pivot_id = (int)fpiv_.size() - 1;
        ++npiv_;
        return res;
      }
      int c = bbuf_[r];  // pivot normalized to 1 at r
      const auto& pc = fpiv_[id].col;
      for (int k = r; k < rows_; ++k)
        if (pc[k]) bbuf_[k] = (uint8_t)F_.sub(bbuf_[k], F_.mul(c, pc[k]));
      if (track_used) res.used.emplace_back(id, c);
    }
  }
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(const Field& F, DenseMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    int s = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      int f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const Field& F, DenseMat m) { return (int)echelon(F, m).size(); }

std::optional<std::vector<int>> solve(const Field& F, const DenseMat& m,
                                      const std::vector<int>& b) {
  DenseMat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = F.of_int(m.at(i, j));
    aug.at(i, m.cols) = F.of_int(b[i]);
  }
  auto pivots = echelon(F, aug);
  std::vector<int> x(m.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols) return std::nullopt;  // inconsistent
    x[pivots[r]] = aug.at((int)r, m.cols);
  }
  return x;
}

std::vector<std::vector<int>> kernel_basis(const Field& F, const DenseMat& m) {
  DenseMat e = m;
  for (auto& v : e.a) v = F.of_int(v);
  auto pivots = echelon(F, e);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<int>> out;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(m.cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(e.at((int)r, c));
    out.push_back(std::move(v));
  }
  return out;
}

DenseMat matmul(const Field& F, const DenseMat& a, const DenseMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
  DenseMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      int v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, b.at(k, j)));
    }
  return out;
}

}  // namespace permon::fp
