#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace permon::fp {

// Arithmetic in F_p for a small prime p.
struct Field {
  int p;
  explicit Field(int prime);
  int add(int a, int b) const { int s = a + b; return s >= p ? s - p : s; }
  int sub(int a, int b) const { int s = a - b; return s < 0 ? s + p : s; }
  int mul(int a, int b) const { return int((long long)a * b % p); }
  int neg(int a) const { return a ? p - a : 0; }
  int inv(int a) const;
  int of_int(long long v) const {
    long long r = v % p;
    return int(r < 0 ? r + p : r);
  }
};

// Sparse vector: (index, coeff) pairs, strictly increasing index, coeff in [1, p).
using SparseVec = std::vector<std::pair<int, int>>;

SparseVec sparse_normalize(const Field& F, std::vector<std::pair<int, int>> terms);
SparseVec sparse_add(const Field& F, const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const Field& F, const SparseVec& a, int c);

// Incremental Gaussian elimination over F_p with persistent pivot columns.
// Pivot = lowest nonzero row of a reduced column. For p = 2 columns are
// bit-packed; this is what keeps symmetric-group bar complexes affordable.
class Eliminator {
 public:
  Eliminator(int p, int rows);

  struct Reduction {
    bool zero = false;
    int pivot_id = -1;                         // set when inserted
    std::vector<std::pair<int, int>> used;     // (pivot id, coeff), when tracked
  };

  // Reduce col against the current pivots; optionally insert the remainder as
  // a new pivot carrying `tag`. With track_used, records the combination so
  // that col = sum(coeff * pivot_column) + remainder.
  Reduction reduce(const SparseVec& col, bool insert, int tag = -1, bool track_used = false);

  int rank() const { return npiv_; }
  int rows() const { return rows_; }
  int tag_of(int pivot_id) const;
  SparseVec column_of(int pivot_id) const;

 private:
  int p_, rows_, words_, npiv_;
  Field F_;
  struct PivotBits {
    int row;
    int tag;
    std::vector<uint64_t> bits;
  };
  struct PivotBytes {
    int row;
    int tag;
    std::vector<uint8_t> col;  // normalized: col[row] == 1
  };
  std::vector<PivotBits> bpiv_;
  std::vector<PivotBytes> fpiv_;
  std::vector<int> row_pivot_;  // row -> pivot id, or -1
  std::vector<uint64_t> wbuf_;
  std::vector<uint8_t> bbuf_;
};

// Dense matrices over F_p, row-major; small sizes only.
struct DenseMat {
  int rows = 0, cols = 0;
  std::vector<int> a;
  DenseMat() = default;
  DenseMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  int& at(int r, int c) { return a[(size_t)r * cols + c]; }
  int at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

int rank(const Field& F, DenseMat m);
// Solves m x = b; returns one solution if consistent.
std::optional<std::vector<int>> solve(const Field& F, const DenseMat& m, const std::vector<int>& b);
std::vector<std::vector<int>> kernel_basis(const Field& F, const DenseMat& m);
DenseMat matmul(const Field& F, const DenseMat& a, const DenseMat& b);

}  // namespace permon::fp
