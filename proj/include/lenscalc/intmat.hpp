#pragma once

#include <vector>

#include "lenscalc/zmod.hpp"

namespace lenscalc {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<i64> entries);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  i64& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  i64 operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<i64> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
i64 determinant(const IntMatrix& m);

// left * m * right = diagonal of invariant_factors, where left and right are
// unimodular. Factors are nonnegative, each dividing the next, padded with
// zeros to length min(rows, cols).
struct SmithDecomposition {
  std::vector<i64> invariant_factors;
  IntMatrix left;
  IntMatrix right;

  // Rebuild the diagonal matrix of the given shape from invariant_factors.
  IntMatrix diagonal(int rows, int cols) const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Invariants of Z^cols / (row space of m): rows are relations on cols
// generators. torsion lists the invariant factors > 1 in divisibility order.
struct CokernelInvariants {
  std::vector<i64> torsion;
  int free_rank;

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

CokernelInvariants cokernel_invariants(const IntMatrix& m);

}  // namespace lenscalc
