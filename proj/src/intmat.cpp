#include "lenscalc/intmat.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace lenscalc {

namespace {

i64 checked(__int128 v, const char* what) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw std::overflow_error(what);
  }
  return static_cast<i64>(v);
}

i64 mul(i64 a, i64 b) {
  return checked(static_cast<__int128>(a) * b, "matrix entry overflow in multiply");
}

i64 add(i64 a, i64 b) {
  return checked(static_cast<__int128>(a) + b, "matrix entry overflow in add");
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw InvalidArgument("matrix dimensions must be >= 0");
  }
  entries_.assign(static_cast<size_t>(rows) * cols, 0);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<i64> entries) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw InvalidArgument("matrix dimensions must be >= 0");
  }
  if (entries.size() != static_cast<size_t>(rows) * cols) {
    throw InvalidArgument("entry count does not match matrix shape");
  }
  entries_ = std::move(entries);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("inner dimensions do not match");
  }
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out(i, j) = add(out(i, j), mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

i64 determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("determinant requires a square matrix");
  }
  int n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
  }
  auto at = [&](int i, int j) -> __int128& { return a[static_cast<size_t>(i) * n + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Bareiss update: division by the previous pivot is exact.
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return checked(sign * at(n - 1, n - 1), "determinant overflow");
}

IntMatrix SmithDecomposition::diagonal(int rows, int cols) const {
  IntMatrix d(rows, cols);
  for (size_t t = 0; t < invariant_factors.size(); ++t) {
    d(static_cast<int>(t), static_cast<int>(t)) = invariant_factors[t];
  }
  return d;
}

namespace {

// Working state for the reduction; maintains left * original * right = work.
struct SnfState {
  IntMatrix work;
  IntMatrix left;
  IntMatrix right;

  explicit SnfState(const IntMatrix& m)
      : work(m), left(IntMatrix::identity(m.rows())), right(IntMatrix::identity(m.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < work.cols(); ++c) std::swap(work(i, c), work(j, c));
    for (int c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < work.rows(); ++r) std::swap(work(r, i), work(r, j));
    for (int r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
  }

  // row i += c * row j
  void row_addmul(int i, int j, i64 c) {
    for (int col = 0; col < work.cols(); ++col) {
      work(i, col) = add(work(i, col), mul(c, work(j, col)));
    }
    for (int col = 0; col < left.cols(); ++col) {
      left(i, col) = add(left(i, col), mul(c, left(j, col)));
    }
  }

  // col i += c * col j
  void col_addmul(int i, int j, i64 c) {
    for (int row = 0; row < work.rows(); ++row) {
      work(row, i) = add(work(row, i), mul(c, work(row, j)));
    }
    for (int row = 0; row < right.rows(); ++row) {
      right(row, i) = add(right(row, i), mul(c, right(row, j)));
    }
  }

  void negate_row(int i) {
    for (int c = 0; c < work.cols(); ++c) work(i, c) = -work(i, c);
    for (int c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
  }

  // Move the entry of minimal |value| in the submatrix at (t, t) onto the
  // pivot; first match in row-major order wins ties. False if all zero.
  bool pivot_to(int t) {
    int best_r = -1, best_c = -1;
    i64 best = 0;
    for (int i = t; i < work.rows(); ++i) {
      for (int j = t; j < work.cols(); ++j) {
        i64 v = std::llabs(work(i, j));
        if (v != 0 && (best_r < 0 || v < best)) {
          best = v;
          best_r = i;
          best_c = j;
        }
      }
    }
    if (best_r < 0) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  // Clear row t and column t beyond the pivot. Pivot must be nonzero on
  // entry; the submatrix minimum strictly shrinks on every re-pivot, so the
  // loop terminates.
  void clear_cross(int t) {
    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < work.rows(); ++i) {
        if (work(i, t) == 0) continue;
        row_addmul(i, t, -(work(i, t) / work(t, t)));
        if (work(i, t) != 0) dirty = true;
      }
      if (!dirty) {
        for (int j = t + 1; j < work.cols(); ++j) {
          if (work(t, j) == 0) continue;
          col_addmul(j, t, -(work(t, j) / work(t, t)));
          if (work(t, j) != 0) dirty = true;
        }
      }
      if (!dirty) return;
      pivot_to(t);
    }
  }

  // Euclidean reduction restricted to the 2x2 block at (t, t). Both rows and
  // both columns are zero outside the block on entry, so zeros elsewhere are
  // preserved and the block ends diagonal as (gcd, +- product / gcd).
  void reduce_pair(int t) {
    while (true) {
      int best_r = -1, best_c = -1;
      i64 best = 0;
      for (int i = t; i <= t + 1; ++i) {
        for (int j = t; j <= t + 1; ++j) {
          i64 v = std::llabs(work(i, j));
          if (v != 0 && (best_r < 0 || v < best)) {
            best = v;
            best_r = i;
            best_c = j;
          }
        }
      }
      if (best_r < 0) return;
      swap_rows(t, best_r);
      swap_cols(t, best_c);
      bool dirty = false;
      if (work(t + 1, t) != 0) {
        row_addmul(t + 1, t, -(work(t + 1, t) / work(t, t)));
        if (work(t + 1, t) != 0) dirty = true;
      }
      if (!dirty && work(t, t + 1) != 0) {
        col_addmul(t + 1, t, -(work(t, t + 1) / work(t, t)));
        if (work(t, t + 1) != 0) dirty = true;
      }
      if (!dirty) return;
    }
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SnfState st(m);
  int k = std::min(m.rows(), m.cols());

  int rank = 0;
  for (int t = 0; t < k; ++t) {
    if (!st.pivot_to(t)) break;
    st.clear_cross(t);
    rank = t + 1;
  }

  // Enforce the divisibility chain: a violating adjacent pair (d, e) is
  // mixed into one column and re-reduced, becoming (gcd, +-lcm). Each fix
  // strictly shrinks |d|, so the sweep stabilizes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < rank; ++t) {
      i64 d = st.work(t, t);
      i64 e = st.work(t + 1, t + 1);
      if (d != 0 && e % d != 0) {
        st.col_addmul(t, t + 1, 1);
        st.reduce_pair(t);
        changed = true;
      }
    }
  }

  for (int t = 0; t < rank; ++t) {
    if (st.work(t, t) < 0) st.negate_row(t);
  }

  SmithDecomposition out{std::vector<i64>(), std::move(st.left), std::move(st.right)};
  out.invariant_factors.reserve(k);
  for (int t = 0; t < k; ++t) out.invariant_factors.push_back(st.work(t, t));
  return out;
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  CokernelInvariants out{{}, 0};
  int rank = 0;
  for (i64 d : snf.invariant_factors) {
    if (d != 0) ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = m.cols() - rank;
  return out;
}

}  // namespace lenscalc
