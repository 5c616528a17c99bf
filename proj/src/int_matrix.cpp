#include "qf/int_matrix.hpp"

#include <algorithm>

#include "qf/errors.hpp"

namespace qf {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix multiply: shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int target, int source, const Int& factor) {
  if (factor == 0) return;
  for (int c = 0; c < cols_; ++c) at(target, c) += factor * at(source, c);
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw Error("det: matrix not square");
  if (rows_ == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix w = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < rows_ - 1; ++k) {
    if (w.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < rows_; ++i)
        if (w.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == -1) return 0;
      w.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < rows_; ++i)
      for (int j = k + 1; j < cols_; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  Int d = w.at(rows_ - 1, rows_ - 1);
  return sign == 1 ? d : Int(-d);
}

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  int r = 0;
  for (int col = 0; col < h.cols() && r < h.rows(); ++col) {
    // Clear the column below row r with gcd steps.
    while (true) {
      int pivot = -1;
      for (int i = r; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (pivot == -1 || abs(h.at(i, col)) < abs(h.at(pivot, col))) pivot = i;
      }
      if (pivot == -1) break;
      h.swap_rows(r, pivot);
      u.swap_rows(r, pivot);
      bool clean = true;
      for (int i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = floor_div(h.at(i, col), h.at(r, col));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, col) == 0) continue;
    if (h.at(r, col) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, col), h.at(r, col));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SnfResult snf(const IntMatrix& m) {
  IntMatrix a = m;
  const int rows = a.rows(), cols = a.cols();
  SnfResult res;
  int t = 0;
  auto col_op = [&](int target, int source, const Int& factor) {
    if (factor == 0) return;
    for (int i = 0; i < rows; ++i) a.at(i, target) += factor * a.at(i, source);
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
  };
  while (t < rows && t < cols) {
    // Locate the submatrix entry of least nonzero magnitude.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi == -1 || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;
    a.swap_rows(t, pi);
    swap_cols(t, pj);

    bool again = false;
    for (int i = t + 1; i < rows; ++i) {
      if (a.at(i, t) == 0) continue;
      Int q = floor_div(a.at(i, t), a.at(t, t));
      a.add_row_multiple(i, t, -q);
      if (a.at(i, t) != 0) again = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a.at(t, j) == 0) continue;
      Int q = floor_div(a.at(t, j), a.at(t, t));
      col_op(j, t, -q);
      if (a.at(t, j) != 0) again = true;
    }
    if (again) continue;

    // Fold in any entry the pivot does not divide yet.
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          a.add_row_multiple(t, i, Int(1));
          fixed = true;
        }
    if (fixed) continue;

    if (a.at(t, t) < 0) a.negate_row(t);
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.factors.push_back(a.at(i, i));
  return res;
}

std::optional<IntegralSolution> solve_integral(const IntMatrix& m, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error("solve_integral: rhs size mismatch");
  const int cols = m.cols();

  // Column-style Hermite form via the transpose: M * V = L with V
  // unimodular and L in column echelon form (pivot rows strictly increase).
  auto tr = hnf(m.transpose());
  IntMatrix v = tr.u.transpose();
  IntMatrix l = tr.h.transpose();

  std::vector<Int> residual = b;
  std::vector<Int> y(cols, Int(0));
  std::vector<int> zero_cols;
  for (int j = 0; j < cols; ++j) {
    int pivot = -1;
    for (int i = 0; i < l.rows(); ++i)
      if (l.at(i, j) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) {
      zero_cols.push_back(j);
      continue;
    }
    if (residual[pivot] % l.at(pivot, j) != 0) return std::nullopt;
    y[j] = residual[pivot] / l.at(pivot, j);
    if (y[j] != 0)
      for (int i = 0; i < l.rows(); ++i) residual[i] -= y[j] * l.at(i, j);
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;

  IntegralSolution sol;
  sol.particular.assign(cols, Int(0));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      if (y[j] != 0) sol.particular[i] += v.at(i, j) * y[j];

  if (!zero_cols.empty()) {
    IntMatrix kernel(static_cast<int>(zero_cols.size()), cols);
    for (std::size_t r = 0; r < zero_cols.size(); ++r)
      for (int i = 0; i < cols; ++i) kernel.at(static_cast<int>(r), i) = v.at(i, zero_cols[r]);
    auto reduced = hnf(kernel);
    for (int r = 0; r < reduced.rank; ++r) {
      std::vector<Int> row(cols);
      for (int i = 0; i < cols; ++i) row[i] = reduced.h.at(r, i);
      sol.kernel_basis.push_back(std::move(row));
    }
  }
  return sol;
}

}  // namespace qf
