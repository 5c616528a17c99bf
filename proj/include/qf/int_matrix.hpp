#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qf/numeric.hpp"

namespace qf {

// Dense matrix over the arbitrary-precision integers. Sized for exact
// normal-form work on small systems; correctness over speed throughout.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;

  void swap_rows(int i, int j);
  void negate_row(int i);
  void add_row_multiple(int target, int source, const Int& factor);  // row_t += f*row_s

  // Exact determinant (fraction-free elimination); square matrices only.
  Int det() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Row-style Hermite normal form: H = U * M with U unimodular, H in row
// echelon form with positive pivots and entries above each pivot reduced
// into [0, pivot).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
};
HnfResult hnf(const IntMatrix& m);

// Smith normal form invariant factors d1 | d2 | ... | dr, all positive.
struct SnfResult {
  std::vector<Int> factors;
  int rank = 0;
};
SnfResult snf(const IntMatrix& m);

// All integer solutions of M x = b: a particular solution plus a basis of
// the integer kernel lattice (rows of an HNF, so deterministic). Empty
// optional when no integral solution exists, including the case where only
// rational solutions exist.
struct IntegralSolution {
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel_basis;
};
std::optional<IntegralSolution> solve_integral(const IntMatrix& m, const std::vector<Int>& b);

}  // namespace qf
