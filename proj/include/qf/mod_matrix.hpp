#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qf {

// Dense matrix over the prime field F_p, p < 2^31.
class ModMatrix {
 public:
  ModMatrix() : p_(2), rows_(0), cols_(0) {}
  ModMatrix(std::int64_t p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static ModMatrix identity(std::int64_t p, int n);

  std::int64_t modulus() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  ModMatrix operator*(const ModMatrix& rhs) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> vec) const;

  bool operator==(const ModMatrix& rhs) const = default;

 private:
  std::int64_t p_;
  int rows_, cols_;
  std::vector<std::int64_t> a_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_in_place(ModMatrix& m);

// Canonical kernel basis (one vector per free column, ascending, each
// normalized so its first nonzero coordinate is 1).
std::vector<std::vector<std::int64_t>> kernel_basis(const ModMatrix& m);

// Characteristic polynomial det(xI - A) by the division-free Berkowitz
// method; coefficients descending from the leading 1.
std::vector<std::int64_t> charpoly(const ModMatrix& a);

// Splits F_p^n into the common eigenspaces of a family of commuting,
// simultaneously diagonalizable matrices. Returns n vectors, each with
// first nonzero coordinate 1, in a deterministic refinement order.
// Throws SplitFailureError when some residual subspace is not scalar.
std::vector<std::vector<std::int64_t>> common_eigenvectors(std::span<const ModMatrix> mats,
                                                           std::int64_t p, int dim);

}  // namespace qf
