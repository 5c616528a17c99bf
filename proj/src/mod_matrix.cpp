#include "qf/mod_matrix.hpp"

#include <algorithm>

#include "qf/errors.hpp"
#include "qf/numeric.hpp"

namespace qf {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t inv_mod(std::int64_t v, std::int64_t p) { return mod_inverse(v, p); }

}  // namespace

ModMatrix ModMatrix::identity(std::int64_t p, int n) {
  ModMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw InternalError("modular matrix product shape mismatch");
  ModMatrix out(p_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const std::int64_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = mod_reduce(out.at(i, j) + aik * rhs.at(k, j), p_);
    }
  return out;
}

std::vector<std::int64_t> ModMatrix::apply(std::span<const std::int64_t> vec) const {
  if (static_cast<int>(vec.size()) != cols_) throw InternalError("modular matrix apply shape mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < cols_; ++j) acc = mod_reduce(acc + at(i, j) * vec[j], p_);
    out[i] = acc;
  }
  return out;
}

std::vector<int> rref_in_place(ModMatrix& m) {
  const std::int64_t p = m.modulus();
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const std::int64_t inv = inv_mod(m.at(r, col), p);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = mod_reduce(m.at(r, j) * inv, p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      const std::int64_t f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = mod_reduce(m.at(i, j) - f * m.at(r, j), p);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::int64_t>> kernel_basis(const ModMatrix& m) {
  const std::int64_t p = m.modulus();
  ModMatrix r = m;
  const std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::int64_t>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::int64_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = mod_reduce(-r.at(static_cast<int>(i), f), p);
    std::int64_t lead = 0;
    for (std::int64_t x : v)
      if (x != 0) {
        lead = x;
        break;
      }
    const std::int64_t inv = inv_mod(lead, p);
    for (std::int64_t& x : v) x = mod_reduce(x * inv, p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::int64_t> charpoly(const ModMatrix& a) {
  if (a.rows() != a.cols()) throw InternalError("characteristic polynomial needs a square matrix");
  const std::int64_t p = a.modulus();
  const int n = a.rows();
  std::vector<std::int64_t> c{1};
  if (n == 0) return c;

  // Berkowitz iteration over leading principal submatrices.
  for (int r = 1; r <= n; ++r) {
    std::vector<std::int64_t> t(r + 1, 0);
    t[0] = 1;
    t[1] = mod_reduce(-a.at(r - 1, r - 1), p);
    if (r >= 2) {
      std::vector<std::int64_t> vec(r - 1);
      for (int i = 0; i < r - 1; ++i) vec[i] = a.at(i, r - 1);
      for (int k = 2; k <= r; ++k) {
        std::int64_t dot = 0;
        for (int j = 0; j < r - 1; ++j) dot = mod_reduce(dot + a.at(r - 1, j) * vec[j], p);
        t[k] = mod_reduce(-dot, p);
        if (k == r) break;
        std::vector<std::int64_t> next(r - 1, 0);
        for (int i = 0; i < r - 1; ++i) {
          std::int64_t acc = 0;
          for (int j = 0; j < r - 1; ++j) acc = mod_reduce(acc + a.at(i, j) * vec[j], p);
          next[i] = acc;
        }
        vec = std::move(next);
      }
    }
    std::vector<std::int64_t> out(r + 1, 0);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        const int k = i - j;
        if (k < 0 || k > r) continue;
        out[i] = mod_reduce(out[i] + t[k] * c[j], p);
      }
    c = std::move(out);
  }
  return c;
}

namespace {

std::int64_t eval_poly(const std::vector<std::int64_t>& coeffs, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (std::int64_t c : coeffs) acc = mod_reduce(acc * x + c, p);
  return acc;
}

}  // namespace

std::vector<std::vector<std::int64_t>> common_eigenvectors(std::span<const ModMatrix> mats,
                                                           std::int64_t p, int dim) {
  for (const ModMatrix& m : mats)
    if (m.rows() != dim || m.cols() != dim || m.modulus() != p)
      throw InternalError("common eigenvector family shape mismatch");

  // Subspaces are stored as matrices whose rows form an RREF basis.
  std::vector<ModMatrix> spaces{ModMatrix::identity(p, dim)};
  for (const ModMatrix& m : mats) {
    std::vector<ModMatrix> next;
    for (const ModMatrix& b : spaces) {
      const int s = b.rows();
      if (s == 1) {
        next.push_back(b);
        continue;
      }
      // Restriction of m to the subspace, in basis coordinates. RREF rows
      // let the coefficients be read off at the pivot columns.
      ModMatrix copy = b;
      std::vector<int> pivots = rref_in_place(copy);
      if (static_cast<int>(pivots.size()) != s)
        throw InternalError("degenerate subspace basis in eigenvector refinement");
      ModMatrix rst(p, s, s);
      for (int i = 0; i < s; ++i) {
        std::vector<std::int64_t> row(dim);
        for (int j = 0; j < dim; ++j) row[j] = b.at(i, j);
        std::vector<std::int64_t> img = m.apply(row);
        std::vector<std::int64_t> residual = img;
        for (int j = 0; j < s; ++j) {
          const std::int64_t coeff = img[pivots[j]];
          rst.at(i, j) = coeff;
          if (coeff == 0) continue;
          for (int col = 0; col < dim; ++col)
            residual[col] = mod_reduce(residual[col] - coeff * b.at(j, col), p);
        }
        for (std::int64_t x : residual)
          if (x != 0) throw SplitFailureError("subspace not invariant under the family");
      }
      // Transpose so kernels act on coefficient columns: rows of rst give
      // images of basis vectors, kernel of (rst^T - lambda) gives the
      // eigencoordinates.
      ModMatrix rt(p, s, s);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) rt.at(i, j) = rst.at(j, i);

      std::vector<std::int64_t> cp = charpoly(rt);
      int split_total = 0;
      for (std::int64_t lambda = 0; lambda < p; ++lambda) {
        if (eval_poly(cp, lambda, p) != 0) continue;
        ModMatrix shifted = rt;
        for (int i = 0; i < s; ++i) shifted.at(i, i) = mod_reduce(shifted.at(i, i) - lambda, p);
        std::vector<std::vector<std::int64_t>> ker = kernel_basis(shifted);
        if (ker.empty()) continue;
        ModMatrix sub(p, static_cast<int>(ker.size()), dim);
        for (int i = 0; i < static_cast<int>(ker.size()); ++i)
          for (int col = 0; col < dim; ++col) {
            std::int64_t acc = 0;
            for (int j = 0; j < s; ++j) acc = mod_reduce(acc + ker[i][j] * b.at(j, col), p);
            sub.at(i, col) = acc;
          }
        rref_in_place(sub);
        split_total += sub.rows();
        next.push_back(std::move(sub));
      }
      if (split_total != s)
        throw SplitFailureError("family member not diagonalizable over the chosen prime field");
    }
    spaces = std::move(next);
  }

  // Any surviving block of dimension > 1 is one on which every family
  // member acts as a scalar, so each basis row is a common eigenvector.
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(dim);
  for (const ModMatrix& b : spaces)
    for (int i = 0; i < b.rows(); ++i) {
      std::vector<std::int64_t> v(dim);
      for (int j = 0; j < dim; ++j) v[j] = b.at(i, j);
      out.push_back(std::move(v));
    }
  if (static_cast<int>(out.size()) != dim)
    throw SplitFailureError("eigenspace refinement did not exhaust the space");
  return out;
}

}  // namespace qf
