#pragma once

// Exact dense linear algebra on Eigen matrices of an exact scalar (Rational
// in practice). Nothing here pivots on magnitude: any nonzero pivot is exact.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hessiankit/rational.hpp"
#include "hessiankit/unipoly.hpp"

namespace hk {

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;          // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e{M, {}};
  auto& A = e.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < A.cols() && row < A.rows(); ++col) {
    Eigen::Index p = row;
    while (p < A.rows() && A(p, col) == Scalar(0)) ++p;
    if (p == A.rows()) continue;
    A.row(p).swap(A.row(row));
    const Scalar inv = Scalar(1) / A(row, col);
    for (Eigen::Index j = col; j < A.cols(); ++j) A(row, j) *= inv;
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (i == row || A(i, col) == Scalar(0)) continue;
      const Scalar f = A(i, col);
      for (Eigen::Index j = col; j < A.cols(); ++j) A(i, j) -= f * A(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <typename Scalar>
struct KernelResult {
  Eigen::Index rank = 0;
  std::vector<Vector<Scalar>> basis;  // first nonzero coordinate of each vector is 1
};

/// Rank and a basis of the right null space {v : Mv = 0}.
template <typename Derived>
KernelResult<typename Derived::Scalar> rref_kernel(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(M);
  KernelResult<Scalar> out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(static_cast<std::size_t>(M.cols()), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index free = 0; free < M.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(M.cols());
    v(free) = Scalar(1);
    for (Eigen::Index r = 0; r < e.rank(); ++r) v(e.pivots[r]) = -e.reduced(r, free);
    Eigen::Index first = 0;
    while (v(first) == Scalar(0)) ++first;
    const Scalar inv = Scalar(1) / v(first);
    v *= inv;
    out.basis.push_back(std::move(v));
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& M) {
  return rref(M).rank();
}

/// Fraction-free (Bareiss) determinant; every division is exact.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = M.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> A = M;
  Scalar prev(1);
  Scalar sign(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && A(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      A.row(p).swap(A.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
      A(i, k) = Scalar(0);
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

/// Determinant of the submatrix on the given (distinct, in-range) indices.
template <typename Derived>
typename Derived::Scalar minor(const Eigen::MatrixBase<Derived>& M,
                               std::span<const Eigen::Index> rows,
                               std::span<const Eigen::Index> cols) {
  using Scalar = typename Derived::Scalar;
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor: row and column index sets differ in size");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix<Scalar> sub(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto r = rows[static_cast<std::size_t>(i)];
      const auto c = cols[static_cast<std::size_t>(j)];
      if (r < 0 || r >= M.rows() || c < 0 || c >= M.cols())
        throw std::out_of_range("minor: index out of range");
      sub(i, j) = M(r, c);
    }
  }
  return determinant(sub);
}

/// Coefficients (lowest degree first) of det(u I - M), computed with
/// Berkowitz's division-free recurrence.
template <typename Derived>
std::vector<typename Derived::Scalar> charpoly_coefficients(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  if (M.rows() != M.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
  const Eigen::Index n = M.rows();
  // Highest degree first while iterating.
  std::vector<Scalar> poly{Scalar(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    // Leading r x r block A, column C above the diagonal entry, row R left of it.
    const auto A = M.topLeftCorner(r, r);
    const Vector<Scalar> C = M.col(r).head(r);
    const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> R = M.row(r).head(r);
    // First column of the Toeplitz factor: 1, -a, -RC, -RAC, ..., -RA^{r-1}C.
    std::vector<Scalar> col(static_cast<std::size_t>(r) + 2);
    col[0] = Scalar(1);
    col[1] = -M(r, r);
    Vector<Scalar> v = C;
    for (Eigen::Index k = 0; k < r; ++k) {
      col[static_cast<std::size_t>(k) + 2] = -(R * v)(0, 0);
      if (k + 1 < r) v = (A * v).eval();
    }
    std::vector<Scalar> next(poly.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        next[i] += col[i - j] * poly[j];
    poly = std::move(next);
  }
  return {poly.rbegin(), poly.rend()};
}

/// Monic characteristic polynomial det(u I - M).
template <typename Derived>
UniPoly charpoly(const Eigen::MatrixBase<Derived>& M) {
  return UniPoly(charpoly_coefficients(M));
}

/// p(M) by Horner's rule.
template <typename Derived>
Matrix<typename Derived::Scalar> evaluate_at_matrix(const UniPoly& p, const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(M.rows(), M.cols());
  const Matrix<Scalar> id = Matrix<Scalar>::Identity(M.rows(), M.cols());
  for (int k = p.degree(); k >= 0; --k) acc = (acc * M).eval() + p.coeff(static_cast<std::size_t>(k)) * id;
  return acc;
}

/// The unique x with A x = b, or nullopt if the system is inconsistent or
/// underdetermined.
template <typename DA, typename DB>
std::optional<Vector<typename DA::Scalar>> solve_unique(const Eigen::MatrixBase<DA>& A,
                                                        const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  Matrix<Scalar> aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  const auto e = rref(aug);
  if (e.rank() != A.cols()) return std::nullopt;
  for (auto c : e.pivots)
    if (c == A.cols()) return std::nullopt;
  Vector<Scalar> x(A.cols());
  for (Eigen::Index r = 0; r < e.rank(); ++r) x(e.pivots[r]) = e.reduced(r, A.cols());
  return x;
}

}  // namespace hk
