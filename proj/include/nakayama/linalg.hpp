#pragma once

// Exact dense linear algebra over a field Scalar (Rational or ModP).
//
// Everything here is Gauss-Jordan elimination on Eigen matrices: no pivoting
// by magnitude is needed because arithmetic is exact.

#include "nakayama/field.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nakayama {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Scalar>
struct Echelon {
  Matrix<Scalar> form;
  Index rank = 0;
  std::vector<Index> pivots;
};

template <class Scalar>
Echelon<Scalar> rref(Matrix<Scalar> m) {
  Echelon<Scalar> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.form = std::move(m);
  return out;
}

template <class Scalar>
Index rank(const Matrix<Scalar>& m) {
  return rref<Scalar>(m).rank;
}

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// A linear subspace of Scalar^ambient, stored as the nonzero rows of its
// reduced row echelon basis.  Two equal subspaces have identical storage.
template <class Scalar>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = Matrix<Scalar>(0, ambient);
    return s;
  }

  static Subspace full(Index ambient) {
    return from_rows(Matrix<Scalar>::Identity(ambient, ambient));
  }

  // Span of the rows of `generators`.
  static Subspace from_rows(const Matrix<Scalar>& generators) {
    auto e = rref<Scalar>(generators);
    Subspace s;
    s.ambient_ = generators.cols();
    s.rows_ = e.form.topRows(e.rank);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  // Span of the columns of `generators`.
  static Subspace from_columns(const Matrix<Scalar>& generators) {
    return from_rows(generators.transpose());
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return rows_.rows(); }
  const Matrix<Scalar>& rows() const { return rows_; }
  Matrix<Scalar> columns() const { return rows_.transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Vector<Scalar>& v) const {
    check_ambient(v.rows());
    Vector<Scalar> r = v;
    for (Index i = 0; i < dim(); ++i) {
      const Scalar c = r(pivots_[i]);
      if (!is_zero(c)) r -= c * rows_.row(i).transpose();
    }
    return is_zero_matrix<Scalar>(r);
  }

  bool contains(const Subspace& o) const {
    check_ambient(o.ambient());
    for (Index i = 0; i < o.dim(); ++i)
      if (!contains(Vector<Scalar>(o.rows_.row(i).transpose()))) return false;
    return true;
  }

  // Coordinates of v (which must lie in the subspace) in the row basis.
  Vector<Scalar> coordinates(const Vector<Scalar>& v) const {
    Vector<Scalar> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    if (!is_zero_matrix<Scalar>(Matrix<Scalar>(v - rows_.transpose() * c)))
      throw DimensionError("vector is not in the subspace");
    return c;
  }

  // Standard basis vectors completing the row basis to the whole space.
  std::vector<Index> complement_coordinates() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index j = 0; j < ambient_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

  void check_ambient(Index n) const {
    if (n != ambient_) throw DimensionError("subspace ambient dimension mismatch");
  }

 private:
  Index ambient_ = 0;
  Matrix<Scalar> rows_;
  std::vector<Index> pivots_;
};

template <class Scalar>
Subspace<Scalar> kernel(const Matrix<Scalar>& m) {
  const auto e = rref<Scalar>(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index j = 0; j < cols; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(static_cast<Index>(free.size()), cols);
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(static_cast<Index>(k), f) = Scalar(1);
    for (Index i = 0; i < e.rank; ++i) basis(static_cast<Index>(k), e.pivots[static_cast<std::size_t>(i)]) = -e.form(i, f);
  }
  return Subspace<Scalar>::from_rows(basis);
}

// Column space.
template <class Scalar>
Subspace<Scalar> image(const Matrix<Scalar>& m) {
  return Subspace<Scalar>::from_columns(m);
}

// Some x with m * x == rhs, if one exists.
template <class Scalar>
std::optional<Matrix<Scalar>> solve(const Matrix<Scalar>& m, const Matrix<Scalar>& rhs) {
  if (m.rows() != rhs.rows()) throw DimensionError("solve: row count mismatch");
  Matrix<Scalar> aug(m.rows(), m.cols() + rhs.cols());
  aug << m, rhs;
  const auto e = rref<Scalar>(aug);
  Matrix<Scalar> x = Matrix<Scalar>::Zero(m.cols(), rhs.cols());
  for (Index i = 0; i < e.rank; ++i) {
    const Index p = e.pivots[static_cast<std::size_t>(i)];
    if (p >= m.cols()) return std::nullopt;
    x.row(p) = e.form.row(i).tail(rhs.cols());
  }
  return x;
}

template <class Scalar>
std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank<Scalar>(m) != m.rows()) return std::nullopt;
  return solve<Scalar>(m, Matrix<Scalar>::Identity(m.rows(), m.rows()));
}

template <class Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  a.check_ambient(b.ambient());
  Matrix<Scalar> stacked(a.dim() + b.dim(), a.ambient());
  stacked << a.rows(), b.rows();
  return Subspace<Scalar>::from_rows(stacked);
}

// Vectors x = A^T y = B^T z, found as the kernel of [A^T | -B^T].
template <class Scalar>
Subspace<Scalar> subspace_intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  a.check_ambient(b.ambient());
  if (a.dim() == 0 || b.dim() == 0) return Subspace<Scalar>::zero(a.ambient());
  Matrix<Scalar> system(a.ambient(), a.dim() + b.dim());
  system << a.rows().transpose(), -b.rows().transpose();
  const auto k = kernel<Scalar>(system);
  Matrix<Scalar> vecs = k.rows().leftCols(a.dim()) * a.rows();
  return Subspace<Scalar>::from_rows(vecs);
}

// Image of a subspace under a linear map.
template <class Scalar>
Subspace<Scalar> map_subspace(const Matrix<Scalar>& m, const Subspace<Scalar>& s) {
  if (m.cols() != s.ambient()) throw DimensionError("map_subspace: dimension mismatch");
  if (s.dim() == 0) return Subspace<Scalar>::zero(m.rows());
  return Subspace<Scalar>::from_columns(m * s.columns());
}

// Preimage of a subspace under a linear map.
template <class Scalar>
Subspace<Scalar> preimage(const Matrix<Scalar>& m, const Subspace<Scalar>& s) {
  if (m.rows() != s.ambient()) throw DimensionError("preimage: dimension mismatch");
  // v with m v in s  <=>  (projection onto a complement of s)(m v) = 0
  const auto comp = s.complement_coordinates();
  Matrix<Scalar> annihilate(static_cast<Index>(comp.size()), m.cols());
  // Reduce the rows of m modulo s, then keep complement coordinates.
  Matrix<Scalar> reduced = m;
  for (Index i = 0; i < s.dim(); ++i) {
    const Index p = s.pivots()[static_cast<std::size_t>(i)];
    for (Index j = 0; j < m.cols(); ++j) {
      const Scalar c = reduced(p, j);
      if (!is_zero(c)) reduced.col(j) -= c * s.rows().row(i).transpose();
    }
  }
  for (std::size_t k = 0; k < comp.size(); ++k) annihilate.row(static_cast<Index>(k)) = reduced.row(comp[k]);
  return kernel<Scalar>(annihilate);
}

// Columns of `basis` extended by standard vectors to a basis of the ambient
// space; returns the square change-of-basis matrix [basis | extra].
template <class Scalar>
Matrix<Scalar> extend_to_basis(const Matrix<Scalar>& basis) {
  const Index n = basis.rows();
  const auto span = Subspace<Scalar>::from_columns(basis);
  const auto extra = span.complement_coordinates();
  Matrix<Scalar> out(n, basis.cols() + static_cast<Index>(extra.size()));
  out.leftCols(basis.cols()) = basis;
  for (std::size_t k = 0; k < extra.size(); ++k) {
    out.col(basis.cols() + static_cast<Index>(k)) = Vector<Scalar>::Unit(n, extra[k]);
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> vstack(const std::vector<Matrix<Scalar>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<Scalar> out(rows, cols);
  Index r = 0;
  for (const auto& b : blocks) {
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> hstack(const std::vector<Matrix<Scalar>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix<Scalar> out(rows, cols);
  Index c = 0;
  for (const auto& b : blocks) {
    out.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return out;
}

}  // namespace nakayama
