#pragma once

// Exact dense linear algebra on Eigen containers.
//
// Eigen's own decompositions pivot on magnitude, which has no meaning over
// Q(w) or Q(w)[s]; the routines here pivot on the first nonzero entry and
// never divide outside a field.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "painleve/field.hpp"
#include "painleve/upoly.hpp"

namespace painleve {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
Matrix<Scalar> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  Matrix<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Scalar(0);
  return m;
}

/// Division-free determinant over any commutative ring, by Laplace
/// expansion along rows with memoisation over column subsets (n 2^n work).
template <class Ring>
Ring determinant(const Matrix<Ring>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Ring(1);
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for expansion");
  // minor[mask] = determinant of the rows (n - popcount(mask)).. n-1 restricted to columns in mask
  std::vector<Ring> minor(std::size_t{1} << n, Ring(0));
  minor[0] = Ring(1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    const int row = n - k;
    Ring acc(0);
    int sign_pos = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const Ring& entry = m(row, col);
      if (!is_zero(entry)) {
        Ring term = entry * minor[mask & ~(1u << col)];
        if (sign_pos % 2 == 0) acc += term;
        else acc -= term;
      }
      ++sign_pos;
    }
    minor[mask] = std::move(acc);
  }
  return minor[(std::size_t{1} << n) - 1];
}

template <class Field>
struct RowEchelon {
  Matrix<Field> reduced;     ///< reduced row echelon form
  Matrix<Field> transform;   ///< invertible T with T * input == reduced
  std::vector<int> pivots;   ///< pivot column of each nonzero row
  std::vector<int> free_columns;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan elimination over a field; pivots are the first nonzero
/// entry scanning columns left to right, so the result is canonical.
template <class Field>
RowEchelon<Field> rref(const Matrix<Field>& input) {
  const Eigen::Index rows = input.rows(), cols = input.cols();
  RowEchelon<Field> out;
  out.reduced = input;
  out.transform = zero_matrix<Field>(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) out.transform(i, i) = Field(1);

  Matrix<Field>& a = out.reduced;
  Matrix<Field>& t = out.transform;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) {
      out.free_columns.push_back(static_cast<int>(c));
      continue;
    }
    if (p != r) {
      a.row(p).swap(a.row(r));
      t.row(p).swap(t.row(r));
    }
    const Field inv = Field(1) / a(r, c);
    for (Eigen::Index j = 0; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index j = 0; j < rows; ++j) t(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Field f = a(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
      for (Eigen::Index j = 0; j < rows; ++j) t(i, j) -= f * t(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  for (Eigen::Index c = (out.pivots.empty() ? 0 : out.pivots.back() + 1); c < cols; ++c)
    if (std::find(out.free_columns.begin(), out.free_columns.end(), c) == out.free_columns.end())
      out.free_columns.push_back(static_cast<int>(c));
  return out;
}

template <class Field>
Eigen::Index rank(const Matrix<Field>& m) {
  return rref(m).rank();
}

/// Null-space basis read off the reduced echelon form: one vector per free
/// column, carrying 1 in that column and 0 in every other free column.
/// Vectors are ordered by free column.
template <class Field>
std::vector<Vector<Field>> null_space(const Matrix<Field>& m) {
  const RowEchelon<Field> e = rref(m);
  std::vector<Vector<Field>> basis;
  for (int f : e.free_columns) {
    Vector<Field> v(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(j) = Field(0);
    v(f) = Field(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Canonical representative of span(vectors): the nonzero rows of the
/// reduced echelon form of the stacked vectors. Two families span the same
/// space iff their canonical spans are equal.
template <class Field>
Matrix<Field> canonical_span(const std::vector<Vector<Field>>& vectors, Eigen::Index dim) {
  if (vectors.empty()) return Matrix<Field>(0, dim);
  Matrix<Field> stacked(static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) stacked.row(i) = vectors[i].transpose();
  const RowEchelon<Field> e = rref(stacked);
  return e.reduced.topRows(e.rank());
}

template <class Field>
bool same_span(const std::vector<Vector<Field>>& a, const std::vector<Vector<Field>>& b, Eigen::Index dim) {
  const Matrix<Field> ca = canonical_span(a, dim);
  const Matrix<Field> cb = canonical_span(b, dim);
  if (ca.rows() != cb.rows()) return false;
  for (Eigen::Index i = 0; i < ca.rows(); ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      if (ca(i, j) != cb(i, j)) return false;
  return true;
}

/// Entrywise evaluation of a polynomial matrix at s.
inline Matrix<FieldElem> evaluate(const Matrix<PolyInS>& m, const FieldElem& s) {
  Matrix<FieldElem> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)(s);
  return out;
}

inline Matrix<Complex> to_complex(const Matrix<FieldElem>& m) {
  Matrix<Complex> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

inline Vector<FieldElem> conj(const Vector<FieldElem>& v) {
  Vector<FieldElem> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).conj();
  return out;
}

}  // namespace painleve
