#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/arith.hpp"

namespace trop {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      assert(r.size() == cols_);
      for (long x : r)
        data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors, all of length `ambient`.
  static Matrix fromColumns(const std::vector<std::vector<T>>& columns, std::size_t ambient) {
    Matrix m(ambient, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != ambient)
        throw Error(ErrorKind::DimMismatch, "column of length " + std::to_string(columns[j].size()) +
                                                " in ambient dimension " + std::to_string(ambient));
      for (std::size_t i = 0; i < ambient; ++i)
        m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix fromRows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorKind::DimMismatch, "row of length " + std::to_string(rows[i].size()) +
                                                " where " + std::to_string(cols) + " expected");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c[i] = (*this)(i, j);
    return c;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  std::vector<std::vector<T>> columns() const {
    std::vector<std::vector<T>> out;
    for (std::size_t j = 0; j < cols_; ++j)
      out.push_back(column(j));
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  void swapColumns(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  void swapRows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  /// column[dst] += factor * column[src]
  void addColumnMultiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) += factor * (*this)(i, src);
  }

  void addRowMultiple(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) += factor * (*this)(src, j);
  }

  void negateColumn(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, j) = -(*this)(i, j);
  }

  void negateRow(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = -(*this)(i, j);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::DimMismatch, "matrix product of incompatible shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size())
      throw Error(ErrorKind::DimMismatch, "matrix-vector product of incompatible shapes");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        y[i] += a(i, j) * x[j];
    return y;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix toRational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j);
  return r;
}

/// Horizontal concatenation [a | b]; both must have the same row count.
template <class T>
Matrix<T> concatColumns(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorKind::DimMismatch, "cannot concatenate matrices with different row counts");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Rational elimination

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

inline RowEchelon rowReduce(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swapRows(p, r);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0)
        m.addRowMultiple(i, r, Rational(-m(i, c)));
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rowReduce(m).pivots.size(); }
inline std::size_t rank(const IntegerMatrix& m) { return rank(toRational(m)); }

/// Rank of the span of a list of integer vectors of the given length.
inline std::size_t rankOf(const std::vector<IntVec>& vectors, std::size_t ambient) {
  if (vectors.empty())
    return 0;
  return rank(IntegerMatrix::fromRows(vectors, ambient));
}

inline Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimMismatch, "determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      a.swapRows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i)
      if (a(i, c) != 0)
        a.addRowMultiple(i, c, Rational(-a(i, c) / a(c, c)));
  }
  return det;
}

inline Integer determinant(const IntegerMatrix& m) {
  Rational d = determinant(toRational(m));
  return d.get_num();
}

/// Returns some x with A x = b, or nothing when the system is inconsistent.
/// Free variables are set to zero.
inline std::optional<RatVec> solveRational(const RationalMatrix& a, const RatVec& b) {
  if (b.size() != a.rows())
    throw Error(ErrorKind::DimMismatch, "right-hand side length does not match row count");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rowReduce(std::move(aug));
  RatVec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols())
      return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rowReduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::NotFullRank, "matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Inverse of a unimodular integer matrix.
inline IntegerMatrix inverseUnimodular(const IntegerMatrix& m) {
  RationalMatrix inv = inverse(toRational(m));
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (inv(i, j).get_den() != 1)
        throw Error(ErrorKind::NotFullRank, "matrix is not unimodular");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

// ---------------------------------------------------------------------------
// Integer normal forms

struct HermiteResult {
  IntegerMatrix H;
  IntegerMatrix U;
};

/// Column-style Hermite normal form: H = M U with U unimodular, H lower
/// triangular echelon (pivot rows strictly increasing left to right), pivots
/// positive, and every entry left of a pivot reduced into [0, pivot).
/// Zero columns of H come last.
inline HermiteResult hermiteNormalForm(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.cols());
  std::size_t pivotCol = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
  for (std::size_t row = 0; row < h.rows() && pivotCol < h.cols(); ++row) {
    // Fold every column right of pivotCol into pivotCol with gcd steps.
    for (std::size_t j = pivotCol + 1; j < h.cols(); ++j) {
      if (h(row, j) == 0)
        continue;
      if (h(row, pivotCol) == 0) {
        h.swapColumns(pivotCol, j);
        u.swapColumns(pivotCol, j);
        continue;
      }
      Integer a = h(row, pivotCol), b = h(row, j), s, t;
      Integer g = extendedGcd(a, b, s, t);
      Integer ag = a / g, bg = b / g;
      // [c_p, c_j] <- [s c_p + t c_j, -bg c_p + ag c_j]; determinant s*ag + t*bg = 1.
      for (IntegerMatrix* mat : {&h, &u}) {
        for (std::size_t i = 0; i < mat->rows(); ++i) {
          Integer cp = (*mat)(i, pivotCol), cj = (*mat)(i, j);
          (*mat)(i, pivotCol) = s * cp + t * cj;
          (*mat)(i, j) = ag * cj - bg * cp;
        }
      }
    }
    if (h(row, pivotCol) == 0)
      continue;
    if (h(row, pivotCol) < 0) {
      h.negateColumn(pivotCol);
      u.negateColumn(pivotCol);
    }
    for (std::size_t j = 0; j < pivotCol; ++j) {
      Integer q = floorDiv(h(row, j), h(row, pivotCol));
      if (q != 0) {
        h.addColumnMultiple(j, pivotCol, Integer(-q));
        u.addColumnMultiple(j, pivotCol, Integer(-q));
      }
    }
    pivots.emplace_back(row, pivotCol);
    ++pivotCol;
  }
  return {std::move(h), std::move(u)};
}

struct SmithResult {
  IntegerMatrix D;
  IntegerMatrix P;
  IntegerMatrix Q;
};

/// D = P M Q with P, Q unimodular and D diagonal with nonnegative entries
/// d1 | d2 | ... (zeros last).
inline SmithResult smithNormalForm(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix p = IntegerMatrix::identity(m.rows());
  IntegerMatrix q = IntegerMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    // Choose the smallest nonzero entry of the trailing block as pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pr, pc)))) {
          found = true;
          pr = i;
          pc = j;
        }
    if (!found)
      break;
    d.swapRows(t, pr);
    p.swapRows(t, pr);
    d.swapColumns(t, pc);
    q.swapColumns(t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0)
          continue;
        Integer f = floorDiv(d(i, t), d(t, t));
        d.addRowMultiple(i, t, Integer(-f));
        p.addRowMultiple(i, t, Integer(-f));
        if (d(i, t) != 0) {
          d.swapRows(t, i);
          p.swapRows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0)
          continue;
        Integer f = floorDiv(d(t, j), d(t, t));
        d.addColumnMultiple(j, t, Integer(-f));
        q.addColumnMultiple(j, t, Integer(-f));
        if (d(t, j) != 0) {
          d.swapColumns(t, j);
          q.swapColumns(t, j);
          dirty = true;
        }
      }
      if (dirty)
        continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.addRowMultiple(t, i, Integer(1));
            p.addRowMultiple(t, i, Integer(1));
            fixed = true;
          }
      if (!fixed)
        break;
    }
    if (d(t, t) < 0) {
      d.negateRow(t);
      p.negateRow(t);
    }
  }
  return {std::move(d), std::move(p), std::move(q)};
}

/// Nonzero diagonal entries of the Smith normal form.
inline std::vector<Integer> invariantFactors(const IntegerMatrix& m) {
  SmithResult s = smithNormalForm(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.D(i, i) != 0)
      out.push_back(s.D(i, i));
  return out;
}

/// Lattice basis (as a list of vectors) of {x in Z^cols : M x = 0}.
inline std::vector<IntVec> integerKernel(const IntegerMatrix& m) {
  HermiteResult hr = hermiteNormalForm(m);
  std::vector<IntVec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i)
      zero = hr.H(i, j) == 0;
    if (zero)
      basis.push_back(hr.U.column(j));
  }
  return basis;
}

/// Integer basis of the orthogonal complement of span(vectors) in Q^ambient.
inline std::vector<IntVec> orthogonalComplement(const std::vector<IntVec>& vectors,
                                                std::size_t ambient) {
  if (vectors.empty()) {
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < ambient; ++i) {
      IntVec e(ambient);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return integerKernel(IntegerMatrix::fromRows(vectors, ambient));
}

} // namespace trop
