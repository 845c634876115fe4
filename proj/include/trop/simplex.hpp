#pragma once

#include <vector>

#include "trop/matrix.hpp"

namespace trop {

namespace detail {

/// Phase-1 simplex over the rationals with Bland's rule: decides whether
/// {x >= 0 : A x = b} is nonempty.
inline bool feasibleNonnegative(const RationalMatrix& a, RatVec b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Tableau columns: n structural, m artificial, 1 rhs.
  RationalMatrix t(m, n + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j)
      t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i)
    basis[i] = n + i;

  // Reduced costs of the objective "minimize sum of artificials".
  auto reducedCost = [&](std::size_t j) {
    Rational c = j >= n && j < n + m ? Rational(1) : Rational(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n)
        c -= t(i, j);
    return c;
  };

  for (;;) {
    std::size_t entering = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (reducedCost(j) < 0) {
        entering = j; // Bland: smallest index
        break;
      }
    if (entering == n + m)
      break;
    std::size_t leaving = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, entering) <= 0)
        continue;
      Rational ratio = t(i, n + m) / t(i, entering);
      if (leaving == m || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (leaving == m)
      break; // unbounded direction; cannot happen for a bounded phase-1 objective
    Rational pivot = t(leaving, entering);
    for (std::size_t j = 0; j <= n + m; ++j)
      t(leaving, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i)
      if (i != leaving && t(i, entering) != 0)
        t.addRowMultiple(i, leaving, Rational(-t(i, entering)));
    basis[leaving] = entering;
  }
  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n)
      objective += t(i, n + m);
  return objective == 0;
}

} // namespace detail

/// Exact test of target ∈ cone(rays) + span(lineality). Columns of both
/// matrices are the generators.
inline bool coneFeasible(const IntegerMatrix& rays, const IntegerMatrix& lineality,
                         const RatVec& target) {
  const std::size_t n = target.size();
  if ((rays.cols() > 0 && rays.rows() != n) || (lineality.cols() > 0 && lineality.rows() != n))
    throw Error(ErrorKind::DimMismatch, "generators and target have different dimensions");
  RationalMatrix a(n, rays.cols() + 2 * lineality.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < rays.cols(); ++j)
      a(i, j) = rays(i, j);
    for (std::size_t j = 0; j < lineality.cols(); ++j) {
      a(i, rays.cols() + 2 * j) = lineality(i, j);
      a(i, rays.cols() + 2 * j + 1) = -lineality(i, j);
    }
  }
  return detail::feasibleNonnegative(a, target);
}

} // namespace trop
