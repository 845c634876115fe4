#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "trop/error.hpp"

namespace trop {

using Integer = mpz_class;
using Rational = mpq_class; // canonical: gcd(num, den) = 1, den > 0

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

enum class Convention { Min, Max };

inline std::string conventionName(Convention c) { return c == Convention::Min ? "min" : "max"; }

inline Convention flipped(Convention c) {
  return c == Convention::Min ? Convention::Max : Convention::Min;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Returns g = gcd(a, b) >= 0 together with s, t such that s*a + t*b = g.
inline Integer extendedGcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer contentOf(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v)
    g = gcd(g, x);
  return g;
}

inline bool isZero(std::span<const Integer> v) {
  for (const Integer& x : v)
    if (x != 0)
      return false;
  return true;
}

inline bool isZero(std::span<const Rational> v) {
  for (const Rational& x : v)
    if (x != 0)
      return false;
  return true;
}

/// v divided by the gcd of its entries. The zero vector is returned unchanged;
/// the checked public variant is primitiveVector() in lattice.hpp.
inline IntVec makePrimitive(IntVec v) {
  Integer g = contentOf(v);
  if (g > 1)
    for (Integer& x : v)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

/// Smallest positive multiple of v with integer entries, made primitive.
inline IntVec clearDenominators(std::span<const Rational> v) {
  Integer den = 1;
  for (const Rational& x : v)
    den = lcm(den, x.get_den());
  IntVec out;
  out.reserve(v.size());
  for (const Rational& x : v) {
    Rational scaled = x * den;
    out.push_back(scaled.get_num());
  }
  return makePrimitive(std::move(out));
}

inline RatVec toRational(std::span<const Integer> v) {
  return RatVec(v.begin(), v.end());
}

template <class A, class B>
inline auto dot(const std::vector<A>& a, const std::vector<B>& b) {
  using R = std::conditional_t<std::is_same_v<A, Rational> || std::is_same_v<B, Rational>,
                               Rational, Integer>;
  if (a.size() != b.size())
    throw Error(ErrorKind::DimMismatch, "dot product of vectors of length " +
                                            std::to_string(a.size()) + " and " +
                                            std::to_string(b.size()));
  R s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline IntVec negated(IntVec v) {
  for (Integer& x : v)
    x = -x;
  return v;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

inline std::int64_t toInt64(const Integer& x) {
  if (!x.fits_slong_p())
    throw Error(ErrorKind::DimMismatch, "integer " + x.get_str() + " does not fit in 64 bits");
  return x.get_si();
}

inline std::string toString(const Integer& x) { return x.get_str(); }
inline std::string toString(const Rational& x) { return x.get_str(); }

template <class T>
inline std::string toString(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += toString(v[i]);
  }
  return s + ")";
}

inline IntVec intVec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

inline RatVec ratVec(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

} // namespace trop
