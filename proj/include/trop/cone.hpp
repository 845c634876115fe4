#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "trop/lattice.hpp"
#include "trop/simplex.hpp"

namespace trop {

namespace detail {

struct Generators {
  std::vector<IntVec> rays;      // extreme rays of the pointed part
  std::vector<IntVec> lineality; // spanning set of the lineality space
};

/// Double description: extreme rays and lineality of
/// {x : a·x >= 0 for a in inequalities, e·x = 0 for e in equations}.
/// Constraints are inserted one at a time; adjacency of a positive and a
/// negative ray is decided combinatorially from their sets of tight constraints.
inline Generators doubleDescription(const std::vector<IntVec>& inequalities,
                                    const std::vector<IntVec>& equations, std::size_t n) {
  std::vector<IntVec> constraints;
  constraints.reserve(inequalities.size() + 2 * equations.size());
  for (const IntVec& e : equations) {
    constraints.push_back(e);
    constraints.push_back(negated(e));
  }
  for (const IntVec& a : inequalities)
    constraints.push_back(a);

  struct Ray {
    IntVec v;
    std::vector<bool> tight; // one flag per processed constraint
  };

  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const IntVec& a = constraints[k];
    if (a.size() != n)
      throw Error(ErrorKind::DimMismatch, "constraint of length " + std::to_string(a.size()) +
                                              " in ambient dimension " + std::to_string(n));
    if (isZero(std::span<const Integer>(a))) {
      for (Ray& r : rays)
        r.tight.push_back(true);
      continue;
    }

    auto cut = std::find_if(lin.begin(), lin.end(), [&](const IntVec& l) { return dot(a, l) != 0; });
    if (cut != lin.end()) {
      IntVec l0 = *cut;
      lin.erase(cut);
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        l0 = negated(std::move(l0));
        s0 = -s0;
      }
      auto project = [&](IntVec& v) {
        Integer s = dot(a, v);
        if (s == 0)
          return;
        for (std::size_t i = 0; i < n; ++i)
          v[i] = s0 * v[i] - s * l0[i];
        v = makePrimitive(std::move(v));
      };
      for (IntVec& l : lin)
        project(l);
      for (Ray& r : rays) {
        project(r.v);
        r.tight.push_back(true);
      }
      std::vector<bool> tight(k, true);
      tight.push_back(false);
      rays.push_back({std::move(l0), std::move(tight)});
      continue;
    }

    std::vector<Integer> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      value[i] = dot(a, rays[i].v);

    std::vector<Ray> next;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0)
        continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0)
          continue;
        std::vector<bool> common(k);
        for (std::size_t c = 0; c < k; ++c)
          common[c] = rays[p].tight[c] && rays[q].tight[c];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q)
            continue;
          bool covers = true;
          for (std::size_t c = 0; c < k && covers; ++c)
            covers = !common[c] || rays[r].tight[c];
          adjacent = !covers;
        }
        if (!adjacent)
          continue;
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i)
          v[i] = value[p] * rays[q].v[i] - value[q] * rays[p].v[i];
        common.push_back(true);
        next.push_back({makePrimitive(std::move(v)), std::move(common)});
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] < 0)
        continue;
      rays[i].tight.push_back(value[i] == 0);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  Generators out;
  out.lineality = std::move(lin);
  for (Ray& r : rays)
    out.rays.push_back(std::move(r.v));
  return out;
}

/// Canonical generators: lineality as an HNF lattice basis of span ∩ Z^n, rays
/// projected orthogonally onto the complement of the lineality space, made
/// primitive, deduplicated and sorted.
inline Generators canonicalGenerators(const Generators& g, std::size_t n) {
  Generators out;
  Lattice lat = Lattice::saturatedSpan(g.lineality, n);
  out.lineality = lat.basisVectors();

  const std::vector<IntVec>& basis = out.lineality;
  const std::size_t d = basis.size();
  RationalMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      gram(i, j) = dot(basis[i], basis[j]);
  RationalMatrix gramInv = d ? inverse(gram) : RationalMatrix();

  std::set<IntVec> seen;
  for (const IntVec& r : g.rays) {
    RatVec v = toRational(r);
    if (d) {
      RatVec coeffs(d);
      for (std::size_t i = 0; i < d; ++i)
        coeffs[i] = dot(basis[i], r);
      RatVec lambda = gramInv * coeffs;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < n; ++k)
          v[k] -= lambda[i] * basis[i][k];
    }
    if (isZero(std::span<const Rational>(v)))
      continue;
    seen.insert(clearDenominators(v));
  }
  out.rays.assign(seen.begin(), seen.end());
  return out;
}

} // namespace detail

/// A rational polyhedral cone {x : a·x >= 0, e·x = 0} with both descriptions
/// held in canonical form. Two cones are equal iff their canonical rays and
/// lineality bases coincide.
class Cone {
public:
  Cone() = default;

  static Cone fromGenerators(const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality,
                             std::size_t ambient) {
    detail::Generators dual = detail::doubleDescription(rays, lineality, ambient);
    return fromDual(detail::canonicalGenerators(dual, ambient), ambient);
  }

  static Cone fromInequalities(const std::vector<IntVec>& inequalities,
                               const std::vector<IntVec>& equations, std::size_t ambient) {
    detail::Generators primal = detail::doubleDescription(inequalities, equations, ambient);
    detail::Generators canon = detail::canonicalGenerators(primal, ambient);
    return fromGenerators(canon.rays, canon.lineality, ambient);
  }

  static Cone origin(std::size_t ambient) { return fromGenerators({}, {}, ambient); }
  static Cone fullSpace(std::size_t ambient) { return fromInequalities({}, {}, ambient); }

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return ambient_ - equations_.size(); }
  std::size_t linealityDim() const { return lineality_.size(); }

  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::vector<IntVec>& inequalities() const { return inequalities_; }
  const std::vector<IntVec>& equations() const { return equations_; }

  IntegerMatrix rayMatrix() const { return IntegerMatrix::fromColumns(rays_, ambient_); }
  IntegerMatrix linealityMatrix() const { return IntegerMatrix::fromColumns(lineality_, ambient_); }

  /// rays followed by lineality generators; spans the linear hull of the cone.
  std::vector<IntVec> spanningVectors() const {
    std::vector<IntVec> v = rays_;
    v.insert(v.end(), lineality_.begin(), lineality_.end());
    return v;
  }

  Lattice lattice() const { return Lattice::saturatedSpan(spanningVectors(), ambient_); }

  template <class T>
  bool contains(const std::vector<T>& point) const {
    checkDim(point.size());
    for (const IntVec& e : equations_)
      if (dot(e, point) != 0)
        return false;
    for (const IntVec& a : inequalities_)
      if (dot(a, point) < 0)
        return false;
    return true;
  }

  template <class T>
  bool containsInRelativeInterior(const std::vector<T>& point) const {
    checkDim(point.size());
    for (const IntVec& e : equations_)
      if (dot(e, point) != 0)
        return false;
    for (const IntVec& a : inequalities_)
      if (dot(a, point) <= 0)
        return false;
    return true;
  }

  bool containsCone(const Cone& other) const {
    if (other.ambient_ != ambient_)
      throw Error(ErrorKind::DimMismatch, "cones live in different ambient spaces");
    for (const IntVec& r : other.rays_)
      if (!contains(r))
        return false;
    for (const IntVec& l : other.lineality_)
      for (const IntVec& e : equations_)
        if (dot(e, l) != 0)
          return false;
    for (const IntVec& l : other.lineality_)
      for (const IntVec& a : inequalities_)
        if (dot(a, l) != 0)
          return false;
    return true;
  }

  /// Sum of the rays; lies in the relative interior.
  RatVec relativeInteriorPoint() const {
    RatVec p(ambient_);
    for (const IntVec& r : rays_)
      for (std::size_t i = 0; i < ambient_; ++i)
        p[i] += r[i];
    return p;
  }

  Cone intersection(const Cone& other) const {
    if (other.ambient_ != ambient_)
      throw Error(ErrorKind::DimMismatch, "cones live in different ambient spaces");
    std::vector<IntVec> ineq = inequalities_;
    ineq.insert(ineq.end(), other.inequalities_.begin(), other.inequalities_.end());
    std::vector<IntVec> eq = equations_;
    eq.insert(eq.end(), other.equations_.begin(), other.equations_.end());
    return fromInequalities(ineq, eq, ambient_);
  }

  /// The face cut out by the supporting hyperplane normal·x = 0
  /// (normal must be valid on the cone).
  Cone faceAt(const IntVec& normal) const {
    std::vector<IntVec> tight;
    for (const IntVec& r : rays_)
      if (dot(normal, r) == 0)
        tight.push_back(r);
    return fromGenerators(tight, lineality_, ambient_);
  }

  std::vector<Cone> facets() const {
    std::vector<Cone> out;
    for (const IntVec& a : inequalities_)
      out.push_back(faceAt(a));
    std::sort(out.begin(), out.end());
    return out;
  }

  Cone negated() const {
    std::vector<IntVec> r;
    for (const IntVec& v : rays_)
      r.push_back(trop::negated(v));
    return fromGenerators(r, lineality_, ambient_);
  }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_ == b.ambient_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.ambient_ != b.ambient_)
      return a.ambient_ < b.ambient_;
    if (a.rays_ != b.rays_)
      return a.rays_ < b.rays_;
    return a.lineality_ < b.lineality_;
  }

private:
  static Cone fromDual(const detail::Generators& dualCanon, std::size_t ambient) {
    detail::Generators primal =
        detail::doubleDescription(dualCanon.rays, dualCanon.lineality, ambient);
    detail::Generators canon = detail::canonicalGenerators(primal, ambient);
    Cone c;
    c.ambient_ = ambient;
    c.rays_ = std::move(canon.rays);
    c.lineality_ = std::move(canon.lineality);
    c.inequalities_ = dualCanon.rays;
    c.equations_ = dualCanon.lineality;
    return c;
  }

  void checkDim(std::size_t d) const {
    if (d != ambient_)
      throw Error(ErrorKind::DimMismatch, "point of length " + std::to_string(d) +
                                              " for a cone in dimension " + std::to_string(ambient_));
  }

  std::size_t ambient_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> inequalities_;
  std::vector<IntVec> equations_;
};

/// Dual-description entry points.
inline Cone dualDescription(const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality,
                            std::size_t ambient) {
  return Cone::fromGenerators(rays, lineality, ambient);
}

inline Cone dualDescriptionH(const std::vector<IntVec>& inequalities,
                             const std::vector<IntVec>& equations, std::size_t ambient) {
  return Cone::fromInequalities(inequalities, equations, ambient);
}

/// All faces of the given codimension (0 <= codim <= dim).
inline std::vector<Cone> faces(const Cone& c, std::size_t codim) {
  if (codim > c.dim())
    throw Error(ErrorKind::BadCodim, "codimension " + std::to_string(codim) +
                                         " exceeds cone dimension " + std::to_string(c.dim()));
  std::set<Cone> level{c};
  for (std::size_t k = 0; k < codim; ++k) {
    std::set<Cone> next;
    for (const Cone& f : level)
      for (Cone& g : f.facets())
        next.insert(std::move(g));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

} // namespace trop
