#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "trop/cone.hpp"

namespace trop {

/// Is `face` a face of `cone`? (It must be contained in the cone and equal
/// the face cut out by all facet normals vanishing on it.)
inline bool isFaceOf(const Cone& face, const Cone& cone) {
  if (!cone.containsCone(face))
    return false;
  std::vector<IntVec> tight;
  for (const IntVec& r : cone.rays()) {
    bool ok = true;
    for (const IntVec& a : cone.inequalities()) {
      bool vanishesOnFace = true;
      for (const IntVec& g : face.rays())
        if (dot(a, g) != 0) {
          vanishesOnFace = false;
          break;
        }
      if (vanishesOnFace && dot(a, r) != 0) {
        ok = false;
        break;
      }
    }
    if (ok)
      tight.push_back(r);
  }
  return Cone::fromGenerators(tight, cone.lineality(), cone.ambientDim()) == face;
}

/// A rational polyhedral fan given by its maximal cones. Rays are shared,
/// primitive, taken modulo the common lineality space and sorted
/// lexicographically; each maximal cone is a sorted set of ray indices and
/// the cones are ordered lexicographically by those index sets.
class Fan {
public:
  Fan() = default;

  /// The fan with no cones at all (distinct from the origin-only fan).
  static Fan empty(std::size_t ambient) {
    Fan f;
    f.ambient_ = ambient;
    return f;
  }

  /// Builds the fan whose maximal cones are the inclusion-maximal members of
  /// `cones`. All cones must share one lineality space.
  static Fan fromCones(const std::vector<Cone>& cones, std::size_t ambient) {
    Fan f;
    f.ambient_ = ambient;
    std::set<Cone> unique(cones.begin(), cones.end());
    std::vector<Cone> maximal;
    for (const Cone& c : unique) {
      if (c.ambientDim() != ambient)
        throw Error(ErrorKind::DimMismatch, "cone does not live in the fan's ambient space");
      bool dominated = false;
      for (const Cone& d : unique)
        if (!(d == c) && d.containsCone(c)) {
          dominated = true;
          break;
        }
      if (!dominated)
        maximal.push_back(c);
    }
    if (maximal.empty())
      return f;
    f.lineality_ = maximal.front().lineality();
    std::set<IntVec> raySet;
    for (const Cone& c : maximal) {
      if (c.lineality() != f.lineality_)
        throw Error(ErrorKind::DimMismatch, "cones of a fan must share their lineality space");
      raySet.insert(c.rays().begin(), c.rays().end());
    }
    f.rays_.assign(raySet.begin(), raySet.end());
    std::vector<std::pair<std::vector<int>, Cone>> indexed;
    for (Cone& c : maximal) {
      std::vector<int> idx;
      for (const IntVec& r : c.rays())
        idx.push_back(static_cast<int>(std::lower_bound(f.rays_.begin(), f.rays_.end(), r) -
                                       f.rays_.begin()));
      std::sort(idx.begin(), idx.end());
      indexed.emplace_back(std::move(idx), std::move(c));
    }
    std::sort(indexed.begin(), indexed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, c] : indexed) {
      f.maxCones_.push_back(std::move(idx));
      f.cones_.push_back(std::move(c));
    }
    return f;
  }

  /// Fan from explicit data: ray columns, lineality generators and index sets.
  static Fan fromRaysAndCones(const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality,
                              const std::vector<std::vector<int>>& maxCones, std::size_t ambient) {
    std::vector<Cone> cones;
    for (const auto& idx : maxCones) {
      std::vector<IntVec> gens;
      for (int i : idx) {
        if (i < 0 || static_cast<std::size_t>(i) >= rays.size())
          throw Error(ErrorKind::DimMismatch, "ray index " + std::to_string(i) + " out of range");
        gens.push_back(rays[static_cast<std::size_t>(i)]);
      }
      cones.push_back(Cone::fromGenerators(gens, lineality, ambient));
    }
    return fromCones(cones, ambient);
  }

  std::size_t ambientDim() const { return ambient_; }
  bool isEmpty() const { return cones_.empty(); }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::vector<std::vector<int>>& maxCones() const { return maxCones_; }
  const std::vector<Cone>& cones() const { return cones_; }

  IntegerMatrix rayMatrix() const { return IntegerMatrix::fromColumns(rays_, ambient_); }
  IntegerMatrix linealityMatrix() const { return IntegerMatrix::fromColumns(lineality_, ambient_); }

  /// Largest dimension of a maximal cone; -1 for the empty fan.
  int dim() const {
    int d = -1;
    for (const Cone& c : cones_)
      d = std::max(d, static_cast<int>(c.dim()));
    return d;
  }

  bool isPure() const {
    for (const Cone& c : cones_)
      if (static_cast<int>(c.dim()) != dim())
        return false;
    return true;
  }

  Fan negated() const {
    std::vector<Cone> neg;
    for (const Cone& c : cones_)
      neg.push_back(c.negated());
    return fromCones(neg, ambient_);
  }

  /// Pairwise intersections of maximal cones are faces of both.
  bool isValidFan() const {
    for (std::size_t i = 0; i < cones_.size(); ++i)
      for (std::size_t j = i + 1; j < cones_.size(); ++j) {
        Cone meet = cones_[i].intersection(cones_[j]);
        if (!isFaceOf(meet, cones_[i]) || !isFaceOf(meet, cones_[j]))
          return false;
      }
    return true;
  }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.ambient_ == b.ambient_ && a.cones_ == b.cones_;
  }

private:
  std::size_t ambient_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::vector<std::vector<int>> maxCones_;
  std::vector<Cone> cones_;
};

/// The fan of all intersections σ1 ∩ σ2; support is the intersection of supports.
inline Fan commonRefinement(const Fan& a, const Fan& b) {
  if (a.ambientDim() != b.ambientDim())
    throw Error(ErrorKind::DimMismatch, "fans live in different ambient spaces");
  std::vector<Cone> pieces;
  for (const Cone& s : a.cones())
    for (const Cone& t : b.cones())
      pieces.push_back(s.intersection(t));
  return Fan::fromCones(pieces, a.ambientDim());
}

inline bool supportContains(const Fan& f, const RatVec& w) {
  if (w.size() != f.ambientDim())
    throw Error(ErrorKind::DimMismatch, "point of length " + std::to_string(w.size()) +
                                            " for a fan in dimension " +
                                            std::to_string(f.ambientDim()));
  for (const Cone& c : f.cones())
    if (coneFeasible(c.rayMatrix(), c.linealityMatrix(), w))
      return true;
  return false;
}

} // namespace trop
