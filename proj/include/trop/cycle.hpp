#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "trop/fan.hpp"

namespace trop {

/// A fan with a positive integer weight on each maximal cone and a min/max
/// convention tag. Purity is not required.
class WeightedFan {
public:
  WeightedFan() = default;

  /// Weights must be nonnegative; zero-weight cones are dropped.
  WeightedFan(const Fan& fan, const std::vector<std::int64_t>& multiplicities, Convention conv)
      : conv_(conv) {
    if (multiplicities.size() != fan.cones().size())
      throw Error(ErrorKind::MultiplicityCountMismatch,
                  std::to_string(multiplicities.size()) + " multiplicities for " +
                      std::to_string(fan.cones().size()) + " maximal cones");
    std::vector<std::pair<Cone, std::int64_t>> weighted;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
      weighted.emplace_back(fan.cones()[i], multiplicities[i]);
    assign(weighted, fan.ambientDim());
  }

  /// Weighted cones in any order; weights of equal cones are added.
  static WeightedFan fromWeightedCones(const std::vector<std::pair<Cone, std::int64_t>>& cones,
                                       std::size_t ambient, Convention conv) {
    WeightedFan w;
    w.conv_ = conv;
    w.assign(cones, ambient);
    return w;
  }

  static WeightedFan empty(std::size_t ambient, Convention conv) {
    return fromWeightedCones({}, ambient, conv);
  }

  const Fan& fan() const { return fan_; }
  const std::vector<std::int64_t>& multiplicities() const { return mults_; }
  Convention convention() const { return conv_; }
  std::size_t ambientDim() const { return fan_.ambientDim(); }
  int dim() const { return fan_.dim(); }
  bool isPure() const { return fan_.isPure(); }

  friend bool operator==(const WeightedFan&, const WeightedFan&) = default;

private:
  void assign(const std::vector<std::pair<Cone, std::int64_t>>& cones, std::size_t ambient) {
    std::map<Cone, std::int64_t> weight;
    for (const auto& [c, m] : cones) {
      if (m < 0)
        throw Error(ErrorKind::InvalidMultiplicity,
                    "multiplicity " + std::to_string(m) + " is negative");
      weight[c] += m;
    }
    std::vector<Cone> kept;
    for (const auto& [c, m] : weight)
      if (m > 0)
        kept.push_back(c);
    fan_ = Fan::fromCones(kept, ambient);
    mults_.clear();
    for (const Cone& c : fan_.cones())
      mults_.push_back(weight.at(c));
  }

  Fan fan_;
  std::vector<std::int64_t> mults_;
  Convention conv_ = Convention::Min;
};

/// A pure-dimensional weighted fan. Balancing is not checked at construction.
class TropicalCycle {
public:
  TropicalCycle() = default;

  explicit TropicalCycle(WeightedFan w) : data_(std::move(w)) {
    if (!data_.isPure())
      throw Error(ErrorKind::NotPure, "maximal cones of a tropical cycle must have equal dimension");
  }

  TropicalCycle(const Fan& fan, const std::vector<std::int64_t>& mults, Convention conv)
      : TropicalCycle(WeightedFan(fan, mults, conv)) {}

  static TropicalCycle empty(std::size_t ambient, Convention conv) {
    return TropicalCycle(WeightedFan::empty(ambient, conv));
  }

  const WeightedFan& weighted() const { return data_; }
  const Fan& fan() const { return data_.fan(); }
  const std::vector<std::int64_t>& multiplicities() const { return data_.multiplicities(); }
  Convention convention() const { return data_.convention(); }
  std::size_t ambientDim() const { return data_.ambientDim(); }
  int dim() const { return data_.dim(); }

  friend bool operator==(const TropicalCycle&, const TropicalCycle&) = default;

private:
  WeightedFan data_;
};

/// Builds a cycle from a fan and weights without checking balancing.
inline TropicalCycle makeCycle(const Fan& fan, const std::vector<std::int64_t>& mults,
                               Convention conv = Convention::Min) {
  if (mults.size() != fan.cones().size())
    throw Error(ErrorKind::MultiplicityCountMismatch,
                std::to_string(mults.size()) + " multiplicities for " +
                    std::to_string(fan.cones().size()) + " maximal cones");
  if (!fan.isPure())
    throw Error(ErrorKind::NotPure, "fan is not pure");
  for (std::int64_t m : mults)
    if (m < 0)
      throw Error(ErrorKind::InvalidMultiplicity, "multiplicities must be positive");
  return TropicalCycle(fan, mults, conv);
}

// Accessors mirroring the session interface.
inline IntegerMatrix rays(const TropicalCycle& c) { return c.fan().rayMatrix(); }
inline IntegerMatrix linealitySpace(const TropicalCycle& c) { return c.fan().linealityMatrix(); }
inline const std::vector<std::vector<int>>& maxCones(const TropicalCycle& c) {
  return c.fan().maxCones();
}
inline const std::vector<std::int64_t>& multiplicities(const TropicalCycle& c) {
  return c.multiplicities();
}
inline int dim(const TropicalCycle& c) { return c.dim(); }

namespace detail {

/// A lattice vector u of N_sigma whose class generates N_sigma / N_tau ≅ Z,
/// oriented to point into sigma.
inline IntVec primitiveNormal(const Cone& sigma, const Cone& tau) {
  const std::size_t n = sigma.ambientDim();
  const IntegerMatrix bs = sigma.lattice().basis();
  const std::vector<IntVec> tauBasis = tau.lattice().basisVectors();
  const std::size_t ds = bs.cols();
  const RationalMatrix bsQ = toRational(bs);

  // Coordinates of N_tau inside N_sigma, as rows of an integer matrix.
  std::vector<IntVec> coords;
  for (const IntVec& t : tauBasis) {
    auto c = solveRational(bsQ, toRational(t));
    if (!c)
      throw Error(ErrorKind::DimMismatch, "face is not contained in the cone's span");
    coords.push_back(clearDenominators(*c)); // already integral; scale-free for the kernel
  }
  std::vector<IntVec> phiBasis = orthogonalComplement(coords, ds);
  if (phiBasis.size() != 1)
    throw Error(ErrorKind::BadCodim, "face is not of codimension one");
  IntVec phi = makePrimitive(phiBasis.front());

  // c with phi·c = 1: first column of the unimodular matrix of phi's HNF.
  HermiteResult hr = hermiteNormalForm(IntegerMatrix::fromRows({phi}, ds));
  IntVec c = hr.U.column(0);
  if (hr.H(0, 0) != 1)
    throw Error(ErrorKind::NotFullRank, "quotient lattice is not free of rank one");

  RatVec interior = sigma.relativeInteriorPoint();
  auto interiorCoords = solveRational(bsQ, interior);
  if (dot(phi, *interiorCoords) < 0)
    c = negated(std::move(c));
  IntVec u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < ds; ++j)
      u[i] += bs(i, j) * c[j];
  return u;
}

} // namespace detail

/// Checks that at every codimension-one face the weighted primitive normals
/// of the adjacent maximal cones sum into the face's span.
inline bool isBalanced(const WeightedFan& w) {
  if (!w.isPure())
    throw Error(ErrorKind::NotPure, "balancing is only defined for pure weighted fans");
  const Fan& f = w.fan();
  std::map<Cone, std::vector<std::size_t>> adjacency;
  for (std::size_t i = 0; i < f.cones().size(); ++i)
    for (Cone& tau : f.cones()[i].facets())
      adjacency[std::move(tau)].push_back(i);
  for (const auto& [tau, around] : adjacency) {
    IntVec sum(f.ambientDim());
    for (std::size_t i : around) {
      IntVec u = detail::primitiveNormal(f.cones()[i], tau);
      for (std::size_t k = 0; k < sum.size(); ++k)
        sum[k] += Integer(static_cast<long>(w.multiplicities()[i])) * u[k];
    }
    for (const IntVec& e : tau.equations())
      if (dot(e, sum) != 0)
        return false;
  }
  return true;
}

inline bool isBalanced(const TropicalCycle& c) { return isBalanced(c.weighted()); }

/// Negates the fan pointwise and flips the convention tag; an involution.
inline WeightedFan swapConvention(const WeightedFan& w) {
  std::vector<std::pair<Cone, std::int64_t>> cones;
  for (std::size_t i = 0; i < w.fan().cones().size(); ++i)
    cones.emplace_back(w.fan().cones()[i].negated(), w.multiplicities()[i]);
  if (w.fan().isEmpty())
    return WeightedFan::empty(w.ambientDim(), flipped(w.convention()));
  return WeightedFan::fromWeightedCones(cones, w.ambientDim(), flipped(w.convention()));
}

inline TropicalCycle swapConvention(const TropicalCycle& c) {
  return TropicalCycle(swapConvention(c.weighted()));
}

} // namespace trop
