#pragma once

#include <vector>

#include "trop/matrix.hpp"

namespace trop {

/// v divided by the gcd of its entries.
inline IntVec primitiveVector(const IntVec& v) {
  if (isZero(std::span<const Integer>(v)))
    throw Error(ErrorKind::ZeroVector, "primitive vector of the zero vector");
  return makePrimitive(v);
}

/// A subgroup of Z^n, stored by a basis in column Hermite normal form so that
/// equal lattices compare equal structurally.
class Lattice {
public:
  Lattice() = default;

  /// The lattice generated by the given vectors (which may be dependent).
  static Lattice generatedBy(const std::vector<IntVec>& generators, std::size_t ambient) {
    Lattice l;
    l.ambient_ = ambient;
    if (generators.empty()) {
      l.basis_ = IntegerMatrix(ambient, 0);
      return l;
    }
    IntegerMatrix h = hermiteNormalForm(IntegerMatrix::fromColumns(generators, ambient)).H;
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      IntVec c = h.column(j);
      if (!isZero(std::span<const Integer>(c)))
        cols.push_back(std::move(c));
    }
    l.basis_ = IntegerMatrix::fromColumns(cols, ambient);
    return l;
  }

  /// span(generators) ∩ Z^n, computed as the kernel of the kernel.
  static Lattice saturatedSpan(const std::vector<IntVec>& generators, std::size_t ambient) {
    std::vector<IntVec> normals = orthogonalComplement(generators, ambient);
    return generatedBy(orthogonalComplement(normals, ambient), ambient);
  }

  static Lattice full(std::size_t ambient) {
    Lattice l;
    l.ambient_ = ambient;
    l.basis_ = IntegerMatrix::identity(ambient);
    return l;
  }

  std::size_t ambientDim() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntegerMatrix& basis() const { return basis_; }
  std::vector<IntVec> basisVectors() const { return basis_.columns(); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

private:
  std::size_t ambient_ = 0;
  IntegerMatrix basis_;
};

/// [Z^n : L1 + L2]; requires L1 + L2 to have full rank.
inline Integer latticeIndex(const Lattice& a, const Lattice& b) {
  if (a.ambientDim() != b.ambientDim())
    throw Error(ErrorKind::DimMismatch, "lattices live in different ambient spaces");
  const std::size_t n = a.ambientDim();
  IntegerMatrix joint = concatColumns(a.basis(), b.basis());
  if (n == 0)
    return 1;
  if (rank(joint) != n)
    throw Error(ErrorKind::NotFullRank, "sum of lattices has rank " +
                                            std::to_string(rank(joint)) + " < " + std::to_string(n));
  Integer index = 1;
  for (const Integer& d : invariantFactors(joint))
    index *= d;
  return index;
}

/// Given a basis of a saturated sublattice (span ∩ Z^n) of rank d, returns a
/// unimodular n×n matrix whose first d rows form a basis of the same lattice.
inline IntegerMatrix unimodularCompletionRows(const Lattice& saturated) {
  const std::size_t n = saturated.ambientDim();
  const std::size_t d = saturated.rank();
  if (d == 0)
    return IntegerMatrix::identity(n);
  SmithResult s = smithNormalForm(saturated.basis());
  for (std::size_t i = 0; i < d; ++i)
    if (s.D(i, i) != 1)
      throw Error(ErrorKind::NotFullRank, "lattice is not saturated");
  // B = P^{-1} [I; 0] Q^{-1}, so the first d columns of P^{-1} span the lattice.
  return inverseUnimodular(s.P).transposed();
}

} // namespace trop
