#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <variant>
#include <vector>

#include "trop/cycle.hpp"
#include "trop/groebner.hpp"

namespace trop {

/// Codimension-one skeleton of the normal fan of the Newton polytope, with
/// edge lattice lengths as weights.
inline TropicalCycle tropicalHypersurface(const Polynomial& f, Convention conv = Convention::Min) {
  if (f.isZero())
    throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no tropicalization");
  if (f.numTerms() < 2)
    throw Error(ErrorKind::MonomialHypersurfaceEmpty,
                "a monomial has an empty tropical hypersurface");
  const std::size_t n = f.numVariables();
  std::vector<IntVec> verts;
  for (const Monomial& m : newtonPolytope(f))
    verts.push_back(toIntVec(m));
  std::vector<std::pair<Cone, std::int64_t>> cones;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      std::vector<IntVec> ineqs;
      for (std::size_t k = 0; k < verts.size(); ++k)
        if (k != i && k != j)
          ineqs.push_back(verts[k] - verts[i]);
      IntVec edge = verts[j] - verts[i];
      Cone c = Cone::fromInequalities(ineqs, {edge}, n);
      if (c.dim() + 1 != n)
        continue;
      cones.emplace_back(std::move(c), toInt64(contentOf(edge)));
    }
  TropicalCycle result(WeightedFan::fromWeightedCones(cones, n, Convention::Min));
  return conv == Convention::Min ? result : swapConvention(result);
}

/// Intersection of the hypersurfaces of the given polynomials.
inline Fan tropicalPrevariety(const std::vector<Polynomial>& fs, Convention conv = Convention::Min) {
  if (fs.empty())
    throw Error(ErrorKind::ZeroIdeal, "a prevariety needs at least one polynomial");
  Fan acc = tropicalHypersurface(fs.front()).fan();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (fs[i].numVariables() != acc.ambientDim())
      throw Error(ErrorKind::DimMismatch, "polynomials live in different rings");
    acc = commonRefinement(acc, tropicalHypersurface(fs[i]).fan());
  }
  return conv == Convention::Min ? acc : acc.negated();
}

namespace detail {

/// Multiplicity of a cell of trop V(J) from a Gröbner basis whose closed cone
/// contains the cell's relative interior.
inline Integer multiplicityFromBasis(const GroebnerBasis& gb, const Cone& sigma) {
  const std::size_t n = gb.variables.size();
  IdealSpec inw = initialIdeal(gb, sigma.relativeInteriorPoint());
  const std::size_t d = sigma.dim();
  const std::size_t r = n - d;
  if (r == 0) {
    if (inw.isZero())
      return 1;
    throw Error(ErrorKind::NotZeroDimensional, "full-dimensional cell with a nonzero initial ideal");
  }
  IntegerMatrix v = unimodularCompletionRows(sigma.lattice());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i)
    names.push_back("y" + std::to_string(i));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : inw.generators) {
    std::vector<std::pair<IntVec, Rational>> terms;
    for (const auto& [m, c] : g.terms()) {
      IntVec u = v * toIntVec(m);
      if (!terms.empty())
        for (std::size_t k = 0; k < d; ++k)
          if (u[k] != terms.front().first[k])
            throw Error(ErrorKind::NotZeroDimensional,
                        "initial ideal is not homogeneous along the cell");
      terms.emplace_back(std::move(u), c);
    }
    IntVec low(r);
    for (std::size_t k = 0; k < r; ++k) {
      low[k] = terms.front().first[d + k];
      for (const auto& t : terms)
        if (t.first[d + k] < low[k])
          low[k] = t.first[d + k];
    }
    Polynomial p(names);
    for (const auto& [u, c] : terms) {
      Monomial e(r);
      for (std::size_t k = 0; k < r; ++k)
        e[k] = static_cast<int>(toInt64(u[d + k] - low[k]));
      p.addTerm(std::move(e), c);
    }
    gens.push_back(std::move(p));
  }
  IdealSpec reduced(names, std::move(gens));
  return vectorSpaceDimension(saturateByVariables(reduced));
}

} // namespace detail

/// Multiplicity of a maximal cell sigma of trop V(J), J homogeneous.
inline Integer multiplicityAt(const IdealSpec& j, const Cone& sigma) {
  if (sigma.ambientDim() != j.numVariables())
    throw Error(ErrorKind::DimMismatch, "cone and ideal live in different dimensions");
  TermOrder order(j.numVariables(), {sigma.relativeInteriorPoint()}, Convention::Min);
  return detail::multiplicityFromBasis(reducedGroebnerBasis(j, order), sigma);
}

using VarietyResult = std::variant<TropicalCycle, WeightedFan>;

inline const WeightedFan& asWeightedFan(const VarietyResult& r) {
  if (const auto* c = std::get_if<TropicalCycle>(&r))
    return c->weighted();
  return std::get<WeightedFan>(r);
}

namespace detail {

struct HomogeneousData {
  IdealSpec j;                     // saturated homogenization, variable 0 homogenizes
  std::vector<GroebnerCone> fan;   // empty when j is the unit ideal
  bool unit = false;
};

inline HomogeneousData homogeneousData(const IdealSpec& ideal) {
  if (ideal.isZero())
    throw Error(ErrorKind::ZeroIdeal, "the zero ideal has no tropical variety");
  if (reducedGroebnerBasis(ideal, TermOrder::grevlex(ideal.numVariables())).isUnit())
    throw Error(ErrorKind::UnitIdeal, "the unit ideal has no tropical variety");
  HomogeneousData h{saturateByVariables(homogenize(ideal)), {}, false};
  h.unit = reducedGroebnerBasis(h.j, TermOrder::grevlex(h.j.numVariables())).isUnit();
  if (!h.unit)
    h.fan = groebnerFan(h.j);
  return h;
}

/// Intersects a cone in R^{n+1} with {w_0 = 0} and drops coordinate 0.
inline Cone sliceCone(const Cone& c) {
  const std::size_t n = c.ambientDim();
  IntVec e0(n);
  e0[0] = 1;
  std::vector<IntVec> eqs = c.equations();
  eqs.push_back(e0);
  Cone s = Cone::fromInequalities(c.inequalities(), eqs, n);
  auto drop = [](const std::vector<IntVec>& vs) {
    std::vector<IntVec> out;
    for (const IntVec& v : vs)
      out.emplace_back(v.begin() + 1, v.end());
    return out;
  };
  return Cone::fromGenerators(drop(s.rays()), drop(s.lineality()), n - 1);
}

/// Lifts a cone of R^n to R^{n+1}: prepend 0 and add the all-ones direction.
inline Cone liftCone(const Cone& c) {
  const std::size_t n = c.ambientDim();
  auto lift = [](const std::vector<IntVec>& vs) {
    std::vector<IntVec> out;
    for (const IntVec& v : vs) {
      IntVec w{0};
      w.insert(w.end(), v.begin(), v.end());
      out.push_back(std::move(w));
    }
    return out;
  };
  std::vector<IntVec> lin = lift(c.lineality());
  lin.emplace_back(n + 1, Integer(1));
  return Cone::fromGenerators(lift(c.rays()), lin, n + 1);
}

} // namespace detail

/// Tropical variety of an ideal by enumerating the Gröbner fan of its
/// homogenization. `prime` is accepted and ignored.
inline VarietyResult tropicalVariety(const IdealSpec& ideal, bool prime = true,
                                     Convention conv = Convention::Min) {
  (void)prime;
  const std::size_t n = ideal.numVariables();
  detail::HomogeneousData h = detail::homogeneousData(ideal);
  if (h.unit)
    return TropicalCycle::empty(n, conv);
  const int top = krullDimension(h.j);

  struct Face {
    std::size_t gb;
    std::vector<Cone> parents;
    bool inVariety = false;
    bool kept = false;
  };
  // levels[k] holds the faces of dimension k.
  std::vector<std::map<Cone, Face>> levels(n + 2);
  for (std::size_t i = 0; i < h.fan.size(); ++i)
    levels[h.fan[i].cone.dim()].emplace(h.fan[i].cone, Face{i, {}, false, false});
  for (std::size_t k = n + 1; k > 0; --k)
    for (const auto& [c, face] : levels[k])
      for (Cone& f : c.facets()) {
        auto [it, fresh] = levels[k - 1].try_emplace(std::move(f), Face{face.gb, {}, false, false});
        it->second.parents.push_back(c);
      }

  std::vector<std::pair<Cone, std::int64_t>> cells;
  for (int k = std::min<int>(top, static_cast<int>(n) + 1); k >= 0; --k)
    for (auto& [c, face] : levels[static_cast<std::size_t>(k)]) {
      for (const Cone& p : face.parents) {
        auto it = levels[static_cast<std::size_t>(k) + 1].find(p);
        if (it != levels[static_cast<std::size_t>(k) + 1].end() && it->second.inVariety) {
          face.inVariety = true;
          break;
        }
      }
      if (face.inVariety)
        continue;
      const GroebnerBasis& gb = h.fan[face.gb].basis;
      if (!isMonomialFree(initialIdeal(gb, c.relativeInteriorPoint())))
        continue;
      face.inVariety = face.kept = true;
      Integer m = detail::multiplicityFromBasis(gb, c);
      cells.emplace_back(detail::sliceCone(c), toInt64(m));
    }

  WeightedFan result = WeightedFan::fromWeightedCones(cells, n, Convention::Min);
  if (conv == Convention::Max)
    result = swapConvention(result);
  if (result.isPure())
    return TropicalCycle(std::move(result));
  return result;
}

/// Fast path for principal ideals through the Newton polytope.
inline TropicalCycle tropicalVarietyPrincipal(const Polynomial& f, Convention conv = Convention::Min) {
  if (f.isZero())
    throw Error(ErrorKind::ZeroIdeal, "the zero ideal has no tropical variety");
  if (f.isMonomial()) {
    if (f.totalDegree() == 0)
      throw Error(ErrorKind::UnitIdeal, "the unit ideal has no tropical variety");
    return TropicalCycle::empty(f.numVariables(), conv);
  }
  return tropicalHypersurface(f, conv);
}

/// Whether the prevariety of the generators equals the tropical variety of
/// the ideal they generate.
inline bool isTropicalBasis(const std::vector<Polynomial>& fs, Convention conv = Convention::Min) {
  (void)conv;
  if (fs.empty())
    throw Error(ErrorKind::ZeroIdeal, "no generators given");
  IdealSpec ideal(fs.front().variables(), fs);
  Fan pre = tropicalPrevariety(fs);
  detail::HomogeneousData h = detail::homogeneousData(ideal);
  if (h.unit)
    return pre.isEmpty();
  for (const Cone& c : pre.cones()) {
    Cone lifted = detail::liftCone(c);
    for (const GroebnerCone& g : h.fan) {
      Cone piece = lifted.intersection(g.cone);
      if (piece.dim() != lifted.dim())
        continue;
      if (!isMonomialFree(initialIdeal(g.basis, piece.relativeInteriorPoint())))
        return false;
    }
  }
  return true;
}

/// Stable intersection by the fan displacement rule with a seeded generic
/// displacement vector.
inline TropicalCycle stableIntersection(const TropicalCycle& a, const TropicalCycle& b,
                                        std::uint64_t seed = 0) {
  if (a.ambientDim() != b.ambientDim())
    throw Error(ErrorKind::DimMismatch, "cycles live in different ambient spaces");
  if (a.convention() != b.convention())
    throw Error(ErrorKind::ConventionMismatch, "cycles use different conventions");
  const std::size_t n = a.ambientDim();
  const Convention conv = a.convention();
  if (a.fan().isEmpty() || b.fan().isEmpty() || a.dim() + b.dim() < static_cast<int>(n))
    return TropicalCycle::empty(n, conv);
  const std::size_t k = static_cast<std::size_t>(a.dim() + b.dim()) - n;

  struct Pair {
    std::size_t i, j;
    bool transversal;
    std::vector<IntVec> span;  // equations of span(σA ∪ σB) when not transversal
    Cone difference;           // σA − σB when transversal
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < a.fan().cones().size(); ++i)
    for (std::size_t j = 0; j < b.fan().cones().size(); ++j) {
      const Cone& sa = a.fan().cones()[i];
      const Cone& sb = b.fan().cones()[j];
      std::vector<IntVec> gens = sa.spanningVectors();
      for (const IntVec& g : sb.spanningVectors())
        gens.push_back(g);
      if (rankOf(gens, n) < n) {
        pairs.push_back({i, j, false, orthogonalComplement(gens, n), Cone::origin(n)});
        continue;
      }
      std::vector<IntVec> rays = sa.rays();
      for (const IntVec& r : sb.rays())
        rays.push_back(trop::negated(r));
      std::vector<IntVec> lin = sa.lineality();
      for (const IntVec& l : sb.lineality())
        lin.push_back(l);
      pairs.push_back({i, j, true, {}, Cone::fromGenerators(rays, lin, n)});
    }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  for (int attempt = 0; attempt < 32; ++attempt) {
    RatVec v(n);
    for (Rational& x : v)
      x = coord(rng);
    bool generic = true;
    for (const Pair& p : pairs) {
      if (!p.transversal) {
        bool inside = true;
        for (const IntVec& e : p.span)
          if (dot(e, v) != 0) {
            inside = false;
            break;
          }
        generic = !inside;
      } else {
        generic = !(p.difference.contains(v) && !p.difference.containsInRelativeInterior(v));
      }
      if (!generic)
        break;
    }
    if (!generic)
      continue;

    std::vector<std::pair<Cone, std::int64_t>> cells;
    for (const Pair& p : pairs) {
      if (!p.transversal || !p.difference.containsInRelativeInterior(v))
        continue;
      const Cone& sa = a.fan().cones()[p.i];
      const Cone& sb = b.fan().cones()[p.j];
      Cone meet = sa.intersection(sb);
      if (meet.dim() != k)
        continue;
      Integer index = latticeIndex(sa.lattice(), sb.lattice());
      cells.emplace_back(std::move(meet), a.multiplicities()[p.i] * b.multiplicities()[p.j] *
                                              toInt64(index));
    }
    return TropicalCycle(WeightedFan::fromWeightedCones(cells, n, conv));
  }
  throw Error(ErrorKind::GenericityExhausted,
              "no generic displacement vector found in 32 attempts");
}

} // namespace trop
