#pragma once

// Desk-scale inputs shared by the tropical, CLI and acceptance tests.

#include <string>
#include <vector>

#include "trop/trop.hpp"

namespace corpus {

struct Ideal {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  int dim;  // expected dimension of the tropical variety
};

inline trop::IdealSpec toIdeal(const Ideal& c) {
  std::vector<trop::Polynomial> gens;
  for (const std::string& g : c.gens)
    gens.push_back(trop::parsePolynomial(g, c.vars));
  return trop::IdealSpec(c.vars, gens);
}

/// Prime ideals over Q in at most four variables, degree at most three.
inline const std::vector<Ideal>& primeIdeals() {
  static const std::vector<Ideal> ideals{
      {"line", {"x", "y"}, {"x+y+1"}, 1},
      {"linear-plane-in-4", {"x", "y", "z", "w"}, {"x+y+z+w+1", "x+2*y+3*z+5*w+7"}, 2},
      {"linear-line-in-3", {"x", "y", "z"}, {"x+y+z+1", "x-y+2*z"}, 1},
      {"hyperbola", {"x", "y"}, {"x*y-1"}, 1},
      {"cusp", {"x", "y"}, {"x^2-y^3"}, 1},
      {"cone-binomial", {"x", "y", "z"}, {"x*y-z^2"}, 2},
      {"twisted-cubic", {"x", "y", "z"}, {"y-x^2", "z-x^3"}, 1},
      {"twisted-cubic-2", {"x", "y", "z"}, {"x-y^2", "z-y^3"}, 1},
      {"elliptic", {"x", "y"}, {"y^2-x^3-x-1"}, 1},
      {"fermat-cubic", {"x", "y", "z"}, {"x^3+y^3+z^3+1"}, 2},
      {"circle", {"x", "y"}, {"x^2+y^2-1"}, 1},
      {"line-and-quadric", {"x", "y", "z"}, {"x+y+z", "x^2+y^2+z^2"}, 1},
  };
  return ideals;
}

struct Poly {
  std::vector<std::string> vars;
  std::string text;
};

inline trop::Polynomial toPolynomial(const Poly& p) { return trop::parsePolynomial(p.text, p.vars); }

/// Polynomials for the hypersurface membership oracle.
inline const std::vector<Poly>& hypersurfacePolys() {
  static const std::vector<Poly> polys{
      {{"x", "y"}, "x+y+1"},
      {{"x", "y"}, "x^2+x*y+y^2+x+y+1"},
      {{"x", "y"}, "y^2-x^3-x-1"},
      {{"x", "y"}, "x^3*y+x*y^3+7"},
      {{"x", "y", "z"}, "x+y+z"},
      {{"x", "y", "z"}, "x^2+y^2+z^2"},
      {{"x", "y", "z"}, "x^3+y^3+z^3+1"},
      {{"x", "y", "z"}, "x*y*z+x^2+y-z^2+3"},
      {{"x", "y", "z", "w"}, "x*y-z*w+x+1"},
      {{"x", "y", "z", "w"}, "x^2*w+y^3-z+2*w"},
  };
  return polys;
}

/// Principal ideals for comparing the generic pipeline with the Newton
/// polytope fast path.
inline const std::vector<Poly>& principalPolys() {
  static const std::vector<Poly> polys{
      {{"x", "y"}, "x+y+1"},
      {{"x", "y"}, "x*y-1"},
      {{"x", "y", "z"}, "x^2+y^2+z^2"},
      {{"x", "y"}, "x^2+y^2-1"},
      {{"x", "y"}, "y^2-x^3-x-1"},
      {{"x", "y"}, "x^4+y^2+x*y+1"},
      {{"x", "y"}, "x^2+2*x*y+y^2+x+1"},
      {{"x", "y"}, "x*(x+y+1)"},
      {{"x", "y", "z"}, "x^3+y^3+z^3+1"},
      {{"x", "y", "z"}, "x*y-z^2+x"},
  };
  return polys;
}

} // namespace corpus
