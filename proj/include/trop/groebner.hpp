#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trop/cone.hpp"
#include "trop/polynomial.hpp"

namespace trop {

/// Matrix term order: weight rows compared lexicographically, then graded
/// reverse lexicographic order with the first variable largest. Under the min
/// convention a smaller weight is "leading"; under max a larger one is.
class TermOrder {
public:
  TermOrder() = default;

  TermOrder(std::size_t numVars, std::vector<RatVec> weightRows = {},
            Convention conv = Convention::Min)
      : numVars_(numVars), rows_(std::move(weightRows)), conv_(conv) {
    for (const RatVec& row : rows_) {
      if (row.size() != numVars_)
        throw Error(ErrorKind::DimMismatch, "weight row of length " + std::to_string(row.size()) +
                                                " for " + std::to_string(numVars_) + " variables");
      Integer den = 1;
      for (const Rational& x : row)
        den = lcm(den, x.get_den());
      std::vector<long> eff;
      for (const Rational& x : row) {
        Rational scaled = x * den;
        Integer v = scaled.get_num();
        if (conv_ == Convention::Min)
          v = -v;
        if (!v.fits_slong_p() || abs(v) > Integer(1) << 40)
          throw Error(ErrorKind::DimMismatch, "weight entry too large for a term order");
        eff.push_back(v.get_si());
      }
      effective_.push_back(std::move(eff));
    }
  }

  static TermOrder grevlex(std::size_t numVars) { return TermOrder(numVars); }

  std::size_t numVariables() const { return numVars_; }
  const std::vector<RatVec>& weightRows() const { return rows_; }
  Convention convention() const { return conv_; }

  /// Positive when a leads b, negative when b leads a, zero when equal.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const std::vector<long>& w : effective_) {
      __int128 s = 0;
      for (std::size_t i = 0; i < numVars_; ++i)
        s += static_cast<__int128>(w[i]) * (a[i] - b[i]);
      if (s != 0)
        return s > 0 ? 1 : -1;
    }
    int da = degree(a), db = degree(b);
    if (da != db)
      return da > db ? 1 : -1;
    for (std::size_t i = numVars_; i-- > 0;)
      if (a[i] != b[i])
        return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  /// Whether every variable leads the constant monomial, i.e. the order is a
  /// well-order and Buchberger terminates on arbitrary input.
  bool isGlobal() const {
    for (std::size_t i = 0; i < numVars_; ++i)
      for (const std::vector<long>& w : effective_) {
        if (w[i] < 0)
          return false;
        if (w[i] > 0)
          break;
      }
    return true;
  }

private:
  std::size_t numVars_ = 0;
  std::vector<RatVec> rows_;
  Convention conv_ = Convention::Min;
  std::vector<std::vector<long>> effective_;
};

namespace detail {

struct Term {
  Monomial exp;
  Rational coef;
};

/// Polynomial as a term list sorted with the leading term first.
using SortedPoly = std::vector<Term>;

inline SortedPoly toSorted(const Polynomial& p, const TermOrder& order) {
  SortedPoly s;
  for (const auto& [m, c] : p.terms())
    s.push_back({m, c});
  std::sort(s.begin(), s.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.exp, b.exp) > 0; });
  return s;
}

inline Polynomial fromSorted(const SortedPoly& s, const std::vector<std::string>& vars) {
  Polynomial p(vars);
  for (const Term& t : s)
    p.addTerm(t.exp, t.coef);
  return p;
}

inline void makeMonic(SortedPoly& p) {
  if (p.empty() || p.front().coef == 1)
    return;
  Rational inv = 1 / p.front().coef;
  for (Term& t : p)
    t.coef *= inv;
}

/// a - factor * x^shift * b, both sorted.
inline SortedPoly subtractMultiple(const SortedPoly& a, const Rational& factor,
                                   const Monomial& shift, const SortedPoly& b,
                                   const TermOrder& order) {
  SortedPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial shifted(shift.size());
  auto shiftedOf = [&](std::size_t k) {
    for (std::size_t v = 0; v < shift.size(); ++v)
      shifted[v] = b[k].exp[v] + shift[v];
  };
  if (j < b.size())
    shiftedOf(j);
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = order.compare(a[i].exp, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({shifted, Rational(-factor * b[j].coef)});
      if (++j < b.size())
        shiftedOf(j);
    } else {
      Rational c = a[i].coef - factor * b[j].coef;
      if (c != 0)
        out.push_back({a[i].exp, c});
      ++i;
      if (++j < b.size())
        shiftedOf(j);
    }
  }
  return out;
}

/// Full normal form of f with respect to the (monic) polynomials in g.
inline SortedPoly normalForm(SortedPoly f, const std::vector<SortedPoly>& g,
                             const TermOrder& order, std::size_t skip = SIZE_MAX) {
  SortedPoly remainder;
  while (!f.empty()) {
    const Term& lead = f.front();
    bool reduced = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == skip || g[k].empty() || !divides(g[k].front().exp, lead.exp))
        continue;
      Monomial shift(lead.exp.size());
      for (std::size_t v = 0; v < shift.size(); ++v)
        shift[v] = lead.exp[v] - g[k].front().exp[v];
      Rational factor = lead.coef / g[k].front().coef;
      f = subtractMultiple(f, factor, shift, g[k], order);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(std::move(f.front()));
      f.erase(f.begin());
    }
  }
  return remainder;
}

inline SortedPoly sPolynomial(const SortedPoly& a, const SortedPoly& b, const TermOrder& order) {
  Monomial l = lcm(a.front().exp, b.front().exp);
  Monomial sa(l.size()), sb(l.size());
  for (std::size_t v = 0; v < l.size(); ++v) {
    sa[v] = l[v] - a.front().exp[v];
    sb[v] = l[v] - b.front().exp[v];
  }
  // (l/LT(a)) a - (l/LT(b)) b with both leading coefficients 1.
  SortedPoly shiftedA;
  for (const Term& t : a) {
    Monomial e = t.exp;
    for (std::size_t v = 0; v < e.size(); ++v)
      e[v] += sa[v];
    shiftedA.push_back({std::move(e), t.coef / a.front().coef});
  }
  return subtractMultiple(shiftedA, Rational(1) / b.front().coef, sb, b, order);
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > 0 && b[v] > 0)
      return false;
  return true;
}

/// Buchberger with the normal selection strategy, product and chain
/// criteria, followed by minimalization and interreduction.
inline std::vector<SortedPoly> buchberger(std::vector<SortedPoly> input, const TermOrder& order) {
  std::vector<SortedPoly> basis;
  for (SortedPoly& p : input) {
    if (p.empty())
      continue;
    makeMonic(p);
    basis.push_back(std::move(p));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
    std::size_t serial;
  };
  std::vector<Pair> pending;
  std::size_t serial = 0;
  // done[i][j] marks pairs that have been treated (reduced or discarded).
  std::vector<std::vector<bool>> done;

  auto addPairsFor = [&](std::size_t k) {
    done.emplace_back(k + 1, false);
    for (auto& row : done)
      row.resize(basis.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lcm(basis[i].front().exp, basis[k].front().exp);
      int d = trop::degree(l);
      pending.push_back({i, k, std::move(l), d, serial++});
    }
  };
  auto treated = [&](std::size_t a, std::size_t b) {
    return a < b ? done[b][a] : done[a][b];
  };
  auto markTreated = [&](std::size_t a, std::size_t b) {
    if (a < b)
      done[b][a] = true;
    else
      done[a][b] = true;
  };
  auto isPending = [&](std::size_t a, std::size_t b) {
    return !treated(a, b);
  };

  for (std::size_t k = 0; k < basis.size(); ++k)
    addPairsFor(k);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.serial < b.serial;
    });
    Pair pr = *best;
    pending.erase(best);

    bool skip = coprime(basis[pr.i].front().exp, basis[pr.j].front().exp);
    if (!skip) {
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j || !divides(basis[k].front().exp, pr.lcm))
          continue;
        skip = !isPending(pr.i, k) && !isPending(pr.j, k);
      }
    }
    markTreated(pr.i, pr.j);
    if (skip)
      continue;

    SortedPoly s = normalForm(sPolynomial(basis[pr.i], basis[pr.j], order), basis, order);
    if (s.empty())
      continue;
    makeMonic(s);
    basis.push_back(std::move(s));
    addPairsFor(basis.size() - 1);
    if (trop::degree(basis.back().front().exp) == 0)
      return {basis.back()}; // unit ideal
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<SortedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !divides(basis[k].front().exp, basis[i].front().exp))
        continue;
      redundant = basis[k].front().exp != basis[i].front().exp || k < i;
    }
    if (!redundant)
      minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    SortedPoly head{minimal[i].front()};
    SortedPoly tail(minimal[i].begin() + 1, minimal[i].end());
    SortedPoly reducedTail = normalForm(std::move(tail), minimal, order, i);
    head.insert(head.end(), reducedTail.begin(), reducedTail.end());
    minimal[i] = std::move(head);
    makeMonic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const SortedPoly& a, const SortedPoly& b) {
    return order.compare(a.front().exp, b.front().exp) > 0;
  });
  return minimal;
}

} // namespace detail

/// Reduced Gröbner basis together with its term order.
struct GroebnerBasis {
  TermOrder order;
  std::vector<std::string> variables;
  std::vector<Polynomial> elements;
  std::vector<Monomial> leadingExponents;

  bool isUnit() const {
    return elements.size() == 1 && trop::degree(leadingExponents.front()) == 0;
  }

  IdealSpec asIdeal() const { return IdealSpec(variables, elements); }

  /// Sorted (leading exponent, sorted other exponents) pairs; equal keys mean
  /// equal monomial initial ideals and equal reduced bases' supports.
  std::vector<std::pair<Monomial, std::vector<Monomial>>> canonicalKey() const {
    std::vector<std::pair<Monomial, std::vector<Monomial>>> key;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      std::vector<Monomial> rest;
      for (const auto& [m, c] : elements[i].terms())
        if (m != leadingExponents[i])
          rest.push_back(m);
      std::sort(rest.begin(), rest.end());
      key.emplace_back(leadingExponents[i], std::move(rest));
    }
    std::sort(key.begin(), key.end());
    return key;
  }
};

inline GroebnerBasis reducedGroebnerBasis(const IdealSpec& ideal, const TermOrder& order) {
  if (order.numVariables() != ideal.numVariables())
    throw Error(ErrorKind::DimMismatch, "term order and ideal have different variable counts");
  if (!order.isGlobal() && !ideal.isHomogeneous())
    throw Error(ErrorKind::RequiresHomogeneous,
                "a non-global term order needs homogeneous generators");
  std::vector<detail::SortedPoly> input;
  for (const Polynomial& g : ideal.generators)
    input.push_back(detail::toSorted(g, order));
  std::vector<detail::SortedPoly> gb = detail::buchberger(std::move(input), order);
  GroebnerBasis result{order, ideal.variables, {}, {}};
  for (const detail::SortedPoly& p : gb) {
    result.elements.push_back(detail::fromSorted(p, ideal.variables));
    result.leadingExponents.push_back(p.front().exp);
  }
  return result;
}

/// Reduces f to normal form modulo a Gröbner basis.
inline Polynomial normalForm(const Polynomial& f, const GroebnerBasis& g) {
  std::vector<detail::SortedPoly> basis;
  for (const Polynomial& e : g.elements)
    basis.push_back(detail::toSorted(e, g.order));
  return detail::fromSorted(detail::normalForm(detail::toSorted(f, g.order), basis, g.order),
                            g.variables);
}

inline bool idealContains(const GroebnerBasis& g, const Polynomial& f) {
  return normalForm(f, g).isZero();
}

/// Ideal generated by the initial forms of the basis elements at weight w.
inline IdealSpec initialIdeal(const GroebnerBasis& g, const RatVec& w) {
  if (w.size() != g.variables.size())
    throw Error(ErrorKind::DimMismatch, "weight vector of length " + std::to_string(w.size()) +
                                            " for " + std::to_string(g.variables.size()) +
                                            " variables");
  std::vector<Polynomial> gens;
  for (const Polynomial& e : g.elements)
    gens.push_back(initialForm(e, w, g.order.convention()));
  return IdealSpec(g.variables, std::move(gens));
}

namespace detail {

inline bool isUnitIdealGb(const std::vector<Polynomial>& gb) {
  return gb.size() == 1 && gb.front().totalDegree() == 0;
}

inline std::string freshName(const std::vector<std::string>& vars, const std::string& base) {
  std::string name = base;
  for (int k = 0; std::find(vars.begin(), vars.end(), name) != vars.end(); ++k)
    name = base + std::to_string(k);
  return name;
}

/// Appends an unused variable to every generator.
inline Polynomial extendRing(const Polynomial& f, const std::vector<std::string>& vars,
                             int newExponent = 0) {
  Polynomial p(vars);
  for (const auto& [m, c] : f.terms()) {
    Monomial e = m;
    e.push_back(newExponent);
    p.addTerm(std::move(e), c);
  }
  return p;
}

/// Moves variable `from` to the last position (or back, with inverse=true).
inline Polynomial moveVariableLast(const Polynomial& f, std::size_t from, bool inverse) {
  std::vector<std::string> vars = f.variables();
  auto permute = [&](auto v) {
    if (!inverse) {
      auto x = v[from];
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(from));
      v.push_back(x);
    } else {
      auto x = v.back();
      v.pop_back();
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(from), x);
    }
    return v;
  };
  Polynomial p(permute(vars));
  for (const auto& [m, c] : f.terms())
    p.addTerm(permute(m), c);
  return p;
}

/// I : x_i^∞ for homogeneous I: in grevlex with x_i last, dividing each basis
/// element by its largest x_i power yields a basis of the saturation.
inline IdealSpec saturateHomogeneousByVariable(const IdealSpec& ideal, std::size_t index) {
  std::vector<Polynomial> moved;
  for (const Polynomial& g : ideal.generators)
    moved.push_back(moveVariableLast(g, index, false));
  if (moved.empty())
    return ideal;
  IdealSpec permuted(moved.front().variables(), moved);
  GroebnerBasis gb = reducedGroebnerBasis(permuted, TermOrder::grevlex(ideal.numVariables()));
  std::vector<Polynomial> out;
  const std::size_t last = ideal.numVariables() - 1;
  for (const Polynomial& g : gb.elements) {
    int low = INT32_MAX;
    for (const auto& [m, c] : g.terms())
      low = std::min(low, m[last]);
    Polynomial divided(g.variables());
    for (const auto& [m, c] : g.terms()) {
      Monomial e = m;
      e[last] -= low;
      divided.addTerm(std::move(e), c);
    }
    out.push_back(moveVariableLast(divided, index, true));
  }
  return IdealSpec(ideal.variables, std::move(out));
}

} // namespace detail

/// (I : f^∞) via elimination of t from ⟨I, t·f − 1⟩.
inline IdealSpec saturate(const IdealSpec& ideal, const Polynomial& f) {
  if (f.isZero())
    throw Error(ErrorKind::ZeroPolynomial, "saturation by the zero polynomial");
  if (f.variables() != ideal.variables)
    throw Error(ErrorKind::DimMismatch, "saturating polynomial over a different ring");
  const std::size_t n = ideal.numVariables();
  std::vector<std::string> vars = ideal.variables;
  vars.push_back(detail::freshName(vars, "t"));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators)
    gens.push_back(detail::extendRing(g, vars));
  Polynomial tf = detail::extendRing(f, vars, 1);
  tf -= Polynomial::constant(vars, 1);
  gens.push_back(std::move(tf));

  RatVec eliminate(n + 1);
  eliminate[n] = 1;
  GroebnerBasis gb =
      reducedGroebnerBasis(IdealSpec(vars, gens), TermOrder(n + 1, {eliminate}, Convention::Max));
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements) {
    bool usesT = false;
    for (const auto& [m, c] : g.terms())
      usesT = usesT || m[n] > 0;
    if (!usesT)
      out.push_back(dehomogenize(g, n));
  }
  return IdealSpec(ideal.variables, std::move(out));
}

inline Polynomial productOfVariables(const std::vector<std::string>& vars) {
  return Polynomial::monomial(vars, Monomial(vars.size(), 1));
}

/// (I : (x_1 ⋯ x_n)^∞). Homogeneous input uses variable-by-variable grevlex
/// saturation; anything else goes through elimination.
inline IdealSpec saturateByVariables(const IdealSpec& ideal) {
  if (ideal.isZero())
    return ideal;
  if (!ideal.isHomogeneous())
    return saturate(ideal, productOfVariables(ideal.variables));
  IdealSpec current = ideal;
  for (std::size_t i = 0; i < ideal.numVariables(); ++i)
    current = detail::saturateHomogeneousByVariable(current, i);
  return current;
}

/// Whether the ideal survives passage to the torus, i.e. its saturation by
/// the product of all variables is proper. For an initial ideal in_w(I) this
/// says in_w(I) contains no monomial.
inline bool isMonomialFree(const IdealSpec& ideal) {
  if (ideal.isZero())
    return true;
  // Both saturation routes return a Gröbner basis, so the unit ideal shows up
  // as a constant generator.
  IdealSpec sat = saturateByVariables(ideal);
  for (const Polynomial& g : sat.generators)
    if (!g.isZero() && g.totalDegree() == 0)
      return false;
  return true;
}

/// Affine Krull dimension from a grevlex basis: the largest set of variables
/// containing the support of no leading monomial. Returns -1 for the unit ideal.
inline int krullDimension(const IdealSpec& ideal) {
  const std::size_t n = ideal.numVariables();
  if (ideal.isZero())
    return static_cast<int>(n);
  GroebnerBasis gb = reducedGroebnerBasis(ideal, TermOrder::grevlex(n));
  if (gb.isUnit())
    return -1;
  int best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool independent = true;
    for (const Monomial& lm : gb.leadingExponents) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        inside = lm[v] == 0 || ((mask >> v) & 1);
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent)
      best = std::max(best, std::popcount(mask));
  }
  return best;
}

/// Number of standard monomials of a zero-dimensional ideal.
inline Integer vectorSpaceDimension(const IdealSpec& ideal) {
  const std::size_t n = ideal.numVariables();
  if (ideal.isZero())
    throw Error(ErrorKind::NotZeroDimensional, "the zero ideal has an infinite quotient");
  GroebnerBasis gb = reducedGroebnerBasis(ideal, TermOrder::grevlex(n));
  if (gb.isUnit())
    return 0;
  std::vector<int> bound(n, -1);
  for (const Monomial& lm : gb.leadingExponents) {
    int support = 0;
    std::size_t var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (lm[v] > 0) {
        ++support;
        var = v;
      }
    if (support == 1 && (bound[var] < 0 || lm[var] < bound[var]))
      bound[var] = lm[var];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bound[v] < 0)
      throw Error(ErrorKind::NotZeroDimensional,
                  "no pure power of " + ideal.variables[v] + " among the leading monomials");
  Integer count = 0;
  Monomial m(n, 0);
  for (;;) {
    bool standard = true;
    for (const Monomial& lm : gb.leadingExponents)
      if (divides(lm, m)) {
        standard = false;
        break;
      }
    if (standard)
      ++count;
    std::size_t v = 0;
    while (v < n && ++m[v] == bound[v])
      m[v++] = 0;
    if (v == n)
      break;
  }
  return count;
}

/// Closed Gröbner cone of a basis: the weights whose initial forms keep the
/// stored leading terms (weight of the leading exponent optimal).
inline Cone groebnerCone(const GroebnerBasis& g) {
  const std::size_t n = g.variables.size();
  std::vector<IntVec> ineq;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const Monomial& lead = g.leadingExponents[i];
    for (const auto& [m, c] : g.elements[i].terms()) {
      if (m == lead)
        continue;
      IntVec a(n);
      for (std::size_t v = 0; v < n; ++v)
        a[v] = g.order.convention() == Convention::Min ? m[v] - lead[v] : lead[v] - m[v];
      ineq.push_back(makePrimitive(std::move(a)));
    }
  }
  std::sort(ineq.begin(), ineq.end());
  ineq.erase(std::unique(ineq.begin(), ineq.end()), ineq.end());
  return Cone::fromInequalities(ineq, {}, n);
}

struct GroebnerCone {
  GroebnerBasis basis;
  Cone cone;
};

/// All maximal cones of the Gröbner fan of a homogeneous ideal (min
/// convention), found by breadth-first facet crossing from the grevlex cone.
/// Each neighbour is computed by a fresh Buchberger run with weight rows
/// [interior point of the facet; outward normal].
inline std::vector<GroebnerCone> groebnerFan(const IdealSpec& ideal) {
  if (!ideal.isHomogeneous())
    throw Error(ErrorKind::RequiresHomogeneous, "the Gröbner fan needs a homogeneous ideal");
  const std::size_t n = ideal.numVariables();
  using Key = std::vector<std::pair<Monomial, std::vector<Monomial>>>;
  std::map<Key, GroebnerCone> found;
  std::deque<Key> queue;

  auto visit = [&](GroebnerBasis gb) {
    Key key = gb.canonicalKey();
    if (found.count(key))
      return;
    Cone c = groebnerCone(gb);
    found.emplace(key, GroebnerCone{std::move(gb), std::move(c)});
    queue.push_back(std::move(key));
  };

  visit(reducedGroebnerBasis(ideal, TermOrder(n, {}, Convention::Min)));
  while (!queue.empty()) {
    Key key = std::move(queue.front());
    queue.pop_front();
    const GroebnerCone current = found.at(key);
    for (const IntVec& normal : current.cone.inequalities()) {
      Cone facet = current.cone.faceAt(normal);
      RatVec p = facet.relativeInteriorPoint();
      RatVec outward = toRational(trop::negated(normal));
      TermOrder order(n, {p, outward}, Convention::Min);
      visit(reducedGroebnerBasis(current.basis.asIdeal(), order));
    }
  }
  std::vector<GroebnerCone> out;
  for (auto& [k, gc] : found)
    out.push_back(std::move(gc));
  return out;
}

} // namespace trop
