#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace trop;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars) {
  return parsePolynomial(s, vars);
}

IdealSpec ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const std::string& g : gens)
    ps.push_back(P(g, vars));
  return IdealSpec(vars, ps);
}

ErrorKind kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

std::set<IntVec> raySet(const Fan& f) { return {f.rays().begin(), f.rays().end()}; }

std::vector<std::int64_t> sortedMults(const WeightedFan& w) {
  std::vector<std::int64_t> m = w.multiplicities();
  std::sort(m.begin(), m.end());
  return m;
}

std::int64_t totalMultiplicity(const TropicalCycle& c) {
  std::int64_t s = 0;
  for (std::int64_t m : c.multiplicities())
    s += m;
  return s;
}

TropicalCycle lineCycle() { return tropicalHypersurface(P("x+y+1", XY)); }

/// Cycle of a full-space fan with weight 1.
TropicalCycle fullSpace(std::size_t n) {
  return makeCycle(Fan::fromCones({Cone::fullSpace(n)}, n), {1});
}

/// Edge of the Newton polytope selected by the initial form at w.
Integer edgeLength(const Polynomial& f, const RatVec& w) {
  std::vector<IntVec> pts = oracle::support(initialForm(f, w, Convention::Min));
  auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
  return oracle::latticeLength(*lo, *hi);
}

} // namespace

TEST(Hypersurface, TropicalLine) {
  TropicalCycle c = lineCycle();
  EXPECT_EQ(raySet(c.fan()), (std::set<IntVec>{intVec({-1, -1}), intVec({1, 0}), intVec({0, 1})}));
  EXPECT_TRUE(c.fan().lineality().empty());
  EXPECT_EQ(maxCones(c), (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  EXPECT_EQ(multiplicities(c), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(dim(c), 1);
}

TEST(Hypersurface, QuadricAndLinearFormShareCones) {
  TropicalCycle q = tropicalHypersurface(P("x^2+y^2+z^2", XYZ));
  TropicalCycle l = tropicalHypersurface(P("x+y+z", XYZ));
  EXPECT_EQ(q.fan(), l.fan());
  EXPECT_EQ(q.fan().cones().size(), 3u);
  EXPECT_EQ(q.fan().lineality(), (std::vector<IntVec>{intVec({1, 1, 1})}));
  EXPECT_EQ(q.multiplicities(), (std::vector<std::int64_t>{2, 2, 2}));
  EXPECT_EQ(l.multiplicities(), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(dim(q), 2);
}

TEST(Hypersurface, Errors) {
  EXPECT_EQ(kindOf([] { tropicalHypersurface(P("x^2*y", XY)); }), ErrorKind::MonomialHypersurfaceEmpty);
  EXPECT_EQ(kindOf([] { tropicalHypersurface(Polynomial(XY)); }), ErrorKind::ZeroPolynomial);
}

TEST(Hypersurface, MembershipAgreesWithAttainedTwice) {
  std::mt19937_64 rng(2024);
  for (const corpus::Poly& p : corpus::hypersurfacePolys()) {
    Polynomial f = corpus::toPolynomial(p);
    for (Convention conv : {Convention::Min, Convention::Max}) {
      TropicalCycle h = tropicalHypersurface(f, conv);
      for (int t = 0; t < 1000; ++t) {
        // Small integer points land on the fan often; general ones rarely.
        RatVec w = t % 2 ? oracle::randomRational(rng, f.numVariables(), 2, 1)
                         : oracle::randomRational(rng, f.numVariables());
        ASSERT_EQ(supportContains(h.fan(), w), oracle::attainedTwice(f, w, conv))
            << p.text << " at t=" << t;
      }
    }
  }
}

TEST(Hypersurface, MultiplicityIsEdgeLatticeLength) {
  for (const corpus::Poly& p : corpus::hypersurfacePolys()) {
    Polynomial f = corpus::toPolynomial(p);
    TropicalCycle h = tropicalHypersurface(f);
    for (std::size_t i = 0; i < h.fan().cones().size(); ++i) {
      const Cone& c = h.fan().cones()[i];
      ASSERT_EQ(edgeLength(f, c.relativeInteriorPoint()), h.multiplicities()[i]) << p.text;
    }
  }
}

TEST(Hypersurface, Balanced) {
  for (const corpus::Poly& p : corpus::hypersurfacePolys())
    EXPECT_TRUE(isBalanced(tropicalHypersurface(corpus::toPolynomial(p)))) << p.text;
}

TEST(Hypersurface, ConventionDuality) {
  for (const corpus::Poly& p : corpus::hypersurfacePolys()) {
    Polynomial f = corpus::toPolynomial(p);
    EXPECT_EQ(tropicalHypersurface(f, Convention::Max), swapConvention(tropicalHypersurface(f)));
  }
}

TEST(Prevariety, Examples) {
  EXPECT_EQ(tropicalPrevariety({P("x+y+z", XYZ), P("x^2+y^2+z^2", XYZ)}).dim(), 2);
  EXPECT_EQ(tropicalPrevariety({P("x+y+1", XY)}), lineCycle().fan());
  Fan f = tropicalPrevariety({P("x+y", XY), P("x+2*y", XY)});
  EXPECT_EQ(f.dim(), 1);
  ASSERT_EQ(f.lineality().size(), 1u);
  EXPECT_EQ(rankOf({f.lineality().front(), intVec({1, 1})}, 2), 1u);
  EXPECT_EQ(kindOf([] { tropicalPrevariety({P("x+y", XY), P("x", XY)}); }),
            ErrorKind::MonomialHypersurfaceEmpty);
}

TEST(Prevariety, ConventionDuality) {
  std::vector<Polynomial> fs{P("x+y+z+1", XYZ), P("x*y-z^2+2", XYZ)};
  Fan mx = tropicalPrevariety(fs, Convention::Max);
  Fan mn = tropicalPrevariety(fs, Convention::Min);
  std::vector<Cone> neg;
  for (const Cone& c : mn.cones())
    neg.push_back(c.negated());
  EXPECT_EQ(mx, Fan::fromCones(neg, 3));
}

TEST(Variety, TropicalLine) {
  VarietyResult r = tropicalVariety(ideal(XY, {"x+y+1"}));
  ASSERT_TRUE(std::holds_alternative<TropicalCycle>(r));
  const TropicalCycle& c = std::get<TropicalCycle>(r);
  EXPECT_EQ(c, lineCycle());
  EXPECT_EQ(dim(c), 1);
}

TEST(Variety, LineAndQuadric) {
  WeightedFan w = asWeightedFan(tropicalVariety(ideal(XYZ, {"x+y+z", "x^2+y^2+z^2"})));
  EXPECT_TRUE(w.fan().rays().empty());
  EXPECT_EQ(w.fan().lineality(), (std::vector<IntVec>{intVec({1, 1, 1})}));
  EXPECT_EQ(w.fan().maxCones(), (std::vector<std::vector<int>>{{}}));
  EXPECT_EQ(w.multiplicities(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(w.dim(), 1);
}

TEST(Variety, Hyperbola) {
  WeightedFan w = asWeightedFan(tropicalVariety(ideal(XY, {"x*y-1"})));
  ASSERT_EQ(w.fan().cones().size(), 1u);
  ASSERT_EQ(w.fan().lineality().size(), 1u);
  EXPECT_EQ(rankOf({w.fan().lineality().front(), intVec({1, -1})}, 2), 1u);
  EXPECT_EQ(w.multiplicities(), (std::vector<std::int64_t>{1}));
}

TEST(Variety, DegenerateIdeals) {
  EXPECT_EQ(kindOf([] { tropicalVariety(ideal(XY, {"1"})); }), ErrorKind::UnitIdeal);
  EXPECT_EQ(kindOf([] { tropicalVariety(ideal(XY, {"x+1", "x+2"})); }), ErrorKind::UnitIdeal);
  EXPECT_EQ(kindOf([] { tropicalVariety(IdealSpec(XY, {Polynomial(XY)})); }), ErrorKind::ZeroIdeal);
  // A monomial ideal has no points in the torus.
  WeightedFan w = asWeightedFan(tropicalVariety(ideal(XY, {"x"})));
  EXPECT_TRUE(w.fan().isEmpty());
  EXPECT_EQ(w.dim(), -1);
  WeightedFan v = asWeightedFan(tropicalVariety(ideal(XY, {"x*y+x", "x*y"})));
  EXPECT_TRUE(v.fan().isEmpty());
}

TEST(Variety, NonPrimeIsFlagged) {
  VarietyResult r = tropicalVariety(ideal(XYZ, {"(x-1)*(y-1)", "(x-1)*(z-1)"}), false);
  ASSERT_TRUE(std::holds_alternative<WeightedFan>(r));
  const WeightedFan& w = std::get<WeightedFan>(r);
  EXPECT_FALSE(w.isPure());
  EXPECT_EQ(w.dim(), 2);
  EXPECT_EQ(kindOf([&] { isBalanced(w); }), ErrorKind::NotPure);
}

TEST(Variety, NonReducedPrincipalCountsMultiplicity) {
  WeightedFan w = asWeightedFan(tropicalVariety(ideal(XY, {"(x+y+1)^2"})));
  EXPECT_EQ(w.fan(), lineCycle().fan());
  EXPECT_EQ(w.multiplicities(), (std::vector<std::int64_t>{2, 2, 2}));
}

TEST(Variety, CorpusDimensionsAndBalancing) {
  for (const corpus::Ideal& c : corpus::primeIdeals()) {
    VarietyResult r = tropicalVariety(corpus::toIdeal(c));
    ASSERT_TRUE(std::holds_alternative<TropicalCycle>(r)) << c.name;
    const TropicalCycle& t = std::get<TropicalCycle>(r);
    EXPECT_EQ(t.dim(), c.dim) << c.name;
    EXPECT_TRUE(isBalanced(t)) << c.name;
    for (std::int64_t m : t.multiplicities())
      EXPECT_GT(m, 0) << c.name;
  }
}

TEST(Variety, LinearPlaneInFourSpaceIsTheBergmanFan) {
  const corpus::Ideal& c = corpus::primeIdeals()[1];
  WeightedFan w = asWeightedFan(tropicalVariety(corpus::toIdeal(c)));
  EXPECT_EQ(w.fan().cones().size(), 10u);
  EXPECT_EQ(w.multiplicities(), std::vector<std::int64_t>(10, 1));
}

TEST(Variety, KnownMultiplicities) {
  auto multsOf = [](const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
    return sortedMults(asWeightedFan(tropicalVariety(ideal(vars, gens))));
  };
  EXPECT_EQ(multsOf(XY, {"y^2-x^3-x-1"}), (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(multsOf(XY, {"x^2+y^2-1"}), (std::vector<std::int64_t>{2, 2, 2}));
  // Binomial and monomial curves tropicalize to a single line.
  EXPECT_EQ(multsOf(XY, {"x^2-y^3"}), (std::vector<std::int64_t>{1}));
  WeightedFan tc = asWeightedFan(tropicalVariety(ideal(XYZ, {"y-x^2", "z-x^3"})));
  EXPECT_EQ(tc.fan().lineality(), (std::vector<IntVec>{intVec({1, 2, 3})}));
  EXPECT_EQ(tc.multiplicities(), (std::vector<std::int64_t>{1}));
}

TEST(Variety, ContainmentChain) {
  std::mt19937_64 rng(99);
  for (const corpus::Ideal& c : corpus::primeIdeals()) {
    IdealSpec I = corpus::toIdeal(c);
    WeightedFan v = asWeightedFan(tropicalVariety(I));
    Fan pre = tropicalPrevariety(I.generators);
    std::vector<TropicalCycle> hyps;
    for (const Polynomial& g : I.generators)
      hyps.push_back(tropicalHypersurface(g));
    // Exact per cone.
    for (const Cone& s : v.fan().cones()) {
      bool inside = false;
      for (const Cone& p : pre.cones())
        inside = inside || p.containsCone(s);
      EXPECT_TRUE(inside) << c.name;
    }
    // Sampled inside the variety's cones.
    const std::size_t n = c.vars.size();
    for (int t = 0; t < 1000; ++t) {
      const Cone& s = v.fan().cones()[static_cast<std::size_t>(t) % v.fan().cones().size()];
      RatVec w(n);
      std::vector<IntVec> gens = s.rays();
      for (const IntVec& l : s.lineality()) {
        gens.push_back(l);
        gens.push_back(negated(l));
      }
      std::uniform_int_distribution<int> coef(0, 5);
      for (const IntVec& g : gens) {
        int k = coef(rng);
        for (std::size_t i = 0; i < n; ++i)
          w[i] += g[i] * k;
      }
      ASSERT_TRUE(supportContains(v.fan(), w));
      ASSERT_TRUE(supportContains(pre, w)) << c.name;
      for (std::size_t g = 0; g < hyps.size(); ++g)
        ASSERT_TRUE(oracle::attainedTwice(I.generators[g], w, Convention::Min)) << c.name;
    }
  }
}

TEST(Variety, ConventionDuality) {
  for (const corpus::Ideal& c : corpus::primeIdeals()) {
    IdealSpec I = corpus::toIdeal(c);
    EXPECT_EQ(asWeightedFan(tropicalVariety(I, true, Convention::Max)),
              swapConvention(asWeightedFan(tropicalVariety(I))))
        << c.name;
  }
}

TEST(Variety, PrimeFlagDoesNotChangeOutput) {
  IdealSpec I = ideal(XYZ, {"y-x^2", "z-x^3"});
  EXPECT_EQ(asWeightedFan(tropicalVariety(I, true)), asWeightedFan(tropicalVariety(I, false)));
}

TEST(Principal, FastPathMatchesPipeline) {
  for (const corpus::Poly& p : corpus::principalPolys()) {
    Polynomial f = corpus::toPolynomial(p);
    TropicalCycle fast = tropicalVarietyPrincipal(f);
    EXPECT_EQ(asWeightedFan(tropicalVariety(IdealSpec(p.vars, {f}))), fast.weighted()) << p.text;
  }
}

TEST(Principal, Degenerate) {
  EXPECT_EQ(kindOf([] { tropicalVarietyPrincipal(P("3", XY)); }), ErrorKind::UnitIdeal);
  EXPECT_EQ(kindOf([] { tropicalVarietyPrincipal(Polynomial(XY)); }), ErrorKind::ZeroIdeal);
  EXPECT_TRUE(tropicalVarietyPrincipal(P("x^2*y", XY)).fan().isEmpty());
}

TEST(MultiplicityAt, Examples) {
  std::vector<std::string> xyh{"x", "y", "h"};
  Cone sigma = Cone::fromGenerators({intVec({0, 0, 1})}, {intVec({1, 1, 1})}, 3);
  EXPECT_EQ(multiplicityAt(ideal(xyh, {"x+y+h"}), sigma), 1);

  IdealSpec q = ideal(XYZ, {"x^2+y^2+z^2"});
  TropicalCycle qh = tropicalHypersurface(q.generators.front());
  for (const Cone& c : qh.fan().cones())
    EXPECT_EQ(multiplicityAt(q, c), 2);

  std::vector<std::string> hxyz{"h", "x", "y", "z"};
  Cone cell = Cone::fromGenerators({}, {intVec({1, 1, 1, 1}), intVec({0, 1, 1, 1})}, 4);
  EXPECT_EQ(multiplicityAt(ideal(hxyz, {"x+y+z", "x^2+y^2+z^2"}), cell), 2);
}

TEST(MultiplicityAt, NonMaximalConeIsRejected) {
  IdealSpec q = ideal(XYZ, {"x+y+z"});
  Cone line = Cone::fromGenerators({}, {intVec({1, 1, 1})}, 3);
  EXPECT_EQ(kindOf([&] { multiplicityAt(q, line); }), ErrorKind::NotZeroDimensional);
}

TEST(MultiplicityAt, EqualsEdgeLengthOnPrincipalIdeals) {
  for (const corpus::Poly& p : corpus::hypersurfacePolys()) {
    Polynomial f = corpus::toPolynomial(p);
    if (!f.isHomogeneous())
      continue;
    IdealSpec I(p.vars, {f});
    TropicalCycle h = tropicalHypersurface(f);
    for (const Cone& c : h.fan().cones())
      EXPECT_EQ(multiplicityAt(I, c), edgeLength(f, c.relativeInteriorPoint())) << p.text;
  }
}

TEST(TropicalBasis, Examples) {
  EXPECT_FALSE(isTropicalBasis({P("x+y+z", XYZ), P("x^2+y^2+z^2", XYZ)}));
  EXPECT_TRUE(isTropicalBasis({P("x+y+1", XY)}));
  EXPECT_TRUE(isTropicalBasis({P("x+y", XYZ), P("y+z", XYZ)}));
  // Circuits of a linear ideal form a tropical basis; two generic
  // generators do not.
  EXPECT_FALSE(isTropicalBasis({P("x+y+z+1", XYZ), P("x-y+2*z", XYZ)}));
}

TEST(TropicalBasis, AgreesWithSampling) {
  std::vector<std::vector<Polynomial>> cases{
      {P("x+y+z", XYZ), P("x^2+y^2+z^2", XYZ)},
      {P("y-x^2", XYZ), P("z-x^3", XYZ)},
      {P("x+y", XYZ), P("y+z", XYZ)},
  };
  std::mt19937_64 rng(17);
  for (const auto& fs : cases) {
    WeightedFan v = asWeightedFan(tropicalVariety(IdealSpec(XYZ, fs)));
    Fan pre = tropicalPrevariety(fs);
    bool differ = false;
    for (const Cone& c : pre.cones()) {
      // Points inside each prevariety cone, including its relative interior.
      std::vector<IntVec> gens = c.rays();
      for (const IntVec& l : c.lineality()) {
        gens.push_back(l);
        gens.push_back(negated(l));
      }
      std::uniform_int_distribution<int> coef(1, 7);
      for (int t = 0; t < 50 && !differ; ++t) {
        RatVec w(3);
        for (const IntVec& g : gens) {
          int k = coef(rng);
          for (std::size_t i = 0; i < 3; ++i)
            w[i] += g[i] * k;
        }
        differ = !supportContains(v.fan(), w);
      }
    }
    EXPECT_EQ(isTropicalBasis(fs), !differ);
  }
}

TEST(StableIntersection, LineAndConic) {
  TropicalCycle a = tropicalHypersurface(P("2*x-11*y+13*z", XYZ));
  TropicalCycle b = tropicalHypersurface(P("3*x^2-7*y^2+5*z^2", XYZ));
  TropicalCycle s = stableIntersection(a, b);
  EXPECT_TRUE(s.fan().rays().empty());
  EXPECT_EQ(s.fan().lineality(), (std::vector<IntVec>{intVec({1, 1, 1})}));
  EXPECT_EQ(maxCones(s), (std::vector<std::vector<int>>{{}}));
  EXPECT_EQ(multiplicities(s), (std::vector<std::int64_t>{2}));
}

TEST(StableIntersection, LineWithItself) {
  TropicalCycle s = stableIntersection(lineCycle(), lineCycle());
  ASSERT_EQ(s.fan().cones().size(), 1u);
  EXPECT_EQ(s.fan().cones().front(), Cone::origin(2));
  EXPECT_EQ(multiplicities(s), (std::vector<std::int64_t>{1}));
}

TEST(StableIntersection, FullSpaceIsIdentity) {
  EXPECT_EQ(stableIntersection(fullSpace(2), lineCycle()), lineCycle());
  TropicalCycle q = tropicalHypersurface(P("x^2+y^2+z^2", XYZ));
  EXPECT_EQ(stableIntersection(q, fullSpace(3)), q);
  TropicalCycle plane = tropicalHypersurface(P("x+y+z+1", XYZ));
  EXPECT_EQ(stableIntersection(fullSpace(3), plane), plane);
}

TEST(StableIntersection, IndependentOfDisplacement) {
  std::vector<std::pair<TropicalCycle, TropicalCycle>> cases{
      {lineCycle(), lineCycle()},
      {tropicalHypersurface(P("x+y+z", XYZ)), tropicalHypersurface(P("x^2+y^2+z^2", XYZ))},
      {tropicalHypersurface(P("x+y+z+1", XYZ)), tropicalHypersurface(P("x*y+z^2+x+1", XYZ))},
      {tropicalHypersurface(P("x^2+x*y+y^2+x+1", XY)), tropicalHypersurface(P("y^2-x^3-x-1", XY))},
  };
  for (const auto& [a, b] : cases) {
    TropicalCycle ref = stableIntersection(a, b, 0);
    for (std::uint64_t seed : {1u, 7u, 12345u, 99u})
      EXPECT_EQ(stableIntersection(a, b, seed), ref);
    EXPECT_EQ(stableIntersection(b, a, 3), ref);
    EXPECT_TRUE(isBalanced(ref));
  }
}

TEST(StableIntersection, BezoutForHomogeneousCurves) {
  std::vector<std::string> byDegree{"2*x-11*y+13*z", "3*x^2-7*y^2+5*z^2", "x^3+2*y^3-5*z^3",
                                    "x^2+3*x*y-y^2+7*z^2"};
  std::vector<int> degree{1, 2, 3, 2};
  for (std::size_t i = 0; i < byDegree.size(); ++i)
    for (std::size_t j = 0; j < byDegree.size(); ++j) {
      TropicalCycle s = stableIntersection(tropicalHypersurface(P(byDegree[i], XYZ)),
                                           tropicalHypersurface(P(byDegree[j], XYZ)), i * 10 + j);
      EXPECT_EQ(totalMultiplicity(s), degree[i] * degree[j]) << byDegree[i] << " * " << byDegree[j];
      EXPECT_EQ(s.dim(), 1);
    }
}

TEST(StableIntersection, PlaneCurvesGiveMixedVolume) {
  std::vector<std::string> polys{"x+y+1", "x^2+x*y+y^2+x+1", "y^2-x^3-x-1", "x*y-1", "x^3*y+x*y^3+7",
                                 "x^2+y+3"};
  for (const std::string& f : polys)
    for (const std::string& g : polys) {
      Polynomial pf = P(f, XY), pg = P(g, XY);
      TropicalCycle s = stableIntersection(tropicalHypersurface(pf), tropicalHypersurface(pg));
      Rational mv = oracle::planarMixedVolume(oracle::support(pf), oracle::support(pg));
      EXPECT_EQ(Rational(totalMultiplicity(s)), mv) << f << " * " << g;
      if (mv != 0) {
        EXPECT_EQ(s.fan().cones().size(), 1u);
        EXPECT_EQ(s.dim(), 0);
      }
    }
}

TEST(StableIntersection, Errors) {
  TropicalCycle q = tropicalHypersurface(P("x+y+z", XYZ));
  EXPECT_EQ(kindOf([&] { stableIntersection(lineCycle(), q); }), ErrorKind::DimMismatch);
  EXPECT_EQ(kindOf([&] { stableIntersection(lineCycle(), swapConvention(lineCycle())); }),
            ErrorKind::ConventionMismatch);
  TropicalCycle pt = stableIntersection(lineCycle(), lineCycle());
  EXPECT_TRUE(stableIntersection(pt, lineCycle()).fan().isEmpty());
  EXPECT_TRUE(stableIntersection(TropicalCycle::empty(2, Convention::Min), lineCycle()).fan().isEmpty());
}
