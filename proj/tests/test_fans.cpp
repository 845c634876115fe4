#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace trop;

namespace {

Fan lineFan() {
  return Fan::fromCones({Cone::fromGenerators({intVec({-1, -1})}, {}, 2),
                         Cone::fromGenerators({intVec({1, 0})}, {}, 2),
                         Cone::fromGenerators({intVec({0, 1})}, {}, 2)},
                        2);
}

Fan quadrantFan() {
  std::vector<Cone> cones;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      cones.push_back(Cone::fromGenerators({intVec({sx, 0}), intVec({0, sy})}, {}, 2));
  return Fan::fromCones(cones, 2);
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

std::vector<Cone> randomCones(std::mt19937_64& rng, std::size_t n, int count) {
  std::uniform_int_distribution<int> d(-3, 3), k(1, 4);
  std::vector<Cone> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<IntVec> rays;
    for (int i = 0, m = k(rng); i < m; ++i) {
      IntVec r(n);
      for (Integer& x : r)
        x = d(rng);
      if (!isZero(std::span<const Integer>(r)))
        rays.push_back(r);
    }
    out.push_back(Cone::fromGenerators(rays, {}, n));
  }
  return out;
}

} // namespace

TEST(DualDescription, QuadrantInequalities) {
  Cone c = dualDescription({intVec({1, 0}), intVec({0, 1})}, {}, 2);
  EXPECT_EQ(c.inequalities(), (std::vector<IntVec>{intVec({0, 1}), intVec({1, 0})}));
  EXPECT_TRUE(c.equations().empty());
  EXPECT_EQ(c.dim(), 2u);
}

TEST(DualDescription, HalfPlane) {
  Cone c = dualDescriptionH({intVec({1, 0})}, {}, 2);
  EXPECT_EQ(c.rays(), (std::vector<IntVec>{intVec({1, 0})}));
  ASSERT_EQ(c.lineality().size(), 1u);
  EXPECT_EQ(rankOf({c.lineality().front(), intVec({0, 1})}, 2), 1u);
}

TEST(DualDescription, PositiveHullSpanningPlaneIsEverything) {
  Cone c = dualDescription({intVec({-1, -1}), intVec({1, 0}), intVec({0, 1})}, {}, 2);
  EXPECT_TRUE(c.inequalities().empty());
  EXPECT_EQ(c, Cone::fullSpace(2));
  for (const IntVec& v : {intVec({1, 0}), intVec({-1, 0}), intVec({0, 1}), intVec({0, -1})})
    EXPECT_TRUE(coneFeasible(c.rayMatrix(), c.linealityMatrix(), toRational(v)));
}

TEST(DualDescription, EmptyInputIsOrigin) {
  Cone c = dualDescription({}, {}, 3);
  EXPECT_EQ(c.dim(), 0u);
  EXPECT_EQ(c, Cone::origin(3));
}

TEST(DualDescription, RoundTripOnRandomCones) {
  std::mt19937_64 rng(77);
  for (const Cone& c : randomCones(rng, 3, 150)) {
    Cone back = Cone::fromInequalities(c.inequalities(), c.equations(), 3);
    ASSERT_EQ(back, c);
    ASSERT_EQ(back.rays(), c.rays());
    // Each generator satisfies every inequality and equation.
    for (const IntVec& r : c.rays()) {
      for (const IntVec& a : c.inequalities())
        ASSERT_GE(dot(a, r), 0);
      for (const IntVec& e : c.equations())
        ASSERT_EQ(dot(e, r), 0);
    }
    ASSERT_EQ(c.dim(), rankOf(c.spanningVectors(), 3));
  }
}

TEST(Faces, Examples) {
  Cone quadrant = Cone::fromGenerators({intVec({1, 0}), intVec({0, 1})}, {}, 2);
  std::vector<Cone> f = faces(quadrant, 1);
  ASSERT_EQ(f.size(), 2u);
  std::set<Cone> expected{Cone::fromGenerators({intVec({1, 0})}, {}, 2),
                          Cone::fromGenerators({intVec({0, 1})}, {}, 2)};
  EXPECT_EQ(std::set<Cone>(f.begin(), f.end()), expected);

  EXPECT_TRUE(faces(Cone::fullSpace(2), 1).empty());

  Cone tri = Cone::fromGenerators({intVec({1, 0, 1}), intVec({0, 1, 1}), intVec({0, 0, 1})}, {}, 3);
  std::vector<Cone> tf = faces(tri, 1);
  EXPECT_EQ(tf.size(), 3u);
  for (const Cone& c : tf)
    EXPECT_EQ(c.dim(), 2u);
  EXPECT_EQ(faces(tri, 2).size(), 3u);
  EXPECT_EQ(faces(tri, 3).size(), 1u);
  EXPECT_EQ(kindOf([&] { faces(tri, 4); }), ErrorKind::BadCodim);
}

TEST(Faces, FacetsAreContainedAndOneDimensionLower) {
  std::mt19937_64 rng(5);
  for (const Cone& c : randomCones(rng, 3, 100))
    for (const Cone& f : c.facets()) {
      ASSERT_EQ(f.dim() + 1, c.dim());
      ASSERT_TRUE(c.containsCone(f));
      ASSERT_TRUE(isFaceOf(f, c));
    }
}

TEST(RelativeInterior, Examples) {
  EXPECT_EQ(Cone::fromGenerators({intVec({1, 0}), intVec({0, 1})}, {}, 2).relativeInteriorPoint(),
            ratVec({1, 1}));
  EXPECT_EQ(Cone::fromGenerators({}, {intVec({1, 1})}, 2).relativeInteriorPoint(), ratVec({0, 0}));
  EXPECT_EQ(Cone::fromGenerators({intVec({-1, -1})}, {}, 2).relativeInteriorPoint(),
            ratVec({-1, -1}));
}

TEST(RelativeInterior, StrictOnNonTightInequalities) {
  std::mt19937_64 rng(8);
  for (const Cone& c : randomCones(rng, 3, 100)) {
    RatVec p = c.relativeInteriorPoint();
    for (const IntVec& a : c.inequalities())
      ASSERT_GT(dot(a, p), 0);
    ASSERT_TRUE(c.containsInRelativeInterior(p));
  }
}

TEST(Fan, LineFanAccessors) {
  Fan f = lineFan();
  EXPECT_EQ(f.rays(), (std::vector<IntVec>{intVec({-1, -1}), intVec({0, 1}), intVec({1, 0})}));
  EXPECT_EQ(f.maxCones(), (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  EXPECT_TRUE(f.lineality().empty());
  EXPECT_EQ(f.dim(), 1);
  EXPECT_TRUE(f.isPure());
  EXPECT_TRUE(f.isValidFan());
}

TEST(Fan, EmptyIsNotOrigin) {
  Fan e = Fan::empty(2);
  Fan o = Fan::fromCones({Cone::origin(2)}, 2);
  EXPECT_TRUE(e.isEmpty());
  EXPECT_FALSE(o.isEmpty());
  EXPECT_EQ(e.dim(), -1);
  EXPECT_EQ(o.dim(), 0);
  EXPECT_FALSE(e == o);
}

TEST(Fan, NonMaximalConesDropped) {
  Fan f = Fan::fromCones({Cone::fromGenerators({intVec({1, 0}), intVec({0, 1})}, {}, 2),
                          Cone::fromGenerators({intVec({1, 0})}, {}, 2)},
                         2);
  EXPECT_EQ(f.cones().size(), 1u);
}

TEST(CommonRefinement, Examples) {
  EXPECT_EQ(commonRefinement(lineFan(), lineFan()), lineFan());

  Fan xAxis = Fan::fromCones({Cone::fromGenerators({intVec({1, 0})}, {}, 2),
                              Cone::fromGenerators({intVec({-1, 0})}, {}, 2)},
                             2);
  Fan yAxis = Fan::fromCones({Cone::fromGenerators({intVec({0, 1})}, {}, 2),
                              Cone::fromGenerators({intVec({0, -1})}, {}, 2)},
                             2);
  Fan meet = commonRefinement(xAxis, yAxis);
  ASSERT_EQ(meet.cones().size(), 1u);
  EXPECT_EQ(meet.cones().front(), Cone::origin(2));

  Fan halves = Fan::fromCones({Cone::fromInequalities({intVec({1, -1})}, {}, 2),
                               Cone::fromInequalities({intVec({-1, 1})}, {}, 2)},
                              2);
  Fan refined = commonRefinement(quadrantFan(), halves);
  EXPECT_EQ(refined.cones().size(), 6u);
  EXPECT_TRUE(refined.isValidFan());

  EXPECT_EQ(kindOf([] { commonRefinement(Fan::empty(2), Fan::empty(3)); }), ErrorKind::DimMismatch);
}

TEST(CommonRefinement, SupportIsIntersection) {
  Fan a = quadrantFan();
  Fan b = lineFan();
  Fan halves = Fan::fromCones({Cone::fromGenerators({intVec({2, 1}), intVec({1, -3})}, {}, 2),
                               Cone::fromGenerators({intVec({1, 1}), intVec({-1, 2})}, {}, 2)},
                              2);
  std::mt19937_64 rng(101);
  for (const auto& [f1, f2] : {std::pair{a, b}, std::pair{b, halves}, std::pair{a, halves}}) {
    Fan r = commonRefinement(f1, f2);
    for (int t = 0; t < 1000; ++t) {
      RatVec w = oracle::randomRational(rng, 2, 4, 2);
      if (t % 3 == 0)
        w[1] = w[0] * (t % 2 ? 1 : 2);
      ASSERT_EQ(supportContains(r, w), supportContains(f1, w) && supportContains(f2, w));
    }
  }
}

TEST(SupportContains, Examples) {
  EXPECT_TRUE(supportContains(lineFan(), ratVec({-3, -3})));
  EXPECT_FALSE(supportContains(lineFan(), ratVec({1, 2})));
  EXPECT_TRUE(supportContains(lineFan(), ratVec({0, 0})));
  EXPECT_TRUE(supportContains(quadrantFan(), ratVec({0, 0})));
  EXPECT_EQ(kindOf([] { supportContains(lineFan(), ratVec({1, 2, 3})); }), ErrorKind::DimMismatch);
}

TEST(SupportContains, AgreesWithPlanarOracle) {
  std::mt19937_64 rng(202);
  for (const Fan& f : {lineFan(), quadrantFan(),
                       Fan::fromCones({Cone::fromGenerators({intVec({2, 1}), intVec({1, -3})}, {}, 2)}, 2)}) {
    for (int t = 0; t < 1000; ++t) {
      RatVec w = oracle::randomRational(rng, 2, 5, 3);
      bool expected = false;
      for (const Cone& c : f.cones())
        expected = expected || oracle::planarConeMember(c.rays(), c.lineality(), w);
      ASSERT_EQ(supportContains(f, w), expected);
    }
  }
}
