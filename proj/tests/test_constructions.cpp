#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "straightedge/constructions.hpp"
#include "support.hpp"

using namespace straightedge;
using straightedge::support::pt;
using straightedge::support::q;

namespace {

std::vector<Point> K() { return example_points(); }

Conic fit(std::initializer_list<Point> five) {
  std::vector<Point> v(five);
  return fit_conic(std::span<const Point, 5>(v.data(), 5));
}

Point circle_point(const Rational& t) { return Point(1 - t * t, 2 * t, 1 + t * t); }

const std::array<Point, 3> kStandard{Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1)};

}  // namespace

TEST(CremonaLine, StandardTriangle) {
  EXPECT_EQ(cremona_line(Point(1, 1, 1), kStandard[0], kStandard[1], kStandard[2]), Line(1, 1, -1));
  Line l = cremona_line(Point(1, 2, 3), kStandard[0], kStandard[1], kStandard[2]);
  EXPECT_EQ(equation_string(l), "6x + 3y - 2z = 0");
}

TEST(CremonaLine, MatchesTheQuadraticMap) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    Point p = support::random_point(rng);
    if (is_zero(p[0]) || is_zero(p[1])) continue;
    Line l = cremona_line(p, kStandard[0], kStandard[1], kStandard[2]);
    EXPECT_EQ(l, Line(p[1] * p[2], p[0] * p[2], -p[0] * p[1]));
  }
}

TEST(CremonaLine, PointOnASideIsRejected) {
  EXPECT_THROW(cremona_line(Point(1, 1, 0), kStandard[0], kStandard[1], kStandard[2]), PreconditionError);
  EXPECT_THROW(cremona_line(kStandard[2], kStandard[0], kStandard[1], kStandard[2]), PreconditionError);
}

TEST(FourthIntersection, ExampleP1AndP2) {
  auto k = K();
  Conic c1 = fit({k[0], k[1], k[2], k[3], k[4]});
  Conic d1 = fit({k[2], k[3], k[4], k[5], k[6]});
  Conic c2 = fit({k[5], k[6], k[7], k[8], k[9]});
  Conic d2 = fit({k[0], k[1], k[7], k[8], k[9]});
  std::array<Point, 3> s1t1{k[2], k[3], k[4]}, s2t2{k[7], k[8], k[9]};
  EXPECT_EQ(fourth_intersection(c1, d1, s1t1), pt("-10", "11"));
  EXPECT_EQ(fourth_intersection(c2, d2, s2t2), pt("2", "5"));
  EXPECT_EQ(fourth_intersection(d1, c1, s1t1), pt("-10", "11"));
  EXPECT_EQ(fourth_intersection(d2, c2, s2t2), pt("2", "5"));
}

TEST(FourthIntersection, RandomPairsShareAFourthPoint) {
  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 40) {
    auto on = support::generate_points<6>([&] { return support::random_point(rng); });
    Point a = support::random_point(rng), b = support::random_point(rng);
    try {
      Conic c1 = fit({on[0], on[1], on[2], on[3], a});
      Conic c2 = fit({on[0], on[1], on[2], on[3], b});
      if (c1 == c2 || !c1.is_irreducible() || !c2.is_irreducible()) continue;
      std::array<Point, 3> shared{on[0], on[1], on[2]};
      EXPECT_EQ(fourth_intersection(c1, c2, shared), on[3]);
      ++done;
    } catch (const GeometryError&) {
    }
  }
}

TEST(RadicalAxis, ExampleAxes) {
  auto k = K();
  Conic c1 = fit({k[0], k[1], k[2], k[3], k[4]});
  Conic d1 = fit({k[2], k[3], k[4], k[5], k[6]});
  Conic c2 = fit({k[5], k[6], k[7], k[8], k[9]});
  Conic d2 = fit({k[0], k[1], k[7], k[8], k[9]});
  EXPECT_EQ(equation_string(radical_axis(c1, d2, k[0], k[1])), "10x - 7y + 18z = 0");
  EXPECT_EQ(equation_string(radical_axis(c2, d1, k[5], k[6])), "2x - y + 10z = 0");
}

TEST(RadicalAxis, FourRationalIntersections) {
  std::mt19937_64 rng(12);
  int done = 0;
  while (done < 30) {
    Point u = support::random_point(rng), v = support::random_point(rng), w1 = support::random_point(rng),
          w2 = support::random_point(rng), a = support::random_point(rng), b = support::random_point(rng);
    try {
      Conic c1 = fit({u, v, w1, w2, a});
      Conic c2 = fit({u, v, w1, w2, b});
      if (c1 == c2 || !c1.is_irreducible() || !c2.is_irreducible()) continue;
      EXPECT_EQ(radical_axis(c1, c2, u, v), join(w1, w2));
      ++done;
    } catch (const GeometryError&) {
    }
  }
}

TEST(RadicalAxis, SeedChangesOnlyTheAuxiliaryPoints) {
  auto k = K();
  Conic c1 = fit({k[0], k[1], k[2], k[3], k[4]});
  Conic d2 = fit({k[0], k[1], k[7], k[8], k[9]});
  for (std::uint64_t seed : {1u, 2u, 99u})
    EXPECT_EQ(radical_axis(c1, d2, k[0], k[1], AuxiliaryOptions{.seed = seed}), Line(10, -7, 18));
}

TEST(RadicalAxis, ExhaustedCandidatesThrow) {
  auto k = K();
  Conic c1 = fit({k[0], k[1], k[2], k[3], k[4]});
  Conic d2 = fit({k[0], k[1], k[7], k[8], k[9]});
  EXPECT_THROW(radical_axis(c1, d2, k[0], k[1], AuxiliaryOptions{.seed = 0, .max_candidates = 1}),
               ConstructionDegenerateError);
}

TEST(AuxiliaryCandidates, DeterministicAndDistinct) {
  auto a = auxiliary_candidates({});
  auto b = auxiliary_candidates({});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 32u);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) EXPECT_FALSE(a[i] == a[j]);
  EXPECT_FALSE(auxiliary_candidates({.seed = 5}) == a);
}

TEST(PartitionScheme, StandardAndSequence) {
  auto seq = scheme_sequence(64);
  ASSERT_EQ(seq.size(), 64u);
  EXPECT_EQ(seq.front(), PartitionScheme::standard());
  for (const auto& s : seq) {
    std::vector<int> all(s.s1.begin(), s.s1.end());
    all.insert(all.end(), s.s2.begin(), s.s2.end());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < 10; ++i) EXPECT_EQ(all[i], i);
    int shared = 0;
    for (int i : s.s1) shared += std::count(s.t1.begin(), s.t1.end(), i);
    EXPECT_EQ(shared, 3);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) EXPECT_FALSE(seq[i] == seq[j]);
}

TEST(PartitionScheme, FromSetsValidates) {
  EXPECT_EQ(PartitionScheme::from_sets({4, 3, 2, 1, 0}, {6, 5, 4, 3, 2}), PartitionScheme::standard());
  EXPECT_THROW(PartitionScheme::from_sets({0, 1, 2, 3}, {2, 3, 4, 5, 6}), InputError);
  EXPECT_THROW(PartitionScheme::from_sets({0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}), InputError);
  EXPECT_THROW(PartitionScheme::from_sets({0, 1, 2, 3, 10}, {2, 3, 4, 5, 6}), InputError);
}

TEST(BuildConfiguration, ExampleMatchesEveryReferenceValue) {
  auto k = K();
  ConstructionTrace t = build_configuration(k, PartitionScheme::standard());
  EXPECT_EQ(t.p1, pt("-10", "11"));
  EXPECT_EQ(t.p2, pt("2", "5"));
  EXPECT_EQ(t.lq, Line(10, -7, 18));
  EXPECT_EQ(t.lr, Line(2, -1, 10));
  EXPECT_EQ(t.p, pt("-13", "-16"));
  EXPECT_EQ(t.q, pt("-8/5", "34/5"));
  EXPECT_EQ(t.r, pt("16/9", "46/9"));
  EXPECT_EQ(t.g, pt("1", "0"));
  EXPECT_EQ(t.x, pt("12/5", "24/5"));
  EXPECT_EQ(t.y, pt("34/11", "49/11"));
  EXPECT_EQ(t.w, pt("20/13", "8/13"));
  EXPECT_EQ(t.z, pt("15/22", "-4/11"));
  EXPECT_EQ(t.u, pt("11/4", "13/2"));
  EXPECT_EQ(t.v, pt("1/2", "1", "0"));
  EXPECT_TRUE(is_zero(t.collinearity));
  EXPECT_TRUE(incidence_violations(t).empty());
  EXPECT_GT(t.max_coordinate_bits, 0u);
}

TEST(BuildConfiguration, SevenOnOneConicIsDegenerate) {
  std::vector<Point> pts;
  for (long t : {0L, 1L, 2L, -1L, 3L, -2L, -3L}) pts.push_back(circle_point(Rational(t)));
  pts.push_back(Point(5, 1, 1));
  pts.push_back(Point(-4, 7, 1));
  pts.push_back(Point(2, -9, 1));
  EXPECT_THROW(build_configuration(pts, PartitionScheme::standard()), CoincidentConicsError);
}

TEST(BuildConfiguration, ProjectiveImagesKeepIncidences) {
  std::mt19937_64 rng(31);
  auto k = K();
  for (int i = 0; i < 5; ++i) {
    ProjectiveMap m = support::random_map(rng);
    std::vector<Point> img;
    for (const auto& p : k) img.push_back(m.apply(p));
    CheckResult r = check_ten_on_cubic(img);
    ASSERT_TRUE(r.trace);
    EXPECT_TRUE(incidence_violations(*r.trace).empty());
    EXPECT_EQ(r.verdict.kind, VerdictKind::OnCubic);
  }
}

TEST(IncidenceViolations, ReportsATamperedTrace) {
  ConstructionTrace t = support::example_trace();
  t.u = Point(1, 2, 3);
  auto bad = incidence_violations(t);
  EXPECT_FALSE(bad.empty());
}

TEST(CheckTenOnCubic, ExampleIsOnCubic) {
  CheckResult r = check_ten_on_cubic(K());
  EXPECT_EQ(r.verdict.kind, VerdictKind::OnCubic);
  ASSERT_TRUE(r.trace);
  Line l = join(r.trace->p2, r.trace->u);
  EXPECT_EQ(equation_string(l), "2x - y + z = 0");
  EXPECT_TRUE(incident(r.trace->v, l));
  EXPECT_EQ(r.schemes_tried, 1u);
}

TEST(CheckTenOnCubic, PerturbedTenthPointIsNotOnCubic) {
  auto k = K();
  k[9] = Point(6, 15, 1);
  CheckResult r = check_ten_on_cubic(k);
  EXPECT_EQ(r.verdict.kind, VerdictKind::NotOnCubic);
  EXPECT_FALSE(is_zero(cubic_det(k)));
}

TEST(CheckTenOnCubic, GeneratedPositiveInstance) {
  for (std::uint64_t seed = 100; seed < 105; ++seed) {
    auto pts = generate_instance(true, seed);
    EXPECT_EQ(check_ten_on_cubic(pts).verdict.kind, VerdictKind::OnCubic) << seed;
  }
}

TEST(CheckTenOnCubic, PermutationInvariance) {
  std::mt19937_64 rng(77);
  for (bool on : {true, false}) {
    auto pts = on ? K() : generate_instance(false, 3);
    VerdictKind expected = check_ten_on_cubic(pts).verdict.kind;
    int decided = 0;
    for (int i = 0; i < 8; ++i) {
      std::shuffle(pts.begin(), pts.end(), rng);
      VerdictKind kind = check_ten_on_cubic(pts).verdict.kind;
      if (kind == VerdictKind::Degenerate) continue;
      EXPECT_EQ(kind, expected);
      ++decided;
    }
    EXPECT_GE(decided, 4);
  }
}

TEST(CheckTenOnCubic, InputErrors) {
  auto k = K();
  k[9] = k[0];
  EXPECT_THROW(check_ten_on_cubic(k), InputError);
  auto nine = K();
  nine.pop_back();
  EXPECT_THROW(check_ten_on_cubic(nine), InputError);
}

TEST(CheckTenOnCubic, GenericShufflesNeverDegenerate) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 4; ++seed)
    for (bool on : {true, false}) {
      auto pts = generate_instance(on, seed);
      for (int i = 0; i < 3; ++i) {
        std::shuffle(pts.begin(), pts.end(), rng);
        EXPECT_EQ(check_ten_on_cubic(pts).verdict.kind, on ? VerdictKind::OnCubic : VerdictKind::NotOnCubic);
      }
    }
}

TEST(CheckTenOnCubic, FirstSchemeIsHonoured) {
  CheckOptions o;
  o.first_scheme = PartitionScheme::from_sets({0, 1, 3, 4, 6}, {3, 4, 6, 2, 9});
  CheckResult r = check_ten_on_cubic(K(), o);
  ASSERT_TRUE(r.trace);
  EXPECT_EQ(r.trace->scheme, *o.first_scheme);
  EXPECT_EQ(r.schemes_tried, 1u);
  EXPECT_EQ(r.verdict.kind, VerdictKind::OnCubic);

  o.first_scheme = PartitionScheme::from_sets({0, 2, 4, 6, 8}, {4, 6, 8, 1, 3});
  CheckResult retried = check_ten_on_cubic(K(), o);
  EXPECT_EQ(retried.verdict.kind, VerdictKind::OnCubic);
  ASSERT_FALSE(retried.log.empty());
  EXPECT_NE(retried.log.front().find("conic C1 through S1"), std::string::npos);
}

TEST(CheckTenOnCubic, CollinearQuadrupleWithoutRetriesIsDegenerate) {
  std::vector<Point> pts{Point(0, 0, 1),  Point(1, 0, 1),  Point(2, 0, 1), Point(3, 0, 1), Point(1, 4, 1),
                         Point(-2, 5, 1), Point(4, -3, 1), Point(7, 2, 1), Point(-5, -1, 1), Point(3, 8, 1)};
  CheckOptions o;
  o.max_schemes = 1;
  CheckResult r = check_ten_on_cubic(pts, o);
  EXPECT_EQ(r.verdict.kind, VerdictKind::Degenerate);
  EXPECT_NE(r.verdict.reason.find("conic C1 through S1"), std::string::npos) << r.verdict.reason;
  EXPECT_NE(r.verdict.reason.find("collinear"), std::string::npos);
  EXPECT_FALSE(r.trace);
  o.max_schemes = 64;
  CheckResult retried = check_ten_on_cubic(pts, o);
  ASSERT_NE(retried.verdict.kind, VerdictKind::Degenerate);
  EXPECT_EQ(retried.verdict.kind == VerdictKind::OnCubic, is_zero(cubic_det(pts)));
  EXPECT_GT(retried.schemes_tried, 1u);
}

TEST(Fallback, CoincidentConicsTriggerIt) {
  std::vector<Point> pts;
  for (long t : {0L, 1L, 2L, -1L, 3L, -2L, -3L, 4L}) pts.push_back(circle_point(Rational(t)));
  pts.push_back(Point(5, 1, 1));
  pts.push_back(Point(7, 3, 1));
  CheckResult r = check_ten_on_cubic(pts);
  EXPECT_EQ(r.verdict.kind, VerdictKind::OnCubic);
  EXPECT_TRUE(r.used_fallback);
  EXPECT_EQ(r.schemes_tried, 1u);
}

TEST(Fallback, SevenOnACircle) {
  std::vector<Point> on;
  for (long t : {0L, 1L, 2L, -1L, 3L, -2L, -3L}) on.push_back(circle_point(Rational(t)));
  Conic circle = fit({on[0], on[1], on[2], on[3], on[4]});

  std::vector<Point> collinear_three{Point(5, 1, 1), Point(7, 2, 1), Point(9, 3, 1)};
  std::vector<Point> pts = on;
  pts.insert(pts.end(), collinear_three.begin(), collinear_three.end());
  std::array<Point, 3> off{collinear_three[0], collinear_three[1], collinear_three[2]};
  EXPECT_EQ(fallback_seven_on_conic(pts, circle, off).kind, VerdictKind::OnCubic);
  EXPECT_TRUE(is_zero(cubic_det(pts)));
  EXPECT_EQ(check_ten_on_cubic(pts).verdict.kind, VerdictKind::OnCubic);

  std::vector<Point> generic{Point(5, 1, 1), Point(7, 2, 1), Point(-4, 9, 1)};
  pts = on;
  pts.insert(pts.end(), generic.begin(), generic.end());
  std::array<Point, 3> off2{generic[0], generic[1], generic[2]};
  EXPECT_EQ(fallback_seven_on_conic(pts, circle, off2).kind, VerdictKind::NotOnCubic);
  EXPECT_FALSE(is_zero(cubic_det(pts)));
  EXPECT_EQ(check_ten_on_cubic(pts).verdict.kind, VerdictKind::NotOnCubic);
}

TEST(Fallback, SixOnTheConicIsAHypothesisError) {
  std::vector<Point> pts;
  for (long t : {0L, 1L, 2L, -1L, 3L, -2L}) pts.push_back(circle_point(Rational(t)));
  Conic circle = fit({pts[0], pts[1], pts[2], pts[3], pts[4]});
  std::vector<Point> extra{Point(5, 1, 1), Point(7, 2, 1), Point(-4, 9, 1), Point(6, 6, 1)};
  pts.insert(pts.end(), extra.begin(), extra.end());
  std::array<Point, 3> off{extra[0], extra[1], extra[2]};
  EXPECT_THROW(fallback_seven_on_conic(pts, circle, off), PreconditionError);
}

TEST(Verdict, Tokens) {
  EXPECT_EQ(to_string(VerdictKind::OnCubic), "ON_CUBIC");
  EXPECT_EQ(to_string(VerdictKind::NotOnCubic), "NOT_ON_CUBIC");
  EXPECT_EQ(to_string(VerdictKind::Degenerate), "DEGENERATE");
}
