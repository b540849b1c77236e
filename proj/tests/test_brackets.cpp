#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "straightedge/brackets.hpp"
#include "support.hpp"

using namespace straightedge;

TEST(BracketSymbol, CanonicalizeParity) {
  std::array<std::string, 3> l{"C", "A", "B"};
  EXPECT_EQ(canonicalize(l), 1);
  EXPECT_EQ(l, (std::array<std::string, 3>{"A", "B", "C"}));
  std::array<std::string, 3> m{"B", "A", "C"};
  EXPECT_EQ(canonicalize(m), -1);
  std::array<std::string, 3> r{"A", "B", "A"};
  EXPECT_EQ(canonicalize(r), 0);
}

TEST(HRelation, FirstCertificateRow) {
  auto h = h_relation("R1", "V", "R2", "P2", "Y");
  EXPECT_TRUE(h.same_equation(parse_equation("[V,R1,P2][Y,R2,R1] = -[V,Y,R1][R2,R1,P2]")));
  EXPECT_EQ(to_string(h), "h(R1,V,R2,P2,Y)");
}

TEST(HRelation, Conclusion) {
  auto h = h_relation("P2", "V", "U", "P", "Y");
  EXPECT_TRUE(h.same_equation(parse_equation("[V,P2,P][U,Y,P2] = [V,Y,P2][U,P2,P]")));
  EXPECT_EQ(equation_string(h), "[P,P2,V][P2,U,Y] = [P,P2,U][P2,V,Y]");
}

TEST(HRelation, RepeatedLabelsThrow) {
  EXPECT_THROW(h_relation("A", "A", "B", "C", "E"), BracketError);
  EXPECT_THROW(c_relation("A", "B", "C", "D", "E", "A"), BracketError);
}

TEST(CRelation, ResidualConicRelations) {
  auto c = c_relation("G", "Z", "Y", "R2", "R1", "P1");
  EXPECT_TRUE(c.same_equation(
      parse_equation("[G,Y,R1][G,Z,P1][Y,R2,P1][Z,R2,R1] = [G,Y,P1][G,Z,R1][Y,R2,R1][Z,R2,P1]")));
  auto r = c_relation("R1", "Q1", "P2", "P1", "R2", "Q2");
  EXPECT_TRUE(r.same_equation(
      parse_equation("[R2,R1,P2][R1,Q2,Q1][Q2,P2,P1][R2,Q1,P1] = [R1,Q2,P2][R2,R1,Q1][R2,P2,P1][Q2,Q1,P1]")));
}

TEST(CertificateRelations, CountsAndLabels) {
  auto rels = certificate_relations();
  ASSERT_EQ(rels.size(), 25u);
  EXPECT_EQ(std::count_if(rels.begin(), rels.end(), [](const auto& r) { return r.kind == RelationKind::H; }), 19);
  EXPECT_EQ(std::count_if(rels.begin(), rels.end(), [](const auto& r) { return r.kind == RelationKind::C; }), 6);
  const std::set<std::string> allowed{"P", "P1", "P2", "Q1", "Q2", "R1", "R2", "G", "W", "X", "Y", "Z", "U", "V"};
  for (const auto& r : rels) {
    for (const auto& a : r.args) EXPECT_TRUE(allowed.count(a)) << a;
    std::size_t n = r.kind == RelationKind::H ? 2 : 4;
    EXPECT_EQ(r.lhs.symbols.size(), n);
    EXPECT_EQ(r.rhs.symbols.size(), n);
  }
  EXPECT_EQ(to_string(rels.front()), "h(R1,V,R2,P2,Y)");
  EXPECT_EQ(to_string(rels[19]), "c(G,Z,Y,R2,R1,P1)");
}

TEST(CertificateRelations, EachRowIsItsNamedRelation) {
  for (const auto& r : certificate_relations()) {
    BinomialRelation named = parse_relation(to_string(r));
    EXPECT_TRUE(named.same_relation(r)) << to_string(r);
  }
}

TEST(CertificateRelations, StoredOrientation) {
  auto rels = certificate_relations();
  // "h(R2,R1,P,Q1,Z): [R2,R1,Q1][Z,R2,P] = −[Z,R2,R1][R2,Q1,P]"
  EXPECT_TRUE(rels[1].same_equation(parse_equation("[R2,R1,Q1][Z,R2,P] = -[Z,R2,R1][R2,Q1,P]")));
  EXPECT_TRUE(h_relation("R2", "R1", "P", "Q1", "Z").same_equation(rels[1]));
  // A row stored with its sides exchanged relative to the definition.
  EXPECT_TRUE(h_relation("Q1", "Q2", "P", "R2", "G").swapped().same_equation(rels[15]));
}

TEST(ParseRelation, MismatchedEquationIsRejected) {
  EXPECT_THROW(parse_relation("h(R1,V,R2,P2,Y): [V,R1,P2][Y,R2,R1] = [V,Y,R1][R2,R1,P2]"), BracketError);
  EXPECT_THROW(parse_relation("h(A,B,C)"), BracketError);
  EXPECT_THROW(parse_relation("k(A,B,C,D,E)"), BracketError);
  EXPECT_THROW(parse_monomial("[A,B]"), BracketError);
}

TEST(SymbolicReduce, CertificateGivesTheConclusion) {
  Reduction r = symbolic_reduce(certificate_relations());
  EXPECT_TRUE(r.relation.same_equation(certificate_conclusion()));
  EXPECT_EQ(equation_string(r.relation), "[P,P2,V][P2,U,Y] = [P,P2,U][P2,V,Y]");
  EXPECT_FALSE(r.cancelled.empty());
}

TEST(SymbolicReduce, OrderIndependent) {
  auto rels = certificate_relations();
  std::mt19937_64 rng(1);
  Reduction base = symbolic_reduce(rels);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(rels.begin(), rels.end(), rng);
    Reduction r = symbolic_reduce(rels);
    EXPECT_TRUE(r.relation.same_equation(base.relation));
    EXPECT_EQ(r.cancelled, base.cancelled);
  }
}

TEST(SymbolicReduce, TrivialCases) {
  EXPECT_EQ(equation_string(symbolic_reduce({}).relation), "1 = 1");
  auto h = h_relation("R1", "V", "R2", "P2", "Y");
  EXPECT_EQ(equation_string(symbolic_reduce({h, h.swapped()}).relation), "1 = 1");
}

TEST(NumericCheck, ExampleConfiguration) {
  ConstructionTrace t = support::example_trace();
  QuadraticTower tower;
  CertificateConfiguration cfg = certificate_configuration(t, tower);
  EXPECT_EQ(cfg.points().size(), 14u);
  EXPECT_GE(tower.depth(), 1u);
  for (const auto& r : certificate_relations()) EXPECT_TRUE(numeric_check(r, cfg)) << to_string(r);
  EXPECT_TRUE(numeric_check(certificate_conclusion(), cfg));
  // The hypotheses hold: Q1, Q2 on L_Q and C1; R1, R2 on L_R and C2.
  for (const char* l : {"Q1", "Q2"}) {
    EXPECT_TRUE(is_zero(t.c1.evaluate(cfg.at(l))));
    EXPECT_TRUE(incident(cfg.at(l), lift<Ext2>(t.lq)));
  }
  for (const char* l : {"R1", "R2"}) {
    EXPECT_TRUE(is_zero(t.c2.evaluate(cfg.at(l))));
    EXPECT_TRUE(incident(cfg.at(l), lift<Ext2>(t.lr)));
  }
}

TEST(NumericCheck, RepresentativeScalingCancels) {
  ConstructionTrace t = support::example_trace();
  QuadraticTower tower;
  CertificateConfiguration cfg = certificate_configuration(t, tower);
  // Rescale every representative; each relation has equal multidegree per label on both sides.
  Ext2 k(7);
  for (const auto& [label, p] : std::map<std::string, ExtPoint>(cfg.points())) {
    k = k + Ext2(1);
    cfg.assign(label, ExtPoint(p[0] * k, p[1] * k, p[2] * k));
  }
  for (const auto& r : certificate_relations()) EXPECT_TRUE(numeric_check(r, cfg)) << to_string(r);
}

TEST(NumericCheck, UnassignedLabelThrows) {
  CertificateConfiguration cfg;
  EXPECT_THROW(numeric_check(h_relation("A", "B", "C", "D", "E"), cfg), BracketError);
}

TEST(VerifyCertificate, ExampleIsConclusive) {
  CertificateReport rep = verify_certificate(support::example_trace());
  EXPECT_EQ(rep.passed(), 25u);
  EXPECT_TRUE(rep.reduces_to_conclusion);
  EXPECT_TRUE(rep.vanishing_cancelled.empty());
  EXPECT_TRUE(rep.conclusion_holds);
  EXPECT_TRUE(rep.conclusive());
}

TEST(VerifyCertificate, NegativeInstanceFlagsResidualConic) {
  auto k = example_points();
  k[9] = Point(6, 15, 1);
  CheckResult r = check_ten_on_cubic(k);
  ASSERT_TRUE(r.trace);
  CertificateReport rep = verify_certificate(*r.trace);
  EXPECT_FALSE(rep.conclusive());
  EXPECT_FALSE(rep.conclusion_holds);
  bool residual_failed = false;
  for (const auto& [rel, ok] : rep.checks) {
    if (!ok) EXPECT_EQ(rel.kind, RelationKind::C) << to_string(rel);
    if (!ok && to_string(rel).starts_with("c(R1,")) residual_failed = true;
  }
  EXPECT_TRUE(residual_failed);
}
