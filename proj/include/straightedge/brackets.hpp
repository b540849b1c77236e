#pragma once

// Bracket algebra: binomial relations between bracket monomials, the cancellation
// certificate for the ten-point construction, and its evaluation over quadratic towers.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "straightedge/constructions.hpp"

namespace straightedge {

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 3-point determinant symbol [abc] over point labels, stored with sorted labels.
struct BracketSymbol {
  std::array<std::string, 3> labels;

  friend auto operator<=>(const BracketSymbol&, const BracketSymbol&) = default;
};

/// Sorts the labels; returns the permutation sign (0 for a repeated label).
int canonicalize(std::array<std::string, 3>& labels);

/// "[A,B,C]".
std::string to_string(const BracketSymbol& s);

/// sign · Π symbols, with the symbols kept as a sorted multiset.
struct BracketMonomial {
  int sign = 1;
  std::vector<BracketSymbol> symbols;

  /// Builds from raw (unsorted) label triples; throws BracketError on a repeated label.
  static BracketMonomial from_triples(const std::vector<std::array<std::string, 3>>& triples);

  friend BracketMonomial operator*(const BracketMonomial& a, const BracketMonomial& b);
  friend bool operator==(const BracketMonomial&, const BracketMonomial&) = default;
};

std::string to_string(const BracketMonomial& m);

enum class RelationKind { H, C, Derived };

/// lhs = rhs, normalised so lhs.sign = +1.
struct BinomialRelation {
  RelationKind kind = RelationKind::Derived;
  std::vector<std::string> args;
  BracketMonomial lhs;
  BracketMonomial rhs;

  static BinomialRelation make(RelationKind kind, std::vector<std::string> args, BracketMonomial lhs,
                               BracketMonomial rhs);

  /// Same oriented equation (kind and arguments are ignored).
  bool same_equation(const BinomialRelation& o) const { return lhs == o.lhs && rhs == o.rhs; }
  /// Sides exchanged, renormalised.
  BinomialRelation swapped() const;
  /// Same equation in either orientation.
  bool same_relation(const BinomialRelation& o) const { return same_equation(o) || same_equation(o.swapped()); }
};

/// "h(D,A,B,C,E)" / "c(A,B,C,D,E,F)"; derived relations render as "LHS = RHS".
std::string to_string(const BinomialRelation& r);
/// "LHS = RHS" in canonical symbols.
std::string equation_string(const BinomialRelation& r);

/// h(D,A,B,C,E): [ACD][BDE] = [BCD][ADE], valid when A, B, D are collinear.
BinomialRelation h_relation(const std::string& d, const std::string& a, const std::string& b, const std::string& c,
                            const std::string& e);

/// c(A,B,C,D,E,F): [ACE][ABF][CDF][BDE] = [ACF][ABE][CDE][BDF], valid when the six lie on a conic.
BinomialRelation c_relation(const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                            const std::string& e, const std::string& f);

/// Parses "-[A,B,C][D,E,F]"; "1" and "-1" are the empty monomials.
BracketMonomial parse_monomial(const std::string& text);

/// Parses "LHS = RHS" into a derived relation.
BinomialRelation parse_equation(const std::string& text);

/// Parses "h(...)" or "c(...)" with comma-separated labels, optionally followed by
/// ": LHS = RHS" fixing the orientation. Throws BracketError if the equation is not that relation.
BinomialRelation parse_relation(const std::string& text);

/// The 19 collinearity relations and 6 conic relations, each in a fixed orientation, whose
/// product cancels to h(P2,V,U,P,Y).
std::vector<BinomialRelation> certificate_relations();

struct Reduction {
  BinomialRelation relation;
  /// Symbols removed from both sides, as a multiset.
  std::vector<BracketSymbol> cancelled;
};

/// Product of all left sides against the product of all right sides, common symbols cancelled.
Reduction symbolic_reduce(const std::vector<BinomialRelation>& relations);

/// Coordinates for point labels over the depth-2 tower; one fixed representative per label.
class CertificateConfiguration {
 public:
  void assign(const std::string& label, ExtPoint p) { points_.insert_or_assign(label, std::move(p)); }
  const ExtPoint& at(const std::string& label) const;
  bool has(const std::string& label) const { return points_.count(label) != 0; }
  const std::map<std::string, ExtPoint>& points() const { return points_; }

  Ext2 evaluate(const BracketSymbol& s) const;
  Ext2 evaluate(const BracketMonomial& m) const;

 private:
  std::map<std::string, ExtPoint> points_;
};

/// The 14 labels P, P1, P2, Q1, Q2, R1, R2, G, W, X, Y, Z, U, V from a trace, with
/// Q1, Q2 = L_Q ∩ C1 and R1, R2 = L_R ∩ C2 adjoined to `tower`.
CertificateConfiguration certificate_configuration(const ConstructionTrace& trace, QuadraticTower& tower);

/// Exact equality of both evaluated sides. Throws BracketError on an unassigned label.
bool numeric_check(const BinomialRelation& relation, const CertificateConfiguration& cfg);

struct CertificateReport {
  std::vector<std::pair<BinomialRelation, bool>> checks;
  Reduction reduction;
  bool reduces_to_conclusion = false;
  /// Cancelled symbols that evaluate to zero on the configuration.
  std::vector<BracketSymbol> vanishing_cancelled;
  bool conclusion_holds = false;
  std::vector<Rational> radicands;

  std::size_t passed() const;
  /// Every relation holds, no cancelled symbol vanishes, and the reduction is the conclusion.
  bool conclusive() const;
};

/// h(P2,V,U,P,Y): the collinearity of P2, U, V in bracket form.
BinomialRelation certificate_conclusion();

CertificateReport verify_certificate(const ConstructionTrace& trace,
                                     const std::vector<BinomialRelation>& relations = certificate_relations());

}  // namespace straightedge
