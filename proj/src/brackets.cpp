#include "straightedge/brackets.hpp"

#include <algorithm>
#include <cctype>

namespace straightedge {

int canonicalize(std::array<std::string, 3>& l) {
  int sign = 1;
  // Three-element bubble sort; each swap flips the sign.
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i + 1 < 3 - pass; ++i)
      if (l[i + 1] < l[i]) {
        std::swap(l[i], l[i + 1]);
        sign = -sign;
      }
  if (l[0] == l[1] || l[1] == l[2]) return 0;
  return sign;
}

std::string to_string(const BracketSymbol& s) {
  return "[" + s.labels[0] + "," + s.labels[1] + "," + s.labels[2] + "]";
}

BracketMonomial BracketMonomial::from_triples(const std::vector<std::array<std::string, 3>>& triples) {
  BracketMonomial m;
  for (auto t : triples) {
    int s = canonicalize(t);
    if (s == 0) throw BracketError("bracket [" + t[0] + "," + t[1] + "," + t[2] + "] has a repeated label");
    m.sign *= s;
    m.symbols.push_back({t});
  }
  std::sort(m.symbols.begin(), m.symbols.end());
  return m;
}

BracketMonomial operator*(const BracketMonomial& a, const BracketMonomial& b) {
  BracketMonomial m;
  m.sign = a.sign * b.sign;
  std::merge(a.symbols.begin(), a.symbols.end(), b.symbols.begin(), b.symbols.end(), std::back_inserter(m.symbols));
  return m;
}

std::string to_string(const BracketMonomial& m) {
  std::string s = m.sign < 0 ? "-" : "";
  if (m.symbols.empty()) return s + "1";
  for (const auto& b : m.symbols) s += to_string(b);
  return s;
}

BinomialRelation BinomialRelation::make(RelationKind kind, std::vector<std::string> args, BracketMonomial lhs,
                                        BracketMonomial rhs) {
  BinomialRelation r{kind, std::move(args), std::move(lhs), std::move(rhs)};
  if (r.lhs.sign < 0) {
    r.lhs.sign = 1;
    r.rhs.sign = -r.rhs.sign;
  }
  return r;
}

std::string equation_string(const BinomialRelation& r) { return to_string(r.lhs) + " = " + to_string(r.rhs); }

std::string to_string(const BinomialRelation& r) {
  if (r.kind == RelationKind::Derived) return equation_string(r);
  std::string s = r.kind == RelationKind::H ? "h(" : "c(";
  for (std::size_t i = 0; i < r.args.size(); ++i) s += (i ? "," : "") + r.args[i];
  return s + ")";
}

BinomialRelation h_relation(const std::string& d, const std::string& a, const std::string& b, const std::string& c,
                            const std::string& e) {
  return BinomialRelation::make(RelationKind::H, {d, a, b, c, e},
                                BracketMonomial::from_triples({{a, c, d}, {b, d, e}}),
                                BracketMonomial::from_triples({{b, c, d}, {a, d, e}}));
}

BinomialRelation c_relation(const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                            const std::string& e, const std::string& f) {
  return BinomialRelation::make(RelationKind::C, {a, b, c, d, e, f},
                                BracketMonomial::from_triples({{a, c, e}, {a, b, f}, {c, d, f}, {b, d, e}}),
                                BracketMonomial::from_triples({{a, c, f}, {a, b, e}, {c, d, e}, {b, d, f}}));
}

namespace {

std::string strip_spaces(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t from = 0;
  for (;;) {
    std::size_t at = s.find(sep, from);
    out.push_back(s.substr(from, at - from));
    if (at == std::string::npos) return out;
    from = at + 1;
  }
}

}  // namespace

BinomialRelation BinomialRelation::swapped() const { return make(kind, args, rhs, lhs); }

BracketMonomial parse_monomial(const std::string& text) {
  std::string s = strip_spaces(text);
  int sign = 1;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) sign = s[i++] == '-' ? -1 : 1;
  if (s.substr(i) == "1") return BracketMonomial{sign, {}};
  std::vector<std::array<std::string, 3>> triples;
  while (i < s.size()) {
    std::size_t close = s.find(']', i);
    if (s[i] != '[' || close == std::string::npos) throw BracketError("malformed monomial '" + text + "'");
    auto labels = split(s.substr(i + 1, close - i - 1), ',');
    if (labels.size() != 3 || labels[0].empty() || labels[1].empty() || labels[2].empty())
      throw BracketError("bracket needs three labels in '" + text + "'");
    triples.push_back({labels[0], labels[1], labels[2]});
    i = close + 1;
  }
  if (triples.empty()) throw BracketError("empty monomial '" + text + "'");
  BracketMonomial m = BracketMonomial::from_triples(triples);
  m.sign *= sign;
  return m;
}

BinomialRelation parse_equation(const std::string& text) {
  auto sides = split(text, '=');
  if (sides.size() != 2) throw BracketError("equation needs exactly one '=': '" + text + "'");
  return BinomialRelation::make(RelationKind::Derived, {}, parse_monomial(sides[0]), parse_monomial(sides[1]));
}

BinomialRelation parse_relation(const std::string& text) {
  std::size_t colon = text.find(':');
  std::string s = strip_spaces(text.substr(0, colon));
  if (s.size() < 4 || (s[0] != 'h' && s[0] != 'c') || s[1] != '(' || s.back() != ')')
    throw BracketError("malformed relation '" + text + "'");
  auto args = split(s.substr(2, s.size() - 3), ',');
  for (const auto& a : args)
    if (a.empty()) throw BracketError("empty label in '" + text + "'");
  BinomialRelation r;
  if (s[0] == 'h') {
    if (args.size() != 5) throw BracketError("h needs five labels: '" + text + "'");
    r = h_relation(args[0], args[1], args[2], args[3], args[4]);
  } else {
    if (args.size() != 6) throw BracketError("c needs six labels: '" + text + "'");
    r = c_relation(args[0], args[1], args[2], args[3], args[4], args[5]);
  }
  if (colon == std::string::npos) return r;
  BinomialRelation eq = parse_equation(text.substr(colon + 1));
  if (!r.same_relation(eq)) throw BracketError("equation does not match " + to_string(r) + ": '" + text + "'");
  return BinomialRelation::make(r.kind, r.args, eq.lhs, eq.rhs);
}

std::vector<BinomialRelation> certificate_relations() {
  static const char* rows[] = {
      "h(R1,V,R2,P2,Y): [V,R1,P2][Y,R2,R1] = -[V,Y,R1][R2,R1,P2]",
      "h(R2,R1,P,Q1,Z): [R2,R1,Q1][Z,R2,P] = -[Z,R2,R1][R2,Q1,P]",
      "h(R1,R2,P,Q2,G): [R2,R1,Q2][G,R1,P] = -[G,R2,R1][R1,Q2,P]",
      "h(P1,Y,P2,Q2,R2): [Y,Q2,P1][R2,P2,P1] = [Y,R2,P1][Q2,P2,P1]",
      "h(Y,P2,P1,U,V): [U,Y,P2][V,Y,P1] = [V,Y,P2][U,Y,P1]",
      "h(P1,X,P2,Q1,R1): [X,Q1,P1][R1,P2,P1] = [X,R1,P1][Q1,P2,P1]",
      "h(U,Q2,P,P2,X): [U,Q2,P2][U,X,P] = -[U,X,Q2][U,P2,P]",
      "h(Z,G,P,R2,Y): [G,Z,R2][Z,Y,P] = [G,Z,Y][Z,R2,P]",
      "h(G,W,P,P1,Q1): [G,W,P1][G,Q1,P] = [G,W,Q1][G,P1,P]",
      "h(Y,V,Z,P,P1): [V,Y,P][Z,Y,P1] = [V,Y,P1][Z,Y,P]",
      "h(V,R1,P,P2,Y): [V,Y,R1][V,P2,P] = -[V,R1,P2][V,Y,P]",
      "h(P1,Y,X,Q2,U): [U,Y,P1][X,Q2,P1] = [Y,Q2,P1][U,X,P1]",
      "h(P1,Y,X,R1,G): [G,Y,P1][X,R1,P1] = [Y,R1,P1][G,X,P1]",
      "h(Q2,U,Q1,P2,X): [U,X,Q2][Q2,Q1,P2] = -[U,Q2,P2][X,Q2,Q1]",
      "h(Q2,Q1,P,R1,W): [W,Q2,Q1][R1,Q2,P] = [R1,Q2,Q1][W,Q2,P]",
      "h(Q1,Q2,P,R2,G): [G,Q2,Q1][R2,Q1,P] = [R2,Q2,Q1][G,Q1,P]",
      "h(G,Z,P,P1,R1): [G,Z,R1][G,P1,P] = [G,Z,P1][G,R1,P]",
      "h(W,G,P,Q2,X): [G,X,W][W,Q2,P] = [G,W,Q2][X,W,P]",
      "h(X,U,W,P,P1): [U,X,P1][X,W,P] = [U,X,P][X,W,P1]",
      "c(G,Z,Y,R2,R1,P1): [G,Y,R1][G,Z,P1][Y,R2,P1][Z,R2,R1] = [G,Y,P1][G,Z,R1][Y,R2,R1][Z,R2,P1]",
      "c(G,W,Q2,P1,X,Q1): [G,X,Q2][G,W,Q1][Q2,Q1,P1][X,W,P1] = [G,Q2,Q1][G,X,W][X,Q2,P1][W,Q1,P1]",
      "c(R1,Q1,P2,P1,R2,Q2): [R2,R1,P2][R1,Q2,Q1][Q2,P2,P1][R2,Q1,P1] = [R1,Q2,P2][R2,R1,Q1][R2,P2,P1][Q2,Q1,P1]",
      "c(G,Z,R1,P1,Y,R2): [G,R2,R1][G,Z,Y][Y,R1,P1][Z,R2,P1] = [G,Y,R1][G,Z,R2][R2,R1,P1][Z,Y,P1]",
      "c(G,P1,Q2,Q1,X,W): [G,W,Q2][G,X,P1][X,Q2,Q1][W,Q1,P1] = [G,X,Q2][G,W,P1][W,Q2,Q1][X,Q1,P1]",
      "c(R1,P1,Q2,Q1,R2,P2): [R1,Q2,P2][R2,R1,P1][R2,Q2,Q1][Q1,P2,P1] = [R2,R1,Q2][R1,P2,P1][Q2,Q1,P2][R2,Q1,P1]",
  };
  std::vector<BinomialRelation> out;
  for (const char* r : rows) out.push_back(parse_relation(r));
  return out;
}

BinomialRelation certificate_conclusion() { return h_relation("P2", "V", "U", "P", "Y"); }

Reduction symbolic_reduce(const std::vector<BinomialRelation>& relations) {
  BracketMonomial lhs, rhs;
  for (const auto& r : relations) {
    lhs = lhs * r.lhs;
    rhs = rhs * r.rhs;
  }
  Reduction out;
  BracketMonomial l{lhs.sign, {}}, rr{rhs.sign, {}};
  std::set_difference(lhs.symbols.begin(), lhs.symbols.end(), rhs.symbols.begin(), rhs.symbols.end(),
                      std::back_inserter(l.symbols));
  std::set_difference(rhs.symbols.begin(), rhs.symbols.end(), lhs.symbols.begin(), lhs.symbols.end(),
                      std::back_inserter(rr.symbols));
  std::set_intersection(lhs.symbols.begin(), lhs.symbols.end(), rhs.symbols.begin(), rhs.symbols.end(),
                        std::back_inserter(out.cancelled));
  out.relation = BinomialRelation::make(RelationKind::Derived, {}, std::move(l), std::move(rr));
  return out;
}

const ExtPoint& CertificateConfiguration::at(const std::string& label) const {
  auto it = points_.find(label);
  if (it == points_.end()) throw BracketError("label " + label + " is not assigned");
  return it->second;
}

Ext2 CertificateConfiguration::evaluate(const BracketSymbol& s) const {
  return bracket(at(s.labels[0]), at(s.labels[1]), at(s.labels[2]));
}

Ext2 CertificateConfiguration::evaluate(const BracketMonomial& m) const {
  Ext2 v(m.sign);
  for (const auto& s : m.symbols) v *= evaluate(s);
  return v;
}

CertificateConfiguration certificate_configuration(const ConstructionTrace& t, QuadraticTower& tower) {
  CertificateConfiguration cfg;
  const std::pair<const char*, const Point*> named[] = {{"P", &t.p}, {"P1", &t.p1}, {"P2", &t.p2}, {"G", &t.g},
                                                        {"W", &t.w}, {"X", &t.x},   {"Y", &t.y},   {"Z", &t.z},
                                                        {"U", &t.u}, {"V", &t.v}};
  for (const auto& [label, p] : named) cfg.assign(label, lift<Ext2>(*p));
  auto q = line_conic_intersections_ext(t.c1, t.lq, tower);
  auto r = line_conic_intersections_ext(t.c2, t.lr, tower);
  cfg.assign("Q1", q.points[0]);
  cfg.assign("Q2", q.points[1]);
  cfg.assign("R1", r.points[0]);
  cfg.assign("R2", r.points[1]);
  return cfg;
}

bool numeric_check(const BinomialRelation& relation, const CertificateConfiguration& cfg) {
  return cfg.evaluate(relation.lhs) == cfg.evaluate(relation.rhs);
}

std::size_t CertificateReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.second; }));
}

bool CertificateReport::conclusive() const {
  return passed() == checks.size() && vanishing_cancelled.empty() && reduces_to_conclusion;
}

CertificateReport verify_certificate(const ConstructionTrace& trace, const std::vector<BinomialRelation>& relations) {
  QuadraticTower tower;
  CertificateConfiguration cfg = certificate_configuration(trace, tower);
  CertificateReport report;
  for (const auto& r : relations) report.checks.emplace_back(r, numeric_check(r, cfg));
  report.reduction = symbolic_reduce(relations);
  report.reduces_to_conclusion = report.reduction.relation.same_relation(certificate_conclusion());
  for (const auto& s : report.reduction.cancelled) {
    bool assigned = cfg.has(s.labels[0]) && cfg.has(s.labels[1]) && cfg.has(s.labels[2]);
    if (!assigned || is_zero(cfg.evaluate(s))) {
      if (report.vanishing_cancelled.empty() || !(report.vanishing_cancelled.back() == s))
        report.vanishing_cancelled.push_back(s);
    }
  }
  report.conclusion_holds = numeric_check(certificate_conclusion(), cfg);
  report.radicands = tower.radicands();
  return report;
}

}  // namespace straightedge
