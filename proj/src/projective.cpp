#include "straightedge/projective.hpp"

#include <sstream>

namespace straightedge {

Triple<Rational> canonical_triple(const Triple<Rational>& c) {
  if (all_zero(c)) throw InvalidPointError("canonical form of the zero triple");
  Integer l = 1;
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::array<Integer, 3> n;
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    n[i] = c[i].get_num() * (l / c[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
  }
  int lead = is_zero(c[0]) ? (is_zero(c[1]) ? 2 : 1) : 0;
  if (sgn(n[lead]) < 0) g = -g;
  Triple<Rational> out;
  for (int i = 0; i < 3; ++i) out[i] = Rational(Integer(n[i] / g));
  return out;
}

Point canonicalize(const Point& p) { return Point(canonical_triple(p.coords())); }
Line canonicalize(const Line& l) { return Line(canonical_triple(l.coords())); }

namespace {

std::string render(const Triple<Rational>& c) {
  Triple<Rational> k = canonical_triple(c);
  return "[" + to_string(k[0]) + " : " + to_string(k[1]) + " : " + to_string(k[2]) + "]";
}

}  // namespace

std::string to_string(const Point& p) { return render(p.coords()); }
std::string to_string(const Line& l) { return render(l.coords()); }

std::string equation_string(const Line& l) {
  Triple<Rational> k = canonical_triple(l.coords());
  static const char* vars[] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (is_zero(k[i])) continue;
    Rational a = abs(k[i]);
    if (first) os << (sgn(k[i]) < 0 ? "-" : "");
    else os << (sgn(k[i]) < 0 ? " - " : " + ");
    if (a != 1) os << to_string(a);
    os << vars[i];
    first = false;
  }
  os << " = 0";
  return os.str();
}

Rational cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d, const Point& o) {
  // The four points span a single line unless all coincide.
  const Point* base = &a;
  const Point* other = nullptr;
  for (const Point* p : {&b, &c, &d})
    if (!(*p == a)) {
      other = p;
      break;
    }
  if (!other) throw PreconditionError("cross ratio of four coincident points");
  for (const Point* p : {&a, &b, &c, &d})
    if (!collinear(*base, *other, *p)) throw PreconditionError("cross ratio of non-collinear points");
  if (collinear(*base, *other, o)) throw PreconditionError("cross ratio center " + to_string(o) + " lies on the line");
  Rational num = bracket(o, a, c) * bracket(o, b, d);
  Rational den = bracket(o, a, d) * bracket(o, b, c);
  if (is_zero(den)) throw PreconditionError("cross ratio has a zero denominator (coincident points)");
  return num / den;
}

Rational determinant(const Matrix3& m) {
  Triple<Rational> c0{m[0][0], m[1][0], m[2][0]};
  Triple<Rational> c1{m[0][1], m[1][1], m[2][1]};
  Triple<Rational> c2{m[0][2], m[1][2], m[2][2]};
  return det3(c0, c1, c2);
}

namespace {

Matrix3 identity() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
  return m;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = 0;
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Matrix3 adjugate(const Matrix3& m) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return r;
}

Triple<Rational> mul(const Matrix3& m, const Triple<Rational>& v) {
  Triple<Rational> r;
  for (int i = 0; i < 3; ++i) {
    r[i] = 0;
    for (int k = 0; k < 3; ++k) r[i] += m[i][k] * v[k];
  }
  return r;
}

}  // namespace

ProjectiveMap::ProjectiveMap() : m_(identity()) {}

ProjectiveMap::ProjectiveMap(Matrix3 m) : m_(std::move(m)) {
  if (is_zero(determinant(m_))) throw PreconditionError("projective map matrix is singular");
}

Point ProjectiveMap::apply(const Point& p) const { return canonicalize(Point(mul(m_, p.coords()))); }

Line ProjectiveMap::apply(const Line& l) const {
  // adj(M)^T is a nonzero multiple of M^{-T}.
  Matrix3 adj = adjugate(m_);
  Matrix3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = adj[j][i];
  return canonicalize(Line(mul(t, l.coords())));
}

ProjectiveMap ProjectiveMap::inverse() const {
  Matrix3 adj = adjugate(m_);
  Rational det = determinant(m_);
  for (auto& row : adj)
    for (auto& v : row) v /= det;
  return ProjectiveMap(adj);
}

ProjectiveMap operator*(const ProjectiveMap& a, const ProjectiveMap& b) {
  return ProjectiveMap(multiply(a.m_, b.m_));
}

ProjectiveMap map_from_standard_frame(std::span<const Point, 4> pts) {
  static const char* names[] = {"first", "second", "third", "fourth"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(pts[i], pts[j], pts[k]))
          throw PreconditionError(std::string("points not in general position: ") + names[i] + ", " + names[j] +
                                  " and " + names[k] + " (" + to_string(pts[i]) + ", " + to_string(pts[j]) + ", " +
                                  to_string(pts[k]) + ") are collinear");
  // Solve v4 = a v1 + b v2 + c v3 by Cramer's rule.
  const auto& v1 = pts[0].coords();
  const auto& v2 = pts[1].coords();
  const auto& v3 = pts[2].coords();
  const auto& v4 = pts[3].coords();
  Rational d = det3(v1, v2, v3);
  Rational a = det3(v4, v2, v3) / d;
  Rational b = det3(v1, v4, v3) / d;
  Rational c = det3(v1, v2, v4) / d;
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = a * v1[i];
    m[i][1] = b * v2[i];
    m[i][2] = c * v3[i];
  }
  return ProjectiveMap(m);
}

ProjectiveMap map_from_four_point_pairs(std::span<const Point, 4> src, std::span<const Point, 4> dst) {
  ProjectiveMap from_src = map_from_standard_frame(src);
  ProjectiveMap to_dst = map_from_standard_frame(dst);
  return to_dst * from_src.inverse();
}

}  // namespace straightedge
