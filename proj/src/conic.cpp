#include "straightedge/conic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "straightedge/linalg.hpp"

namespace straightedge {

namespace {

RationalVector conic_row(const Point& p) {
  const auto& [x, y, z] = p.coords();
  return {x * x, x * y, y * y, x * z, y * z, z * z};
}

Conic::Coefficients to_coefficients(const RationalVector& v) {
  Conic::Coefficients k;
  std::copy(v.begin(), v.end(), k.begin());
  return k;
}

}  // namespace

Conic::Conic(const Coefficients& coefficients, std::vector<Point> defining_points)
    : defining_(std::move(defining_points)) {
  RationalVector v(coefficients.begin(), coefficients.end());
  if (std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_zero(r); }))
    throw GeometryError("conic with all-zero coefficients");
  k_ = to_coefficients(primitive(v));
  for (const auto& p : defining_)
    if (!contains(p)) throw GeometryError("defining point " + to_string(p) + " is not on the conic");
}

Matrix3 Conic::matrix() const {
  const Rational half(1, 2);
  Matrix3 m;
  m[0] = {k_[0], k_[1] * half, k_[3] * half};
  m[1] = {k_[1] * half, k_[2], k_[4] * half};
  m[2] = {k_[3] * half, k_[4] * half, k_[5]};
  return m;
}

bool Conic::is_irreducible() const { return !is_zero(determinant(matrix())); }

std::string to_string(const Conic& c) {
  static const char* monomials[] = {"x²", "xy", "y²", "xz", "yz", "z²"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 6; ++i) {
    const Rational& a = c.coefficients()[i];
    if (is_zero(a)) continue;
    if (first) os << (sgn(a) < 0 ? "-" : "");
    else os << (sgn(a) < 0 ? " - " : " + ");
    os << to_string(Rational(abs(a))) << "·" << monomials[i];
    first = false;
  }
  os << " = 0";
  return os.str();
}

Conic fit_conic(std::span<const Point, 5> points) {
  RationalMatrix m;
  for (const auto& p : points) m.push_back(conic_row(p));
  auto basis = nullspace(m);
  if (basis.size() != 1) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (points[i] == points[j])
          throw NotUniqueError("conic through five points is not unique: " + to_string(points[i]) + " is repeated");
    for (int skip = 4; skip >= 0; --skip) {
      std::vector<Point> four;
      for (int i = 0; i < 5; ++i)
        if (i != skip) four.push_back(points[i]);
      Line l = join(four[0], four[1]);
      if (incident(four[2], l) && incident(four[3], l))
        throw NotUniqueError("conic through five points is not unique: " + to_string(four[0]) + ", " +
                             to_string(four[1]) + ", " + to_string(four[2]) + ", " + to_string(four[3]) +
                             " are collinear");
    }
    throw NotUniqueError("conic through five points is not unique");
  }
  return Conic(to_coefficients(basis[0]), std::vector<Point>(points.begin(), points.end()));
}

namespace {

// One Pascal step with the hexagon p1 p2 p3 p4 p5 R, where R is the unknown point on l.
Point pascal_step(const Point& p1, const Point& p2, const Point& p3, const Point& p4, const Point& p5,
                  const Line& l) {
  Point q1 = meet(join(p1, p2), join(p4, p5));
  Point q2 = meet(join(p3, p4), l);
  Point q3 = meet(join(p2, p3), join(q1, q2));
  return meet(join(p5, q3), l);
}

}  // namespace

Point second_intersection(const Conic& c, const Point& p1, const Point& q, RetryLog* log) {
  if (!c.contains(p1)) throw PreconditionError("second intersection: " + to_string(p1) + " is not on the conic");
  const auto& defining = c.defining_points();
  if (defining.size() < 5) throw PreconditionError("second intersection needs a conic with five defining points");
  Line l = join(p1, q);

  // Candidate sets of four further conic points, in lexicographic order of omitted indices.
  std::vector<std::vector<Point>> candidate_sets;
  auto pos = std::find(defining.begin(), defining.end(), p1);
  if (pos != defining.end()) {
    std::vector<Point> rest;
    for (auto it = defining.begin(); it != defining.end(); ++it)
      if (it != pos) rest.push_back(*it);
    candidate_sets.push_back(std::move(rest));
  } else {
    for (std::size_t skip = defining.size(); skip-- > 0;) {
      std::vector<Point> rest;
      for (std::size_t i = 0; i < defining.size(); ++i)
        if (i != skip) rest.push_back(defining[i]);
      candidate_sets.push_back(std::move(rest));
    }
  }

  std::string last_failure = "no ordering available";
  for (const auto& rest : candidate_sets) {
    std::array<int, 4> order{0, 1, 2, 3};
    do {
      try {
        Point r = pascal_step(p1, rest[order[0]], rest[order[1]], rest[order[2]], rest[order[3]], l);
        if (c.contains(r) && incident(r, l)) return r;
        last_failure = "ordering produced " + to_string(r) + " off the conic";
      } catch (const GeometryError& e) {
        last_failure = e.what();
      }
      if (log) {
        std::ostringstream os;
        os << "second intersection ordering (" << order[0] << order[1] << order[2] << order[3]
           << ") rejected: " << last_failure;
        log->push_back(os.str());
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  throw ConstructionDegenerateError("second intersection of " + to_string(l) + " through " + to_string(p1) +
                                    " is degenerate for every ordering: " + last_failure);
}

PascalLine pascal_line(std::span<const Point, 6> h) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (h[i] == h[j]) throw PreconditionError("pascal line: repeated point " + to_string(h[i]));
  std::array<Point, 3> meets{Point(1, 0, 0), Point(1, 0, 0), Point(1, 0, 0)};
  for (int k = 0; k < 3; ++k) {
    Line a = join(h[k], h[k + 1]);
    Line b = join(h[k + 3], h[(k + 4) % 6]);
    try {
      meets[k] = meet(a, b);
    } catch (const DegenerateMeetError&) {
      throw DegenerateMeetError("pascal line: sides " + to_string(h[k]) + to_string(h[k + 1]) + " and " +
                                to_string(h[k + 3]) + to_string(h[(k + 4) % 6]) + " coincide");
    }
  }
  if (!collinear(meets[0], meets[1], meets[2]))
    throw PreconditionError("pascal line: the six points do not lie on one conic");
  const Point* other = nullptr;
  for (int k = 1; k < 3; ++k)
    if (!(meets[k] == meets[0])) other = &meets[k];
  if (!other) throw DegenerateJoinError("pascal line: the three meets coincide at " + to_string(meets[0]));
  return {meets, join(meets[0], *other)};
}

LineConicIntersection line_conic_intersections_ext(const Conic& c, const Line& l, QuadraticTower& tower) {
  // Two distinct rational points spanning l.
  std::vector<Point> span;
  for (int axis = 0; axis < 3 && span.size() < 2; ++axis) {
    Triple<Rational> e{0, 0, 0};
    e[axis] = 1;
    Triple<Rational> m = cross(l.coords(), e);
    if (all_zero(m)) continue;
    Point p(canonical_triple(m));
    if (span.empty() || !(span[0] == p)) span.push_back(p);
  }
  const Point& a = span[0];
  const Point& b = span[1];
  Rational qa = c.evaluate(a);
  Rational qb = c.evaluate(b);
  Rational beta = c.polar(a, b);
  if (is_zero(qa) && is_zero(qb) && is_zero(beta))
    throw ComponentError("line " + to_string(l) + " is a component of " + to_string(c));

  LineConicIntersection out{{ExtPoint(1, 0, 0), ExtPoint(1, 0, 0)}, Rational(beta * beta - qa * qb), false};
  out.tangent = is_zero(out.discriminant);
  ExtPoint ea = lift<Ext2>(a);
  ExtPoint eb = lift<Ext2>(b);
  auto combine = [&](const Ext2& s, const Ext2& t) {
    Triple<Ext2> v;
    for (int i = 0; i < 3; ++i) v[i] = s * ea[i] + t * eb[i];
    return ExtPoint(v);
  };
  if (is_zero(qa)) {
    out.points[0] = ea;
    out.points[1] = combine(Ext2(Rational(-qb)), Ext2(Rational(2 * beta)));
    return out;
  }
  Ext2 root = tower.sqrt(out.discriminant);
  Ext2 inv = Ext2(Rational(1 / qa));
  Ext2 mb = Ext2(Rational(-beta));
  out.points[0] = combine((mb + root) * inv, Ext2(1));
  out.points[1] = combine((mb - root) * inv, Ext2(1));
  return out;
}

LineConicIntersection line_conic_intersections_ext(const Conic& c, const Line& l) {
  QuadraticTower tower;
  return line_conic_intersections_ext(c, l, tower);
}

}  // namespace straightedge
