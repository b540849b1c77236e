#include "straightedge/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "straightedge/constructions.hpp"
#include "straightedge/linalg.hpp"

namespace straightedge {

CubicForm::CubicForm(const Coefficients& k) {
  RationalVector v(k.begin(), k.end());
  if (std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_zero(r); }))
    throw GeometryError("cubic with all-zero coefficients");
  v = primitive(v);
  std::copy(v.begin(), v.end(), k_.begin());
}

std::array<Rational, 10> cubic_monomials(const Point& p) {
  const auto& [x, y, z] = p.coords();
  return {x * x * x, x * x * y, x * x * z, x * y * y, x * y * z, x * z * z, y * y * y, y * y * z, y * z * z, z * z * z};
}

Rational CubicForm::evaluate(const Point& p) const {
  auto m = cubic_monomials(p);
  Rational s = 0;
  for (int i = 0; i < 10; ++i) s += k_[i] * m[i];
  return s;
}

std::string to_string(const CubicForm& c) {
  static const char* names[] = {"x³", "x²y", "x²z", "xy²", "xyz", "xz²", "y³", "y²z", "yz²", "z³"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 10; ++i) {
    const Rational& a = c.coefficients()[i];
    if (is_zero(a)) continue;
    if (first) os << (sgn(a) < 0 ? "-" : "");
    else os << (sgn(a) < 0 ? " - " : " + ");
    os << to_string(Rational(abs(a))) << "·" << names[i];
    first = false;
  }
  os << " = 0";
  return os.str();
}

namespace {

void require_distinct(std::span<const Point> points, std::size_t count, const char* what) {
  if (points.size() != count)
    throw InputError(std::string(what) + " needs " + std::to_string(count) + " points, got " +
                     std::to_string(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw InputError(std::string(what) + ": repeated point " + to_string(points[i]));
}

RationalVector conic_monomials(const Point& p) {
  const auto& [x, y, z] = p.coords();
  return {x * x, x * y, y * y, x * z, y * z, z * z};
}

}  // namespace

Rational cubic_det(std::span<const Point> points) {
  require_distinct(points, 10, "cubic determinant");
  RationalMatrix m;
  for (const auto& p : points) {
    auto row = cubic_monomials(p);
    m.emplace_back(row.begin(), row.end());
  }
  return determinant(m);
}

CubicForm fit_cubic(std::span<const Point> points) {
  require_distinct(points, 9, "cubic fit");
  RationalMatrix m;
  for (const auto& p : points) {
    auto row = cubic_monomials(p);
    m.emplace_back(row.begin(), row.end());
  }
  auto basis = nullspace(m);
  if (basis.size() != 1)
    throw NotUniqueError("cubic through nine points is not unique (" + std::to_string(basis.size()) +
                         "-dimensional family)");
  CubicForm::Coefficients k;
  std::copy(basis[0].begin(), basis[0].end(), k.begin());
  return CubicForm(k);
}

Point third_intersection(const CubicForm& cubic, const Point& a, const Point& b) {
  if (!cubic.contains(a) || !cubic.contains(b)) throw PreconditionError("third intersection: points must lie on the cubic");
  if (a == b) throw DegenerateJoinError("third intersection: coincident points " + to_string(a));
  // With f(a) = f(b) = 0, f(s a + t b) = st (c1 s + c2 t).
  Triple<Rational> sum, diff;
  for (int i = 0; i < 3; ++i) {
    sum[i] = a[i] + b[i];
    diff[i] = a[i] - b[i];
  }
  Rational fp = cubic.evaluate(Point(sum));
  Rational fm = cubic.evaluate(Point(diff));
  Rational c2 = (fp + fm) / 2;
  Rational c1 = (fp - fm) / 2;
  if (is_zero(c1) && is_zero(c2))
    throw ComponentError("line " + to_string(join(a, b)) + " is a component of the cubic");
  Triple<Rational> r;
  for (int i = 0; i < 3; ++i) r[i] = c2 * a[i] - c1 * b[i];
  return canonicalize(Point(r));
}

Rational conic_six_det(std::span<const Point> points) {
  require_distinct(points, 6, "conic determinant");
  RationalMatrix m;
  for (const auto& p : points) m.push_back(conic_monomials(p));
  return determinant(m);
}

namespace {

// Affine chart given by a linear form that is nonzero on every listed point.
class Chart {
 public:
  explicit Chart(const std::vector<const Point*>& pts) {
    std::vector<Triple<Rational>> forms{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    for (long k = 1; k <= 64; ++k) forms.push_back({1, k, k * k});
    for (const auto& f : forms) {
      bool ok = std::all_of(pts.begin(), pts.end(), [&](const Point* p) { return !is_zero(dot(f, p->coords())); });
      if (ok) {
        form_ = f;
        return;
      }
    }
    throw PreconditionError("no affine chart keeps every point finite");
  }

  Triple<Rational> affine(const Point& p) const {
    Rational s = dot(form_, p.coords());
    return {p[0] / s, p[1] / s, p[2] / s};
  }

  /// Signed ratio |XP| / |YQ| of two parallel displacements.
  Rational ratio(const Point& x, const Point& p, const Point& y, const Point& q) const {
    auto ax = affine(x), ap = affine(p), ay = affine(y), aq = affine(q);
    for (int k = 0; k < 3; ++k) {
      Rational den = aq[k] - ay[k];
      if (!is_zero(den)) return (ap[k] - ax[k]) / den;
    }
    throw PreconditionError("ratio with a zero-length denominator");
  }

 private:
  Triple<Rational> form_;
};

}  // namespace

Rational carnot_product(std::span<const Line, 3> tri, std::span<const Point, 6> pts) {
  if (concurrent(tri[0], tri[1], tri[2])) throw PreconditionError("carnot: triangle sides are concurrent");
  // Vertex opposite side i.
  std::array<Point, 3> vertex{meet(tri[1], tri[2]), meet(tri[0], tri[2]), meet(tri[0], tri[1])};
  std::array<std::vector<const Point*>, 3> on_side;
  for (const auto& p : pts) {
    for (const auto& vx : vertex)
      if (p == vx) throw PreconditionError("carnot: " + to_string(p) + " is a triangle vertex");
    int side = -1;
    for (int i = 0; i < 3; ++i)
      if (incident(p, tri[i])) side = i;
    if (side < 0) throw PreconditionError("carnot: " + to_string(p) + " is on no side of the triangle");
    on_side[side].push_back(&p);
  }
  for (int i = 0; i < 3; ++i)
    if (on_side[i].size() != 2) throw PreconditionError("carnot: each side must carry exactly two of the points");

  std::vector<const Point*> all;
  for (const auto& vx : vertex) all.push_back(&vx);
  for (const auto& p : pts) all.push_back(&p);
  Chart chart(all);
  // Side i runs from vertex (i+1)%3 to vertex (i+2)%3.
  Rational prod = 1;
  for (int i = 0; i < 3; ++i) {
    const Point& from = vertex[(i + 1) % 3];
    const Point& to = vertex[(i + 2) % 3];
    for (const Point* p : on_side[i]) prod *= chart.ratio(from, *p, to, *p);
  }
  return prod;
}

bool carnot_check(std::span<const Line, 3> triangle, std::span<const Point, 6> points) {
  return carnot_product(triangle, points) == 1;
}

Rational menelaus_product(std::span<const Point, 3> tri, std::span<const Point, 3> cut) {
  if (collinear(tri[0], tri[1], tri[2])) throw PreconditionError("menelaus: triangle vertices are collinear");
  std::vector<const Point*> all;
  for (int i = 0; i < 3; ++i) {
    const Point& b = tri[(i + 1) % 3];
    const Point& c = tri[(i + 2) % 3];
    if (!collinear(b, c, cut[i])) throw PreconditionError("menelaus: " + to_string(cut[i]) + " is off its side");
    if (cut[i] == b || cut[i] == c) throw PreconditionError("menelaus: " + to_string(cut[i]) + " is a vertex");
    all.push_back(&tri[i]);
    all.push_back(&cut[i]);
  }
  Chart chart(all);
  Rational prod = 1;
  for (int i = 0; i < 3; ++i) {
    // |B D| / |D C| with D on BC.
    const Point& b = tri[(i + 1) % 3];
    const Point& c = tri[(i + 2) % 3];
    prod *= chart.ratio(b, cut[i], cut[i], c);
  }
  return prod;
}

bool menelaus_check(std::span<const Point, 3> triangle, std::span<const Point, 3> cut) {
  return menelaus_product(triangle, cut) == -1;
}

namespace {

void require_circle(const Conic& c) {
  const auto& k = c.coefficients();
  if (is_zero(k[0]) || k[0] != k[2] || !is_zero(k[1]) || !c.is_irreducible())
    throw PreconditionError("not a circle: " + to_string(c));
}

std::pair<Rational, Rational> affine_xy(const Point& p) {
  if (p.at_infinity()) throw PreconditionError("point at infinity: " + to_string(p));
  return {p[0] / p[2], p[1] / p[2]};
}

}  // namespace

Rational power_of_point(const Point& x, const Conic& circle) {
  require_circle(circle);
  auto [px, py] = affine_xy(x);
  return circle.evaluate(Point(px, py, 1)) / circle.coefficients()[0];
}

Rational secant_product(const Point& x, const Point& a, const Point& b, const Conic& circle) {
  require_circle(circle);
  if (!circle.contains(a) || !circle.contains(b)) throw PreconditionError("secant points must lie on the circle");
  if (!collinear(x, a, b)) throw PreconditionError("secant points must be collinear with X");
  auto [xx, xy] = affine_xy(x);
  auto [ax, ay] = affine_xy(a);
  auto [bx, by] = affine_xy(b);
  return (ax - xx) * (bx - xx) + (ay - xy) * (by - xy);
}

namespace {

// Fisher-Yates on raw engine output.
template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

Point random_low_point(std::mt19937_64& rng) {
  long x = static_cast<long>(rng() % 41) - 20;
  long y = static_cast<long>(rng() % 41) - 20;
  return Point(x, y, 1);
}

bool contains_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

std::vector<Point> generate_instance(bool on_cubic, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    while (pts.size() < 9) {
      Point p = random_low_point(rng);
      if (!contains_point(pts, p)) pts.push_back(p);
    }
    std::optional<CubicForm> cubic;
    try {
      cubic = fit_cubic(pts);
    } catch (const GeometryError&) {
      continue;
    }
    std::size_t i = rng() % 9;
    std::size_t j = (i + 1 + rng() % 8) % 9;
    Point tenth(1, 0, 0);
    try {
      tenth = third_intersection(*cubic, pts[i], pts[j]);
    } catch (const GeometryError&) {
      continue;
    }
    if (contains_point(pts, tenth)) continue;  // tangency or a third input on the line
    if (!on_cubic) {
      bool found = false;
      for (int k = 0; k < 100 && !found; ++k) {
        Point cand = random_low_point(rng);
        if (!cubic->contains(cand) && !contains_point(pts, cand)) {
          tenth = cand;
          found = true;
        }
      }
      if (!found) continue;
    }
    pts.push_back(tenth);
    shuffle(pts, rng);
    return pts;
  }
  throw GeometryError("instance generation retries exhausted for seed " + std::to_string(seed));
}

std::vector<Point> example_points() {
  auto q = [](long n, long d = 1) { return Rational(n, d); };
  return {Point(0, 0, 1),
          Point(6, -15, 1),
          Point(1, 0, 1),
          Point(2, 2, 1),
          Point(q(-5, 9), q(8, 27), 1),
          Point(2, -3, 1),
          Point(q(1, 4), q(-3, 8), 1),
          Point(-1, 0, 1),
          Point(-1, -1, 1),
          Point(6, 14, 1)};
}

}  // namespace straightedge
