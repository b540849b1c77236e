#pragma once

// Conics through five points, membership, and straightedge intersections with lines.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "straightedge/projective.hpp"

namespace straightedge {

/// A straightedge step failed for every ordering it was allowed to try.
class ConstructionDegenerateError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The five points do not determine a unique conic.
class NotUniqueError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A line is a component of the conic it was intersected with.
class ComponentError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Human-readable notes about retried orderings and auxiliary choices.
using RetryLog = std::vector<std::string>;

/// The curve ax² + bxy + cy² + dxz + eyz + fz² = 0. Coefficients are kept as a primitive
/// integer vector; the defining points, when present, drive the straightedge constructions.
class Conic {
 public:
  using Coefficients = std::array<Rational, 6>;

  Conic(const Coefficients& coefficients, std::vector<Point> defining_points);
  static Conic from_coefficients(const Coefficients& coefficients) { return Conic(coefficients, {}); }

  const Coefficients& coefficients() const { return k_; }
  const std::vector<Point>& defining_points() const { return defining_; }

  template <class F>
  F evaluate(const BasicPoint<F>& p) const {
    const F& x = p[0];
    const F& y = p[1];
    const F& z = p[2];
    F r = F(k_[0]) * x * x;
    r += F(k_[1]) * x * y;
    r += F(k_[2]) * y * y;
    r += F(k_[3]) * x * z;
    r += F(k_[4]) * y * z;
    r += F(k_[5]) * z * z;
    return r;
  }

  /// Symmetric bilinear form B with B(p, p) = evaluate(p).
  template <class F>
  F polar(const BasicPoint<F>& p, const BasicPoint<F>& q) const {
    Matrix3 m = matrix();
    F r(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r += F(m[i][j]) * p[i] * q[j];
    return r;
  }

  bool contains(const Point& p) const { return is_zero(evaluate(p)); }

  /// Symmetric matrix of the quadratic form.
  Matrix3 matrix() const;

  bool is_irreducible() const;

  /// Same curve: proportional coefficient vectors.
  friend bool operator==(const Conic& a, const Conic& b) { return a.k_ == b.k_; }

 private:
  Coefficients k_;
  std::vector<Point> defining_;
};

/// "a·x² + b·xy + c·y² + d·xz + e·yz + f·z² = 0" with zero terms dropped.
std::string to_string(const Conic& c);

/// The unique conic through five points. Throws NotUniqueError when four are collinear
/// or points repeat.
Conic fit_conic(std::span<const Point, 5> points);

inline bool contains(const Conic& c, const Point& p) { return c.contains(p); }
inline bool is_irreducible(const Conic& c) { return c.is_irreducible(); }

/// Second intersection of the line p1q with the conic, located with Pascal's theorem on
/// five points of the conic. Orderings of the auxiliary points are tried in lexicographic
/// order until every join and meet is defined. A tangent line at p1 returns p1.
Point second_intersection(const Conic& c, const Point& p1, const Point& q, RetryLog* log = nullptr);

struct PascalLine {
  std::array<Point, 3> points;
  Line line;
};

/// Meets of opposite sides of the hexagon p0 p1 p2 p3 p4 p5 and the line through them.
PascalLine pascal_line(std::span<const Point, 6> hexagon);

struct LineConicIntersection {
  std::array<ExtPoint, 2> points;
  Rational discriminant;
  bool tangent = false;
};

/// Both intersections of a line and a conic, in the field generated by the square root of
/// the discriminant (adjoined to `tower`). Throws ComponentError when the line lies on the conic.
LineConicIntersection line_conic_intersections_ext(const Conic& c, const Line& l, QuadraticTower& tower);
LineConicIntersection line_conic_intersections_ext(const Conic& c, const Line& l);

}  // namespace straightedge
