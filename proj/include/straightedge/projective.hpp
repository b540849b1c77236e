#pragma once

// The projective plane over an exact field: points, lines, join/meet, brackets,
// cross ratios and projective maps.

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "straightedge/scalar.hpp"

namespace straightedge {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPointError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateJoinError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateMeetError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class PreconditionError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

template <class F>
using Triple = std::array<F, 3>;

template <class F>
Triple<F> cross(const Triple<F>& a, const Triple<F>& b) {
  Triple<F> r;
  r[0] = a[1] * b[2];
  r[0] -= a[2] * b[1];
  r[1] = a[2] * b[0];
  r[1] -= a[0] * b[2];
  r[2] = a[0] * b[1];
  r[2] -= a[1] * b[0];
  return r;
}

template <class F>
F dot(const Triple<F>& a, const Triple<F>& b) {
  F r = a[0] * b[0];
  r += a[1] * b[1];
  r += a[2] * b[2];
  return r;
}

template <class F>
bool all_zero(const Triple<F>& a) {
  return is_zero(a[0]) && is_zero(a[1]) && is_zero(a[2]);
}

/// Determinant of the matrix with columns a, b, c.
template <class F>
F det3(const Triple<F>& a, const Triple<F>& b, const Triple<F>& c) {
  return dot(a, cross(b, c));
}

namespace detail {

template <class F, class Tag>
class Homogeneous {
 public:
  using field_type = F;

  Homogeneous(F x, F y, F z) : c_{std::move(x), std::move(y), std::move(z)} { validate(); }
  explicit Homogeneous(Triple<F> c) : c_(std::move(c)) { validate(); }

  const Triple<F>& coords() const { return c_; }
  const F& operator[](std::size_t i) const { return c_[i]; }

  /// Projective equality: the coordinate triples are proportional.
  friend bool operator==(const Homogeneous& p, const Homogeneous& q) { return all_zero(cross(p.c_, q.c_)); }

  /// Coordinate-wise identity of the stored representatives.
  bool same_representative(const Homogeneous& o) const { return c_ == o.c_; }

 private:
  void validate() const {
    if (all_zero(c_)) throw InvalidPointError(std::string(Tag::name) + " with all-zero coordinates");
  }

  Triple<F> c_;
};

struct PointTag {
  static constexpr const char* name = "point";
};
struct LineTag {
  static constexpr const char* name = "line";
};

}  // namespace detail

/// A point [x : y : z] of the projective plane over F.
template <class F>
class BasicPoint : public detail::Homogeneous<F, detail::PointTag> {
 public:
  using detail::Homogeneous<F, detail::PointTag>::Homogeneous;
  bool at_infinity() const { return is_zero((*this)[2]); }
};

/// The line ax + by + cz = 0, equivalently the point [a : b : c] of the dual plane.
template <class F>
class BasicLine : public detail::Homogeneous<F, detail::LineTag> {
 public:
  using detail::Homogeneous<F, detail::LineTag>::Homogeneous;
};

using Point = BasicPoint<Rational>;
using Line = BasicLine<Rational>;
using ExtPoint = BasicPoint<Ext2>;
using ExtLine = BasicLine<Ext2>;

/// Primitive integer triple with first nonzero entry positive.
Triple<Rational> canonical_triple(const Triple<Rational>& c);

Point canonicalize(const Point& p);
Line canonicalize(const Line& l);

/// "[a : b : c]"; rational triples are rendered in canonical form.
std::string to_string(const Point& p);
std::string to_string(const Line& l);

/// Human-readable "ax + by + cz = 0" form of a line.
std::string equation_string(const Line& l);

template <class F>
std::string to_string(const BasicPoint<F>& p) {
  return "[" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + "]";
}
template <class F>
std::string to_string(const BasicLine<F>& l) {
  return "[" + to_string(l[0]) + " : " + to_string(l[1]) + " : " + to_string(l[2]) + "]";
}

/// Lifts a point or line to a larger field.
template <class G, class F>
BasicPoint<G> lift(const BasicPoint<F>& p) {
  return BasicPoint<G>(G(p[0]), G(p[1]), G(p[2]));
}
template <class G, class F>
BasicLine<G> lift(const BasicLine<F>& l) {
  return BasicLine<G>(G(l[0]), G(l[1]), G(l[2]));
}

template <class F>
bool incident(const BasicPoint<F>& p, const BasicLine<F>& l) {
  return is_zero(dot(p.coords(), l.coords()));
}

/// The line through p and q. Rational results are canonical.
template <class F>
BasicLine<F> join(const BasicPoint<F>& p, const BasicPoint<F>& q) {
  Triple<F> c = cross(p.coords(), q.coords());
  if (all_zero(c)) throw DegenerateJoinError("join of coincident points " + to_string(p) + " and " + to_string(q));
  if constexpr (std::is_same_v<F, Rational>) return BasicLine<F>(canonical_triple(c));
  else return BasicLine<F>(std::move(c));
}

/// The common point of l and m, possibly at infinity. Rational results are canonical.
template <class F>
BasicPoint<F> meet(const BasicLine<F>& l, const BasicLine<F>& m) {
  Triple<F> c = cross(l.coords(), m.coords());
  if (all_zero(c)) throw DegenerateMeetError("meet of coincident lines " + to_string(l) + " and " + to_string(m));
  if constexpr (std::is_same_v<F, Rational>) return BasicPoint<F>(canonical_triple(c));
  else return BasicPoint<F>(std::move(c));
}

/// [abc]: the determinant with columns the stored coordinates of a, b, c.
template <class F>
F bracket(const BasicPoint<F>& a, const BasicPoint<F>& b, const BasicPoint<F>& c) {
  return det3(a.coords(), b.coords(), c.coords());
}

template <class F>
bool collinear(const BasicPoint<F>& a, const BasicPoint<F>& b, const BasicPoint<F>& c) {
  return is_zero(bracket(a, b, c));
}

template <class F>
bool concurrent(const BasicLine<F>& l, const BasicLine<F>& m, const BasicLine<F>& n) {
  return is_zero(det3(l.coords(), m.coords(), n.coords()));
}

/// (a, b; c, d) = [oac][obd] / ([oad][obc]) for collinear a, b, c, d and o off their line.
Rational cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d, const Point& o);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Rational determinant(const Matrix3& m);

/// An invertible 3×3 rational matrix acting on points by multiplication and on lines by
/// the inverse transpose.
class ProjectiveMap {
 public:
  ProjectiveMap();  // identity
  explicit ProjectiveMap(Matrix3 m);

  const Matrix3& matrix() const { return m_; }

  Point apply(const Point& p) const;
  Line apply(const Line& l) const;
  ProjectiveMap inverse() const;

  friend ProjectiveMap operator*(const ProjectiveMap& a, const ProjectiveMap& b);

 private:
  Matrix3 m_;
};

/// The map sending src[i] to dst[i]. Throws PreconditionError naming a collinear triple.
ProjectiveMap map_from_four_point_pairs(std::span<const Point, 4> src, std::span<const Point, 4> dst);

/// The map sending e1, e2, e3, e1 + e2 + e3 to the four given points.
ProjectiveMap map_from_standard_frame(std::span<const Point, 4> pts);

}  // namespace straightedge
