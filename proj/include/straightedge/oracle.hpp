#pragma once

// Independent ground truth: determinant membership tests, the classical ratio theorems,
// and random instance generators.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "straightedge/conic.hpp"

namespace straightedge {

/// Coefficients over x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³.
class CubicForm {
 public:
  using Coefficients = std::array<Rational, 10>;

  explicit CubicForm(const Coefficients& k);

  const Coefficients& coefficients() const { return k_; }
  Rational evaluate(const Point& p) const;
  bool contains(const Point& p) const { return is_zero(evaluate(p)); }

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  Coefficients k_;
};

std::string to_string(const CubicForm& c);

/// The ten cubic monomials evaluated at p, in CubicForm order.
std::array<Rational, 10> cubic_monomials(const Point& p);

/// Determinant of the 10×10 monomial matrix on the given representatives.
/// Zero iff a cubic passes through all ten. Throws InputError on repeats or wrong count.
Rational cubic_det(std::span<const Point> points);

/// The unique cubic through nine points; throws NotUniqueError when the nullspace is larger.
CubicForm fit_cubic(std::span<const Point> points);

/// Third intersection of the line ab with the cubic, where a and b lie on it. A tangent at
/// b (or a) returns that point. Throws ComponentError if the line lies on the cubic.
Point third_intersection(const CubicForm& cubic, const Point& a, const Point& b);

/// Determinant of the 6×6 conic-monomial matrix; zero iff the six lie on a conic.
Rational conic_six_det(std::span<const Point> points);

/// Carnot's six-ratio product for the triangle with sides la, lb, lc and six points assigned
/// two per side. Throws PreconditionError if a point is a vertex, off every side, or on two.
Rational carnot_product(std::span<const Line, 3> triangle, std::span<const Point, 6> points);
/// True iff carnot_product == 1.
bool carnot_check(std::span<const Line, 3> triangle, std::span<const Point, 6> points);

/// (|BD|/|DC|)(|CE|/|EA|)(|AF|/|FB|) for triangle ABC and cut points D ∈ BC, E ∈ CA, F ∈ AB.
Rational menelaus_product(std::span<const Point, 3> triangle, std::span<const Point, 3> cut);
/// True iff menelaus_product == −1.
bool menelaus_check(std::span<const Point, 3> triangle, std::span<const Point, 3> cut);

/// |XO|² − r² for a finite point X and a circle (x − x0 z)² + (y − y0 z)² − r² z².
/// Throws PreconditionError if the conic is not a circle or X is at infinity.
Rational power_of_point(const Point& x, const Conic& circle);

/// Signed product |XA|·|XB| along the secant through X, A, B: the dot product (A − X)·(B − X).
/// Throws PreconditionError unless A, B are finite points of the circle collinear with X.
Rational secant_product(const Point& x, const Point& a, const Point& b, const Conic& circle);

/// Ten low-height points, seeded. Positive instances lie on a cubic by construction; negative
/// ones replace the tenth point by one off that cubic.
std::vector<Point> generate_instance(bool on_cubic, std::uint64_t seed);

/// The ten points of the worked example.
std::vector<Point> example_points();

}  // namespace straightedge
