#pragma once

#include <array>
#include <random>
#include <utility>
#include <string>

#include "straightedge/constructions.hpp"
#include "straightedge/oracle.hpp"

namespace straightedge::support {

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Point pt(const std::string& x, const std::string& y, const std::string& z = "1") {
  return Point(parse_rational(x), parse_rational(y), parse_rational(z));
}

inline std::string canon(const Point& p) { return to_string(p); }

inline Rational small_rational(std::mt19937_64& rng, int range = 9) {
  long n = static_cast<long>(rng() % (2 * range + 1)) - range;
  long d = static_cast<long>(rng() % 4) + 1;
  return q(n, d);
}

inline Point random_point(std::mt19937_64& rng, int range = 9) {
  return Point(small_rational(rng, range), small_rational(rng, range), Rational(1));
}

template <std::size_t N, class Gen>
std::array<Point, N> generate_points(Gen gen) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) { return std::array<Point, N>{((void)I, gen())...}; }(
      std::make_index_sequence<N>{});
}

inline ProjectiveMap random_map(std::mt19937_64& rng) {
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) v = Rational(static_cast<long>(rng() % 11) - 5);
    if (!is_zero(determinant(m))) return ProjectiveMap(m);
  }
}

inline ConstructionTrace example_trace() {
  auto pts = example_points();
  return build_configuration(pts, PartitionScheme::standard());
}

}  // namespace straightedge::support
