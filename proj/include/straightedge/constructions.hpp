#pragma once

// Straightedge constructions on pairs of conics, and the ten-points-on-a-cubic test
// built from them.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "straightedge/conic.hpp"

namespace straightedge {

/// Two conics built from a partition scheme coincide (seven points on one conic).
class CoincidentConicsError : public ConstructionDegenerateError {
 public:
  using ConstructionDegenerateError::ConstructionDegenerateError;
};

/// Malformed input set: wrong count or repeated points.
class InputError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The line φ(p) for the quadratic Cremona map centred on the triangle e1 e2 e3, built as the
/// join of e1p ∩ e2e3 and e2p ∩ e1e3. Throws PreconditionError if p lies on a side.
Line cremona_line(const Point& p, const Point& e1, const Point& e2, const Point& e3);

/// The fourth common point of two conics that share the three given points. The remaining two
/// defining points of each conic are mapped to lines by cremona_line; the two conics become
/// points and the line through them is mapped back.
Point fourth_intersection(const Conic& c1, const Conic& c2, std::span<const Point, 3> shared,
                          RetryLog* log = nullptr);

/// Deterministic source of auxiliary points for radical_axis.
struct AuxiliaryOptions {
  std::uint64_t seed = 0;
  int max_candidates = 32;
};

/// Low-height lattice points [x : y : 1], |x|, |y| <= 9, drawn from a seeded generator.
std::vector<Point> auxiliary_candidates(const AuxiliaryOptions& options);

/// The line through the two intersections of c1 and c2 other than the known common points u, v.
Line radical_axis(const Conic& c1, const Conic& c2, const Point& u, const Point& v,
                  const AuxiliaryOptions& options = {}, RetryLog* log = nullptr);

/// Index sets (0-based, ascending) over the ten inputs. S1 ⊔ S2 = T1 ⊔ T2 = all ten and
/// |S1 ∩ T1| = 3.
struct PartitionScheme {
  std::array<int, 5> s1, s2, t1, t2;

  /// S1 = {0..4}, S2 = {5..9}, T1 = {2,3,4,5,6}, T2 = {0,1,7,8,9}.
  static PartitionScheme standard();
  /// Builds and validates a scheme from S1 and T1; throws InputError.
  static PartitionScheme from_sets(const std::vector<int>& s1, const std::vector<int>& t1);

  friend bool operator==(const PartitionScheme&, const PartitionScheme&) = default;
};

/// Schemes in retry order: for each pair of swap positions (lexicographic), each S1
/// (lexicographic 5-subsets). The first entry equals PartitionScheme::standard().
std::vector<PartitionScheme> scheme_sequence(std::size_t limit);

/// Every named object of the ten-point construction.
struct ConstructionTrace {
  std::vector<Point> inputs;
  PartitionScheme scheme;
  Conic c1, c2, d1, d2;
  Point p1, p2;
  Line lp, lq, lr;
  Point p, q, r, g, w, x, y, z, u, v;
  /// bracket(P2, U, V) on the canonical representatives.
  Rational collinearity;
  std::size_t max_coordinate_bits = 0;
  RetryLog log;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

/// Names of recorded incidences that fail; empty for a consistent trace.
std::vector<std::string> incidence_violations(const ConstructionTrace& t);

/// The construction for one scheme, from the four conics to U and V. Any failed step throws
/// ConstructionDegenerateError (CoincidentConicsError when a conic pair coincides).
ConstructionTrace build_configuration(std::span<const Point> points, const PartitionScheme& scheme,
                                      const AuxiliaryOptions& options = {});

enum class VerdictKind { OnCubic, NotOnCubic, Degenerate };

struct Verdict {
  VerdictKind kind = VerdictKind::Degenerate;
  std::string reason;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// "ON_CUBIC", "NOT_ON_CUBIC" or "DEGENERATE".
std::string to_string(VerdictKind kind);

struct CheckOptions {
  std::size_t max_schemes = 64;
  AuxiliaryOptions auxiliary;
  /// Tried before the standard sequence when set.
  std::optional<PartitionScheme> first_scheme;
};

struct CheckResult {
  Verdict verdict;
  std::optional<ConstructionTrace> trace;
  RetryLog log;
  std::size_t schemes_tried = 0;
  bool used_fallback = false;
};

/// Decides whether ten distinct points lie on a cubic: the first non-degenerate scheme decides
/// by the collinearity of P2, U, V; then the seven-on-a-conic fallback; otherwise DEGENERATE.
/// Throws InputError for a wrong count or repeated points.
CheckResult check_ten_on_cubic(std::span<const Point> points, const CheckOptions& options = {});

/// Seven of the points lie on the irreducible conic `conic7` and `off` are the other three:
/// the ten lie on a cubic iff `off` is collinear. Throws PreconditionError otherwise.
Verdict fallback_seven_on_conic(std::span<const Point> points, const Conic& conic7, std::span<const Point, 3> off);

}  // namespace straightedge
