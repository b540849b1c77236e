#include "straightedge/constructions.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace straightedge {

Line cremona_line(const Point& p, const Point& e1, const Point& e2, const Point& e3) {
  if (collinear(e1, e2, e3)) throw PreconditionError("cremona line: triangle vertices are collinear");
  const std::array<std::pair<const Point*, const Point*>, 3> sides{
      {{&e1, &e2}, {&e1, &e3}, {&e2, &e3}}};
  for (const auto& [a, b] : sides)
    if (collinear(*a, *b, p))
      throw PreconditionError("cremona line: " + to_string(p) + " lies on the side " + to_string(*a) +
                              to_string(*b));
  Point a = meet(join(e1, p), join(e2, e3));
  Point b = meet(join(e2, p), join(e1, e3));
  return join(a, b);
}

namespace {

// Defining points of c that are not among `shared`.
std::vector<Point> residual_defining(const Conic& c, std::span<const Point, 3> shared) {
  std::vector<Point> out;
  for (const auto& p : c.defining_points())
    if (std::find(shared.begin(), shared.end(), p) == shared.end()) out.push_back(p);
  return out;
}

}  // namespace

Point fourth_intersection(const Conic& c1, const Conic& c2, std::span<const Point, 3> shared, RetryLog* log) {
  for (const auto& e : shared)
    if (!c1.contains(e) || !c2.contains(e))
      throw PreconditionError("fourth intersection: shared point " + to_string(e) + " is not on both conics");
  auto a = residual_defining(c1, shared);
  auto b = residual_defining(c2, shared);
  if (a.size() != 2 || b.size() != 2)
    throw PreconditionError("fourth intersection: each conic needs exactly two defining points besides the shared three");

  std::array<int, 3> order{0, 1, 2};
  std::string last_failure;
  do {
    const Point& e1 = shared[order[0]];
    const Point& e2 = shared[order[1]];
    const Point& e3 = shared[order[2]];
    std::string step = "cremona lines";
    try {
      Line l1 = cremona_line(a[0], e1, e2, e3);
      Line l2 = cremona_line(a[1], e1, e2, e3);
      Line l3 = cremona_line(b[0], e1, e2, e3);
      Line l4 = cremona_line(b[1], e1, e2, e3);
      step = "image of the first conic";
      Point phi1 = meet(l1, l2);
      step = "image of the second conic";
      Point phi2 = meet(l3, l4);
      step = "line through the conic images";
      Line l = join(phi1, phi2);
      step = "pull back to the plane";
      Point f = meet(l, join(e1, e3));
      Point g = meet(l, join(e2, e3));
      Point r = meet(join(f, e2), join(g, e1));
      if (!c1.contains(r) || !c2.contains(r)) {
        last_failure = "result " + to_string(r) + " is not on both conics";
      } else if (std::find(shared.begin(), shared.end(), r) != shared.end()) {
        last_failure = "result " + to_string(r) + " coincides with a shared point";
      } else {
        return r;
      }
    } catch (const GeometryError& e) {
      last_failure = step + ": " + e.what();
    }
    if (log) log->push_back("fourth intersection vertex order (" + std::to_string(order[0]) + std::to_string(order[1]) +
                            std::to_string(order[2]) + ") rejected: " + last_failure);
  } while (std::next_permutation(order.begin(), order.end()));
  throw ConstructionDegenerateError("fourth intersection is degenerate for every vertex order: " + last_failure);
}

std::vector<Point> auxiliary_candidates(const AuxiliaryOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Point> out;
  while (out.size() < static_cast<std::size_t>(std::max(options.max_candidates, 0))) {
    long x = static_cast<long>(rng() % 19) - 9;
    long y = static_cast<long>(rng() % 19) - 9;
    Point p(x, y, 1);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

Line radical_axis(const Conic& c1, const Conic& c2, const Point& u, const Point& v, const AuxiliaryOptions& options,
                  RetryLog* log) {
  for (const auto& k : {u, v})
    if (!c1.contains(k) || !c2.contains(k))
      throw PreconditionError("radical axis: " + to_string(k) + " is not on both conics");
  Line uv = join(u, v);
  std::vector<Point> centres;
  std::string last_failure = "no auxiliary candidates";
  for (const auto& aux : auxiliary_candidates(options)) {
    std::string why;
    if (c1.contains(aux) || c2.contains(aux)) {
      why = "lies on a conic";
    } else if (incident(aux, uv)) {
      why = "lies on the line through the shared points";
    } else {
      try {
        Point c = second_intersection(c1, u, aux);
        Point d = second_intersection(c2, u, aux);
        Point e = second_intersection(c1, v, aux);
        Point f = second_intersection(c2, v, aux);
        Point o = meet(join(c, e), join(d, f));
        if (!centres.empty() && centres[0] == o) {
          why = "repeats the first concurrency point";
        } else {
          centres.push_back(o);
          if (centres.size() == 2) return join(centres[0], centres[1]);
          continue;
        }
      } catch (const GeometryError& e) {
        why = e.what();
      }
    }
    last_failure = "auxiliary point " + to_string(aux) + " " + why;
    if (log) log->push_back("radical axis: " + last_failure);
  }
  throw ConstructionDegenerateError("radical axis: auxiliary points exhausted; last: " + last_failure);
}

PartitionScheme PartitionScheme::standard() {
  return PartitionScheme{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {2, 3, 4, 5, 6}, {0, 1, 7, 8, 9}};
}

namespace {

std::array<int, 5> complement(const std::array<int, 5>& s) {
  std::array<int, 5> out{};
  int k = 0;
  for (int i = 0; i < 10; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) out[k++] = i;
  return out;
}

}  // namespace

PartitionScheme PartitionScheme::from_sets(const std::vector<int>& s1, const std::vector<int>& t1) {
  auto check = [](std::vector<int> v, const char* name) {
    std::sort(v.begin(), v.end());
    if (v.size() != 5 || std::adjacent_find(v.begin(), v.end()) != v.end() || v.front() < 0 || v.back() > 9)
      throw InputError(std::string(name) + " must be five distinct indices in 0..9");
    std::array<int, 5> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return a;
  };
  PartitionScheme s;
  s.s1 = check(s1, "S1");
  s.t1 = check(t1, "T1");
  s.s2 = complement(s.s1);
  s.t2 = complement(s.t1);
  int shared = 0;
  for (int i : s.s1)
    if (std::find(s.t1.begin(), s.t1.end(), i) != s.t1.end()) ++shared;
  if (shared != 3) throw InputError("S1 and T1 must share exactly three points");
  return s;
}

std::vector<PartitionScheme> scheme_sequence(std::size_t limit) {
  std::vector<std::array<int, 5>> subsets;
  std::array<int, 10> mask{1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
  do {
    std::array<int, 5> s{};
    int k = 0;
    for (int i = 0; i < 10; ++i)
      if (mask[i]) s[k++] = i;
    subsets.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);

  std::vector<PartitionScheme> out;
  for (const auto& removed : pairs)
    for (const auto& added : pairs)
      for (const auto& s1 : subsets) {
        if (out.size() >= limit) return out;
        auto s2 = complement(s1);
        std::vector<int> t1;
        for (int k = 0; k < 5; ++k)
          if (k != removed.first && k != removed.second) t1.push_back(s1[k]);
        t1.push_back(s2[added.first]);
        t1.push_back(s2[added.second]);
        out.push_back(PartitionScheme::from_sets({s1.begin(), s1.end()}, t1));
      }
  return out;
}

std::vector<std::string> incidence_violations(const ConstructionTrace& t) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  auto pick = [&](const std::array<int, 5>& idx) {
    std::vector<Point> out;
    for (int i : idx) out.push_back(t.inputs.at(i));
    return out;
  };
  auto all_on = [](const Conic& c, const std::vector<Point>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return c.contains(p); });
  };
  expect(all_on(t.c1, pick(t.scheme.s1)), "S1 on C1");
  expect(all_on(t.c2, pick(t.scheme.s2)), "S2 on C2");
  expect(all_on(t.d1, pick(t.scheme.t1)), "T1 on D1");
  expect(all_on(t.d2, pick(t.scheme.t2)), "T2 on D2");
  expect(t.c1.contains(t.p1) && t.d1.contains(t.p1), "P1 on C1 and D1");
  expect(t.c2.contains(t.p2) && t.d2.contains(t.p2), "P2 on C2 and D2");
  expect(incident(t.p1, t.lp) && incident(t.p2, t.lp), "L_P through P1 and P2");
  expect(incident(t.p, t.lq) && incident(t.p, t.lr), "P = L_Q ∩ L_R");
  expect(incident(t.q, t.lp) && incident(t.q, t.lr), "Q = L_P ∩ L_R");
  expect(incident(t.r, t.lp) && incident(t.r, t.lq), "R = L_P ∩ L_Q");
  expect(t.c1.contains(t.g) && t.d1.contains(t.g), "G on C1 and D1");
  expect(t.c1.contains(t.w) && collinear(t.p, t.g, t.w), "W on C1 and PG");
  expect(t.d1.contains(t.z) && collinear(t.p, t.g, t.z), "Z on D1 and PG");
  expect(t.c1.contains(t.x) && incident(t.x, t.lp), "X on C1 and L_P");
  expect(t.d1.contains(t.y) && incident(t.y, t.lp), "Y on D1 and L_P");
  expect(collinear(t.w, t.x, t.u) && incident(t.u, t.lq), "U = WX ∩ L_Q");
  expect(collinear(t.y, t.z, t.v) && incident(t.v, t.lr), "V = YZ ∩ L_R");
  expect(t.collinearity == bracket(t.p2, t.u, t.v), "collinearity bracket");
  return bad;
}

namespace {

template <class Fn>
auto run_step(const std::string& name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const CoincidentConicsError&) {
    throw;
  } catch (const GeometryError& e) {
    throw ConstructionDegenerateError(name + ": " + e.what());
  }
}

std::vector<Point> select(std::span<const Point> points, const std::array<int, 5>& idx) {
  std::vector<Point> out;
  for (int i : idx) out.push_back(points[i]);
  return out;
}

std::vector<Point> intersect(std::span<const Point> points, const std::array<int, 5>& a, const std::array<int, 5>& b) {
  std::vector<Point> out;
  for (int i : a)
    if (std::find(b.begin(), b.end(), i) != b.end()) out.push_back(points[i]);
  return out;
}

Conic fit_irreducible(const std::vector<Point>& pts, const std::string& name) {
  return run_step("conic " + name, [&] {
    Conic c = fit_conic(std::span<const Point, 5>(pts.data(), 5));
    if (!c.is_irreducible()) throw ConstructionDegenerateError("conic " + name + " is reducible: " + to_string(c));
    return c;
  });
}

std::size_t bits(const Point& p) {
  return std::max({bit_size(p[0]), bit_size(p[1]), bit_size(p[2])});
}

}  // namespace

ConstructionTrace build_configuration(std::span<const Point> points, const PartitionScheme& scheme,
                                      const AuxiliaryOptions& options) {
  if (points.size() != 10) throw InputError("expected 10 points, got " + std::to_string(points.size()));
  RetryLog log;

  Conic c1 = fit_irreducible(select(points, scheme.s1), "C1 through S1");
  Conic c2 = fit_irreducible(select(points, scheme.s2), "C2 through S2");
  Conic d1 = fit_irreducible(select(points, scheme.t1), "D1 through T1");
  Conic d2 = fit_irreducible(select(points, scheme.t2), "D2 through T2");
  if (c1 == d1) throw CoincidentConicsError("C1 = D1: the seven points of S1 ∪ T1 lie on one conic");
  if (c2 == d2) throw CoincidentConicsError("C2 = D2: the seven points of S2 ∪ T2 lie on one conic");
  if (c1 == d2 || c2 == d1 || c1 == c2 || d1 == d2)
    throw ConstructionDegenerateError("two of the four conics coincide");

  auto s1t1 = intersect(points, scheme.s1, scheme.t1);
  auto s2t2 = intersect(points, scheme.s2, scheme.t2);
  auto s1t2 = intersect(points, scheme.s1, scheme.t2);
  auto s2t1 = intersect(points, scheme.s2, scheme.t1);

  Point p1 = run_step("P1 = fourth point of C1 ∩ D1", [&] {
    return fourth_intersection(c1, d1, std::span<const Point, 3>(s1t1.data(), 3), &log);
  });
  Point p2 = run_step("P2 = fourth point of C2 ∩ D2", [&] {
    return fourth_intersection(c2, d2, std::span<const Point, 3>(s2t2.data(), 3), &log);
  });
  Line lq = run_step("L_Q = radical axis of C1, D2",
                     [&] { return radical_axis(c1, d2, s1t2[0], s1t2[1], options, &log); });
  Line lr = run_step("L_R = radical axis of C2, D1",
                     [&] { return radical_axis(c2, d1, s2t1[0], s2t1[1], options, &log); });
  Line lp = run_step("L_P = P1P2", [&] { return join(p1, p2); });
  Point p = run_step("P = L_Q ∩ L_R", [&] { return meet(lq, lr); });
  Point q = run_step("Q = L_P ∩ L_R", [&] { return meet(lp, lr); });
  Point r = run_step("R = L_P ∩ L_Q", [&] { return meet(lp, lq); });

  Point g = run_step("choice of G", [&] {
    Line pp1 = join(p, p1);
    for (const auto& cand : s1t1)
      if (!incident(cand, pp1)) return cand;
    throw ConstructionDegenerateError("every point of S1 ∩ T1 lies on PP1");
  });
  Point w = run_step("W = PG ∩ C1", [&] { return second_intersection(c1, g, p, &log); });
  Point z = run_step("Z = PG ∩ D1", [&] { return second_intersection(d1, g, p, &log); });
  Point x = run_step("X = L_P ∩ C1", [&] { return second_intersection(c1, p1, p2, &log); });
  Point y = run_step("Y = L_P ∩ D1", [&] { return second_intersection(d1, p1, p2, &log); });
  Point u = run_step("U = XW ∩ L_Q", [&] { return meet(join(x, w), lq); });
  Point v = run_step("V = YZ ∩ L_R", [&] { return meet(join(y, z), lr); });

  ConstructionTrace t{.inputs = std::vector<Point>(points.begin(), points.end()),
                      .scheme = scheme,
                      .c1 = c1,
                      .c2 = c2,
                      .d1 = d1,
                      .d2 = d2,
                      .p1 = p1,
                      .p2 = p2,
                      .lp = lp,
                      .lq = lq,
                      .lr = lr,
                      .p = p,
                      .q = q,
                      .r = r,
                      .g = g,
                      .w = w,
                      .x = x,
                      .y = y,
                      .z = z,
                      .u = u,
                      .v = v,
                      .collinearity = bracket(p2, u, v),
                      .max_coordinate_bits = 0,
                      .log = std::move(log)};
  for (const Point* pt : {&t.p1, &t.p2, &t.p, &t.q, &t.r, &t.g, &t.w, &t.x, &t.y, &t.z, &t.u, &t.v})
    t.max_coordinate_bits = std::max(t.max_coordinate_bits, bits(*pt));
  return t;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::OnCubic:
      return "ON_CUBIC";
    case VerdictKind::NotOnCubic:
      return "NOT_ON_CUBIC";
    case VerdictKind::Degenerate:
      return "DEGENERATE";
  }
  return "DEGENERATE";
}

Verdict fallback_seven_on_conic(std::span<const Point> points, const Conic& conic7, std::span<const Point, 3> off) {
  if (!conic7.is_irreducible()) throw PreconditionError("fallback: the conic is reducible");
  std::size_t on = 0;
  for (const auto& p : points) {
    bool is_off = std::find(off.begin(), off.end(), p) != off.end();
    if (conic7.contains(p) == is_off)
      throw PreconditionError("fallback: " + to_string(p) + (is_off ? " is listed off the conic but lies on it"
                                                                    : " is neither on the conic nor listed off it"));
    if (!is_off) ++on;
  }
  for (const auto& p : off)
    if (std::find(points.begin(), points.end(), p) == points.end())
      throw PreconditionError("fallback: " + to_string(p) + " is not one of the input points");
  if (on != 7) throw PreconditionError("fallback needs exactly seven points on the conic, found " + std::to_string(on));
  if (collinear(off[0], off[1], off[2]))
    return {VerdictKind::OnCubic, "seven points on " + to_string(conic7) + " and the other three collinear"};
  return {VerdictKind::NotOnCubic, "seven points on " + to_string(conic7) + " and the other three not collinear"};
}

namespace {

// A conic through at least seven of the points, if any, and the verdict it implies.
std::optional<Verdict> seven_on_conic_verdict(std::span<const Point> points) {
  std::array<int, 10> mask{1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
  do {
    std::vector<Point> five;
    for (int i = 0; i < 10; ++i)
      if (mask[i]) five.push_back(points[i]);
    std::optional<Conic> c;
    try {
      c = fit_conic(std::span<const Point, 5>(five.data(), 5));
    } catch (const GeometryError&) {
      continue;
    }
    if (!c->is_irreducible()) continue;
    std::vector<Point> off;
    for (const auto& p : points)
      if (!c->contains(p)) off.push_back(p);
    if (off.size() > 3) continue;
    if (off.size() == 3) return fallback_seven_on_conic(points, *c, std::span<const Point, 3>(off.data(), 3));
    return Verdict{VerdictKind::OnCubic, std::to_string(10 - off.size()) + " points on " + to_string(*c) +
                                             "; the rest lie on a line"};
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return std::nullopt;
}

}  // namespace

CheckResult check_ten_on_cubic(std::span<const Point> points, const CheckOptions& options) {
  if (points.size() != 10) throw InputError("expected 10 points, got " + std::to_string(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw InputError("duplicate input point " + to_string(points[i]) + " at positions " + std::to_string(i + 1) +
                         " and " + std::to_string(j + 1));

  std::vector<PartitionScheme> schemes;
  if (options.first_scheme) schemes.push_back(*options.first_scheme);
  for (const auto& s : scheme_sequence(options.max_schemes)) {
    if (schemes.size() >= options.max_schemes) break;
    if (std::find(schemes.begin(), schemes.end(), s) == schemes.end()) schemes.push_back(s);
  }

  CheckResult result;
  std::string last_failure = "no partition scheme attempted";
  bool fallback_checked = false;
  auto try_fallback = [&]() -> bool {
    fallback_checked = true;
    if (auto v = seven_on_conic_verdict(points)) {
      result.verdict = *v;
      result.used_fallback = true;
      return true;
    }
    return false;
  };

  for (const auto& scheme : schemes) {
    ++result.schemes_tried;
    try {
      ConstructionTrace t = build_configuration(points, scheme, options.auxiliary);
      bool on = is_zero(t.collinearity);
      result.verdict = {on ? VerdictKind::OnCubic : VerdictKind::NotOnCubic,
                        on ? "P2, U and V are collinear" : "P2, U and V are not collinear"};
      result.trace = std::move(t);
      return result;
    } catch (const CoincidentConicsError& e) {
      last_failure = e.what();
      result.log.push_back("scheme " + std::to_string(result.schemes_tried) + ": " + last_failure);
      if (!fallback_checked && try_fallback()) return result;
    } catch (const ConstructionDegenerateError& e) {
      last_failure = e.what();
      result.log.push_back("scheme " + std::to_string(result.schemes_tried) + ": " + last_failure);
    }
  }
  if (!fallback_checked && try_fallback()) return result;
  result.verdict = {VerdictKind::Degenerate, "all " + std::to_string(result.schemes_tried) +
                                                 " partition schemes degenerate; last: " + last_failure};
  return result;
}

}  // namespace straightedge
