#include "straightedge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace straightedge {

namespace {

struct Vec {
  double x, y;
};

std::optional<Vec> affine(const Point& p) {
  if (is_zero(p[2])) return std::nullopt;
  return Vec{Rational(p[0] / p[2]).get_d(), Rational(p[1] / p[2]).get_d()};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

/// World box to pixel frame, y pointing up.
class Frame {
 public:
  Frame(const std::vector<Vec>& pts, int width, int height) : w_(width), h_(height) {
    double x0 = pts.front().x, x1 = x0, y0 = pts.front().y, y1 = y0;
    for (const auto& p : pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    double span = std::max({x1 - x0, y1 - y0, 1.0});
    double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
    // Equal scale on both axes, 10% margin on each side.
    double half = span / 2 / 0.8;
    double aspect = static_cast<double>(w_) / h_;
    hx_ = aspect >= 1 ? half * aspect : half;
    hy_ = aspect >= 1 ? half : half / aspect;
    cx_ = cx;
    cy_ = cy;
  }

  Vec to_px(Vec p) const { return {(p.x - cx_ + hx_) / (2 * hx_) * w_, (cy_ + hy_ - p.y) / (2 * hy_) * h_}; }
  bool inside(Vec p, double slack = 0) const {
    return std::abs(p.x - cx_) <= hx_ * (1 + slack) && std::abs(p.y - cy_) <= hy_ * (1 + slack);
  }

  /// The part of ax + by + c = 0 inside the frame.
  std::optional<std::pair<Vec, Vec>> clip(double a, double b, double c) const {
    std::vector<Vec> hits;
    double xs[2] = {cx_ - hx_, cx_ + hx_}, ys[2] = {cy_ - hy_, cy_ + hy_};
    for (double x : xs)
      if (b != 0) {
        double y = -(a * x + c) / b;
        if (y >= ys[0] - 1e-9 && y <= ys[1] + 1e-9) hits.push_back({x, y});
      }
    for (double y : ys)
      if (a != 0) {
        double x = -(b * y + c) / a;
        if (x >= xs[0] - 1e-9 && x <= xs[1] + 1e-9) hits.push_back({x, y});
      }
    if (hits.size() < 2) return std::nullopt;
    std::sort(hits.begin(), hits.end(), [](Vec p, Vec q) { return p.x != q.x ? p.x < q.x : p.y < q.y; });
    return std::make_pair(hits.front(), hits.back());
  }

  /// Where the ray from the centre in direction d leaves the frame.
  Vec edge(Vec d) const {
    double t = std::numeric_limits<double>::infinity();
    if (d.x != 0) t = std::min(t, hx_ / std::abs(d.x));
    if (d.y != 0) t = std::min(t, hy_ / std::abs(d.y));
    return {cx_ + d.x * t, cy_ + d.y * t};
  }

 private:
  int w_, h_;
  double cx_ = 0, cy_ = 0, hx_ = 1, hy_ = 1;
};

std::vector<std::vector<Vec>> sample_conic(const Conic& c, const Frame& frame, int samples) {
  std::optional<Vec> base;
  for (const auto& p : c.defining_points())
    if ((base = affine(p))) break;
  if (!base) return {};
  const auto& k = c.coefficients();
  double a = k[0].get_d(), b = k[1].get_d(), cc = k[2].get_d(), d = k[3].get_d(), e = k[4].get_d();
  // Second intersection of the line through the base point in direction (cos θ, sin θ).
  std::vector<std::vector<Vec>> runs(1);
  for (int i = 0; i <= samples; ++i) {
    double th = std::numbers::pi * i / samples;
    double dx = std::cos(th), dy = std::sin(th);
    double qd = a * dx * dx + b * dx * dy + cc * dy * dy;
    double pol = a * base->x * dx + b * (base->x * dy + base->y * dx) / 2 + cc * base->y * dy + d * dx / 2 + e * dy / 2;
    bool ok = std::abs(qd) > 1e-12;
    Vec p{};
    if (ok) {
      double s = -2 * pol / qd;
      p = {base->x + s * dx, base->y + s * dy};
      ok = frame.inside(p, 3.0);
    }
    if (ok) runs.back().push_back(p);
    else if (!runs.back().empty()) runs.emplace_back();
  }
  // The parameter wraps around: θ = π meets θ = 0.
  if (runs.size() > 1 && !runs.front().empty() && !runs.back().empty()) {
    runs.back().insert(runs.back().end(), runs.front().begin(), runs.front().end());
    runs.erase(runs.begin());
  }
  std::erase_if(runs, [](const auto& r) { return r.size() < 2; });
  return runs;
}

}  // namespace

std::string render_svg(const ConstructionTrace& t, const SvgOptions& opt) {
  auto bad = incidence_violations(t);
  if (!bad.empty()) throw PreconditionError("cannot draw an inconsistent trace: " + bad.front());

  const std::pair<const char*, const Point*> named[] = {{"P₁", &t.p1}, {"P₂", &t.p2}, {"P", &t.p}, {"Q", &t.q},
                                                        {"R", &t.r},   {"W", &t.w},   {"X", &t.x}, {"Y", &t.y},
                                                        {"Z", &t.z},   {"U", &t.u},   {"V", &t.v}};
  std::vector<Vec> finite;
  for (const auto& p : t.inputs)
    if (auto v = affine(p)) finite.push_back(*v);
  for (const auto& [_, p] : named)
    if (auto v = affine(*p)) finite.push_back(*v);
  if (finite.empty()) finite.push_back({0, 0});
  Frame frame(finite, opt.width, opt.height);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\""
     << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"white\"/>\n";

  const std::pair<const char*, const Conic*> conics[] = {{"C1", &t.c1}, {"C2", &t.c2}, {"D1", &t.d1}, {"D2", &t.d2}};
  const char* conic_colour[] = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd"};
  os << "<g id=\"conics\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (int i = 0; i < 4; ++i) {
    os << "<g class=\"conic\" id=\"" << conics[i].first << "\" stroke=\"" << conic_colour[i] << "\">\n";
    for (const auto& run : sample_conic(*conics[i].second, frame, opt.conic_samples)) {
      os << "<polyline points=\"";
      for (std::size_t j = 0; j < run.size(); ++j) {
        Vec px = frame.to_px(run[j]);
        os << (j ? " " : "") << num(px.x) << "," << num(px.y);
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</g>\n";

  const std::pair<const char*, const Line*> lines[] = {{"L_P", &t.lp}, {"L_Q", &t.lq}, {"L_R", &t.lr}};
  os << "<g id=\"lines\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6,3\">\n";
  for (const auto& [name, l] : lines) {
    auto seg = frame.clip((*l)[0].get_d(), (*l)[1].get_d(), (*l)[2].get_d());
    if (!seg) continue;
    Vec a = frame.to_px(seg->first), b = frame.to_px(seg->second);
    os << "<line class=\"line\" id=\"" << name << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
       << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  os << "</g>\n";

  auto marker = [&](const Point& p, const std::string& label, const char* cls, const char* fill) {
    if (auto v = affine(p)) {
      Vec px = frame.to_px(*v);
      os << "<circle class=\"" << cls << "\" cx=\"" << num(px.x) << "\" cy=\"" << num(px.y) << "\" r=\"4\" fill=\""
         << fill << "\"/>\n"
         << "<text class=\"label " << cls << "\" x=\"" << num(px.x + 6) << "\" y=\"" << num(px.y - 6)
         << "\" font-size=\"13\">" << escape(label) << "</text>\n";
      return;
    }
    // Direction arrow towards the point at infinity.
    double dx = p[0].get_d(), dy = p[1].get_d();
    double n = std::hypot(dx, dy);
    Vec d{dx / n, dy / n};
    Vec tip = frame.to_px(frame.edge(d));
    Vec dir{d.x, -d.y};
    Vec tail{tip.x - 40 * dir.x, tip.y - 40 * dir.y};
    Vec l{tip.x - 10 * dir.x - 5 * dir.y, tip.y - 10 * dir.y + 5 * dir.x};
    Vec r{tip.x - 10 * dir.x + 5 * dir.y, tip.y - 10 * dir.y - 5 * dir.x};
    os << "<g class=\"at-infinity\">\n"
       << "<line x1=\"" << num(tail.x) << "\" y1=\"" << num(tail.y) << "\" x2=\"" << num(tip.x) << "\" y2=\""
       << num(tip.y) << "\" stroke=\"" << fill << "\" stroke-width=\"2\"/>\n"
       << "<polygon points=\"" << num(tip.x) << "," << num(tip.y) << " " << num(l.x) << "," << num(l.y) << " "
       << num(r.x) << "," << num(r.y) << "\" fill=\"" << fill << "\"/>\n"
       << "<text class=\"label " << cls << "\" x=\"" << num(tail.x - 12 * dir.x) << "\" y=\""
       << num(tail.y - 12 * dir.y) << "\" font-size=\"13\">" << escape(label) << " (∞)</text>\n"
       << "</g>\n";
  };

  os << "<g id=\"inputs\">\n";
  for (std::size_t i = 0; i < t.inputs.size(); ++i) marker(t.inputs[i], "K" + std::to_string(i + 1), "input", "black");
  os << "</g>\n<g id=\"construction\">\n";
  for (const auto& [label, p] : named) marker(*p, label, "construction", "#e377c2");
  os << "</g>\n</svg>\n";
  return os.str();
}

void emit_svg(const ConstructionTrace& trace, const std::filesystem::path& path, const SvgOptions& options) {
  std::string doc = render_svg(trace, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace straightedge
