#include "newtonlab/polygon.hpp"

#include <algorithm>
#include <set>

namespace newtonlab {
namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);

Rational parabola_at(const Rational& x) { return x * x / Rational(4); }

Rational segment_slope(const Point& a, const Point& b) { return (b.y - a.y) / (b.x - a.x); }

// Drops interior vertices lying on the segment through their neighbours.
std::vector<Point> merge_collinear(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const Point& pt : pts) {
    while (out.size() >= 2 &&
           segment_slope(out[out.size() - 2], out.back()) == segment_slope(out.back(), pt)) {
      out.pop_back();
    }
    out.push_back(pt);
  }
  return out;
}

Rational evaluate_pl(std::span<const Point> v, const Rational& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x,
                             [](const Point& p, const Rational& t) { return p.x < t; });
  if (it->x == x) return it->y;
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lo.y + (x - lo.x) * segment_slope(lo, hi);
}

void check_unit_interval(const Rational& x, const Rational& upper) {
  if (x < kZero || x > upper) {
    fail(ErrorCode::DomainError, "x=" + x.str() + " outside [0," + upper.str() + "]");
  }
}

}  // namespace

NewtonPolygon NewtonPolygon::from_slopes(std::vector<Rational> slopes) {
  for (const Rational& s : slopes) {
    if (s < kZero || s > kOne) fail(ErrorCode::SlopeOutOfRange, "slope " + s.str());
  }
  std::sort(slopes.begin(), slopes.end());
  const std::size_t n = slopes.size();
  if (n % 2 != 0) fail(ErrorCode::NotSymmetric, "odd slope count " + std::to_string(n));
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (slopes[i] + slopes[n - 1 - i] != kOne) {
      fail(ErrorCode::NotSymmetric,
           "multiplicity of " + slopes[i].str() + " differs from that of " +
               (kOne - slopes[i]).str());
    }
  }
  Rational sum;
  for (const Rational& s : slopes) sum += s;
  if (sum != Rational(static_cast<std::int64_t>(n / 2))) {
    fail(ErrorCode::NotSymmetric, "slope sum " + sum.str() + " != g");
  }
  return NewtonPolygon(std::move(slopes));
}

NewtonPolygon NewtonPolygon::parse(std::string_view text) {
  std::vector<Rational> slopes;
  if (text.empty()) return NewtonPolygon();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    slopes.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_slopes(std::move(slopes));
}

std::int64_t NewtonPolygon::multiplicity(const Rational& s) const {
  auto [lo, hi] = std::equal_range(slopes_.begin(), slopes_.end(), s);
  return hi - lo;
}

std::vector<Rational> NewtonPolygon::integer_values() const {
  std::vector<Rational> values;
  values.reserve(slopes_.size() + 1);
  Rational acc;
  values.push_back(acc);
  for (const Rational& s : slopes_) {
    acc += s;
    values.push_back(acc);
  }
  return values;
}

std::vector<Point> NewtonPolygon::vertices() const {
  const std::vector<Rational> values = integer_values();
  std::vector<Point> pts;
  pts.push_back({kZero, kZero});
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i] != slopes_[i - 1]) {
      pts.push_back({Rational(static_cast<std::int64_t>(i)), values[i]});
    }
  }
  if (!slopes_.empty()) pts.push_back({Rational(height()), values.back()});
  return pts;
}

std::string NewtonPolygon::str() const {
  std::string out;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    if (i) out += ',';
    out += slopes_[i].str();
  }
  return out;
}

std::vector<Rational> repeat_slopes(std::span<const Rational> block, std::int64_t copies) {
  std::vector<Rational> out;
  if (copies <= 0) return out;
  out.reserve(block.size() * static_cast<std::size_t>(copies));
  for (std::int64_t c = 0; c < copies; ++c) out.insert(out.end(), block.begin(), block.end());
  return out;
}

BasicGraph BasicGraph::piecewise_linear(std::vector<Point> vertices) {
  if (vertices.size() < 2 || vertices.front() != Point{kZero, kZero} ||
      vertices.back() != Point{kTwo, kOne}) {
    fail(ErrorCode::DomainError, "basic graph must run from (0,0) to (2,1)");
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!(vertices[i - 1].x < vertices[i].x)) {
      fail(ErrorCode::DomainError, "basic graph x-coordinates must increase strictly");
    }
  }
  for (std::size_t i = 2; i < vertices.size(); ++i) {
    if (segment_slope(vertices[i - 2], vertices[i - 1]) >
        segment_slope(vertices[i - 1], vertices[i])) {
      fail(ErrorCode::DomainError, "basic graph is not convex");
    }
  }
  BasicGraph g;
  g.vertices_ = merge_collinear(vertices);
  for (const Point& v : g.vertices_) {
    if (evaluate_pl(g.vertices_, kTwo - v.x) != v.y + kOne - v.x) {
      fail(ErrorCode::NotSymmetric, "basic graph is not symmetric at x=" + v.x.str());
    }
  }
  return g;
}

BasicGraph BasicGraph::parabola() {
  BasicGraph g;
  g.parabola_ = true;
  return g;
}

Rational evaluate(const NewtonPolygon& p, const Rational& x) {
  check_unit_interval(x, Rational(p.height()));
  const std::int64_t whole = x.floor();
  Rational acc;
  auto slopes = p.slopes();
  for (std::int64_t i = 0; i < whole; ++i) acc += slopes[static_cast<std::size_t>(i)];
  const Rational frac = x - Rational(whole);
  if (frac != kZero) acc += frac * slopes[static_cast<std::size_t>(whole)];
  return acc;
}

Rational evaluate(const BasicGraph& g, const Rational& x) {
  check_unit_interval(x, kTwo);
  if (g.is_parabola()) return parabola_at(x);
  return evaluate_pl(g.vertices(), x);
}

bool lies_above(const NewtonPolygon& upper, const NewtonPolygon& lower) {
  if (upper.height() != lower.height()) {
    fail(ErrorCode::DomainMismatch, "heights " + std::to_string(upper.height()) + " and " +
                                        std::to_string(lower.height()));
  }
  // Both are linear on every [i-1, i], so integer points suffice.
  const auto a = upper.integer_values();
  const auto b = lower.integer_values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

bool lies_above(const BasicGraph& upper, const BasicGraph& lower) {
  if (upper.is_parabola() && lower.is_parabola()) return true;
  if (!upper.is_parabola() && !lower.is_parabola()) {
    return min_gap(upper, lower) >= kZero;
  }
  if (!upper.is_parabola()) {
    // Linear minus convex is concave on each segment: minimum at a vertex.
    for (const Point& v : upper.vertices()) {
      if (v.y < parabola_at(v.x)) return false;
    }
    return true;
  }
  // x^2/4 - (a x + b) is convex on each segment with critical point x = 2a.
  auto v = lower.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Rational a = segment_slope(v[i - 1], v[i]);
    Rational candidates[3] = {v[i - 1].x, v[i].x, a * kTwo};
    for (const Rational& x : candidates) {
      if (x < v[i - 1].x || x > v[i].x) continue;
      const Rational line = v[i - 1].y + (x - v[i - 1].x) * a;
      if (parabola_at(x) < line) return false;
    }
  }
  return true;
}

NewtonPolygon amalgamate(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<Rational> slopes(a.slopes().begin(), a.slopes().end());
  slopes.insert(slopes.end(), b.slopes().begin(), b.slopes().end());
  return NewtonPolygon::from_slopes(std::move(slopes));
}

BasicGraph scaled(const NewtonPolygon& p) {
  if (p.empty()) fail(ErrorCode::EmptyPolygon, "cannot scale a height-0 polygon");
  const Rational inv_g = Rational(1) / Rational(p.genus());
  std::vector<Point> pts;
  for (const Point& v : p.vertices()) pts.push_back({v.x * inv_g, v.y * inv_g});
  return BasicGraph::piecewise_linear(std::move(pts));
}

LatticeCount lattice_points_below(const NewtonPolygon& p) {
  LatticeCount out;
  const auto values = p.integer_values();
  for (std::int64_t x = 0; x <= p.genus(); ++x) {
    const Rational& fx = values[static_cast<std::size_t>(x)];
    for (std::int64_t y = 0; Rational(y) < fx; ++y) ++out.count;
  }
  out.exact_codimension = true;
  for (const Point& v : p.vertices()) {
    if (!v.y.is_integer()) out.exact_codimension = false;
  }
  return out;
}

Rational min_gap(const BasicGraph& g, const BasicGraph& r) {
  if (g.is_parabola()) fail(ErrorCode::DomainError, "min_gap needs a piecewise-linear graph");
  std::set<Rational> xs;
  for (const Point& v : g.vertices()) xs.insert(v.x);
  for (const Point& v : r.vertices()) xs.insert(v.x);
  bool first = true;
  Rational best;
  for (const Rational& x : xs) {
    const Rational gap = evaluate(g, x) - evaluate(r, x);
    if (first || gap < best) best = gap;
    first = false;
  }
  return best;
}

}  // namespace newtonlab
