#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newtonlab/rational.hpp"

namespace newtonlab {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Newton polygon of height 2g, stored as its slope multiset sorted ascending.
// Every slope lies in [0,1] and multiplicity(s) == multiplicity(1 - s).
class NewtonPolygon {
 public:
  NewtonPolygon() = default;

  // Throws SlopeOutOfRange / NotSymmetric.
  static NewtonPolygon from_slopes(std::vector<Rational> slopes);
  // Parses the canonical comma-separated form; the empty string is the empty
  // polygon.
  static NewtonPolygon parse(std::string_view text);

  std::span<const Rational> slopes() const { return slopes_; }
  std::int64_t height() const { return static_cast<std::int64_t>(slopes_.size()); }
  std::int64_t genus() const { return height() / 2; }
  bool empty() const { return slopes_.empty(); }
  std::int64_t multiplicity(const Rational& s) const;

  // Breakpoints including both endpoints; collinear runs merged.
  std::vector<Point> vertices() const;
  // Values f(0), f(1), ..., f(2g).
  std::vector<Rational> integer_values() const;

  // Canonical serialization, e.g. "0,0,1/2,1/2,1,1".
  std::string str() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  explicit NewtonPolygon(std::vector<Rational> sorted) : slopes_(std::move(sorted)) {}
  std::vector<Rational> slopes_;
};

// `copies` concatenated copies of `block`.
std::vector<Rational> repeat_slopes(std::span<const Rational> block, std::int64_t copies);

// Convex symmetric graph on [0,2] from (0,0) to (2,1): either piecewise-linear
// through a vertex list or the parabola y = x^2/4.
class BasicGraph {
 public:
  // Validates endpoints, strictly increasing x, convexity and symmetry.
  // Collinear interior vertices are dropped.
  static BasicGraph piecewise_linear(std::vector<Point> vertices);
  static BasicGraph parabola();

  bool is_parabola() const { return parabola_; }
  // Empty for the parabola.
  std::span<const Point> vertices() const { return vertices_; }

  friend bool operator==(const BasicGraph&, const BasicGraph&) = default;

 private:
  BasicGraph() = default;
  bool parabola_ = false;
  std::vector<Point> vertices_;
};

// DomainError outside [0, 2g] / [0, 2].
Rational evaluate(const NewtonPolygon& p, const Rational& x);
Rational evaluate(const BasicGraph& g, const Rational& x);

// f1(x) >= f2(x) on the whole common domain. DomainMismatch on differing
// heights.
bool lies_above(const NewtonPolygon& upper, const NewtonPolygon& lower);
bool lies_above(const BasicGraph& upper, const BasicGraph& lower);

NewtonPolygon amalgamate(const NewtonPolygon& a, const NewtonPolygon& b);

// The polygon scaled by 1/g. EmptyPolygon on height 0.
BasicGraph scaled(const NewtonPolygon& p);

struct LatticeCount {
  std::int64_t count = 0;
  // All vertices integral, so the count is the codimension rather than a
  // lower bound.
  bool exact_codimension = false;
};

// #{(x, y) in Z>=0 x Z>=0 : 0 <= x <= g, y < f(x)} by direct enumeration.
LatticeCount lattice_points_below(const NewtonPolygon& p);

// min over [0,2] of g(x) - r(x); `g` must be piecewise-linear.
Rational min_gap(const BasicGraph& g, const BasicGraph& r);

}  // namespace newtonlab
