#pragma once

#include <vector>

#include "disclosure/rational.hpp"

namespace disclosure::geom {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Convex polygon, counter-clockwise vertex order. May be empty.
using Polygon = std::vector<Point>;

/// alpha*x + beta*y + gamma, also used as the half-plane {f >= 0}.
struct Linear {
  Rational alpha, beta, gamma;
  Rational operator()(const Point& p) const { return alpha * p.x + beta * p.y + gamma; }
};

Polygon rectangle(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1);

/// Intersection with {f >= 0} (Sutherland-Hodgman, one edge). Result has no
/// repeated consecutive vertices; degenerate slivers collapse to empty.
Polygon clip(const Polygon& poly, const Linear& f);

Rational area(const Polygon& poly);

/// Exact integral of f over the polygon: fan triangulation, each triangle
/// contributing area times the mean of f at its vertices.
Rational integrate(const Polygon& poly, const Linear& f);

}  // namespace disclosure::geom
