#include "disclosure/polygon.hpp"

namespace disclosure::geom {

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Polygon rectangle(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
  if (!(x0 < x1) || !(y0 < y1)) return {};
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

Polygon clip(const Polygon& poly, const Linear& f) {
  Polygon out;
  const std::size_t n = poly.size();
  auto emit = [&out](Point p) {
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % n];
    const Rational fc = f(cur);
    const Rational fn = f(nxt);
    if (fc.sign() >= 0) emit(cur);
    if ((fc.sign() > 0 && fn.sign() < 0) || (fc.sign() < 0 && fn.sign() > 0)) {
      const Rational t = fc / (fc - fn);
      emit({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  if (out.size() < 3 || area(out).is_zero()) return {};
  return out;
}

Rational area(const Polygon& poly) {
  Rational twice;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) twice += cross(poly[0], poly[i], poly[i + 1]);
  return twice / Rational(2);
}

Rational integrate(const Polygon& poly, const Linear& f) {
  Rational total;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const Rational tri = cross(poly[0], poly[i], poly[i + 1]) / Rational(2);
    total += tri * (f(poly[0]) + f(poly[i]) + f(poly[i + 1])) / Rational(3);
  }
  return total;
}

}  // namespace disclosure::geom
