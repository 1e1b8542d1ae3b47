#include "weitz/geometry.hpp"

#include <algorithm>

namespace weitz {

std::string ChartId::str() const {
  switch (kind) {
    case Kind::Plane:
      return "plane";
    case Kind::Hexagon:
      return std::string("hex") + (hex == Hex::I ? "I" : "II") + "(" + std::to_string(i) + "," +
             std::to_string(j) + ")";
    case Kind::Sector:
      return "sector";
    case Kind::SectorPolar:
      return "sector-polar";
  }
  return "?";
}

void require_same_chart(const Point2& p, const Point2& q) {
  if (!(p.chart == q.chart)) {
    throw ChartMismatch("points live in different charts: " + p.chart.str() + " vs " + q.chart.str());
  }
}

Vec2 operator-(const Point2& q, const Point2& p) {
  require_same_chart(p, q);
  return {q.x - p.x, q.y - p.y};
}

double euclid_dist(const Point2& p, const Point2& q) { return (q - p).norm(); }

Point2 polar_to_cart(PolarPoint p) {
  return {p.r * std::cos(p.phi), p.r * std::sin(p.phi), ChartId::sector()};
}

PolarPoint cart_to_polar(Vec2 v) { return {v.norm(), std::atan2(v.dy, v.dx)}; }

Motion Motion::rotation_about(Vec2 center, double angle) {
  Motion m{std::cos(angle), std::sin(angle), {}};
  m.t = center - m.rotate(center);
  return m;
}

Motion Motion::compose(const Motion& inner) const {
  Motion m;
  m.c = c * inner.c - s * inner.s;
  m.s = s * inner.c + c * inner.s;
  m.t = apply(inner.t);
  return m;
}

Motion Motion::inverse() const {
  Motion m{c, -s, {}};
  m.t = -m.rotate(t);
  return m;
}

Mat2 Mat2::inverse() const {
  const double dt = det();
  if (dt == 0.0) {
    throw SingularJacobian("singular 2x2 matrix");
  }
  return {d / dt, -b / dt, -c / dt, a / dt};
}

std::array<double, 2> Mat2::singular_values() const {
  const double sum = a * a + b * b + c * c + d * d;
  const double dt = det();
  const double disc = std::sqrt(std::max(0.0, sum * sum - 4.0 * dt * dt));
  const double s1 = std::sqrt(0.5 * (sum + disc));
  const double s2 = s1 > 0.0 ? std::abs(dt) / s1 : 0.0;
  return {s1, s2};
}

bool point_on_segment(Vec2 p, Vec2 a, Vec2 b, double tol) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm2();
  if (len2 == 0.0) {
    return dist(p, a) <= tol;
  }
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return dist(p, a + ab * t) <= tol;
}

bool point_in_polygon(Vec2 p, std::span<const Vec2> poly, double tol) {
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (point_on_segment(p, poly[k], poly[(k + 1) % n], tol)) {
      return true;
    }
  }
  bool inside = false;
  for (std::size_t k = 0, l = n - 1; k < n; l = k++) {
    const Vec2 u = poly[k];
    const Vec2 v = poly[l];
    if ((u.dy > p.dy) != (v.dy > p.dy)) {
      const double x = u.dx + (p.dy - u.dy) * (v.dx - u.dx) / (v.dy - u.dy);
      if (p.dx < x) {
        inside = !inside;
      }
    }
  }
  return inside;
}

bool segment_in_polygon(Vec2 a, Vec2 b, std::span<const Vec2> poly, double tol) {
  if (!point_in_polygon(a, poly, tol) || !point_in_polygon(b, poly, tol)) {
    return false;
  }
  const Vec2 ab = b - a;
  const double len = ab.norm();
  if (len <= tol) {
    return true;
  }
  std::vector<double> ts{0.0, 1.0};
  auto push = [&](double t) {
    if (t > 0.0 && t < 1.0) {
      ts.push_back(t);
    }
  };
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 u = poly[k];
    const Vec2 v = poly[(k + 1) % n];
    const Vec2 uv = v - u;
    // vertices touching the segment split it
    if (point_on_segment(u, a, b, tol)) {
      push((u - a).dot(ab) / (len * len));
    }
    const double den = ab.cross(uv);
    if (std::abs(den) > 1e-14 * len * uv.norm()) {
      const double t = (u - a).cross(uv) / den;
      const double s = (u - a).cross(ab) / den;
      if (s >= 0.0 && s <= 1.0) {
        push(t);
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    if ((ts[k + 1] - ts[k]) * len <= tol) {
      continue;
    }
    const Vec2 mid = a + ab * (0.5 * (ts[k] + ts[k + 1]));
    if (!point_in_polygon(mid, poly, tol)) {
      return false;
    }
  }
  return true;
}

bool segment_crossing(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double& t, double tol) {
  const Vec2 ab = b - a;
  const Vec2 cd = d - c;
  const double den = ab.cross(cd);
  const double lab = ab.norm();
  const double lcd = cd.norm();
  if (lab == 0.0 || lcd == 0.0 || std::abs(den) <= 1e-14 * lab * lcd) {
    return false;
  }
  t = (c - a).cross(cd) / den;
  const double s = (c - a).cross(ab) / den;
  const double ta = tol / lab;
  const double sc = tol / lcd;
  if (t < -ta || t > 1.0 + ta || s < -sc || s > 1.0 + sc) {
    return false;
  }
  t = std::clamp(t, 0.0, 1.0);
  return true;
}

double polygon_area(std::span<const Vec2> poly) {
  double twice = 0.0;
  for (std::size_t k = 0, n = poly.size(); k < n; ++k) {
    twice += poly[k].cross(poly[(k + 1) % n]);
  }
  return 0.5 * twice;
}

std::vector<Vec2> transform(std::span<const Vec2> poly, const Motion& m) {
  std::vector<Vec2> out;
  out.reserve(poly.size());
  for (const Vec2& v : poly) {
    out.push_back(m.apply(v));
  }
  return out;
}

}  // namespace weitz
