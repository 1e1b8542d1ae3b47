#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace weitz {

/// Default tolerance for point identity and on-boundary tests.
inline constexpr double kTol = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ChartMismatch : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class ParameterError : public Error {
public:
  using Error::Error;
};

class RefinementError : public Error {
public:
  using Error::Error;
};

class NoPathError : public Error {
public:
  using Error::Error;
};

class FitError : public Error {
public:
  using Error::Error;
};

class OrientationError : public Error {
public:
  using Error::Error;
};

class SingularJacobian : public Error {
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Charts

enum class Hex : std::uint8_t { I, II };

inline Hex other(Hex h) { return h == Hex::I ? Hex::II : Hex::I; }

/// Identifies the Euclidean chart a coordinate pair lives in. Hexagon charts
/// belong to block (i, j) of a surface (1-based); a lone block uses (1, 1).
struct ChartId {
  enum class Kind : std::uint8_t { Plane, Hexagon, Sector, SectorPolar };

  Kind kind = Kind::Plane;
  int i = 0;
  int j = 0;
  Hex hex = Hex::I;

  static ChartId plane() { return {}; }
  static ChartId hexagon(int i, int j, Hex h) { return {Kind::Hexagon, i, j, h}; }
  static ChartId sector() { return {Kind::Sector, 0, 0, Hex::I}; }
  static ChartId sector_polar() { return {Kind::SectorPolar, 0, 0, Hex::I}; }

  friend bool operator==(const ChartId&, const ChartId&) = default;

  std::string str() const;
};

// ---------------------------------------------------------------------------
// Vectors and points

struct Vec2 {
  double dx = 0.0;
  double dy = 0.0;

  Vec2 operator+(Vec2 o) const { return {dx + o.dx, dy + o.dy}; }
  Vec2 operator-(Vec2 o) const { return {dx - o.dx, dy - o.dy}; }
  Vec2 operator-() const { return {-dx, -dy}; }
  Vec2 operator*(double s) const { return {dx * s, dy * s}; }
  Vec2 operator/(double s) const { return {dx / s, dy / s}; }
  Vec2& operator+=(Vec2 o) {
    dx += o.dx;
    dy += o.dy;
    return *this;
  }

  double dot(Vec2 o) const { return dx * o.dx + dy * o.dy; }
  double cross(Vec2 o) const { return dx * o.dy - dy * o.dx; }
  double norm() const { return std::hypot(dx, dy); }
  double norm2() const { return dx * dx + dy * dy; }

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dist(Vec2 a, Vec2 b) { return std::hypot(a.dx - b.dx, a.dy - b.dy); }

/// Coordinates in a named chart.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
  ChartId chart{};

  Vec2 xy() const { return {x, y}; }
  static Point2 at(Vec2 v, ChartId c) { return {v.dx, v.dy, c}; }

  /// Displacement q - p; throws ChartMismatch across charts.
  friend Vec2 operator-(const Point2& q, const Point2& p);
  friend Point2 operator+(const Point2& p, Vec2 v) { return {p.x + v.dx, p.y + v.dy, p.chart}; }
};

void require_same_chart(const Point2& p, const Point2& q);

double euclid_dist(const Point2& p, const Point2& q);

struct PolarPoint {
  double r = 1.0;
  double phi = 0.0;
};

Point2 polar_to_cart(PolarPoint p);
PolarPoint cart_to_polar(Vec2 v);

struct Frame {
  Vec2 e1;
  Vec2 e2;
  Point2 base;
};

// ---------------------------------------------------------------------------
// Rigid motions and 2x2 matrices

/// x -> R(angle) x + t on raw coordinates.
struct Motion {
  double c = 1.0;
  double s = 0.0;
  Vec2 t{};

  static Motion identity() { return {}; }
  static Motion translation(Vec2 t) { return {1.0, 0.0, t}; }
  static Motion rotation_about(Vec2 center, double angle);

  Vec2 apply(Vec2 p) const { return {c * p.dx - s * p.dy + t.dx, s * p.dx + c * p.dy + t.dy}; }
  Vec2 rotate(Vec2 v) const { return {c * v.dx - s * v.dy, s * v.dx + c * v.dy}; }

  /// (*this) after `inner`: x -> this(inner(x)).
  Motion compose(const Motion& inner) const;
  Motion inverse() const;
  double angle() const { return std::atan2(s, c); }
};

struct Mat2 {
  double a = 1.0, b = 0.0;  // row 0
  double c = 0.0, d = 1.0;  // row 1

  double det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Vec2 operator*(Vec2 v) const { return {a * v.dx + b * v.dy, c * v.dx + d * v.dy}; }
  double frobenius() const { return std::sqrt(a * a + b * b + c * c + d * d); }
  std::array<double, 2> singular_values() const;  // descending
};

// ---------------------------------------------------------------------------
// Polygons (raw chart coordinates, counterclockwise)

bool point_on_segment(Vec2 p, Vec2 a, Vec2 b, double tol = kTol);

/// Inside or on the boundary (within tol) of a simple polygon.
bool point_in_polygon(Vec2 p, std::span<const Vec2> poly, double tol = kTol);

/// Whether the closed segment [a, b] stays inside the closed polygon.
bool segment_in_polygon(Vec2 a, Vec2 b, std::span<const Vec2> poly, double tol = kTol);

/// Parameter t in [0,1] along [a,b] where it meets [c,d], if they cross at a
/// single point. Collinear overlaps report no crossing.
bool segment_crossing(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double& t, double tol = kTol);

double polygon_area(std::span<const Vec2> poly);

std::vector<Vec2> transform(std::span<const Vec2> poly, const Motion& m);

}  // namespace weitz
