#pragma once

#include <string>
#include <vector>

#include "weitz/block.hpp"

namespace weitz {

struct GridValues {
  double a_ni = 0.0;
  double b_n = 0.0;
  double eps_n = 0.0;
};

/// Per-column block sizes of the n x n grid.
GridValues grid_params(double a, double b, double eps, int n, int i);

struct GridParams {
  double a = 1.0;
  double b = 1.0;
  double eps = 0.1;
  double theta = kPi / 6.0;
  int n = 1;

  BlockParams block(int i) const;
  void validate() const;
};

/// A point of block (i, j), 1-based; i counts columns (left to right),
/// j counts rows (bottom to top).
struct SurfacePoint {
  int i = 1;
  int j = 1;
  BlockPoint bp{};

  ChartId chart() const { return ChartId::hexagon(i, j, bp.hex); }
};

/// An identification of a segment of chart `from` with a segment of chart
/// `to`; `motion` maps `from` coordinates onto `to` coordinates.
struct Gluing {
  ChartId from;
  ChartId to;
  Motion motion;
  std::array<Vec2, 2> segment;  // in `from` coordinates
};

class Surface {
public:
  explicit Surface(const GridParams& params);

  const GridParams& params() const { return params_; }
  int n() const { return params_.n; }
  const Block& block(int i, int j) const;
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Every identification, listed once in each direction.
  const std::vector<Gluing>& gluings() const { return gluings_; }

  bool contains(const SurfacePoint& p, double tol = kTol) const;
  /// All chart representations of the same surface point, starting with p.
  std::vector<SurfacePoint> representations(const SurfacePoint& p, double tol = kTol) const;

  /// (n+1)^2 block corners; vertex (I, J) sits at index J*(n+1) + I.
  std::vector<SurfacePoint> net_vertices() const;
  SurfacePoint net_vertex(int I, int J) const;

  /// (left, bottom, right, top) outer boundary lengths.
  std::array<double, 4> boundary_lengths() const;
  double area() const;

  std::string summary_json() const;

private:
  void add_gluing(ChartId from, ChartId to, const Motion& m, std::array<Vec2, 2> seg);

  GridParams params_;
  std::vector<Block> blocks_;
  std::vector<Gluing> gluings_;
};

Surface build_surface(const GridParams& params);

std::vector<SurfacePoint> net_vertices(const Surface& s);

}  // namespace weitz
