#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weitz/sector.hpp"
#include "weitz/surface.hpp"

namespace weitz {

/// Polar grid r_i = R0 + (i-1) dR, phi_j = (j-1) dphi, 1 <= i, j <= n+1.
struct SectorPartition {
  int n = 1;
  double r0 = 0.0;
  double r1 = 0.0;
  double dr = 0.0;
  double dphi = 0.0;
  std::vector<double> r;    // r[k] = r_{k+1}
  std::vector<double> phi;  // phi[k] = phi_{k+1}

  /// 1-based sub-sector containing p (upper/right cell on shared lines).
  std::pair<int, int> cell_of(PolarPoint p) const;
};

SectorPartition partition(const Sector& s, int n);

enum class ErrorKind : std::uint8_t { Frame, Rigidity, Metric, Volume };

/// Pointwise errors of a Jacobian written between orthonormal frames.
double frame_error(const Mat2& jon);
double rigidity_error(const Mat2& jon);
double metric_error(const Mat2& jon);
double volume_error(const Mat2& jon);
double pointwise_error(ErrorKind kind, const Mat2& jon);

/// Distance from J (polar columns d_r, d_phi) to the rotations, after
/// rescaling to the orthonormal frame (d_r, r^-1 d_phi) at p.
double dist_to_rigid(const Mat2& j, PolarPoint p);

/// The piecewise map from the sector onto the grid surface.
///
/// Internally points are addressed by u = r - R0 and s = R0 phi, in which
/// the metric reads du^2 + (1 + k u)^2 ds^2 with k = eps/(ab); this also
/// covers eps = 0, where the sector degenerates to the a x b rectangle.
class FnMap {
public:
  explicit FnMap(const GridParams& params);

  const GridParams& params() const { return params_; }
  int n() const { return params_.n; }
  bool flat() const { return !sector_.has_value(); }
  const Sector& sector() const;
  const SectorPartition& grid() const;

  /// Dimensionless band parameter dphi_n / (2 tan theta).
  double D() const { return D_; }
  /// Radial width of the transition band, D * dR_n.
  double band_width() const { return band_; }

  SurfacePoint eval(PolarPoint p) const;
  SurfacePoint eval_local(double u, double s) const;
  PolarPoint inverse(const SurfacePoint& q) const;
  std::array<double, 2> inverse_local(const SurfacePoint& q) const;

  struct Jacobian {
    Mat2 j;                    // d(X, Y) / d(r, phi)
    bool on_boundary = false;  // p on a branch line: one-sided value
  };
  Jacobian jacobian(PolarPoint p) const;
  /// Jacobian between the orthonormal frames at local point (u, s).
  Mat2 jacobian_on(double u, double s) const;

  /// Pullback of (d_X, d_Y), in (d_r, d_phi) components.
  Frame pullback_frame(PolarPoint p) const;

  /// Sum of |F* E_n - E|_g over both frame legs at p.
  double frame_error_at(PolarPoint p) const;

  // local geometry
  double du() const { return du_; }
  double ds() const { return ds_; }
  double kappa() const { return kappa_; }
  double sigma(int i, double u) const;  // rho / R0 along column i
  double sigma_slope(int i, double u) const;

private:
  GridParams params_;
  std::optional<Sector> sector_;
  std::optional<SectorPartition> grid_;
  double kappa_ = 0.0;
  double du_ = 0.0;
  double ds_ = 0.0;
  double D_ = 0.0;
  double band_ = 0.0;
};

/// Midpoint-rule integral over the sector of the pointwise error to the
/// p-th power, m x m points on every smooth piece.
double lp_error(const FnMap& f, ErrorKind kind, double p_exp = 2.0, int m = 16);
/// Maximum of the pointwise error over the same quadrature nodes.
double sup_error(const FnMap& f, ErrorKind kind, int m = 16);
double volume_ratio_sup(const FnMap& f, int m = 16);

/// Boundary samples of sub-sector (i, j), counterclockwise from its
/// inner-left corner, k per edge, as local polar points (r, phi - phi_j).
std::vector<PolarPoint> cell_boundary_samples(const Sector& cell, int k);

/// Largest |d_cell(p,q) - d_block(T p, T q)| over boundary sample pairs.
double per_block_distortion(const GridParams& g, int i, int j, int sample_k);
/// Maximum over all blocks.
double max_block_distortion(const GridParams& g, int sample_k);

/// The two maps through the rectangle R(a, b) = [R0, R0 + b] x [0, a]
/// whose composition restricted to the cell boundary inverts T_{n,i,j}.
struct AppendixMaps {
  Block block;
  Sector cell;

  /// Block -> rectangle, rescaling each hexagon column to height a/2.
  Vec2 S(const BlockPoint& p) const;
  /// Rectangle -> sector, Cartesian.
  Vec2 S_prime(Vec2 xy) const;
  PolarPoint S_prime_polar(Vec2 xy) const;
};

AppendixMaps appendix_maps(const GridParams& g, int i, int j);

/// Sub-sectors met by a polyline, in order, repeats removed.
std::vector<std::pair<int, int>> sector_cell_sequence(const SectorPartition& part,
                                                      std::span<const PolarPoint> path);
int cells_crossed(const SectorPartition& part, std::span<const PolarPoint> path);

}  // namespace weitz
