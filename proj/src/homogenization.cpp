#include "weitz/homogenization.hpp"

#include <algorithm>
#include <cmath>

#include "weitz/parallel.hpp"

namespace weitz {

namespace {

int grid_index(double x, int n) {
  // x in cell units; exact grid lines (up to rounding) go to the upper cell
  const double near = std::round(x);
  const double k = std::abs(x - near) < 1e-9 ? near : std::floor(x);
  return std::clamp(static_cast<int>(k) + 1, 1, n);
}

}  // namespace

std::pair<int, int> SectorPartition::cell_of(PolarPoint p) const {
  return {grid_index((p.r - r0) / dr, n), grid_index(p.phi / dphi, n)};
}

SectorPartition partition(const Sector& s, int n) {
  if (n < 1) {
    throw ParameterError("partition requires n >= 1");
  }
  SectorPartition p;
  p.n = n;
  p.r0 = s.r0();
  p.r1 = s.r1();
  p.dr = s.b() / n;
  p.dphi = s.total_angle() / n;
  for (int k = 0; k <= n; ++k) {
    p.r.push_back(k == n ? s.r1() : s.r0() + k * p.dr);
    p.phi.push_back(k == n ? s.total_angle() : k * p.dphi);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Pointwise errors

double frame_error(const Mat2& jon) {
  const Mat2 inv = jon.inverse();
  return std::hypot(inv.a - 1.0, inv.c) + std::hypot(inv.b, inv.d - 1.0);
}

double rigidity_error(const Mat2& jon) {
  if (!(jon.det() > 0.0)) {
    throw OrientationError("Jacobian does not preserve orientation");
  }
  const auto sv = jon.singular_values();
  return std::hypot(sv[0] - 1.0, sv[1] - 1.0);
}

double metric_error(const Mat2& jon) {
  const Mat2 g = jon.transpose() * jon;
  return (g - Mat2{}).frobenius();
}

double volume_error(const Mat2& jon) { return std::abs(jon.det() - 1.0); }

double pointwise_error(ErrorKind kind, const Mat2& jon) {
  switch (kind) {
    case ErrorKind::Frame: return frame_error(jon);
    case ErrorKind::Rigidity: return rigidity_error(jon);
    case ErrorKind::Metric: return metric_error(jon);
    case ErrorKind::Volume: return volume_error(jon);
  }
  return 0.0;
}

double dist_to_rigid(const Mat2& j, PolarPoint p) {
  return rigidity_error(j * Mat2{1.0, 0.0, 0.0, 1.0 / p.r});
}

// ---------------------------------------------------------------------------
// F_n

FnMap::FnMap(const GridParams& params) : params_(params) {
  params_.validate();
  const int n = params_.n;
  du_ = params_.b / n;
  ds_ = params_.a / n;
  if (params_.eps > 0.0) {
    sector_.emplace(params_.a, params_.b, params_.eps);
    grid_.emplace(partition(*sector_, n));
    kappa_ = params_.eps / (params_.a * params_.b);
    D_ = grid_->dphi / (2.0 * std::tan(params_.theta));
    band_ = D_ * du_;
  }
}

const Sector& FnMap::sector() const {
  if (!sector_) {
    throw DomainError("flat grid has no limit sector");
  }
  return *sector_;
}

const SectorPartition& FnMap::grid() const {
  if (!grid_) {
    throw DomainError("flat grid has no sector partition");
  }
  return *grid_;
}

double FnMap::sigma(int i, double u) const {
  const double ui = (i - 1) * du_;
  const double lo = ui + 0.5 * (du_ - band_);
  const double s_in = 1.0 + kappa_ * ui;
  const double s_out = 1.0 + kappa_ * (ui + du_);
  if (u <= lo) {
    return s_in;
  }
  if (u >= lo + band_) {
    return s_out;
  }
  return s_in + (u - lo) * (s_out - s_in) / band_;
}

double FnMap::sigma_slope(int i, double u) const {
  const double lo = (i - 1) * du_ + 0.5 * (du_ - band_);
  if (band_ <= 0.0 || u <= lo || u >= lo + band_) {
    return 0.0;
  }
  return kappa_ * du_ / band_;
}

SurfacePoint FnMap::eval_local(double u, double s) const {
  const int n = params_.n;
  if (u < -kTol || u > params_.b + kTol || s < -kTol || s > params_.a + kTol) {
    throw DomainError("point outside the sector");
  }
  const int i = grid_index(u / du_, n);
  const int j = grid_index(s / ds_, n);
  const double x = u - (i - 1) * du_;
  const double ls = s - (j - 1) * ds_;
  const double sg = sigma(i, u);
  if (ls <= 0.5 * ds_) {
    return {i, j, {Hex::I, {x, ls * sg}}};
  }
  const double ai = ds_ * (1.0 + kappa_ * (i - 1) * du_);
  return {i, j, {Hex::II, {x, ai - (ds_ - ls) * sg}}};
}

SurfacePoint FnMap::eval(PolarPoint p) const {
  const Sector& sec = sector();
  sec.require(p);
  return eval_local(p.r - sec.r0(), p.phi * sec.r0());
}

std::array<double, 2> FnMap::inverse_local(const SurfacePoint& q) const {
  const int n = params_.n;
  if (q.i < 1 || q.i > n || q.j < 1 || q.j > n) {
    throw DomainError("block index out of range");
  }
  const double u = (q.i - 1) * du_ + q.bp.pos.dx;
  const double sg = sigma(q.i, u);
  if (q.bp.hex == Hex::I) {
    return {u, (q.j - 1) * ds_ + q.bp.pos.dy / sg};
  }
  const double ai = ds_ * (1.0 + kappa_ * (q.i - 1) * du_);
  return {u, q.j * ds_ - (ai - q.bp.pos.dy) / sg};
}

PolarPoint FnMap::inverse(const SurfacePoint& q) const {
  const Sector& sec = sector();
  const auto us = inverse_local(q);
  return {sec.r0() + us[0], us[1] / sec.r0()};
}

Mat2 FnMap::jacobian_on(double u, double s) const {
  const int n = params_.n;
  const int i = grid_index(u / du_, n);
  const int j = grid_index(s / ds_, n);
  const double ls = s - (j - 1) * ds_;
  const double slope = sigma_slope(i, u);
  const double yu = ls <= 0.5 * ds_ ? ls * slope : -(ds_ - ls) * slope;
  return {1.0, 0.0, yu, sigma(i, u) / (1.0 + kappa_ * u)};
}

FnMap::Jacobian FnMap::jacobian(PolarPoint p) const {
  const Sector& sec = sector();
  sec.require(p);
  const double u = p.r - sec.r0();
  const double s = p.phi * sec.r0();
  const int n = params_.n;
  const int i = grid_index(u / du_, n);
  const int j = grid_index(s / ds_, n);
  const double ls = s - (j - 1) * ds_;
  const double slope = sigma_slope(i, u);
  const double yu = ls <= 0.5 * ds_ ? ls * slope : -(ds_ - ls) * slope;
  Jacobian out;
  out.j = {1.0, 0.0, yu, sec.r0() * sigma(i, u)};
  const double lo = (i - 1) * du_ + 0.5 * (du_ - band_);
  const double tol = kTol * std::max(1.0, sec.r1());
  out.on_boundary = std::abs(u - lo) <= tol || std::abs(u - lo - band_) <= tol ||
                    std::abs(ls - 0.5 * ds_) <= tol;
  return out;
}

Frame FnMap::pullback_frame(PolarPoint p) const {
  const Mat2 j = jacobian(p).j;
  const Mat2 inv = j.inverse();
  return {{inv.a, inv.c}, {inv.b, inv.d}, {p.r, p.phi, ChartId::sector_polar()}};
}

double FnMap::frame_error_at(PolarPoint p) const {
  const Sector& sec = sector();
  sec.require(p);
  return frame_error(jacobian_on(p.r - sec.r0(), p.phi * sec.r0()));
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

// Integrates (or maximises) over every smooth piece of every sub-sector.
template <class Visit>
void for_each_piece(const FnMap& f, int m, Visit&& visit) {
  const int n = f.n();
  const double du = f.du();
  const double ds = f.ds();
  const double band = f.band_width();
  parallel_for(static_cast<std::size_t>(n) * n, [&](std::size_t cell) {
    const int i = static_cast<int>(cell % n) + 1;
    const int j = static_cast<int>(cell / n) + 1;
    const double ui = (i - 1) * du;
    const double lo = ui + 0.5 * (du - band);
    const std::array<double, 4> ub{ui, lo, lo + band, ui + du};
    const double sj = (j - 1) * ds;
    const std::array<double, 3> sb{sj, sj + 0.5 * ds, sj + ds};
    for (int h = 0; h < 2; ++h) {
      for (int k = 0; k < 3; ++k) {
        const double u0 = ub[k], u1 = ub[k + 1];
        if (!(u1 > u0)) {
          continue;
        }
        const double hu = (u1 - u0) / m;
        const double hs = (sb[h + 1] - sb[h]) / m;
        for (int a = 0; a < m; ++a) {
          const double u = u0 + (a + 0.5) * hu;
          for (int b = 0; b < m; ++b) {
            const double s = sb[h] + (b + 0.5) * hs;
            visit(cell, u, s, hu * hs * (1.0 + f.kappa() * u));
          }
        }
      }
    }
  });
}

}  // namespace

double lp_error(const FnMap& f, ErrorKind kind, double p_exp, int m) {
  if (!(p_exp >= 1.0) || m < 1) {
    throw ParameterError("lp_error needs p >= 1 and m >= 1");
  }
  std::vector<double> sums(static_cast<std::size_t>(f.n()) * f.n(), 0.0);
  for_each_piece(f, m, [&](std::size_t cell, double u, double s, double w) {
    sums[cell] += std::pow(pointwise_error(kind, f.jacobian_on(u, s)), p_exp) * w;
  });
  double total = 0.0;
  for (double v : sums) {
    total += v;
  }
  return total;
}

double sup_error(const FnMap& f, ErrorKind kind, int m) {
  std::vector<double> best(static_cast<std::size_t>(f.n()) * f.n(), 0.0);
  for_each_piece(f, m, [&](std::size_t cell, double u, double s, double) {
    best[cell] = std::max(best[cell], pointwise_error(kind, f.jacobian_on(u, s)));
  });
  return *std::max_element(best.begin(), best.end());
}

double volume_ratio_sup(const FnMap& f, int m) { return sup_error(f, ErrorKind::Volume, m); }

// ---------------------------------------------------------------------------
// Per-block distortion

std::vector<PolarPoint> cell_boundary_samples(const Sector& cell, int k) {
  if (k < 1) {
    throw ParameterError("need at least one sample per edge");
  }
  const double r0 = cell.r0(), r1 = cell.r1(), phi = cell.total_angle();
  std::vector<PolarPoint> out;
  for (int e = 0; e < 4; ++e) {
    for (int m = 0; m < k; ++m) {
      const double t = static_cast<double>(m) / k;
      switch (e) {
        case 0: out.push_back({r0 + t * (r1 - r0), 0.0}); break;
        case 1: out.push_back({r1, t * phi}); break;
        case 2: out.push_back({r1 - t * (r1 - r0), phi}); break;
        default: out.push_back({r0, phi - t * phi}); break;
      }
    }
  }
  return out;
}

double per_block_distortion(const GridParams& g, int i, int j, int sample_k) {
  g.validate();
  if (i < 1 || i > g.n || j < 1 || j > g.n) {
    throw DomainError("block index out of range");
  }
  if (g.eps == 0.0) {
    return 0.0;
  }
  // Sub-sector (i, j) is the sector of its own block parameters, and F_n
  // restricted to it is the single-cell map of those parameters.
  const BlockParams bp = g.block(i);
  const GridParams cell_grid{bp.a, bp.b, bp.eps, bp.theta, 1};
  const FnMap cell_map(cell_grid);
  const Sector& cell = cell_map.sector();
  const Block blk(bp);
  const auto pts = cell_boundary_samples(cell, sample_k);
  std::vector<BlockPoint> img;
  img.reserve(pts.size());
  for (const PolarPoint& p : pts) {
    img.push_back(cell_map.eval(p).bp);
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const double dn = sector_distance(cell, pts[a], pts[b]);
      const double dm = blk.distance(img[a], img[b]);
      worst = std::max(worst, std::abs(dn - dm));
    }
  }
  return worst;
}

double max_block_distortion(const GridParams& g, int sample_k) {
  g.validate();
  // blocks in one column share their parameters, so one row suffices
  std::vector<double> per(static_cast<std::size_t>(g.n), 0.0);
  parallel_for(per.size(), [&](std::size_t k) {
    per[k] = per_block_distortion(g, static_cast<int>(k) + 1, 1, sample_k);
  });
  return *std::max_element(per.begin(), per.end());
}

// ---------------------------------------------------------------------------
// Block -> rectangle -> sector maps

Vec2 AppendixMaps::S(const BlockPoint& p) const {
  if (!block.contains(p)) {
    throw DomainError("point outside block");
  }
  const BlockParams& bp = block.params();
  const double half = 0.5 * bp.a;
  const double b1 = block.offset();
  const double rise = std::clamp((p.pos.dx - b1) * std::tan(bp.theta), 0.0, 0.5 * bp.eps);
  const double r0 = cell.r0();
  if (p.hex == Hex::I) {
    const double top = half + rise;
    return {r0 + p.pos.dx, half * p.pos.dy / top};
  }
  const double bottom = half - rise;
  return {r0 + p.pos.dx, bp.a - (bp.a - p.pos.dy) * half / (bp.a - bottom)};
}

PolarPoint AppendixMaps::S_prime_polar(Vec2 xy) const {
  const double r0 = cell.r0();
  if (xy.dx < r0 - kTol || xy.dx > cell.r1() + kTol || xy.dy < -kTol ||
      xy.dy > block.params().a + kTol) {
    throw DomainError("point outside rectangle");
  }
  return {xy.dx, xy.dy / r0};
}

Vec2 AppendixMaps::S_prime(Vec2 xy) const { return polar_to_cart(S_prime_polar(xy)).xy(); }

AppendixMaps appendix_maps(const GridParams& g, int i, int j) {
  g.validate();
  if (i < 1 || i > g.n || j < 1 || j > g.n) {
    throw DomainError("block index out of range");
  }
  const BlockParams bp = g.block(i);
  return {Block(bp), Sector(bp.a, bp.b, bp.eps)};
}

// ---------------------------------------------------------------------------
// Cell crossings in the sector

std::vector<std::pair<int, int>> sector_cell_sequence(const SectorPartition& part,
                                                      std::span<const PolarPoint> path) {
  std::vector<std::pair<int, int>> seq;
  auto push = [&](PolarPoint p) {
    p.r = std::clamp(p.r, part.r0, part.r1);
    const auto c = part.cell_of(p);
    if (seq.empty() || seq.back() != c) {
      seq.push_back(c);
    }
  };
  if (path.empty()) {
    return seq;
  }
  const double step = std::min(part.dr, part.r0 * part.dphi) / 16.0;
  push(path.front());
  for (std::size_t k = 1; k < path.size(); ++k) {
    const Vec2 a = polar_to_cart(path[k - 1]).xy();
    const Vec2 b = polar_to_cart(path[k]).xy();
    const int pieces = std::max(1, static_cast<int>(std::ceil(dist(a, b) / step)));
    for (int t = 1; t <= pieces; ++t) {
      push(cart_to_polar(a + (b - a) * (static_cast<double>(t) / pieces)));
    }
  }
  return seq;
}

int cells_crossed(const SectorPartition& part, std::span<const PolarPoint> path) {
  auto seq = sector_cell_sequence(part, path);
  std::sort(seq.begin(), seq.end());
  return static_cast<int>(std::unique(seq.begin(), seq.end()) - seq.begin());
}

}  // namespace weitz
