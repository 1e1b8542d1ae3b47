#include "weitz/sector.hpp"

#include <algorithm>

namespace weitz {

Sector::Sector(double a, double b, double eps) : a_(a), b_(b), eps_(eps) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw ParameterError("sector sides must be positive");
  }
  if (!(eps > 0.0)) {
    throw ParameterError("sector requires eps > 0");
  }
  r0_ = a * b / eps;
  r1_ = r0_ + b;
  angle_ = eps / b;
  if (!(angle_ < kPi)) {
    throw ParameterError("sector angle eps/b must be below pi");
  }
}

bool Sector::contains(PolarPoint p, double tol) const {
  return p.r >= r0_ - tol && p.r <= r1_ + tol && p.phi >= -tol && p.phi <= angle_ + tol;
}

void Sector::require(PolarPoint p) const {
  if (!contains(p)) {
    throw DomainError("point (" + std::to_string(p.r) + ", " + std::to_string(p.phi) +
                      ") outside sector");
  }
}

namespace {

// Angle the geodesic has to wrap along r = R0; positive iff the chord
// between p and q dips inside the inner circle.
double wrap_angle(double r0, PolarPoint p, PolarPoint q) {
  const double rp = std::max(p.r, r0);
  const double rq = std::max(q.r, r0);
  return std::abs(q.phi - p.phi) - std::acos(std::min(1.0, r0 / rp)) -
         std::acos(std::min(1.0, r0 / rq));
}

}  // namespace

double sector_distance(const Sector& s, PolarPoint p, PolarPoint q) {
  s.require(p);
  s.require(q);
  const Vec2 pc = polar_to_cart(p).xy();
  const Vec2 qc = polar_to_cart(q).xy();
  const double r0 = s.r0();
  const double wrap = wrap_angle(r0, p, q);
  if (wrap <= 0.0) {
    return dist(pc, qc);
  }
  const double rp = std::max(p.r, r0);
  const double rq = std::max(q.r, r0);
  return std::sqrt(std::max(0.0, rp * rp - r0 * r0)) + std::sqrt(std::max(0.0, rq * rq - r0 * r0)) +
         r0 * wrap;
}

std::vector<PolarPoint> sector_geodesic(const Sector& s, PolarPoint p, PolarPoint q, int samples) {
  s.require(p);
  s.require(q);
  const Vec2 pc = polar_to_cart(p).xy();
  const Vec2 qc = polar_to_cart(q).xy();
  const double r0 = s.r0();
  std::vector<PolarPoint> out;
  if (wrap_angle(r0, p, q) <= 0.0) {
    for (int k = 0; k <= samples; ++k) {
      out.push_back(cart_to_polar(pc + (qc - pc) * (static_cast<double>(k) / samples)));
    }
    return out;
  }
  // tangent leg, arc on r = R0, tangent leg
  const double sgn = q.phi >= p.phi ? 1.0 : -1.0;
  const double tp = p.phi + sgn * std::acos(std::min(1.0, r0 / std::max(p.r, r0)));
  const double tq = q.phi - sgn * std::acos(std::min(1.0, r0 / std::max(q.r, r0)));
  const Vec2 a = polar_to_cart({r0, tp}).xy();
  const Vec2 b = polar_to_cart({r0, tq}).xy();
  const int leg = std::max(1, samples / 3);
  for (int k = 0; k < leg; ++k) {
    out.push_back(cart_to_polar(pc + (a - pc) * (static_cast<double>(k) / leg)));
  }
  for (int k = 0; k < leg; ++k) {
    out.push_back({r0, tp + (tq - tp) * (static_cast<double>(k) / leg)});
  }
  for (int k = 0; k <= leg; ++k) {
    out.push_back(cart_to_polar(b + (qc - b) * (static_cast<double>(k) / leg)));
  }
  return out;
}

std::array<double, 2> transport_frame(const Sector& s, PolarPoint p, PolarPoint q,
                                      std::array<double, 2> coeffs) {
  s.require(p);
  s.require(q);
  // the frame (d_r, r^-1 d_phi) is parallel: coefficients do not change
  return coeffs;
}

TangentVec parallel_transport(const Sector& s, PolarPoint p, PolarPoint q, const TangentVec& v) {
  const auto f = transport_frame(s, p, q, TangentVec{p, v.comp_r, v.comp_phi}.frame());
  return TangentVec::from_frame(q, f[0], f[1]);
}

Mat2 loop_holonomy(const Sector& s, const std::vector<PolarPoint>& loop) {
  if (loop.empty()) {
    return {};
  }
  std::array<double, 2> e1{1.0, 0.0};
  std::array<double, 2> e2{0.0, 1.0};
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const PolarPoint from = loop[k];
    const PolarPoint to = loop[(k + 1) % loop.size()];
    e1 = transport_frame(s, from, to, e1);
    e2 = transport_frame(s, from, to, e2);
  }
  return {e1[0], e2[0], e1[1], e2[1]};
}

TangentVec torsion(const Sector& s, PolarPoint p, const TangentVec& u, const TangentVec& v) {
  s.require(p);
  return {p, 0.0, (u.comp_r * v.comp_phi - u.comp_phi * v.comp_r) / p.r};
}

Christoffel weitzenbock_christoffel(double r) {
  Christoffel g{};
  g[1][0][1] = 1.0 / r;  // nabla_{d_r} d_phi = (1/r) d_phi
  return g;
}

Christoffel levi_civita_christoffel(double r) {
  Christoffel g{};
  g[0][1][1] = -r;
  g[1][0][1] = 1.0 / r;
  g[1][1][0] = 1.0 / r;
  return g;
}

namespace {

// X(f) for each component of Y, by central differences.
std::array<double, 2> directional(PolarPoint p, std::array<double, 2> x, const VectorField& Y,
                                  double h) {
  const auto yr_p = Y(p.r + h, p.phi);
  const auto yr_m = Y(p.r - h, p.phi);
  const auto yp_p = Y(p.r, p.phi + h);
  const auto yp_m = Y(p.r, p.phi - h);
  std::array<double, 2> out{};
  for (int k = 0; k < 2; ++k) {
    out[k] = x[0] * (yr_p[k] - yr_m[k]) / (2.0 * h) + x[1] * (yp_p[k] - yp_m[k]) / (2.0 * h);
  }
  return out;
}

}  // namespace

TangentVec covariant_derivative(const Christoffel& gamma, PolarPoint p, const VectorField& X,
                                const VectorField& Y, double h_fd) {
  const auto x = X(p.r, p.phi);
  const auto y = Y(p.r, p.phi);
  auto d = directional(p, x, Y, h_fd);
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        d[k] += gamma[k][i][j] * x[i] * y[j];
      }
    }
  }
  return {p, d[0], d[1]};
}

TangentVec frame_derivative(PolarPoint p, const VectorField& X, const VectorField& Y,
                            double h_fd) {
  const auto x = X(p.r, p.phi);
  // Y in frame coefficients (Y^r, r Y^phi); derivatives of those are the
  // frame coefficients of nabla_X Y
  const VectorField yf = [&Y](double r, double phi) {
    const auto y = Y(r, phi);
    return std::array<double, 2>{y[0], r * y[1]};
  };
  const auto d = directional(p, x, yf, h_fd);
  return TangentVec::from_frame(p, d[0], d[1]);
}

double decomposition_residual(const Sector& s, PolarPoint p, const VectorField& X,
                              const VectorField& Y, double h_fd) {
  s.require(p);
  const double r = p.r;
  const auto x = X(r, p.phi);
  const auto y = Y(r, p.phi);
  const TangentVec w = frame_derivative(p, X, Y, h_fd);
  const TangentVec lc = covariant_derivative(levi_civita_christoffel(r), p, X, Y, h_fd);
  const double gxy = x[0] * y[0] + r * r * x[1] * y[1];
  const double gvy = y[0] / r;  // V = r^-1 d_r
  const double res_r = w.comp_r - lc.comp_r - gxy / r + gvy * x[0];
  const double res_phi = w.comp_phi - lc.comp_phi + gvy * x[1];
  return TangentVec{p, res_r, res_phi}.norm();
}

TangentVec burgers_integral(const Sector& s, const BurgersDomain& dom, int m) {
  return burgers_integral(s, dom, {s.r0(), 0.0}, m);
}

TangentVec burgers_integral(const Sector& s, const BurgersDomain& dom, PolarPoint ref, int m) {
  if (m < 1) {
    throw ParameterError("quadrature resolution must be positive");
  }
  s.require(ref);
  const double r_lo = dom.r_start > 0.0 ? dom.r_start : s.r0();
  const double phi_lo = dom.phi_start;
  const double dr = dom.alpha * s.b();
  const double dphi = dom.beta * s.eps() / s.b();
  if (dom.alpha < 0.0 || dom.beta < 0.0 || !s.contains({r_lo, phi_lo}) ||
      !s.contains({r_lo + dr, phi_lo + dphi})) {
    throw DomainError("integration domain outside sector");
  }
  const TangentVec er{ref, 1.0, 0.0};
  const TangentVec ephi{ref, 0.0, 1.0};
  double acc_r = 0.0;
  double acc_phi = 0.0;
  const double hr = dr / m;
  const double hphi = dphi / m;
  for (int k = 0; k < m; ++k) {
    const double r = r_lo + (k + 0.5) * hr;
    for (int l = 0; l < m; ++l) {
      const PolarPoint x{r, phi_lo + (l + 0.5) * hphi};
      // T(d_r, d_phi) dr dphi, carried back to the reference point
      const TangentVec t = torsion(s, x, TangentVec{x, er.comp_r, er.comp_phi},
                                   TangentVec{x, ephi.comp_r, ephi.comp_phi});
      const TangentVec at_ref = parallel_transport(s, x, ref, t);
      acc_r += at_ref.comp_r * hr * hphi;
      acc_phi += at_ref.comp_phi * hr * hphi;
    }
  }
  return {ref, acc_r, acc_phi};
}

}  // namespace weitz
