#pragma once

#include <array>
#include <functional>
#include <vector>

#include "weitz/geometry.hpp"

namespace weitz {

/// Annular sector R0 <= r <= R1, 0 <= phi <= eps/b with R0 = ab/eps and
/// R1 = R0 + b, carrying the flat metric dr^2 + r^2 dphi^2 and the connection
/// whose parallel frame is (d_r, r^-1 d_phi).
class Sector {
public:
  Sector(double a, double b, double eps);

  double a() const { return a_; }
  double b() const { return b_; }
  double eps() const { return eps_; }
  double r0() const { return r0_; }
  double r1() const { return r1_; }
  double total_angle() const { return angle_; }

  bool contains(PolarPoint p, double tol = kTol) const;
  void require(PolarPoint p) const;

private:
  double a_, b_, eps_;
  double r0_, r1_, angle_;
};

/// Tangent vector in the coordinate basis (d_r, d_phi).
struct TangentVec {
  PolarPoint base{};
  double comp_r = 0.0;
  double comp_phi = 0.0;

  double norm() const { return std::sqrt(comp_r * comp_r + base.r * base.r * comp_phi * comp_phi); }
  /// Coefficients (alpha, beta) in the parallel frame.
  std::array<double, 2> frame() const { return {comp_r, base.r * comp_phi}; }
  static TangentVec from_frame(PolarPoint base, double alpha, double beta) {
    return {base, alpha, beta / base.r};
  }
};

double sector_distance(const Sector& s, PolarPoint p, PolarPoint q);

/// Shortest path p -> q sampled at `samples` + 1 points.
std::vector<PolarPoint> sector_geodesic(const Sector& s, PolarPoint p, PolarPoint q,
                                        int samples = 64);

/// Transport of parallel-frame coefficients from p to q.
std::array<double, 2> transport_frame(const Sector& s, PolarPoint p, PolarPoint q,
                                      std::array<double, 2> coeffs);

TangentVec parallel_transport(const Sector& s, PolarPoint p, PolarPoint q, const TangentVec& v);

/// Matrix, in the parallel frame at loop.front(), of transport along the
/// closed polygonal loop through the given points.
Mat2 loop_holonomy(const Sector& s, const std::vector<PolarPoint>& loop);

TangentVec torsion(const Sector& s, PolarPoint p, const TangentVec& u, const TangentVec& v);

/// Christoffel symbols gamma[k][i][j] = Gamma^k_ij, index 0 = r, 1 = phi.
using Christoffel = std::array<std::array<std::array<double, 2>, 2>, 2>;
Christoffel weitzenbock_christoffel(double r);
Christoffel levi_civita_christoffel(double r);

/// A vector field as coefficient functions (X^r, X^phi) of (r, phi).
using VectorField = std::function<std::array<double, 2>(double r, double phi)>;

/// Covariant derivative nabla_X Y at p from Christoffel symbols, with
/// central differences of step h_fd.
TangentVec covariant_derivative(const Christoffel& gamma, PolarPoint p, const VectorField& X,
                                const VectorField& Y, double h_fd);

/// nabla_X Y computed from the parallel frame.
TangentVec frame_derivative(PolarPoint p, const VectorField& X, const VectorField& Y,
                            double h_fd);

/// |nabla_X Y - nabla^LC_X Y - g(X,Y) V + g(V,Y) X|_g at p with V = r^-1 d_r.
double decomposition_residual(const Sector& s, PolarPoint p, const VectorField& X,
                              const VectorField& Y, double h_fd = 1e-5);

struct BurgersDomain {
  double alpha = 1.0;  // radial extent as a fraction of b
  double beta = 1.0;   // angular extent as a fraction of eps/b
  double r_start = 0.0;  // 0 selects R0
  double phi_start = 0.0;
};

/// Integral over D of the torsion transported to p, by an m x m midpoint
/// rule. The default reference point is the inner-left corner (R0, 0).
TangentVec burgers_integral(const Sector& s, const BurgersDomain& dom, int m = 64);
TangentVec burgers_integral(const Sector& s, const BurgersDomain& dom, PolarPoint ref, int m);

}  // namespace weitz
