// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "weitz/checks.hpp"
#include "weitz/harness.hpp"
#include "weitz/homogenization.hpp"
#include "weitz/mesh.hpp"
#include "weitz/sector.hpp"

using namespace weitz;

namespace {

constexpr double kA = 1.0;
constexpr double kB = 1.0;
constexpr double kEps = 0.1;
constexpr double kTheta = kPi / 6.0;
constexpr std::uint64_t kSeed = 20240611;

// criterion 1
constexpr double kDisSlopeLo = -1.3;
constexpr double kDisSlopeHi = -0.7;
constexpr double kMinR2 = 0.95;
constexpr double kMaxSeconds = 300.0;
// criterion 2
constexpr double kBlockSlopeLo = -2.3;
constexpr double kBlockSlopeHi = -1.7;
constexpr double kMaxScaledSpread = 0.5;
constexpr int kBlockSamples = 8;
// criteria 4, 5
constexpr double kFinalFraction = 0.2;
constexpr double kProbeFinalFraction = 0.5;
constexpr int kQuadM = 16;
// criterion 6
constexpr double kSupFloor = 0.5;
// criterion 7
constexpr double kBurgersTol = 1e-6;
constexpr int kBurgersM = 256;
// criterion 8
constexpr double kDecompTol = 1e-6;
constexpr double kHfd = 1e-5;
// criterion 9
constexpr double kStructTol = 1e-12;
// criterion 10
constexpr double kHolonomyTolDeg = 1e-8;
// criterion 11
constexpr double kOracleH = 0.01;
constexpr int kRandomCount = 100;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += pass ? 0 : 1;
}

void guarded(int id, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string series(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    s += (k ? ", " : "") + fmt(v[k]);
  }
  return s + "]";
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!(v[k] < v[k - 1])) {
      return false;
    }
  }
  return true;
}

GridParams grid(int n, double eps = kEps) { return GridParams{kA, kB, eps, kTheta, n}; }

}  // namespace

int main() {
  const std::vector<int> ns{2, 4, 8};
  const std::vector<int> ns1{1, 2, 4, 8};

  // exhaustive net pairs for n <= 8; shared by criteria 1 and 3
  std::vector<NetStats> net;
  guarded(1, "net distortion rate", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<double, double>> pts;
    for (int n : ns) {
      net.push_back(net_statistics(kA, kB, kEps, kTheta, n, kB / (40.0 * n), 500, kSeed));
      pts.emplace_back(n, net.back().dis_tn);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const RateFit fit = fit_rate(pts);
    const bool ok = fit.slope >= kDisSlopeLo && fit.slope <= kDisSlopeHi &&
                    fit.r_squared >= kMinR2 && secs <= kMaxSeconds;
    report(1, "net distortion rate", ok,
           "dis=" + series({pts[0].second, pts[1].second, pts[2].second}) + " slope=" +
               fmt(fit.slope) + " R2=" + fmt(fit.r_squared) + " time=" + fmt(secs) + "s");
  });

  guarded(2, "per-block distortion rate", [&] {
    std::vector<std::pair<double, double>> pts;
    std::vector<double> vals, scaled;
    for (int n : ns) {
      const double d = max_block_distortion(grid(n), kBlockSamples);
      pts.emplace_back(n, d);
      vals.push_back(d);
      scaled.push_back(d * n * n);
    }
    const RateFit fit = fit_rate(pts);
    const double lo = *std::min_element(scaled.begin(), scaled.end());
    const double hi = *std::max_element(scaled.begin(), scaled.end());
    const double spread = (hi - lo) / lo;
    const bool ok =
        fit.slope >= kBlockSlopeLo && fit.slope <= kBlockSlopeHi && spread < kMaxScaledSpread;
    report(2, "per-block distortion rate", ok,
           "max=" + series(vals) + " slope=" + fmt(fit.slope) + " max*n^2=" + series(scaled) +
               " spread=" + fmt(spread));
  });

  guarded(3, "cell-crossing bound", [&] {
    int violations = 0, monotone = 0, pairs = 0;
    std::string cells;
    if (net.size() != ns.size()) {
      throw Error("net statistics unavailable");
    }
    for (std::size_t k = 0; k < ns.size(); ++k) {
      const NetStats& st = net[k];
      const int n = ns[k];
      violations += st.cell_bound_violations;
      monotone += st.monotone_violations;
      pairs += st.pairs;
      cells += (cells.empty() ? "" : ", ") + std::to_string(std::max(st.max_cells, st.max_cells_sector)) +
               "/" + std::to_string(3 * n);
    }
    report(3, "cell-crossing bound", violations == 0 && monotone == 0,
           "max cells vs 3n: [" + cells + "] pairs=" + std::to_string(pairs) +
               " bound violations=" + std::to_string(violations) +
               " monotone violations=" + std::to_string(monotone));
  });

  // shared by criteria 4 to 6
  std::vector<double> lp_frame, lp_rigid, lp_metric, sup_metric, vol_sup, probe;
  guarded(4, "frame L^p convergence", [&] {
    for (int n : ns1) {
      const FnMap f(grid(n));
      lp_frame.push_back(lp_error(f, ErrorKind::Frame, 2.0, kQuadM));
      lp_rigid.push_back(lp_error(f, ErrorKind::Rigidity, 2.0, kQuadM));
      lp_metric.push_back(lp_error(f, ErrorKind::Metric, 2.0, kQuadM));
      sup_metric.push_back(sup_error(f, ErrorKind::Metric, kQuadM));
      vol_sup.push_back(volume_ratio_sup(f, kQuadM));
      probe.push_back(f.frame_error_at({10.2, 0.03}));
    }
    bool probe_ok = true;
    for (std::size_t k = 1; k < probe.size(); ++k) {
      probe_ok = probe_ok && probe[k] <= probe[k - 1];
    }
    probe_ok = probe_ok && probe.back() < kProbeFinalFraction * probe.front();
    const bool ok = strictly_decreasing(lp_frame) &&
                    lp_frame.back() < kFinalFraction * lp_frame.front() && probe_ok;
    report(4, "frame L^p convergence", ok,
           "lp=" + series(lp_frame) + " ratio=" + fmt(lp_frame.back() / lp_frame.front()) +
               " probe=" + series(probe));
  });

  guarded(5, "rigidity L^p convergence", [&] {
    const bool ok = lp_rigid.size() == ns1.size() && strictly_decreasing(lp_rigid) &&
                    lp_rigid.back() < kFinalFraction * lp_rigid.front();
    report(5, "rigidity L^p convergence", ok,
           "lp=" + series(lp_rigid) + " ratio=" +
               fmt(lp_rigid.empty() ? 0.0 : lp_rigid.back() / lp_rigid.front()));
  });

  guarded(6, "metric convergence dichotomy", [&] {
    bool sup_ok = !sup_metric.empty();
    for (double v : sup_metric) {
      sup_ok = sup_ok && v >= kSupFloor * sup_metric.front();
    }
    const bool ok = lp_metric.size() == ns1.size() && strictly_decreasing(lp_metric) && sup_ok &&
                    strictly_decreasing(vol_sup);
    report(6, "metric convergence dichotomy", ok,
           "lp=" + series(lp_metric) + " sup=" + series(sup_metric) + " vol_sup=" +
               series(vol_sup));
  });

  const Sector sec(kA, kB, kEps);

  guarded(7, "Burgers identity", [&] {
    const TangentVec v = burgers_integral(sec, BurgersDomain{0.5, 0.5, 0.0, 0.0}, kBurgersM);
    const auto fr = v.frame();
    const double err = std::max(std::abs(fr[0]), std::abs(fr[1] - 0.025));
    report(7, "Burgers identity", err < kBurgersTol,
           "frame coefficients (" + fmt(fr[0]) + ", " + fmt(fr[1]) + ") error=" + fmt(err));
  });

  guarded(8, "connection decomposition", [&] {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0), u01(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < kRandomCount; ++k) {
      // random quadratic fields in (r - R0, phi)
      std::array<double, 12> c{};
      for (double& x : c) {
        x = coef(rng);
      }
      const double r0 = sec.r0();
      const VectorField X = [c, r0](double r, double phi) {
        const double u = r - r0;
        return std::array<double, 2>{c[0] + c[1] * u + c[2] * phi * u,
                                     c[3] + c[4] * phi + c[5] * u * u};
      };
      const VectorField Y = [c, r0](double r, double phi) {
        const double u = r - r0;
        return std::array<double, 2>{c[6] + c[7] * u * phi + c[8] * phi * phi,
                                     c[9] + c[10] * u + c[11] * u * phi};
      };
      const double m = 1e-3;
      const PolarPoint p{sec.r0() + m + u01(rng) * (kB - 2 * m),
                         m + u01(rng) * (sec.total_angle() - 2 * m)};
      worst = std::max(worst, decomposition_residual(sec, p, X, Y, kHfd));
    }
    report(8, "connection decomposition", worst < kDecompTol, "max residual=" + fmt(worst));
  });

  guarded(9, "Weitzenbock structure", [&] {
    std::mt19937_64 rng(kSeed + 9);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double norm_err = 0.0, torsion_err = 0.0;
    bool exact = true;
    for (int k = 0; k < kRandomCount; ++k) {
      const PolarPoint p = random_sector_point(sec, rng);
      const PolarPoint q = random_sector_point(sec, rng);
      const TangentVec v{p, coef(rng), coef(rng)};
      norm_err = std::max(norm_err, std::abs(parallel_transport(sec, p, q, v).norm() - v.norm()));

      std::vector<PolarPoint> loop{p, q};
      for (int s = 0; s < 3; ++s) {
        loop.push_back(random_sector_point(sec, rng));
      }
      const Mat2 hol = loop_holonomy(sec, loop);
      exact = exact && hol.a == 1.0 && hol.b == 0.0 && hol.c == 0.0 && hol.d == 1.0;

      const TangentVec u{p, coef(rng), coef(rng)}, w{p, coef(rng), coef(rng)};
      const TangentVec t = torsion(sec, p, u, w);
      // (1/r) dr ^ dphi (u, w) d_phi, and the antisymmetrised Christoffel symbols
      const double closed = (u.comp_r * w.comp_phi - u.comp_phi * w.comp_r) / p.r;
      const Christoffel g = weitzenbock_christoffel(p.r);
      const std::array<double, 2> uu{u.comp_r, u.comp_phi}, ww{w.comp_r, w.comp_phi};
      std::array<double, 2> from_gamma{};
      for (int a = 0; a < 2; ++a) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            from_gamma[a] += (g[a][i][j] - g[a][j][i]) * uu[i] * ww[j];
          }
        }
      }
      torsion_err = std::max({torsion_err, std::abs(t.comp_r), std::abs(t.comp_phi - closed),
                              std::abs(from_gamma[0] - t.comp_r),
                              std::abs(from_gamma[1] - t.comp_phi)});
    }
    const bool ok = norm_err <= kStructTol && exact && torsion_err <= kStructTol;
    report(9, "Weitzenbock structure", ok,
           "norm error=" + fmt(norm_err) + " holonomy exact=" + (exact ? "yes" : "no") +
               " torsion error=" + fmt(torsion_err));
  });

  guarded(10, "block holonomy", [&] {
    const Block blk(BlockParams{kA, kB, kTheta, kEps});
    const double deg = 180.0 / kPi;
    const double plus = blk.holonomy(Loop::AroundPlus) * deg;
    const double dipole = blk.holonomy(Loop::AroundDipole) * deg;
    const bool ok = std::abs(plus - 60.0) <= kHolonomyTolDeg && std::abs(dipole) <= kHolonomyTolDeg;
    report(10, "block holonomy", ok, "around p+ " + fmt(plus) + " deg, dipole " + fmt(dipole + 0.0) + " deg");
  });

  guarded(11, "oracle equivalence", [&] {
    std::mt19937_64 rng(kSeed + 11);
    std::uniform_int_distribution<int> pick(1, 2);

    const Surface flat(grid(2, 0.0));
    const SurfaceMesh fm = triangulate(flat, kOracleH);
    double flat_err = 0.0;
    for (int k = 0; k < kRandomCount; ++k) {
      SurfacePoint p{pick(rng), pick(rng), {}}, q{pick(rng), pick(rng), {}};
      p.bp = random_block_point(flat.block(p.i, p.j), rng);
      q.bp = random_block_point(flat.block(q.i, q.j), rng);
      const Vec2 gp{(p.i - 1) * 0.5 + p.bp.pos.dx, (p.j - 1) * 0.5 + p.bp.pos.dy};
      const Vec2 gq{(q.i - 1) * 0.5 + q.bp.pos.dx, (q.j - 1) * 0.5 + q.bp.pos.dy};
      flat_err = std::max(flat_err, std::abs(mesh_distance(fm, p, q) - dist(gp, gq)));
    }

    const Surface one(grid(1));
    const SurfaceMesh dm = triangulate(one, kOracleH);
    const Block& blk = one.block(1, 1);
    double block_err = 0.0;
    for (int k = 0; k < kRandomCount; ++k) {
      const BlockPoint p = random_block_point(blk, rng), q = random_block_point(blk, rng);
      const double d = mesh_distance(dm, {1, 1, p}, {1, 1, q});
      block_err = std::max(block_err, std::abs(d - intra_block_distance(blk, p, q)));
    }
    const bool ok = flat_err <= 3 * kOracleH && block_err <= 3 * kOracleH;
    report(11, "oracle equivalence", ok,
           "flat max error=" + fmt(flat_err) + " dislocated block max error=" + fmt(block_err) +
               " (3h=" + fmt(3 * kOracleH) + ")");
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
