#include "weitz/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "weitz/harness.hpp"
#include "weitz/homogenization.hpp"
#include "weitz/mesh.hpp"

namespace weitz {

BlockPoint random_block_point(const Block& blk, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double area_i = polygon_area(blk.hexagon(Hex::I));
  const double area = blk.area();
  const Hex h = u01(rng) * area < area_i ? Hex::I : Hex::II;
  const auto poly = blk.hexagon(h);
  double x0 = poly[0].dx, x1 = x0, y0 = poly[0].dy, y1 = y0;
  for (const Vec2& v : poly) {
    x0 = std::min(x0, v.dx);
    x1 = std::max(x1, v.dx);
    y0 = std::min(y0, v.dy);
    y1 = std::max(y1, v.dy);
  }
  for (;;) {
    const Vec2 p{x0 + u01(rng) * (x1 - x0), y0 + u01(rng) * (y1 - y0)};
    if (point_in_polygon(p, poly, 0.0)) {
      return {h, p};
    }
  }
}

PolarPoint random_sector_point(const Sector& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  // area-uniform in r
  const double r2 = s.r0() * s.r0() + u01(rng) * (s.r1() * s.r1() - s.r0() * s.r0());
  return {std::sqrt(r2), u01(rng) * s.total_angle()};
}

namespace {

struct Suite {
  std::vector<CheckResult> out;

  void run(const std::string& name, const std::function<std::string()>& body) {
    try {
      const std::string fail = body();
      out.push_back({name, fail.empty(), fail});
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string expect_near(const char* what, double got, double want, double tol) {
  if (std::abs(got - want) <= tol) {
    return "";
  }
  return std::string(what) + " = " + num(got) + ", expected " + num(want) + " +- " + num(tol);
}

}  // namespace

std::vector<CheckResult> run_property_checks(std::uint64_t seed) {
  Suite s;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const BlockParams ref{1.0, 1.0, kPi / 6.0, 0.1};
  const Block blk(ref);

  s.run("triangle inequality", [&] {
    for (int k = 0; k < 200; ++k) {
      const Point2 p{u01(rng), u01(rng)}, q{u01(rng), u01(rng)}, r{u01(rng), u01(rng)};
      if (euclid_dist(p, r) > euclid_dist(p, q) + euclid_dist(q, r) + 1e-15) {
        return std::string("violated");
      }
    }
    return std::string();
  });

  s.run("polar radius preserved", [&] {
    for (int k = 0; k < 200; ++k) {
      const PolarPoint p{0.1 + 20.0 * u01(rng), 6.0 * u01(rng)};
      const double r = polar_to_cart(p).xy().norm();
      if (std::abs(r - p.r) > 1e-12 * p.r) {
        return "radius " + num(r) + " vs " + num(p.r);
      }
    }
    return std::string();
  });

  s.run("block invariants", [&] {
    const double ep = dist(blk.corner(Corner::E, Hex::I), blk.corner(Corner::PMinus, Hex::I));
    const double pf = dist(blk.corner(Corner::PPlus, Hex::I), blk.corner(Corner::F, Hex::I));
    const double pp = dist(blk.corner(Corner::PMinus, Hex::I), blk.corner(Corner::PPlus, Hex::I));
    const auto bl = blk.boundary_lengths();
    std::string f = expect_near("|Ep-| - |p+F|", ep - pf, 0.0, 1e-12);
    if (f.empty()) f = expect_near("|p-p+|", pp, 0.1, 1e-12);
    if (f.empty()) f = expect_near("right side", bl[2], 1.1, 1e-12);
    if (f.empty()) f = expect_near("left side", bl[0], 1.0, 1e-12);
    if (f.empty()) f = expect_near("cone angle p+", blk.cone_angle(Corner::PPlus), 2 * kPi - kPi / 3, 1e-12);
    if (f.empty()) f = expect_near("cone angle p-", blk.cone_angle(Corner::PMinus), 2 * kPi + kPi / 3, 1e-12);
    return f;
  });

  s.run("flat block distance is Euclidean", [&] {
    const Block flat(BlockParams{1.0, 1.0, kPi / 6.0, 0.0});
    for (int k = 0; k < 200; ++k) {
      const BlockPoint p = random_block_point(flat, rng);
      const BlockPoint q = random_block_point(flat, rng);
      const double d = flat.distance(p, q);
      if (std::abs(d - dist(p.pos, q.pos)) > 1e-12) {
        return "distance " + num(d) + " vs " + num(dist(p.pos, q.pos));
      }
    }
    return std::string();
  });

  s.run("block distance below boundary path", [&] {
    // perimeter parametrised counterclockwise from B
    const auto bl = blk.boundary_lengths();
    const double per = bl[0] + bl[1] + bl[2] + bl[3];
    auto at = [&](double t) -> BlockPoint {
      t = std::fmod(t, per);
      const double b = ref.b, a = ref.a, hf = 0.5 * (a + ref.eps);
      if (t <= b) return {Hex::I, {t, 0.0}};
      t -= b;
      if (t <= hf) return {Hex::I, {b, t}};
      t -= hf;
      if (t <= hf) return {Hex::II, {b, 0.5 * (a - ref.eps) + t}};
      t -= hf;
      if (t <= b) return {Hex::II, {b - t, a}};
      t -= b;
      if (t <= 0.5 * a) return {Hex::II, {0.0, a - t}};
      return {Hex::I, {0.0, a - t}};
    };
    for (int k = 0; k < 200; ++k) {
      const double t1 = u01(rng) * per, t2 = u01(rng) * per;
      const double along = std::min(std::abs(t1 - t2), per - std::abs(t1 - t2));
      const double d = blk.distance(at(t1), at(t2));
      if (d > along + 1e-12) {
        return "distance " + num(d) + " exceeds boundary path " + num(along);
      }
    }
    return std::string();
  });

  s.run("block holonomy", [&] {
    const double deg = 180.0 / kPi;
    std::string f = expect_near("around p+ (deg)", blk.holonomy(Loop::AroundPlus) * deg, 60.0, 1e-8);
    if (f.empty()) f = expect_near("around p- (deg)", blk.holonomy(Loop::AroundMinus) * deg, -60.0, 1e-8);
    if (f.empty()) f = expect_near("around dipole (deg)", blk.holonomy(Loop::AroundDipole) * deg, 0.0, 1e-8);
    return f;
  });

  s.run("surface boundary and area", [&] {
    const Surface surf(GridParams{1.0, 1.0, 0.1, kPi / 6.0, 4});
    const auto bl = surf.boundary_lengths();
    std::string f = expect_near("right boundary", bl[2], 1.1, 1e-12);
    if (f.empty()) f = expect_near("left boundary", bl[0], 1.0, 1e-12);
    const Surface flat(GridParams{1.0, 1.0, 0.0, kPi / 6.0, 4});
    if (f.empty()) f = expect_near("flat area", flat.area(), 1.0, 1e-12);
    if (f.empty() && surf.net_vertices().size() != 25) f = "net size";
    return f;
  });

  s.run("gluing round trip", [&] {
    const Surface surf(GridParams{1.0, 1.0, 0.1, kPi / 6.0, 3});
    for (const Gluing& g : surf.gluings()) {
      for (int k = 0; k < 5; ++k) {
        const Vec2 x = g.segment[0] + (g.segment[1] - g.segment[0]) * u01(rng);
        // several seams may join the same pair of charts; match by segment
        Motion back{};
        const Vec2 m0 = g.motion.apply(g.segment[0]), m1 = g.motion.apply(g.segment[1]);
        for (const Gluing& h : surf.gluings()) {
          const bool same_seg = (dist(h.segment[0], m0) < 1e-12 && dist(h.segment[1], m1) < 1e-12) ||
                                (dist(h.segment[0], m1) < 1e-12 && dist(h.segment[1], m0) < 1e-12);
          if (h.from == g.to && h.to == g.from && same_seg) {
            back = h.motion;
          }
        }
        if (dist(back.apply(g.motion.apply(x)), x) > 1e-12) {
          return "round trip off for " + g.from.str() + " -> " + g.to.str();
        }
      }
    }
    return std::string();
  });

  s.run("mesh symmetry and flat oracle", [&] {
    const Surface flat(GridParams{1.0, 1.0, 0.0, kPi / 6.0, 2});
    const double h = 0.05;
    const SurfaceMesh m = triangulate(flat, h);
    for (int k = 0; k < 10; ++k) {
      const SurfacePoint p{1 + static_cast<int>(u01(rng) * 2), 1 + static_cast<int>(u01(rng) * 2),
                           random_block_point(flat.block(1, 1), rng)};
      const SurfacePoint q{1 + static_cast<int>(u01(rng) * 2), 1 + static_cast<int>(u01(rng) * 2),
                           random_block_point(flat.block(1, 1), rng)};
      const double d1 = mesh_distance(m, p, q);
      const double d2 = mesh_distance(m, q, p);
      if (d1 != d2) {
        return "asymmetric: " + num(d1) + " vs " + num(d2);
      }
      const Vec2 gp{(p.i - 1) * 0.5 + p.bp.pos.dx, (p.j - 1) * 0.5 + p.bp.pos.dy};
      const Vec2 gq{(q.i - 1) * 0.5 + q.bp.pos.dx, (q.j - 1) * 0.5 + q.bp.pos.dy};
      if (std::abs(d1 - dist(gp, gq)) > 3 * h) {
        return "mesh " + num(d1) + " vs Euclidean " + num(dist(gp, gq));
      }
    }
    return std::string();
  });

  const Sector sec(1.0, 1.0, 0.1);
  s.run("transport preserves norm, loops trivial", [&] {
    for (int k = 0; k < 100; ++k) {
      const PolarPoint p = random_sector_point(sec, rng), q = random_sector_point(sec, rng);
      const TangentVec v{p, u01(rng) - 0.5, (u01(rng) - 0.5) / p.r};
      const TangentVec w = parallel_transport(sec, p, q, v);
      if (std::abs(w.norm() - v.norm()) > 1e-12) {
        return std::string("norm changed");
      }
      const Mat2 hol = loop_holonomy(sec, {p, q, random_sector_point(sec, rng)});
      if (hol.a != 1.0 || hol.b != 0.0 || hol.c != 0.0 || hol.d != 1.0) {
        return std::string("nontrivial loop holonomy");
      }
    }
    return std::string();
  });

  s.run("torsion antisymmetric and bilinear", [&] {
    for (int k = 0; k < 100; ++k) {
      const PolarPoint p = random_sector_point(sec, rng);
      const TangentVec u{p, u01(rng), u01(rng)}, v{p, u01(rng), u01(rng)}, w{p, u01(rng), u01(rng)};
      const double c = u01(rng);
      const TangentVec uw{p, u.comp_r + c * w.comp_r, u.comp_phi + c * w.comp_phi};
      const double lhs = torsion(sec, p, uw, v).comp_phi;
      const double rhs = torsion(sec, p, u, v).comp_phi + c * torsion(sec, p, w, v).comp_phi;
      if (std::abs(lhs - rhs) > 1e-12 ||
          std::abs(torsion(sec, p, u, v).comp_phi + torsion(sec, p, v, u).comp_phi) > 1e-12) {
        return std::string("torsion identity failed");
      }
    }
    return std::string();
  });

  s.run("connection decomposition", [&] {
    const VectorField X = [](double r, double phi) {
      return std::array<double, 2>{1.0 + r * phi, std::sin(phi) / r};
    };
    const VectorField Y = [](double r, double phi) {
      return std::array<double, 2>{r * r * 0.01, phi * phi + 0.3};
    };
    for (int k = 0; k < 20; ++k) {
      const PolarPoint p = random_sector_point(sec, rng);
      const PolarPoint q{std::clamp(p.r, sec.r0() + 1e-4, sec.r1() - 1e-4),
                         std::clamp(p.phi, 1e-4, sec.total_angle() - 1e-4)};
      const double res = decomposition_residual(sec, q, X, Y);
      if (res > 1e-6) {
        return "residual " + num(res);
      }
    }
    return std::string();
  });

  s.run("Burgers integral", [&] {
    const TangentVec b = burgers_integral(sec, {0.5, 0.5, 0.0, 0.0}, 64);
    return expect_near("r-weighted phi component", b.comp_phi * b.base.r, 0.025, 1e-12);
  });

  s.run("F_n round trip and pullback frame", [&] {
    const FnMap f(GridParams{1.0, 1.0, 0.1, kPi / 6.0, 4});
    for (int k = 0; k < 200; ++k) {
      const PolarPoint p = random_sector_point(sec, rng);
      const PolarPoint back = f.inverse(f.eval(p));
      if (std::abs(back.r - p.r) > 1e-10 || std::abs(back.phi - p.phi) > 1e-10) {
        return std::string("F_n inverse mismatch");
      }
      const Mat2 j = f.jacobian(p).j;
      const Frame fr = f.pullback_frame(p);
      const Vec2 x = j * fr.e1, y = j * fr.e2;
      if (dist(x, {1, 0}) > 1e-12 || dist(y, {0, 1}) > 1e-12) {
        return std::string("pullback frame not inverse");
      }
    }
    return std::string();
  });

  s.run("rectangle maps compose to F_n inverse", [&] {
    const GridParams g{1.0, 1.0, 0.1, kPi / 6.0, 4};
    const AppendixMaps am = appendix_maps(g, 2, 1);
    const FnMap cell(GridParams{am.block.params().a, am.block.params().b, am.block.params().eps,
                                am.block.params().theta, 1});
    for (int k = 0; k < 100; ++k) {
      const BlockPoint p = random_block_point(am.block, rng);
      const PolarPoint via = am.S_prime_polar(am.S(p));
      const PolarPoint inv = cell.inverse(SurfacePoint{1, 1, p});
      if (std::abs(via.r - inv.r) > 1e-10 || std::abs(via.phi - inv.phi) > 1e-10) {
        return std::string("S' o S differs from F_n^-1");
      }
    }
    return std::string();
  });

  s.run("rate fit examples", [&] {
    const std::vector<std::pair<double, double>> p1{{2, 0.4}, {4, 0.2}, {8, 0.1}};
    const std::vector<std::pair<double, double>> p2{{2, 0.16}, {4, 0.04}, {8, 0.01}};
    std::string f = expect_near("slope 1", fit_rate(p1).slope, -1.0, 1e-12);
    if (f.empty()) f = expect_near("slope 2", fit_rate(p2).slope, -2.0, 1e-12);
    return f;
  });

  return s.out;
}

}  // namespace weitz
