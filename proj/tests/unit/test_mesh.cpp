#include "catch_amalgamated.hpp"

#include <random>

#include "weitz/checks.hpp"
#include "weitz/homogenization.hpp"
#include "weitz/mesh.hpp"

using namespace weitz;
using Catch::Approx;

namespace {

GridParams grid(int n, double eps) { return GridParams{1, 1, eps, kPi / 6, n}; }

SurfacePoint at(const Surface& s, int i, int j, Hex h, Corner c) {
  return {i, j, {h, s.block(i, j).corner(c, h)}};
}

}  // namespace

TEST_CASE("coarse mesh of the unit square") {
  const Surface s(grid(1, 0.0));
  const SurfaceMesh m = triangulate(s, 0.5);
  CHECK(m.mesh().vertex_count() >= 9);
  double longest = 0.0;
  for (const MeshCell& c : m.mesh().cells()) {
    for (std::size_t a = 0; a < c.pos.size(); ++a) {
      for (std::size_t b = a + 1; b < c.pos.size(); ++b) {
        longest = std::max(longest, dist(c.pos[a], c.pos[b]));
      }
    }
  }
  CHECK(longest <= 0.5 * std::sqrt(2.0) + 1e-12);
}

TEST_CASE("dipole points are mesh vertices") {
  const Surface s(grid(1, 0.1));
  const SurfaceMesh m = triangulate(s, 0.1);
  CHECK(m.vertex_at(at(s, 1, 1, Hex::I, Corner::PPlus)) >= 0);
  CHECK(m.vertex_at(at(s, 1, 1, Hex::I, Corner::PMinus)) >= 0);
  CHECK(m.vertex_at(at(s, 1, 1, Hex::I, Corner::PPlus)) !=
        m.vertex_at(at(s, 1, 1, Hex::I, Corner::PMinus)));
}

TEST_CASE("mesh size precondition") {
  const Surface s(grid(2, 0.1));
  CHECK_THROWS_AS(triangulate(s, 0.3), RefinementError);
  CHECK_THROWS_AS(triangulate(s, 0.0), RefinementError);
}

TEST_CASE("mesh over four blocks is connected") {
  const Surface s(grid(2, 0.1));
  const SurfaceMesh m = triangulate(s, 0.05);
  const auto tree = m.mesh().dijkstra(m.anchor(s.net_vertex(0, 0)));
  for (std::size_t v = 0; v < m.mesh().vertex_count(); ++v) {
    CHECK(std::isfinite(tree.dist[v]));
  }
}

TEST_CASE("shortest path examples") {
  const Surface flat(grid(1, 0.0));
  const SurfaceMesh fm = triangulate(flat, 0.01);
  CHECK(mesh_distance(fm, flat.net_vertex(0, 0), flat.net_vertex(1, 1)) ==
        Approx(std::sqrt(2.0)).margin(0.03));

  const Surface s(grid(1, 0.1));
  const double h = 0.01;
  const SurfaceMesh m = triangulate(s, h);
  const SurfacePoint A = at(s, 1, 1, Hex::II, Corner::A), B = at(s, 1, 1, Hex::I, Corner::B);
  const SurfacePoint C = at(s, 1, 1, Hex::I, Corner::C), D = at(s, 1, 1, Hex::II, Corner::D);
  CHECK(mesh_distance(m, A, B) == Approx(1.0).margin(3 * h));
  CHECK(mesh_distance(m, C, D) == Approx(1.1).margin(3 * h));
  const Block& blk = s.block(1, 1);
  CHECK(mesh_distance(m, A, C) == Approx(intra_block_distance(blk, A.bp, C.bp)).margin(3 * h));
}

TEST_CASE("mesh distances are symmetric and converge in h") {
  std::mt19937_64 rng(19);
  const Surface s(grid(2, 0.1));
  const SurfaceMesh coarse = triangulate(s, 0.02);
  const SurfaceMesh fine = triangulate(s, 0.01);
  std::uniform_int_distribution<int> pick(1, 2);
  for (int k = 0; k < 20; ++k) {
    SurfacePoint p{pick(rng), pick(rng), {}}, q{pick(rng), pick(rng), {}};
    p.bp = random_block_point(s.block(p.i, p.j), rng);
    q.bp = random_block_point(s.block(q.i, q.j), rng);
    const double d = mesh_distance(coarse, p, q);
    CHECK(d == mesh_distance(coarse, q, p));
    const double df = mesh_distance(fine, p, q);
    CHECK(std::abs(d - df) <= 3 * 0.02);
  }
}

TEST_CASE("smooth mode keeps paths off the dislocation") {
  const Surface s(grid(1, 0.1));
  const SurfaceMesh metric = triangulate(s, 0.005, MeshMode::Metric);
  const SurfaceMesh smooth = triangulate(s, 0.005, MeshMode::Smooth);
  const Block& blk = s.block(1, 1);
  auto mid_of = [&](Hex h) {
    return (blk.corner(Corner::PMinus, h) + blk.corner(Corner::PPlus, h)) * 0.5;
  };
  const Vec2 mid = mid_of(Hex::I);
  // just below the segment in hexagon I and just above it in hexagon II
  const SurfacePoint below{1, 1, {Hex::I, mid - Vec2{0, 0.01}}};
  const SurfacePoint above{1, 1, {Hex::II, mid_of(Hex::II) + Vec2{0, 0.01}}};
  const double across = mesh_distance(metric, below, above);
  const double around = mesh_distance(smooth, below, above);
  CHECK(across < 0.05);
  CHECK(around > 0.09);
  CHECK_THROWS_AS(smooth.anchor({1, 1, {Hex::I, mid}}), DomainError);
  CHECK_NOTHROW(metric.anchor({1, 1, {Hex::I, mid}}));
}

TEST_CASE("sector mesh agrees with the analytic sector distance") {
  const Sector sec(1, 1, 0.1);
  const double h = 0.01;
  const GeodesicMesh m = triangulate_sector(sec.r0(), sec.r1(), sec.total_angle(), h);
  std::mt19937_64 rng(23);
  std::vector<PolarPoint> pts{{10, 0}, {10, 0.1}, {10.5, 0}, {10.5, 0.1}};
  for (int k = 0; k < 10; ++k) {
    pts.push_back(random_sector_point(sec, rng));
  }
  std::vector<Anchor> anchors;
  for (const PolarPoint& p : pts) {
    anchors.push_back(m.anchor_in(ChartId::sector(), polar_to_cart(p).xy()));
  }
  const auto d = distance_matrix(m, anchors);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      CHECK(d[a][b] == Approx(sector_distance(sec, pts[a], pts[b])).margin(3 * h));
    }
  }
}

TEST_CASE("distortion of the identity is zero") {
  const Surface s(grid(2, 0.1));
  const SurfaceMesh m = triangulate(s, 0.05);
  const auto net = s.net_vertices();
  const auto d = distance_matrix(m, net);
  CHECK(distortion(net_map(d, d)) == 0.0);
  CHECK(d[0][0] == 0.0);
}

TEST_CASE("cells crossed by coordinate lines in the sector") {
  const Sector sec(1, 1, 0.1);
  for (int n : {1, 2, 4, 8}) {
    const SectorPartition part = partition(sec, n);
    std::vector<PolarPoint> radial, arc;
    for (int k = 0; k <= 200; ++k) {
      radial.push_back({10 + k / 200.0, 0.0123});
      arc.push_back({10.37, 0.1 * k / 200.0});
    }
    CHECK(cells_crossed(part, radial) == n);
    CHECK(cells_crossed(part, arc) == n);
  }
}

TEST_CASE("net geodesics cross at most 3n cells, monotonically") {
  const int n = 8;
  const Surface s(grid(n, 0.1));
  const SurfaceMesh m = triangulate(s, 1.0 / (40 * n));
  std::mt19937_64 rng(29);
  const auto net = s.net_vertices();
  std::uniform_int_distribution<std::size_t> pick(0, net.size() - 1);
  for (int k = 0; k < 200; ++k) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) {
      continue;
    }
    const MeshPath path = shortest_path(m, net[a], net[b]);
    CHECK(cells_crossed(m.mesh(), path) <= 3 * n);
    const auto seq = cell_sequence(m.mesh(), path);
    CHECK(monotone_indices(seq));
  }
}

TEST_CASE("monotone index predicate") {
  using S = std::vector<std::pair<int, int>>;
  CHECK(monotone_indices(S{{1, 1}, {2, 1}, {2, 2}, {3, 3}}));
  CHECK(monotone_indices(S{{3, 1}, {2, 1}, {2, 2}, {3, 2}}));
  CHECK_FALSE(monotone_indices(S{{1, 1}, {1, 2}, {1, 1}}));
  CHECK_FALSE(monotone_indices(S{{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
}
