#include "catch_amalgamated.hpp"

#include "weitz/surface.hpp"

using namespace weitz;
using Catch::Approx;

TEST_CASE("grid parameters") {
  auto g = grid_params(1, 1, 0.1, 2, 2);
  CHECK(g.a_ni == Approx(0.525));
  CHECK(g.b_n == Approx(0.5));
  CHECK(g.eps_n == Approx(0.025));
  g = grid_params(1, 1, 0.1, 1, 1);
  CHECK(g.a_ni == Approx(1.0));
  CHECK(g.eps_n == Approx(0.1));
  g = grid_params(1, 1, 0.0, 4, 3);
  CHECK(g.a_ni == Approx(0.25));
  CHECK(g.b_n == Approx(0.25));
  CHECK(g.eps_n == 0.0);
}

TEST_CASE("surface assembly") {
  const Surface one(GridParams{1, 1, 0.1, kPi / 6, 1});
  CHECK(one.blocks().size() == 1);
  CHECK(one.block(1, 1).params().a == Approx(1.0));

  const Surface two = build_surface(GridParams{1, 1, 0.1, kPi / 6, 2});
  CHECK(two.blocks().size() == 4);
  const auto left1 = two.block(1, 1).boundary_lengths();
  const auto left2 = two.block(2, 1).boundary_lengths();
  CHECK(left1[2] == Approx(0.525));
  CHECK(left2[0] == Approx(0.525));
  const auto outer = two.boundary_lengths();
  CHECK(outer[0] == Approx(1.0));
  CHECK(outer[1] == Approx(1.0));
  CHECK(outer[2] == Approx(1.1));
  CHECK(outer[3] == Approx(1.0));
  CHECK_THROWS_AS(two.block(3, 1), DomainError);
}

TEST_CASE("areas add up") {
  for (int n : {1, 2, 4, 8}) {
    const Surface s(GridParams{1, 1, 0.1, kPi / 6, n});
    double sum = 0.0;
    for (const Block& b : s.blocks()) {
      sum += b.area();
    }
    CHECK(s.area() == Approx(sum).epsilon(1e-12));
    const Surface flat(GridParams{1, 1, 0.0, kPi / 6, n});
    CHECK(std::abs(flat.area() - 1.0) < 1e-12);
  }
}

TEST_CASE("net vertices") {
  CHECK(net_vertices(Surface(GridParams{1, 1, 0.1, kPi / 6, 1})).size() == 4);
  CHECK(net_vertices(Surface(GridParams{1, 1, 0.1, kPi / 6, 2})).size() == 9);
  const Surface s4(GridParams{1, 1, 0.1, kPi / 6, 4});
  CHECK(s4.net_vertices().size() == 25);
  for (const SurfacePoint& p : s4.net_vertices()) {
    CHECK(s4.contains(p));
  }
}

TEST_CASE("gluings are consistent both ways") {
  const Surface s(GridParams{1, 1, 0.1, kPi / 6, 3});
  for (const Gluing& g : s.gluings()) {
    const Vec2 a = g.motion.apply(g.segment[0]), b = g.motion.apply(g.segment[1]);
    bool found = false;
    for (const Gluing& h : s.gluings()) {
      if (!(h.from == g.to && h.to == g.from)) {
        continue;
      }
      const bool same = (dist(h.segment[0], a) < 1e-12 && dist(h.segment[1], b) < 1e-12) ||
                        (dist(h.segment[0], b) < 1e-12 && dist(h.segment[1], a) < 1e-12);
      if (same) {
        found = true;
        for (double t : {0.0, 0.3, 1.0}) {
          const Vec2 x = g.segment[0] + (g.segment[1] - g.segment[0]) * t;
          CHECK(dist(h.motion.apply(g.motion.apply(x)), x) < 1e-12);
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("a corner shared by four blocks has four representations") {
  const Surface s(GridParams{1, 1, 0.1, kPi / 6, 2});
  const auto reps = s.representations(s.net_vertex(1, 1));
  int blocks = 0;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (const SurfacePoint& r : reps) {
        if (r.i == i && r.j == j) {
          ++blocks;
          break;
        }
      }
    }
  }
  CHECK(blocks == 4);
}
