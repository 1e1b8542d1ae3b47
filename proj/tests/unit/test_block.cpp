#include "catch_amalgamated.hpp"

#include <random>

#include "weitz/block.hpp"
#include "weitz/checks.hpp"

using namespace weitz;
using Catch::Approx;

namespace {
const BlockParams kRef{1.0, 1.0, kPi / 6.0, 0.1};
}

TEST_CASE("block construction") {
  const Block blk = build_block(kRef);
  CHECK(blk.d() == Approx(0.1));
  CHECK(dist(blk.corner(Corner::E, Hex::I), blk.corner(Corner::PMinus, Hex::I)) ==
        Approx(0.4566987298107781));
  CHECK(dist(blk.corner(Corner::PPlus, Hex::I), blk.corner(Corner::F, Hex::I)) ==
        Approx(0.4566987298107781));
  CHECK(dist(blk.corner(Corner::PMinus, Hex::II), blk.corner(Corner::PPlus, Hex::II)) ==
        Approx(0.1));
  CHECK(dist(blk.corner(Corner::C, Hex::I), blk.corner(Corner::F, Hex::I)) == Approx(0.55));
  CHECK(dist(blk.corner(Corner::F, Hex::II), blk.corner(Corner::D, Hex::II)) == Approx(0.55));

  const Block flat = build_block({1.0, 1.0, kPi / 6.0, 0.0});
  CHECK(flat.d() == 0.0);
  CHECK(flat.area() == Approx(1.0));
  CHECK(dist(flat.corner(Corner::PPlus, Hex::I), flat.corner(Corner::PMinus, Hex::I)) < 1e-15);

  CHECK_THROWS_AS(build_block({1.0, 0.01, kPi / 6.0, 0.5}), ParameterError);
  CHECK_THROWS_AS(build_block({-1.0, 1.0, kPi / 6.0, 0.1}), ParameterError);
}

TEST_CASE("boundary lengths") {
  auto check = [](BlockParams p, std::array<double, 4> want) {
    const auto got = boundary_lengths(build_block(p));
    for (int k = 0; k < 4; ++k) {
      CHECK(got[k] == Approx(want[k]));
    }
  };
  check(kRef, {1, 1, 1.1, 1});
  check({1, 1, kPi / 6.0, 0.0}, {1, 1, 1, 1});
  check({0.5, 2, kPi / 4.0, 0.2}, {0.5, 2, 0.7, 2});
}

TEST_CASE("cone angles at the dipole") {
  const Block blk(kRef);
  CHECK(blk.cone_angle(Corner::PPlus) == Approx(2 * kPi - kPi / 3));
  CHECK(blk.cone_angle(Corner::PMinus) == Approx(2 * kPi + kPi / 3));
}

TEST_CASE("intra block distance examples") {
  const Block flat({1, 1, kPi / 6.0, 0.0});
  CHECK(intra_block_distance(flat, {Hex::I, {0.1, 0.1}}, {Hex::I, {0.8, 0.3}}) ==
        Approx(0.7280109889280518).epsilon(1e-12));
  const Block blk(kRef);
  const BlockPoint A{Hex::II, blk.corner(Corner::A, Hex::II)};
  const BlockPoint B{Hex::I, blk.corner(Corner::B, Hex::I)};
  const BlockPoint C{Hex::I, blk.corner(Corner::C, Hex::I)};
  const BlockPoint D{Hex::II, blk.corner(Corner::D, Hex::II)};
  CHECK(intra_block_distance(blk, A, B) == Approx(1.0).epsilon(1e-12));
  // the right side is a straight segment once the right seam is unglued
  CHECK(intra_block_distance(blk, C, D) == Approx(1.1).epsilon(1e-12));
  CHECK(intra_block_distance(blk, C, D) == intra_block_distance(blk, D, C));
}

TEST_CASE("distance properties on random pairs") {
  std::mt19937_64 rng(3);
  const Block blk(kRef);
  const Block flat({1, 1, kPi / 6.0, 0.0});
  for (int k = 0; k < 200; ++k) {
    const BlockPoint p = random_block_point(blk, rng), q = random_block_point(blk, rng);
    const BlockPoint r = random_block_point(blk, rng);
    const double pq = blk.distance(p, q);
    CHECK(pq == Approx(blk.distance(q, p)).margin(1e-12));
    CHECK(blk.distance(p, r) <= pq + blk.distance(q, r) + 1e-12);
    const BlockPoint fp = random_block_point(flat, rng), fq = random_block_point(flat, rng);
    CHECK(std::abs(flat.distance(fp, fq) - dist(fp.pos, fq.pos)) <= 1e-12);
  }
}

TEST_CASE("chart-transition holonomy") {
  const Block blk(kRef);
  CHECK(std::abs(blk.holonomy(Loop::AroundPlus) - kPi / 3) < 1e-10);
  CHECK(std::abs(blk.holonomy(Loop::AroundMinus) + kPi / 3) < 1e-10);
  CHECK(std::abs(blk.holonomy(Loop::AroundDipole)) < 1e-10);
  const Block wide({1, 2, kPi / 4, 0.2});
  CHECK(std::abs(wide.holonomy(Loop::AroundPlus) - kPi / 2) < 1e-10);
}

TEST_CASE("dislocation segment membership") {
  const Block blk(kRef);
  const Vec2 pm = blk.corner(Corner::PMinus, Hex::I);
  const Vec2 pp = blk.corner(Corner::PPlus, Hex::I);
  CHECK(blk.on_dislocation({Hex::I, (pm + pp) * 0.5}));
  CHECK_FALSE(blk.on_dislocation({Hex::I, {0.2, 0.2}}));
  CHECK(blk.contains({Hex::I, (pm + pp) * 0.5}));
  CHECK_FALSE(blk.contains({Hex::I, {0.5, 0.9}}));
}

TEST_CASE("block json lists both hexagons") {
  const std::string j = Block(kRef).to_json();
  CHECK(j.find("hexagon_I") != std::string::npos);
  CHECK(j.find("hexagon_II") != std::string::npos);
}
