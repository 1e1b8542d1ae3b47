#include "weitz/block.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

namespace weitz {

namespace {

// Vertex order of each hexagon, counterclockwise.
constexpr std::array<Corner, 6> kHexI{Corner::B, Corner::C, Corner::F,
                                      Corner::PPlus, Corner::PMinus, Corner::E};
constexpr std::array<Corner, 6> kHexII{Corner::E, Corner::PMinus, Corner::PPlus,
                                       Corner::F, Corner::D, Corner::A};

int hex_slot(Corner c, Hex h) {
  const auto& order = h == Hex::I ? kHexI : kHexII;
  for (int k = 0; k < 6; ++k) {
    if (order[k] == c) {
      return k;
    }
  }
  return -1;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

const char* corner_name(Corner c) {
  switch (c) {
    case Corner::A: return "A";
    case Corner::B: return "B";
    case Corner::C: return "C";
    case Corner::D: return "D";
    case Corner::E: return "E";
    case Corner::F: return "F";
    case Corner::PPlus: return "p+";
    case Corner::PMinus: return "p-";
    case Corner::G: return "G";
    case Corner::H: return "H";
  }
  return "?";
}

}  // namespace

void BlockParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw ParameterError("block sides must be positive");
  }
  if (!(theta > 0.0) || !(theta < kPi / 2.0)) {
    throw ParameterError("theta must lie in (0, pi/2)");
  }
  if (!(eps >= 0.0)) {
    throw ParameterError("eps must be non-negative");
  }
  if (d() * std::cos(theta) >= b) {
    throw ParameterError("dislocation line too long: d cos(theta) >= b");
  }
}

Block::Block(const BlockParams& params, int i, int j) : params_(params), i_(i), j_(j) {
  params_.validate();
  const double a = params_.a;
  const double b = params_.b;
  const double eps = params_.eps;
  const double dc = d() * std::cos(params_.theta);
  offset_ = 0.5 * (b - dc);
  const double xp = offset_ + dc;
  const double mid = 0.5 * a;
  hex_i_ = {{0, 0}, {b, 0}, {b, mid + 0.5 * eps}, {xp, mid + 0.5 * eps}, {offset_, mid}, {0, mid}};
  hex_ii_ = {{0, mid}, {offset_, mid}, {xp, mid - 0.5 * eps}, {b, mid - 0.5 * eps}, {b, a}, {0, a}};
}

Block build_block(const BlockParams& params) { return Block(params); }

bool Block::has_corner(Corner c, Hex h) const {
  if (c == Corner::G) {
    return h == Hex::I;
  }
  if (c == Corner::H) {
    return h == Hex::II;
  }
  return hex_slot(c, h) >= 0;
}

Vec2 Block::corner(Corner c, Hex h) const {
  if (c == Corner::G && h == Hex::I) {
    return {offset_, 0.0};
  }
  if (c == Corner::H && h == Hex::II) {
    return {offset_, params_.a};
  }
  const int k = hex_slot(c, h);
  if (k < 0) {
    throw DomainError(std::string("corner ") + corner_name(c) + " is not on hexagon " +
                      (h == Hex::I ? "I" : "II"));
  }
  return hexagon(h)[k];
}

std::array<Vec2, 2> Block::seam_segment(Seam s, Hex h) const {
  switch (s) {
    case Seam::Left: return {corner(Corner::E, h), corner(Corner::PMinus, h)};
    case Seam::Dislocation: return {corner(Corner::PMinus, h), corner(Corner::PPlus, h)};
    case Seam::Right: return {corner(Corner::PPlus, h), corner(Corner::F, h)};
  }
  return {};
}

Motion Block::seam_motion(Seam s) const {
  switch (s) {
    case Seam::Left: return Motion::identity();
    case Seam::Dislocation:
      return Motion::rotation_about(corner(Corner::PMinus, Hex::I), 2.0 * params_.theta);
    case Seam::Right: return Motion::translation({0.0, params_.eps});
  }
  return {};
}

std::array<double, 4> Block::boundary_lengths() const {
  const Vec2 b = corner(Corner::B, Hex::I);
  const Vec2 c = corner(Corner::C, Hex::I);
  const Vec2 a = corner(Corner::A, Hex::II);
  const Vec2 d = corner(Corner::D, Hex::II);
  const double right = dist(c, corner(Corner::F, Hex::I)) + dist(corner(Corner::F, Hex::II), d);
  const double left = dist(b, corner(Corner::E, Hex::I)) + dist(corner(Corner::E, Hex::II), a);
  return {left, dist(b, c), right, dist(a, d)};
}

std::array<double, 4> boundary_lengths(const Block& blk) { return blk.boundary_lengths(); }

double Block::area() const { return polygon_area(hex_i_) + polygon_area(hex_ii_); }

double Block::interior_angle(Corner c, Hex h) const {
  const int k = hex_slot(c, h);
  if (k < 0) {
    throw DomainError(std::string("corner ") + corner_name(c) + " is not a hexagon vertex");
  }
  const auto poly = hexagon(h);
  const Vec2 v = poly[k];
  const Vec2 next = poly[(k + 1) % 6] - v;
  const Vec2 prev = poly[(k + 5) % 6] - v;
  double ang = std::atan2(next.cross(prev), next.dot(prev));
  if (ang < 0.0) {
    ang += 2.0 * kPi;
  }
  return ang;
}

double Block::cone_angle(Corner c) const {
  if (c != Corner::PPlus && c != Corner::PMinus) {
    throw DomainError("cone angle is defined at p+ and p- only");
  }
  if (params_.eps == 0.0) {
    return 2.0 * kPi;
  }
  return interior_angle(c, Hex::I) + interior_angle(c, Hex::II);
}

bool Block::contains(const BlockPoint& p, double tol) const {
  return point_in_polygon(p.pos, hexagon(p.hex), tol);
}

bool Block::on_dislocation(const BlockPoint& p, double tol) const {
  if (params_.eps == 0.0) {
    return false;
  }
  const auto seg = seam_segment(Seam::Dislocation, p.hex);
  return point_on_segment(p.pos, seg[0], seg[1], tol) && dist(p.pos, seg[0]) > tol &&
         dist(p.pos, seg[1]) > tol;
}

Motion Block::develop(Hex start, std::span<const Seam> crossings) const {
  Motion dev = Motion::identity();
  Hex cur = start;
  for (Seam s : crossings) {
    const Motion m = seam_motion(s);
    dev = dev.compose(cur == Hex::I ? m : m.inverse());
    cur = other(cur);
  }
  return dev;
}

double Block::holonomy(Hex start, std::span<const Seam> crossings) const {
  return wrap_angle(-develop(start, crossings).angle());
}

double Block::holonomy(Loop loop) const {
  switch (loop) {
    case Loop::AroundPlus: {
      constexpr std::array<Seam, 2> c{Seam::Right, Seam::Dislocation};
      return holonomy(Hex::I, c);
    }
    case Loop::AroundMinus: {
      constexpr std::array<Seam, 2> c{Seam::Dislocation, Seam::Left};
      return holonomy(Hex::I, c);
    }
    case Loop::AroundDipole: {
      constexpr std::array<Seam, 2> c{Seam::Right, Seam::Left};
      return holonomy(Hex::I, c);
    }
  }
  return 0.0;
}

bool Block::straight_through(Hex start, Vec2 p, std::span<const Seam> chain, Vec2 q,
                             double& length) const {
  const Motion full = develop(start, chain);
  const Vec2 qd = full.apply(q);
  Motion dev = Motion::identity();
  Hex cur = start;
  Vec2 from = p;
  double t_prev = 0.0;
  for (Seam s : chain) {
    const auto seg = seam_segment(s, cur);
    const Vec2 c0 = dev.apply(seg[0]);
    const Vec2 c1 = dev.apply(seg[1]);
    double t = 0.0;
    if (!segment_crossing(p, qd, c0, c1, t) || t < t_prev - kTol) {
      return false;
    }
    const Vec2 at = p + (qd - p) * t;
    if (!segment_in_polygon(from, at, transform(hexagon(cur), dev))) {
      return false;
    }
    const Motion m = seam_motion(s);
    dev = dev.compose(cur == Hex::I ? m : m.inverse());
    cur = other(cur);
    from = at;
    t_prev = t;
  }
  if (!segment_in_polygon(from, qd, transform(hexagon(cur), dev))) {
    return false;
  }
  length = dist(p, qd);
  return true;
}

double Block::distance(const BlockPoint& p, const BlockPoint& q) const {
  if (!contains(p) || !contains(q)) {
    throw DomainError("point outside block");
  }
  // Shortest straight (developed) path over seam chains of length <= 3.
  auto straight = [&](const BlockPoint& u, const BlockPoint& v) {
    double best = std::numeric_limits<double>::infinity();
    double len = 0.0;
    if (u.hex == v.hex && straight_through(u.hex, u.pos, {}, v.pos, len)) {
      best = std::min(best, len);
    }
    for (Seam s1 : kSeams) {
      std::array<Seam, 1> c1{s1};
      if (u.hex != v.hex && straight_through(u.hex, u.pos, c1, v.pos, len)) {
        best = std::min(best, len);
      }
      for (Seam s2 : kSeams) {
        if (s2 == s1) {
          continue;
        }
        std::array<Seam, 2> c2{s1, s2};
        if (u.hex == v.hex && straight_through(u.hex, u.pos, c2, v.pos, len)) {
          best = std::min(best, len);
        }
        for (Seam s3 : kSeams) {
          if (s3 == s2) {
            continue;
          }
          std::array<Seam, 3> c3{s1, s2, s3};
          if (u.hex != v.hex && straight_through(u.hex, u.pos, c3, v.pos, len)) {
            best = std::min(best, len);
          }
        }
      }
    }
    return best;
  };
  double best = straight(p, q);
  // Broken paths through p-, where the total angle exceeds 2 pi.
  const BlockPoint pm_p{p.hex, corner(Corner::PMinus, p.hex)};
  const BlockPoint pm_q{q.hex, corner(Corner::PMinus, q.hex)};
  best = std::min(best, straight(p, pm_p) + straight(pm_q, q));
  return best;
}

double intra_block_distance(const Block& blk, const BlockPoint& p, const BlockPoint& q) {
  return blk.distance(p, q);
}

std::vector<ConvexPiece> Block::pieces() const {
  std::vector<ConvexPiece> out{
      {Hex::I, false, {Corner::B, Corner::G, Corner::PMinus, Corner::E}},
      {Hex::I, true, {Corner::G, Corner::C, Corner::F, Corner::PPlus, Corner::PMinus}},
      {Hex::II, false, {Corner::E, Corner::PMinus, Corner::H, Corner::A}},
      {Hex::II, true, {Corner::PMinus, Corner::PPlus, Corner::F, Corner::D, Corner::H}},
  };
  if (params_.eps == 0.0) {
    for (auto& pc : out) {
      std::erase(pc.corners, Corner::PPlus);
    }
  }
  return out;
}

std::vector<Vec2> Block::piece_polygon(const ConvexPiece& piece) const {
  std::vector<Vec2> poly;
  for (Corner c : piece.corners) {
    poly.push_back(corner(c, piece.hex));
  }
  return poly;
}

std::string Block::to_json() const {
  nlohmann::ordered_json j;
  j["params"] = {{"a", params_.a}, {"b", params_.b}, {"theta", params_.theta}, {"eps", params_.eps}};
  j["d"] = d();
  j["offset"] = offset_;
  for (Hex h : {Hex::I, Hex::II}) {
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    const auto& order = h == Hex::I ? kHexI : kHexII;
    for (int k = 0; k < 6; ++k) {
      verts.push_back({{"label", corner_name(order[k])}, {"x", hexagon(h)[k].dx},
                       {"y", hexagon(h)[k].dy}});
    }
    j[h == Hex::I ? "hexagon_I" : "hexagon_II"] = verts;
  }
  return j.dump();
}

}  // namespace weitz
