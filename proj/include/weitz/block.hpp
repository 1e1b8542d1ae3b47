#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "weitz/geometry.hpp"

namespace weitz {

/// Parameters of a single dislocated block: short side a, width b,
/// disclination half-angle theta and dislocation magnitude eps.
struct BlockParams {
  double a = 1.0;
  double b = 1.0;
  double theta = kPi / 6.0;
  double eps = 0.0;

  /// Length of the dislocation line, eps = 2 d sin(theta).
  double d() const { return eps / (2.0 * std::sin(theta)); }

  void validate() const;
};

enum class Corner : std::uint8_t { A, B, C, D, E, F, PPlus, PMinus, G, H };

/// The three segments along which the two hexagons are identified.
enum class Seam : std::uint8_t { Left, Dislocation, Right };

inline constexpr std::array<Seam, 3> kSeams{Seam::Left, Seam::Dislocation, Seam::Right};

enum class Loop : std::uint8_t { AroundPlus, AroundMinus, AroundDipole };

struct BlockPoint {
  Hex hex = Hex::I;
  Vec2 pos{};
};

/// A convex sub-polygon of one hexagon, listed by corner labels.
struct ConvexPiece {
  Hex hex = Hex::I;
  bool right = false;
  std::vector<Corner> corners;
};

/// The building block: two Euclidean hexagons glued along E p-, p- p+ and
/// p+ F.
///
/// Hexagon I is the lower one, with B at the origin, C = (b, 0), E = (0, a/2),
/// F = (b, (a + eps)/2) and the dislocation line rising at angle theta from
/// p- = (|Ep-|, a/2). Hexagon II is stored in the chart where its E p- seam
/// coincides with that of hexagon I, so A = (0, a) and D = (b, a), while its
/// p+ and F sit eps/2 below a/2. Seam motions map hexagon II coordinates into
/// the hexagon I chart.
class Block {
public:
  explicit Block(const BlockParams& params, int i = 1, int j = 1);

  const BlockParams& params() const { return params_; }
  int i() const { return i_; }
  int j() const { return j_; }
  double d() const { return params_.d(); }
  /// |E p-| = |p+ F|.
  double offset() const { return offset_; }

  ChartId chart(Hex h) const { return ChartId::hexagon(i_, j_, h); }

  bool has_corner(Corner c, Hex h) const;
  Vec2 corner(Corner c, Hex h) const;
  std::span<const Vec2> hexagon(Hex h) const { return h == Hex::I ? hex_i_ : hex_ii_; }

  /// Segment endpoints of a seam in the given hexagon's chart.
  std::array<Vec2, 2> seam_segment(Seam s, Hex h) const;
  /// Rigid motion taking hexagon II coordinates to hexagon I coordinates
  /// across the given seam.
  Motion seam_motion(Seam s) const;

  /// (left, bottom, right, top) = (|AB|, |BC|, |CD|, |DA|).
  std::array<double, 4> boundary_lengths() const;
  double area() const;
  double interior_angle(Corner c, Hex h) const;
  /// Total angle around p+ or p-.
  double cone_angle(Corner c) const;

  bool contains(const BlockPoint& p, double tol = kTol) const;
  bool on_dislocation(const BlockPoint& p, double tol = kTol) const;

  /// Exact intrinsic distance inside the block.
  double distance(const BlockPoint& p, const BlockPoint& q) const;

  /// Developing motion accumulated by crossing `crossings` in order,
  /// starting in hexagon `start`.
  Motion develop(Hex start, std::span<const Seam> crossings) const;
  /// Rotation picked up by a vector carried around the loop, radians.
  double holonomy(Hex start, std::span<const Seam> crossings) const;
  double holonomy(Loop loop) const;

  std::vector<ConvexPiece> pieces() const;
  std::vector<Vec2> piece_polygon(const ConvexPiece& piece) const;

  std::string to_json() const;

private:
  bool straight_through(Hex start, Vec2 p, std::span<const Seam> chain, Vec2 q,
                        double& length) const;

  BlockParams params_;
  int i_ = 1;
  int j_ = 1;
  double offset_ = 0.0;
  std::vector<Vec2> hex_i_;
  std::vector<Vec2> hex_ii_;
};

Block build_block(const BlockParams& params);

std::array<double, 4> boundary_lengths(const Block& blk);

double intra_block_distance(const Block& blk, const BlockPoint& p, const BlockPoint& q);

}  // namespace weitz
