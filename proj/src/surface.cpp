#include "weitz/surface.hpp"

#include <json.hpp>

namespace weitz {

GridValues grid_params(double a, double b, double eps, int n, int i) {
  if (n < 1) {
    throw ParameterError("n must be positive");
  }
  if (i < 1 || i > n) {
    throw ParameterError("column index " + std::to_string(i) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  const double nn = n;
  return {(a + (i - 1) * eps / nn) / nn, b / nn, eps / (nn * nn)};
}

BlockParams GridParams::block(int i) const {
  const GridValues g = grid_params(a, b, eps, n, i);
  return {g.a_ni, g.b_n, theta, g.eps_n};
}

void GridParams::validate() const {
  if (n < 1) {
    throw ParameterError("n must be positive");
  }
  for (int i = 1; i <= n; ++i) {
    block(i).validate();
  }
}

Surface::Surface(const GridParams& params) : params_(params) {
  params_.validate();
  const int n = params_.n;
  blocks_.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      blocks_.emplace_back(params_.block(i), i, j);
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const Block& blk = block(i, j);
      // inside the block: hexagon II -> hexagon I across each seam
      for (Seam s : kSeams) {
        const auto seg = blk.seam_segment(s, Hex::II);
        if (dist(seg[0], seg[1]) > 0.0) {
          add_gluing(blk.chart(Hex::II), blk.chart(Hex::I), blk.seam_motion(s), seg);
        }
      }
      const GridValues g = grid_params(params_.a, params_.b, params_.eps, n, i);
      if (i > 1) {
        const Block& left = block(i - 1, j);
        add_gluing(blk.chart(Hex::I), left.chart(Hex::I), Motion::translation({g.b_n, 0.0}),
                   {blk.corner(Corner::B, Hex::I), blk.corner(Corner::E, Hex::I)});
        add_gluing(blk.chart(Hex::II), left.chart(Hex::II),
                   Motion::translation({g.b_n, -g.eps_n}),
                   {blk.corner(Corner::E, Hex::II), blk.corner(Corner::A, Hex::II)});
      }
      if (j > 1) {
        const Block& below = block(i, j - 1);
        add_gluing(blk.chart(Hex::I), below.chart(Hex::II), Motion::translation({0.0, g.a_ni}),
                   {blk.corner(Corner::B, Hex::I), blk.corner(Corner::C, Hex::I)});
      }
    }
  }
}

Surface build_surface(const GridParams& params) { return Surface(params); }

void Surface::add_gluing(ChartId from, ChartId to, const Motion& m, std::array<Vec2, 2> seg) {
  gluings_.push_back({from, to, m, seg});
  gluings_.push_back({to, from, m.inverse(), {m.apply(seg[0]), m.apply(seg[1])}});
}

const Block& Surface::block(int i, int j) const {
  const int n = params_.n;
  if (i < 1 || i > n || j < 1 || j > n) {
    throw DomainError("block index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range");
  }
  return blocks_[static_cast<std::size_t>(j - 1) * n + (i - 1)];
}

bool Surface::contains(const SurfacePoint& p, double tol) const {
  const int n = params_.n;
  if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) {
    return false;
  }
  return block(p.i, p.j).contains(p.bp, tol);
}

std::vector<SurfacePoint> Surface::representations(const SurfacePoint& p, double tol) const {
  if (!contains(p, tol)) {
    throw DomainError("point outside surface");
  }
  std::vector<SurfacePoint> out{p};
  for (std::size_t k = 0; k < out.size(); ++k) {
    const SurfacePoint cur = out[k];
    const ChartId c = cur.chart();
    for (const Gluing& g : gluings_) {
      if (!(g.from == c) || !point_on_segment(cur.bp.pos, g.segment[0], g.segment[1], tol)) {
        continue;
      }
      const SurfacePoint img{g.to.i, g.to.j, {g.to.hex, g.motion.apply(cur.bp.pos)}};
      bool seen = false;
      for (const SurfacePoint& q : out) {
        if (q.i == img.i && q.j == img.j && q.bp.hex == img.bp.hex &&
            dist(q.bp.pos, img.bp.pos) <= tol) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        out.push_back(img);
      }
    }
  }
  return out;
}

SurfacePoint Surface::net_vertex(int I, int J) const {
  const int n = params_.n;
  if (I < 0 || I > n || J < 0 || J > n) {
    throw DomainError("net vertex index out of range");
  }
  const int bi = I < n ? I + 1 : n;
  const int bj = J < n ? J + 1 : n;
  const Block& blk = block(bi, bj);
  if (J < n) {
    const Corner c = I < n ? Corner::B : Corner::C;
    return {bi, bj, {Hex::I, blk.corner(c, Hex::I)}};
  }
  const Corner c = I < n ? Corner::A : Corner::D;
  return {bi, bj, {Hex::II, blk.corner(c, Hex::II)}};
}

std::vector<SurfacePoint> Surface::net_vertices() const {
  const int n = params_.n;
  std::vector<SurfacePoint> out;
  out.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int J = 0; J <= n; ++J) {
    for (int I = 0; I <= n; ++I) {
      out.push_back(net_vertex(I, J));
    }
  }
  return out;
}

std::vector<SurfacePoint> net_vertices(const Surface& s) { return s.net_vertices(); }

std::array<double, 4> Surface::boundary_lengths() const {
  const int n = params_.n;
  std::array<double, 4> out{};
  for (int k = 1; k <= n; ++k) {
    out[0] += block(1, k).boundary_lengths()[0];
    out[1] += block(k, 1).boundary_lengths()[1];
    out[2] += block(n, k).boundary_lengths()[2];
    out[3] += block(k, n).boundary_lengths()[3];
  }
  return out;
}

double Surface::area() const {
  double total = 0.0;
  for (const Block& blk : blocks_) {
    total += blk.area();
  }
  return total;
}

std::string Surface::summary_json() const {
  nlohmann::ordered_json j;
  j["params"] = {{"a", params_.a}, {"b", params_.b}, {"eps", params_.eps},
                 {"theta", params_.theta}, {"n", params_.n}};
  const auto bl = boundary_lengths();
  j["boundary"] = {{"left", bl[0]}, {"bottom", bl[1]}, {"right", bl[2]}, {"top", bl[3]}};
  j["area"] = area();
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (int i = 1; i <= params_.n; ++i) {
    const BlockParams bp = params_.block(i);
    cols.push_back({{"i", i}, {"a", bp.a}, {"b", bp.b}, {"eps", bp.eps}, {"d", bp.d()}});
  }
  j["columns"] = cols;
  j["net_vertices"] = (params_.n + 1) * (params_.n + 1);
  return j.dump(2);
}

}  // namespace weitz
