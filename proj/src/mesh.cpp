#include "weitz/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <queue>

#include "weitz/parallel.hpp"

namespace weitz {

// ---------------------------------------------------------------------------
// GeodesicMesh

std::uint32_t GeodesicMesh::add_vertex() {
  members_.emplace_back();
  return static_cast<std::uint32_t>(members_.size() - 1);
}

std::uint32_t GeodesicMesh::add_cell(ChartId chart, int gi, int gj, std::vector<Vec2> polygon) {
  cells_.push_back({chart, gi, gj, std::move(polygon), {}, {}});
  return static_cast<std::uint32_t>(cells_.size() - 1);
}

void GeodesicMesh::attach(std::uint32_t v, std::uint32_t cell, Vec2 pos) {
  for (const Membership& m : members_[v]) {
    if (m.cell == cell) {
      return;
    }
  }
  members_[v].push_back({cell, pos});
  std::sort(members_[v].begin(), members_[v].end(),
            [](const Membership& x, const Membership& y) { return x.cell < y.cell; });
  cells_[cell].verts.push_back(v);
  cells_[cell].pos.push_back(pos);
}

std::size_t GeodesicMesh::edge_count() const {
  std::size_t total = 0;
  for (const MeshCell& c : cells_) {
    total += c.verts.size() * (c.verts.size() - 1) / 2;
  }
  return total;
}

Anchor GeodesicMesh::anchor_in(ChartId chart, Vec2 pos, double tol) const {
  Anchor a;
  for (std::uint32_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].chart == chart && point_in_polygon(pos, cells_[c].polygon, tol)) {
      a.in.push_back({c, pos});
    }
  }
  return a;
}

GeodesicMesh::Tree GeodesicMesh::dijkstra(const Anchor& src, std::span<const Anchor> targets,
                                          double bound) const {
  const std::size_t nv = members_.size();
  const std::size_t total = nv + targets.size();
  Tree t;
  t.dist.assign(total, kInf);
  t.pred.assign(total, -2);
  t.pred_cell.assign(total, 0);
  t.pred_pos.assign(total, {});
  t.self_pos.assign(total, {});
  std::vector<char> done(total, 0);

  std::vector<std::vector<std::pair<std::uint32_t, Vec2>>> cell_targets;
  if (!targets.empty()) {
    cell_targets.resize(cells_.size());
    for (std::size_t k = 0; k < targets.size(); ++k) {
      for (const Membership& m : targets[k].in) {
        cell_targets[m.cell].push_back({static_cast<std::uint32_t>(nv + k), m.pos});
      }
    }
  }

  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  auto relax_cell = [&](std::int64_t from, double base, std::uint32_t c, Vec2 p) {
    const MeshCell& cell = cells_[c];
    auto relax = [&](std::uint32_t v, Vec2 q) {
      if (done[v]) {
        return;
      }
      const double nd = base + dist(p, q);
      if (nd < t.dist[v]) {
        t.dist[v] = nd;
        t.pred[v] = from;
        t.pred_cell[v] = c;
        t.pred_pos[v] = p;
        t.self_pos[v] = q;
        heap.push({nd, v});
      }
    };
    for (std::size_t k = 0; k < cell.verts.size(); ++k) {
      relax(cell.verts[k], cell.pos[k]);
    }
    if (!cell_targets.empty()) {
      for (const auto& [v, q] : cell_targets[c]) {
        relax(v, q);
      }
    }
  };

  for (const Membership& m : src.in) {
    relax_cell(-1, 0.0, m.cell, m.pos);
  }
  std::size_t remaining = targets.size();
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u] || d > t.dist[u]) {
      continue;
    }
    if (d > bound) {
      break;
    }
    done[u] = 1;
    if (u >= nv) {
      if (--remaining == 0) {
        break;
      }
      continue;
    }
    for (const Membership& m : members_[u]) {
      relax_cell(u, d, m.cell, m.pos);
    }
  }
  return t;
}

MeshPath GeodesicMesh::path_to(const Tree& tree, std::size_t node) const {
  if (node >= tree.dist.size() || !std::isfinite(tree.dist[node])) {
    throw NoPathError("no path to requested node");
  }
  MeshPath p;
  p.length = tree.dist[node];
  std::int64_t cur = static_cast<std::int64_t>(node);
  while (cur >= 0) {
    const auto k = static_cast<std::size_t>(cur);
    p.edges.push_back({tree.pred_cell[k], tree.pred_pos[k], tree.self_pos[k], tree.pred[k], cur});
    cur = tree.pred[k];
  }
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

std::vector<Point2> MeshPath::polyline(const std::vector<MeshCell>& cells) const {
  std::vector<Point2> out;
  for (const PathEdge& e : edges) {
    const ChartId c = cells[e.cell].chart;
    out.push_back(Point2::at(e.from, c));
    out.push_back(Point2::at(e.to, c));
  }
  return out;
}

void GeodesicMesh::export_text(std::ostream& os) const {
  os << "# vertices: id chart x y\n";
  for (std::size_t v = 0; v < members_.size(); ++v) {
    const Membership& m = members_[v].front();
    os << "v " << v << ' ' << cells_[m.cell].chart.str() << ' ' << m.pos.dx << ' ' << m.pos.dy
       << '\n';
  }
  os << "# edges: u v weight\n";
  for (const MeshCell& c : cells_) {
    for (std::size_t a = 0; a < c.verts.size(); ++a) {
      for (std::size_t b = a + 1; b < c.verts.size(); ++b) {
        os << "e " << c.verts[a] << ' ' << c.verts[b] << ' ' << dist(c.pos[a], c.pos[b]) << '\n';
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Surface meshes

namespace {

constexpr int kCorners = 10;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
    }
  }
};

int steps(double len, double h) { return std::max(1, static_cast<int>(std::ceil(len / h - 1e-9))); }

}  // namespace

std::uint32_t SurfaceMesh::cell_index(int i, int j, int piece) const {
  const int n = surface_->n();
  return static_cast<std::uint32_t>(((j - 1) * n + (i - 1)) * 4 + piece);
}

SurfaceMesh::SurfaceMesh(const Surface& surface, double h, MeshMode mode)
    : surface_(&surface), mode_(mode) {
  const int n = surface.n();
  const GridParams& gp = surface.params();
  const double limit = std::min(gp.b / n, gp.block(1).a) / 2.0;
  if (!(h > 0.0) || h > limit) {
    throw RefinementError("mesh size h=" + std::to_string(h) + " must lie in (0, " +
                          std::to_string(limit) + "]");
  }
  mesh_.set_h(h);
  const bool flat = gp.eps == 0.0;

  // cells, in block-major order matching cell_index
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const Block& blk = surface.block(i, j);
      for (const ConvexPiece& pc : blk.pieces()) {
        mesh_.add_cell(blk.chart(pc.hex), i, j, blk.piece_polygon(pc));
      }
    }
  }

  // corner vertices, identified across blocks
  auto key = [n](int i, int j, Corner c) {
    return ((j - 1) * n + (i - 1)) * kCorners + static_cast<int>(c);
  };
  UnionFind uf(n * n * kCorners);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (flat) {
        uf.unite(key(i, j, Corner::PPlus), key(i, j, Corner::PMinus));
      }
      if (i < n) {
        uf.unite(key(i, j, Corner::C), key(i + 1, j, Corner::B));
        uf.unite(key(i, j, Corner::F), key(i + 1, j, Corner::E));
        uf.unite(key(i, j, Corner::D), key(i + 1, j, Corner::A));
      }
      if (j < n) {
        uf.unite(key(i, j, Corner::A), key(i, j + 1, Corner::B));
        uf.unite(key(i, j, Corner::D), key(i, j + 1, Corner::C));
        uf.unite(key(i, j, Corner::H), key(i, j + 1, Corner::G));
      }
    }
  }
  std::vector<std::int64_t> root_vertex(static_cast<std::size_t>(n) * n * kCorners, -1);
  auto corner_vertex = [&](int i, int j, Corner c) {
    const int r = uf.find(key(i, j, c));
    if (root_vertex[r] < 0) {
      root_vertex[r] = mesh_.add_vertex();
    }
    return static_cast<std::uint32_t>(root_vertex[r]);
  };
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const Block& blk = surface.block(i, j);
      const auto pcs = blk.pieces();
      for (int k = 0; k < 4; ++k) {
        for (Corner c : pcs[k].corners) {
          mesh_.attach(corner_vertex(i, j, c), cell_index(i, j, k), blk.corner(c, pcs[k].hex));
        }
      }
    }
  }

  // Steiner points on segment interiors; `sides` lists the cells bordering
  // the segment with the motion from the reference chart into each cell
  struct Side {
    std::uint32_t cell;
    Motion m;
  };
  auto segment = [&](Vec2 p0, Vec2 p1, const std::vector<Side>& sides) {
    const int k = steps(dist(p0, p1), h);
    for (int s = 1; s < k; ++s) {
      const Vec2 x = p0 + (p1 - p0) * (static_cast<double>(s) / k);
      const std::uint32_t v = mesh_.add_vertex();
      for (const Side& sd : sides) {
        mesh_.attach(v, sd.cell, sd.m.apply(x));
      }
    }
  };
  const Motion id = Motion::identity();
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const Block& blk = surface.block(i, j);
      const GridValues g = grid_params(gp.a, gp.b, gp.eps, n, i);
      auto at = [&](Corner c, Hex hx) { return blk.corner(c, hx); };
      const std::uint32_t li = cell_index(i, j, 0), ri = cell_index(i, j, 1),
                          lii = cell_index(i, j, 2), rii = cell_index(i, j, 3);
      const Motion up = Motion::translation({0.0, g.a_ni});
      std::vector<Side> bg{{li, id}}, gc{{ri, id}};
      if (j > 1) {
        bg.push_back({cell_index(i, j - 1, 2), up});
        gc.push_back({cell_index(i, j - 1, 3), up});
      }
      segment(at(Corner::B, Hex::I), at(Corner::G, Hex::I), bg);
      segment(at(Corner::G, Hex::I), at(Corner::C, Hex::I), gc);
      std::vector<Side> eb{{li, id}}, ae{{lii, id}};
      if (i > 1) {
        eb.push_back({cell_index(i - 1, j, 1), Motion::translation({g.b_n, 0.0})});
        ae.push_back({cell_index(i - 1, j, 3), Motion::translation({g.b_n, -g.eps_n})});
      }
      segment(at(Corner::E, Hex::I), at(Corner::B, Hex::I), eb);
      segment(at(Corner::A, Hex::II), at(Corner::E, Hex::II), ae);
      if (i == n) {
        segment(at(Corner::C, Hex::I), at(Corner::F, Hex::I), {{ri, id}});
        segment(at(Corner::F, Hex::II), at(Corner::D, Hex::II), {{rii, id}});
      }
      if (j == n) {
        segment(at(Corner::D, Hex::II), at(Corner::H, Hex::II), {{rii, id}});
        segment(at(Corner::H, Hex::II), at(Corner::A, Hex::II), {{lii, id}});
      }
      // seams, referenced in hexagon I
      segment(at(Corner::F, Hex::I), at(Corner::PPlus, Hex::I),
              {{ri, id}, {rii, blk.seam_motion(Seam::Right).inverse()}});
      if (!flat) {
        const Motion mid = blk.seam_motion(Seam::Dislocation).inverse();
        if (mode == MeshMode::Metric) {
          segment(at(Corner::PPlus, Hex::I), at(Corner::PMinus, Hex::I), {{ri, id}, {rii, mid}});
        } else {
          segment(at(Corner::PPlus, Hex::I), at(Corner::PMinus, Hex::I), {{ri, id}});
          segment(at(Corner::PPlus, Hex::I), at(Corner::PMinus, Hex::I), {{rii, mid}});
        }
      }
      segment(at(Corner::PMinus, Hex::I), at(Corner::E, Hex::I), {{li, id}, {lii, id}});
      // cuts between the convex halves
      segment(at(Corner::G, Hex::I), at(Corner::PMinus, Hex::I), {{li, id}, {ri, id}});
      segment(at(Corner::PMinus, Hex::II), at(Corner::H, Hex::II), {{lii, id}, {rii, id}});
    }
  }
}

SurfaceMesh triangulate(const Surface& s, double h, MeshMode mode) { return SurfaceMesh(s, h, mode); }

Anchor SurfaceMesh::anchor(const SurfacePoint& p) const {
  const Block& blk = surface_->block(p.i, p.j);
  if (!blk.contains(p.bp)) {
    throw DomainError("point outside surface");
  }
  if (mode_ == MeshMode::Smooth && blk.on_dislocation(p.bp)) {
    throw DomainError("point on a dislocation segment is not in the smooth manifold");
  }
  Anchor a;
  for (const SurfacePoint& r : surface_->representations(p)) {
    const int first = r.bp.hex == Hex::I ? 0 : 2;
    for (int k = first; k < first + 2; ++k) {
      const std::uint32_t c = cell_index(r.i, r.j, k);
      if (point_in_polygon(r.bp.pos, mesh_.cells()[c].polygon)) {
        bool seen = false;
        for (const Membership& m : a.in) {
          seen = seen || m.cell == c;
        }
        if (!seen) {
          a.in.push_back({c, r.bp.pos});
        }
      }
    }
  }
  std::sort(a.in.begin(), a.in.end(),
            [](const Membership& x, const Membership& y) { return x.cell < y.cell; });
  return a;
}

std::int64_t SurfaceMesh::vertex_at(const SurfacePoint& p, double tol) const {
  const Anchor a = anchor(p);
  for (const Membership& m : a.in) {
    const MeshCell& c = mesh_.cells()[m.cell];
    for (std::size_t k = 0; k < c.verts.size(); ++k) {
      if (dist(c.pos[k], m.pos) <= tol) {
        return c.verts[k];
      }
    }
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Sector meshes

GeodesicMesh triangulate_sector(double r0, double r1, double phi_max, double h) {
  if (!(r0 > 0.0) || !(r1 > r0) || !(phi_max > 0.0) || !(phi_max < kPi)) {
    throw ParameterError("invalid sector dimensions");
  }
  if (!(h > 0.0) || h > (r1 - r0) / 2.0) {
    throw RefinementError("sector mesh size too large");
  }
  GeodesicMesh m;
  m.set_h(h);
  // coarse polar cells about 16h across; straight sides keep them convex
  const int nr = std::max(1, static_cast<int>(std::ceil((r1 - r0) / (16.0 * h))));
  const int nphi = std::max(4, static_cast<int>(std::ceil(r1 * phi_max / (16.0 * h))));
  auto node = [&](int k, int l) {
    const double r = r0 + (r1 - r0) * k / nr;
    const double phi = phi_max * l / nphi;
    return polar_to_cart({r, phi}).xy();
  };
  std::vector<std::uint32_t> nodes(static_cast<std::size_t>(nr + 1) * (nphi + 1));
  for (auto& v : nodes) {
    v = m.add_vertex();
  }
  auto nid = [&](int k, int l) { return nodes[static_cast<std::size_t>(l) * (nr + 1) + k]; };
  const ChartId chart = ChartId::sector();
  std::vector<std::uint32_t> cell(static_cast<std::size_t>(nr) * nphi);
  for (int l = 0; l < nphi; ++l) {
    for (int k = 0; k < nr; ++k) {
      const std::uint32_t c =
          m.add_cell(chart, k + 1, l + 1, {node(k, l), node(k + 1, l), node(k + 1, l + 1), node(k, l + 1)});
      cell[static_cast<std::size_t>(l) * nr + k] = c;
      m.attach(nid(k, l), c, node(k, l));
      m.attach(nid(k + 1, l), c, node(k + 1, l));
      m.attach(nid(k + 1, l + 1), c, node(k + 1, l + 1));
      m.attach(nid(k, l + 1), c, node(k, l + 1));
    }
  }
  auto cell_at = [&](int k, int l) -> std::int64_t {
    if (k < 0 || k >= nr || l < 0 || l >= nphi) {
      return -1;
    }
    return cell[static_cast<std::size_t>(l) * nr + k];
  };
  auto segment = [&](Vec2 p0, Vec2 p1, std::int64_t c0, std::int64_t c1) {
    const int s = steps(dist(p0, p1), h);
    for (int t = 1; t < s; ++t) {
      const Vec2 x = p0 + (p1 - p0) * (static_cast<double>(t) / s);
      const std::uint32_t v = m.add_vertex();
      if (c0 >= 0) {
        m.attach(v, static_cast<std::uint32_t>(c0), x);
      }
      if (c1 >= 0) {
        m.attach(v, static_cast<std::uint32_t>(c1), x);
      }
    }
  };
  for (int l = 0; l <= nphi; ++l) {
    for (int k = 0; k < nr; ++k) {
      segment(node(k, l), node(k + 1, l), cell_at(k, l - 1), cell_at(k, l));
    }
  }
  for (int k = 0; k <= nr; ++k) {
    for (int l = 0; l < nphi; ++l) {
      segment(node(k, l), node(k, l + 1), cell_at(k - 1, l), cell_at(k, l));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Queries

namespace {

bool point_before(const SurfacePoint& p, const SurfacePoint& q) {
  if (p.j != q.j) return p.j < q.j;
  if (p.i != q.i) return p.i < q.i;
  if (p.bp.hex != q.bp.hex) return p.bp.hex < q.bp.hex;
  if (p.bp.pos.dx != q.bp.pos.dx) return p.bp.pos.dx < q.bp.pos.dx;
  return p.bp.pos.dy < q.bp.pos.dy;
}

MeshPath reversed(MeshPath p) {
  std::reverse(p.edges.begin(), p.edges.end());
  for (PathEdge& e : p.edges) {
    std::swap(e.from, e.to);
  }
  return p;
}

}  // namespace

MeshPath shortest_path(const SurfaceMesh& m, const SurfacePoint& p, const SurfacePoint& q) {
  // always search from the smaller endpoint so that d(p,q) == d(q,p) bitwise
  const bool swap = point_before(q, p);
  const SurfacePoint& s = swap ? q : p;
  const SurfacePoint& t = swap ? p : q;
  const std::array<Anchor, 1> tgt{m.anchor(t)};
  const auto tree = m.mesh().dijkstra(m.anchor(s), tgt);
  MeshPath path = m.mesh().path_to(tree, m.mesh().vertex_count());
  return swap ? reversed(std::move(path)) : path;
}

double mesh_distance(const SurfaceMesh& m, const SurfacePoint& p, const SurfacePoint& q) {
  return shortest_path(m, p, q).length;
}

std::vector<std::vector<double>> distance_matrix(const GeodesicMesh& m,
                                                 std::span<const Anchor> pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  parallel_for(n, [&](std::size_t k) {
    if (k + 1 >= n) {
      return;
    }
    const auto tree = m.dijkstra(pts[k], pts.subspan(k + 1));
    for (std::size_t l = k + 1; l < n; ++l) {
      d[k][l] = tree.dist[m.vertex_count() + (l - k - 1)];
    }
  });
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (!std::isfinite(d[k][l])) {
        throw NoPathError("mesh is disconnected between query points");
      }
      d[l][k] = d[k][l];
    }
  }
  return d;
}

std::vector<std::vector<double>> distance_matrix(const SurfaceMesh& m,
                                                 std::span<const SurfacePoint> pts) {
  std::vector<Anchor> anchors;
  anchors.reserve(pts.size());
  for (const SurfacePoint& p : pts) {
    anchors.push_back(m.anchor(p));
  }
  return distance_matrix(m.mesh(), anchors);
}

std::vector<MeshPath> all_pair_paths(const SurfaceMesh& m, std::span<const SurfacePoint> pts) {
  const std::size_t n = pts.size();
  std::vector<Anchor> anchors;
  for (const SurfacePoint& p : pts) {
    anchors.push_back(m.anchor(p));
  }
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    offset[k + 1] = offset[k] + (n - k - 1);
  }
  std::vector<MeshPath> out(offset[n]);
  const std::span<const Anchor> all(anchors);
  parallel_for(n, [&](std::size_t k) {
    if (k + 1 >= n) {
      return;
    }
    const auto tree = m.mesh().dijkstra(all[k], all.subspan(k + 1));
    for (std::size_t l = k + 1; l < n; ++l) {
      out[offset[k] + (l - k - 1)] = m.mesh().path_to(tree, m.mesh().vertex_count() + (l - k - 1));
    }
  });
  return out;
}

NetMap net_map(std::vector<std::vector<double>> source, std::vector<std::vector<double>> target) {
  if (source.size() != target.size()) {
    throw ParameterError("net map oracles disagree on point count");
  }
  NetMap map;
  map.count = source.size();
  map.source = [s = std::move(source)](std::size_t k, std::size_t l) { return s[k][l]; };
  map.target = [t = std::move(target)](std::size_t k, std::size_t l) { return t[k][l]; };
  return map;
}

double distortion(const NetMap& map) {
  double worst = 0.0;
  for (std::size_t k = 0; k < map.count; ++k) {
    for (std::size_t l = k + 1; l < map.count; ++l) {
      worst = std::max(worst, std::abs(map.source(k, l) - map.target(k, l)));
    }
  }
  return worst;
}

namespace {

// Grid cells whose convex cells contain edge e as the same chord.
std::vector<std::pair<int, int>> edge_owners(const GeodesicMesh& m, const PathEdge& e) {
  const MeshCell& own = m.cells()[e.cell];
  std::vector<std::pair<int, int>> out{{own.gi, own.gj}};
  const auto nv = static_cast<std::int64_t>(m.vertex_count());
  if (e.from_node < 0 || e.from_node >= nv || e.to_node < 0 || e.to_node >= nv) {
    return out;
  }
  const double len = dist(e.from, e.to);
  const auto ma = m.memberships(static_cast<std::uint32_t>(e.from_node));
  const auto mb = m.memberships(static_cast<std::uint32_t>(e.to_node));
  for (const Membership& x : ma) {
    for (const Membership& y : mb) {
      if (x.cell != y.cell || x.cell == e.cell || std::abs(dist(x.pos, y.pos) - len) > 1e-12) {
        continue;
      }
      const MeshCell& c = m.cells()[x.cell];
      if (std::find(out.begin(), out.end(), std::pair<int, int>{c.gi, c.gj}) == out.end()) {
        out.emplace_back(c.gi, c.gj);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> cell_sequence(const GeodesicMesh& m, const MeshPath& path) {
  std::vector<std::vector<std::pair<int, int>>> owners;
  for (const PathEdge& e : path.edges) {
    if (dist(e.from, e.to) > kTol) {
      owners.push_back(edge_owners(m, e));
    }
  }
  auto has = [&](std::size_t k, std::pair<int, int> g) {
    return std::find(owners[k].begin(), owners[k].end(), g) != owners[k].end();
  };
  std::vector<std::pair<int, int>> seq;
  for (std::size_t k = 0; k < owners.size(); ++k) {
    if (!seq.empty() && has(k, seq.back())) {
      continue;
    }
    // the owner lasting longest keeps the number of changes minimal
    std::pair<int, int> best = owners[k].front();
    std::size_t best_run = 0;
    for (const auto& g : owners[k]) {
      std::size_t run = k;
      while (run < owners.size() && has(run, g)) {
        ++run;
      }
      if (run > best_run) {
        best_run = run;
        best = g;
      }
    }
    seq.push_back(best);
  }
  return seq;
}

int cells_crossed(const GeodesicMesh& m, const MeshPath& path) {
  auto seq = cell_sequence(m, path);
  std::sort(seq.begin(), seq.end());
  return static_cast<int>(std::unique(seq.begin(), seq.end()) - seq.begin());
}

bool monotone_indices(std::span<const std::pair<int, int>> seq) {
  int row_sign = 0;
  int col_sign = 0;
  int col_turns = 0;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const int di = seq[k].first - seq[k - 1].first;
    const int dj = seq[k].second - seq[k - 1].second;
    if (dj != 0) {
      const int s = dj > 0 ? 1 : -1;
      if (row_sign != 0 && s != row_sign) {
        return false;
      }
      row_sign = s;
    }
    if (di != 0) {
      const int s = di > 0 ? 1 : -1;
      if (col_sign != 0 && s != col_sign) {
        ++col_turns;
      }
      col_sign = s;
    }
  }
  return col_turns <= 1;
}

}  // namespace weitz
