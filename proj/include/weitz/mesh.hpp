#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "weitz/surface.hpp"

namespace weitz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Metric mode lets paths cross the dislocation segments; smooth mode treats
/// each segment as two boundary edges that cannot be crossed.
enum class MeshMode : std::uint8_t { Metric, Smooth };

/// A convex Euclidean cell. Any two of its vertices are joined by the
/// straight chord between them, so edges are implicit.
struct MeshCell {
  ChartId chart;
  int gi = 0;  // grid cell (block or sub-sector) the cell belongs to
  int gj = 0;
  std::vector<Vec2> polygon;
  std::vector<std::uint32_t> verts;
  std::vector<Vec2> pos;  // vertex coordinates in `chart`
};

struct Membership {
  std::uint32_t cell = 0;
  Vec2 pos{};
};

/// Where a query point sits in the mesh.
struct Anchor {
  std::vector<Membership> in;
};

struct PathEdge {
  std::uint32_t cell = 0;
  Vec2 from{};
  Vec2 to{};
  std::int64_t from_node = -1;  // -1 for the source anchor
  std::int64_t to_node = -1;
};

struct MeshPath {
  double length = kInf;
  std::vector<PathEdge> edges;

  /// Chart points along the path, one per edge endpoint.
  std::vector<Point2> polyline(const std::vector<MeshCell>& cells) const;
};

/// Steiner graph over convex cells glued along shared boundary vertices.
class GeodesicMesh {
public:
  std::uint32_t add_vertex();
  std::uint32_t add_cell(ChartId chart, int gi, int gj, std::vector<Vec2> polygon);
  void attach(std::uint32_t v, std::uint32_t cell, Vec2 pos);

  std::size_t vertex_count() const { return members_.size(); }
  std::size_t cell_count() const { return cells_.size(); }
  std::size_t edge_count() const;
  const std::vector<MeshCell>& cells() const { return cells_; }
  std::span<const Membership> memberships(std::uint32_t v) const { return members_[v]; }

  double h() const { return h_; }
  void set_h(double h) { h_ = h; }

  /// Cells of chart `chart` containing pos.
  Anchor anchor_in(ChartId chart, Vec2 pos, double tol = kTol) const;

  struct Tree {
    std::vector<double> dist;  // base vertices, then targets
    std::vector<std::int64_t> pred;
    std::vector<std::uint32_t> pred_cell;
    std::vector<Vec2> pred_pos;  // predecessor coordinates in pred_cell
    std::vector<Vec2> self_pos;  // own coordinates in pred_cell
  };

  /// Dijkstra from `src`; stops once every target is settled or the
  /// frontier passes `bound`. Node index vertex_count() + k is target k.
  Tree dijkstra(const Anchor& src, std::span<const Anchor> targets = {},
                double bound = kInf) const;

  MeshPath path_to(const Tree& tree, std::size_t node) const;

  /// Vertex lines then implicit chord lines, plain text.
  void export_text(std::ostream& os) const;

private:
  std::vector<MeshCell> cells_;
  std::vector<std::vector<Membership>> members_;
  double h_ = 0.0;
};

/// Mesh of a surface whose cells are the convex pieces of every block.
class SurfaceMesh {
public:
  SurfaceMesh(const Surface& surface, double h, MeshMode mode);

  const Surface& surface() const { return *surface_; }
  const GeodesicMesh& mesh() const { return mesh_; }
  MeshMode mode() const { return mode_; }
  double h() const { return mesh_.h(); }

  Anchor anchor(const SurfacePoint& p) const;
  /// Mesh vertex id of a point that is a mesh vertex, or -1.
  std::int64_t vertex_at(const SurfacePoint& p, double tol = 1e-12) const;
  std::uint32_t cell_index(int i, int j, int piece) const;

private:
  const Surface* surface_;
  GeodesicMesh mesh_;
  MeshMode mode_;
};

/// Mesh of a whole surface; h must not exceed min(b_n, a_{n,1}) / 2.
SurfaceMesh triangulate(const Surface& s, double h, MeshMode mode = MeshMode::Metric);

/// Mesh of the planar annular sector R0 <= r <= R1, 0 <= phi <= Phi with
/// straight-sided polar cells of radial size about h.
GeodesicMesh triangulate_sector(double r0, double r1, double phi_max, double h);

MeshPath shortest_path(const SurfaceMesh& m, const SurfacePoint& p, const SurfacePoint& q);
double mesh_distance(const SurfaceMesh& m, const SurfacePoint& p, const SurfacePoint& q);

/// Symmetric all-pairs distances between the given points.
std::vector<std::vector<double>> distance_matrix(const SurfaceMesh& m,
                                                 std::span<const SurfacePoint> pts);
std::vector<std::vector<double>> distance_matrix(const GeodesicMesh& m,
                                                 std::span<const Anchor> pts);

/// Shortest paths from pts[k] to pts[l] for all k < l, in row-major pair order.
std::vector<MeshPath> all_pair_paths(const SurfaceMesh& m, std::span<const SurfacePoint> pts);

/// Two distance oracles on a common index set.
struct NetMap {
  std::size_t count = 0;
  std::function<double(std::size_t, std::size_t)> source;
  std::function<double(std::size_t, std::size_t)> target;
};

NetMap net_map(std::vector<std::vector<double>> source, std::vector<std::vector<double>> target);

/// max over pairs of |d_source - d_target|.
double distortion(const NetMap& map);

/// Grid cells (blocks) visited by a mesh path, in order, consecutive
/// repeats removed. An edge running along a boundary shared by several
/// cells may be credited to any of them; the attribution with the fewest
/// changes is used.
std::vector<std::pair<int, int>> cell_sequence(const GeodesicMesh& m, const MeshPath& path);
int cells_crossed(const GeodesicMesh& m, const MeshPath& path);

/// Row index monotone and column index turning at most once.
bool monotone_indices(std::span<const std::pair<int, int>> seq);

}  // namespace weitz
