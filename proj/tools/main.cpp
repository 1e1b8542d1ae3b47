// Command line front end: build, distance, converge, burgers, check.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "weitz/checks.hpp"
#include "weitz/harness.hpp"
#include "weitz/homogenization.hpp"
#include "weitz/mesh.hpp"
#include "weitz/sector.hpp"
#include "weitz/surface.hpp"

namespace {

using namespace weitz;

// "i,j,hex,x,y" with hex given as I or II
SurfacePoint parse_point(const std::string& text) {
  std::stringstream ss(text);
  std::string tok;
  std::vector<std::string> parts;
  while (std::getline(ss, tok, ',')) {
    parts.push_back(tok);
  }
  if (parts.size() != 5 || (parts[2] != "I" && parts[2] != "II")) {
    throw ParameterError("point must read i,j,I|II,x,y: '" + text + "'");
  }
  SurfacePoint p;
  p.i = std::stoi(parts[0]);
  p.j = std::stoi(parts[1]);
  p.bp.hex = parts[2] == "I" ? Hex::I : Hex::II;
  p.bp.pos = {std::stod(parts[3]), std::stod(parts[4])};
  return p;
}

GridParams grid_from(const ExperimentConfig& cfg, int n) {
  return GridParams{cfg.a, cfg.b, cfg.eps, cfg.theta, n};
}

void print_record(const SweepRecord& r) {
  std::printf("%4d  h=%.4g  dis=%.5g  frame=%.5g  rigid=%.5g  metric=%.5g  sup_metric=%.5g  "
              "vol_sup=%.5g  block=%.5g  cells=%d  (%.1fs)%s%s\n",
              r.n, r.h, r.dis_tn, r.lp_frame, r.lp_rigidity, r.lp_metric, r.sup_metric,
              r.vol_ratio_sup, r.max_block_dist, r.max_cells, r.seconds,
              r.error.empty() ? "" : "  error: ", r.error.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dislocated block surfaces and their continuum limit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file");

  // overrides are kept as text and parsed like config values, so pi/6 works
  const std::vector<std::pair<std::string, std::string>> keys{
      {"a", "block height a"},          {"b", "block width b"},
      {"eps", "dislocation size"},      {"theta", "dislocation angle"},
      {"n-list", "comma separated n"},  {"p-exp", "exponent of the L^p errors"},
      {"mesh-h", "mesh size (0: schedule)"}, {"seed", "random seed"},
      {"out", "output prefix"}};
  std::map<std::string, std::string> overrides;
  std::vector<CLI::Option*> override_opts;
  for (const auto& [k, help] : keys) {
    override_opts.push_back(app.add_option("--" + k, overrides[k], help));
  }

  auto* build = app.add_subcommand("build", "build the grid surface and its mesh");
  int build_n = 0;
  bool export_mesh = false;
  build->add_option("--n", build_n, "grid resolution (default: first of n-list)");
  build->add_flag("--export-mesh", export_mesh, "write <out>.mesh.txt");

  auto* distance = app.add_subcommand("distance", "mesh distance between two surface points");
  int dist_n = 0;
  std::string p_text, q_text;
  distance->add_option("--n", dist_n, "grid resolution (default: first of n-list)");
  distance->add_option("--p", p_text, "i,j,I|II,x,y")->required();
  distance->add_option("--q", q_text, "i,j,I|II,x,y")->required();

  auto* converge = app.add_subcommand("converge", "run the convergence sweep");

  auto* burgers = app.add_subcommand("burgers", "Burgers vector of a sub-sector");
  double alpha = 0.5, beta = 0.5;
  int quad = 256;
  burgers->add_option("--alpha", alpha, "radial fraction");
  burgers->add_option("--beta", beta, "angular fraction");
  burgers->add_option("--m", quad, "midpoints per direction");

  auto* check = app.add_subcommand("check", "run the invariant and property checks");

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (override_opts[k]->count() > 0) {
        apply_setting(cfg, keys[k].first, overrides[keys[k].first]);
      }
    }
    cfg.validate();

    if (build->parsed()) {
      const int n = build_n > 0 ? build_n : cfg.n_list.front();
      const Surface surf(grid_from(cfg, n));
      const double h = cfg.mesh_h > 0 ? cfg.mesh_h : cfg.h_for(n);
      const SurfaceMesh mesh = triangulate(surf, h);
      std::ofstream(cfg.out + ".surface.json") << surf.summary_json() << "\n";
      std::printf("n=%d blocks=%zu area=%.12g h=%.4g vertices=%zu cells=%zu edges=%zu\n", n,
                  surf.blocks().size(), surf.area(), h, mesh.mesh().vertex_count(),
                  mesh.mesh().cell_count(), mesh.mesh().edge_count());
      if (export_mesh) {
        std::ofstream os(cfg.out + ".mesh.txt");
        mesh.mesh().export_text(os);
      }
      return 0;
    }
    if (distance->parsed()) {
      const int n = dist_n > 0 ? dist_n : cfg.n_list.front();
      const Surface surf(grid_from(cfg, n));
      const double h = cfg.mesh_h > 0 ? cfg.mesh_h : cfg.h_for(n);
      const SurfaceMesh mesh = triangulate(surf, h);
      const SurfacePoint p = parse_point(p_text), q = parse_point(q_text);
      const MeshPath path = shortest_path(mesh, p, q);
      std::printf("distance %.12g\ncells crossed %d\n", path.length,
                  cells_crossed(mesh.mesh(), path));
      return 0;
    }
    if (converge->parsed()) {
      const ConvergenceReport rep = run_sweep(cfg);
      for (const SweepRecord& r : rep.records) {
        print_record(r);
      }
      std::printf("slopes: dis %.3f (R2 %.3f)  block %.3f  frame %.3f  rigidity %.3f\n",
                  rep.fit_dis.slope, rep.fit_dis.r_squared, rep.fit_block.slope,
                  rep.fit_frame.slope, rep.fit_rigidity.slope);
      std::printf("uncovered volume vanishes: %s\ndistortion rate: %s\n"
                  "rigidity decreasing: %s\nframe error decreasing: %s\n",
                  rep.item1 ? "yes" : "no", rep.item2 ? "yes" : "no", rep.item3 ? "yes" : "no",
                  rep.item4 ? "yes" : "no");
      for (const std::string& note : rep.notes) {
        std::printf("note: %s\n", note.c_str());
      }
      write_report(rep, cfg.out);
      return rep.ok() ? 0 : 1;
    }
    if (burgers->parsed()) {
      const Sector sec(cfg.a, cfg.b, cfg.eps);
      const TangentVec v = burgers_integral(sec, BurgersDomain{alpha, beta, 0.0, 0.0}, quad);
      const auto fr = v.frame();
      std::printf("reference point r=%.12g phi=%.12g\n", v.base.r, v.base.phi);
      std::printf("frame coefficients (d_r, r^-1 d_phi): %.15g %.15g\n", fr[0], fr[1]);
      std::printf("closed form alpha*beta*eps: %.15g\n", alpha * beta * cfg.eps);
      return 0;
    }
    if (check->parsed()) {
      int failed = 0;
      for (const CheckResult& r : run_property_checks(cfg.seed)) {
        std::printf("%s  %s%s%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        failed += r.passed ? 0 : 1;
      }
      return failed == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
