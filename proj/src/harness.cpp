#include "weitz/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "weitz/homogenization.hpp"
#include "weitz/mesh.hpp"
#include "weitz/parallel.hpp"

namespace weitz {

void ExperimentConfig::validate() const {
  GridParams{a, b, eps, theta, 1}.validate();
  if (n_list.empty()) {
    throw ParameterError("n_list is empty");
  }
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    if (n_list[k] < 1 || (k > 0 && n_list[k] <= n_list[k - 1])) {
      throw ParameterError("n_list must be strictly ascending positive integers");
    }
  }
  if (!(p_exp >= 2.0)) {
    throw ParameterError("p_exp must be at least 2");
  }
  if (mesh_h < 0.0 || quad_m < 1 || block_samples < 1 || pair_samples < 1) {
    throw ParameterError("mesh_h, quad_m, block_samples and pair_samples must be positive");
  }
}

double ExperimentConfig::h_for(int n) const {
  return mesh_h > 0.0 ? mesh_h : std::min(1e-2, b / (40.0 * n));
}

RateFit fit_rate(std::span<const std::pair<double, double>> points) {
  RateFit fit;
  std::vector<double> xs, ys;
  for (const auto& [n, v] : points) {
    if (!(v > 0.0) || !(n > 0.0)) {
      fit.warnings.push_back("dropped non-positive point (n=" + std::to_string(n) +
                             ", value=" + std::to_string(v) + ")");
      continue;
    }
    xs.push_back(std::log(n));
    ys.push_back(std::log(v));
  }
  fit.used = static_cast<int>(xs.size());
  if (xs.size() < 3) {
    throw FitError("rate fit needs at least 3 positive points, got " + std::to_string(xs.size()));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) {
    throw FitError("rate fit needs distinct n values");
  }
  fit.slope = sxy / sxx;
  // a perfectly flat series is fitted exactly by slope 0
  fit.r_squared = syy <= 1e-300 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

// ---------------------------------------------------------------------------

NetStats net_statistics(double a, double b, double eps, double theta, int n, double h,
                        int pair_samples, std::uint64_t seed) {
  const GridParams gp{a, b, eps, theta, n};
  const Surface surf(gp);
  const SurfaceMesh mesh = triangulate(surf, h);
  const auto net = surf.net_vertices();
  const int side = n + 1;
  const std::size_t count = net.size();

  // pairs: exhaustive up to n = 8, sampled beyond
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n <= 8) {
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t l = k + 1; l < count; ++l) {
        pairs.emplace_back(k, l);
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    while (static_cast<int>(pairs.size()) < pair_samples) {
      std::size_t k = pick(rng), l = pick(rng);
      if (k == l) {
        continue;
      }
      pairs.emplace_back(std::min(k, l), std::max(k, l));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }

  std::optional<FnMap> fmap;
  if (eps > 0.0) {
    fmap.emplace(gp);
  }
  auto limit_point = [&](std::size_t k) {
    const int I = static_cast<int>(k) % side;
    const int J = static_cast<int>(k) / side;
    const SectorPartition& part = fmap->grid();
    return PolarPoint{part.r[I], part.phi[J]};
  };
  auto limit_distance = [&](std::size_t k, std::size_t l) {
    if (!fmap) {
      const double dx = (static_cast<int>(k) % side - static_cast<int>(l) % side) * b / n;
      const double dy = (static_cast<int>(k) / side - static_cast<int>(l) / side) * a / n;
      return std::hypot(dx, dy);
    }
    return sector_distance(fmap->sector(), limit_point(k), limit_point(l));
  };

  std::vector<Anchor> anchors;
  anchors.reserve(count);
  for (const SurfacePoint& p : net) {
    anchors.push_back(mesh.anchor(p));
  }
  std::map<std::size_t, std::vector<std::size_t>> by_source;  // source -> pair indices
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    by_source[pairs[k].first].push_back(k);
  }
  std::vector<std::size_t> sources;
  for (const auto& [s, _] : by_source) {
    sources.push_back(s);
  }

  struct PairResult {
    double dev = 0.0;
    int cells = 0;
    int cells_sector = 0;
    bool monotone = true;
  };
  std::vector<PairResult> res(pairs.size());
  parallel_for(sources.size(), [&](std::size_t si) {
    const std::size_t src = sources[si];
    const auto& idx = by_source.at(src);
    std::vector<Anchor> tg;
    for (std::size_t k : idx) {
      tg.push_back(anchors[pairs[k].second]);
    }
    const auto tree = mesh.mesh().dijkstra(anchors[src], tg);
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const auto [k, l] = pairs[idx[t]];
      const MeshPath path = mesh.mesh().path_to(tree, mesh.mesh().vertex_count() + t);
      PairResult& r = res[idx[t]];
      r.dev = std::abs(path.length - limit_distance(k, l));
      const auto seq = cell_sequence(mesh.mesh(), path);
      r.cells = cells_crossed(mesh.mesh(), path);
      r.monotone = monotone_indices(seq);
      if (fmap) {
        const auto geo = sector_geodesic(fmap->sector(), limit_point(k), limit_point(l), 96);
        const auto sseq = sector_cell_sequence(fmap->grid(), geo);
        r.cells_sector = cells_crossed(fmap->grid(), geo);
        r.monotone = r.monotone && monotone_indices(sseq);
      }
    }
  });

  NetStats st;
  st.pairs = static_cast<int>(pairs.size());
  for (const PairResult& r : res) {
    st.dis_tn = std::max(st.dis_tn, r.dev);
    st.max_cells = std::max(st.max_cells, r.cells);
    st.max_cells_sector = std::max(st.max_cells_sector, r.cells_sector);
    if (r.cells > 3 * n || r.cells_sector > 3 * n) {
      ++st.cell_bound_violations;
    }
    if (!r.monotone) {
      ++st.monotone_violations;
    }
  }
  return st;
}

SweepRecord measure(const ExperimentConfig& cfg, int n) {
  SweepRecord rec;
  rec.n = n;
  rec.h = cfg.h_for(n);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const GridParams gp{cfg.a, cfg.b, cfg.eps, cfg.theta, n};
    const NetStats st =
        net_statistics(cfg.a, cfg.b, cfg.eps, cfg.theta, n, rec.h, cfg.pair_samples, cfg.seed);
    rec.dis_tn = st.dis_tn;
    rec.pairs = st.pairs;
    rec.max_cells = st.max_cells;
    rec.max_cells_sector = st.max_cells_sector;
    rec.cell_bound_violations = st.cell_bound_violations;
    rec.monotone_violations = st.monotone_violations;

    const FnMap f(gp);
    rec.lp_frame = lp_error(f, ErrorKind::Frame, cfg.p_exp, cfg.quad_m);
    rec.lp_rigidity = lp_error(f, ErrorKind::Rigidity, cfg.p_exp, cfg.quad_m);
    rec.lp_metric = lp_error(f, ErrorKind::Metric, cfg.p_exp, cfg.quad_m);
    rec.sup_metric = sup_error(f, ErrorKind::Metric, cfg.quad_m);
    rec.vol_ratio_sup = volume_ratio_sup(f, cfg.quad_m);
    rec.max_block_dist = max_block_distortion(gp, cfg.block_samples);
    if (!f.flat()) {
      const Sector& s = f.sector();
      rec.frame_at_probe = f.frame_error_at({s.r0() + 0.2 * cfg.b, 0.3 * s.total_angle()});
    }
    // F_n is onto away from the measure-zero preimage of the dislocations
    rec.uncovered_volume = 0.0;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

namespace {

RateFit try_fit(const std::vector<SweepRecord>& recs, double SweepRecord::*field,
                std::vector<std::string>& notes, const char* name) {
  std::vector<std::pair<double, double>> pts;
  for (const SweepRecord& r : recs) {
    if (r.error.empty()) {
      pts.emplace_back(r.n, r.*field);
    }
  }
  try {
    RateFit f = fit_rate(pts);
    for (const auto& w : f.warnings) {
      notes.push_back(std::string(name) + ": " + w);
    }
    return f;
  } catch (const FitError& e) {
    notes.push_back(std::string(name) + ": " + e.what());
    return {};
  }
}

bool decreasing(const std::vector<SweepRecord>& recs, double SweepRecord::*field) {
  for (std::size_t k = 1; k < recs.size(); ++k) {
    if (!(recs[k].*field < recs[k - 1].*field)) {
      return false;
    }
  }
  return !recs.empty();
}

}  // namespace

ConvergenceReport run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  ConvergenceReport rep;
  rep.cfg = cfg;
  // measurements parallelise internally; the sweep itself runs in order
  for (int n : cfg.n_list) {
    rep.records.push_back(measure(cfg, n));
  }
  auto& notes = rep.notes;
  rep.fit_dis = try_fit(rep.records, &SweepRecord::dis_tn, notes, "dis_Tn");
  rep.fit_block = try_fit(rep.records, &SweepRecord::max_block_dist, notes, "max_block_dist");
  rep.fit_frame = try_fit(rep.records, &SweepRecord::lp_frame, notes, "lp_frame");
  rep.fit_rigidity = try_fit(rep.records, &SweepRecord::lp_rigidity, notes, "lp_rigidity");
  rep.fit_metric = try_fit(rep.records, &SweepRecord::lp_metric, notes, "lp_metric");
  bool all_ok = true;
  for (const SweepRecord& r : rep.records) {
    if (!r.error.empty()) {
      all_ok = false;
      notes.push_back("n=" + std::to_string(r.n) + ": " + r.error);
    }
  }
  rep.item1 = all_ok;
  for (const SweepRecord& r : rep.records) {
    rep.item1 = rep.item1 && r.uncovered_volume == 0.0;
  }
  rep.item2 = all_ok && rep.fit_dis.used >= 3 && rep.fit_dis.slope >= -1.3 &&
              rep.fit_dis.slope <= -0.7 && rep.fit_dis.r_squared >= 0.95;
  rep.item3 = all_ok && decreasing(rep.records, &SweepRecord::lp_rigidity);
  rep.item4 = all_ok && decreasing(rep.records, &SweepRecord::lp_frame);
  return rep;
}

bool ConvergenceReport::ok() const {
  for (const SweepRecord& r : records) {
    if (!r.error.empty()) {
      return false;
    }
  }
  return true;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "# h(n) = " << (cfg.mesh_h > 0.0 ? std::to_string(cfg.mesh_h) : "min(1e-2, b/(40n))")
     << ", p = " << cfg.p_exp << ", quadrature m = " << cfg.quad_m << "\n";
  os << "n,h,dis_Tn,lp_frame,lp_rigidity,lp_metric,sup_metric,vol_ratio_sup,max_block_dist,"
        "max_cells,max_cells_sector,cell_bound_violations,monotone_violations,frame_at_probe,"
        "error\n";
  for (const SweepRecord& r : records) {
    os << r.n << ',' << r.h << ',' << r.dis_tn << ',' << r.lp_frame << ',' << r.lp_rigidity
       << ',' << r.lp_metric << ',' << r.sup_metric << ',' << r.vol_ratio_sup << ','
       << r.max_block_dist << ',' << r.max_cells << ',' << r.max_cells_sector << ','
       << r.cell_bound_violations << ',' << r.monotone_violations << ',' << r.frame_at_probe
       << ',' << '"' << r.error << '"' << "\n";
  }
  auto footer = [&](const char* name, const RateFit& f) {
    os << "# slope," << name << ',' << f.slope << ",r2," << f.r_squared << "\n";
  };
  footer("dis_Tn", fit_dis);
  footer("max_block_dist", fit_block);
  footer("lp_frame", fit_frame);
  footer("lp_rigidity", fit_rigidity);
  footer("lp_metric", fit_metric);
  return os.str();
}

std::string ConvergenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = {{"a", cfg.a},         {"b", cfg.b},           {"eps", cfg.eps},
                 {"theta", cfg.theta}, {"n_list", cfg.n_list}, {"p_exp", cfg.p_exp},
                 {"mesh_h", cfg.mesh_h}, {"quad_m", cfg.quad_m},
                 {"block_samples", cfg.block_samples}, {"seed", cfg.seed}};
  j["mesh_rule"] = cfg.mesh_h > 0.0 ? "fixed" : "h(n) = min(1e-2, b/(40n))";
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    recs.push_back({{"n", r.n},
                    {"h", r.h},
                    {"dis_Tn", r.dis_tn},
                    {"lp_frame", r.lp_frame},
                    {"lp_rigidity", r.lp_rigidity},
                    {"lp_metric", r.lp_metric},
                    {"sup_metric", r.sup_metric},
                    {"vol_ratio_sup", r.vol_ratio_sup},
                    {"max_block_dist", r.max_block_dist},
                    {"max_cells", r.max_cells},
                    {"max_cells_sector", r.max_cells_sector},
                    {"cell_bound_violations", r.cell_bound_violations},
                    {"monotone_violations", r.monotone_violations},
                    {"pairs", r.pairs},
                    {"frame_at_probe", r.frame_at_probe},
                    {"uncovered_volume", r.uncovered_volume},
                    {"seconds", r.seconds},
                    {"error", r.error}});
  }
  j["records"] = recs;
  auto fit = [](const RateFit& f) {
    return nlohmann::ordered_json{{"slope", f.slope}, {"r2", f.r_squared}, {"points", f.used}};
  };
  j["fits"] = {{"dis_Tn", fit(fit_dis)},
               {"max_block_dist", fit(fit_block)},
               {"lp_frame", fit(fit_frame)},
               {"lp_rigidity", fit(fit_rigidity)},
               {"lp_metric", fit(fit_metric)}};
  j["verdicts"] = {{"uncovered_volume_vanishes", item1},
                   {"distortion_rate", item2},
                   {"rigidity_decreasing", item3},
                   {"frame_decreasing", item4}};
  j["notes"] = notes;
  return j.dump(2);
}

void write_report(const ConvergenceReport& rep, const std::string& prefix) {
  std::ofstream csv(prefix + ".csv");
  std::ofstream js(prefix + ".json");
  if (!csv || !js) {
    throw Error("cannot write report files with prefix " + prefix);
  }
  csv << rep.to_csv();
  js << rep.to_json() << "\n";
}

}  // namespace weitz
