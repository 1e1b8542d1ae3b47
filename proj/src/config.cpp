#include <fstream>
#include <sstream>

#include "weitz/harness.hpp"

namespace weitz {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& v) {
  // accepts plain numbers and the forms "pi", "pi/k", "c*pi/k"
  const auto pos = v.find("pi");
  try {
    if (pos == std::string::npos) {
      std::size_t used = 0;
      const double x = std::stod(v, &used);
      if (used != v.size()) {
        throw std::invalid_argument(v);
      }
      return x;
    }
    double coef = 1.0;
    if (pos > 0) {
      const std::string head = trim(v.substr(0, pos));
      if (head.empty() || head.back() != '*') {
        throw std::invalid_argument(v);
      }
      coef = std::stod(head.substr(0, head.size() - 1));
    }
    double div = 1.0;
    const std::string tail = trim(v.substr(pos + 2));
    if (!tail.empty()) {
      if (tail.front() != '/') {
        throw std::invalid_argument(v);
      }
      div = std::stod(tail.substr(1));
    }
    return coef * kPi / div;
  } catch (const std::logic_error&) {
    throw ParameterError("bad numeric value for " + key + ": '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != static_cast<double>(static_cast<long long>(x))) {
    throw ParameterError("expected an integer for " + key + ": '" + v + "'");
  }
  return static_cast<int>(x);
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw) {
  std::string key = trim(raw_key);
  for (char& c : key) {
    if (c == '-') {
      c = '_';
    }
  }
  const std::string v = trim(raw);
  if (key == "a") {
    cfg.a = to_double(key, v);
  } else if (key == "b") {
    cfg.b = to_double(key, v);
  } else if (key == "eps") {
    cfg.eps = to_double(key, v);
  } else if (key == "theta") {
    cfg.theta = to_double(key, v);
  } else if (key == "n_list") {
    cfg.n_list.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!trim(item).empty()) {
        cfg.n_list.push_back(to_int(key, trim(item)));
      }
    }
  } else if (key == "p_exp") {
    cfg.p_exp = to_double(key, v);
  } else if (key == "mesh_h") {
    cfg.mesh_h = to_double(key, v);
  } else if (key == "quad_m") {
    cfg.quad_m = to_int(key, v);
  } else if (key == "block_samples") {
    cfg.block_samples = to_int(key, v);
  } else if (key == "pair_samples") {
    cfg.pair_samples = to_int(key, v);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(to_int(key, v));
  } else if (key == "out") {
    cfg.out = v;
  } else {
    throw ParameterError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config line " + std::to_string(lineno) + " lacks '='");
    }
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParameterError("cannot open config file " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_config_text(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "a = " << cfg.a << "\nb = " << cfg.b << "\neps = " << cfg.eps << "\ntheta = " << cfg.theta
     << "\nn_list = ";
  for (std::size_t k = 0; k < cfg.n_list.size(); ++k) {
    os << (k ? "," : "") << cfg.n_list[k];
  }
  os << "\np_exp = " << cfg.p_exp << "\nmesh_h = " << cfg.mesh_h << "\nquad_m = " << cfg.quad_m
     << "\nblock_samples = " << cfg.block_samples << "\npair_samples = " << cfg.pair_samples
     << "\nseed = " << cfg.seed << "\nout = " << cfg.out << "\n";
  return os.str();
}

}  // namespace weitz
