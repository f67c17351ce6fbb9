#include "sara/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sara/hash.hpp"

namespace sara {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::sara: return "SARA";
    case Algorithm::bpsa: return "BPSA";
    case Algorithm::bpdb8: return "BPDb8";
    case Algorithm::rw_bpdb8: return "RW-BPDb8";
  }
  throw std::logic_error("algorithm_name: bad enum");
}

Algorithm parse_algorithm(const std::string& name) {
  const std::string s = lower(name);
  if (s == "sara") return Algorithm::sara;
  if (s == "bpsa") return Algorithm::bpsa;
  if (s == "bpdb8") return Algorithm::bpdb8;
  if (s == "rw-bpdb8" || s == "rw_bpdb8" || s == "rwbpdb8") return Algorithm::rw_bpdb8;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (want SARA, BPSA, BPDb8 or RW-BPDb8)");
}

std::string sensing_kind_name(SensingKind k) {
  switch (k) {
    case SensingKind::spread_spectrum: return "spread_spectrum";
    case SensingKind::gaussian: return "gaussian";
    case SensingKind::vd_fourier: return "vd_fourier";
  }
  throw std::logic_error("sensing_kind_name: bad enum");
}

SensingKind parse_sensing_kind(const std::string& name) {
  const std::string s = lower(name);
  if (s == "spread_spectrum" || s == "spread-spectrum" || s == "ss")
    return SensingKind::spread_spectrum;
  if (s == "gaussian") return SensingKind::gaussian;
  if (s == "vd_fourier" || s == "vd-fourier" || s == "vdf") return SensingKind::vd_fourier;
  throw std::invalid_argument("unknown sensing kind '" + name +
                              "' (want spread_spectrum, gaussian or vd_fourier)");
}

void ExperimentConfig::finalize() {
  if (dictionary.bases.empty()) {
    if (algorithm == Algorithm::bpdb8 || algorithm == Algorithm::rw_bpdb8) {
      dictionary.bases = {BasisId::daubechies(8)};
    } else {
      for (int k = 1; k <= 8; ++k) dictionary.bases.push_back(BasisId::daubechies(k));
    }
  }
  validate();
}

void ExperimentConfig::validate() const {
  if (image_path.empty()) throw std::invalid_argument("config: image path is required");
  if (dictionary.bases.empty()) throw std::invalid_argument("config: dictionary is empty");
  if (dictionary.depth < 1) throw std::invalid_argument("config: dictionary depth must be >= 1");
  if (!(sensing.ratio > 0.0 && sensing.ratio <= 1.0))
    throw std::invalid_argument("config: sensing ratio M/N must be in (0, 1]");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if ((algorithm == Algorithm::bpdb8 || algorithm == Algorithm::rw_bpdb8) &&
      dictionary.bases.size() != 1)
    throw std::invalid_argument("config: the BPDb8 family requires exactly one basis");
}

int ExperimentConfig::effective_n_max() const {
  if (algorithm == Algorithm::bpsa || algorithm == Algorithm::bpdb8) return 1;
  return reweight.n_max;
}

std::string ExperimentConfig::canonical() const {
  std::map<std::string, std::string> kv;
  kv["image"] = image_path;
  kv["algorithm"] = algorithm_name(algorithm);
  kv["dictionary.bases"] = format_basis_list(dictionary.bases);
  kv["dictionary.depth"] = std::to_string(dictionary.depth);
  kv["sensing.kind"] = sensing_kind_name(sensing.kind);
  kv["sensing.ratio"] = fmt_double(sensing.ratio);
  kv["sensing.decay"] = fmt_double(sensing.decay);
  kv["isnr_db"] = fmt_double(isnr_db);
  kv["trials"] = std::to_string(trials);
  kv["seed"] = std::to_string(master_seed);
  kv["solver.max_iters"] = std::to_string(solver.max_iters);
  kv["solver.rel_tol"] = fmt_double(solver.rel_tol);
  kv["solver.dr_gamma"] = fmt_double(solver.dr_gamma);
  kv["solver.dr_lambda"] = fmt_double(solver.dr_lambda);
  kv["solver.ball_proj_tol"] = fmt_double(solver.ball_proj_tol);
  kv["solver.ball_proj_max_iters"] = std::to_string(solver.ball_proj_max_iters);
  kv["reweight.beta"] = fmt_double(reweight.beta);
  kv["reweight.eta"] = fmt_double(reweight.eta);
  kv["reweight.n_max"] = std::to_string(reweight.n_max);
  std::string out;
  for (const auto& [k, v] : kv) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

std::string ExperimentConfig::digest() const {
  const std::uint64_t h = fnv1a64(canonical());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep: values must be non-empty");
  switch (variable) {
    case Variable::undersampling:
      for (double v : values)
        if (!(v > 0.0 && v <= 1.0))
          throw std::invalid_argument("sweep: undersampling values must be in (0, 1]");
      break;
    case Variable::isnr:
      break;
    case Variable::num_bases:
      for (double v : values) {
        const int q = static_cast<int>(v);
        if (q < 1 || q > 8 || static_cast<double>(q) != v)
          throw std::invalid_argument("sweep: num_bases values must be integers in [1, 8]");
      }
      if (depths.empty()) throw std::invalid_argument("sweep: depths must be non-empty");
      break;
  }
  base.validate();
}

std::string sweep_variable_name(SweepSpec::Variable v) {
  switch (v) {
    case SweepSpec::Variable::undersampling: return "undersampling";
    case SweepSpec::Variable::isnr: return "isnr";
    case SweepSpec::Variable::num_bases: return "num_bases";
  }
  throw std::logic_error("sweep_variable_name: bad enum");
}

SweepSpec::Variable parse_sweep_variable(const std::string& name) {
  const std::string s = lower(name);
  if (s == "undersampling" || s == "ratio") return SweepSpec::Variable::undersampling;
  if (s == "isnr") return SweepSpec::Variable::isnr;
  if (s == "num_bases" || s == "bases") return SweepSpec::Variable::num_bases;
  throw std::invalid_argument("unknown sweep variable '" + name +
                              "' (want undersampling, isnr or num_bases)");
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "image") cfg.image_path = value;
    else if (key == "algorithm") cfg.algorithm = parse_algorithm(value);
    else if (key == "dictionary.bases") cfg.dictionary.bases = parse_basis_list(value);
    else if (key == "dictionary.depth") cfg.dictionary.depth = std::stoi(value);
    else if (key == "sensing.kind") cfg.sensing.kind = parse_sensing_kind(value);
    else if (key == "sensing.ratio") cfg.sensing.ratio = std::stod(value);
    else if (key == "sensing.decay") cfg.sensing.decay = std::stod(value);
    else if (key == "sensing.max_dense_bytes") cfg.sensing.max_dense_bytes = std::stoull(value);
    else if (key == "isnr_db") cfg.isnr_db = std::stod(value);
    else if (key == "trials") cfg.trials = std::stoi(value);
    else if (key == "seed") cfg.master_seed = std::stoull(value);
    else if (key == "out") cfg.output_dir = value;
    else if (key == "solver.max_iters") cfg.solver.max_iters = std::stoi(value);
    else if (key == "solver.rel_tol") cfg.solver.rel_tol = std::stod(value);
    else if (key == "solver.dr_gamma") cfg.solver.dr_gamma = std::stod(value);
    else if (key == "solver.dr_lambda") cfg.solver.dr_lambda = std::stod(value);
    else if (key == "solver.ball_proj_tol") cfg.solver.ball_proj_tol = std::stod(value);
    else if (key == "solver.ball_proj_max_iters") cfg.solver.ball_proj_max_iters = std::stoi(value);
    else if (key == "reweight.beta") cfg.reweight.beta = std::stod(value);
    else if (key == "reweight.eta") cfg.reweight.eta = std::stod(value);
    else if (key == "reweight.n_max") cfg.reweight.n_max = std::stoi(value);
    else throw std::invalid_argument("unknown config key '" + key + "'");
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument("config key '" + key + "': bad value '" + value + "': " + e.what());
  }
}

ExperimentConfig config_from_file(const std::string& path) {
  ExperimentConfig cfg;
  for (const auto& [k, v] : parse_config_file(path)) apply_config_entry(cfg, k, v);
  return cfg;
}

}  // namespace sara
