#ifndef SARA_CONFIG_HPP
#define SARA_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sara/dictionary.hpp"
#include "sara/sensing.hpp"

namespace sara {

enum class Algorithm { sara, bpsa, bpdb8, rw_bpdb8 };

std::string algorithm_name(Algorithm a);           // SARA, BPSA, BPDb8, RW-BPDb8
Algorithm parse_algorithm(const std::string& name);  // case-insensitive

enum class SensingKind { spread_spectrum, gaussian, vd_fourier };

std::string sensing_kind_name(SensingKind k);
SensingKind parse_sensing_kind(const std::string& name);

struct DictionarySpec {
  std::vector<BasisId> bases;  // empty: filled by the algorithm's default
  int depth = 4;
};

struct SensingSpec {
  SensingKind kind = SensingKind::spread_spectrum;
  double ratio = 0.3;  // M/N in (0, 1]
  double decay = 2.0;  // variable-density profile exponent
  std::size_t max_dense_bytes = GaussianOperator::kDefaultDenseBudget;
};

struct SolverSettings {
  int max_iters = 500;
  double rel_tol = 1e-4;
  double dr_gamma = 1.0;
  double dr_lambda = 1.0;
  double ball_proj_tol = 1e-6;
  int ball_proj_max_iters = 200;
};

struct ReweightSettings {
  double beta = 0.1;
  double eta = 1e-3;
  int n_max = 10;
};

struct ExperimentConfig {
  std::string image_path;
  Algorithm algorithm = Algorithm::sara;
  DictionarySpec dictionary;
  SensingSpec sensing;
  double isnr_db = 30.0;
  int trials = 30;
  std::uint64_t master_seed = 1;
  std::string output_dir;
  SolverSettings solver;
  ReweightSettings reweight;

  /// Fills the algorithm-dependent dictionary default (SARA/BPSA: db1..db8,
  /// BPDb8/RW-BPDb8: db8) and checks consistency.
  void finalize();
  void validate() const;

  /// Effective reweighting rounds: 1 for the non-reweighted algorithms.
  int effective_n_max() const;

  /// Canonical sorted key=value serialization of the scientific fields.
  std::string canonical() const;
  /// 16-hex-digit FNV-1a over the canonical serialization.
  std::string digest() const;
};

struct SweepSpec {
  enum class Variable { undersampling, isnr, num_bases };

  Variable variable = Variable::undersampling;
  std::vector<double> values;
  std::vector<int> depths = {1, 4, 8};  // crossed with values for num_bases
  ExperimentConfig base;

  void validate() const;
};

std::string sweep_variable_name(SweepSpec::Variable v);
SweepSpec::Variable parse_sweep_variable(const std::string& name);

/// Flat "key = value" file with '#' comments and dotted section keys.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Applies one key (e.g. "sensing.ratio") to the config; throws on unknown keys.
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

ExperimentConfig config_from_file(const std::string& path);

}  // namespace sara

#endif
