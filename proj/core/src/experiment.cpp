#include "sara/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "sara/hash.hpp"
#include "sara/pgm.hpp"

namespace sara {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::unique_ptr<SensingOperator> build_operator(const ExperimentConfig& cfg, const Image& img,
                                                Eigen::Index m, std::uint64_t op_seed) {
  switch (cfg.sensing.kind) {
    case SensingKind::spread_spectrum:
      return make_spread_spectrum(img.size(), m, op_seed);
    case SensingKind::gaussian:
      return make_gaussian(img.size(), m, op_seed, cfg.sensing.max_dense_bytes);
    case SensingKind::vd_fourier:
      return make_variable_density_fourier(img.height, img.width, m, op_seed,
                                           cfg.sensing.decay);
  }
  throw std::logic_error("build_operator: bad sensing kind");
}

void write_history_csv(const ReweightState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "t,gamma,rho,objective,residual_norm,inner_iterations,solver_converged\n";
  for (const auto& h : state.history) {
    out << h.t << ',' << fmt_double(h.gamma) << ',' << fmt_double(h.rho) << ','
        << fmt_double(h.objective) << ',' << fmt_double(h.residual_norm) << ','
        << h.inner_iterations << ',' << (h.solver_converged ? 1 : 0) << '\n';
  }
}

void write_trial_artifacts(const ExperimentConfig& cfg, int trial_index,
                           const TrialArtifacts& artifacts) {
  if (cfg.output_dir.empty()) return;
  std::filesystem::create_directories(cfg.output_dir);
  const std::string stem = cfg.output_dir + "/" + algorithm_name(cfg.algorithm) + "_trial" +
                           std::to_string(trial_index);
  save_image(artifacts.reconstruction, stem + ".pgm");
  write_history_csv(artifacts.state, stem + "_history.csv");
}

TrialRecord reconstruct_one(const ExperimentConfig& cfg, const Image& img,
                            const Dictionary& dict, int trial_index, double sweep_value,
                            TrialArtifacts* artifacts) {
  const Eigen::Index n = img.size();
  auto m = static_cast<Eigen::Index>(std::floor(cfg.sensing.ratio * static_cast<double>(n)));
  m = std::max<Eigen::Index>(1, std::min(m, n));

  const std::uint64_t trial_seed = derive_seed(cfg.master_seed, trial_index, sweep_value);
  const std::uint64_t op_seed = derive_seed(trial_seed, 1);
  const std::uint64_t noise_seed = derive_seed(trial_seed, 2);

  const auto op = build_operator(cfg, img, m, op_seed);
  const ComplexVector y0 = op->forward(img.pixels.cast<Complex>());
  const NoiseModel noise = calibrate_noise(y0, cfg.isnr_db, dict.coeff_dim());
  const auto [y, nvec] = simulate_measurements(img, *op, noise, noise_seed);

  ReweightParams rw;
  rw.beta = cfg.reweight.beta;
  rw.eta = cfg.reweight.eta;
  rw.n_max = cfg.effective_n_max();
  rw.sigma_alpha = noise.sigma_alpha;

  SolverParams sp;
  sp.epsilon = noise.epsilon;
  sp.max_iters = cfg.solver.max_iters;
  sp.rel_tol = cfg.solver.rel_tol;
  sp.dr_gamma = cfg.solver.dr_gamma;
  sp.dr_lambda = cfg.solver.dr_lambda;
  sp.ball_proj_tol = cfg.solver.ball_proj_tol;
  sp.ball_proj_max_iters = cfg.solver.ball_proj_max_iters;

  const auto t0 = std::chrono::steady_clock::now();
  SaraResult res = sara_reconstruct(y, *op, dict, noise, rw, sp);
  const auto t1 = std::chrono::steady_clock::now();

  TrialRecord rec;
  rec.trial_seed = trial_seed;
  rec.config_digest = cfg.digest();
  rec.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  rec.realized_isnr_db = realized_isnr_db(y - nvec, nvec);
  Image recon(img.height, img.width, std::move(res.x_hat));
  rec.snr_db = snr_db(img, recon);
  long iters = 0;
  for (const auto& h : res.state.history) iters += h.inner_iterations;
  rec.iterations_total = iters;

  if (artifacts) {
    artifacts->reconstruction = std::move(recon);
    artifacts->state = std::move(res.state);
  }
  return rec;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& cfg_in, int trial_index, double sweep_value,
                      TrialArtifacts* artifacts) {
  ExperimentConfig cfg = cfg_in;
  cfg.finalize();
  Image img = load_image(cfg.image_path);
  img.validate_ground_truth();
  const Dictionary dict(cfg.dictionary.bases, cfg.dictionary.depth, img.height, img.width);

  TrialArtifacts local;
  TrialArtifacts* sink = artifacts ? artifacts : (cfg.output_dir.empty() ? nullptr : &local);
  TrialRecord rec = reconstruct_one(cfg, img, dict, trial_index, sweep_value, sink);
  if (sink) write_trial_artifacts(cfg, trial_index, *sink);
  return rec;
}

void run_sweep(const SweepSpec& spec_in, const std::string& csv_path) {
  SweepSpec spec = spec_in;
  spec.base.finalize();
  spec.validate();

  if (!csv_path.empty()) {
    const auto parent = std::filesystem::path(csv_path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
  }
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot open " + csv_path + " for writing");
  out << "sweep_value,algo,mean_snr_db,std_snr_db,trials,mean_iters,mean_wall_s,"
         "config_digest,error\n";

  struct Setting {
    double value;
    ExperimentConfig cfg;
  };
  std::vector<Setting> settings;
  for (int depth_idx = 0;; ++depth_idx) {
    const bool crossing = spec.variable == SweepSpec::Variable::num_bases;
    if (crossing && depth_idx >= static_cast<int>(spec.depths.size())) break;
    for (double v : spec.values) {
      ExperimentConfig cfg = spec.base;
      switch (spec.variable) {
        case SweepSpec::Variable::undersampling:
          cfg.sensing.ratio = v;
          break;
        case SweepSpec::Variable::isnr:
          cfg.isnr_db = v;
          break;
        case SweepSpec::Variable::num_bases: {
          const int q = static_cast<int>(v);
          cfg.dictionary.bases.clear();
          for (int k = 1; k <= q; ++k) cfg.dictionary.bases.push_back(BasisId::daubechies(k));
          cfg.dictionary.depth = spec.depths[depth_idx];
          break;
        }
      }
      cfg.output_dir.clear();  // sweeps produce the CSV only
      settings.push_back({v, std::move(cfg)});
    }
    if (!crossing) break;
  }

  for (auto& [value, cfg] : settings) {
    std::string error;
    std::vector<TrialRecord> records;
    try {
      cfg.validate();
      for (int i = 0; i < cfg.trials; ++i) records.push_back(run_trial(cfg, i, value));
    } catch (const std::exception& e) {
      error = e.what();
    }
    out << fmt_double(value) << ',' << algorithm_name(cfg.algorithm) << ',';
    if (!records.empty()) {
      const SnrAggregate agg = aggregate(records);
      double iters = 0.0, wall = 0.0;
      for (const auto& r : records) {
        iters += static_cast<double>(r.iterations_total);
        wall += r.wall_time_s;
      }
      iters /= static_cast<double>(records.size());
      wall /= static_cast<double>(records.size());
      out << fmt_double(agg.mean_snr_db) << ',' << fmt_double(agg.std_snr_db) << ','
          << agg.count << ',' << fmt_double(iters) << ',' << fmt_double(wall);
    } else {
      out << ",,0,,";
    }
    out << ',' << cfg.digest() << ',' << csv_escape(error) << '\n';
    out.flush();
  }
}

TrialRecord run_mri_demo(const ExperimentConfig& cfg_in, TrialArtifacts* artifacts) {
  ExperimentConfig cfg = cfg_in;
  cfg.algorithm = Algorithm::sara;
  cfg.dictionary.bases.clear();
  for (int k = 1; k <= 8; ++k) cfg.dictionary.bases.push_back(BasisId::daubechies(k));
  cfg.dictionary.bases.push_back(BasisId::dirac());
  cfg.sensing.kind = SensingKind::vd_fourier;
  cfg.sensing.ratio = 0.05;
  cfg.isnr_db = 30.0;
  cfg.finalize();

  Image img = load_image(cfg.image_path);
  img.validate_ground_truth();

  // pad each extent up to a multiple of 2^depth by edge replication
  const int block = 1 << cfg.dictionary.depth;
  const int ph = (img.height % block == 0) ? img.height : (img.height / block + 1) * block;
  const int pw = (img.width % block == 0) ? img.width : (img.width / block + 1) * block;
  Image padded = Image::zero(ph, pw);
  for (int r = 0; r < ph; ++r)
    for (int c = 0; c < pw; ++c)
      padded.at(r, c) = img.at(std::min(r, img.height - 1), std::min(c, img.width - 1));

  const Dictionary dict(cfg.dictionary.bases, cfg.dictionary.depth, ph, pw);
  TrialArtifacts local;
  TrialArtifacts& sink = artifacts ? *artifacts : local;
  TrialRecord rec = reconstruct_one(cfg, padded, dict, 0, 0.0, &sink);

  // crop back before scoring against the original
  Image cropped = Image::zero(img.height, img.width);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) cropped.at(r, c) = sink.reconstruction.at(r, c);
  sink.reconstruction = std::move(cropped);
  rec.snr_db = snr_db(img, sink.reconstruction);

  if (!cfg.output_dir.empty()) {
    std::filesystem::create_directories(cfg.output_dir);
    save_image(sink.reconstruction, cfg.output_dir + "/mri_demo.pgm");
    write_history_csv(sink.state, cfg.output_dir + "/mri_demo_history.csv");
  }
  return rec;
}

}  // namespace sara
