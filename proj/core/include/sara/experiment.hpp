#ifndef SARA_EXPERIMENT_HPP
#define SARA_EXPERIMENT_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "sara/config.hpp"
#include "sara/metrics.hpp"
#include "sara/reweight.hpp"

namespace sara {

struct TrialArtifacts {
  Image reconstruction;
  ReweightState state;
};

/// One seeded trial: build operator, simulate measurements, reconstruct with
/// the configured algorithm, compute metrics.  When cfg.output_dir is set the
/// reconstruction image and the per-round telemetry CSV are written there.
/// Solver warnings are recorded in the history, not raised.
TrialRecord run_trial(const ExperimentConfig& cfg, int trial_index, double sweep_value = 0.0,
                      TrialArtifacts* artifacts = nullptr);

/// Runs cfg.trials trials per sweep value (num_bases additionally crosses the
/// depth list, depth-major) and appends one aggregated CSV row per setting.
/// Columns: sweep_value, algo, mean_snr_db, std_snr_db, trials, mean_iters,
/// mean_wall_s, config_digest, error.  Failures are recorded per row.
void run_sweep(const SweepSpec& spec, const std::string& csv_path);

/// The MR illustration: pads the image so each extent is divisible by
/// 2^depth (edge replication), reconstructs with the db1..db8 + dirac
/// dictionary from variable-density Fourier measurements at M = 0.05 N and
/// ISNR 30 dB, then crops back before computing the SNR.
TrialRecord run_mri_demo(const ExperimentConfig& cfg, TrialArtifacts* artifacts = nullptr);

/// Operator and prox invariant suite; prints one line per check.
/// Returns the number of failed checks.
int selftest(std::ostream& out);

}  // namespace sara

#endif
