// Monte Carlo coincidence counting: Born-rule outcome distributions under a
// single-parameter visibility noise model, seeded multinomial sampling, and
// the CHSH estimator with analytic error propagation.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qdc/bell_chsh.hpp"
#include "qdc/execution.hpp"
#include "qdc/qstate.hpp"

namespace qdc {

// Visibility noise: rho = V |psi><psi| + (1 - V) I/4.
struct NoiseModel {
  double visibility;

  explicit NoiseModel(double v);
};

// Minimal two-qubit density matrix for the noisy-state statistics.
class Density4 {
 public:
  explicit Density4(const Mat4& m);

  static Density4 pure(const TwoQubitState& s);
  static Density4 werner(const TwoQubitState& s, double visibility);

  const Mat4& mat() const { return m_; }

 private:
  Mat4 m_;
};

// Probabilities of the four outcome pairs, ordered (++, +-, -+, --), where
// the first sign is Alice's outcome of A and the second Bob's outcome of B.
std::array<double, 4> outcome_probabilities(const Density4& rho, const Observable& a,
                                            const Observable& b);
std::array<double, 4> outcome_probabilities(const TwoQubitState& s, const Observable& a,
                                            const Observable& b);

double correlator(const std::array<double, 4>& probabilities);

// Coincidence counts per setting pair (x, y), outcomes ordered as above.
struct CountTable {
  std::array<std::array<long long, 4>, 4> counts{};  // [2x + y][outcome]
  long long shots_per_setting = 0;
};

// Deterministic multinomial draw per setting pair. The RNG stream depends
// only on (seed, setting index); fixed seeds give identical tables.
CountTable sample_counts(const std::array<std::array<double, 4>, 4>& probabilities,
                         long long shots_per_setting, std::uint64_t seed);

struct ChshEstimate {
  double s;
  double std_error;
};

// Empirical S with stderr from independent multinomial error propagation:
// stderr = sqrt(sum_xy (1 - E_xy^2) / shots).
ChshEstimate estimate_chsh(const CountTable& table);

// Resampling cross-check for the analytic error bar.
double bootstrap_std_error(const CountTable& table, int resamples, std::uint64_t seed);

// CSV with columns x, y, n_pp, n_pm, n_mp, n_mm.
std::string count_table_to_csv(const CountTable& table);
CountTable count_table_from_csv(const std::string& text);

// Outcome distributions of the noisy target state for the four setting
// pairs of the Bell test.
std::array<std::array<double, 4>, 4> experiment_probabilities(const TwoQubitState& target,
                                                              const NoiseModel& noise,
                                                              const MeasurementSettings& settings);

// One simulated experiment: sample counts for every setting pair.
CountTable simulate_experiment(const TwoQubitState& target, const NoiseModel& noise,
                               const MeasurementSettings& settings, long long shots_per_setting,
                               std::uint64_t seed);

// splitmix64 stream derivation; repetition i uses derive_seed(seed, i).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct RepetitionSummary {
  std::vector<ChshEstimate> runs;
  double mean_s = 0;
  double std_s = 0;  // empirical standard deviation across runs
  double violation_fraction = 0;  // fraction of runs with s > 2
};

// Repeated experiments on the maximally entangled interferometer state with
// the Bell-test settings. Each repetition derives its own seed, so the
// parallel and serial paths produce identical run lists.
RepetitionSummary run_repetitions(double visibility, long long shots_per_setting,
                                  int repetitions, std::uint64_t seed,
                                  Execution exec = Execution::OpenMp);

}  // namespace qdc
