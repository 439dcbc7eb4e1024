#include "qdc/counting.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdc {

namespace {

Mat4 projector_product(const Observable& a, int sign_a, const Observable& b, int sign_b) {
  // (I + s*O)/2 on each side.
  Mat2 pa = scale(0.5, add(gates::identity(), scale(sign_a, a.mat())));
  Mat2 pb = scale(0.5, add(gates::identity(), scale(sign_b, b.mat())));
  return kron(pa, pb);
}

double trace_product(const Mat4& rho, const Mat4& op) {
  Complex t = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t += rho[4 * i + j] * op[4 * j + i];
  return t.real();
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the standardized mt19937_64 sequence, so
// sampled tables are reproducible across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int sample_outcome(const std::array<double, 4>& p, std::mt19937_64& rng) {
  double u = uniform01(rng);
  double acc = 0;
  for (int k = 0; k < 3; ++k) {
    acc += p[k];
    if (u < acc) return k;
  }
  return 3;
}

}  // namespace

NoiseModel::NoiseModel(double v) : visibility(v) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("visibility must lie in [0, 1]");
}

Density4::Density4(const Mat4& m) : m_(m) {
  if (max_abs_diff(m, adjoint(m)) > kAlgebraTol)
    throw std::invalid_argument("density matrix must be Hermitian");
  Complex tr = m[0] + m[5] + m[10] + m[15];
  if (std::abs(tr - Complex{1.0, 0.0}) > kAlgebraTol)
    throw std::invalid_argument("density matrix must have unit trace");
}

Density4 Density4::pure(const TwoQubitState& s) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[4 * i + j] = s.amps()[i] * std::conj(s.amps()[j]);
  return Density4(m);
}

Density4 Density4::werner(const TwoQubitState& s, double visibility) {
  NoiseModel check(visibility);
  Mat4 m = Density4::pure(s).mat();
  for (auto& x : m) x *= check.visibility;
  const double mixed = (1.0 - check.visibility) / 4.0;
  for (int i = 0; i < 4; ++i) m[4 * i + i] += mixed;
  return Density4(m);
}

std::array<double, 4> outcome_probabilities(const Density4& rho, const Observable& a,
                                            const Observable& b) {
  std::array<double, 4> p{};
  int k = 0;
  for (int sa : {+1, -1})
    for (int sb : {+1, -1}) p[k++] = trace_product(rho.mat(), projector_product(a, sa, b, sb));
  // Clip away negative round-off so samplers see a distribution.
  double sum = 0;
  for (auto& x : p) {
    x = std::max(0.0, x);
    sum += x;
  }
  for (auto& x : p) x /= sum;
  return p;
}

std::array<double, 4> outcome_probabilities(const TwoQubitState& s, const Observable& a,
                                            const Observable& b) {
  return outcome_probabilities(Density4::pure(s), a, b);
}

double correlator(const std::array<double, 4>& probabilities) {
  return probabilities[0] - probabilities[1] - probabilities[2] + probabilities[3];
}

CountTable sample_counts(const std::array<std::array<double, 4>, 4>& probabilities,
                         long long shots_per_setting, std::uint64_t seed) {
  if (shots_per_setting < 1) throw std::invalid_argument("shots per setting must be >= 1");
  CountTable table;
  table.shots_per_setting = shots_per_setting;
  for (int xy = 0; xy < 4; ++xy) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(xy)));
    for (long long n = 0; n < shots_per_setting; ++n)
      ++table.counts[xy][sample_outcome(probabilities[xy], rng)];
  }
  return table;
}

ChshEstimate estimate_chsh(const CountTable& table) {
  if (table.shots_per_setting < 1) throw std::invalid_argument("count table has no shots");
  double s = 0, var = 0;
  for (int xy = 0; xy < 4; ++xy) {
    long long total = 0;
    for (long long c : table.counts[xy]) total += c;
    if (total == 0) throw std::invalid_argument("degenerate count table: empty setting pair");
    double e = static_cast<double>(table.counts[xy][0] - table.counts[xy][1] -
                                   table.counts[xy][2] + table.counts[xy][3]) /
               static_cast<double>(total);
    const double sign = (xy == 3) ? -1.0 : 1.0;
    s += sign * e;
    var += (1.0 - e * e) / static_cast<double>(total);
  }
  return {s, std::sqrt(var)};
}

double bootstrap_std_error(const CountTable& table, int resamples, std::uint64_t seed) {
  if (resamples < 2) throw std::invalid_argument("need at least two resamples");
  std::array<std::array<double, 4>, 4> freq{};
  for (int xy = 0; xy < 4; ++xy)
    for (int k = 0; k < 4; ++k)
      freq[xy][k] = static_cast<double>(table.counts[xy][k]) /
                    static_cast<double>(table.shots_per_setting);
  double sum = 0, sum2 = 0;
  for (int r = 0; r < resamples; ++r) {
    CountTable draw = sample_counts(freq, table.shots_per_setting, derive_seed(seed, r));
    double s = estimate_chsh(draw).s;
    sum += s;
    sum2 += s * s;
  }
  double mean = sum / resamples;
  return std::sqrt(std::max(0.0, sum2 / resamples - mean * mean));
}

std::string count_table_to_csv(const CountTable& table) {
  std::ostringstream out;
  out << "x,y,n_pp,n_pm,n_mp,n_mm\n";
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const auto& row = table.counts[2 * x + y];
      out << x << ',' << y << ',' << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3]
          << '\n';
    }
  return out.str();
}

CountTable count_table_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty count CSV");
  CountTable table;
  long long shots = -1;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    long long v[6];
    for (int k = 0; k < 6; ++k) {
      if (!std::getline(ls, field, ',')) throw std::invalid_argument("short row in count CSV");
      v[k] = std::stoll(field);
    }
    int x = static_cast<int>(v[0]), y = static_cast<int>(v[1]);
    if (x < 0 || x > 1 || y < 0 || y > 1) throw std::invalid_argument("bad setting index in CSV");
    long long total = 0;
    for (int k = 0; k < 4; ++k) {
      table.counts[2 * x + y][k] = v[2 + k];
      total += v[2 + k];
    }
    if (shots < 0) shots = total;
    if (total != shots) throw std::invalid_argument("rows disagree on shots per setting");
    ++rows;
  }
  if (rows != 4) throw std::invalid_argument("count CSV needs exactly four setting rows");
  table.shots_per_setting = shots;
  return table;
}

std::array<std::array<double, 4>, 4> experiment_probabilities(
    const TwoQubitState& target, const NoiseModel& noise, const MeasurementSettings& settings) {
  Density4 rho = Density4::werner(target, noise.visibility);
  const Observable* as[2] = {&settings.a0, &settings.a1};
  const Observable* bs[2] = {&settings.b0, &settings.b1};
  std::array<std::array<double, 4>, 4> p{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) p[2 * x + y] = outcome_probabilities(rho, *as[x], *bs[y]);
  return p;
}

CountTable simulate_experiment(const TwoQubitState& target, const NoiseModel& noise,
                               const MeasurementSettings& settings, long long shots_per_setting,
                               std::uint64_t seed) {
  return sample_counts(experiment_probabilities(target, noise, settings), shots_per_setting,
                       seed);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t state = base ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  return splitmix64(state);
}

RepetitionSummary run_repetitions(double visibility, long long shots_per_setting,
                                  int repetitions, std::uint64_t seed, Execution exec) {
  if (repetitions < 1) throw std::invalid_argument("need at least one repetition");
  NoiseModel noise(visibility);
  const TwoQubitState target =
      global_state(ExperimentParams(std::numbers::pi / 4.0, std::numbers::pi / 2.0));
  const MeasurementSettings settings = bell_settings();
  const auto probabilities = experiment_probabilities(target, noise, settings);

  RepetitionSummary summary;
  summary.runs.resize(repetitions);
  if (exec == Execution::OpenMp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int r = 0; r < repetitions; ++r)
      summary.runs[r] =
          estimate_chsh(sample_counts(probabilities, shots_per_setting, derive_seed(seed, r)));
  } else {
    for (int r = 0; r < repetitions; ++r)
      summary.runs[r] =
          estimate_chsh(sample_counts(probabilities, shots_per_setting, derive_seed(seed, r)));
  }

  double sum = 0, sum2 = 0;
  int violations = 0;
  for (const auto& run : summary.runs) {
    sum += run.s;
    sum2 += run.s * run.s;
    if (run.s > 2.0) ++violations;
  }
  summary.mean_s = sum / repetitions;
  summary.std_s = std::sqrt(std::max(0.0, sum2 / repetitions - summary.mean_s * summary.mean_s));
  summary.violation_fraction = static_cast<double>(violations) / repetitions;
  return summary;
}

}  // namespace qdc
