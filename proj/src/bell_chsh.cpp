#include "qdc/bell_chsh.hpp"

#include <cmath>
#include <numbers>

namespace qdc {

namespace {

// Minimal density-matrix plumbing for the mixture evaluation. Kept local:
// the state layer stays pure-state only.
using Density4 = Mat4;

Density4 projector(const TwoQubitState& s) {
  Density4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[4 * i + j] = s.amps()[i] * std::conj(s.amps()[j]);
  return r;
}

double trace_product(const Density4& rho, const Mat4& op) {
  Complex t = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t += rho[4 * i + j] * op[4 * j + i];
  return t.real();
}

Density4 mixture_density(const ExperimentParams& p) {
  const double w0 = std::cos(p.alpha) * std::cos(p.alpha);
  const double w1 = std::sin(p.alpha) * std::sin(p.alpha);
  Density4 r{};
  if (w0 > 0) {
    Density4 d = projector(tensor(particle_state(p.phi), QubitState::zero()));
    for (int i = 0; i < 16; ++i) r[i] += w0 * d[i];
  }
  if (w1 > 0) {
    Density4 d = projector(tensor(wave_state(p.phi), QubitState::one()));
    for (int i = 0; i < 16; ++i) r[i] += w1 * d[i];
  }
  return r;
}

}  // namespace

MeasurementSettings bell_settings() {
  const double s = 1.0 / std::numbers::sqrt2;
  Mat2 a0 = scale(-1.0, gates::pauli_y());
  Mat2 a1 = gates::pauli_z();
  Mat2 b0 = scale(s, add(gates::pauli_x(), scale(-1.0, gates::pauli_z())));
  Mat2 b1 = scale(-s, add(gates::pauli_x(), gates::pauli_z()));
  return {Observable(a0), Observable(a1), Observable(b0), Observable(b1)};
}

double chsh_value(const TwoQubitState& state, const MeasurementSettings& settings) {
  return expectation_value(state, settings.a0, settings.b0) +
         expectation_value(state, settings.a0, settings.b1) +
         expectation_value(state, settings.a1, settings.b0) -
         expectation_value(state, settings.a1, settings.b1);
}

double strategy_chsh(const DeterministicStrategy& s) {
  return static_cast<double>(s.out_a[0] * s.out_b[0] + s.out_a[0] * s.out_b[1] +
                             s.out_a[1] * s.out_b[0] - s.out_a[1] * s.out_b[1]);
}

LhvBound lhv_maximum(const MeasurementSettings& settings) {
  (void)settings;  // deterministic +-1 assignments make the bound settings-free
  LhvBound result{-4.0, {}};
  int best = -4;
  for (int bits = 0; bits < 16; ++bits) {
    DeterministicStrategy s{{(bits & 1) ? 1 : -1, (bits & 2) ? 1 : -1},
                            {(bits & 4) ? 1 : -1, (bits & 8) ? 1 : -1}};
    int v = s.out_a[0] * s.out_b[0] + s.out_a[0] * s.out_b[1] + s.out_a[1] * s.out_b[0] -
            s.out_a[1] * s.out_b[1];
    if (v > best) {
      best = v;
      result.maximizers.clear();
    }
    if (v == best) result.maximizers.push_back(s);
  }
  result.maximum = static_cast<double>(best);
  return result;
}

double classical_mixture_chsh(const ExperimentParams& p, const MeasurementSettings& settings) {
  Density4 rho = mixture_density(p);
  return trace_product(rho, kron(settings.a0.mat(), settings.b0.mat())) +
         trace_product(rho, kron(settings.a0.mat(), settings.b1.mat())) +
         trace_product(rho, kron(settings.a1.mat(), settings.b0.mat())) -
         trace_product(rho, kron(settings.a1.mat(), settings.b1.mat()));
}

IntensityPair classical_mixture_intensity(const ExperimentParams& p) {
  Density4 rho = mixture_density(p);
  Mat2 p0{1.0, 0.0, 0.0, 0.0};  // |0><0| on the system
  double i0 = trace_product(rho, kron(p0, gates::identity()));
  return {i0, 1.0 - i0};
}

}  // namespace qdc
