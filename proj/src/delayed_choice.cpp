#include "qdc/delayed_choice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdc {

ExperimentParams::ExperimentParams(double alpha_in, double phi_in)
    : alpha(std::clamp(alpha_in, 0.0, std::numbers::pi / 2.0)), phi(phi_in) {}

QubitState particle_state(double phi) {
  const double s = std::numbers::sqrt2 / 2.0;
  return QubitState(s, std::polar(s, phi));
}

QubitState wave_state(double phi) {
  return QubitState(std::cos(phi / 2.0), Complex{0.0, -std::sin(phi / 2.0)});
}

TwoQubitState global_state(const ExperimentParams& p) {
  QubitState ancilla(std::cos(p.alpha), std::sin(p.alpha));
  TwoQubitState state = tensor(QubitState::zero(), ancilla);
  state = apply_single(state, gates::hadamard(), Qubit::System);
  state = apply_single(state, gates::phase_shift(p.phi), Qubit::System);
  return apply_controlled(state, gates::closing_beam_splitter(p.phi), Control::Ancilla);
}

IntensityPair intensity_closed_form(const ExperimentParams& p) {
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double c2 = std::cos(p.phi / 2.0);
  double i0 = 0.5 * ca * ca + c2 * c2 * sa * sa;
  return {i0, 1.0 - i0};
}

IntensityPair intensity_from_circuit(const ExperimentParams& p) {
  TwoQubitState s = global_state(p);
  double i0 = std::norm(s.amp(0, 0)) + std::norm(s.amp(0, 1));
  double i1 = std::norm(s.amp(1, 0)) + std::norm(s.amp(1, 1));
  return {i0, i1};
}

}  // namespace qdc
