// CHSH Bell-test evaluation: the S parameter on two-qubit states, the
// exhaustive local-deterministic bound, and the classical-mixture model that
// reproduces the interferometer intensities without ever violating S <= 2.

#pragma once

#include <vector>

#include "qdc/delayed_choice.hpp"
#include "qdc/qstate.hpp"

namespace qdc {

struct MeasurementSettings {
  Observable a0, a1;  // Alice, on the system photon
  Observable b0, b1;  // Bob, on the ancilla photon
};

// The measurement quadruple of the Bell test, expressed in the logical frame
// of global_state: A0 = -Y, A1 = Z, B0 = (X-Z)/sqrt(2), B1 = -(X+Z)/sqrt(2).
// Tailored to the maximally entangled state at (alpha=pi/4, phi=pi/2), where
// it reaches the Tsirelson value 2*sqrt(2).
MeasurementSettings bell_settings();

// S = <A0 B0> + <A0 B1> + <A1 B0> - <A1 B1>.
double chsh_value(const TwoQubitState& state, const MeasurementSettings& settings);

// Local deterministic strategy: fixed +-1 outputs per setting choice.
struct DeterministicStrategy {
  int out_a[2];  // Alice's outcome for settings x = 0, 1
  int out_b[2];  // Bob's outcome for settings y = 0, 1
};

double strategy_chsh(const DeterministicStrategy& s);

struct LhvBound {
  double maximum;  // always exactly 2
  std::vector<DeterministicStrategy> maximizers;
};

// Exhaustive maximum of S over all 16 deterministic strategies. The bound is
// independent of the measurement settings; the parameter mirrors the quantum
// evaluation signature.
LhvBound lhv_maximum(const MeasurementSettings& settings);

// S of the separable mixture cos^2(a) |psi_p><psi_p| (x) |0><0|
//                          + sin^2(a) |psi_w><psi_w| (x) |1><1|,
// evaluated by a density-matrix trace. Stays within |S| <= 2 everywhere.
double classical_mixture_chsh(const ExperimentParams& p, const MeasurementSettings& settings);

// Detector intensities of the same mixture; identical to the closed-form
// interferometer law for every (alpha, phi).
IntensityPair classical_mixture_intensity(const ExperimentParams& p);

}  // namespace qdc
