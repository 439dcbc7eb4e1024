// States and detector intensities of the quantum-controlled interferometer:
// open (particle), closed (wave), and the ancilla-controlled superposition of
// the two, with the detector-D0 intensity computed both in closed form and by
// simulating the circuit.

#pragma once

#include "qdc/qstate.hpp"

namespace qdc {

struct ExperimentParams {
  double alpha;  // ancilla superposition angle, clamped to [0, pi/2]
  double phi;    // interferometer relative phase, radians

  ExperimentParams(double alpha_in, double phi_in);
};

struct IntensityPair {
  double i0;  // probability of a detector-D0 click
  double i1;
};

// Open interferometer: (|0> + e^{i phi} |1>)/sqrt(2).
QubitState particle_state(double phi);

// Closed interferometer: cos(phi/2)|0> - i sin(phi/2)|1>; equals the
// Hadamard image of the particle state up to a global phase.
QubitState wave_state(double phi);

// cos(alpha) psi_p |0>_a + sin(alpha) psi_w |1>_a, built by circuit:
// prepare |0>_s (x) (cos a|0> + sin a|1>)_a, apply H then the phase to the
// system, then the ancilla-controlled closing beam-splitter.
TwoQubitState global_state(const ExperimentParams& p);

// I0 = cos^2(alpha)/2 + cos^2(phi/2) sin^2(alpha), I1 = 1 - I0.
IntensityPair intensity_closed_form(const ExperimentParams& p);

// Born probabilities of the system outcome from global_state, ancilla
// traced out by summing over its outcomes.
IntensityPair intensity_from_circuit(const ExperimentParams& p);

}  // namespace qdc
