// Fock-space simulation of the two-photon integrated circuit: directional
// couplers and phase shifters on six waveguide modes, two-photon evolution
// through matrix permanents, dual-rail post-selection, and the full chip
// layout (state preparation, nondeterministic controlled-Hadamard, and the
// measurement interferometers of the Bell test).

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qdc/delayed_choice.hpp"
#include "qdc/qstate.hpp"

namespace qdc {

// Directional coupler of reflectivity eta on a mode pair; acts on its block
// as [[sqrt(eta), i sqrt(1-eta)], [i sqrt(1-eta), sqrt(eta)]].
struct Coupler {
  int mode_a;
  int mode_b;
  double reflectivity;
};

struct PhaseShifter {
  int mode;
  double theta;
};

using NetworkElement = std::variant<Coupler, PhaseShifter>;

struct ModeNetwork {
  int n_modes = 0;
  std::vector<NetworkElement> elements;
};

// Dense n x n complex matrix, row-major.
class TransferMatrix {
 public:
  TransferMatrix() = default;
  explicit TransferMatrix(int n) : n_(n), m_(static_cast<size_t>(n) * n) {}

  static TransferMatrix identity(int n);

  int size() const { return n_; }
  Complex& at(int i, int j) { return m_[static_cast<size_t>(i) * n_ + j]; }
  Complex at(int i, int j) const { return m_[static_cast<size_t>(i) * n_ + j]; }

  bool unitary(double tol = kAlgebraTol) const;

 private:
  int n_ = 0;
  std::vector<Complex> m_;
};

// Ordered product of the element matrices (first element acts first).
// Throws std::out_of_range for bad mode indices and std::invalid_argument
// for reflectivities outside [0, 1].
TransferMatrix transfer_matrix(const ModeNetwork& network);

// Two photons in n modes: amplitudes over unordered occupations (i <= j).
struct TwoPhotonState {
  int n_modes = 0;
  std::vector<Complex> amp;  // indexed by pair_index
};

int pair_count(int n_modes);
int pair_index(int n_modes, int i, int j);  // requires i <= j

TwoPhotonState two_photon_basis(int n_modes, int i, int j);
double norm_squared(const TwoPhotonState& s);

// Output amplitude over pair (k,l) is
//   sum_in amp_in * perm(U[{k,l},{i,j}]) / sqrt(mu_in mu_out),
// with mu = 2 for a doubly occupied mode and 1 otherwise.
TwoPhotonState evolve_two_photon(const TwoPhotonState& input, const TransferMatrix& u);

// Dual-rail encoding: one photon per qubit across two waveguides.
struct DualRailMap {
  int sys0, sys1;  // system-qubit rails for |0>, |1>
  int anc0, anc1;  // ancilla-qubit rails
  std::vector<int> aux;

  void validate(int n_modes) const;
};

struct PostSelected {
  TwoQubitState state;
  double success;  // kept probability mass
};

// Keeps the coincidence amplitudes (exactly one photon per rail pair),
// renormalizes, and reports the kept mass. Throws std::runtime_error when
// the kept mass falls below 1e-14.
PostSelected post_select(const TwoPhotonState& s, const DualRailMap& rails);

enum class AliceSetting { A1, A2 };
enum class BobSetting { B1, B2 };

AliceSetting alice_setting_from_string(const std::string& name);
BobSetting bob_setting_from_string(const std::string& name);

struct ChipConfig {
  double alpha = 0.0;
  double phi = 0.0;
  std::optional<AliceSetting> alice;  // measurement stages omitted when empty
  std::optional<BobSetting> bob;
  double w_phase_offset = 0.0;  // fault-injection hook used by verification
};

// Rail layout of the chip: ancilla on modes (0,1), system on (2,3),
// auxiliary modes (4,5) for the postselected CZ.
DualRailMap chip_rails();

// Controlled-Hadamard block alone: W interferometer, three 1/3 couplers
// forming the CZ, second W interferometer. Post-selected success is 1/9 for
// every logical input.
ModeNetwork ch_block(double w_phase_offset = 0.0);

// Full chip: ancilla preparation (angle alpha), system preparation
// (Hadamard coupler and phase phi), the CH block, and the measurement
// interferometers for the requested settings.
ModeNetwork build_chip(const ChipConfig& config);

// Evolve the photon pair through the chip and post-select on coincidences.
PostSelected run_chip(const ChipConfig& config);

// Detector intensities of the post-selected chip (no measurement stages).
IntensityPair chip_intensity(const ExperimentParams& p);

// Correlator of one setting pair; detectors assign +1 to the |0> rail.
double chip_correlator(const ExperimentParams& p, AliceSetting a, BobSetting b);

// CHSH S assembled from the four chip correlators.
double chip_chsh_value(const ExperimentParams& p, double w_phase_offset = 0.0);

}  // namespace qdc
