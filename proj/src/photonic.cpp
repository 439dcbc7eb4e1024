#include "qdc/photonic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_mode(int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes) throw std::out_of_range("mode index out of range");
}

// Left-multiply the transfer matrix by one element.
void apply_element(TransferMatrix& u, const NetworkElement& e) {
  const int n = u.size();
  if (const auto* c = std::get_if<Coupler>(&e)) {
    check_mode(c->mode_a, n);
    check_mode(c->mode_b, n);
    if (c->mode_a == c->mode_b) throw std::invalid_argument("coupler needs two distinct modes");
    if (!(c->reflectivity >= 0.0 && c->reflectivity <= 1.0))
      throw std::invalid_argument("coupler reflectivity must lie in [0, 1]");
    const double t = std::sqrt(c->reflectivity);
    const Complex r{0.0, std::sqrt(1.0 - c->reflectivity)};
    for (int j = 0; j < n; ++j) {
      Complex ra = u.at(c->mode_a, j), rb = u.at(c->mode_b, j);
      u.at(c->mode_a, j) = t * ra + r * rb;
      u.at(c->mode_b, j) = r * ra + t * rb;
    }
  } else {
    const auto& p = std::get<PhaseShifter>(e);
    check_mode(p.mode, n);
    const Complex f = std::polar(1.0, p.theta);
    for (int j = 0; j < n; ++j) u.at(p.mode, j) *= f;
  }
}

}  // namespace

TransferMatrix TransferMatrix::identity(int n) {
  TransferMatrix u(n);
  for (int i = 0; i < n; ++i) u.at(i, i) = 1.0;
  return u;
}

bool TransferMatrix::unitary(double tol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Complex dot = 0;
      for (int k = 0; k < n_; ++k) dot += std::conj(at(k, i)) * at(k, j);
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

TransferMatrix transfer_matrix(const ModeNetwork& network) {
  if (network.n_modes <= 0) throw std::invalid_argument("network needs at least one mode");
  TransferMatrix u = TransferMatrix::identity(network.n_modes);
  for (const auto& e : network.elements) apply_element(u, e);
  return u;
}

int pair_count(int n_modes) { return n_modes * (n_modes + 1) / 2; }

int pair_index(int n_modes, int i, int j) {
  // row i of the upper triangle starts after i rows of shrinking length
  return i * n_modes - i * (i - 1) / 2 + (j - i);
}

TwoPhotonState two_photon_basis(int n_modes, int i, int j) {
  if (i > j) std::swap(i, j);
  check_mode(i, n_modes);
  check_mode(j, n_modes);
  TwoPhotonState s{n_modes, std::vector<Complex>(pair_count(n_modes))};
  s.amp[pair_index(n_modes, i, j)] = 1.0;
  return s;
}

double norm_squared(const TwoPhotonState& s) {
  double n = 0;
  for (Complex c : s.amp) n += std::norm(c);
  return n;
}

TwoPhotonState evolve_two_photon(const TwoPhotonState& input, const TransferMatrix& u) {
  const int n = input.n_modes;
  if (u.size() != n) throw std::invalid_argument("transfer matrix size mismatch");
  TwoPhotonState out{n, std::vector<Complex>(pair_count(n))};
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int i = 0, p = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++p) {
      Complex a_in = input.amp[p];
      if (a_in == Complex{}) continue;
      if (i == j) a_in *= inv_sqrt2;  // 1/sqrt(mu_in)
      for (int k = 0, q = 0; k < n; ++k) {
        for (int l = k; l < n; ++l, ++q) {
          Complex perm = u.at(k, i) * u.at(l, j) + u.at(k, j) * u.at(l, i);
          if (k == l) perm *= inv_sqrt2;  // 1/sqrt(mu_out)
          out.amp[q] += a_in * perm;
        }
      }
    }
  }
  return out;
}

void DualRailMap::validate(int n_modes) const {
  std::vector<int> all{sys0, sys1, anc0, anc1};
  all.insert(all.end(), aux.begin(), aux.end());
  for (int m : all) check_mode(m, n_modes);
  for (size_t a = 0; a < all.size(); ++a)
    for (size_t b = a + 1; b < all.size(); ++b)
      if (all[a] == all[b]) throw std::invalid_argument("rail modes must be distinct");
}

PostSelected post_select(const TwoPhotonState& s, const DualRailMap& rails) {
  rails.validate(s.n_modes);
  std::array<Complex, 4> amps{};
  const int sys[2] = {rails.sys0, rails.sys1};
  const int anc[2] = {rails.anc0, rails.anc1};
  double mass = 0;
  for (int q_sys = 0; q_sys < 2; ++q_sys)
    for (int q_anc = 0; q_anc < 2; ++q_anc) {
      int i = sys[q_sys], j = anc[q_anc];
      if (i > j) std::swap(i, j);
      Complex a = s.amp[pair_index(s.n_modes, i, j)];
      amps[2 * q_sys + q_anc] = a;
      mass += std::norm(a);
    }
  if (mass < 1e-14)
    throw std::runtime_error("post-selection kept no probability mass; network mis-wired");
  const double scale = 1.0 / std::sqrt(mass);
  for (auto& a : amps) a *= scale;
  return {TwoQubitState(amps), mass};
}

AliceSetting alice_setting_from_string(const std::string& name) {
  if (name == "A1") return AliceSetting::A1;
  if (name == "A2") return AliceSetting::A2;
  throw std::invalid_argument("unknown Alice setting: " + name);
}

BobSetting bob_setting_from_string(const std::string& name) {
  if (name == "B1") return BobSetting::B1;
  if (name == "B2") return BobSetting::B2;
  throw std::invalid_argument("unknown Bob setting: " + name);
}

DualRailMap chip_rails() { return {2, 3, 0, 1, {4, 5}}; }

namespace {

constexpr int kModes = 6;
constexpr double kHalf = 0.5;
constexpr double kThird = 1.0 / 3.0;

void add_coupler(ModeNetwork& n, int a, int b, double eta) {
  n.elements.push_back(Coupler{a, b, eta});
}

void add_phase(ModeNetwork& n, int mode, double theta) {
  n.elements.push_back(PhaseShifter{mode, theta});
}

// W interferometer on the system rails. The heater sits on opposite arms in
// the two instances; both realize the W gate up to a global phase at the
// listed heater values.
void add_w_mzi(ModeNetwork& n, bool heater_on_rail1, double theta) {
  add_coupler(n, 2, 3, kHalf);
  add_phase(n, heater_on_rail1 ? 3 : 2, theta);
  add_coupler(n, 2, 3, kHalf);
}

}  // namespace

ModeNetwork ch_block(double w_phase_offset) {
  ModeNetwork net{kModes, {}};
  add_w_mzi(net, true, 5.0 * kPi / 4.0 + w_phase_offset);  // shifter 4
  // Postselected CZ: central 1/3 coupler between the |1> rails, balancing
  // 1/3 couplers from the |0> rails into the auxiliary modes.
  add_coupler(net, 0, 4, kThird);  // dc6
  add_coupler(net, 1, 3, kThird);  // dc7
  add_coupler(net, 2, 5, kThird);  // dc8
  add_w_mzi(net, false, 3.0 * kPi / 4.0 + w_phase_offset);  // shifter 7
  return net;
}

ModeNetwork build_chip(const ChipConfig& config) {
  ModeNetwork net{kModes, {}};

  // Ancilla preparation: interferometer turning a photon in mode 0 into
  // cos(alpha)|rail0> + sin(alpha)|rail1>.
  add_coupler(net, 0, 1, kHalf);
  add_phase(net, 0, kPi - 2.0 * config.alpha);  // shifter 9
  add_coupler(net, 0, 1, kHalf);
  // Conditional-phase calibration of the controlled beam-splitter (see the
  // closing_beam_splitter convention): heater on the ancilla |1> rail.
  add_phase(net, 1, -config.phi / 2.0);  // shifter 11

  // System preparation: Hadamard coupler plus the interferometer phase. The
  // heater zero-point differs from the logical phase by pi/2.
  add_coupler(net, 2, 3, kHalf);
  add_phase(net, 3, config.phi - kPi / 2.0);  // shifter 10

  ModeNetwork ch = ch_block(config.w_phase_offset);
  net.elements.insert(net.elements.end(), ch.elements.begin(), ch.elements.end());

  if (config.alice) {
    // Measurement interferometer for the system photon: heater 5 before an
    // interferometer whose internal heater 6 carries a fixed pi/2 offset.
    const double phi5 = (*config.alice == AliceSetting::A1) ? -kPi / 2.0 : kPi / 4.0;
    const double phi6 = (*config.alice == AliceSetting::A1) ? 0.0 : kPi / 2.0;
    add_phase(net, 3, phi5);  // shifter 5
    add_coupler(net, 2, 3, kHalf);
    add_phase(net, 3, phi6 + kPi / 2.0);  // shifter 6
    add_coupler(net, 2, 3, kHalf);
  }
  if (config.bob) {
    // Measurement interferometer for the ancilla photon: internal heater 8.
    const double phi8 = (*config.bob == BobSetting::B1) ? kPi / 4.0 : -kPi / 4.0;
    add_coupler(net, 0, 1, kHalf);
    add_phase(net, 0, phi8);  // shifter 8
    add_coupler(net, 0, 1, kHalf);
  }
  return net;
}

PostSelected run_chip(const ChipConfig& config) {
  TransferMatrix u = transfer_matrix(build_chip(config));
  TwoPhotonState in = two_photon_basis(kModes, 0, 2);  // ancilla mode 0, system mode 2
  return post_select(evolve_two_photon(in, u), chip_rails());
}

IntensityPair chip_intensity(const ExperimentParams& p) {
  ChipConfig cfg{p.alpha, p.phi, std::nullopt, std::nullopt, 0.0};
  PostSelected ps = run_chip(cfg);
  double i0 = std::norm(ps.state.amp(0, 0)) + std::norm(ps.state.amp(0, 1));
  return {i0, 1.0 - i0};
}

namespace {

double correlator_for(const ChipConfig& cfg) {
  PostSelected ps = run_chip(cfg);
  double e = 0;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      e += (s == t ? 1.0 : -1.0) * std::norm(ps.state.amp(s, t));
  return e;
}

}  // namespace

double chip_correlator(const ExperimentParams& p, AliceSetting a, BobSetting b) {
  return correlator_for({p.alpha, p.phi, a, b, 0.0});
}

double chip_chsh_value(const ExperimentParams& p, double w_phase_offset) {
  auto e = [&](AliceSetting a, BobSetting b) {
    return correlator_for({p.alpha, p.phi, a, b, w_phase_offset});
  };
  return e(AliceSetting::A1, BobSetting::B1) + e(AliceSetting::A1, BobSetting::B2) +
         e(AliceSetting::A2, BobSetting::B1) - e(AliceSetting::A2, BobSetting::B2);
}

}  // namespace qdc
