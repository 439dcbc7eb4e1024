#include "qdc/qstate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdc {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[2 * i + j] += a[2 * i + k] * b[2 * k + j];
  return r;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[4 * i + j] += a[4 * i + k] * b[4 * k + j];
  return r;
}

Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Mat4 adjoint(const Mat4& m) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[4 * i + j] = std::conj(m[4 * j + i]);
  return r;
}

Mat2 scale(Complex c, const Mat2& m) {
  Mat2 r = m;
  for (auto& x : r) x *= c;
  return r;
}

Mat4 scale(Complex c, const Mat4& m) {
  Mat4 r = m;
  for (auto& x : r) x *= c;
  return r;
}

Mat2 add(const Mat2& a, const Mat2& b) {
  Mat2 r = a;
  for (int i = 0; i < 4; ++i) r[i] += b[i];
  return r;
}

Mat4 kron(const Mat2& system_op, const Mat2& ancilla_op) {
  Mat4 r{};
  for (int s1 = 0; s1 < 2; ++s1)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int s0 = 0; s0 < 2; ++s0)
        for (int a0 = 0; a0 < 2; ++a0)
          r[4 * (2 * s1 + a1) + (2 * s0 + a0)] = system_op[2 * s1 + s0] * ancilla_op[2 * a1 + a0];
  return r;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double d = 0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double d = 0;
  for (int i = 0; i < 16; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool is_unitary(const Mat2& m, double tol) {
  static const Mat2 id = gates::identity();
  return max_abs_diff(mul(adjoint(m), m), id) <= tol;
}

bool is_unitary(const Mat4& m, double tol) {
  Mat4 id{};
  for (int i = 0; i < 4; ++i) id[4 * i + i] = 1.0;
  return max_abs_diff(mul(adjoint(m), m), id) <= tol;
}

bool is_hermitian(const Mat2& m, double tol) { return max_abs_diff(m, adjoint(m)) <= tol; }

double diff_up_to_phase(const Mat4& a, const Mat4& b) {
  // Align b to a with the phase of Tr(b^dagger a).
  Complex t = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t += std::conj(b[4 * i + j]) * a[4 * i + j];
  Complex phase = std::abs(t) > 0 ? t / std::abs(t) : Complex{1.0, 0.0};
  return max_abs_diff(a, scale(phase, b));
}

QubitState::QubitState(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
  require(finite(amp0) && finite(amp1), "qubit amplitudes must be finite");
  double n = std::norm(amp0) + std::norm(amp1);
  require(std::abs(n - 1.0) <= kAlgebraTol, "qubit state must be normalized");
}

TwoQubitState::TwoQubitState(const std::array<Complex, 4>& amps) : amps_(amps) {
  double n = 0;
  for (Complex c : amps_) {
    require(finite(c), "two-qubit amplitudes must be finite");
    n += std::norm(c);
  }
  require(std::abs(n - 1.0) <= kAlgebraTol, "two-qubit state must be normalized");
}

TwoQubitState TwoQubitState::basis(int system, int ancilla) {
  std::array<Complex, 4> a{};
  a[2 * system + ancilla] = 1.0;
  return TwoQubitState(a);
}

TwoQubitState tensor(const QubitState& system, const QubitState& ancilla) {
  return TwoQubitState({system.amp0() * ancilla.amp0(), system.amp0() * ancilla.amp1(),
                        system.amp1() * ancilla.amp0(), system.amp1() * ancilla.amp1()});
}

double overlap_abs(const QubitState& a, const QubitState& b) {
  return std::abs(std::conj(a.amp0()) * b.amp0() + std::conj(a.amp1()) * b.amp1());
}

double overlap_abs(const TwoQubitState& a, const TwoQubitState& b) {
  Complex o = 0;
  for (int i = 0; i < 4; ++i) o += std::conj(a.amps()[i]) * b.amps()[i];
  return std::abs(o);
}

Unitary2::Unitary2(const Mat2& m) : m_(m) {
  require(is_unitary(m), "matrix is not unitary");
}

Unitary4::Unitary4(const Mat4& m) : m_(m) {
  require(is_unitary(m), "matrix is not unitary");
}

Observable::Observable(const Mat2& m) : m_(m) {
  require(is_hermitian(m), "observable must be Hermitian");
  // Spectrum {+1,-1} <=> O^2 = I and Tr O = 0.
  static const Mat2 id = gates::identity();
  require(max_abs_diff(mul(m, m), id) <= kSpectralTol, "observable must square to identity");
  require(std::abs(m[0] + m[3]) <= kSpectralTol, "observable must be traceless");
}

QubitState apply(const Unitary2& u, const QubitState& state) {
  const Mat2& m = u.mat();
  return QubitState(m[0] * state.amp0() + m[1] * state.amp1(),
                    m[2] * state.amp0() + m[3] * state.amp1());
}

TwoQubitState apply(const Unitary4& u, const TwoQubitState& state) {
  const Mat4& m = u.mat();
  std::array<Complex, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[4 * i + j] * state.amps()[j];
  return TwoQubitState(out);
}

Unitary4 embed(const Unitary2& u, Qubit target) {
  static const Mat2 id = gates::identity();
  Mat4 m = (target == Qubit::System) ? kron(u.mat(), id) : kron(id, u.mat());
  return Unitary4(m);
}

TwoQubitState apply_single(const TwoQubitState& state, const Unitary2& u, Qubit target) {
  return apply(embed(u, target), state);
}

Unitary4 controlled(const Unitary2& u, Control control) {
  Mat4 m{};
  const Mat2& g = u.mat();
  for (int s1 = 0; s1 < 2; ++s1)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int s0 = 0; s0 < 2; ++s0)
        for (int a0 = 0; a0 < 2; ++a0) {
          Complex v;
          if (control == Control::Ancilla) {
            if (a1 != a0)
              v = 0.0;
            else if (a0 == 0)
              v = (s1 == s0) ? 1.0 : 0.0;
            else
              v = g[2 * s1 + s0];
          } else {
            if (s1 != s0)
              v = 0.0;
            else if (s0 == 0)
              v = (a1 == a0) ? 1.0 : 0.0;
            else
              v = g[2 * a1 + a0];
          }
          m[4 * (2 * s1 + a1) + (2 * s0 + a0)] = v;
        }
  return Unitary4(m);
}

TwoQubitState apply_controlled(const TwoQubitState& state, const Unitary2& u, Control control) {
  return apply(controlled(u, control), state);
}

double expectation_value(const TwoQubitState& state, const Mat2& a, const Mat2& b) {
  if (!is_hermitian(a) || !is_hermitian(b))
    throw std::invalid_argument("expectation requires Hermitian operators");
  Mat4 op = kron(a, b);
  Complex v = 0;
  for (int i = 0; i < 4; ++i) {
    Complex row = 0;
    for (int j = 0; j < 4; ++j) row += op[4 * i + j] * state.amps()[j];
    v += std::conj(state.amps()[i]) * row;
  }
  if (std::abs(v.imag()) > kSpectralTol)
    throw std::runtime_error("expectation value has a non-real residue");
  return v.real();
}

double expectation_value(const TwoQubitState& state, const Observable& a, const Observable& b) {
  return expectation_value(state, a.mat(), b.mat());
}

double concurrence(const TwoQubitState& state) {
  // rho_s[s',s] = sum_a amp(s',a) conj(amp(s,a))
  Complex r00 = 0, r01 = 0, r11 = 0;
  for (int a = 0; a < 2; ++a) {
    r00 += state.amp(0, a) * std::conj(state.amp(0, a));
    r01 += state.amp(0, a) * std::conj(state.amp(1, a));
    r11 += state.amp(1, a) * std::conj(state.amp(1, a));
  }
  double purity = std::norm(r00) + std::norm(r11) + 2.0 * std::norm(r01);
  double c2 = 2.0 * (1.0 - purity);
  return std::sqrt(std::max(0.0, c2));
}

namespace gates {

Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Unitary2 hadamard() {
  const double s = std::numbers::sqrt2 / 2.0;
  return Unitary2({s, s, s, -s});
}

Unitary2 phase_shift(double phi) {
  return Unitary2({1.0, 0.0, 0.0, std::polar(1.0, phi)});
}

Unitary2 closing_beam_splitter(double phi) {
  return Unitary2(scale(std::polar(1.0, -phi / 2.0), hadamard().mat()));
}

Unitary2 w_gate() {
  const double c = std::cos(std::numbers::pi / 8.0);
  const double s = std::sin(std::numbers::pi / 8.0);
  return Unitary2({c, s, s, -c});
}

Unitary4 cz() {
  Mat4 m{};
  m[0] = m[5] = m[10] = 1.0;
  m[15] = -1.0;
  return Unitary4(m);
}

Unitary4 controlled_hadamard() { return controlled(hadamard(), Control::Ancilla); }

}  // namespace gates

}  // namespace qdc
