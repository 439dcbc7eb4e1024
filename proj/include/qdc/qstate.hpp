// Exact complex linear algebra for one- and two-qubit pure states.
//
// Conventions used throughout the project:
//   * two-qubit basis order is |system, ancilla>: index = 2*s + a
//   * all states and operators are immutable values; operations are pure
//     functions and safe to call concurrently.

#pragma once

#include <array>
#include <complex>
#include <string>

namespace qdc {

using Complex = std::complex<double>;

// Tolerances: algebraic identities should hold to near machine precision,
// spectral/derived quantities get an order of magnitude of slack.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

// Small dense matrices, row-major.
using Mat2 = std::array<Complex, 4>;
using Mat4 = std::array<Complex, 16>;

Mat2 mul(const Mat2& a, const Mat2& b);
Mat4 mul(const Mat4& a, const Mat4& b);
Mat2 adjoint(const Mat2& m);
Mat4 adjoint(const Mat4& m);
Mat2 scale(Complex c, const Mat2& m);
Mat4 scale(Complex c, const Mat4& m);
Mat2 add(const Mat2& a, const Mat2& b);

// Kronecker product with the system factor first.
Mat4 kron(const Mat2& system_op, const Mat2& ancilla_op);

double max_abs_diff(const Mat2& a, const Mat2& b);
double max_abs_diff(const Mat4& a, const Mat4& b);

bool is_unitary(const Mat2& m, double tol = kAlgebraTol);
bool is_unitary(const Mat4& m, double tol = kAlgebraTol);
bool is_hermitian(const Mat2& m, double tol = kAlgebraTol);

// Residual of a == c*b for the best unit-modulus c; 0 when equal up to a
// global phase.
double diff_up_to_phase(const Mat4& a, const Mat4& b);

// Normalized single-qubit state. Construction rejects non-normalized or
// non-finite amplitudes.
class QubitState {
 public:
  QubitState(Complex amp0, Complex amp1);

  Complex amp0() const { return amp0_; }
  Complex amp1() const { return amp1_; }

  double prob0() const { return std::norm(amp0_); }
  double prob1() const { return std::norm(amp1_); }

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }

 private:
  Complex amp0_, amp1_;
};

// Normalized two-qubit state, |system, ancilla> order.
class TwoQubitState {
 public:
  explicit TwoQubitState(const std::array<Complex, 4>& amps);

  Complex amp(int system, int ancilla) const { return amps_[2 * system + ancilla]; }
  const std::array<Complex, 4>& amps() const { return amps_; }

  static TwoQubitState basis(int system, int ancilla);

 private:
  std::array<Complex, 4> amps_;
};

TwoQubitState tensor(const QubitState& system, const QubitState& ancilla);

// |<a|b>|; equals 1 iff the states agree up to a global phase.
double overlap_abs(const QubitState& a, const QubitState& b);
double overlap_abs(const TwoQubitState& a, const TwoQubitState& b);

// Validated unitaries. Construction throws std::invalid_argument when
// U^dagger U deviates from the identity beyond kAlgebraTol.
class Unitary2 {
 public:
  explicit Unitary2(const Mat2& m);
  const Mat2& mat() const { return m_; }

 private:
  Mat2 m_;
};

class Unitary4 {
 public:
  explicit Unitary4(const Mat4& m);
  const Mat4& mat() const { return m_; }

 private:
  Mat4 m_;
};

// Dichotomic Hermitian observable with spectrum {+1, -1}.
class Observable {
 public:
  explicit Observable(const Mat2& m);
  const Mat2& mat() const { return m_; }

 private:
  Mat2 m_;
};

enum class Qubit { System, Ancilla };
using Control = Qubit;

QubitState apply(const Unitary2& u, const QubitState& state);
TwoQubitState apply(const Unitary4& u, const TwoQubitState& state);

// u acting on one qubit, identity on the other.
Unitary4 embed(const Unitary2& u, Qubit target);
TwoQubitState apply_single(const TwoQubitState& state, const Unitary2& u, Qubit target);

// Controlled gate: identity when the control qubit is |0>, `u` on the other
// qubit when the control is |1>.
Unitary4 controlled(const Unitary2& u, Control control);
TwoQubitState apply_controlled(const TwoQubitState& state, const Unitary2& u, Control control);

// <state| A (x) B |state> with A on the system qubit and B on the ancilla.
// The matrices must be Hermitian; an imaginary residue above kSpectralTol
// raises std::runtime_error.
double expectation_value(const TwoQubitState& state, const Mat2& a, const Mat2& b);
double expectation_value(const TwoQubitState& state, const Observable& a, const Observable& b);

// Wootters concurrence of a pure two-qubit state, via the purity of the
// reduced system state: C = sqrt(2 (1 - Tr rho_s^2)).
double concurrence(const TwoQubitState& state);

namespace gates {

Mat2 identity();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

Unitary2 hadamard();
Unitary2 phase_shift(double phi);  // diag(1, e^{i phi})

// Recombining beam-splitter of a closed interferometer, calibrated for the
// internal phase phi: equal to the Hadamard up to the global factor
// e^{-i phi/2}, chosen so that it maps (|0> + e^{i phi}|1>)/sqrt(2) exactly
// onto cos(phi/2)|0> - i sin(phi/2)|1>.
Unitary2 closing_beam_splitter(double phi);

// Real symmetric single-qubit gate of a beam-splitter with reflectivity
// cos^2(pi/8); together with CZ it composes the controlled Hadamard.
Unitary2 w_gate();

Unitary4 cz();
Unitary4 controlled_hadamard();  // ancilla controls, Hadamard on the system

}  // namespace gates

}  // namespace qdc
