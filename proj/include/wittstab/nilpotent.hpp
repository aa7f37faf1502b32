#pragma once

// Lifting self-adjoint involutions and unitary conjugators along B[x]/(x^k) -> B.
// The involution on matrices is the transpose (epsilon = +1); B is Q or F_p.

#include <cstdint>
#include <string>
#include <vector>

#include "wittstab/matrix.hpp"

namespace wittstab {

/// J with J^2 = I and J* = J, exactly. Over B or over a truncated ring B[x]/(x^k).
class SelfAdjInvolution {
 public:
  /// Throws InvalidInput when J is not square, not an involution, or not self-adjoint.
  explicit SelfAdjInvolution(Matrix j);

  const RingSpec& ring() const noexcept { return j_.ring(); }
  const Matrix& matrix() const noexcept { return j_; }
  std::size_t dim() const noexcept { return j_.rows(); }

 private:
  Matrix j_;
};

/// Keeps the degree-0 coefficients. Identity on matrices over a non-truncated ring.
Matrix reduce_mod_I(const Matrix& m);
SelfAdjInvolution reduce_mod_I(const SelfAdjInvolution& j);

/// Constant embedding B -> B[x]/(x^k).
Matrix embed(const Matrix& m, const RingSpec& truncated);

struct InvolutionLift {
  Matrix eta;    // R* - R
  Matrix s;      // R + eta / 2, self-adjoint
  Matrix gamma;  // S^2 - I, in the ideal
  Matrix u;      // (1 + gamma)^(-1/2)
  SelfAdjInvolution lifted;  // S U
};

/// Lifts jbar along any lift r. Throws NotALift when reduce_mod_I(r) != jbar, SpecMismatch when the
/// rings do not match.
InvolutionLift lift_involution_steps(const SelfAdjInvolution& jbar, const Matrix& r);
SelfAdjInvolution lift_involution(const SelfAdjInvolution& jbar, const Matrix& r);

/// P = (I - J) / 2: idempotent and self-adjoint; its image is the -1 eigenspace of J.
Matrix associated_projection(const SelfAdjInvolution& j);

/// gamma = beta (beta* beta)^(-1/2): unitary and congruent to alpha. Throws NotUnitaryMod when
/// alpha alpha* != I, NotALift when reduce_mod_I(beta) != alpha.
Matrix lift_unitary(const Matrix& alpha, const Matrix& beta);

struct Conjugator {
  Matrix delta;        // (1 + J2 J1) / 2, with delta J1 = J2 delta
  Matrix delta_prime;  // delta (delta delta*)^(-1/2), unitary, delta' J1 delta'^-1 = J2
};

/// Throws NotCongruent when J1 and J2 differ modulo the ideal, SpecMismatch for different rings.
Conjugator conjugating_unitary_steps(const SelfAdjInvolution& j1, const SelfAdjInvolution& j2);
Matrix conjugating_unitary(const SelfAdjInvolution& j1, const SelfAdjInvolution& j2);

struct RoundtripReport {
  RingSpec base;
  int k = 1;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t surjectivity_ok = 0;
  std::size_t injectivity_ok = 0;
  std::string projection_convention = "P = (I - J)/2";
  std::vector<std::string> failures;  // first few failure messages
  bool all_ok() const { return surjectivity_ok == trials && injectivity_ok == trials; }
};

/// Surjectivity: random self-adjoint involutions over B, random lifts, lift and check. Injectivity:
/// two independent lifts of one involution, conjugator checked exactly. Needs n <= 8, 1 <= k <= 6,
/// base Q or F_p (InvalidInput otherwise).
RoundtripReport roundtrip_isomorphism_demo(const RingSpec& base, int k, std::size_t n, std::size_t trials, std::uint64_t seed = 1);

/// A random symmetric involution over B: O diag(+-1) O^T with O a product of reflections.
Matrix random_symmetric_involution(const RingSpec& base, std::size_t n, std::uint64_t seed);

}  // namespace wittstab
