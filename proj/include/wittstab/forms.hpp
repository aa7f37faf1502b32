#pragma once

// Nondegenerate epsilon-symmetric bilinear forms on free modules, given by Gram matrices.

#include <optional>
#include <vector>

#include "wittstab/matrix.hpp"

namespace wittstab {

class GramForm {
 public:
  /// Zero-dimensional form over Q.
  GramForm() : GramForm(Matrix(RingSpec::rationals(), 0, 0)) {}
  /// Validates squareness, epsilon in {+1, -1}, conj_transpose(gram) = epsilon * gram and a unit determinant.
  GramForm(Matrix gram, int epsilon = 1);

  /// Diagonal form <a_1, ..., a_n>.
  static GramForm diagonal(const RingSpec& ring, const std::vector<Rational>& entries);

  const RingSpec& ring() const noexcept { return gram_.ring(); }
  int epsilon() const noexcept { return epsilon_; }
  const Matrix& gram() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return gram_.rows(); }

  /// B(x, y) = conj(x)^T * gram * y for column vectors x, y.
  RingElem pair(const Matrix& x, const Matrix& y) const;

  /// conj(P)^T * gram * P; P must be invertible.
  GramForm congruent(const Matrix& p) const;

  bool is_diagonal() const;
  std::vector<RingElem> diagonal_entries() const;

  friend bool operator==(const GramForm& a, const GramForm& b) { return a.epsilon_ == b.epsilon_ && a.gram_ == b.gram_; }

 private:
  Matrix gram_;
  int epsilon_;
};

struct Diagonalization {
  Matrix basis_change;  // P with P^T * gram * P = form.gram()
  GramForm form;
};

/// epsilon = +1 over a field or Z[1/2]. Entries are normalized to square-class representatives:
/// squarefree integers over Q, 1 or the least non-residue over F_p, and +-1, +-2 over Z[1/2].
/// Throws NoUnitPivot over Z[1/2] if no vector of unit length is found by the bounded search.
Diagonalization diagonalize(const GramForm& f);

/// epsilon = -1 over a field: P with P^T * gram * P = diag([[0,1],[-1,0]], ...).
Matrix symplectic_basis(const GramForm& f);

/// Lexicographically least nonzero v with B(v, v) = 0.
/// F_p: exhaustive over vectors whose first nonzero coordinate is 1, with coordinates ordered 0 < 1 < ... < p-1.
/// Q and Z[1/2]: integer vectors by height max|v_i| <= height_bound, then lexicographically with
/// coordinates ordered 0 < 1 < -1 < 2 < -2 < ..., first nonzero coordinate positive. Definite forms are skipped.
/// Absence is a proof only over F_p.
std::optional<Matrix> isotropy_oracle(const GramForm& f, long height_bound);

struct WittDecomposition {
  std::size_t hyperbolic_rank = 0;
  GramForm anisotropic;
  /// Columns e_1, f_1, ..., e_r, f_r, then a basis of the anisotropic part; the congruent Gram is
  /// diag([[0,1],[eps,0]], ..., anisotropic).
  Matrix change_of_basis;
  /// Anisotropy of the remaining part is proven.
  bool certified = false;
};

struct DecomposeOptions {
  long height_bound = 8;
  /// Use the Hasse-Minkowski test to certify anisotropy over Q and Z[1/2] and to stop searching early.
  bool local_global = true;
  /// Throw OracleInconclusive instead of returning an uncertified decomposition.
  bool require_certificate = false;
};

WittDecomposition witt_decompose(const GramForm& f, const DecomposeOptions& options = {});

/// Block form [[0, I], [eps I, 0]] of size 2n.
GramForm hyperbolic(std::size_t n, int epsilon, const RingSpec& ring);

/// sigma = [[0, I], [eps I, 0]]; checked to be an isometry of hyperbolic(n, eps).
Matrix interchange_isometry(std::size_t n, int epsilon, const RingSpec& ring);

GramForm orth_sum(const GramForm& f, const GramForm& g);
GramForm tensor(const GramForm& f, const GramForm& g);

/// <-a_1, ..., -a_n> style negation: gram scaled by -1.
GramForm negate(const GramForm& f);

}  // namespace wittstab
