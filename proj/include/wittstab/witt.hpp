#pragma once

// Complete Witt-class invariants over F_p, Q and Z[1/2], and Witt ring tables.

#include <optional>
#include <vector>

#include "wittstab/abelian.hpp"
#include "wittstab/forms.hpp"

namespace wittstab {

/// Invariants of a Witt class. Which fields are meaningful depends on the ring:
///   F_p      dim_mod2, disc (1 or the least non-residue)
///   Q        dim_mod2, signature, disc (squarefree integer), hasse_minus
///   Z[1/2]   signature, dyadic_parity; disc in {1, -1, 2, -2} is recorded but implied by them
/// disc is the signed discriminant (-1)^(n(n-1)/2) det. The Hasse invariant at p is the product of
/// Hilbert symbols (a_i, a_j)_p over a diagonalization padded by at most one hyperbolic plane to
/// dimension N = 0, 1 mod 4, times (-1, -1)_p^(N/4); hasse_minus lists the primes where it is -1.
struct WittClass {
  RingSpec ring;
  int epsilon = 1;
  int dim_mod2 = 0;
  Integer signature = 0;
  Integer disc = 1;
  std::vector<Integer> hasse_minus;
  int dyadic_parity = 0;

  bool is_zero() const;
  friend bool operator==(const WittClass& a, const WittClass& b);
  /// Lexicographic on (dim_mod2, signature, disc, hasse_minus, dyadic_parity).
  friend bool operator<(const WittClass& a, const WittClass& b);
};

/// Throws DegenerateForm (through GramForm), UnsupportedRing outside F_p, Q and Z[1/2].
WittClass witt_class(const GramForm& f);

/// Throws SpecMismatch when rings or epsilons differ.
bool witt_equiv(const GramForm& f, const GramForm& g);

/// Zero-dimensional form over a ring.
GramForm zero_form(const RingSpec& ring, int epsilon = 1);

/// Anisotropic representative of a class: the anisotropic part of a Witt decomposition,
/// diagonalized when possible.
GramForm reduce_form(const GramForm& f);

struct WittGenerator {
  std::vector<Integer> coefficients;  // combination of the input generators
  WittClass cls;
  GramForm representative;
  Integer order = 0;  // 0 for free generators
};

struct WittRingTable {
  RingSpec ring;
  std::vector<GramForm> generators;
  std::vector<WittClass> classes;  // sorted
  std::vector<GramForm> representatives;
  /// Sum table over classes; only for finite Witt rings, where classes is the whole ring.
  std::optional<std::vector<std::vector<std::size_t>>> addition;
  std::vector<std::vector<std::size_t>> multiplication;
  GroupShape group;
  std::vector<WittGenerator> free_generators;
  std::vector<WittGenerator> torsion_generators;
};

/// F_p: the additive closure of the generators (default <1>, <least non-residue>).
/// Z[1/2]: the classes of the generators (default <1>, <2>, <-1>, <-2>); throws NotClosed if a product
/// of two of them is not among them. The additive group generated is identified in both cases.
WittRingTable witt_ring_table(const RingSpec& ring, std::vector<GramForm> generators = {});

}  // namespace wittstab
