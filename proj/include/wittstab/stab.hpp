#pragma once

// Stabilization as a direct limit: colimits of eventually periodic sequences of finitely generated
// abelian groups, shift invariance (periodicity), exactness of chains, and the shipped group catalog.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittstab/abelian.hpp"

namespace wittstab {

/// colim = (Z[1/S])^free_rank + torsion, S the product of inverted_primes.
///
/// residual_ranks[p] is dim_{F_p}(colim / p colim) for each inverted prime p; it is 0 when p is
/// inverted on the whole free part and positive when only part of it becomes p-divisible
/// (e.g. colim(Z^2, diag(2, 1)) = Z[1/2] + Z has residual rank 1 at 2).
struct ColimResult {
  std::size_t free_rank = 0;
  std::vector<Integer> inverted_primes;
  std::map<Integer, std::size_t> residual_ranks;
  std::vector<Integer> torsion;

  std::string describe() const;
  friend bool operator==(const ColimResult&, const ColimResult&) = default;
};

/// G_0 -> G_1 -> ... -> G_m -> G -> G -> ... where the tail repeats the endomorphism `period`.
class GroupSeq {
 public:
  /// Throws IllFormed when consecutive maps do not compose or the period is not an endomorphism.
  GroupSeq(std::vector<GroupHom> prefix, GroupHom period);

  static GroupSeq periodic(GroupHom period) { return GroupSeq({}, std::move(period)); }

  const std::vector<GroupHom>& prefix() const noexcept { return prefix_; }
  const GroupHom& period() const noexcept { return period_; }

  /// Drop the first k stages.
  GroupSeq shift(std::size_t k) const;

 private:
  std::vector<GroupHom> prefix_;
  GroupHom period_;
};

ColimResult colimit(const GroupSeq& seq);
ColimResult colimit_of_endomorphism(const GroupHom& g);

/// colimit(seq) == colimit(seq.shift(k)).
bool shift_invariance_check(const GroupSeq& seq, std::size_t k);

/// G tensor Z[1/2], computed directly from the invariant factors.
ColimResult localize_at_two(const FgAbGroup& g);

/// maps[i] : node i -> node i+1. Returns the interior node indices where ker != im; empty means exact.
std::vector<std::size_t> exactness_check(const std::vector<GroupHom>& maps);

/// Subgroup of g generated by the columns of gens (coordinates on g's generators), as a lattice
/// containing g's relations.
IntMatrix subgroup_lattice(const FgAbGroup& g, const IntMatrix& gens);
IntMatrix image_lattice(const GroupHom& f);
IntMatrix kernel_lattice(const GroupHom& f);

struct CatalogKey {
  std::string theory;  // "L", "W" or "Wtop"
  long degree = 0;
  std::string ring;    // "Z[1/2]", "R", ...
  int epsilon = 1;

  friend bool operator==(const CatalogKey&, const CatalogKey&) = default;
  std::string describe() const;
};

struct CatalogEntry {
  CatalogKey key;
  FgAbGroup group;
  std::string citation;
  /// Optional endomorphism recorded alongside the group (e.g. the action of a Bott power).
  std::optional<IntMatrix> period_map;
  std::string period_citation;
};

/// Read-only table of group values, loaded from a data file. Entries without a citation are rejected.
class Catalog {
 public:
  static Catalog load(const std::string& path);
  /// The catalog shipped with the library (path fixed at build time, WITTSTAB_CATALOG overrides).
  static const Catalog& shipped();

  /// Throws NotCatalogued.
  const CatalogEntry& lookup(const CatalogKey& key) const;
  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace wittstab
