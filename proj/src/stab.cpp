#include "wittstab/stab.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "wittstab/errors.hpp"
#include "wittstab/json_io.hpp"

#ifndef WITTSTAB_CATALOG_PATH
#define WITTSTAB_CATALOG_PATH "data/catalog.json"
#endif

namespace wittstab {

namespace {

bool same_presentation(const FgAbGroup& a, const FgAbGroup& b) {
  return a.generators() == b.generators() && a.relations() == b.relations();
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

void reduce_rows(IntMatrix& m, const std::vector<Integer>& moduli) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) %= moduli[i];
      if (m(i, j) < 0) m(i, j) += moduli[i];
    }
}

std::size_t rank_mod_p(IntMatrix m, const Integer& p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) %= p;
      if (m(i, j) < 0) m(i, j) += p;
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(rank, piv);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), m(rank, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m(i, c) == 0) continue;
      Integer f = m(i, c) * inv;
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) -= f * m(rank, j);
        m(i, j) %= p;
        if (m(i, j) < 0) m(i, j) += p;
      }
    }
    ++rank;
  }
  return rank;
}

IntMatrix int_power(const IntMatrix& m, std::size_t e) {
  IntMatrix result = IntMatrix::identity(m.rows());
  for (std::size_t i = 0; i < e; ++i) result = result * m;
  return result;
}

/// colim(Z^r, A): pass to the eventual image lattice, where A acts injectively.
void free_colimit(const IntMatrix& a, ColimResult& out) {
  const std::size_t r = a.rows();
  if (r == 0) return;
  IntMatrix basis = column_basis(int_power(a, r));
  const std::size_t k = basis.cols();
  out.free_rank = k;
  if (k == 0) return;
  auto restricted = solve_in_basis(basis, a * basis);
  ensure_identity(restricted.has_value(), "eventual image is not invariant under the period map");
  const Integer det = int_det(*restricted);
  ensure_identity(det != 0, "period map is singular on its eventual image");
  out.inverted_primes = prime_divisors(det);
  const IntMatrix restricted_k = int_power(*restricted, k);
  for (const auto& p : out.inverted_primes) out.residual_ranks[p] = rank_mod_p(restricted_k, p);
}

/// colim(T, C) for finite T = Z^s / diag(moduli): the stable image of C.
void torsion_colimit(IntMatrix c, const std::vector<Integer>& moduli, ColimResult& out) {
  const std::size_t s = moduli.size();
  if (s == 0) return;
  const IntMatrix relations = IntMatrix::diagonal(moduli);
  auto image_order = [&](const IntMatrix& gens) { return quotient_shape(IntMatrix::hcat(gens, relations), relations).torsion_order(); };
  reduce_rows(c, moduli);
  IntMatrix power = IntMatrix::identity(s);
  Integer order = image_order(power);
  for (;;) {
    IntMatrix next = c * power;
    reduce_rows(next, moduli);
    Integer next_order = image_order(next);
    if (next_order == order) break;
    power = std::move(next);
    order = next_order;
  }
  out.torsion = quotient_shape(IntMatrix::hcat(power, relations), relations).torsion;
}

}  // namespace

std::string ColimResult::describe() const {
  std::vector<std::string> parts;
  if (free_rank > 0) {
    std::string base = "Z";
    if (!inverted_primes.empty()) {
      base += "[";
      for (std::size_t i = 0; i < inverted_primes.size(); ++i) base += (i ? ",1/" : "1/") + inverted_primes[i].get_str();
      base += "]";
    }
    if (free_rank > 1) base += "^" + std::to_string(free_rank);
    parts.push_back(base);
  }
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
  return out;
}

// ---------------------------------------------------------------- sequences

GroupSeq::GroupSeq(std::vector<GroupHom> prefix, GroupHom period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (!same_presentation(period_.source(), period_.target())) fail(ErrorCode::IllFormed, "period map must be an endomorphism");
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    const FgAbGroup& next = i + 1 < prefix_.size() ? prefix_[i + 1].source() : period_.source();
    if (!same_presentation(prefix_[i].target(), next))
      fail(ErrorCode::IllFormed, "prefix map " + std::to_string(i) + " does not land in the next group");
  }
}

GroupSeq GroupSeq::shift(std::size_t k) const {
  if (k >= prefix_.size()) return GroupSeq({}, period_);
  return GroupSeq(std::vector<GroupHom>(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()), period_);
}

ColimResult colimit_of_endomorphism(const GroupHom& g) {
  const FgAbGroup& group = g.source();
  const std::size_t n = group.generators();
  // y = U x diagonalizes the relations: the group is Z^n / span(D) in y-coordinates.
  auto s = smith_normal_form(group.relations());
  const IntMatrix gy = s.u * g.matrix() * s.u_inverse;

  std::vector<std::size_t> free_idx, tors_idx;
  std::vector<Integer> moduli;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= s.rank) {
      free_idx.push_back(i);
    } else if (s.diag(i) > 1) {
      tors_idx.push_back(i);
      moduli.push_back(s.diag(i));
    }
  }
  ensure_identity(submatrix(gy, free_idx, tors_idx).is_zero(), "torsion generators mapped to non-torsion elements");

  ColimResult out;
  free_colimit(submatrix(gy, free_idx, free_idx), out);
  torsion_colimit(submatrix(gy, tors_idx, tors_idx), moduli, out);
  return out;
}

ColimResult colimit(const GroupSeq& seq) {
  // Direct limits only see the tail; the prefix is cofinally irrelevant.
  return colimit_of_endomorphism(seq.period());
}

bool shift_invariance_check(const GroupSeq& seq, std::size_t k) { return colimit(seq) == colimit(seq.shift(k)); }

ColimResult localize_at_two(const FgAbGroup& g) {
  ColimResult out;
  out.free_rank = g.shape().free_rank;
  if (out.free_rank > 0) {
    out.inverted_primes = {Integer(2)};
    out.residual_ranks[Integer(2)] = 0;
  }
  for (const auto& t : g.shape().torsion) {
    Integer odd = t;
    while (odd % 2 == 0) odd /= 2;
    if (odd > 1) out.torsion.push_back(odd);
  }
  return out;
}

// ---------------------------------------------------------------- exactness

IntMatrix subgroup_lattice(const FgAbGroup& g, const IntMatrix& gens) { return IntMatrix::hcat(gens, g.relations()); }

IntMatrix image_lattice(const GroupHom& f) { return subgroup_lattice(f.target(), f.matrix()); }

IntMatrix kernel_lattice(const GroupHom& f) {
  // x is in the kernel iff F x + R_target y = 0 for some y.
  const std::size_t n = f.source().generators();
  IntMatrix k = kernel_basis(IntMatrix::hcat(f.matrix(), f.target().relations()));
  return subgroup_lattice(f.source(), k.rows_range(0, n));
}

std::vector<std::size_t> exactness_check(const std::vector<GroupHom>& maps) {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!same_presentation(maps[i].target(), maps[i + 1].source()))
      fail(ErrorCode::IllFormed, "chain maps " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not composable");
  std::vector<std::size_t> failures;
  for (std::size_t node = 1; node < maps.size(); ++node)
    if (!same_lattice(image_lattice(maps[node - 1]), kernel_lattice(maps[node]))) failures.push_back(node);
  return failures;
}

// ---------------------------------------------------------------- catalog

std::string CatalogKey::describe() const {
  return theory + "(" + std::to_string(degree) + ", " + ring + ", eps=" + std::to_string(epsilon) + ")";
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open catalog " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("catalog is not valid JSON: ") + e.what());
  }
  Catalog cat;
  for (const auto& item : doc.at("entries")) {
    CatalogEntry entry;
    const auto& key = item.at("key");
    entry.key = CatalogKey{key.at("theory").get<std::string>(), key.at("degree").get<long>(), key.at("ring").get<std::string>(),
                           key.at("epsilon").get<int>()};
    entry.group = group_from_json(item.at("group"));
    entry.citation = item.value("citation", "");
    if (entry.citation.empty()) fail(ErrorCode::InvalidInput, "catalog entry " + entry.key.describe() + " lacks a citation");
    if (item.contains("period_map")) {
      entry.period_map = int_matrix_from_json(item.at("period_map"), entry.group.generators(), entry.group.generators());
      entry.period_citation = item.value("period_citation", "");
      if (entry.period_citation.empty()) fail(ErrorCode::InvalidInput, "catalog period map for " + entry.key.describe() + " lacks a citation");
      GroupHom(entry.group, entry.group, *entry.period_map);  // validates
    }
    cat.entries_.push_back(std::move(entry));
  }
  return cat;
}

const Catalog& Catalog::shipped() {
  static const Catalog catalog = [] {
    const char* env = std::getenv("WITTSTAB_CATALOG");
    return load(env && *env ? env : WITTSTAB_CATALOG_PATH);
  }();
  return catalog;
}

const CatalogEntry& Catalog::lookup(const CatalogKey& key) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) { return e.key == key; });
  if (it == entries_.end()) fail(ErrorCode::NotCatalogued, "no catalogued group for " + key.describe());
  return *it;
}

}  // namespace wittstab
