#pragma once

// Integer matrices, Smith normal form and finitely generated abelian groups given by presentations.

#include <optional>
#include <string>
#include <vector>

#include "wittstab/ring.hpp"

namespace wittstab {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_integer_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix diagonal(const std::vector<Integer>& d);
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix column(std::size_t j) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row dst += q * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q);
  /// col dst += q * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  IntMatrix u;
  IntMatrix u_inverse;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;

  Integer diag(std::size_t i) const { return d(i, i); }
};

SmithForm smith_normal_form(const IntMatrix& m);

Integer int_det(const IntMatrix& m);

/// Z-basis (as columns) of the lattice spanned by the columns of m.
IntMatrix column_basis(const IntMatrix& m);
/// Z-basis (as columns) of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);
/// Integer coordinates y with basis * y = v, or nullopt; basis must have full column rank.
std::optional<IntMatrix> solve_in_basis(const IntMatrix& basis, const IntMatrix& v);
/// Every column of vectors lies in the column span of gens.
bool lattice_contains(const IntMatrix& gens, const IntMatrix& vectors);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Isomorphism type Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ..., every t_i > 1.
struct GroupShape {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  Integer torsion_order() const;
  std::string describe() const;
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

/// Shape of span(outer) / span(inner); span(inner) must lie in span(outer).
GroupShape quotient_shape(const IntMatrix& outer, const IntMatrix& inner);

/// Z^n / column span of the relation matrix (n x m).
class FgAbGroup {
 public:
  FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}
  FgAbGroup(std::size_t generators, IntMatrix relations);

  /// Generators: free_rank free ones first, then one per torsion coefficient. Coefficients must be >= 1.
  static FgAbGroup from_shape(std::size_t free_rank, const std::vector<Integer>& torsion);
  static FgAbGroup trivial() { return FgAbGroup(); }

  std::size_t generators() const noexcept { return generators_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  const GroupShape& shape() const noexcept { return shape_; }

  /// Isomorphism-type equality.
  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) { return a.shape_ == b.shape_; }

 private:
  std::size_t generators_;
  IntMatrix relations_;
  GroupShape shape_;
};

/// Homomorphism given by its matrix on the chosen generators (target.generators x source.generators).
class GroupHom {
 public:
  /// Throws IllFormed unless the matrix has the right shape and maps relations into relations.
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupHom identity(const FgAbGroup& g);
  static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);

  const FgAbGroup& source() const noexcept { return source_; }
  const FgAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// g after f.
GroupHom compose(const GroupHom& g, const GroupHom& f);

/// Distinct prime divisors of |n| in increasing order (trial division).
std::vector<Integer> prime_divisors(const Integer& n);

}  // namespace wittstab
