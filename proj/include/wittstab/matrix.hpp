#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wittstab/ring.hpp"

namespace wittstab {

/// Dense matrix over one of the involutive rings. Row-major, value semantics.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const RingSpec& ring, std::size_t n);
  static Matrix from_rows(const RingSpec& ring, const std::vector<std::vector<RingElem>>& rows);
  /// Convenience for tests and fixtures: integer or fractional literals embedded into ring.
  static Matrix from_rationals(const RingSpec& ring, const std::vector<std::vector<Rational>>& rows);
  static Matrix diagonal(const RingSpec& ring, std::span<const RingElem> entries);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  RingElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const RingElem& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  RingSpec ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElem> data_;
};

Matrix conj_transpose(const Matrix& m);
RingElem trace(const Matrix& m);
Matrix matrix_power(const Matrix& m, unsigned e);

/// Coefficients c_0 = 1, c_1, ..., c_n of det(lambda*I - M), highest degree first.
/// Division free (Berkowitz), so valid over every supported ring.
std::vector<RingElem> charpoly(const Matrix& m);

RingElem det(const Matrix& m);

struct DetInverse {
  RingElem det;
  std::optional<Matrix> inverse;  // present iff det is a unit
};

DetInverse det_and_inverse(const Matrix& m);

/// (1 + g)^{-1/2} as the binomial series sum_j C(-1/2, j) g^j. The entries of g must lie in the
/// nilpotent ideal (x) of a truncated ring, or g must be zero. Throws NotNilpotent otherwise.
Matrix inv_sqrt_one_plus(const Matrix& g);

/// C(-1/2, j) = (-1)^j C(2j, j) / 4^j.
Rational binomial_minus_half(unsigned j);

Matrix block_diagonal(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Entrywise map into target ring.
Matrix map_entries(const Matrix& m, const RingSpec& target, const std::function<RingElem(const RingElem&)>& f);

/// Reinterpret a Dyadic matrix over Q or vice versa (same payload). Throws when entries leave Z[1/2].
Matrix change_rational_ring(const Matrix& m, const RingSpec& target);

std::string to_string(const Matrix& m);

}  // namespace wittstab
