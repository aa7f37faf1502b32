#include "wittstab/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "wittstab/errors.hpp"

namespace wittstab {

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> big;
  for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
  return from_integer_rows(big);
}

IntMatrix IntMatrix::from_integer_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? cols_if_empty : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorCode::InvalidInput, "ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) fail(ErrorCode::InvalidInput, "hcat row mismatch");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
  }
  return m;
}

IntMatrix IntMatrix::column(std::size_t j) const { return columns(j, 1); }

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::InvalidInput, "integer matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::InvalidInput, "integer matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- Smith normal form

namespace {

struct SmithWork {
  IntMatrix a, u, u_inv, v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    a.add_row_multiple(dst, src, q);
    u.add_row_multiple(dst, src, q);
    u_inv.add_col_multiple(src, dst, -q);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    a.add_col_multiple(dst, src, q);
    v.add_col_multiple(dst, src, q);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithWork w{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols)};
  auto& a = w.a;
  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second)))) best = {i, j};
    if (!best) break;
    w.swap_rows(t, best->first);
    w.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        w.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        w.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // divisibility: pull a non-multiple into the pivot row
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      w.add_row(t, *bad_row, 1);
    }
    if (a(t, t) < 0) w.negate_row(t);
    ++t;
  }
  return SmithForm{std::move(w.u), std::move(w.u_inv), std::move(w.a), std::move(w.v), t};
}

Integer int_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "determinant of a non-square integer matrix");
  // Fraction-free elimination (Bareiss).
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

IntMatrix column_basis(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  IntMatrix basis(m.rows(), s.rank);
  for (std::size_t j = 0; j < s.rank; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = s.u_inverse(i, j) * s.diag(j);
  return basis;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  return s.v.columns(s.rank, m.cols() - s.rank);
}

std::optional<IntMatrix> solve_in_basis(const IntMatrix& basis, const IntMatrix& v) {
  if (basis.rows() != v.rows()) fail(ErrorCode::InvalidInput, "solve_in_basis row mismatch");
  auto s = smith_normal_form(basis);
  if (s.rank != basis.cols()) fail(ErrorCode::InvalidInput, "solve_in_basis needs a basis of full column rank");
  IntMatrix w = s.u * v;
  IntMatrix z(basis.cols(), v.cols());
  for (std::size_t c = 0; c < v.cols(); ++c) {
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i < s.rank) {
        if (w(i, c) % s.diag(i) != 0) return std::nullopt;
        z(i, c) = w(i, c) / s.diag(i);
      } else if (w(i, c) != 0) {
        return std::nullopt;
      }
    }
  }
  return s.v * z;
}

bool lattice_contains(const IntMatrix& gens, const IntMatrix& vectors) {
  if (vectors.cols() == 0) return true;
  return solve_in_basis(column_basis(gens), vectors).has_value();
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) { return lattice_contains(a, b) && lattice_contains(b, a); }

// ---------------------------------------------------------------- groups

Integer GroupShape::torsion_order() const {
  Integer order = 1;
  for (const auto& t : torsion) order *= t;
  return order;
}

std::string GroupShape::describe() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
  return out;
}

GroupShape quotient_shape(const IntMatrix& outer, const IntMatrix& inner) {
  IntMatrix basis = column_basis(outer);
  GroupShape shape;
  if (inner.cols() == 0) {
    shape.free_rank = basis.cols();
    return shape;
  }
  auto coords = basis.cols() == 0 ? (inner.is_zero() ? std::optional<IntMatrix>(IntMatrix(0, inner.cols())) : std::nullopt)
                                  : solve_in_basis(basis, inner);
  if (!coords) fail(ErrorCode::IllFormed, "quotient_shape: inner lattice is not contained in the outer one");
  auto s = smith_normal_form(*coords);
  shape.free_rank = basis.cols() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.diag(i) > 1) shape.torsion.push_back(s.diag(i));
  return shape;
}

FgAbGroup::FgAbGroup(std::size_t generators, IntMatrix relations) : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_) fail(ErrorCode::IllFormed, "relation matrix must have one row per generator");
  shape_ = quotient_shape(IntMatrix::identity(generators_), relations_);
}

FgAbGroup FgAbGroup::from_shape(std::size_t free_rank, const std::vector<Integer>& torsion) {
  const std::size_t n = free_rank + torsion.size();
  IntMatrix rel(n, torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 1) fail(ErrorCode::InvalidInput, "torsion coefficients must be positive");
    rel(free_rank + i, i) = torsion[i];
  }
  return FgAbGroup(n, std::move(rel));
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
    fail(ErrorCode::IllFormed, "homomorphism matrix has shape " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                                   ", expected " + std::to_string(target_.generators()) + "x" + std::to_string(source_.generators()));
  if (!lattice_contains(target_.relations(), matrix_ * source_.relations()))
    fail(ErrorCode::IllFormed, "homomorphism does not map relations into relations");
}

GroupHom GroupHom::identity(const FgAbGroup& g) { return GroupHom(g, g, IntMatrix::identity(g.generators())); }

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return GroupHom(source, target, IntMatrix(target.generators(), source.generators()));
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target().generators() != g.source().generators() || !(f.target().relations() == g.source().relations()))
    fail(ErrorCode::IllFormed, "compose: maps are not composable");
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

std::vector<Integer> prime_divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<Integer> primes;
  if (n < 2) return primes;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace wittstab
