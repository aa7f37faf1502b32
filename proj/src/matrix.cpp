#include "wittstab/matrix.hpp"

#include <sstream>

#include "wittstab/errors.hpp"

namespace wittstab {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) fail(ErrorCode::SpecMismatch, "matrix ring mismatch: " + a.ring().tag() + " vs " + b.ring().tag());
}

void require_shape(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidInput, std::string("matrix shape mismatch in ") + what);
}

bool entries_in_nil_ideal(const Matrix& g) {
  if (g.ring().kind() != RingKind::TruncNil) return g.is_zero();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!g(i, j).coeffs()[0].is_zero()) return false;
  return true;
}

}  // namespace

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, RingElem::zero(ring_)) {}

Matrix Matrix::identity(const RingSpec& ring, std::size_t n) {
  Matrix m(ring, n, n);
  const auto one = RingElem::one(ring);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

Matrix Matrix::from_rows(const RingSpec& ring, const std::vector<std::vector<RingElem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_shape(rows[i].size() == c, "from_rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rows[i][j].spec() == ring)) fail(ErrorCode::SpecMismatch, "entry ring differs from matrix ring");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_rationals(const RingSpec& ring, const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_shape(rows[i].size() == c, "from_rationals");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = RingElem::from_rational(ring, rows[i][j]);
  }
  return m;
}

Matrix Matrix::diagonal(const RingSpec& ring, std::span<const RingElem> entries) {
  Matrix m(ring, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  require_shape(row0 + nrows <= rows_ && col0 + ncols <= cols_, "block");
  Matrix b(ring_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "+");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix c = a;
  for (auto& e : c.data_) e = -e;
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  require_shape(a.cols_ == b.rows_, "*");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator*(const RingElem& s, const Matrix& a) {
  Matrix c = a;
  for (auto& e : c.data_) e = s * e;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix conj_transpose(const Matrix& m) {
  Matrix t(m.ring(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = involute(m(i, j));
  return t;
}

RingElem trace(const Matrix& m) {
  require_shape(m.is_square(), "trace");
  RingElem s = RingElem::zero(m.ring());
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

Matrix matrix_power(const Matrix& m, unsigned e) {
  require_shape(m.is_square(), "power");
  Matrix result = Matrix::identity(m.ring(), m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::vector<RingElem> charpoly(const Matrix& m) {
  require_shape(m.is_square(), "charpoly");
  const std::size_t n = m.rows();
  const auto& ring = m.ring();
  const auto zero = RingElem::zero(ring);
  const auto one = RingElem::one(ring);
  if (n == 0) return {one};

  // Work upward from the trailing 1x1 block; q holds the charpoly of the trailing block.
  std::vector<RingElem> q{one, -m(n - 1, n - 1)};
  for (std::size_t i = n - 1; i-- > 0;) {
    const std::size_t size = n - i;  // current block is m[i.., i..]
    const std::size_t inner = size - 1;
    // column C = m[i+1.., i], row R = m[i, i+1..], A1 = m[i+1.., i+1..]
    std::vector<RingElem> t(size + 1, zero);
    t[0] = one;
    t[1] = -m(i, i);
    std::vector<RingElem> v(inner);  // A1^j C
    for (std::size_t r = 0; r < inner; ++r) v[r] = m(i + 1 + r, i);
    for (std::size_t j = 0; j + 2 <= size; ++j) {
      RingElem dot = zero;
      for (std::size_t r = 0; r < inner; ++r) dot += m(i, i + 1 + r) * v[r];
      t[j + 2] = -dot;
      std::vector<RingElem> next(inner, zero);
      for (std::size_t r = 0; r < inner; ++r)
        for (std::size_t c = 0; c < inner; ++c) next[r] += m(i + 1 + r, i + 1 + c) * v[c];
      v = std::move(next);
    }
    std::vector<RingElem> out(size + 1, zero);
    for (std::size_t k = 0; k <= size; ++k)
      for (std::size_t j = 0; j <= k && j < q.size(); ++j) out[k] += t[k - j] * q[j];
    q = std::move(out);
  }
  return q;
}

RingElem det(const Matrix& m) {
  auto c = charpoly(m);
  const auto& cn = c.back();
  return m.rows() % 2 == 0 ? cn : -cn;
}

DetInverse det_and_inverse(const Matrix& m) {
  auto c = charpoly(m);
  const std::size_t n = m.rows();
  RingElem d = n % 2 == 0 ? c.back() : -c.back();
  if (!d.is_unit()) return {d, std::nullopt};
  if (n == 0) return {d, Matrix(m.ring(), 0, 0)};
  // Cayley-Hamilton: adj(M) = (-1)^{n+1} (M^{n-1} + c_1 M^{n-2} + ... + c_{n-1} I)
  Matrix acc = Matrix::identity(m.ring(), n);
  for (std::size_t k = 1; k < n; ++k) acc = acc * m + c[k] * Matrix::identity(m.ring(), n);
  if (n % 2 == 0) acc = -acc;
  Matrix inv = inverse(d) * acc;
  ensure_identity(m * inv == Matrix::identity(m.ring(), n), "adjugate inverse failed M * M^-1 = I");
  return {d, std::move(inv)};
}

Rational binomial_minus_half(unsigned j) {
  // C(-1/2, j) = prod_{i=0}^{j-1} (-1/2 - i) / (i + 1)
  Rational c = 1;
  for (unsigned i = 0; i < j; ++i) c *= Rational(-1 - 2 * static_cast<long>(i), 2 * static_cast<long>(i + 1));
  c.canonicalize();
  return c;
}

Matrix inv_sqrt_one_plus(const Matrix& g) {
  require_shape(g.is_square(), "inv_sqrt_one_plus");
  if (!entries_in_nil_ideal(g))
    fail(ErrorCode::NotNilpotent, "inv_sqrt_one_plus: entries outside the nilpotent ideal");
  const auto& ring = g.ring();
  Matrix result = Matrix::identity(ring, g.rows());
  Matrix term = Matrix::identity(ring, g.rows());
  // g^j has entries in (x^j); the series stops at the nilpotency order.
  for (unsigned j = 1;; ++j) {
    term = term * g;
    if (term.is_zero()) break;
    result = result + RingElem::from_rational(ring, binomial_minus_half(j)) * term;
  }
  return result;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  Matrix c(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

Matrix map_entries(const Matrix& m, const RingSpec& target, const std::function<RingElem(const RingElem&)>& f) {
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = f(m(i, j));
      if (!(out(i, j).spec() == target)) fail(ErrorCode::SpecMismatch, "map_entries produced an entry outside the target ring");
    }
  return out;
}

Matrix change_rational_ring(const Matrix& m, const RingSpec& target) {
  if (!m.ring().is_rational_like() || !target.is_rational_like())
    fail(ErrorCode::SpecMismatch, "change_rational_ring needs q or dyadic on both sides");
  return map_entries(m, target, [&](const RingElem& e) { return RingElem::from_rational(target, e.rational()); });
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace wittstab
