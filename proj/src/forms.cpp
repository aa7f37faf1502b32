#include "wittstab/forms.hpp"

#include <algorithm>

#include "wittstab/abelian.hpp"
#include "wittstab/errors.hpp"
#include "wittstab/hilbert.hpp"
#include "wittstab/number_theory.hpp"

namespace wittstab {

Diagonalization diagonalize_impl(const GramForm& f, bool normalize);

namespace {

bool search_ring(const RingSpec& r) {
  return r.kind() == RingKind::PrimeField || r.kind() == RingKind::Rationals || r.kind() == RingKind::Dyadic;
}

void require_search_ring(const RingSpec& r, const char* op) {
  if (!search_ring(r)) fail(ErrorCode::UnsupportedRing, std::string(op) + " needs F_p, Q or Z[1/2], got " + r.tag());
}

RingElem elem(const RingSpec& r, long n) { return RingElem::from_integer(r, n); }

Matrix unit_vector(const RingSpec& r, std::size_t n, std::size_t i) {
  Matrix v(r, n, 1);
  v(i, 0) = RingElem::one(r);
  return v;
}

Matrix column(const Matrix& m, std::size_t j) { return m.block(0, j, m.rows(), 1); }

Matrix hcat(const RingSpec& r, std::size_t rows, const std::vector<Matrix>& cols) {
  std::size_t total = 0;
  for (const auto& c : cols) total += c.cols();
  Matrix out(r, rows, total);
  std::size_t at = 0;
  for (const auto& c : cols) {
    for (std::size_t j = 0; j < c.cols(); ++j, ++at)
      for (std::size_t i = 0; i < rows; ++i) out(i, at) = c(i, j);
  }
  return out;
}

RingElem form_value(const Matrix& g, const Matrix& x, const Matrix& y) { return (conj_transpose(x) * g * y)(0, 0); }

// Rank over a field, by elimination on a copy.
std::size_t field_rank(Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(rank, k), m(piv, k));
    const RingElem inv = inverse(m(rank, c));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const RingElem factor = m(i, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

// Dyadic column vectors scaled by a common power of two to integers.
IntMatrix integral_columns(const Matrix& m) {
  long shift = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) shift = std::max(shift, -two_adic_valuation(m(i, j).rational()));
  const Rational scale = Rational(Integer(1) << shift);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational q = m(i, j).rational() * scale;
      ensure_identity(q.get_den() == 1, "dyadic scaling produced a fraction");
      out(i, j) = q.get_num();
    }
  return out;
}

Matrix from_int_columns(const RingSpec& r, const IntMatrix& m) {
  Matrix out(r, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RingElem::from_integer(r, m(i, j));
  return out;
}

// Basis (as columns) of the module spanned by the columns of s, which has the given rank.
// Columns of s are preferred in order; over Z[1/2] a lattice basis is used when they do not suffice.
Matrix primitive_integral(const RingSpec& r, const Matrix& v);

Matrix span_basis(const Matrix& s, std::size_t rank) {
  const RingSpec& r = s.ring();
  std::vector<Matrix> chosen;
  for (std::size_t j = 0; j < s.cols() && chosen.size() < rank; ++j) {
    auto trial = chosen;
    trial.push_back(column(s, j));
    Matrix cand = hcat(r, s.rows(), trial);
    Matrix over_field = r.kind() == RingKind::Dyadic ? change_rational_ring(cand, RingSpec::rationals()) : cand;
    if (field_rank(over_field) == trial.size()) chosen = std::move(trial);
  }
  ensure_identity(chosen.size() == rank, "complement has unexpected rank");
  if (r.kind() == RingKind::Rationals)
    for (auto& c : chosen) c = primitive_integral(r, c);  // keeps entries small
  Matrix basis = hcat(r, s.rows(), chosen);
  if (r.kind() != RingKind::Dyadic) return basis;
  // the chosen columns span a Z-sublattice of index a power of two exactly when they span over Z[1/2]
  const IntMatrix joint = integral_columns(hcat(r, s.rows(), {basis, s}));
  const GroupShape gap = quotient_shape(joint, joint.columns(0, rank));
  if (gap.free_rank == 0 && is_power_of_two(gap.torsion_order())) return basis;
  IntMatrix lattice = column_basis(integral_columns(s));
  ensure_identity(lattice.cols() == rank, "complement lattice has unexpected rank");
  return from_int_columns(r, lattice);
}

// Basis of the orthogonal complement of the columns of v (whose Gram block is invertible).
Matrix orthogonal_complement(const Matrix& g, const Matrix& v) {
  const RingSpec& r = g.ring();
  const std::size_t n = g.rows();
  const Matrix vstar = conj_transpose(v);
  const auto block = det_and_inverse(vstar * g * v);
  ensure_identity(block.inverse.has_value(), "split block is not unimodular");
  // pi(x) = x - V (V* G V)^{-1} V* G x kills B(v_i, .)
  const Matrix pi = Matrix::identity(r, n) - v * (*block.inverse) * vstar * g;
  Matrix basis = span_basis(pi, n - v.cols());
  ensure_identity((vstar * g * basis).is_zero(), "complement is not orthogonal");
  return basis;
}

// Diagonalization over Q of a symmetric Gram matrix over Q or Z[1/2].
Diagonalization rational_diagonalization(const Matrix& gram) {
  Matrix g = gram.ring().kind() == RingKind::Dyadic ? change_rational_ring(gram, RingSpec::rationals()) : gram;
  return diagonalize_impl(GramForm(g, 1), false);
}

std::vector<Rational> rational_diagonal(const Matrix& gram) {
  std::vector<Rational> out;
  for (const auto& e : rational_diagonalization(gram).form.diagonal_entries()) out.push_back(e.rational());
  return out;
}

// Primitive integer vector on the line through a rational column, embedded in r.
Matrix primitive_integral(const RingSpec& r, const Matrix& v) {
  Integer den = 1, content = 0;
  for (std::size_t i = 0; i < v.rows(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v(i, 0).rational().get_den().get_mpz_t());
  std::vector<Integer> xs;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const Rational scaled = v(i, 0).rational() * den;
    xs.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), xs.back().get_mpz_t());
  }
  Matrix out(r, v.rows(), 1);
  for (std::size_t i = 0; i < v.rows(); ++i) out(i, 0) = RingElem::from_integer(r, Integer(xs[i] / content));
  return out;
}

bool definite(const std::vector<Rational>& diag) {
  return std::all_of(diag.begin(), diag.end(), [](const Rational& a) { return a > 0; }) ||
         std::all_of(diag.begin(), diag.end(), [](const Rational& a) { return a < 0; });
}

Rational exact_sqrt(const Rational& q) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  Rational out(n, d);
  ensure_identity(out * out == q, "square root is not exact");
  return out;
}

// Scalar s with a * s^2 the chosen square-class representative.
RingElem normalizing_scale(const RingElem& a) {
  const RingSpec& r = a.spec();
  switch (r.kind()) {
    case RingKind::Rationals: {
      const Integer t = squarefree_part(a.rational());
      return RingElem::from_rational(r, exact_sqrt(Rational(t) / a.rational()));
    }
    case RingKind::Dyadic: {
      long k = two_adic_valuation(a.rational());
      long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
      Rational s = half >= 0 ? Rational(1, Integer(1) << half) : Rational(Integer(1) << (-half));
      return RingElem::from_rational(r, s);
    }
    case RingKind::PrimeField: {
      const long p = r.prime();
      const long v = a.residue();
      const long target = legendre(v, p) == 1 ? 1 : smallest_nonresidue(p);
      const RingElem ratio = elem(r, target) * inverse(a);
      return RingElem::from_integer(r, sqrt_mod(ratio.residue(), p));
    }
    default: fail(ErrorCode::UnsupportedRing, "no normalization over " + r.tag());
  }
}

// A vector of unit length in the current block, or nullopt.
std::optional<Matrix> unit_pivot(const Matrix& g) {
  const RingSpec& r = g.ring();
  const std::size_t m = g.rows();
  for (std::size_t i = 0; i < m; ++i)
    if (g(i, i).is_unit()) return unit_vector(r, m, i);
  if (r.is_field()) {
    // all diagonal entries vanish: e_i + (1/(2 a_ij)) e_j has length 1
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (!g(i, j).is_zero()) {
          Matrix v = unit_vector(r, m, i);
          v(j, 0) = inverse(elem(r, 2) * g(i, j));
          return v;
        }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (long s : {1L, -1L}) {
        Matrix v = unit_vector(r, m, i);
        v(j, 0) = elem(r, s);
        if (form_value(g, v, v).is_unit()) return v;
      }
  // pairs of coordinates by increasing height
  for (long h = 1; h <= 32; ++h)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (long a = -h; a <= h; ++a)
          for (long b : {-h, h}) {
            for (int swap = 0; swap < 2; ++swap) {
              const long x = swap ? b : a, y = swap ? a : b;
              const RingElem q = elem(r, x * x) * g(i, i) + elem(r, 2 * x * y) * g(i, j) + elem(r, y * y) * g(j, j);
              if (!q.is_unit()) continue;
              Matrix v(r, m, 1);
              v(i, 0) = elem(r, x);
              v(j, 0) = elem(r, y);
              return v;
            }
          }
  if (m > 6) return std::nullopt;
  // all coordinates in [-2, 2]
  std::vector<long> x(m, -2);
  for (;;) {
    std::size_t k = 0;
    while (k < m && x[k] == 2) x[k++] = -2;
    if (k == m) break;
    ++x[k];
    Matrix v(r, m, 1);
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      v(i, 0) = elem(r, x[i]);
      nonzero = nonzero || x[i] != 0;
    }
    if (nonzero && form_value(g, v, v).is_unit()) return v;
  }
  return std::nullopt;
}

// w with B(v, w) = 1, for v primitive in a unimodular form.
Matrix dual_partner(const Matrix& g, const Matrix& v) {
  const RingSpec& r = g.ring();
  const std::size_t m = g.rows();
  const Matrix row = conj_transpose(v) * g;
  if (r.is_field()) {
    for (std::size_t j = 0; j < m; ++j)
      if (!row(0, j).is_zero()) {
        Matrix w = unit_vector(r, m, j);
        w(j, 0) = inverse(row(0, j));
        return w;
      }
    ensure_identity(false, "isotropic vector pairs to zero with everything");
  }
  // Z[1/2]: extended gcd on the integral row
  const IntMatrix ints = integral_columns(row.transpose());
  Integer gcd = 0;
  std::vector<Integer> coeff(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    Integer gnew, s, t;
    mpz_gcdext(gnew.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), gcd.get_mpz_t(), ints(j, 0).get_mpz_t());
    for (std::size_t i = 0; i < j; ++i) coeff[i] *= s;
    coeff[j] = t;
    gcd = gnew;
  }
  Matrix w(r, m, 1);
  for (std::size_t j = 0; j < m; ++j) w(j, 0) = RingElem::from_integer(r, coeff[j]);
  const RingElem value = form_value(g, v, w);
  ensure_identity(value.is_unit(), "isotropic vector is not primitive in the dual");
  return inverse(value) * w;
}

std::vector<long> coordinate_order(long h) {
  std::vector<long> out{0};
  for (long k = 1; k <= h; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

template <class T>
struct IntSearch {
  std::vector<std::vector<T>> g;
  std::size_t n;
  long height;
  std::vector<long> order;
  std::vector<long> x;

  bool run(std::size_t k, const T& q, bool leading_seen, bool top_seen) {
    if (k == n) return leading_seen && top_seen && q == 0;
    for (long value : order) {
      if (!leading_seen && value < 0) continue;
      if (value > height || value < -height) continue;
      T cross = 0;
      for (std::size_t i = 0; i < k; ++i) cross += g[i][k] * T(x[i]);
      x[k] = value;
      const T next = q + g[k][k] * T(value) * T(value) + T(2 * value) * cross;
      if (run(k + 1, next, leading_seen || value != 0, top_seen || value == height || value == -height)) return true;
    }
    x[k] = 0;
    return false;
  }

  std::optional<std::vector<long>> search(long bound) {
    for (long h = 1; h <= bound; ++h) {
      height = h;
      if (run(0, T(0), false, false)) return x;
    }
    return std::nullopt;
  }
};

struct ModSearch {
  std::vector<std::vector<long>> g;
  std::size_t n;
  long p;
  std::vector<long> x;

  bool run(std::size_t k, long q, bool leading_seen) {
    if (k == n) return leading_seen && q == 0;
    const long top = leading_seen ? p - 1 : 1;
    for (long value = 0; value <= top; ++value) {
      __int128 cross = 0;
      for (std::size_t i = 0; i < k; ++i) cross += static_cast<__int128>(g[i][k]) * x[i];
      cross %= p;
      x[k] = value;
      const __int128 next = (static_cast<__int128>(q) + static_cast<__int128>(g[k][k]) * value % p * value + 2 * value * cross) % p;
      if (run(k + 1, static_cast<long>(next), leading_seen || value != 0)) return true;
    }
    x[k] = 0;
    return false;
  }
};

}  // namespace

GramForm::GramForm(Matrix gram, int epsilon) : gram_(std::move(gram)), epsilon_(epsilon) {
  if (!gram_.is_square()) fail(ErrorCode::InvalidInput, "Gram matrix must be square");
  if (epsilon_ != 1 && epsilon_ != -1) fail(ErrorCode::InvalidInput, "epsilon must be +1 or -1");
  if (!(conj_transpose(gram_) == elem(gram_.ring(), epsilon_) * gram_))
    fail(ErrorCode::InvalidInput, "Gram matrix is not " + std::string(epsilon_ == 1 ? "symmetric" : "skew-symmetric"));
  if (!det(gram_).is_unit()) fail(ErrorCode::DegenerateForm, "determinant is not a unit");
}

GramForm GramForm::diagonal(const RingSpec& ring, const std::vector<Rational>& entries) {
  std::vector<RingElem> d;
  for (const auto& q : entries) d.push_back(RingElem::from_rational(ring, q));
  return GramForm(Matrix::diagonal(ring, d), 1);
}

RingElem GramForm::pair(const Matrix& x, const Matrix& y) const { return form_value(gram_, x, y); }

GramForm GramForm::congruent(const Matrix& p) const { return GramForm(conj_transpose(p) * gram_ * p, epsilon_); }

bool GramForm::is_diagonal() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (i != j && !gram_(i, j).is_zero()) return false;
  return true;
}

std::vector<RingElem> GramForm::diagonal_entries() const {
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(gram_(i, i));
  return out;
}

Diagonalization diagonalize(const GramForm& f) { return diagonalize_impl(f, true); }

Diagonalization diagonalize_impl(const GramForm& f, bool normalize) {
  require_search_ring(f.ring(), "diagonalize");
  if (f.epsilon() != 1) fail(ErrorCode::InvalidInput, "diagonalize needs a symmetric form");
  const RingSpec& r = f.ring();
  const std::size_t n = f.dim();
  Matrix basis = Matrix::identity(r, n);
  Matrix g = f.gram();
  std::vector<Matrix> columns;
  std::vector<RingElem> entries;
  while (g.rows() > 0) {
    auto v = unit_pivot(g);
    if (!v) fail(ErrorCode::NoUnitPivot, "no vector of unit length found in a block of size " + std::to_string(g.rows()));
    RingElem a = form_value(g, *v, *v);
    const RingElem s = normalize ? normalizing_scale(a) : RingElem::one(r);
    columns.push_back(s * (basis * *v));
    entries.push_back(a * s * s);
    const Matrix c = orthogonal_complement(g, *v);
    basis = basis * c;
    g = conj_transpose(c) * g * c;
  }
  Matrix p = hcat(r, n, columns);
  Matrix d = Matrix::diagonal(r, entries);
  ensure_identity(conj_transpose(p) * f.gram() * p == d, "diagonalization congruence");
  return {p, GramForm(d, 1)};
}

Matrix symplectic_basis(const GramForm& f) {
  if (!f.ring().is_field()) fail(ErrorCode::UnsupportedRing, "symplectic_basis needs a field, got " + f.ring().tag());
  if (f.epsilon() != -1) fail(ErrorCode::InvalidInput, "symplectic_basis needs a skew form");
  if (f.dim() % 2 == 1) fail(ErrorCode::OddRank, "skew form of odd rank");
  const RingSpec& r = f.ring();
  const std::size_t n = f.dim();
  Matrix basis = Matrix::identity(r, n);
  Matrix g = f.gram();
  std::vector<Matrix> columns;
  while (g.rows() > 0) {
    const std::size_t m = g.rows();
    const Matrix e = unit_vector(r, m, 0);
    const Matrix w = dual_partner(g, e);  // B(e, w) = 1
    columns.push_back(basis * e);
    columns.push_back(basis * w);
    const Matrix c = orthogonal_complement(g, hcat(r, m, {e, w}));
    basis = basis * c;
    g = conj_transpose(c) * g * c;
  }
  Matrix p = hcat(r, n, columns);
  Matrix standard(r, n, n);
  for (std::size_t i = 0; i < n; i += 2) {
    standard(i, i + 1) = RingElem::one(r);
    standard(i + 1, i) = elem(r, -1);
  }
  ensure_identity(conj_transpose(p) * f.gram() * p == standard, "symplectic congruence");
  return p;
}

std::optional<Matrix> isotropy_oracle(const GramForm& f, long height_bound) {
  const RingSpec& r = f.ring();
  require_search_ring(r, "isotropy_oracle");
  const std::size_t n = f.dim();
  if (n == 0) return std::nullopt;
  if (r.kind() == RingKind::PrimeField) {
    ModSearch s{std::vector<std::vector<long>>(n, std::vector<long>(n)), n, r.prime(), std::vector<long>(n, 0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.g[i][j] = f.gram()(i, j).residue();
    if (!s.run(0, 0, false)) return std::nullopt;
    Matrix v(r, n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = elem(r, s.x[i]);
    return v;
  }
  if (f.epsilon() == 1 && definite(rational_diagonal(f.gram()))) return std::nullopt;
  Integer common = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), f.gram()(i, j).rational().get_den().get_mpz_t());
  std::vector<std::vector<Integer>> ints(n, std::vector<Integer>(n));
  bool small = height_bound <= (1L << 20);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = f.gram()(i, j).rational() * common;
      ints[i][j] = scaled.get_num();
      small = small && abs(ints[i][j]) <= (Integer(1) << 40);
    }
  std::optional<std::vector<long>> found;
  if (small) {
    IntSearch<__int128> s{std::vector<std::vector<__int128>>(n, std::vector<__int128>(n)), n, 0, coordinate_order(height_bound), std::vector<long>(n, 0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.g[i][j] = ints[i][j].get_si();
    found = s.search(height_bound);
  } else {
    IntSearch<Integer> s{ints, n, 0, coordinate_order(height_bound), std::vector<long>(n, 0)};
    found = s.search(height_bound);
  }
  if (found) {
    Matrix v(r, n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = elem(r, (*found)[i]);
    return v;
  }
  return std::nullopt;
}

WittDecomposition witt_decompose(const GramForm& f, const DecomposeOptions& options) {
  const RingSpec& r = f.ring();
  require_search_ring(r, "witt_decompose");
  const std::size_t n = f.dim();
  const int eps = f.epsilon();
  Matrix basis = Matrix::identity(r, n);
  Matrix g = f.gram();
  std::vector<Matrix> pairs;
  std::size_t rank = 0;
  bool certified = false;
  for (;;) {
    const std::size_t m = g.rows();
    if (m == 0 || (m == 1 && eps == 1)) {
      certified = true;
      break;
    }
    std::optional<Matrix> v;
    if (eps == 1 && r.kind() != RingKind::PrimeField) {
      const auto dq = rational_diagonalization(g);
      std::vector<Rational> diag;
      for (const auto& e : dq.form.diagonal_entries()) diag.push_back(e.rational());
      if (definite(diag) || (m == 2 && !is_rational_square(-diag[0] * diag[1]))) {
        certified = true;
        break;
      }
      if (options.local_global && !rationally_isotropic(diag)) {
        certified = true;
        break;
      }
      std::optional<Matrix> x;
      if (options.local_global) {
        // a short vector keeps the complement small; the exact solver is the fallback
        if (auto found = isotropy_oracle(GramForm(g, 1), std::min<long>(options.height_bound, 3))) {
          v = found;
        } else if (auto sol = rational_isotropic_vector(diag)) {
          x = Matrix(RingSpec::rationals(), m, 1);
          for (std::size_t i = 0; i < m; ++i) (*x)(i, 0) = RingElem::from_rational(RingSpec::rationals(), (*sol)[i]);
        }
      } else {
        x = isotropy_oracle(dq.form, options.height_bound);
      }
      if (x) v = primitive_integral(r, dq.basis_change * *x);
    } else {
      v = isotropy_oracle(GramForm(g, eps), options.height_bound);
    }
    if (!v) {
      certified = r.kind() == RingKind::PrimeField;
      break;
    }
    const Matrix w = dual_partner(g, *v);
    const RingElem half_qw = form_value(g, w, w) * inverse(elem(r, 2));
    const Matrix partner = w - half_qw * *v;  // isotropic, B(v, partner) = 1
    pairs.push_back(basis * *v);
    pairs.push_back(basis * partner);
    ++rank;
    const Matrix c = orthogonal_complement(g, hcat(r, m, {*v, partner}));
    basis = basis * c;
    g = conj_transpose(c) * g * c;
  }
  if (!certified && options.require_certificate)
    fail(ErrorCode::OracleInconclusive, "no isotropic vector up to height " + std::to_string(options.height_bound) +
                                            " and anisotropy not certified");
  pairs.push_back(basis);
  Matrix change = hcat(r, n, pairs);
  Matrix expected = g;
  const GramForm h1(Matrix::from_rows(r, {{RingElem::zero(r), RingElem::one(r)}, {elem(r, eps), RingElem::zero(r)}}), eps);
  for (std::size_t i = 0; i < rank; ++i) expected = block_diagonal(h1.gram(), expected);
  ensure_identity(conj_transpose(change) * f.gram() * change == expected, "Witt decomposition congruence");
  return {rank, GramForm(g, eps), change, certified};
}

GramForm hyperbolic(std::size_t n, int epsilon, const RingSpec& ring) {
  if (n == 0) fail(ErrorCode::InvalidInput, "hyperbolic rank must be positive");
  if (epsilon != 1 && epsilon != -1) fail(ErrorCode::InvalidInput, "epsilon must be +1 or -1");
  Matrix h(ring, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, n + i) = RingElem::one(ring);
    h(n + i, i) = elem(ring, epsilon);
  }
  return GramForm(h, epsilon);
}

Matrix interchange_isometry(std::size_t n, int epsilon, const RingSpec& ring) {
  const GramForm h = hyperbolic(n, epsilon, ring);
  Matrix sigma = h.gram();
  ensure_identity(conj_transpose(sigma) * h.gram() * sigma == h.gram(), "interchange is not an isometry");
  ensure_identity(sigma * sigma == elem(ring, epsilon) * Matrix::identity(ring, 2 * n), "interchange squares to epsilon");
  return sigma;
}

GramForm orth_sum(const GramForm& f, const GramForm& g) {
  if (!(f.ring() == g.ring())) fail(ErrorCode::SpecMismatch, "orth_sum over " + f.ring().tag() + " and " + g.ring().tag());
  if (f.epsilon() != g.epsilon()) fail(ErrorCode::SpecMismatch, "orth_sum of forms with different epsilon");
  return GramForm(block_diagonal(f.gram(), g.gram()), f.epsilon());
}

GramForm tensor(const GramForm& f, const GramForm& g) {
  if (!(f.ring() == g.ring())) fail(ErrorCode::SpecMismatch, "tensor over " + f.ring().tag() + " and " + g.ring().tag());
  return GramForm(kronecker(f.gram(), g.gram()), f.epsilon() * g.epsilon());
}

GramForm negate(const GramForm& f) { return GramForm(elem(f.ring(), -1) * f.gram(), f.epsilon()); }

}  // namespace wittstab
