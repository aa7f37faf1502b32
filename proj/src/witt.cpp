#include "wittstab/witt.hpp"

#include <algorithm>
#include <map>

#include "wittstab/errors.hpp"
#include "wittstab/hilbert.hpp"
#include "wittstab/number_theory.hpp"

namespace wittstab {

namespace {

bool invariant_ring(const RingSpec& r) {
  return r.kind() == RingKind::PrimeField || r.kind() == RingKind::Rationals || r.kind() == RingKind::Dyadic;
}

auto key(const WittClass& c) { return std::tie(c.dim_mod2, c.signature, c.disc, c.hasse_minus, c.dyadic_parity); }

std::vector<Rational> rational_entries(const GramForm& f) {
  const Matrix g = f.ring().kind() == RingKind::Dyadic ? change_rational_ring(f.gram(), RingSpec::rationals()) : f.gram();
  std::vector<Rational> out;
  for (const auto& e : diagonalize(GramForm(g, 1)).form.diagonal_entries()) out.push_back(e.rational());
  return out;
}

Integer signature_of(const std::vector<Rational>& diag) {
  long s = 0;
  for (const auto& a : diag) s += a > 0 ? 1 : -1;
  return s;
}

GramForm multiple(const GramForm& f, const Integer& k) {
  GramForm out = zero_form(f.ring(), f.epsilon());
  const GramForm unit = k < 0 ? negate(f) : f;
  for (Integer i = 0; i < abs(k); ++i) out = orth_sum(out, unit);
  return out;
}

GramForm combination(const RingSpec& ring, const std::vector<GramForm>& gens, const std::vector<Integer>& x) {
  GramForm out = zero_form(ring);
  for (std::size_t i = 0; i < gens.size(); ++i) out = orth_sum(out, multiple(gens[i], x[i]));
  return out;
}

std::vector<Integer> column_of(const IntMatrix& m, std::size_t j) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
  return out;
}

WittGenerator make_generator(const RingSpec& ring, const std::vector<GramForm>& gens, std::vector<Integer> x, Integer order) {
  const GramForm rep = reduce_form(combination(ring, gens, x));
  return {std::move(x), witt_class(rep), rep, std::move(order)};
}

std::size_t index_of(const std::vector<WittClass>& classes, const WittClass& c) {
  const auto it = std::find(classes.begin(), classes.end(), c);
  if (it == classes.end()) return classes.size();
  return static_cast<std::size_t>(it - classes.begin());
}

}  // namespace

bool WittClass::is_zero() const {
  return dim_mod2 == 0 && signature == 0 && disc == 1 && hasse_minus.empty() && dyadic_parity == 0;
}

bool operator==(const WittClass& a, const WittClass& b) {
  return a.ring == b.ring && a.epsilon == b.epsilon && key(a) == key(b);
}

bool operator<(const WittClass& a, const WittClass& b) { return key(a) < key(b); }

GramForm zero_form(const RingSpec& ring, int epsilon) { return GramForm(Matrix(ring, 0, 0), epsilon); }

WittClass witt_class(const GramForm& f) {
  const RingSpec& r = f.ring();
  if (!invariant_ring(r)) fail(ErrorCode::UnsupportedRing, "witt_class needs F_p, Q or Z[1/2], got " + r.tag());
  WittClass c;
  c.ring = r;
  c.epsilon = f.epsilon();
  if (f.epsilon() == -1) return c;  // skew forms over these rings are hyperbolic
  const std::size_t n = f.dim();
  c.dim_mod2 = static_cast<int>(n % 2);
  const RingElem d = det(f.gram());
  const bool flip = (n * (n - 1) / 2) % 2 == 1;
  switch (r.kind()) {
    case RingKind::PrimeField: {
      const RingElem sd = flip ? -d : d;
      c.disc = legendre(sd.residue(), r.prime()) == 1 ? 1 : smallest_nonresidue(r.prime());
      return c;
    }
    case RingKind::Rationals: {
      auto diag = rational_entries(f);
      c.signature = signature_of(diag);
      c.disc = squarefree_part(flip ? -d.rational() : d.rational());
      if (n % 4 == 2 || n % 4 == 3) {
        diag.push_back(1);
        diag.push_back(-1);
      }
      const std::size_t fourths = diag.size() / 4;
      for (const auto& v : relevant_places(diag)) {
        if (v.infinite) continue;
        int h = hasse_invariant(diag, v);
        if (fourths % 2 == 1) h *= hilbert_symbol(-1, -1, v);
        if (h == -1) c.hasse_minus.push_back(v.prime);
      }
      return c;
    }
    case RingKind::Dyadic: {
      c.signature = signature_of(rational_entries(f));
      const long k = two_adic_valuation(d.rational());
      c.dyadic_parity = static_cast<int>(((k % 2) + 2) % 2);
      const int sign = (d.rational() > 0) != flip ? 1 : -1;
      c.disc = sign * (c.dyadic_parity ? 2 : 1);
      return c;
    }
    default: break;
  }
  fail(ErrorCode::UnsupportedRing, "witt_class over " + r.tag());
}

bool witt_equiv(const GramForm& f, const GramForm& g) {
  if (!(f.ring() == g.ring())) fail(ErrorCode::SpecMismatch, "forms over " + f.ring().tag() + " and " + g.ring().tag());
  if (f.epsilon() != g.epsilon()) fail(ErrorCode::SpecMismatch, "forms with different epsilon");
  return witt_class(f) == witt_class(g);
}

GramForm reduce_form(const GramForm& f) {
  GramForm a = witt_decompose(f).anisotropic;
  if (a.epsilon() != 1 || a.dim() == 0) return a;
  try {
    return diagonalize(a).form;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoUnitPivot) throw;
    return a;
  }
}

WittRingTable witt_ring_table(const RingSpec& ring, std::vector<GramForm> generators) {
  if (ring.kind() != RingKind::PrimeField && ring.kind() != RingKind::Dyadic)
    fail(ErrorCode::UnsupportedRing, "witt_ring_table needs F_p or Z[1/2], got " + ring.tag());
  if (generators.empty()) {
    if (ring.kind() == RingKind::Dyadic) {
      for (long a : {1, 2, -1, -2}) generators.push_back(GramForm::diagonal(ring, {a}));
    } else {
      generators.push_back(GramForm::diagonal(ring, {1}));
      generators.push_back(GramForm::diagonal(ring, {smallest_nonresidue(ring.prime())}));
    }
  }
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) fail(ErrorCode::SpecMismatch, "generator over " + g.ring().tag() + ", table over " + ring.tag());
    if (g.epsilon() != 1) fail(ErrorCode::InvalidInput, "Witt ring generators must be symmetric forms");
  }
  WittRingTable t;
  t.ring = ring;
  t.generators = generators;
  const std::size_t gcount = generators.size();
  std::vector<WittClass> gen_classes;
  for (const auto& g : generators) gen_classes.push_back(witt_class(g));

  // classes and representatives
  std::map<WittClass, GramForm> found;
  if (ring.kind() == RingKind::Dyadic) {
    for (std::size_t i = 0; i < gcount; ++i) found.emplace(gen_classes[i], reduce_form(generators[i]));
  } else {
    found.emplace(witt_class(zero_form(ring)), zero_form(ring));
    std::vector<GramForm> frontier{zero_form(ring)};
    while (!frontier.empty()) {
      std::vector<GramForm> next;
      for (const auto& f : frontier)
        for (const auto& g : generators) {
          GramForm sum = reduce_form(orth_sum(f, g));
          if (found.emplace(witt_class(sum), sum).second) next.push_back(sum);
        }
      frontier = std::move(next);
    }
  }
  for (const auto& [c, rep] : found) {
    t.classes.push_back(c);
    t.representatives.push_back(rep);
  }
  const std::size_t count = t.classes.size();
  t.multiplication.assign(count, std::vector<std::size_t>(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const WittClass prod = witt_class(tensor(t.representatives[i], t.representatives[j]));
      const std::size_t k = index_of(t.classes, prod);
      if (k == count) fail(ErrorCode::NotClosed, "product of classes " + std::to_string(i) + " and " + std::to_string(j) + " escapes the set");
      t.multiplication[i][j] = k;
    }

  // presentation Z^g / K of the additive group generated
  IntMatrix relations;
  if (ring.kind() == RingKind::Dyadic) {
    // kernel of x -> (sum x_i sig_i, sum x_i parity_i mod 2)
    IntMatrix m(2, gcount + 1);
    for (std::size_t i = 0; i < gcount; ++i) {
      m(0, i) = gen_classes[i].signature;
      m(1, i) = gen_classes[i].dyadic_parity;
    }
    m(1, gcount) = 2;
    relations = kernel_basis(m).rows_range(0, gcount);
  } else {
    std::vector<std::vector<std::size_t>> add(count, std::vector<std::size_t>(count));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        add[i][j] = index_of(t.classes, witt_class(orth_sum(t.representatives[i], t.representatives[j])));
    t.addition = add;
    const std::size_t zero = index_of(t.classes, witt_class(zero_form(ring)));
    std::vector<std::size_t> gen_index;
    for (const auto& c : gen_classes) gen_index.push_back(index_of(t.classes, c));
    std::vector<std::vector<Integer>> cols;
    for (std::size_t i = 0; i < gcount; ++i) {
      std::vector<Integer> v(gcount, 0);
      v[i] = static_cast<long>(count);
      cols.push_back(v);
    }
    std::vector<std::size_t> x(gcount, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < gcount && x[k] + 1 == count) x[k++] = 0;
      if (k == gcount) break;
      ++x[k];
      std::size_t acc = zero;
      for (std::size_t i = 0; i < gcount; ++i)
        for (std::size_t rep = 0; rep < x[i]; ++rep) acc = add[acc][gen_index[i]];
      if (acc == zero) cols.emplace_back(x.begin(), x.end());
    }
    relations = IntMatrix(gcount, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < gcount; ++i) relations(i, j) = cols[j][i];
  }
  const FgAbGroup group(gcount, relations);
  t.group = group.shape();

  // generators of the quotient: columns of U^{-1} from the Smith form of the relations
  const SmithForm s = smith_normal_form(relations);
  for (std::size_t i = 0; i < gcount; ++i) {
    const bool free = i >= s.rank;
    if (!free && s.diag(i) == 1) continue;
    auto x = column_of(s.u_inverse, i);
    if (free)
      t.free_generators.push_back(make_generator(ring, generators, x, 0));
    else
      t.torsion_generators.push_back(make_generator(ring, generators, x, s.diag(i)));
  }
  if (ring.kind() == RingKind::Dyadic) {
    // normal form: free generators of parity 0 and positive signature, when a parity torsion class allows it
    const WittGenerator* parity = nullptr;
    for (const auto& g : t.torsion_generators)
      if (g.cls.signature == 0 && g.cls.dyadic_parity == 1) parity = &g;
    for (auto& g : t.free_generators) {
      auto x = g.coefficients;
      if (g.cls.dyadic_parity == 1 && parity)
        for (std::size_t i = 0; i < gcount; ++i) x[i] += parity->coefficients[i];
      const WittClass c = witt_class(combination(ring, generators, x));
      if (c.signature < 0)
        for (auto& xi : x) xi = -xi;
      g = make_generator(ring, generators, x, 0);
    }
  }
  return t;
}

}  // namespace wittstab
