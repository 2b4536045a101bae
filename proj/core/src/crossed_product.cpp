#include "amitsur/crossed_product.hpp"

#include <string>

#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

std::size_t idx(std::int64_t g, std::size_t n) {
  return static_cast<std::size_t>(mod_floor(g, static_cast<std::int64_t>(n)));
}

}  // namespace

std::vector<CheckResult> cocycle_checks(const FieldTower& tw, const Cocycle& c) {
  std::vector<CheckResult> bad;
  const std::size_t n = tw.n();
  if (c.size() != n) return {{"cocycle table is n x n", false, "wrong row count"}};
  for (const auto& row : c) {
    if (row.size() != n) return {{"cocycle table is n x n", false, "wrong column count"}};
    for (const auto& e : row)
      if (e.size() != tw.dim()) return {{"cocycle entries lie in E", false, "wrong coordinate count"}};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (tw.is_zero(tw.normalize(c[i][j])))
        bad.push_back({"cocycle values are nonzero", false,
                       "c(" + std::to_string(i) + "," + std::to_string(j) + ") = 0"});
  if (!bad.empty()) return bad;
  if (tw.normalize(c[0][0]) != tw.one()) bad.push_back({"c(id, id) = 1", false, {}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const FieldElement lhs =
            tw.mul(tw.sigma(tw.normalize(c[j][k]), static_cast<std::int64_t>(i)), tw.normalize(c[i][(j + k) % n]));
        const FieldElement rhs = tw.mul(tw.normalize(c[i][j]), tw.normalize(c[(i + j) % n][k]));
        if (lhs != rhs)
          bad.push_back({"cocycle condition", false,
                         "fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")"});
      }
  return bad;
}

Cocycle standard_cyclic_cocycle(const FieldTower& tw, const FieldElement& b) {
  const FieldElement bb = tw.normalize(b);
  if (tw.is_zero(bb)) throw CocycleError("b must be nonzero");
  if (tw.sigma(bb) != bb) throw CocycleError("b must be fixed by sigma");
  const std::size_t n = tw.n();
  Cocycle c(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = i + j < n ? tw.one() : bb;
  const auto bad = cocycle_checks(tw, c);
  if (!bad.empty()) throw CocycleError("standard cocycle failed: " + bad.front().name);
  return c;
}

// ---- CrossedProduct --------------------------------------------------------

CrossedProduct::CrossedProduct(FieldTower tower, Cocycle c, Unchecked)
    : tower_(std::move(tower)), cocycle_(std::move(c)) {
  for (auto& row : cocycle_)
    for (auto& e : row) e = tower_.normalize(std::move(e));
}

CrossedProduct::CrossedProduct(FieldTower tower, Cocycle c)
    : CrossedProduct(std::move(tower), std::move(c), Unchecked{}) {
  const auto bad = cocycle_checks(tower_, cocycle_);
  if (!bad.empty())
    throw CocycleError("not a normalized 2-cocycle: " + bad.front().name +
                       (bad.front().detail.empty() ? "" : " (" + bad.front().detail + ")"));
}

CrossedProduct CrossedProduct::unchecked(FieldTower tower, Cocycle c) {
  if (c.size() != tower.n()) throw InvalidArgument("cocycle table must be n x n");
  for (const auto& row : c)
    if (row.size() != tower.n()) throw InvalidArgument("cocycle table must be n x n");
  return CrossedProduct(std::move(tower), std::move(c), Unchecked{});
}

CrossedElement CrossedProduct::zero() const { return CrossedElement(n(), tower_.zero()); }

CrossedElement CrossedProduct::one() const {
  // With c(id, id) = 1 the cocycle identity forces c(id, h) = 1, so u_id is the unit.
  return embed(tower_.one());
}

CrossedElement CrossedProduct::embed(const FieldElement& x) const { return term(x, 0); }

CrossedElement CrossedProduct::term(const FieldElement& x, std::int64_t g) const {
  CrossedElement out = zero();
  out[idx(g, n())] = tower_.normalize(x);
  return out;
}

CrossedElement CrossedProduct::add(const CrossedElement& a, const CrossedElement& b) const {
  CrossedElement out(n());
  for (std::size_t g = 0; g < n(); ++g) out[g] = tower_.add(a[g], b[g]);
  return out;
}

CrossedElement CrossedProduct::sub(const CrossedElement& a, const CrossedElement& b) const {
  CrossedElement out(n());
  for (std::size_t g = 0; g < n(); ++g) out[g] = tower_.sub(a[g], b[g]);
  return out;
}

CrossedElement CrossedProduct::mul(const CrossedElement& a, const CrossedElement& b) const {
  const std::size_t nn = n();
  CrossedElement out = zero();
  for (std::size_t g = 0; g < nn; ++g) {
    if (tower_.is_zero(a[g])) continue;
    for (std::size_t h = 0; h < nn; ++h) {
      if (tower_.is_zero(b[h])) continue;
      // (x u_g)(y u_h) = x g(y) c(g, h) u_{gh}
      const FieldElement twisted = tower_.sigma(b[h], static_cast<std::int64_t>(g));
      const FieldElement prod = tower_.mul(tower_.mul(a[g], twisted), cocycle_[g][h]);
      const std::size_t gh = (g + h) % nn;
      out[gh] = tower_.add(out[gh], prod);
    }
  }
  return out;
}

CrossedElement CrossedProduct::pow(const CrossedElement& a, std::uint64_t e) const {
  CrossedElement result = one();
  CrossedElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Vector CrossedProduct::flatten(const CrossedElement& a) const {
  Vector out;
  out.reserve(dim());
  for (const auto& block : a) out.insert(out.end(), block.begin(), block.end());
  return out;
}

CrossedElement CrossedProduct::unflatten(const Vector& v) const {
  if (v.size() != dim()) throw InvalidArgument("vector has wrong dimension for crossed product");
  const std::size_t d = tower_.dim();
  CrossedElement out(n());
  for (std::size_t g = 0; g < n(); ++g)
    out[g] = FieldElement(v.begin() + static_cast<std::ptrdiff_t>(g * d),
                          v.begin() + static_cast<std::ptrdiff_t>((g + 1) * d));
  return out;
}

std::vector<CrossedElement> CrossedProduct::basis() const {
  std::vector<CrossedElement> out;
  out.reserve(dim());
  for (std::size_t g = 0; g < n(); ++g)
    for (std::size_t j = 0; j < tower_.dim(); ++j)
      out.push_back(term(tower_.basis_element(j), static_cast<std::int64_t>(g)));
  return out;
}

// ---- splitting chains and ideals -------------------------------------------

bool is_splitting(const CrossedProduct& a, const SplittingChain& z) {
  const FieldTower& tw = a.tower();
  const std::size_t n = a.n();
  if (z.z.size() != n) return false;
  for (const auto& e : z.z)
    if (e.size() != tw.dim() || tw.is_zero(tw.normalize(e))) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElement lhs = tw.mul(tw.sigma(tw.normalize(z.z[j]), static_cast<std::int64_t>(i)),
                                      tw.normalize(z.z[i]));
      const FieldElement rhs = tw.mul(a.cocycle()[i][j], tw.normalize(z.z[(i + j) % n]));
      if (lhs != rhs) return false;
    }
  return true;
}

SplittingChain chain_from_partial_norms(const FieldTower& tw, const FieldElement& y) {
  SplittingChain out;
  for (std::size_t i = 0; i < tw.n(); ++i) out.z.push_back(tw.partial_norm(tw.normalize(y), i));
  return out;
}

SplittingChain twist_chain(const FieldTower& tw, const SplittingChain& z, const FieldElement& w) {
  SplittingChain out;
  const FieldElement winv = tw.inverse(tw.normalize(w));
  for (std::size_t g = 0; g < z.z.size(); ++g)
    out.z.push_back(tw.mul(tw.mul(z.z[g], tw.sigma(w, static_cast<std::int64_t>(g))), winv));
  return out;
}

std::vector<CheckResult> left_ideal_checks(const CrossedProduct& a, const LeftIdeal& ideal) {
  const FieldTower& tw = a.tower();
  const BaseField& f = tw.base();
  std::vector<CheckResult> out;
  if (ideal.basis.cols != a.dim()) {
    out.push_back({"ideal lives in A", false, "wrong ambient dimension"});
    return out;
  }

  bool closed = true;
  std::vector<CrossedElement> gens;
  for (std::size_t j = 0; j < tw.dim(); ++j) gens.push_back(a.embed(tw.basis_element(j)));
  gens.push_back(a.u());
  for (const auto& row : ideal.basis.rows) {
    const CrossedElement v = a.unflatten(row);
    for (const auto& g : gens)
      if (!in_row_space(f, ideal.basis, a.flatten(a.mul(g, v)))) {
        closed = false;
        break;
      }
    if (!closed) break;
  }
  out.push_back({"closed under left multiplication by E and u", closed, {}});

  const std::size_t l_dim = tw.l_dimension();
  const std::size_t expected = (a.n() * a.n() - a.n()) * l_dim;
  out.push_back({"dim I = n^2 - n over L", ideal.basis.rank() == expected,
                 "prime-field dimension " + std::to_string(ideal.basis.rank()) + ", expected " +
                     std::to_string(expected)});

  Matrix rows = ideal.basis.rows;
  for (std::size_t j = 0; j < tw.dim(); ++j) rows.push_back(a.flatten(a.embed(tw.basis_element(j))));
  out.push_back({"I + E = A", row_reduce(f, std::move(rows), a.dim()).rank() == a.dim(), {}});
  return out;
}

LeftIdeal lambda_inv(const CrossedProduct& a, const SplittingChain& z) {
  if (!is_splitting(a, z)) throw NonSplittingChain("chain does not satisfy delta z = c");
  const FieldTower& tw = a.tower();
  Matrix rows;
  for (std::size_t g = 0; g < a.n(); ++g) {
    const CrossedElement gen = a.sub(a.embed(z.z[g]), a.term(tw.one(), static_cast<std::int64_t>(g)));
    for (std::size_t j = 0; j < tw.dim(); ++j)
      rows.push_back(a.flatten(a.mul(a.embed(tw.basis_element(j)), gen)));
  }
  LeftIdeal ideal{row_reduce(tw.base(), std::move(rows), a.dim())};
  for (const auto& c : left_ideal_checks(a, ideal))
    if (!c.passed) throw NonSplittingChain("span is not a valid ideal: " + c.name);
  return ideal;
}

SplittingChain lambda(const CrossedProduct& a, const LeftIdeal& ideal) {
  const FieldTower& tw = a.tower();
  const BaseField& f = tw.base();
  if (ideal.basis.cols != a.dim()) throw InvalidArgument("ideal has wrong ambient dimension");

  // Reduce the E-basis modulo I once; each z_g solves Σ x_j [e_j] = [u_g].
  Matrix columns;
  for (std::size_t j = 0; j < tw.dim(); ++j)
    columns.push_back(reduce_modulo(f, ideal.basis, a.flatten(a.embed(tw.basis_element(j)))));

  SplittingChain out;
  for (std::size_t g = 0; g < a.n(); ++g) {
    const Vector target =
        reduce_modulo(f, ideal.basis, a.flatten(a.term(tw.one(), static_cast<std::int64_t>(g))));
    const auto sol = solve_columns(f, columns, target);
    if (!sol)
      throw NotInOpenSubset("no x in E with x - u_" + std::to_string(g) + " in I");
    if (!sol->unique)
      throw NotInOpenSubset("x with x - u_" + std::to_string(g) + " in I is not unique");
    out.z.push_back(tw.normalize(sol->x));
  }
  if (!is_splitting(a, out))
    throw InternalConsistency("chain recovered from ideal does not split the cocycle");
  return out;
}

CheckResult norm_element_check(const CrossedProduct& a, const FieldElement& x, std::uint64_t i) {
  const FieldTower& tw = a.tower();
  const std::string name = "a (x - u) = N^" + std::to_string(i) + " x - u^" + std::to_string(i);
  if (i == 0) return {name, false, "i must be positive"};
  const auto ii = static_cast<std::int64_t>(i);
  const CrossedElement u = a.u();

  CrossedElement coeff_a = a.zero();
  FieldElement running = tw.one();  // ∏_{j=1}^{k} σ^{i-j}(x)
  for (std::int64_t k = 0; k < ii; ++k) {
    if (k > 0) running = tw.mul(running, tw.sigma(x, ii - k));
    coeff_a = a.add(coeff_a, a.mul(a.embed(running), a.pow(u, static_cast<std::uint64_t>(ii - k - 1))));
  }
  const CrossedElement lhs = a.mul(coeff_a, a.sub(a.embed(x), u));

  FieldElement norm_part = tw.one();
  for (std::int64_t j = 0; j < ii; ++j) norm_part = tw.mul(norm_part, tw.sigma(x, j));
  const CrossedElement rhs = a.sub(a.embed(norm_part), a.pow(u, i));
  return {name, lhs == rhs, {}};
}

std::vector<CheckResult> tau_action_check(const CrossedProduct& a) {
  const FieldTower& tw = a.tower();
  const std::size_t n = a.n();
  const std::uint64_t m = tw.m();
  std::vector<CheckResult> out;

  // u^g = κ_g u_g; with the standard cocycle κ_g = 1 for g < n.
  const CrossedElement u = a.u();
  std::vector<FieldElement> kappa_inv_tau;  // τ(κ_g)^{-1}
  for (std::size_t g = 0; g < n; ++g) {
    const FieldElement kappa = a.pow(u, g)[g];
    kappa_inv_tau.push_back(tw.inverse(tw.tau(kappa)));
  }
  const FieldElement b_alg = a.pow(u, n)[0];

  const CrossedElement tau_u = a.mul(a.embed(tw.lambda()), a.pow(u, tw.r()));
  std::vector<CrossedElement> tau_u_powers{a.one()};
  for (std::size_t g = 1; g < n; ++g) tau_u_powers.push_back(a.mul(tau_u_powers.back(), tau_u));

  auto tau_a = [&](const CrossedElement& v) {
    CrossedElement res = a.zero();
    for (std::size_t g = 0; g < n; ++g) {
      if (tw.is_zero(v[g])) continue;
      const FieldElement coeff = tw.mul(tw.tau(v[g]), kappa_inv_tau[g]);
      res = a.add(res, a.mul(a.embed(coeff), tau_u_powers[g]));
    }
    return res;
  };

  bool relation = true;
  for (std::size_t j = 0; j < tw.dim() && relation; ++j) {
    const FieldElement x = tw.basis_element(j);
    const CrossedElement lhs = a.mul(tau_u, a.embed(tw.tau(x)));
    const CrossedElement rhs = a.mul(a.embed(tw.tau(tw.sigma(x))), tau_u);
    relation = lhs == rhs;
  }
  out.push_back({"tau(u) tau(x) = tau(sigma(x)) tau(u)", relation, {}});

  out.push_back({"tau(u)^n = lambda^n u^(rn) = tau(b)", a.pow(tau_u, n) == a.embed(tw.tau(b_alg)), {}});

  CrossedElement iter = u;
  for (std::uint64_t k = 0; k < m; ++k) iter = tau_a(iter);
  out.push_back({"tau^m(u) = u", iter == u, "m = " + std::to_string(m)});

  const auto basis = a.basis();
  std::vector<CrossedElement> images;
  images.reserve(basis.size());
  for (const auto& e : basis) images.push_back(tau_a(e));
  bool multiplicative = true;
  for (std::size_t i = 0; i < basis.size() && multiplicative; ++i)
    for (std::size_t j = 0; j < basis.size() && multiplicative; ++j)
      multiplicative = tau_a(a.mul(basis[i], basis[j])) == a.mul(images[i], images[j]);
  out.push_back({"tau extends to a multiplicative map of A", multiplicative, {}});

  bool order_m = true;
  for (const auto& e : basis) {
    CrossedElement v = e;
    for (std::uint64_t k = 0; k < m; ++k) v = tau_a(v);
    if (v != e) {
      order_m = false;
      break;
    }
  }
  out.push_back({"tau^m = id on A", order_m, {}});
  return out;
}

namespace {

// ⊗^l A over the prime field, via the structure constants of A.
class TensorPower {
 public:
  TensorPower(const CrossedProduct& a, unsigned l) : a_(a), l_(l), base_dim_(a.dim()) {
    const auto basis = a.basis();
    table_.assign(base_dim_, std::vector<Vector>(base_dim_));
    for (std::size_t i = 0; i < base_dim_; ++i)
      for (std::size_t j = 0; j < base_dim_; ++j) table_[i][j] = a.flatten(a.mul(basis[i], basis[j]));
    size_ = 1;
    for (unsigned t = 0; t < l; ++t) size_ *= base_dim_;
  }

  std::size_t size() const { return size_; }

  Vector pure(const std::vector<Vector>& factors) const {
    Vector out(1, Rational(1));
    for (const auto& f : factors) out = outer(out, f);
    return out;
  }

  Vector mul(const Vector& x, const Vector& y) const {
    const BaseField& f = a_.tower().base();
    Vector out(size_, Rational(0));
    for (std::size_t I = 0; I < size_; ++I) {
      if (x[I] == 0) continue;
      for (std::size_t J = 0; J < size_; ++J) {
        if (y[J] == 0) continue;
        Vector prod(1, x[I] * y[J]);
        std::size_t ii = I, jj = J, stride = size_;
        for (unsigned t = 0; t < l_; ++t) {
          stride /= base_dim_;
          prod = outer(prod, table_[ii / stride][jj / stride]);
          ii %= stride;
          jj %= stride;
        }
        for (std::size_t K = 0; K < size_; ++K)
          if (prod[K] != 0) out[K] += prod[K];
      }
    }
    for (auto& v : out) v = f.reduce(v);
    return out;
  }

  Vector pow(const Vector& x, std::uint64_t e) const {
    Vector result = pure(std::vector<Vector>(l_, a_.flatten(a_.one())));
    for (std::uint64_t k = 0; k < e; ++k) result = mul(result, x);
    return result;
  }

 private:
  static Vector outer(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] != 0) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
  }

  const CrossedProduct& a_;
  unsigned l_;
  std::size_t base_dim_;
  std::size_t size_;
  std::vector<std::vector<Vector>> table_;
};

}  // namespace

std::vector<CheckResult> tensor_power_check(const CrossedProduct& a, unsigned l) {
  const FieldTower& tw = a.tower();
  const std::size_t n = a.n();
  if (l < 1 || l > 2 || n > 3)
    throw InvalidArgument("tensor_power_check is limited to n <= 3 and 1 <= l <= 2");
  if (tw.l_dimension() != 1)
    throw InvalidArgument("tensor_power_check needs L to be the prime field of the model");

  const TensorPower tp(a, l);
  const BaseField& f = tw.base();
  const Vector one_a = a.flatten(a.one());
  auto lift_e = [&](const FieldElement& x) {
    std::vector<Vector> factors(l, one_a);
    factors[0] = a.flatten(a.embed(x));
    return tp.pure(factors);
  };
  const Vector v = tp.pure(std::vector<Vector>(l, a.flatten(a.u())));
  const FieldElement b_alg = a.pow(a.u(), n)[0];
  const FieldElement b_l = tw.pow(b_alg, l);

  std::vector<CheckResult> out;
  out.push_back({"v^n = b^l (x) 1", tp.pow(v, n) == lift_e(b_l), {}});

  bool twist = true;
  for (std::size_t j = 0; j < tw.dim() && twist; ++j) {
    const FieldElement x = tw.basis_element(j);
    twist = tp.mul(v, lift_e(x)) == tp.mul(lift_e(tw.sigma(x)), v);
  }
  out.push_back({"v x = sigma(x) v", twist, {}});

  // ψ: (E, σ, b^l) -> ⊗^l A, x u^i ↦ (x ⊗ 1) v^i.
  const CrossedProduct symbol(tw, standard_cyclic_cocycle(tw, b_l));
  std::vector<Vector> v_powers{tp.pow(v, 0)};
  for (std::size_t i = 1; i < n; ++i) v_powers.push_back(tp.mul(v_powers.back(), v));
  auto psi = [&](const CrossedElement& e) {
    Vector res(tp.size(), Rational(0));
    for (std::size_t g = 0; g < n; ++g) {
      if (tw.is_zero(e[g])) continue;
      const Vector part = tp.mul(lift_e(e[g]), v_powers[g]);
      for (std::size_t k = 0; k < res.size(); ++k) res[k] = f.reduce(res[k] + part[k]);
    }
    return res;
  };

  const auto sym_basis = symbol.basis();
  std::vector<Vector> images;
  for (const auto& e : sym_basis) images.push_back(psi(e));
  const std::size_t rank = row_reduce(f, images, tp.size()).rank();
  out.push_back({"E and v span a subalgebra of dimension n^2", rank == n * n,
                 "dimension " + std::to_string(rank)});

  bool hom = true;
  for (std::size_t i = 0; i < sym_basis.size() && hom; ++i)
    for (std::size_t j = 0; j < sym_basis.size() && hom; ++j)
      hom = psi(symbol.mul(sym_basis[i], sym_basis[j])) == tp.mul(images[i], images[j]);
  out.push_back({"subalgebra is the symbol algebra (E, sigma, b^l)", hom && rank == n * n, {}});
  return out;
}

// ---- random instances ------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

FieldElement random_nonzero(const FieldTower& tw, std::uint64_t& state) {
  while (true) {
    FieldElement x(tw.dim());
    for (auto& c : x) {
      if (tw.base().is_finite())
        c = static_cast<unsigned long>(splitmix64(state) % tw.base().characteristic());
      else
        c = static_cast<long>(splitmix64(state) % 5) - 2;
    }
    if (!tw.is_zero(x)) return x;
  }
}

RandomInstance random_cyclic_instance(std::uint64_t q, std::size_t n, std::uint64_t seed) {
  FieldTower tw = builtin_finite(q, n, 1);
  std::uint64_t state = seed;
  FieldElement y = random_nonzero(tw, state);
  FieldElement w = random_nonzero(tw, state);
  const FieldElement b = tw.norm(y);
  CrossedProduct algebra(tw, standard_cyclic_cocycle(tw, b));
  SplittingChain chain = twist_chain(tw, chain_from_partial_norms(tw, y), w);
  return RandomInstance{seed, std::move(y), std::move(w), std::move(algebra), std::move(chain)};
}

}  // namespace amitsur
