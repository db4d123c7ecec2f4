#include "genstab.hpp"

#include <algorithm>

#include "common.hpp"

namespace seaweed {

Counterexample build_counterexample(const RootSystem& rs, const Algebra& alg) {
  const auto attach = rs.theta_attachment();
  if (!attach)
    throw InvalidArgument("counterexample requires theta to be a fundamental weight; not the case for " +
                          rs.type_name());

  const Root alpha = rs.simple_root(*attach);
  std::vector<int> members;
  for (int i = 0; i < alg.dim(); ++i) {
    const BasisLabel& l = alg.label(i);
    if (l.kind == BasisLabel::Kind::Cartan || l.root.is_positive()) members.push_back(i);
  }
  members.push_back(alg.root_vector_index(alpha.negated()));

  Counterexample ce{&alg, Subalgebra(alg, std::move(members)), alpha, build_cascade(rs), {}, {}, -1, {}, {}};

  const auto expansion = alpha_expansion(rs);
  if (!expansion) throw InternalError("attachment root without alpha expansion");
  ce.I = expansion->I;
  ce.h_basis = borel_index(rs).h_basis;

  auto local_of_root = [&](const Root& g) {
    const int p = alg.root_vector_index(g);
    const int l = p < 0 ? -1 : ce.p.local_index(p);
    if (l < 0) throw InternalError("expected root vector e" + g.to_string() + " in the parabolic");
    return l;
  };

  ce.neg_alpha_local = local_of_root(alpha.negated());
  for (const Root& mu : ce.cascade.roots) ce.mu_local.push_back(local_of_root(mu));

  // predicted kernel support: e(-alpha), e(theta - alpha - mu_i) for i in I,
  // e(mu_i) for i in I ∪ {1}
  const Root theta = ce.cascade.roots[0];
  ce.support_local.push_back(ce.neg_alpha_local);
  ce.support_local.push_back(ce.mu_local[0]);
  for (int i : ce.I) {
    const Root t = theta - alpha - ce.cascade.roots[i];
    if (!rs.is_positive_root(t))
      throw InternalError("theta - alpha - mu_i is not a positive root for " + rs.type_name());
    ce.support_local.push_back(local_of_root(t));
    ce.support_local.push_back(ce.mu_local[i]);
  }
  std::sort(ce.support_local.begin(), ce.support_local.end());
  ce.support_local.erase(std::unique(ce.support_local.begin(), ce.support_local.end()), ce.support_local.end());
  return ce;
}

Functional xi_a(const Counterexample& ce, const Rat& a) {
  Functional xi(ce.p.dim(), Rat(0));
  for (int l : ce.mu_local) xi[l] = 1;
  xi[ce.neg_alpha_local] = a;
  return xi;
}

Functional xi_a_with_h(const Counterexample& ce, const Rat& a, const std::vector<Rat>& h_coeffs) {
  Functional xi = xi_a(ce, a);
  const int n = ce.alg->cartan_count();
  if (static_cast<int>(h_coeffs.size()) != n) throw InvalidArgument("xi_a_with_h: bad h coefficient length");
  for (int j = 0; j < n; ++j) {
    const int l = ce.p.local_index(ce.alg->cartan_basis_index(j));
    xi[l] += h_coeffs[j];
  }
  return xi;
}

namespace {

// the Cartan element with coefficients c over h_1..h_n as a local vector on p
std::vector<Rat> cartan_local_vector(const Counterexample& ce, const std::vector<Rat>& c) {
  std::vector<Rat> v(ce.p.dim(), Rat(0));
  for (std::size_t j = 0; j < c.size(); ++j)
    v[ce.p.local_index(ce.alg->cartan_basis_index(static_cast<int>(j)))] = c[j];
  return v;
}

}  // namespace

SampleReport verify_sample(const Counterexample& ce, const Rat& a) {
  const RootSystem& rs = *ce.alg->root_system();
  SampleReport rep;
  rep.a = a;

  const Functional xi = xi_a(ce, a);
  const MatQ m = kirillov_matrix(ce.p, xi);
  const MatQ kernel = kernel_basis(m);
  const int h_dim = static_cast<int>(ce.h_basis.rows());

  rep.stabiliser_dim = static_cast<int>(kernel.rows());
  rep.dim_ok = rep.stabiliser_dim == 1 + h_dim;

  rep.h_contained = true;
  for (std::size_t r = 0; r < ce.h_basis.rows(); ++r)
    if (!in_row_span(kernel, cartan_local_vector(ce, ce.h_basis.row(r)))) rep.h_contained = false;

  // kernel generator mod h: the kernel vectors with zero Cartan coordinates
  MatQ constrained = m;
  for (int j = 0; j < ce.alg->cartan_count(); ++j) {
    std::vector<Rat> row(ce.p.dim(), Rat(0));
    row[ce.p.local_index(ce.alg->cartan_basis_index(j))] = 1;
    constrained.append_row(row);
  }
  const MatQ k0 = kernel_basis(constrained);
  if (k0.rows() == 1) {
    const std::vector<Rat> v = k0.row(0);
    rep.support_ok = true;
    for (int i = 0; i < ce.p.dim(); ++i)
      if (v[i] != 0 && !std::binary_search(ce.support_local.begin(), ce.support_local.end(), i))
        rep.support_ok = false;

    bool mu_all_zero = true;
    for (int l : ce.mu_local)
      if (v[l] != 0) mu_all_zero = false;
    rep.mu_part_ok = (a == 0) == mu_all_zero;

    // common grading element h' with mu_i(h') = 1 on I ∪ {1}; then -alpha(h') = 1
    // follows and [h', v] = v
    MatQ rows(0, rs.rank());
    std::vector<Rat> rhs;
    std::vector<int> iu = ce.I;
    iu.insert(iu.begin(), 0);
    for (int i : iu) {
      std::vector<Rat> row(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) row[j] = rs.simple_pairing(ce.cascade.roots[i], j);
      rows.append_row(row);
      rhs.push_back(1);
    }
    const auto hprime = solve(rows, rhs);
    if (hprime) {
      Rat alpha_val = 0;
      for (int j = 0; j < rs.rank(); ++j) alpha_val += (*hprime)[j] * rs.simple_pairing(ce.alpha, j);
      const std::vector<Rat> hv = cartan_local_vector(ce, *hprime);
      const std::vector<Rat> bracket = ce.p.bracket(hv, v);
      rep.eigen_ok = alpha_val == -1 && bracket == v;
    }
  }

  // Tauvel-Yu obstruction: [p, p_xi] ∩ p_xi != 0, checked exactly
  MatQ image(0, ce.p.dim());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    const std::vector<Rat> k = kernel.row(r);
    for (int i = 0; i < ce.p.dim(); ++i) {
      std::vector<Rat> e(ce.p.dim(), Rat(0));
      e[i] = 1;
      const std::vector<Rat> br = ce.p.bracket(e, k);
      if (std::any_of(br.begin(), br.end(), [](const Rat& x) { return x != 0; })) image.append_row(br);
    }
  }
  rep.tauvel_yu_ok = image.rows() > 0 && subspace_intersection_dim(image, kernel) > 0;
  return rep;
}

int density_rank(const Counterexample& ce) {
  std::vector<Functional> extra;
  {
    Functional dir(ce.p.dim(), Rat(0));
    dir[ce.neg_alpha_local] = 1;  // the xi(alpha) direction
    extra.push_back(std::move(dir));
  }
  for (std::size_t r = 0; r < ce.h_basis.rows(); ++r) {
    Functional dir(ce.p.dim(), Rat(0));
    const auto row = ce.h_basis.row(r);
    for (std::size_t j = 0; j < row.size(); ++j)
      dir[ce.p.local_index(ce.alg->cartan_basis_index(static_cast<int>(j)))] = row[j];
    extra.push_back(std::move(dir));
  }
  return tangent_rank(ce.p, xi_a(ce, 0), extra);
}

std::vector<Rat> default_samples(int count) {
  static const std::vector<Rat> pool = {Rat(0),     Rat(1),      Rat(-1),    Rat(2),
                                        Rat(1, 2),  Rat(-3),     Rat(5, 7),  Rat(7),
                                        Rat(-2, 3), Rat(11),     Rat(9, 4),  Rat(-13, 5)};
  std::vector<Rat> out;
  for (int i = 0; i < count; ++i)
    out.push_back(i < static_cast<int>(pool.size()) ? pool[i] : Rat(17 + i));
  return out;
}

CounterexampleReport run_counterexample(const RootSystem& rs, const Algebra& alg,
                                        const std::vector<Rat>& samples, const OracleOptions& opts) {
  const Counterexample ce = build_counterexample(rs, alg);
  CounterexampleReport rep;
  rep.series = rs.series();
  rep.rank = rs.rank();
  rep.dim_p = ce.p.dim();
  rep.ind_b = rs.rank() - ce.cascade.size();
  rep.ind_p = index_oracle(ce.p, opts).index;
  rep.ind_relation_ok = rep.ind_p == rep.ind_b + 1;
  for (const Rat& a : samples) rep.samples.push_back(verify_sample(ce, a));
  rep.density = density_rank(ce);
  rep.density_ok = rep.density == ce.p.dim();
  rep.confirmed = rep.ind_relation_ok && rep.density_ok &&
                  std::all_of(rep.samples.begin(), rep.samples.end(),
                              [](const SampleReport& s) { return s.all_ok(); });
  return rep;
}

namespace {

MatQ random_matrix(Rng& rng, int n, long bound) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rng.uniform(-bound, bound));
  return m;
}

MatQ random_invertible(Rng& rng, int n, long bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    MatQ m = random_matrix(rng, n, bound);
    if (rank(m) == n) return m;
  }
  throw InternalError("random_invertible: exhausted retries");
}

MatQ random_symmetric_invertible(Rng& rng, int n, long bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        m.at(i, j) = Rat(rng.uniform(-bound, bound));
        m.at(j, i) = m.at(i, j);
      }
    if (rank(m) == n) return m;
  }
  throw InternalError("random_symmetric_invertible: exhausted retries");
}

MatQ mat_pow(const MatQ& m, int k) {
  MatQ r = MatQ::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

bool check_matrix_invariants_gl(int n, int trials, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("check_matrix_invariants_gl: n must be >= 1");
  const long bound = 20;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    const MatQ a = random_invertible(rng, n, bound);
    const MatQ d = random_invertible(rng, n, bound);
    const MatQ b = random_matrix(rng, n, bound);
    const MatQ m = random_matrix(rng, n, bound);
    const MatQ nn = random_matrix(rng, n, bound);
    const MatQ r = random_invertible(rng, n, bound);

    const MatQ ainv = *inverse(a), dinv = *inverse(d), rinv = *inverse(r);
    const MatQ m2 = a * (m + b * r) * ainv;
    const MatQ n2 = d * nn * dinv - d * (r * b) * dinv;
    const MatQ r2 = d * r * ainv;

    if ((m2 + n2).trace() != (m + nn).trace()) return false;  // the polynomial invariant g_1

    const MatQ x = m + rinv * nn * r;
    const MatQ x2 = m2 + *inverse(r2) * n2 * r2;
    for (int i = 1; i <= n; ++i)
      if (mat_pow(x, i).trace() != mat_pow(x2, i).trace()) return false;
  }
  return true;
}

bool check_matrix_invariants_sp(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("check_matrix_invariants_sp: n must be >= 2");
  const long bound = 20;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed ^ 0x5ca1eULL, static_cast<std::uint64_t>(t));
    const MatQ a = random_invertible(rng, n, bound);
    const MatQ b = random_symmetric_invertible(rng, n, bound);  // any symmetric works
    const MatQ m = random_matrix(rng, n, bound);
    const MatQ r = random_symmetric_invertible(rng, n, bound);

    const MatQ ainv = *inverse(a);
    const MatQ at_inv = *inverse(a.transposed());
    const MatQ m2 = a * (m + b * r) * ainv;
    const MatQ r2 = at_inv * r * ainv;

    const MatQ x = m - *inverse(r) * m.transposed() * r;
    const MatQ x2 = m2 - *inverse(r2) * m2.transposed() * r2;
    for (int i = 1; 2 * i <= n; ++i)
      if (mat_pow(x, 2 * i).trace() != mat_pow(x2, 2 * i).trace()) return false;
    for (int j = 1; j <= n + 1; j += 2)
      if (mat_pow(x, j).trace() != 0) return false;  // odd powers of r^{-1}·(antisymmetric)
  }
  return true;
}

}  // namespace seaweed
