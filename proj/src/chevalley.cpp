#include "chevalley.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>

#include "common.hpp"

namespace seaweed {

std::string BasisLabel::to_string() const {
  if (kind == Kind::Cartan) return "h" + std::to_string(cartan_index);
  return "e" + root.to_string();
}

namespace {

SparseVec negated(const SparseVec& v) {
  SparseVec out = v;
  for (auto& [i, c] : out) c = -c;
  return out;
}

// Structure constants N_{γ,δ} on positive pairs, fixed by choosing
// N_{α,β} = p+1 > 0 on extraspecial pairs and propagating through the
// standard triple/quadruple relations.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& rs) : rs_(rs) {
    const auto& pos = rs.positive_roots();
    for (int g = 0; g < static_cast<int>(pos.size()); ++g) {
      int extraspecial = -1;
      for (int i = 0; i < g; ++i) {
        const Root rest = pos[g] - pos[i];
        const int j = rs.positive_index(rest);
        if (j < 0 || j < i) continue;
        if (extraspecial < 0) extraspecial = i;
        compute_pair(i, j, g, extraspecial);
      }
    }
  }

  // N for an arbitrary pair of roots whose sum is again a root
  Rat n_signed(const Root& x, const Root& y) const {
    const bool xp = x.is_positive(), yp = y.is_positive();
    if (xp && yp) return Rat(n_pos(x, y));
    if (!xp && !yp) return -n_signed(x.negated(), y.negated());
    if (!xp) return -n_signed(y, x);
    // x positive, y negative; reduce through the triple x + y + (-z) = 0
    const Root z = x + y;
    if (z.is_positive()) return -(rs_.inner(z, z) / rs_.inner(x, x)) * n_signed(y.negated(), z);
    return (rs_.inner(z, z) / rs_.inner(y, y)) * n_signed(z.negated(), x);
  }

 private:
  Int n_pos(const Root& x, const Root& y) const {
    const int ix = rs_.positive_index(x), iy = rs_.positive_index(y);
    assert(ix >= 0 && iy >= 0);
    if (ix < iy) {
      auto it = table_.find({ix, iy});
      assert(it != table_.end());
      return it->second;
    }
    auto it = table_.find({iy, ix});
    assert(it != table_.end());
    return -it->second;
  }

  int string_down(const Root& through, const Root& step) const {
    int p = 0;
    Root r = through - step;
    while (rs_.is_root(r)) {
      ++p;
      r = r - step;
    }
    return p;
  }

  void compute_pair(int i, int j, int g, int extraspecial) {
    const auto& pos = rs_.positive_roots();
    const Root &a = pos[i], &b = pos[j], &sum = pos[g];
    const int p = string_down(b, a);
    Int value;
    if (i == extraspecial) {
      value = p + 1;
    } else {
      const Root a1 = pos[extraspecial];
      const Root b1 = sum - a1;
      Rat t = 0;
      if (rs_.is_root(b1 - a))
        t += n_signed(b1, a.negated()) * n_signed(a1, b.negated()) / rs_.inner(b1 - a, b1 - a);
      if (rs_.is_root(a1 - a))
        t += n_signed(a.negated(), a1) * n_signed(b1, b.negated()) / rs_.inner(a1 - a, a1 - a);
      Rat n = rs_.inner(sum, sum) * t / n_signed(a1, b1);
      n.canonicalize();
      if (n.get_den() != 1)
        throw InternalError("structure constant not integral for pair " + a.to_string() + ", " + b.to_string());
      value = n.get_num();
    }
    if (abs(value) != p + 1)
      throw InternalError("structure constant magnitude mismatch at " + a.to_string() + " + " + b.to_string());
    table_[{i, j}] = value;
  }

  const RootSystem& rs_;
  std::map<std::pair<int, int>, Int> table_;
};

}  // namespace

Algebra Algebra::chevalley(const RootSystem& rs) {
  Algebra alg;
  alg.rs_ = std::make_shared<RootSystem>(rs);
  const RootSystem& r = *alg.rs_;
  const int n = r.rank();
  const int np = static_cast<int>(r.positive_roots().size());
  const int d = n + 2 * np;
  alg.cartan_count_ = n;

  alg.labels_.resize(d);
  for (int i = 0; i < n; ++i) alg.labels_[i] = {BasisLabel::Kind::Cartan, i + 1, {}};
  for (int k = 0; k < np; ++k) {
    alg.labels_[n + k] = {BasisLabel::Kind::RootVector, 0, r.positive_roots()[k]};
    alg.labels_[n + np + k] = {BasisLabel::Kind::RootVector, 0, r.positive_roots()[k].negated()};
  }

  ChevalleyConstants constants(r);

  // coroot gamma^vee over h_1..h_n: integer coefficients m_i (a_i,a_i)/(gamma,gamma)
  auto coroot = [&](const Root& gamma) {
    SparseVec v;
    const Rat norm = r.inner(gamma, gamma);
    for (int i = 0; i < n; ++i) {
      if (gamma.coeffs[i] == 0) continue;
      Rat c = Rat(gamma.coeffs[i]) * r.simple_norm(i) / norm;
      c.canonicalize();
      if (c.get_den() != 1) throw InternalError("coroot coefficient not integral for " + gamma.to_string());
      v.emplace_back(i, c);
    }
    return v;
  };

  alg.table_.assign(static_cast<std::size_t>(d) * d, SparseVec{});
  auto set_pair = [&](int i, int j, SparseVec v) {
    alg.table_[static_cast<std::size_t>(j) * d + i] = negated(v);
    alg.table_[static_cast<std::size_t>(i) * d + j] = std::move(v);
  };

  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const BasisLabel &li = alg.labels_[i], &lj = alg.labels_[j];
      if (li.kind == BasisLabel::Kind::Cartan && lj.kind == BasisLabel::Kind::Cartan) continue;
      if (li.kind == BasisLabel::Kind::Cartan) {
        const int pairing = r.simple_pairing(lj.root, li.cartan_index - 1);
        if (pairing != 0) set_pair(i, j, {{j, Rat(pairing)}});
        continue;
      }
      // two root vectors
      const Root sum = li.root + lj.root;
      if (std::all_of(sum.coeffs.begin(), sum.coeffs.end(), [](int c) { return c == 0; })) {
        set_pair(i, j, coroot(li.root));  // li.root is the positive one (basis order)
        continue;
      }
      if (r.is_root(sum)) {
        Rat c = constants.n_signed(li.root, lj.root);
        c.canonicalize();
        if (c.get_den() != 1) throw InternalError("non-integral bracket constant");
        const int target = alg.root_vector_index_internal(sum);
        set_pair(i, j, {{target, c}});
      }
    }
  }

  alg.finalize();
  return alg;
}

Algebra Algebra::gl(int n) {
  if (n < 1) throw InvalidArgument("gl: n must be >= 1");
  Algebra alg;
  alg.gl_n_ = n;
  alg.cartan_count_ = n;
  const int d = n * n;
  alg.labels_.resize(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BasisLabel& l = alg.labels_[i * n + j];
      if (i == j) {
        l = {BasisLabel::Kind::Cartan, i + 1, {}};
      } else {
        // eps_{i+1} - eps_{j+1} on the A_{n-1} simple basis
        Root rt;
        rt.coeffs.assign(n - 1, 0);
        for (int k = std::min(i, j); k < std::max(i, j); ++k) rt.coeffs[k] = (i < j) ? 1 : -1;
        l = {BasisLabel::Kind::RootVector, 0, rt};
      }
    }

  alg.table_.assign(static_cast<std::size_t>(d) * d, SparseVec{});
  auto unit = [n](int i, int j) { return i * n + j; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          // [E_ab, E_ce] = delta_bc E_ae - delta_ea E_cb
          std::map<int, Rat> acc;
          if (b == c) acc[unit(a, e)] += 1;
          if (e == a) acc[unit(c, b)] -= 1;
          SparseVec v;
          for (auto& [k, coeff] : acc)
            if (coeff != 0) v.emplace_back(k, coeff);
          alg.table_[static_cast<std::size_t>(unit(a, b)) * d + unit(c, e)] = std::move(v);
        }

  alg.finalize();
  return alg;
}

int Algebra::cartan_basis_index(int i) const {
  if (gl_n_ > 0) return i * gl_n_ + i;
  return i;
}

int Algebra::root_vector_index_internal(const Root& gamma) const {
  const int n = rs_->rank();
  const int np = static_cast<int>(rs_->positive_roots().size());
  int k = rs_->positive_index(gamma);
  if (k >= 0) return n + k;
  k = rs_->positive_index(gamma.negated());
  if (k >= 0) return n + np + k;
  return -1;
}

int Algebra::root_vector_index(const Root& gamma) const {
  if (!rs_) return -1;
  return root_vector_index_internal(gamma);
}

int Algebra::gl_unit_index(int i, int j) const {
  if (gl_n_ == 0) throw InvalidArgument("gl_unit_index: not a gl algebra");
  return i * gl_n_ + j;
}

std::vector<Rat> Algebra::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw InvalidArgument("bracket: coefficient vector length does not match dimension");
  std::vector<Rat> out(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Rat c = x[i] * y[j];
      for (const auto& [k, e] : table(i, j)) out[k] += c * e;
    }
  }
  return out;
}

std::vector<Rat> Algebra::bracket_with_basis(const SparseVec& x, int k) const {
  std::vector<Rat> out(dim(), Rat(0));
  for (const auto& [t, c] : x)
    for (const auto& [u, e] : table(t, k)) out[u] += c * e;
  return out;
}

void Algebra::verify_antisymmetry() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      if (table(i, j) != negated(table(j, i)))
        throw InternalError("antisymmetry violated at [" + label(i).to_string() + ", " + label(j).to_string() + "]");
}

void Algebra::verify_jacobi(int i, int j, int k) const {
  const int d = dim();
  std::vector<Rat> acc(d, Rat(0));
  auto add = [&](const SparseVec& xy, int z) {
    for (const auto& [t, c] : xy)
      for (const auto& [u, e] : table(t, z)) acc[u] += c * e;
  };
  add(table(i, j), k);
  add(table(j, k), i);
  add(table(k, i), j);
  for (int u = 0; u < d; ++u)
    if (acc[u] != 0)
      throw InternalError("Jacobi identity fails on (" + label(i).to_string() + ", " + label(j).to_string() +
                          ", " + label(k).to_string() + ")");
}

namespace {

// shared fast path: scratch accumulator reset only where touched
struct JacobiChecker {
  const Algebra& alg;
  std::vector<Rat> acc;
  std::vector<int> touched;

  explicit JacobiChecker(const Algebra& a) : alg(a), acc(a.dim(), Rat(0)) {}

  void add(const SparseVec& xy, int z) {
    for (const auto& [t, c] : xy)
      for (const auto& [u, e] : alg.table(t, z)) {
        if (acc[u] == 0) touched.push_back(u);
        acc[u] += c * e;
      }
  }

  void check(int i, int j, int k) {
    add(alg.table(i, j), k);
    add(alg.table(j, k), i);
    add(alg.table(k, i), j);
    bool ok = true;
    for (int u : touched)
      if (acc[u] != 0) ok = false;
    for (int u : touched) acc[u] = 0;
    touched.clear();
    if (!ok)
      throw InternalError("Jacobi identity fails on (" + alg.label(i).to_string() + ", " +
                          alg.label(j).to_string() + ", " + alg.label(k).to_string() + ")");
  }
};

}  // namespace

void Algebra::verify_jacobi_exhaustive() const {
  const int d = dim();
  JacobiChecker checker(*this);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) checker.check(i, j, k);
}

void Algebra::verify_jacobi_sampled(std::size_t count, std::uint64_t seed) const {
  const int d = dim();
  JacobiChecker checker(*this);
  Rng rng(seed);
  for (std::size_t s = 0; s < count; ++s) {
    int i = static_cast<int>(rng.uniform(0, d - 1));
    int j = static_cast<int>(rng.uniform(0, d - 1));
    int k = static_cast<int>(rng.uniform(0, d - 1));
    checker.check(i, j, k);
  }
}

void Algebra::finalize() {
  verify_antisymmetry();
  if (dim() <= 60)
    verify_jacobi_exhaustive();
  else
    verify_jacobi_sampled(100000, 0x5ea311edULL + static_cast<std::uint64_t>(dim()));
}

MatQ Algebra::killing_matrix() const {
  const int d = dim();
  MatQ k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat tr = 0;
      for (int b = 0; b < d; ++b) {
        // coefficient of x_b in [x_i, [x_j, x_b]]
        for (const auto& [t, c] : table(j, b))
          for (const auto& [u, e] : table(i, t))
            if (u == b) tr += c * e;
      }
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

Subalgebra::Subalgebra(const Algebra& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int m : members_)
    if (m < 0 || m >= parent.dim()) throw InvalidArgument("Subalgebra: member index out of range");

  local_of_parent_.assign(parent.dim(), -1);
  for (int l = 0; l < dim(); ++l) local_of_parent_[members_[l]] = l;

  const int d = dim();
  table_.assign(static_cast<std::size_t>(d) * d, SparseVec{});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const SparseVec& pv = parent.table(members_[i], members_[j]);
      SparseVec lv;
      for (const auto& [t, c] : pv) {
        const int l = local_of_parent_[t];
        if (l < 0)
          throw InvalidArgument("selection not closed: [" + parent.label(members_[i]).to_string() + ", " +
                                parent.label(members_[j]).to_string() + "] has a component on " +
                                parent.label(t).to_string());
        lv.emplace_back(l, c);
      }
      table_[static_cast<std::size_t>(i) * d + j] = std::move(lv);
    }
}

int Subalgebra::local_index(int parent) const {
  if (parent < 0 || parent >= static_cast<int>(local_of_parent_.size())) return -1;
  return local_of_parent_[parent];
}

std::vector<Rat> Subalgebra::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw InvalidArgument("Subalgebra::bracket: length mismatch");
  std::vector<Rat> out(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Rat c = x[i] * y[j];
      for (const auto& [k, e] : table(i, j)) out[k] += c * e;
    }
  }
  return out;
}

Subalgebra borel_subalgebra(const Algebra& alg) {
  std::vector<int> members;
  for (int i = 0; i < alg.dim(); ++i) {
    const BasisLabel& l = alg.label(i);
    if (l.kind == BasisLabel::Kind::Cartan || l.root.is_positive()) members.push_back(i);
  }
  return Subalgebra(alg, std::move(members));
}

Subalgebra parabolic_subalgebra(const Algebra& alg, const std::set<int>& marked) {
  std::vector<int> members;
  for (int i = 0; i < alg.dim(); ++i) {
    const BasisLabel& l = alg.label(i);
    if (l.kind == BasisLabel::Kind::Cartan || l.root.is_positive()) {
      members.push_back(i);
      continue;
    }
    int deg = 0;
    for (int m : marked) deg += l.root.coeffs[m];
    if (deg == 0) members.push_back(i);  // negative root vector inside the Levi
  }
  return Subalgebra(alg, std::move(members));
}

std::optional<std::vector<Rat>> grading_element(const Algebra& alg, const std::set<int>& marked) {
  const RootSystem* rs = alg.root_system();
  if (!rs) throw InvalidArgument("grading_element: algebra has no root system");
  const int n = rs->rank();
  MatQ a(n, n);
  std::vector<Rat> t(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a.at(i, j) = rs->cartan(j, i);  // alpha_i(h_j)
    if (marked.count(i)) t[i] = 1;
  }
  auto x = solve(a, t);
  if (!x) return std::nullopt;
  // [x, e(gamma)] = deg(gamma) e(gamma) with deg = sum of marked coefficients
  for (const Root& g : rs->positive_roots()) {
    Rat val = 0;
    for (int j = 0; j < n; ++j) val += (*x)[j] * rs->simple_pairing(g, j);
    Rat deg = 0;
    for (int m : marked) deg += g.coeffs[m];
    if (val != deg)
      throw InternalError("grading element does not grade e" + g.to_string());
  }
  return x;
}

Inv0Report check_inv0_hypotheses(const Algebra& alg, const std::set<int>& marked) {
  const RootSystem* rs = alg.root_system();
  if (!rs) throw InvalidArgument("check_inv0_hypotheses: algebra has no root system");
  Inv0Report rep;
  rep.proper = !marked.empty();
  if (!rep.proper) return rep;  // p = g, p^nil = 0: degenerate

  auto x = grading_element(alg, marked);
  rep.grading_element_exists = x.has_value();
  if (!x) return rep;

  // p(0): Cartans and root vectors of degree 0; p^nil: degree > 0
  auto degree = [&](const Root& g) {
    int deg = 0;
    for (int m : marked) deg += g.coeffs[m];
    return deg;
  };
  std::vector<int> levi, nil;
  for (int i = 0; i < alg.dim(); ++i) {
    const BasisLabel& l = alg.label(i);
    if (l.kind == BasisLabel::Kind::Cartan) {
      levi.push_back(i);
    } else {
      const int deg = degree(l.root);
      if (deg == 0) levi.push_back(i);
      if (deg > 0) nil.push_back(i);
    }
  }

  // kernel of ad: p(0) -> End(p^nil); stack the action matrices column by column
  std::vector<int> nil_pos(alg.dim(), -1);
  for (std::size_t k = 0; k < nil.size(); ++k) nil_pos[nil[k]] = static_cast<int>(k);
  MatQ action(nil.size() * nil.size(), levi.size());
  for (std::size_t col = 0; col < levi.size(); ++col)
    for (std::size_t k = 0; k < nil.size(); ++k)
      for (const auto& [t, c] : alg.table(levi[col], nil[k])) {
        const int row = nil_pos[t];
        if (row < 0) throw InternalError("check_inv0_hypotheses: action leaves the nilradical");
        action.at(static_cast<std::size_t>(row) * nil.size() + k, col) = c;
      }
  const int rk = rank(action);
  rep.kernel_dim = static_cast<int>(levi.size()) - rk;
  rep.faithful = rep.kernel_dim == 0;
  return rep;
}

}  // namespace seaweed
