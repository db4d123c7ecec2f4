#include "cascade.hpp"

#include <sstream>

#include "common.hpp"

namespace seaweed {

namespace {

void cascade_walk(const RootSystem& rs, const std::vector<Root>& carrier, int parent,
                  CascadePoset& out) {
  // carrier is an irreducible subsystem; its highest root joins the string
  for (const RootSystem::Component& comp : rs.irreducible_components(carrier)) {
    const int idx = out.size();
    out.roots.push_back(comp.highest);
    out.parent.push_back(parent);
    std::vector<Root> orth;
    for (const Root& g : comp.roots)
      if (rs.inner(g, comp.highest) == 0) orth.push_back(g);
    if (!orth.empty()) cascade_walk(rs, orth, idx, out);
  }
}

}  // namespace

CascadePoset build_cascade(const RootSystem& rs) {
  CascadePoset poset;
  cascade_walk(rs, rs.all_roots(), -1, poset);
  verify_strong_orthogonality(rs, poset);
  return poset;
}

void verify_strong_orthogonality(const RootSystem& rs, const CascadePoset& poset) {
  for (int i = 0; i < poset.size(); ++i)
    for (int j = i + 1; j < poset.size(); ++j) {
      const Root &a = poset.roots[i], &b = poset.roots[j];
      if (rs.inner(a, b) != 0 || rs.is_root(a + b) || rs.is_root(a - b))
        throw InternalError("cascade roots " + a.to_string() + ", " + b.to_string() +
                            " are not strongly orthogonal");
    }
}

BorelIndexResult borel_index(const RootSystem& rs) {
  const CascadePoset poset = build_cascade(rs);
  const int n = rs.rank(), l = poset.size();
  MatQ constraints(l, n);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < n; ++j) constraints.at(i, j) = rs.simple_pairing(poset.roots[i], j);  // mu_i(h_j)
  BorelIndexResult res;
  res.l = l;
  res.ind_b = n - l;
  res.h_basis = kernel_basis(constraints);
  if (static_cast<int>(res.h_basis.rows()) != n - l)
    throw InternalError("cascade roots of " + rs.type_name() + " are linearly dependent");
  return res;
}

Functional xi_nought(const CascadePoset& poset, const Subalgebra& borel) {
  Functional xi(borel.dim(), Rat(0));
  for (const Root& mu : poset.roots) {
    const int p = borel.parent().root_vector_index(mu);
    const int l = p < 0 ? -1 : borel.local_index(p);
    if (l < 0) throw InvalidArgument("xi_nought: cascade root vector e" + mu.to_string() + " not in subalgebra");
    xi[l] = 1;
  }
  return xi;
}

std::optional<AlphaExpansion> alpha_expansion(const RootSystem& rs) {
  const auto attach = rs.theta_attachment();
  if (!attach) return std::nullopt;

  const CascadePoset poset = build_cascade(rs);
  const int n = rs.rank(), l = poset.size();
  const Root alpha = rs.simple_root(*attach);

  // alpha lies in the span of the (independent) cascade roots; solve exactly
  MatQ a(n, l);
  std::vector<Rat> rhs(n);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < n; ++i) a.at(i, j) = poset.roots[j].coeffs[i];
  for (int i = 0; i < n; ++i) rhs[i] = alpha.coeffs[i];
  auto sol = solve(a, rhs);
  if (!sol) throw InternalError("attachment root is not in the span of the cascade for " + rs.type_name());

  AlphaExpansion ex;
  ex.alpha = alpha;
  ex.k = *sol;
  for (int i = 1; i < l; ++i)
    if (ex.k[i] != 0) ex.I.push_back(i);

  // coefficient identities, all exact
  if (ex.k[0] != Rat(1, 2)) throw InternalError("alpha expansion: k_1 != 1/2 for " + rs.type_name());
  Rat sum = 0;
  for (const Rat& k : ex.k) sum += k;
  if (sum != -1) throw InternalError("alpha expansion: sum k_i != -1 for " + rs.type_name());
  if (ex.I.size() > 3) throw InternalError("alpha expansion: |I| > 3 for " + rs.type_name());
  const Rat alpha_norm = rs.inner(alpha, alpha);
  for (int i : ex.I) {
    const Rat expected = -alpha_norm / (2 * rs.inner(poset.roots[i], poset.roots[i]));
    if (ex.k[i] != expected || ex.k[i] >= 0)
      throw InternalError("alpha expansion: coefficient pattern violated for " + rs.type_name());
  }
  // reconstruction: alpha = (theta - sum_I (|alpha|/|mu_i|) mu_i) / 2, i.e. theta/2 + sum_I k_i mu_i
  {
    std::vector<Rat> recon(n);
    for (int i = 0; i < n; ++i) recon[i] = Rat(poset.roots[0].coeffs[i]) / 2;
    for (int i : ex.I)
      for (int c = 0; c < n; ++c) recon[c] += ex.k[i] * poset.roots[i].coeffs[c];
    for (int c = 0; c < n; ++c)
      if (recon[c] != alpha.coeffs[c])
        throw InternalError("alpha expansion: reconstruction identity fails for " + rs.type_name());
  }
  return ex;
}

std::string emit_hasse_dot(const RootSystem& rs, const CascadePoset& poset) {
  std::ostringstream os;
  os << "digraph cascade_" << rs.type_name() << " {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box];\n";
  for (int i = 0; i < poset.size(); ++i)
    os << "  mu" << i + 1 << " [label=\"mu" << i + 1 << " " << poset.roots[i].to_string() << "\"];\n";
  for (int i = 1; i < poset.size(); ++i)
    os << "  mu" << poset.parent[i] + 1 << " -> mu" << i + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_hasse_json(const RootSystem& rs, const CascadePoset& poset) {
  std::ostringstream os;
  os << "{\"series\":\"" << series_to_char(rs.series()) << "\",\"rank\":" << rs.rank() << ",\"roots\":[";
  for (int i = 0; i < poset.size(); ++i) {
    if (i) os << ",";
    os << "{\"index\":" << i + 1 << ",\"coeffs\":[";
    for (std::size_t c = 0; c < poset.roots[i].coeffs.size(); ++c)
      os << (c ? "," : "") << poset.roots[i].coeffs[c];
    os << "],\"parent\":";
    if (poset.parent[i] < 0)
      os << "null";
    else
      os << poset.parent[i] + 1;
    os << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace seaweed
