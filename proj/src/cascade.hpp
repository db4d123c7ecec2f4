// Kostant's cascade of strongly orthogonal roots, the Borel index rk - l with
// the joint kernel h ⊂ t, the generic Borel functional, and the expansion of
// the attachment root over the cascade.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "coadjoint.hpp"
#include "matq.hpp"
#include "rootsys.hpp"

namespace seaweed {

struct CascadePoset {
  std::vector<Root> roots;  // mu_1 .. mu_l, mu_1 = theta
  std::vector<int> parent;  // 0-based; parent[0] = -1

  int size() const { return static_cast<int>(roots.size()); }
};

CascadePoset build_cascade(const RootSystem& rs);

// throws InternalError if any pair fails strong orthogonality
void verify_strong_orthogonality(const RootSystem& rs, const CascadePoset& poset);

struct BorelIndexResult {
  int l = 0;
  int ind_b = 0;   // rk - l
  MatQ h_basis;    // rows: exact basis of h = {x in t : mu_i(x) = 0} over h_1..h_n
};

BorelIndexResult borel_index(const RootSystem& rs);

// xi_0 on b = t ⊕ u+: the dual coordinate of each e(mu_i) set to 1
Functional xi_nought(const CascadePoset& poset, const Subalgebra& borel);

struct AlphaExpansion {
  Root alpha;
  std::vector<Rat> k;     // k_i for mu_i, i = 0..l-1
  std::vector<int> I;     // 0-based indices >= 1 with k_i != 0
};

// alpha = sum k_i mu_i for the attachment root; nullopt when theta is not
// fundamental (series A and C). Verifies k_1 = 1/2, sum k_i = -1, |I| <= 3,
// k_i = -(alpha,alpha)/(2 (mu_i,mu_i)) on I, and the reconstruction identity.
std::optional<AlphaExpansion> alpha_expansion(const RootSystem& rs);

std::string emit_hasse_dot(const RootSystem& rs, const CascadePoset& poset);
std::string emit_hasse_json(const RootSystem& rs, const CascadePoset& poset);

}  // namespace seaweed
