// Verification pipeline for the minimal-parabolic counterexamples: the
// one-parameter functional family xi_a on p = b ⊕ g_{-α}, exact stabiliser
// kernels with support checks, the eigenvector and bracket obstructions, the
// density tangent rank, and the two explicit matrix-model invariant checks.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cascade.hpp"
#include "chevalley.hpp"
#include "coadjoint.hpp"

namespace seaweed {

struct Counterexample {
  const Algebra* alg = nullptr;
  Subalgebra p;                 // t ⊕ u+ ⊕ g_{-alpha}
  Root alpha;                   // attachment root
  CascadePoset cascade;
  std::vector<int> I;           // 0-based cascade indices with k_i != 0, i >= 1
  MatQ h_basis;                 // rows over h_1..h_n
  int neg_alpha_local = -1;     // local index of e(-alpha)
  std::vector<int> mu_local;    // local indices of e(mu_i)
  std::vector<int> support_local;  // predicted kernel support (local indices)
};

// throws InvalidArgument for series A and C (theta must be a fundamental weight)
Counterexample build_counterexample(const RootSystem& rs, const Algebra& alg);

// xi_a = sum_i xi(-mu_i) + a xi(alpha), plus an optional h-offset x
Functional xi_a(const Counterexample& ce, const Rat& a);
Functional xi_a_with_h(const Counterexample& ce, const Rat& a, const std::vector<Rat>& h_coeffs);

struct SampleReport {
  Rat a;
  int stabiliser_dim = -1;
  bool dim_ok = false;       // stabiliser dim == 1 + dim h
  bool h_contained = false;  // h ⊆ p_xi
  bool support_ok = false;   // kernel generator mod h supported on the predicted set
  bool mu_part_ok = false;   // mu-coordinates vanish iff a == 0
  bool eigen_ok = false;     // [h', v] = v for the common grading element h'
  bool tauvel_yu_ok = false; // [p, p_xi] ∩ p_xi != 0

  bool all_ok() const { return dim_ok && h_contained && support_ok && mu_part_ok && eigen_ok && tauvel_yu_ok; }
};

SampleReport verify_sample(const Counterexample& ce, const Rat& a);

// tangent rank of P·L at xi_0 with the extra directions xi(alpha) and h;
// density holds iff this equals dim p
int density_rank(const Counterexample& ce);

struct CounterexampleReport {
  Series series;
  int rank = 0;
  int dim_p = 0;
  int ind_b = 0;
  int ind_p = -1;
  bool ind_relation_ok = false;  // ind_p == ind_b + 1 (oracle)
  std::vector<SampleReport> samples;
  int density = -1;
  bool density_ok = false;
  bool confirmed = false;
};

// default a-samples: 8 distinct rationals including 0
std::vector<Rat> default_samples(int count = 8);

CounterexampleReport run_counterexample(const RootSystem& rs, const Algebra& alg,
                                        const std::vector<Rat>& samples, const OracleOptions& opts = {});

// Example models on the dual of the maximal parabolic of gl_{2n} with Levi
// gl_n ⊕ gl_n: exact invariance of tr(m + r^{-1} n r)^i under random group
// elements. False on any violated identity.
bool check_matrix_invariants_gl(int n, int trials, std::uint64_t seed);

// sp_{2n} analogue with Levi gl_n: tr(m - r^{-1} m^t r)^{2i} invariant and
// odd-power traces identically zero.
bool check_matrix_invariants_sp(int n, int trials, std::uint64_t seed);

}  // namespace seaweed
