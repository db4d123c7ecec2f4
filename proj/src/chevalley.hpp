// Simple Lie algebras as exact structure-constant tables: Chevalley basis
// {h_1..h_n} ∪ {e(γ) : γ ∈ Δ} with integer constants fixed by the
// extraspecial-pair sign convention, plus the gl_n matrix-unit algebra.
// Antisymmetry and the Jacobi identity are self-checked at build time.
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "matq.hpp"
#include "rootsys.hpp"

namespace seaweed {

struct BasisLabel {
  enum class Kind { Cartan, RootVector };
  Kind kind;
  int cartan_index = 0;  // 1-based, for Kind::Cartan
  Root root;             // for Kind::RootVector

  std::string to_string() const;
};

// one bracket value as a sparse coefficient vector over the basis
using SparseVec = std::vector<std::pair<int, Rat>>;

class Algebra {
 public:
  // Chevalley construction over a root system. Jacobi is verified before
  // return: exhaustively for dim <= 60, on 10^5 deterministic random triples
  // beyond that.
  static Algebra chevalley(const RootSystem& rs);

  // gl_n on the matrix units E_ij (row-major basis order).
  static Algebra gl(int n);

  int dim() const { return static_cast<int>(labels_.size()); }
  int cartan_count() const { return cartan_count_; }
  const BasisLabel& label(int i) const { return labels_[i]; }
  const SparseVec& table(int i, int j) const { return table_[i * dim() + j]; }

  // nullptr for the gl algebra
  const RootSystem* root_system() const { return rs_.get(); }

  int cartan_basis_index(int i) const;      // 0-based Cartan i -> basis index
  int root_vector_index(const Root& gamma) const;  // -1 if absent
  int gl_unit_index(int i, int j) const;    // gl only, 0-based matrix position

  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  std::vector<Rat> bracket_with_basis(const SparseVec& x, int k) const;

  void verify_antisymmetry() const;
  void verify_jacobi(int i, int j, int k) const;  // throws InternalError naming the triple
  void verify_jacobi_exhaustive() const;
  void verify_jacobi_sampled(std::size_t count, std::uint64_t seed) const;

  MatQ killing_matrix() const;  // κ(x,y) = tr(ad x ∘ ad y)

 private:
  Algebra() = default;
  void finalize();  // self-checks
  int root_vector_index_internal(const Root& gamma) const;

  int cartan_count_ = 0;
  int gl_n_ = 0;
  std::vector<BasisLabel> labels_;
  std::vector<SparseVec> table_;
  std::shared_ptr<const RootSystem> rs_;
};

// A closed selection of basis elements of a parent algebra, with the
// restricted structure table.
class Subalgebra {
 public:
  // throws InvalidArgument listing the first offending bracket when the
  // selection is not closed
  Subalgebra(const Algebra& parent, std::vector<int> members);

  const Algebra& parent() const { return *parent_; }
  int dim() const { return static_cast<int>(members_.size()); }
  int parent_index(int local) const { return members_[local]; }
  int local_index(int parent) const;  // -1 when not a member
  const std::vector<int>& members() const { return members_; }

  const SparseVec& table(int i, int j) const { return table_[i * dim() + j]; }
  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

 private:
  const Algebra* parent_;
  std::vector<int> members_;
  std::vector<int> local_of_parent_;
  std::vector<SparseVec> table_;  // local indices
};

// t ⊕ u+ as a Subalgebra
Subalgebra borel_subalgebra(const Algebra& alg);

// standard parabolic p ⊇ b whose Levi omits exactly the `marked` simple roots
// (0-based indices)
Subalgebra parabolic_subalgebra(const Algebra& alg, const std::set<int>& marked);

// Cartan element x with alpha_i(x) = 1 for marked i and 0 otherwise, as
// coefficients over h_1..h_n; nullopt if the defining system is inconsistent.
std::optional<std::vector<Rat>> grading_element(const Algebra& alg, const std::set<int>& marked);

struct Inv0Report {
  bool proper = false;             // marked nonempty (p a proper parabolic)
  bool grading_element_exists = false;
  bool faithful = false;           // p^nil a faithful p(0)-module
  int kernel_dim = -1;             // of the p(0)-action on p^nil
};

// Hypothesis check backing the "no regular invariants on p*" conclusion:
// grading element present and p^nil faithful as a p(0)-module.
Inv0Report check_inv0_hypotheses(const Algebra& alg, const std::set<int>& marked);

}  // namespace seaweed
