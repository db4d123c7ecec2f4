// Seaweed subalgebras: composition pairs (a|b) for gl_n and standard seaweeds
// given by two simple-root subsets, their realization as structure-constant
// subalgebras, and the inductive index computations for gl, sp and (when the
// parity conditions hold) so parabolics.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chevalley.hpp"

namespace seaweed {

struct Composition {
  std::vector<int> parts;

  int total() const;
  std::string to_string() const;  // "2,1,1"
  bool operator==(const Composition&) const = default;
};

// parses "3,2,2"; throws InvalidArgument on anything but positive integers
Composition parse_composition(const std::string& text);

// all 2^(n-1) compositions of n, in cut-mask order
std::vector<Composition> all_compositions(int n);

struct GlSeaweed {
  Composition a;
  Composition b;

  int n() const { return a.total(); }
  std::string to_string() const;  // "s(2,1|3)"
};

GlSeaweed make_gl_seaweed(Composition a, Composition b);  // validates equal totals

enum class GlClass { Parabolic, Reductive, General };

GlClass classify(const GlSeaweed& s);

// Factor at every common proper prefix sum; the result is a list of seaweeds
// with no common proper prefix sums.
std::vector<GlSeaweed> split(const GlSeaweed& s);

// One reduction step: replaces the seaweed by the stabiliser seaweed of the
// open orbit on the abelian ideal (rank contribution zero, degree strictly
// smaller). Requires a_1 != b_1; the a_1 > b_1 case goes through the
// transpose symmetry s(a|b) ~ s(b|a).
GlSeaweed reduce_step(const GlSeaweed& s);

// Inductive index: split + reduce until everything is reductive; a reductive
// gl_c block contributes c.
long index_gl(const GlSeaweed& s);

// Parabolic of sp_{2n} missing the `marked` simple roots (1-based, type C_n):
// each step peels r = min(marked) into floor(r/2) plus a parabolic of a
// smaller sp; unmarked sp_{2m} contributes m.
long index_parabolic_sp(int n, const std::set<int>& marked);

// Parabolic of so_N, N = 2n+1 (series B) or 2n (series D). Applies only when
// every marked index is even, with the D_n adjustment at indices n-1, n
// (acceptable iff n is even); otherwise nullopt and the caller falls back to
// the rank oracle.
std::optional<long> index_parabolic_so(Series series, int n, const std::set<int>& marked);

// Matrix positions of s(a|b) inside gl_n (row-major E_ij indices).
std::vector<int> gl_staircase_members(const GlSeaweed& s, const Algebra& gl);

Subalgebra realize_gl(const Algebra& gl, const GlSeaweed& s);

// Standard seaweed p ∩ p' with p ⊇ b (Levi = upper_levi) and p' ⊇ b⁻
// (Levi = lower_levi); subsets are 0-based simple-root indices.
Subalgebra realize_standard(const Algebra& alg, const std::set<int>& upper_levi,
                            const std::set<int>& lower_levi);

// composition of n with cuts at the (1-based, strictly increasing) marked
// positions; marked ⊆ {1..n-1}
Composition composition_from_marked(int n, const std::set<int>& marked);

}  // namespace seaweed
