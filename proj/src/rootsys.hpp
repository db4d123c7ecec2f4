// Root-system combinatorics for the simple types A..G: Cartan data, the full
// set of roots as integer coefficient vectors on the simple basis, the
// W-invariant inner product (long roots normalized to squared length 2),
// highest roots and orthogonal-complement subsystems.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matq.hpp"

namespace seaweed {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Series series_from_char(char c);
char series_to_char(Series s);

// throws InvalidArgument naming the violated constraint
void validate_type(Series series, int rank);

// A root as its integer coefficient vector on the simple roots. Positive roots
// have all coefficients >= 0, negative roots all <= 0; mixed signs are not roots.
struct Root {
  std::vector<int> coeffs;

  int height() const;  // sum of coefficients (negative for negative roots)
  bool is_positive() const;
  Root negated() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  bool operator==(const Root& o) const = default;
  bool operator<(const Root& o) const;  // by height, then lexicographic
  std::string to_string() const;        // "(1,2,1,1)"
};

class RootSystem {
 public:
  RootSystem(Series series, int rank);  // throws InvalidArgument on bad (series, rank)

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string type_name() const;  // "D4"

  // cartan(i, j) = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const Rat& simple_norm(int i) const { return gram_[i][i]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::vector<Root> all_roots() const;
  Root simple_root(int i) const;  // 0-based

  Rat inner(const Root& x, const Root& y) const;
  // <x, alpha_i^vee>, always an integer for roots
  int simple_pairing(const Root& x, int i) const;
  // <x, y^vee> for a root y
  Rat pairing(const Root& x, const Root& y) const;

  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const;
  // index into positive_roots(), or -1
  int positive_index(const Root& r) const;

  Root reflect(const Root& x, int i) const;  // simple reflection s_i

  const Root& highest_root() const;

  // The unique simple root alpha with (theta, alpha) != 0 and (theta, alpha^vee) = 1,
  // when theta is a fundamental weight; nullopt otherwise (series A and C, plus B_2).
  std::optional<int> theta_attachment() const;

  // An irreducible subsystem: its roots, a freshly extracted simple system and
  // the highest root.
  struct Component {
    std::vector<Root> roots;    // closed under negation
    std::vector<Root> simples;  // indecomposable positive elements
    Root highest;
  };

  // All roots of `carrier` orthogonal to `pivot`, split into irreducible
  // components. `carrier` must be closed under negation and contain `pivot`.
  std::vector<Component> orthogonal_subsystem(const std::vector<Root>& carrier,
                                              const Root& pivot) const;

  // Decompose a negation-closed set of roots into irreducible components.
  std::vector<Component> irreducible_components(const std::vector<Root>& carrier) const;

 private:
  void build_gram();
  void generate_roots();

  Series series_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rat>> gram_;  // (alpha_i, alpha_j)
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> positive_index_;
};

}  // namespace seaweed
