// Exact linear algebra on the coadjoint representation: Kirillov-form
// matrices, the randomized index oracle (exact ranks at random integer
// functionals), stabiliser kernels, orbit dimensions.
#pragma once

#include <cstdint>
#include <vector>

#include "chevalley.hpp"
#include "matq.hpp"

namespace seaweed {

// A linear functional in dual-basis coordinates on a subalgebra.
using Functional = std::vector<Rat>;

struct OracleOptions {
  int trials = 8;
  long coeff_bound = 10000;
  std::uint64_t seed = 1;
};

struct OracleResult {
  int index = -1;     // dim - max rank seen
  int max_rank = -1;  // even
  Functional witness;
};

// M_ij = xi([x_i, x_j]); exactly antisymmetric.
MatQ kirillov_matrix(const Subalgebra& sub, const Functional& xi);

// min over random integer functionals of the kernel dimension; equals the
// index with overwhelming probability (rank is maximal off a proper closed
// set). Deterministic for a fixed seed.
OracleResult index_oracle(const Subalgebra& sub, const OracleOptions& opts = {});

// exact kernel of the Kirillov form, rows in canonical reduced echelon form
MatQ stabiliser(const Subalgebra& sub, const Functional& xi);

// rank of the Kirillov form = dimension of the coadjoint orbit through xi
int orbit_dimension(const Subalgebra& sub, const Functional& xi);

// rank of {ad*(x_i)·xi} ∪ extra_directions; equals dim(sub) iff the swept
// set is dense
int tangent_rank(const Subalgebra& sub, const Functional& xi,
                 const std::vector<Functional>& extra_directions);

}  // namespace seaweed
