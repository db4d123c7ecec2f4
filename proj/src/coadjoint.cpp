#include "coadjoint.hpp"

#include "common.hpp"

namespace seaweed {

MatQ kirillov_matrix(const Subalgebra& sub, const Functional& xi) {
  const int d = sub.dim();
  if (static_cast<int>(xi.size()) != d)
    throw InvalidArgument("kirillov_matrix: functional length does not match subalgebra dimension");
  MatQ m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Rat v = 0;
      for (const auto& [k, c] : sub.table(i, j)) v += c * xi[k];
      if (v != 0) {
        m.at(i, j) = v;
        m.at(j, i) = -v;
      }
    }
  return m;
}

OracleResult index_oracle(const Subalgebra& sub, const OracleOptions& opts) {
  if (opts.trials < 1 || opts.coeff_bound < 1)
    throw InvalidArgument("index_oracle: trials and coeff_bound must be >= 1");
  const int d = sub.dim();
  OracleResult best;
  for (int t = 0; t < opts.trials; ++t) {
    Rng rng = Rng::for_trial(opts.seed, static_cast<std::uint64_t>(t));
    Functional xi(d);
    for (int i = 0; i < d; ++i) xi[i] = Rat(rng.uniform(-opts.coeff_bound, opts.coeff_bound));
    const int r = rank(kirillov_matrix(sub, xi));
    if (r % 2 != 0) throw InternalError("index_oracle: odd Kirillov rank");
    if (r > best.max_rank) {
      best.max_rank = r;
      best.witness = std::move(xi);
    }
  }
  best.index = d - best.max_rank;
  return best;
}

MatQ stabiliser(const Subalgebra& sub, const Functional& xi) {
  return kernel_basis(kirillov_matrix(sub, xi));
}

int orbit_dimension(const Subalgebra& sub, const Functional& xi) {
  return rank(kirillov_matrix(sub, xi));
}

int tangent_rank(const Subalgebra& sub, const Functional& xi,
                 const std::vector<Functional>& extra_directions) {
  MatQ m = kirillov_matrix(sub, xi);
  for (const Functional& f : extra_directions) {
    if (f.size() != static_cast<std::size_t>(sub.dim()))
      throw InvalidArgument("tangent_rank: direction length does not match subalgebra dimension");
    m.append_row(f);
  }
  return rank(m);
}

}  // namespace seaweed
