#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chevalley.hpp"
#include "common.hpp"

using namespace seaweed;

namespace {

std::vector<Rat> basis_vector(const Algebra& alg, int i) {
  std::vector<Rat> v(alg.dim(), Rat(0));
  v[i] = 1;
  return v;
}

bool is_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

TEST_CASE("sl_2 relations") {
  RootSystem a1(Series::A, 1);
  Algebra alg = Algebra::chevalley(a1);
  REQUIRE(alg.dim() == 3);

  const int h = alg.cartan_basis_index(0);
  const int e = alg.root_vector_index(a1.simple_root(0));
  const int f = alg.root_vector_index(a1.simple_root(0).negated());

  // [e, f] = h, [h, e] = 2e, [h, f] = -2f
  CHECK(alg.table(e, f) == SparseVec{{h, Rat(1)}});
  CHECK(alg.table(h, e) == SparseVec{{e, Rat(2)}});
  CHECK(alg.table(h, f) == SparseVec{{f, Rat(-2)}});
}

TEST_CASE("dimensions of the mandated algebras") {
  CHECK(Algebra::chevalley(RootSystem(Series::D, 4)).dim() == 28);
  CHECK(Algebra::chevalley(RootSystem(Series::F, 4)).dim() == 52);
  CHECK(Algebra::chevalley(RootSystem(Series::G, 2)).dim() == 14);
  CHECK(Algebra::chevalley(RootSystem(Series::B, 3)).dim() == 21);
  CHECK(Algebra::gl(4).dim() == 16);
}

TEST_CASE("Cartan elements commute and act by the root pairing") {
  RootSystem d4(Series::D, 4);
  Algebra alg = Algebra::chevalley(d4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(alg.table(alg.cartan_basis_index(i), alg.cartan_basis_index(j)).empty());

  for (const Root& g : d4.positive_roots())
    for (int i = 0; i < 4; ++i) {
      const SparseVec& v = alg.table(alg.cartan_basis_index(i), alg.root_vector_index(g));
      const int pairing = d4.simple_pairing(g, i);
      if (pairing == 0) {
        CHECK(v.empty());
      } else {
        CHECK(v == SparseVec{{alg.root_vector_index(g), Rat(pairing)}});
      }
    }
}

TEST_CASE("bracket lands in the right root space") {
  RootSystem a2(Series::A, 2);
  Algebra alg = Algebra::chevalley(a2);
  const Root theta = a2.highest_root();

  const SparseVec& v = alg.table(alg.root_vector_index(a2.simple_root(0)),
                                 alg.root_vector_index(a2.simple_root(1)));
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == alg.root_vector_index(theta));
  CHECK((v[0].second == 1 || v[0].second == -1));

  // [e(theta), e(-theta)] is the coroot h_theta with theta(h_theta) = 2
  std::vector<Rat> htheta = alg.bracket(basis_vector(alg, alg.root_vector_index(theta)),
                                        basis_vector(alg, alg.root_vector_index(theta.negated())));
  Rat theta_of_h = 0;
  for (int i = 0; i < 2; ++i) theta_of_h += htheta[alg.cartan_basis_index(i)] * a2.simple_pairing(theta, i);
  CHECK(theta_of_h == 2);
}

TEST_CASE("bracket rejects mismatched lengths") {
  Algebra alg = Algebra::gl(2);
  CHECK_THROWS_AS(alg.bracket(std::vector<Rat>(3, Rat(1)), std::vector<Rat>(4, Rat(1))), InvalidArgument);
}

TEST_CASE("structure constants stay within the root-space grading") {
  // [g_gamma, g_delta] ⊆ g_{gamma+delta}: Cartan when delta = -gamma, zero when
  // gamma+delta is neither a root nor 0
  for (auto [s, n] : std::vector<std::pair<Series, int>>{{Series::B, 2}, {Series::G, 2}, {Series::C, 3}}) {
    RootSystem rs(s, n);
    Algebra alg = Algebra::chevalley(rs);
    const auto all = rs.all_roots();
    for (const Root& x : all)
      for (const Root& y : all) {
        const SparseVec& v = alg.table(alg.root_vector_index(x), alg.root_vector_index(y));
        const Root sum = x + y;
        if (std::all_of(sum.coeffs.begin(), sum.coeffs.end(), [](int c) { return c == 0; })) {
          CHECK_FALSE(v.empty());
          for (const auto& [k, c] : v) CHECK(alg.label(k).kind == BasisLabel::Kind::Cartan);
        } else if (rs.is_root(sum)) {
          REQUIRE(v.size() == 1);
          CHECK(v[0].first == alg.root_vector_index(sum));
        } else {
          CHECK(v.empty());
        }
      }
  }
}

TEST_CASE("Jacobi and antisymmetry self-checks pass on construction") {
  // finalize() already ran for each of these; re-run the exhaustive check once
  Algebra g2 = Algebra::chevalley(RootSystem(Series::G, 2));
  CHECK_NOTHROW(g2.verify_antisymmetry());
  CHECK_NOTHROW(g2.verify_jacobi_exhaustive());
  Algebra gl3 = Algebra::gl(3);
  CHECK_NOTHROW(gl3.verify_jacobi_exhaustive());
}

TEST_CASE("Killing form is invariant and nondegenerate") {
  for (auto [s, n] : std::vector<std::pair<Series, int>>{{Series::A, 2}, {Series::B, 2}, {Series::G, 2}}) {
    RootSystem rs(s, n);
    Algebra alg = Algebra::chevalley(rs);
    MatQ k = alg.killing_matrix();
    CHECK(rank(k) == alg.dim());

    // kappa([x,y],z) = kappa(x,[y,z]) on a spread of basis triples
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      const int x = static_cast<int>(rng.uniform(0, alg.dim() - 1));
      const int y = static_cast<int>(rng.uniform(0, alg.dim() - 1));
      const int z = static_cast<int>(rng.uniform(0, alg.dim() - 1));
      Rat lhs = 0, rhs = 0;
      for (const auto& [u, c] : alg.table(x, y)) lhs += c * k.at(u, z);
      for (const auto& [u, c] : alg.table(y, z)) rhs += c * k.at(x, u);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("take_subalgebra full member set is the identity") {
  Algebra alg = Algebra::chevalley(RootSystem(Series::A, 2));
  std::vector<int> all(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) all[i] = i;
  Subalgebra sub(alg, all);
  CHECK(sub.dim() == alg.dim());
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) CHECK(sub.table(i, j) == alg.table(i, j));
}

TEST_CASE("Borel of A_2 is 5-dimensional and closed") {
  Algebra alg = Algebra::chevalley(RootSystem(Series::A, 2));
  Subalgebra b = borel_subalgebra(alg);
  CHECK(b.dim() == 5);
}

TEST_CASE("the 17-dimensional minimal parabolic of so_8") {
  RootSystem d4(Series::D, 4);
  Algebra alg = Algebra::chevalley(d4);
  Subalgebra p = parabolic_subalgebra(alg, {0, 2, 3});  // Levi = {alpha_2} only
  CHECK(p.dim() == 17);
}

TEST_CASE("non-closed selections are rejected naming the offending bracket") {
  RootSystem a1(Series::A, 1);
  Algebra alg = Algebra::chevalley(a1);
  const int e = alg.root_vector_index(a1.simple_root(0));
  const int f = alg.root_vector_index(a1.simple_root(0).negated());
  CHECK_THROWS_WITH_AS(Subalgebra(alg, {e, f}), doctest::Contains("not closed"), InvalidArgument);
}

TEST_CASE("grading element") {
  RootSystem a1(Series::A, 1);
  Algebra alg = Algebra::chevalley(a1);
  auto x = grading_element(alg, {0});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<Rat>{Rat(1, 2)});  // x = h_1/2 for the Borel of sl_2

  // marked = {} gives x = 0 and all degrees 0
  auto zero = grading_element(alg, {});
  REQUIRE(zero.has_value());
  CHECK((*zero)[0] == 0);

  // D_4, marked {alpha_2}: [x, e(gamma)] = [gamma : alpha_2] e(gamma)
  RootSystem d4(Series::D, 4);
  Algebra d4alg = Algebra::chevalley(d4);
  auto xd = grading_element(d4alg, {1});
  REQUIRE(xd.has_value());
  std::vector<Rat> xvec(d4alg.dim(), Rat(0));
  for (int i = 0; i < 4; ++i) xvec[d4alg.cartan_basis_index(i)] = (*xd)[i];
  for (const Root& g : d4.positive_roots()) {
    const int idx = d4alg.root_vector_index(g);
    std::vector<Rat> ad = d4alg.bracket(xvec, basis_vector(d4alg, idx));
    CHECK(ad[idx] == g.coeffs[1]);
    ad[idx] = 0;
    CHECK(is_zero(ad));
    CHECK((g.coeffs[1] >= 0 && g.coeffs[1] <= 2));
  }
}

TEST_CASE("inv0 hypotheses: faithfulness of the nilradical action") {
  RootSystem a1(Series::A, 1);
  Algebra sl2 = Algebra::chevalley(a1);
  Inv0Report rep = check_inv0_hypotheses(sl2, {0});
  CHECK(rep.proper);
  CHECK(rep.grading_element_exists);
  CHECK(rep.faithful);
  CHECK(rep.kernel_dim == 0);

  RootSystem d4(Series::D, 4);
  Algebra so8 = Algebra::chevalley(d4);
  rep = check_inv0_hypotheses(so8, {0, 2, 3});  // the minimal parabolic with Levi {alpha_2}
  CHECK(rep.proper);
  CHECK(rep.faithful);
  rep = check_inv0_hypotheses(so8, {1});  // and the maximal one at alpha_2
  CHECK(rep.proper);
  CHECK(rep.faithful);

  // Levi-only marking is degenerate, not proper
  rep = check_inv0_hypotheses(so8, {});
  CHECK_FALSE(rep.proper);
}
