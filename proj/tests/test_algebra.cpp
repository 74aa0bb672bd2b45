#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dualco/semisimple.hpp"
#include "fixtures.hpp"

using namespace dualco;
using namespace dualco::testing;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

// Every action matrix family must be a unital homomorphism.
void check_action_homomorphism(const FDAlgebra& a, const SimpleDescriptor& s) {
  const Field& F = a.field;
  Mat unit_act(s.dim, s.dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    unit_act = mat_add(F, unit_act, mat_scale(F, a.unit[i], s.action[i]));
  CHECK(unit_act == Mat::identity(s.dim));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat lhs = mat_mul(F, s.action[i], s.action[j]);
      Mat rhs(s.dim, s.dim);
      for (std::size_t k = 0; k < a.dim(); ++k)
        rhs = mat_add(F, rhs, mat_scale(F, a.table[i][j][k], s.action[k]));
      CHECK(lhs == rhs);
    }
}

Mat act_of(const FDAlgebra& a, const SimpleDescriptor& s, const Vec& x) {
  Mat m(s.dim, s.dim);
  for (std::size_t i = 0; i < a.dim(); ++i)
    m = mat_add(a.field, m, mat_scale(a.field, x[i], s.action[i]));
  return m;
}
}  // namespace

TEST_CASE("radical of local and hereditary examples") {
  FDAlgebra dual_numbers = loop_mod_xn(Q, 2);
  Subspace j = radical(dual_numbers);
  REQUIRE(j.dim() == 1);
  CHECK(j.basis_vec(0) == dual_numbers.basis_vec(1));  // span{x}

  // Same algebra by structure constants only: the trace-form radical agrees.
  Subspace jg = radical(forget_provenance(dual_numbers));
  CHECK(jg == j);

  CHECK(radical(split_torus(Q, 2)).dim() == 0);

  FDAlgebra a2 = a2_algebra(Q);
  Subspace ja = radical(a2);
  REQUIRE(ja.dim() == 1);
  CHECK(ja.basis_vec(0) == a2.basis_vec(2));  // span{a}
  CHECK(ideal_power(a2, ja, 2).dim() == 0);
}

TEST_CASE("radical restrictions over F_p") {
  // Quiver provenance works over any field...
  FDAlgebra a2 = a2_algebra(F5);
  CHECK(radical(a2).dim() == 1);
  // ...but the trace form is unavailable in characteristic p.
  CHECK_THROWS_AS(radical(forget_provenance(a2)), unsupported_error);
  CHECK_THROWS_AS(radical(split_torus(F5, 2)), unsupported_error);
}

TEST_CASE("simples of basic algebras") {
  SimplesResult a2 = simples(a2_algebra(Q));
  REQUIRE(a2.simples.size() == 2);
  for (const auto& s : a2.simples) {
    CHECK(s.dim == 1);
    check_action_homomorphism(a2_algebra(Q), s);
  }
  CHECK(a2.simples[0].label == "1");
  CHECK(a2.simples[1].label == "2");

  SimplesResult local = simples(loop_mod_xn(Q, 3));
  CHECK(local.simples.size() == 1);
  CHECK(local.rad.dim() == 2);

  // Upper-triangular 2x2 by structure constants: two one-dimensional simples.
  FDAlgebra t2 = upper_triangular2(Q);
  SimplesResult st = simples(t2);
  REQUIRE(st.simples.size() == 2);
  CHECK(st.rad.dim() == 1);
  for (const auto& s : st.simples) {
    CHECK(s.dim == 1);
    check_action_homomorphism(t2, s);
    // The lifted idempotent is an exact idempotent of the algebra.
    CHECK(t2.mul(s.idem, s.idem) == s.idem);
  }
  // The two lifted idempotents are orthogonal and sum to 1.
  CHECK(vec_is_zero(t2.mul(st.simples[0].idem, st.simples[1].idem)));
  CHECK(vec_add(Q, st.simples[0].idem, st.simples[1].idem) == t2.unit);
}

TEST_CASE("simples of matrix algebras") {
  FDAlgebra m2 = matrix_algebra(Q, 2);
  SimplesResult sm = simples(m2);
  REQUIRE(sm.simples.size() == 1);
  CHECK(sm.simples[0].dim == 2);
  CHECK(sm.rad.dim() == 0);
  check_action_homomorphism(m2, sm.simples[0]);
  // A primitive idempotent acts with rank one on its own simple.
  CHECK(rank(Q, act_of(m2, sm.simples[0], sm.simples[0].idem)) == 1);

  FDAlgebra mix = product_algebra(split_torus(Q, 1), matrix_algebra(Q, 2));
  SimplesResult sx = simples(mix);
  REQUIRE(sx.simples.size() == 2);
  std::vector<std::size_t> dims{sx.simples[0].dim, sx.simples[1].dim};
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 2});
  for (const auto& s : sx.simples) {
    check_action_homomorphism(mix, s);
    CHECK(mix.mul(s.idem, s.idem) == s.idem);
    CHECK(rank(Q, act_of(mix, s, s.idem)) == 1);
  }
  // A primitive idempotent of one class annihilates the other simple.
  CHECK(act_of(mix, sx.simples[0], sx.simples[1].idem).is_zero());
  CHECK(act_of(mix, sx.simples[1], sx.simples[0].idem).is_zero());
}

TEST_CASE("Wedderburn dimension count") {
  for (const FDAlgebra& a :
       {matrix_algebra(Q, 2), product_algebra(split_torus(Q, 1), matrix_algebra(Q, 2)),
        upper_triangular2(Q), forget_provenance(loop_mod_xn(Q, 3)), matrix_algebra(Q, 3)}) {
    SimplesResult sr = simples(a);
    std::size_t sq = 0;
    for (const auto& s : sr.simples) sq += s.dim * s.dim;
    CHECK(sq == a.dim() - sr.rad.dim());
  }
}

TEST_CASE("non-split semisimple quotient is refused") {
  // Q[i]: the Gaussian rationals as a 2-dimensional Q-algebra.
  FDAlgebra c;
  c.field = Q;
  c.basis_names = {"one", "i"};
  c.table.assign(2, std::vector<Vec>(2, Vec(2, Scalar(0))));
  c.table[0][0][0] = Scalar(1);
  c.table[0][1][1] = Scalar(1);
  c.table[1][0][1] = Scalar(1);
  c.table[1][1][0] = Scalar(-1);  // i^2 = -1
  c.unit = {Scalar(1), Scalar(0)};
  check_associative(c);
  CHECK(radical(c).dim() == 0);
  CHECK_THROWS_AS(simples(c), unsupported_error);
}

TEST_CASE("basic reduction") {
  CHECK(basic_algebra(matrix_algebra(Q, 2)).dim() == 1);

  FDAlgebra mix = product_algebra(split_torus(Q, 1), matrix_algebra(Q, 2));
  FDAlgebra b = basic_algebra(mix);
  REQUIRE(b.dim() == 2);
  check_unital(b);
  check_associative(b);
  CHECK(radical(b).dim() == 0);
  CHECK(simples(b).simples.size() == 2);
  // Commutative: both basis products agree.
  CHECK(b.table[0][1] == b.table[1][0]);

  // Already-basic inputs come back unchanged.
  FDAlgebra a2 = a2_algebra(Q);
  CHECK(basic_algebra(a2).dim() == a2.dim());
  CHECK(basic_algebra(a2).prov.has_value());
  FDAlgebra t2 = upper_triangular2(Q);
  CHECK(basic_algebra(t2).dim() == 3);

  // Idempotent stability of the reduction.
  CHECK(basic_algebra(b).dim() == b.dim());
}

TEST_CASE("basic_data corners and projectives") {
  FDAlgebra a2 = a2_algebra(Q);
  BasicData bd = basic_data(a2);
  REQUIRE(bd.nsimple == 2);
  CHECK(bd.labels == std::vector<std::string>{"1", "2"});
  // A e_1 = span{e_1, a} (paths with source 1), A e_2 = span{e_2}.
  CHECK(bd.proj[0].dim() == 2);
  CHECK(bd.proj[1].dim() == 1);
  CHECK(bd.proj[0].contains(Q, a2.basis_vec(2)));
  // e_u A e_v = paths from v to u.
  CHECK(bd.corner[1][0].dim() == 1);
  CHECK(bd.corner[0][1].dim() == 0);
  CHECK(bd.corner[0][0].dim() == 1);
  CHECK(bd.corner[1][1].dim() == 1);
  CHECK(bd.corner[1][0].contains(Q, a2.basis_vec(2)));

  // Structure-constant basic algebra also works.
  BasicData bt = basic_data(upper_triangular2(Q));
  CHECK(bt.nsimple == 2);
  Vec esum(3, Scalar(0));
  for (const Vec& e : bt.idem) esum = vec_add(Q, esum, e);
  CHECK(esum == upper_triangular2(Q).unit);

  // Non-basic input is rejected.
  CHECK_THROWS_AS(basic_data(matrix_algebra(Q, 2)), input_error);
}

TEST_CASE("quotient algebra by the radical") {
  FDAlgebra a2 = a2_algebra(Q);
  QuotientAlgebra qa = quotient_algebra(a2, radical(a2), "s");
  REQUIRE(qa.alg.dim() == 2);
  check_unital(qa.alg);
  check_associative(qa.alg);
  CHECK(radical(qa.alg).dim() == 0);
  // Projection is an algebra map on a sample pair.
  Vec x = vec_add(Q, a2.basis_vec(0), a2.basis_vec(2));
  Vec y = a2.basis_vec(1);
  CHECK(mat_apply(Q, qa.proj, a2.mul(x, y)) ==
        qa.alg.mul(mat_apply(Q, qa.proj, x), mat_apply(Q, qa.proj, y)));
}

TEST_CASE("ideal closure") {
  FDAlgebra a3 = loop_mod_xn(Q, 3);
  Mat seed(1, 3, {0, 1, 0});
  Subspace cl = ideal_closure(a3, Subspace::from_rows(Q, seed));
  CHECK(cl.dim() == 2);  // (x) = span{x, x^2}
  CHECK(is_two_sided_ideal(a3, cl));

  FDAlgebra a2 = a2_algebra(Q);
  Subspace ja = radical(a2);
  CHECK(ideal_closure(a2, ja) == ja);
}

TEST_CASE("structure constant sanity checks") {
  FDAlgebra bad = upper_triangular2(Q);
  bad.table[0][1] = {Scalar(0), Scalar(0), Scalar(1)};  // e11 e12 := e22
  CHECK_THROWS_AS(check_associative(bad), check_error);
  FDAlgebra bad_unit = upper_triangular2(Q);
  bad_unit.unit = {Scalar(1), Scalar(0), Scalar(0)};
  CHECK_THROWS_AS(check_unital(bad_unit), check_error);
}

TEST_CASE("minimal polynomials and idempotent splitting") {
  FDAlgebra m2 = matrix_algebra(Q, 2);
  // e11 has minimal polynomial t^2 - t.
  Vec m = minimal_polynomial(m2, m2.basis_vec(0), m2.unit);
  CHECK(m == Vec{Scalar(0), Scalar(-1), Scalar(1)});
  // The unit has t - 1.
  CHECK(minimal_polynomial(m2, m2.unit, m2.unit) == Vec{Scalar(-1), Scalar(1)});
  // A nilpotent matrix unit has t^2.
  CHECK(minimal_polynomial(m2, m2.basis_vec(1), m2.unit) ==
        Vec{Scalar(0), Scalar(0), Scalar(1)});
  // x in k[x]/(x^3) has t^3.
  FDAlgebra a3 = loop_mod_xn(Q, 3);
  CHECK(minimal_polynomial(a3, a3.basis_vec(1), a3.unit).size() == 4);

  // Splitting the diagonal torus recovers the three coordinate idempotents.
  FDAlgebra t3 = split_torus(Q, 3);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < 3; ++i) basis.push_back(t3.basis_vec(i));
  std::vector<Vec> idems = split_idempotents_commutative(t3, basis, t3.unit);
  REQUIRE(idems.size() == 3);
  Vec total(3, Scalar(0));
  for (const Vec& e : idems) {
    CHECK(t3.mul(e, e) == e);
    total = vec_add(Q, total, e);
  }
  CHECK(total == t3.unit);
}

TEST_CASE("polynomial helpers") {
  // Squarefree part of (t-1)^2.
  Vec sq{Scalar(1), Scalar(-2), Scalar(1)};
  CHECK(poly_squarefree(Q, sq) == Vec{Scalar(-1), Scalar(1)});
  // Over F_2, t^2 + 1 = (t + 1)^2 and the derivative vanishes identically.
  const Field F2 = Field::prime(2);
  Vec frob{F2.one(), F2.zero(), F2.one()};
  CHECK(poly_squarefree(F2, frob) == Vec{F2.one(), F2.one()});

  std::vector<Scalar> r = poly_roots(Q, Vec{Scalar(-1), Scalar(0), Scalar(1)});  // t^2 - 1
  std::sort(r.begin(), r.end());
  CHECK(r == std::vector<Scalar>{Scalar(-1), Scalar(1)});
  CHECK(poly_roots(Q, Vec{Scalar(-2), Scalar(0), Scalar(1)}).empty());  // t^2 - 2
  // t^2 + 1 over F_5 has roots 2 and 3.
  std::vector<Scalar> rp = poly_roots(F5, Vec{F5.one(), F5.zero(), F5.one()});
  std::sort(rp.begin(), rp.end());
  CHECK(rp == std::vector<Scalar>{Scalar(2), Scalar(3)});
  // Rational non-integer root: 2t - 1.
  std::vector<Scalar> rh = poly_roots(Q, Vec{Scalar(-1, 2), Scalar(1)});
  CHECK(rh == std::vector<Scalar>{Scalar(1, 2)});
}

TEST_CASE("simples over a prime field with quiver provenance") {
  SimplesResult sr = simples(a2_algebra(F5));
  CHECK(sr.simples.size() == 2);
  BasicData bd = basic_data(a2_algebra(F5));
  CHECK(bd.corner[1][0].dim() == 1);
}
