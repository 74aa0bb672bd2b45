#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualco/dagger.hpp"
#include "dualco/pathcoalg.hpp"
#include "fixtures.hpp"

using namespace dualco;
using namespace dualco::testing;

namespace {

Vec unit_vec(const Field& F, std::size_t d, std::size_t i) {
  Vec v(d, Scalar(0));
  v[i] = F.one();
  return v;
}

// Two group-likes, no mixing: the dual of k x k.
Coalgebra grouplike2(const Field& F) {
  Coalgebra c;
  c.field = F;
  c.basis_names = {"g1", "g2"};
  c.delta = Mat(4, 2);
  c.delta.at(0, 0) = F.one();
  c.delta.at(3, 1) = F.one();
  c.counit = {F.one(), F.one()};
  check_coalgebra(c);
  return c;
}

std::vector<std::pair<std::string, FDAlgebra>> rational_fixtures() {
  Field Q = Field::rationals();
  return {
      {"k", split_torus(Q, 1)},
      {"k^3", split_torus(Q, 3)},
      {"k[x]/x^2", loop_mod_xn(Q, 2)},
      {"k[x]/x^4", loop_mod_xn(Q, 4)},
      {"path algebra of A2", a2_algebra(Q)},
      {"upper triangular 2x2", upper_triangular2(Q)},
      {"M2", matrix_algebra(Q, 2)},
      {"two loops mod cubes", two_loops(Q, 3)},
      {"k x k[x]/x^2", product_algebra(split_torus(Q, 1), loop_mod_xn(Q, 2))},
  };
}

}  // namespace

TEST_CASE("dual coalgebra structure constants") {
  Field Q = Field::rationals();

  SUBCASE("one-dimensional algebra gives one group-like") {
    Coalgebra c = dual_coalgebra_fd(split_torus(Q, 1));
    REQUIRE(c.dim() == 1);
    CHECK(c.basis_names[0] == "f1*");
    CHECK(c.delta.at(0, 0) == Scalar(1));
    CHECK(c.counit[0] == Scalar(1));
  }

  SUBCASE("dual of k[x]/x^2 has a primitive") {
    FDAlgebra a = loop_mod_xn(Q, 2);
    REQUIRE(a.basis_names[0] == "v");
    REQUIRE(a.basis_names[1] == "x");
    Coalgebra c = dual_coalgebra_fd(a);
    // Delta(v*) = v* (x) v*
    Vec dv = c.comul(unit_vec(Q, 2, 0));
    CHECK(dv[0] == Scalar(1));
    CHECK(dv[1] == Scalar(0));
    CHECK(dv[2] == Scalar(0));
    CHECK(dv[3] == Scalar(0));
    // Delta(x*) = v* (x) x* + x* (x) v*
    Vec dx = c.comul(unit_vec(Q, 2, 1));
    CHECK(dx[0] == Scalar(0));
    CHECK(dx[1] == Scalar(1));
    CHECK(dx[2] == Scalar(1));
    CHECK(dx[3] == Scalar(0));
    CHECK(c.eps(unit_vec(Q, 2, 0)) == Scalar(1));
    CHECK(c.eps(unit_vec(Q, 2, 1)) == Scalar(0));
  }

  SUBCASE("dual of M2 is the matrix coalgebra") {
    Coalgebra c = dual_coalgebra_fd(matrix_algebra(Q, 2));
    // Delta(e12*) = e11* (x) e12* + e12* (x) e22*; basis order e11,e12,e21,e22.
    Vec d12 = c.comul(unit_vec(Q, 4, 1));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        bool expect = (i == 0 && j == 1) || (i == 1 && j == 3);
        CHECK(d12[i * 4 + j] == (expect ? Scalar(1) : Scalar(0)));
      }
  }
}

TEST_CASE("coalgebra axioms and double duality across fixtures") {
  for (auto& [name, a] : rational_fixtures()) {
    CAPTURE(name);
    Coalgebra c = dual_coalgebra_fd(a);
    CHECK_NOTHROW(check_coalgebra(c));
    FDAlgebra dd = dual_algebra(c);
    REQUIRE(dd.dim() == a.dim());
    CHECK(dd.unit == a.unit);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) CHECK(dd.table[i][j] == a.table[i][j]);
  }
  // Same round trip over a prime field.
  Field F5 = Field::prime(5);
  for (FDAlgebra a : {loop_mod_xn(F5, 3), matrix_algebra(F5, 2)}) {
    Coalgebra c = dual_coalgebra_fd(a);
    CHECK_NOTHROW(check_coalgebra(c));
    FDAlgebra dd = dual_algebra(c);
    CHECK(dd.unit == a.unit);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) CHECK(dd.table[i][j] == a.table[i][j]);
  }
}

TEST_CASE("dual algebra of a group-like coalgebra is split") {
  Field Q = Field::rationals();
  FDAlgebra b = dual_algebra(grouplike2(Q));
  FDAlgebra torus = split_torus(Q, 2);
  CHECK(b.unit == torus.unit);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(b.table[i][j] == torus.table[i][j]);
}

TEST_CASE("coradical") {
  Field Q = Field::rationals();

  SUBCASE("dual of k[x]/x^2") {
    Subspace cor = coradical(dual_coalgebra_fd(loop_mod_xn(Q, 2)));
    REQUIRE(cor.dim() == 1);
    CHECK(cor.contains(Q, unit_vec(Q, 2, 0)));
  }

  SUBCASE("cosemisimple dual of M2") {
    Subspace cor = coradical(dual_coalgebra_fd(matrix_algebra(Q, 2)));
    CHECK(cor.dim() == 4);
  }

  SUBCASE("dual of the triangular algebra keeps the diagonal functionals") {
    Subspace cor = coradical(dual_coalgebra_fd(upper_triangular2(Q)));
    REQUIRE(cor.dim() == 2);
    CHECK(cor.contains(Q, unit_vec(Q, 3, 0)));
    CHECK(cor.contains(Q, unit_vec(Q, 3, 2)));
    CHECK(!cor.contains(Q, unit_vec(Q, 3, 1)));
  }

  SUBCASE("path coalgebra coradical is the span of the vertices") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
    PathCoalgebra pc = path_coalgebra(Q, q, 2);
    REQUIRE(pc.c.dim() == 7);
    Subspace cor = coradical(pc.c);
    CHECK(cor == pc.length_le(0));
  }
}

TEST_CASE("coradical filtration") {
  Field Q = Field::rationals();

  SUBCASE("cosemisimple stabilizes immediately") {
    Filtration f = coradical_filtration(dual_coalgebra_fd(split_torus(Q, 2)));
    CHECK(f.stable == 0);
    CHECK(f.dims() == std::vector<std::size_t>{2});
  }

  SUBCASE("dual of k[x]/x^n climbs one dimension a step") {
    for (std::size_t n = 2; n <= 4; ++n) {
      CAPTURE(n);
      Filtration f = coradical_filtration(dual_coalgebra_fd(loop_mod_xn(Q, n)));
      CHECK(f.stable == n - 1);
      std::vector<std::size_t> expect;
      for (std::size_t i = 1; i <= n; ++i) expect.push_back(i);
      CHECK(f.dims() == expect);
      // Layer n-1 pairs against J^n: it annihilates exactly the classes of
      // length >= n.
      for (std::size_t i = 0; i + 1 < f.layers.size(); ++i)
        CHECK(f.layers[i + 1].contains(Q, f.layers[i]));
    }
  }

  SUBCASE("path coalgebra of A2") {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    PathCoalgebra pc = path_coalgebra(Q, q, 2);
    Filtration f = coradical_filtration(pc.c);
    CHECK(f.dims() == std::vector<std::size_t>{2, 3});
  }
}

TEST_CASE("sub_coalgebra restricts the comultiplication") {
  Field Q = Field::rationals();
  Coalgebra c = dual_coalgebra_fd(loop_mod_xn(Q, 3));

  Subspace w = Subspace::from_rows(Q, Mat(2, 3, {1, 0, 0, 0, 1, 0}));
  Coalgebra s = sub_coalgebra(c, w);
  REQUIRE(s.dim() == 2);
  CHECK_NOTHROW(check_coalgebra(s));
  // The restriction is the dual of k[x]/x^2.
  Coalgebra small = dual_coalgebra_fd(loop_mod_xn(Q, 2));
  CHECK(s.delta == small.delta);
  CHECK(s.counit == small.counit);

  Subspace bad = Subspace::from_rows(Q, Mat(1, 3, {0, 1, 0}));
  CHECK_THROWS_AS(sub_coalgebra(c, bad), check_error);
}

TEST_CASE("maximal subcoalgebra inside a subspace") {
  Field Q = Field::rationals();
  Quiver q;
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  PathCoalgebra pc = path_coalgebra(Q, q, 2);  // basis e, x, xx
  const Coalgebra& c = pc.c;

  CHECK(max_subcoalgebra_in(c, Subspace::full(3)) == Subspace::full(3));

  Subspace ex = Subspace::from_rows(Q, Mat(2, 3, {1, 0, 0, 0, 1, 0}));
  CHECK(max_subcoalgebra_in(c, ex) == ex);

  Subspace xonly = Subspace::from_rows(Q, Mat(1, 3, {0, 1, 0}));
  CHECK(max_subcoalgebra_in(c, xonly).dim() == 0);

  // Delta(xx) needs x (x) x, so xx cannot survive without x.
  Subspace exx = Subspace::from_rows(Q, Mat(2, 3, {1, 0, 0, 0, 0, 1}));
  Subspace eonly = Subspace::from_rows(Q, Mat(1, 3, {1, 0, 0}));
  CHECK(max_subcoalgebra_in(c, exx) == eonly);
}

TEST_CASE("pointed components") {
  Field Q = Field::rationals();

  SUBCASE("split torus: isolated group-likes") {
    PointedComponents tor = pointed_components(dual_coalgebra_fd(split_torus(Q, 2)));
    REQUIRE(tor.grouplikes.size() == 2);
    REQUIRE(tor.groups.size() == 2);
    CHECK(tor.components[0].dim() == 1);
    CHECK(tor.components[1].dim() == 1);
  }

  SUBCASE("dual of k[x]/x^2: one component") {
    PointedComponents pc = pointed_components(dual_coalgebra_fd(loop_mod_xn(Q, 2)));
    REQUIRE(pc.grouplikes.size() == 1);
    REQUIRE(pc.components.size() == 1);
    CHECK(pc.components[0].dim() == 2);
  }

  SUBCASE("product k x k[x]/x^2: components of dimension 1 and 2") {
    FDAlgebra a = product_algebra(split_torus(Q, 1), loop_mod_xn(Q, 2));
    PointedComponents pc = pointed_components(dual_coalgebra_fd(a));
    REQUIRE(pc.grouplikes.size() == 2);
    REQUIRE(pc.components.size() == 2);
    std::vector<std::size_t> dims = {pc.components[0].dim(), pc.components[1].dim()};
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 2});
  }

  SUBCASE("dual of the A2 path algebra: a skew-primitive joins the group-likes") {
    PointedComponents pc = pointed_components(dual_coalgebra_fd(a2_algebra(Q)));
    REQUIRE(pc.grouplikes.size() == 2);
    REQUIRE(pc.groups.size() == 1);
    CHECK(pc.groups[0] == std::vector<std::size_t>{0, 1});
    CHECK(pc.components[0].dim() == 3);
  }

  SUBCASE("matrix coalgebra is not pointed") {
    try {
      pointed_components(dual_coalgebra_fd(matrix_algebra(Q, 2)));
      FAIL("expected input_error");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("dimension 4") != std::string::npos);
    }
  }
}

TEST_CASE("path coalgebra invariants") {
  Field Q = Field::rationals();
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  PathCoalgebra pc = path_coalgebra(Q, q, 2);
  REQUIRE(pc.c.dim() == 3);

  SUBCASE("vertices are group-like, arrows are skew-primitive") {
    std::size_t e1 = pc.path_index(Path{0, {}});
    std::size_t e2 = pc.path_index(Path{1, {}});
    std::size_t ia = pc.path_index(Path{0, {0}});
    Vec de = pc.c.comul(unit_vec(Q, 3, e1));
    for (std::size_t i = 0; i < 9; ++i)
      CHECK(de[i] == (i == e1 * 3 + e1 ? Scalar(1) : Scalar(0)));
    Vec da = pc.c.comul(unit_vec(Q, 3, ia));
    for (std::size_t i = 0; i < 9; ++i) {
      bool expect = i == e1 * 3 + ia || i == ia * 3 + e2;
      CHECK(da[i] == (expect ? Scalar(1) : Scalar(0)));
    }
  }

  SUBCASE("dual is the truncated path algebra with factors transposed") {
    // Convolution concatenates left factor first; the presentation product
    // composes right factor first.  Opposite algebras, same ideals.
    for (std::size_t len : {std::size_t(2), std::size_t(3)}) {
      Quiver loop;
      loop.vertices = {"v"};
      loop.arrows = {{"x", 0, 0}};
      PathCoalgebra lp = path_coalgebra(Q, loop, len);
      FDAlgebra da = dual_algebra(lp.c);
      FDAlgebra tp = truncated_path_algebra(Q, loop, len);
      REQUIRE(da.dim() == tp.dim());
      CHECK(da.unit == tp.unit);
      for (std::size_t i = 0; i < da.dim(); ++i)
        for (std::size_t j = 0; j < da.dim(); ++j) CHECK(da.table[i][j] == tp.table[j][i]);
    }
  }

  SUBCASE("length filtration") {
    CHECK(pc.length_le(0).dim() == 2);
    CHECK(pc.length_le(1).dim() == 3);
    CHECK(pc.length_le(2).dim() == 3);
  }
}

TEST_CASE("dagger on reference algebras") {
  Field Q = Field::rationals();

  SUBCASE("A2 path algebra: everything survives") {
    DaggerResult d = dagger(a2_algebra(Q), 2, 0);
    CHECK(d.total_dim() == 3);
    CHECK(d.graded == std::vector<std::size_t>{2, 1, 0});
    CHECK(d.grouplikes == std::vector<std::string>{"1", "2"});
  }

  SUBCASE("k[x]/x^2: the square dies") {
    DaggerResult d = dagger(loop_mod_xn(Q, 2), 2, 0);
    CHECK(d.total_dim() == 2);
    CHECK(d.graded == std::vector<std::size_t>{1, 1, 0});
    REQUIRE(d.grouplikes.size() == 1);
  }

  SUBCASE("k[x]/x^3 at generous truncation") {
    DaggerResult d = dagger(loop_mod_xn(Q, 3), 4, 0);
    CHECK(d.total_dim() == 3);
    CHECK(d.graded == std::vector<std::size_t>{1, 1, 1, 0, 0});
    CHECK(d.grouplikes.size() == 1);

    // The subcoalgebra is the annihilator of the Maurer-Cartan ideal.
    FDAlgebra palg = truncated_path_algebra(Q, d.eq.quiver, 4);
    Subspace ideal = ideal_closure(palg, Subspace::from_rows(Q, d.mc.mu));
    CHECK(d.sub == kernel(Q, ideal.basis()));
  }

  SUBCASE("semisimple input reduces to its basic quotient") {
    DaggerResult d = dagger(matrix_algebra(Q, 2), 2, 0);
    CHECK(d.total_dim() == 1);
    CHECK(d.graded == std::vector<std::size_t>{1, 0, 0});
    CHECK(d.grouplikes.size() == 1);
  }

  SUBCASE("seed independence of the subcoalgebra") {
    DaggerResult d0 = dagger(loop_mod_xn(Q, 3), 3, 0);
    DaggerResult d1 = dagger(loop_mod_xn(Q, 3), 3, 1);
    CHECK(d0.sub == d1.sub);
    CHECK(d0.graded == d1.graded);
  }

  SUBCASE("truncation below 2 is rejected") {
    CHECK_THROWS_AS(dagger(loop_mod_xn(Q, 2), 1, 0), input_error);
  }
}

TEST_CASE("dagger cross-validation") {
  Field Q = Field::rationals();

  SUBCASE("agreement on small fixtures") {
    for (auto& [name, a, len] :
         std::vector<std::tuple<std::string, FDAlgebra, std::size_t>>{
             {"k[x]/x^2", loop_mod_xn(Q, 2), 2},
             {"A2", a2_algebra(Q), 2},
             {"k^2", split_torus(Q, 2), 2},
             {"M2", matrix_algebra(Q, 2), 2},
             {"k[x]/x^3", loop_mod_xn(Q, 3), 3}}) {
      CAPTURE(name);
      DaggerResult d = dagger(a, len, 0);
      DaggerCompare cmp = compare_dagger(a, d, oracle_dagger(a));
      CHECK(cmp.ok);
      for (const CheckItem& it : cmp.items) {
        CAPTURE(it.name);
        CHECK(it.status != CheckStatus::fail);
        CHECK(it.status != CheckStatus::skipped);
      }
    }
  }

  SUBCASE("short truncation skips the checks that need the whole algebra") {
    FDAlgebra a = loop_mod_xn(Q, 4);
    DaggerResult d = dagger(a, 2, 0);
    DaggerCompare cmp = compare_dagger(a, d, oracle_dagger(a));
    CHECK(cmp.ok);
    std::size_t skipped = 0;
    for (const CheckItem& it : cmp.items)
      if (it.status == CheckStatus::skipped) ++skipped;
    CHECK(skipped == 3);
  }

  SUBCASE("prime field: structural checks run, coradical ones are skipped") {
    Field F5 = Field::prime(5);
    FDAlgebra a = loop_mod_xn(F5, 2);
    DaggerResult d = dagger(a, 2, 0);
    DaggerCompare cmp = compare_dagger(a, d, oracle_dagger(a));
    CHECK(cmp.ok);
    REQUIRE(cmp.items.size() == 4);
    CHECK(cmp.items[0].status == CheckStatus::pass);     // total dimension
    CHECK(cmp.items[1].status == CheckStatus::skipped);  // coradical over F_p
    CHECK(cmp.items[2].status == CheckStatus::skipped);  // filtration over F_p
    CHECK(cmp.items[3].status == CheckStatus::pass);     // dual algebra
  }
}

TEST_CASE("oracle dagger dimensions") {
  Field Q = Field::rationals();
  CHECK(oracle_dagger(matrix_algebra(Q, 2)).dim() == 1);
  CHECK(oracle_dagger(loop_mod_xn(Q, 2)).dim() == 2);
  CHECK(oracle_dagger(upper_triangular2(Q)).dim() == 3);
}
