#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glk/centroid.hpp"
#include "testutil.hpp"

using namespace glk;

static StructureAlgebra sl2(const FieldPtr& F) {
  StructureAlgebra a(F, 3);
  a.set_bracket(1, 0, {{0, F->from_int(2)}});
  a.set_bracket(1, 2, {{2, F->from_int(-2)}});
  a.set_bracket(0, 2, {{1, F->one()}});
  a.grading = std::vector<int>{1, 0, -1};
  return a;
}

static FieldPtr gauss() {
  auto Q = Field::rationals();
  return Field::extension(Q, {Q->from_int(1), Q->from_int(0), Q->from_int(1)});
}

TEST_CASE("lie_centroid dimensions and commutant property") {
  auto Q = Field::rationals();

  StructureAlgebra ab(Q, 3);
  auto cab = lie_centroid(ab);
  CHECK(cab.dim() == 9);  // full matrix algebra

  auto c1 = lie_centroid(sl2(Q));
  CHECK(c1.dim() == 1);

  // sl(2) over Q(i) viewed as a 6-dim Q-algebra: centroid = Q[t]/(t^2+1)
  auto r = restrict_scalars(sl2(gauss()));
  auto c2 = lie_centroid(r);
  CHECK(c2.dim() == 2);
  // every element commutes with every ad, and the table is commutative
  for (const auto& T : c2.basis)
    for (int j = 0; j < r.dim; ++j) {
      Matrix A = r.ad_basis(j);
      CHECK(T.mul(A).sub(A.mul(T)).is_zero());
    }
  // multiplication table is commutative and associative
  for (int i = 0; i < c2.dim(); ++i)
    for (int j = 0; j < c2.dim(); ++j) {
      CHECK(vec_eq(c2.table[i][j], c2.table[j][i]));
      for (int k = 0; k < c2.dim(); ++k) {
        Matrix lhs = c2.element(c2.table[i][j]).mul(c2.basis[k]);
        Matrix rhs = c2.basis[i].mul(c2.element(c2.table[j][k]));
        CHECK(lhs == rhs);
      }
    }
  // identity is in the span
  CHECK_NOTHROW(c2.coords_of(Matrix::identity(Q, 6)));

  // the recognized field is Q(i): minpoly t^2+bt+c with -(disc) a square
  TableAlgebra tab{Q, 2, c2.coords_of(Matrix::identity(Q, 6)), [&](const Vec& x, const Vec& y) {
                     return c2.coords_of(c2.element(x).mul(c2.element(y)));
                   }};
  auto rec = recognize_field(tab);
  CHECK(rec.is_field);
  REQUIRE(rec.minpoly.size() == 3);
  Rational b = rec.minpoly[1].rat(), c = rec.minpoly[0].rat();
  CHECK(is_square_rational(4 * c - b * b));
}

TEST_CASE("jordan_centroid") {
  auto Q = Field::rationals();

  auto c1 = jordan_centroid(rectangular_pair(Q, 1, 1));
  CHECK(c1.dim() == 1);
  CHECK(c1.condition_b_subspace);

  // zero pair: conditions vacuous, all pairs of matrices
  auto cz = jordan_centroid(zero_pair(Q, 2, 2));
  CHECK(cz.dim() == 8);
  CHECK(cz.condition_b_subspace);

  auto cr = jordan_centroid(scalar_restriction(rectangular_pair(gauss(), 1, 1)));
  CHECK(cr.dim() == 2);
  CHECK(cr.condition_b_subspace);
  // all elements satisfy the full V-homomorphism conditions
  for (const auto& g : cr.basis) {
    std::string why;
    CHECK(jordan_centroid_conditions(scalar_restriction(rectangular_pair(gauss(), 1, 1)), g, &why));
  }

  auto cb = jordan_centroid(bilinear_form_pair(Q, Matrix::identity(Q, 3)));
  CHECK(cb.dim() == 1);
}

TEST_CASE("psi and upsilon on the Gaussian restriction") {
  auto Q = Field::rationals();
  auto v = scalar_restriction(rectangular_pair(gauss(), 1, 1));
  auto t = tkk_construct(v);

  LieCentroid lc = graded_lie_centroid(t.algebra, lie_centroid(t.algebra));
  JordanCentroid jc = jordan_centroid(v);
  CHECK(lc.dim() == 2);
  CHECK(jc.dim() == 2);

  // psi(identity) = (identity, identity)
  JordanCentroidElement gid = psi(t, Matrix::identity(Q, t.dim()));
  CHECK(gid.plus == Matrix::identity(Q, t.dp));
  CHECK(gid.minus == Matrix::identity(Q, t.dm));

  // psi maps the Lie centroid isomorphically onto the Jordan centroid
  std::vector<JordanCentroidElement> images;
  std::vector<Vec> image_coords;
  for (const auto& T : lc.basis) {
    JordanCentroidElement g = psi(t, T);
    image_coords.push_back(jc.coords_of(g));  // throws if not in the span
    images.push_back(g);
  }
  Matrix coord_mat(Q, jc.dim(), lc.dim());
  for (int j = 0; j < lc.dim(); ++j)
    for (int i = 0; i < jc.dim(); ++i) coord_mat.at(i, j) = image_coords[j][i];
  CHECK(rank(coord_mat) == 2);  // bijective on bases

  // ring homomorphism: psi(T1 T2) = psi(T1) psi(T2), psi(T1+T2) additive
  for (int i = 0; i < lc.dim(); ++i)
    for (int j = 0; j < lc.dim(); ++j) {
      JordanCentroidElement lhs = psi(t, lc.basis[i].mul(lc.basis[j]));
      CHECK(lhs.plus == images[i].plus.mul(images[j].plus));
      CHECK(lhs.minus == images[i].minus.mul(images[j].minus));
      JordanCentroidElement add = psi(t, lc.basis[i].add(lc.basis[j]));
      CHECK(add.plus == images[i].plus.add(images[j].plus));
    }

  // upsilon(identity pair) = identity
  JordanCentroidElement idp{Matrix::identity(Q, t.dp), Matrix::identity(Q, t.dm)};
  CHECK(upsilon(t, idp) == Matrix::identity(Q, t.dim()));

  // mutually inverse on the computed bases (matrix-exact)
  for (int i = 0; i < lc.dim(); ++i) {
    Matrix back = upsilon(t, images[i]);
    CHECK(back == lc.basis[i]);
  }
  for (int j = 0; j < jc.dim(); ++j) {
    Matrix up = upsilon(t, jc.basis[j]);
    JordanCentroidElement g = psi(t, up);
    CHECK(g.plus == jc.basis[j].plus);
    CHECK(g.minus == jc.basis[j].minus);
  }

  // upsilon is additive on the basis
  Matrix u01 = upsilon(t, JordanCentroidElement{jc.basis[0].plus.add(jc.basis[1].plus),
                                                jc.basis[0].minus.add(jc.basis[1].minus)});
  CHECK(u01 == upsilon(t, jc.basis[0]).add(upsilon(t, jc.basis[1])));
}

TEST_CASE("central closure of Lie algebras") {
  auto Q = Field::rationals();

  // trivial centroid: unchanged
  auto cl0 = central_closure(sl2(Q));
  CHECK(cl0.ok);
  CHECK(cl0.trivial);
  CHECK(cl0.gamma->same(Q));

  // 6-dim restriction re-bases to a 3-dim algebra over the quadratic extension
  auto r = restrict_scalars(sl2(gauss()));
  auto cl = central_closure(r);
  REQUIRE(cl.ok);
  CHECK(!cl.trivial);
  CHECK(cl.algebra.dim == 3);
  CHECK(cl.gamma->degree() == 2);
  CHECK(verify_lie(cl.algebra).ok);
  REQUIRE(cl.algebra.grading.has_value());
  CHECK(verify_grading(cl.algebra).ok);
  CHECK(cl.algebra.indices_of_degree(1).size() == 1);
  CHECK(cl.algebra.indices_of_degree(0).size() == 1);
  CHECK(cl.algebra.indices_of_degree(-1).size() == 1);
  // structure constants match sl(2) over Gamma: associated pair is rect(1,1)
  auto assoc = associated_pair(cl.algebra);
  CHECK(pair_tables_equal(assoc.pair, rectangular_pair(cl.gamma, 1, 1)));

  // abelian: refused
  StructureAlgebra ab(Q, 2);
  auto bad = central_closure(ab);
  CHECK(!bad.ok);
  CHECK(bad.refusal.find("centroid not a field") == 0);
}

TEST_CASE("extended central closure of pairs") {
  auto Q = Field::rationals();

  auto cl0 = extended_central_closure_pair(rectangular_pair(Q, 1, 2));
  CHECK(cl0.ok);
  CHECK(cl0.trivial);

  auto v = scalar_restriction(rectangular_pair(gauss(), 1, 1));
  auto cl = extended_central_closure_pair(v);
  REQUIRE(cl.ok);
  CHECK(cl.pair.dp == 1);
  CHECK(cl.pair.dm == 1);
  CHECK(cl.gamma->degree() == 2);
  CHECK(verify_jordan_pair(cl.pair).ok);
  CHECK(pair_tables_equal(cl.pair, rectangular_pair(cl.gamma, 1, 1)));

  auto bad = extended_central_closure_pair(zero_pair(Q, 1, 1));
  CHECK(!bad.ok);
  CHECK(bad.refusal.find("centroid not a field") == 0);
}

TEST_CASE("closure isomorphism") {
  auto Q = Field::rationals();

  // trivial case: both sides are TKK(V) over Q, identity map
  auto r0 = verify_closure_iso(rectangular_pair(Q, 1, 1));
  CHECK(r0.pass);
  CHECK(r0.dim_over_gamma == 3);

  // Gaussian restriction: both sides 3-dim over the quadratic extension
  auto r1 = verify_closure_iso(scalar_restriction(rectangular_pair(gauss(), 1, 1)));
  CHECK(r1.pass);
  CHECK(r1.dim_over_gamma == 3);
  CHECK(r1.gamma->degree() == 2);

  // rectangular(1,2) over Q(sqrt 2) restricted: both sides 8-dim over the extension
  auto Qs2 = Field::extension(Q, {Q->from_int(-2), Q->from_int(0), Q->from_int(1)});
  auto r2 = verify_closure_iso(scalar_restriction(rectangular_pair(Qs2, 1, 2)));
  CHECK(r2.pass);
  CHECK(r2.dim_over_gamma == 8);

  // centroid dimensions agree on catalog nondegenerate pairs
  for (const JordanPair& v :
       {rectangular_pair(Q, 1, 2), bilinear_form_pair(Q, Matrix::identity(Q, 3)),
        scalar_restriction(rectangular_pair(gauss(), 1, 1))}) {
    auto t = tkk_construct(v);
    CHECK(lie_centroid(t.algebra).dim() == jordan_centroid(v).dim());
  }

  // a larger trivial-centroid instance end to end
  auto r22 = verify_centroid_iso(rectangular_pair(Q, 2, 2));
  CHECK(r22.pass);
  CHECK(r22.lie_dim == 1);
}
