#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glk/jordan.hpp"
#include "testutil.hpp"

using namespace glk;

// oracle: dense rectangular-matrix triple product {x,y,z} = xyz + zyx
static Matrix as_mat(const FieldPtr& F, const Vec& v, int r, int c) {
  Matrix m(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = v[i * c + j];
  return m;
}

static Vec mat_to_vec(const Matrix& m) { return m.a; }

TEST_CASE("catalog pairs satisfy the pair axioms over every supported field kind") {
  auto Q = Field::rationals();
  auto f5 = Field::prime(5);
  auto Qi = Field::extension(Q, {Q->from_int(1), Q->from_int(0), Q->from_int(1)});
  for (const auto& F : {Q, f5, Qi}) {
    CHECK(verify_jordan_pair(rectangular_pair(F, 1, 1)).ok);
    CHECK(verify_jordan_pair(rectangular_pair(F, 1, 2)).ok);
    CHECK(verify_jordan_pair(rectangular_pair(F, 2, 2)).ok);
    CHECK(verify_jordan_pair(zero_pair(F, 1, 1)).ok);
    CHECK(verify_jordan_pair(bilinear_form_pair(F, Matrix::identity(F, 3))).ok);
    CHECK(verify_jordan_pair(skew_pair(F, 4)).ok);
  }
}

TEST_CASE("perturbed pair reports a violation") {
  auto Q = Field::rationals();
  auto v = rectangular_pair(Q, 1, 2);
  v.add_triple(+1, 0, 0, 0, 1, Q->one());  // perturb one structure constant
  auto rep = verify_jordan_pair(v);
  CHECK(!rep.ok);
  CHECK(!rep.violations.empty());
}

TEST_CASE("apply_triple and Q against the matrix oracle") {
  auto Q = Field::rationals();

  // zero pair: everything vanishes
  auto z = zero_pair(Q, 2, 3);
  glktest::Rng rng(42);
  for (int t = 0; t < 5; ++t) {
    Vec x = rng.vec(Q, 2), y = rng.vec(Q, 3), w = rng.vec(Q, 2);
    CHECK(vec_is_zero(z.triple(+1, x, y, w)));
    CHECK(vec_is_zero(z.q_apply(+1, x, y)));
  }

  // rectangular (1,1) on scalars: {1,1,1} = 2, Q_1(1) = 1, Q_x y = x^2 y
  auto r11 = rectangular_pair(Q, 1, 1);
  Vec one1{Q->one()};
  CHECK(vec_eq(r11.triple(+1, one1, one1, one1), Vec{Q->from_int(2)}));
  CHECK(vec_eq(r11.q_apply(+1, one1, one1), Vec{Q->one()}));
  for (int t = 0; t < 10; ++t) {
    Scalar a = rng.scalar(Q), b = rng.scalar(Q);
    CHECK(vec_eq(r11.q_apply(+1, Vec{a}, Vec{b}), Vec{a * a * b}));
  }

  // rectangular (1,2): Q_x y = x y x as matrices, both signs
  auto r12 = rectangular_pair(Q, 1, 2);
  for (int t = 0; t < 20; ++t) {
    Vec x = rng.vec(Q, 2), y = rng.vec(Q, 2), w = rng.vec(Q, 2);
    Matrix mx = as_mat(Q, x, 1, 2), my = as_mat(Q, y, 2, 1), mw = as_mat(Q, w, 1, 2);
    // {x,y,w} = xyw + wyx
    Vec lhs = r12.triple(+1, x, y, w);
    Vec rhs = mat_to_vec(mx.mul(my).mul(mw).add(mw.mul(my).mul(mx)));
    CHECK(vec_eq(lhs, rhs));
    // Q_x y = x y x
    CHECK(vec_eq(r12.q_apply(+1, x, y), mat_to_vec(mx.mul(my).mul(mx))));
    // minus side: {y, x, y} = yxy + yxy
    Vec lm = r12.triple(-1, y, x, y);
    Vec rm = mat_to_vec(my.mul(mx).mul(my).add(my.mul(mx).mul(my)));
    CHECK(vec_eq(lm, rm));
  }
}

TEST_CASE("pair_ideal_generated") {
  auto Q = Field::rationals();
  auto r12 = rectangular_pair(Q, 1, 2);

  CHECK(pair_ideal_generated(r12, PairSub::zero(r12)).is_zero());

  // one matrix unit generates the whole simple pair
  PairSub whole = pair_ideal_generated(r12, +1, r12.basis_vec(+1, 0));
  CHECK(whole.plus.dim() == 2);
  CHECK(whole.minus.dim() == 2);
  CHECK(is_pair_ideal(r12, whole));

  // direct sum: a zero-pair seed generates exactly that summand line
  auto mixed = pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1));
  PairSub summand = pair_ideal_generated(mixed, +1, mixed.basis_vec(+1, 1));
  CHECK(summand.plus.dim() == 1);
  CHECK(summand.minus.dim() == 0);
  CHECK(is_pair_ideal(mixed, summand));
  CHECK(summand.plus.contains(mixed.basis_vec(+1, 1)));
}

TEST_CASE("ideal_product") {
  auto Q = Field::rationals();

  // zero pair: V*I = 0
  auto z = zero_pair(Q, 2, 2);
  CHECK(ideal_product(z, PairSub::full(z), PairSub::full(z)).is_zero());

  // rectangular (1,1): V*V = V
  auto r11 = rectangular_pair(Q, 1, 1);
  PairSub vv = ideal_product(r11, PairSub::full(r11), PairSub::full(r11));
  CHECK(vv == PairSub::full(r11));

  // direct sum with a zero pair: V*V = rectangular summand
  auto mixed = pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1));
  PairSub prod = ideal_product(mixed, PairSub::full(mixed), PairSub::full(mixed));
  CHECK(prod.plus.dim() == 1);
  CHECK(prod.minus.dim() == 1);
  CHECK(prod.plus.contains(mixed.basis_vec(+1, 0)));
  CHECK(is_pair_ideal(mixed, prod));
  // ideal_product output always closes to a pair ideal
  CHECK(pair_ideal_generated(mixed, prod) == prod);
}

TEST_CASE("scalar restriction") {
  auto Q = Field::rationals();
  auto Qi = Field::extension(Q, {Q->from_int(1), Q->from_int(0), Q->from_int(1)});
  auto v = rectangular_pair(Qi, 1, 2);
  auto r = scalar_restriction(v);
  CHECK(r.dp == 4);
  CHECK(r.dm == 4);
  CHECK(r.field->same(Q));
  CHECK(verify_jordan_pair(r).ok);

  // triple products agree with computing over the extension and expanding
  Vec x = r.basis_vec(+1, 1);  // b_0 * t
  Vec y = r.basis_vec(-1, 2);  // c_1 * 1
  Vec w = r.basis_vec(+1, 2);  // b_1 * 1
  Vec got = r.triple(+1, x, y, w);
  Vec xe = v.basis_vec(+1, 0), ye = v.basis_vec(-1, 1), we = v.basis_vec(+1, 1);
  Vec over_ext = v.triple(+1, vec_scale(xe, Qi->gen()), ye, we);
  Vec expect = vec_zero(Q, 4);
  for (int i = 0; i < 2; ++i)
    for (int h = 0; h < 2; ++h) expect[i * 2 + h] = over_ext[i].coeffs()[h];
  CHECK(vec_eq(got, expect));
}

TEST_CASE("absolute zero divisors of rectangular pairs are trivial") {
  // for rectangular(p,q): Q_x = 0 iff x = 0, via the linearized operator stack
  auto Q = Field::rationals();
  auto v = rectangular_pair(Q, 2, 2);
  Matrix sys(Q, v.dm * v.dp * v.dp, v.dp);
  int row = 0;
  for (int j = 0; j < v.dm; ++j)
    for (int k = 0; k < v.dp; ++k) {
      for (int i = 0; i < v.dp; ++i) {
        Vec t = vec_add(v.triple_basis(+1, i, j, k), v.triple_basis(+1, k, j, i));
        for (int l = 0; l < v.dp; ++l) sys.at(row + l, i) = t[l];
      }
      row += v.dp;
    }
  CHECK(kernel(sys).dim() == 0);
}

TEST_CASE("pair quotients") {
  auto Q = Field::rationals();
  auto mixed = pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1));
  PairSub zsum = PairSub::zero(mixed);
  zsum.plus = Subspace::span(Q, 2, {mixed.basis_vec(+1, 1)});
  zsum.minus = Subspace::span(Q, 2, {mixed.basis_vec(-1, 1)});
  CHECK(is_pair_ideal(mixed, zsum));
  auto q = quotient_pair(mixed, zsum);
  CHECK(q.pair.dp == 1);
  CHECK(q.pair.dm == 1);
  CHECK(verify_jordan_pair(q.pair).ok);
  // quotient is the rectangular(1,1) table
  auto r11 = rectangular_pair(Q, 1, 1);
  CHECK(vec_eq(q.pair.triple_basis(+1, 0, 0, 0), r11.triple_basis(+1, 0, 0, 0)));
}

TEST_CASE("essentiality of pair ideals") {
  auto Q = Field::rationals();
  auto mixed = pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1));
  // the full pair is essential
  CHECK(is_essential_pair_ideal(mixed, PairSub::full(mixed)).essential);
  // the rectangular summand misses the zero-pair ideal entirely
  PairSub rect = PairSub::zero(mixed);
  rect.plus = Subspace::span(Q, 2, {mixed.basis_vec(+1, 0)});
  rect.minus = Subspace::span(Q, 2, {mixed.basis_vec(-1, 0)});
  CHECK(is_pair_ideal(mixed, rect));
  auto rep = is_essential_pair_ideal(mixed, rect);
  CHECK(!rep.essential);
  CHECK(rep.disjoint_witness.has_value());
  // in a simple pair, every nonzero ideal is essential
  auto r12 = rectangular_pair(Q, 1, 2);
  CHECK(is_essential_pair_ideal(r12, PairSub::full(r12)).essential);
}
