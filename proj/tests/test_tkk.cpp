#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glk/tkk.hpp"
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

TEST_CASE("tkk of the zero pair") {
  auto Q = Field::rationals();
  auto t = tkk_construct(zero_pair(Q, 1, 1));
  CHECK(t.dim() == 2);
  CHECK(t.d0 == 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(t.algebra.entry(i, j).empty());
}

TEST_CASE("tkk of rectangular(1,1) matches sl(2) after the canonical basis change") {
  auto Q = Field::rationals();
  auto t = tkk_construct(rectangular_pair(Q, 1, 1));
  CHECK(t.dim() == 3);
  CHECK(verify_lie(t.algebra).ok);
  CHECK(verify_grading(t.algebra).ok);
  CHECK(verify_jordan_3graded(t.algebra).ok);

  Vec e = t.embed(+1, t.pair.basis_vec(+1, 0));
  Vec f = t.embed(-1, t.pair.basis_vec(-1, 0));
  Vec h = t.algebra.bracket(e, f);  // delta(1,1)
  CHECK(vec_eq(t.algebra.bracket(h, e), vec_scale(e, Q->from_int(2))));
  CHECK(vec_eq(t.algebra.bracket(h, f), vec_scale(f, Q->from_int(-2))));
  CHECK(vec_eq(t.algebra.bracket(e, f), h));
}

TEST_CASE("tkk of rectangular(1,2): dimensions, grading, Killing form") {
  auto Q = Field::rationals();
  auto t = tkk_construct(rectangular_pair(Q, 1, 2));
  CHECK(t.dim() == 8);  // (p+q)^2 - 1
  CHECK(t.dp == 2);
  CHECK(t.d0 == 4);
  CHECK(t.dm == 2);
  CHECK(verify_lie(t.algebra).ok);
  CHECK(verify_grading(t.algebra).ok);
  CHECK(verify_jordan_3graded(t.algebra).ok);
  CHECK(rank(killing_form(t.algebra)) == 8);
  CHECK(center(t.algebra).dim() == 0);
}

TEST_CASE("roundtrip: associated pair of TKK(V) is V, structure-constant exact") {
  auto Q = Field::rationals();
  std::vector<std::pair<JordanPair, bool>> catalog;  // (pair, nondegenerate)
  catalog.emplace_back(rectangular_pair(Q, 1, 1), true);
  catalog.emplace_back(rectangular_pair(Q, 1, 2), true);
  catalog.emplace_back(rectangular_pair(Q, 2, 2), true);
  catalog.emplace_back(bilinear_form_pair(Q, Matrix::identity(Q, 3)), true);
  catalog.emplace_back(zero_pair(Q, 1, 1), false);
  catalog.emplace_back(pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1)), false);
  catalog.emplace_back(rectangular_pair(Field::prime(5), 1, 2), true);
  catalog.emplace_back(skew_pair(Q, 3), false);  // hermitian-type construction
  auto Qi = Field::extension(Q, {Q->from_int(1), Q->from_int(0), Q->from_int(1)});
  catalog.emplace_back(rectangular_pair(Qi, 1, 2), true);
  for (const auto& [v, nondegenerate] : catalog) {
    auto t = tkk_construct(v);
    auto assoc = associated_pair(t.algebra);
    CHECK(pair_tables_equal(assoc.pair, v));
    // nondegenerate catalog pairs give centerless TKK algebras
    if (nondegenerate) CHECK(center(t.algebra).dim() == 0);
    // Q_x y = (1/2)[[x,y],x] under the embeddings, on all basis pairs
    for (int i = 0; i < v.dp; ++i)
      for (int j = 0; j < v.dm; ++j) {
        Vec x = t.embed(+1, v.basis_vec(+1, i));
        Vec y = t.embed(-1, v.basis_vec(-1, j));
        Vec lhs = vec_scale(t.algebra.bracket(t.algebra.bracket(x, y), x),
                            v.field->from_rational(Rational(1, 2)));
        Vec rhs = t.embed(+1, v.q_apply(+1, v.basis_vec(+1, i), v.basis_vec(-1, j)));
        CHECK(vec_eq(lhs, rhs));
      }
  }
}

TEST_CASE("associated pair of classical sl(2) gradings") {
  auto Q = Field::rationals();
  auto assoc = associated_pair(sl2(Q));
  // {e,f,e} = [[e,f],e] = 2e: exactly the rectangular(1,1) table
  CHECK(pair_tables_equal(assoc.pair, rectangular_pair(Q, 1, 1)));

  // abelian 3-graded algebra gives the zero pair
  StructureAlgebra ab(Q, 3);
  ab.grading = std::vector<int>{1, 0, -1};
  auto z = associated_pair(ab);
  CHECK(pair_tables_equal(z.pair, zero_pair(Q, 1, 1)));
}

TEST_CASE("tkk_construct rejects broken pairs") {
  auto Q = Field::rationals();
  auto v = rectangular_pair(Q, 1, 2);
  v.add_triple(+1, 0, 0, 0, 1, Q->one());
  CHECK_THROWS_WITH_AS(tkk_construct(v), "pair axioms fail", Error);
}

TEST_CASE("derivation expressions reconstruct the derivation basis") {
  auto Q = Field::rationals();
  auto t = tkk_construct(rectangular_pair(Q, 1, 2));
  for (int k = 0; k < t.d0; ++k) {
    Vec acc = vec_zero(Q, t.dp * t.dp + t.dm * t.dm);
    for (const auto& [i, j, c] : t.der_expr[k]) {
      Vec fl = t.delta_flat(t.pair.basis_vec(+1, i), t.pair.basis_vec(-1, j));
      acc = vec_add(acc, vec_scale(fl, c));
    }
    CHECK(vec_eq(acc, t.der_space.basis[k]));
  }
}

TEST_CASE("verify_jordan_3graded witness") {
  auto Q = Field::rationals();
  // sl(2) (+) an abelian line concentrated in degree 0
  StructureAlgebra line(Q, 1);
  line.grading = std::vector<int>{0};
  auto l = direct_sum(sl2(Q), line);
  auto rep = verify_jordan_3graded(l);
  CHECK(!rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(!rep.witness->at(3).is_zero());  // the abelian coordinate
}

TEST_CASE("lift_ideal") {
  auto Q = Field::rationals();
  auto r12 = rectangular_pair(Q, 1, 2);
  auto t = tkk_construct(r12);
  CHECK(lift_ideal(t, PairSub::full(r12)).dim() == t.dim());
  CHECK(lift_ideal(t, PairSub::zero(r12)).dim() == 0);

  auto mixed = pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1));
  auto tm = tkk_construct(mixed);
  CHECK(tm.dim() == 5);
  PairSub rect = PairSub::zero(mixed);
  rect.plus = Subspace::span(Q, 2, {mixed.basis_vec(+1, 0)});
  rect.minus = Subspace::span(Q, 2, {mixed.basis_vec(-1, 0)});
  Subspace lifted = lift_ideal(tm, rect);
  CHECK(lifted.dim() == 3);  // codim = dim of the zero parts
  CHECK(is_ideal(tm.algebra, lifted));

  // semiprime case: essential pair ideal lifts to an essential Lie ideal
  auto two = pair_direct_sum(rectangular_pair(Q, 1, 1), rectangular_pair(Q, 1, 1));
  auto t2 = tkk_construct(two);
  CHECK(is_essential_pair_ideal(two, PairSub::full(two)).essential);
  CHECK(is_essential_ideal(t2.algebra, lift_ideal(t2, PairSub::full(two))).essential);
  // a single summand is not essential on either side
  PairSub s1 = PairSub::zero(two);
  s1.plus = Subspace::span(Q, 2, {two.basis_vec(+1, 0)});
  s1.minus = Subspace::span(Q, 2, {two.basis_vec(-1, 0)});
  CHECK(!is_essential_pair_ideal(two, s1).essential);
  CHECK(!is_essential_ideal(t2.algebra, lift_ideal(t2, s1)).essential);
}

TEST_CASE("tilde_ideal") {
  auto Q = Field::rationals();
  auto r11 = rectangular_pair(Q, 1, 1);
  auto t = tkk_construct(r11);

  // i = L: V*V = V for the simple pair, tilde = L
  auto full = tilde_ideal(t, Subspace::full(Q, t.dim()));
  CHECK(full.tilde.dim() == t.dim());
  CHECK(full.contained_in_i);
  CHECK(full.meets_v_equals_pi);

  // i = 0
  auto zero = tilde_ideal(t, Subspace::zero(Q, t.dim()));
  CHECK(zero.tilde.dim() == 0);
  CHECK(zero.contained_in_i);
  CHECK(zero.meets_v_equals_pi);

  // degenerate pair: tilde is strictly smaller than i = L
  auto mixed = pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1));
  auto tm = tkk_construct(mixed);
  auto rep = tilde_ideal(tm, Subspace::full(Q, tm.dim()));
  CHECK(rep.contained_in_i);
  CHECK(rep.meets_v_equals_pi);
  CHECK(rep.tilde.dim() == 3);
  CHECK(rep.tilde.dim() < tm.dim());

  // section-style containments: pi(I)^3 <= I ^ V <= pi(I) on a lifted ideal
  PairSub rect = PairSub::zero(mixed);
  rect.plus = Subspace::span(Q, 2, {mixed.basis_vec(+1, 0)});
  rect.minus = Subspace::span(Q, 2, {mixed.basis_vec(-1, 0)});
  Subspace ideal = lift_ideal(tm, rect);
  for (int sigma : {+1, -1}) {
    std::vector<Vec> proj, proj_other;
    for (const auto& r : ideal.basis) {
      proj.push_back(tm.project(sigma, r));
      proj_other.push_back(tm.project(-sigma, r));
    }
    Subspace pi_sigma = Subspace::span(Q, mixed.dim(sigma), proj);
    Subspace pi_other = Subspace::span(Q, mixed.dim(-sigma), proj_other);
    // (I ^ V)^sigma <= pi_sigma(I), componentwise
    auto wing = [&](int s) {
      std::vector<Vec> gens;
      for (int i = 0; i < mixed.dim(s); ++i) gens.push_back(tm.embed(s, mixed.basis_vec(s, i)));
      return Subspace::span(Q, tm.dim(), gens);
    };
    for (const auto& r : ideal.intersect(wing(sigma)).basis)
      CHECK(pi_sigma.contains(tm.project(sigma, r)));
    // triple products {pi(I), pi(I), pi(I)} land back in I ^ V
    for (const auto& a : pi_sigma.basis)
      for (const auto& b : pi_other.basis)
        for (const auto& c : pi_sigma.basis) {
          Vec tr = mixed.triple(sigma, a, b, c);
          CHECK(ideal.contains(tm.embed(sigma, tr)));
        }
  }
}

TEST_CASE("c_v and central extensions") {
  auto Q = Field::rationals();
  auto t = tkk_construct(rectangular_pair(Q, 1, 1));
  CHECK(c_v(t.algebra).dim() == 0);
  CHECK(c_v(tkk_construct(rectangular_pair(Q, 1, 2)).algebra).dim() == 0);

  // adjoin a formal central degree-0 line: C_V is that line and the
  // quotient recovers TKK(V) exactly
  StructureAlgebra ext(Q, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ext.table[std::size_t(i) * 4 + j] = t.algebra.entry(i, j);
  ext.grading = std::vector<int>{1, 0, -1, 0};
  CHECK(verify_lie(ext).ok);
  Subspace cv = c_v(ext);
  CHECK(cv.dim() == 1);
  CHECK(cv.contains(ext.basis_vec(3)));
  auto q = quotient_by_ideal(ext, cv);
  CHECK(q.algebra.dim == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(vec_eq(q.algebra.bracket_basis(i, j), t.algebra.bracket_basis(i, j)));
}
