#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glk/radical.hpp"
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

TEST_CASE("absolute zero divisors, enumerate mode over F5") {
  auto f5 = Field::prime(5);

  // zero pair: every nonzero vector; projective representatives counted
  auto z = zero_pair(f5, 1, 1);
  auto az = absolute_zero_divisors(z);
  CHECK(az.exact);
  CHECK(az.witnesses.size() == 2);  // one rep per sign for dim 1

  // rectangular pairs: only 0 (xyx = 0 for all y forces x = 0)
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {
    auto r = rectangular_pair(f5, p, q);
    auto res = absolute_zero_divisors(r);
    CHECK(res.exact);
    CHECK(res.witnesses.empty());
  }

  // mixed sum: exactly the zero-pair component representatives
  auto mixed = pair_direct_sum(rectangular_pair(f5, 1, 1), zero_pair(f5, 1, 1));
  auto res = absolute_zero_divisors(mixed);
  CHECK(res.exact);
  for (const auto& [sigma, w] : res.witnesses) CHECK(w[0].is_zero());  // no rect component
  CHECK(res.witnesses.size() == 2);

  // every reported witness actually kills Q
  for (const auto& [sigma, w] : res.witnesses) CHECK(is_absolute_zero_divisor(mixed, sigma, w));

  // budget guard
  RadicalParams tiny;
  tiny.budget = 3;
  CHECK_THROWS_AS(absolute_zero_divisors(mixed, tiny), BudgetExceeded);
}

TEST_CASE("mccrimmon radical") {
  auto f5 = Field::prime(5);

  auto z = zero_pair(f5, 1, 1);
  auto rz = mccrimmon_radical(z);
  CHECK(rz.radical == PairSub::full(z));
  CHECK(rz.saturation_steps == 1);
  CHECK(rz.exact);

  auto r12 = rectangular_pair(f5, 1, 2);
  auto rr = mccrimmon_radical(r12);
  CHECK(rr.radical.is_zero());
  CHECK(rr.saturation_steps == 0);

  auto mixed = pair_direct_sum(rectangular_pair(f5, 1, 1), zero_pair(f5, 1, 1));
  auto rm = mccrimmon_radical(mixed);
  CHECK(rm.saturation_steps == 1);
  CHECK(rm.radical.plus.dim() == 1);
  CHECK(rm.radical.minus.dim() == 1);
  CHECK(rm.radical.plus.contains(mixed.basis_vec(+1, 1)));
  CHECK(rm.radical.minus.contains(mixed.basis_vec(-1, 1)));

  // fixed point: radical of the quotient is zero
  auto q = quotient_pair(mixed, rm.radical);
  CHECK(mccrimmon_radical(q.pair).radical.is_zero());

  // direct-sum monotonicity: Mc(v1 (+) v2) = Mc(v1) (+) Mc(v2)
  auto v1 = rectangular_pair(f5, 1, 1);
  auto v2 = zero_pair(f5, 2, 1);
  auto sum = pair_direct_sum(v1, v2);
  auto rs = mccrimmon_radical(sum);
  auto r1 = mccrimmon_radical(v1), r2 = mccrimmon_radical(v2);
  CHECK(rs.radical.plus.dim() == r1.radical.plus.dim() + r2.radical.plus.dim());
  CHECK(rs.radical.minus.dim() == r1.radical.minus.dim() + r2.radical.minus.dim());
}

TEST_CASE("sandwich elements and Kostrikin radical") {
  auto f5 = Field::prime(5);
  auto Q = Field::rationals();

  // abelian: every element is a sandwich; K = L
  StructureAlgebra ab(f5, 2);
  auto sab = sandwich_elements(ab);
  CHECK(sab.exact);
  CHECK(sab.witnesses.size() == 6);  // (25-1)/4 projective reps
  auto kab = kostrikin_radical(ab);
  CHECK(kab.radical.is_full());
  CHECK(kab.saturation_steps == 1);

  // sl(2) over F5: no nonzero sandwich, K = 0
  auto s5 = sl2(f5);
  CHECK(sandwich_elements(s5).witnesses.empty());
  auto k5 = kostrikin_radical(s5);
  CHECK(k5.radical.dim() == 0);
  CHECK(k5.exact);

  // structural certificate over Q: Killing nondegenerate
  auto ks = kostrikin_radical(sl2(Q), RadicalParams{.mode = RadicalMode::structural});
  CHECK(ks.radical.dim() == 0);
  CHECK(ks.structural_certificate);
  // degenerate Killing: no structural certificate
  StructureAlgebra heis(Q, 3);
  heis.set_bracket(0, 1, {{2, Q->one()}});
  CHECK_THROWS_AS(kostrikin_radical(heis, RadicalParams{.mode = RadicalMode::structural}), Error);

  // witness mode: lower bounds, labeled inexact
  auto kw = kostrikin_radical(ab, RadicalParams{.mode = RadicalMode::witness, .trials = 64});
  CHECK(!kw.exact);
  CHECK(kw.radical.dim() >= 1);
}

TEST_CASE("TKK of mixed pair: K nonzero and equal to the predicted ideal") {
  auto f5 = Field::prime(5);
  auto mixed = pair_direct_sum(rectangular_pair(f5, 1, 1), zero_pair(f5, 1, 1));
  auto t = tkk_construct(mixed);
  CHECK(t.dim() == 5);

  auto k = kostrikin_radical(t.algebra);
  CHECK(k.radical.dim() == 2);  // the zero-pair wings are central lines

  auto rep = verify_radical_correspondence(mixed);
  CHECK(rep.pass);
  CHECK(rep.kostrikin_graded);
  CHECK(rep.quotient_jordan_3graded);
  CHECK(rep.quotient_pair_nondegenerate);
  CHECK(rep.kostrikin.dim() == 2);
  CHECK(rep.kostrikin.dim() < t.dim());
  CHECK(!rep.kostrikin.is_zero_space());
}

TEST_CASE("radical correspondence on nondegenerate and degenerate extremes") {
  auto f5 = Field::prime(5);

  // nondegenerate: both sides zero
  auto r12 = rectangular_pair(f5, 1, 2);
  auto rep = verify_radical_correspondence(r12);
  CHECK(rep.pass);
  CHECK(rep.kostrikin.dim() == 0);
  CHECK(rep.quotient_pair_nondegenerate);

  // zero pair: both sides everything
  auto z = zero_pair(f5, 1, 1);
  auto repz = verify_radical_correspondence(z);
  CHECK(repz.pass);
  CHECK(repz.kostrikin.is_full());
}

TEST_CASE("nondegenerate quotient recovers TKK(rect) from TKK(rect (+) zero)") {
  auto f5 = Field::prime(5);
  auto mixed = pair_direct_sum(rectangular_pair(f5, 1, 1), zero_pair(f5, 1, 1));
  auto t = tkk_construct(mixed);
  auto res = nondegenerate_quotient(t.algebra, {});
  CHECK(res.recertified);
  CHECK(res.quotient.algebra.dim == 3);
  // structure constants match TKK(rect(1,1)) exactly on the surviving coordinates
  auto tr = tkk_construct(rectangular_pair(f5, 1, 1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(vec_eq(res.quotient.algebra.bracket_basis(i, j), tr.algebra.bracket_basis(i, j)));

  // trivial input: quotient isomorphic (identical) to the input
  auto res2 = nondegenerate_quotient(tr.algebra, {});
  CHECK(res2.quotient.algebra.dim == 3);

  // abelian: zero algebra
  StructureAlgebra ab(f5, 2);
  CHECK(nondegenerate_quotient(ab, {}).quotient.algebra.dim == 0);
}

TEST_CASE("user-supplied strongly prime ideals and the intersection lemma") {
  auto f5 = Field::prime(5);

  // V = rect(1,1) (+) zero(1,1): P = zero summand is strongly prime
  auto mixed = pair_direct_sum(rectangular_pair(f5, 1, 1), zero_pair(f5, 1, 1));
  PairSub pz = PairSub::zero(mixed);
  pz.plus = Subspace::span(f5, 2, {mixed.basis_vec(+1, 1)});
  pz.minus = Subspace::span(f5, 2, {mixed.basis_vec(-1, 1)});
  auto sp = verify_strongly_prime_ideal(mixed, pz);
  CHECK(sp.pair_ideal);
  CHECK(sp.quotient_prime);
  CHECK(sp.quotient_nondegenerate);
  CHECK(sp.strongly_prime);

  // the rectangular summand is not: its quotient is the degenerate zero pair
  PairSub pr = PairSub::zero(mixed);
  pr.plus = Subspace::span(f5, 2, {mixed.basis_vec(+1, 0)});
  pr.minus = Subspace::span(f5, 2, {mixed.basis_vec(-1, 0)});
  auto spr = verify_strongly_prime_ideal(mixed, pr);
  CHECK(spr.pair_ideal);
  CHECK(!spr.strongly_prime);

  // intersection lemma on the mixed pair with the single supplied prime
  auto rep = verify_prime_intersection(mixed, {pz});
  CHECK(rep.pass);
  CHECK(rep.kostrikin.dim() == 2);

  // direct sum of two rectangular pairs: the two summands are strongly prime
  // and the anti-images of their lifts intersect in K(L) = 0
  auto two = pair_direct_sum(rectangular_pair(f5, 1, 1), rectangular_pair(f5, 1, 1));
  PairSub p1 = PairSub::zero(two);
  p1.plus = Subspace::span(f5, 2, {two.basis_vec(+1, 0)});
  p1.minus = Subspace::span(f5, 2, {two.basis_vec(-1, 0)});
  PairSub p2 = PairSub::zero(two);
  p2.plus = Subspace::span(f5, 2, {two.basis_vec(+1, 1)});
  p2.minus = Subspace::span(f5, 2, {two.basis_vec(-1, 1)});
  auto rep2 = verify_prime_intersection(two, {p1, p2});
  CHECK(rep2.pass);
  CHECK(rep2.kostrikin.dim() == 0);
  CHECK(rep2.supplied_checks.size() == 2);
  CHECK(rep2.supplied_checks[0].strongly_prime);
  CHECK(rep2.supplied_checks[1].strongly_prime);
}

TEST_CASE("kostrikin radical is idempotent on the quotient") {
  auto f5 = Field::prime(5);
  auto mixed = pair_direct_sum(rectangular_pair(f5, 1, 1), zero_pair(f5, 1, 1));
  auto t = tkk_construct(mixed);
  auto res = nondegenerate_quotient(t.algebra, {});
  CHECK(kostrikin_radical(res.quotient.algebra).radical.dim() == 0);
}
