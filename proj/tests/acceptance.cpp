// Acceptance suite: one pass/fail line per criterion, exact (tolerance-free)
// equality throughout, with the stated runtime bounds enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "glk/glk.hpp"

using namespace glk;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = dt < limit_seconds;
  if (!in_time) note += (note.empty() ? "" : "; ") + std::string("runtime bound exceeded");
  bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", num, name.c_str(), dt,
              note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
}

LiePoly V(int i, int s) { return LiePoly::var(i, s); }
LiePoly B(const LiePoly& a, const LiePoly& b) { return LiePoly::bracket(a, b); }

// the polynomial corpus for criteria 4 and 5
std::vector<std::pair<std::string, LiePoly>> corpus() {
  LiePoly pp = B(V(1, +1), V(2, +1));
  LiePoly comm = B(V(1, +1), V(1, -1));
  LiePoly alt = B(B(V(1, +1), V(2, -1)), V(3, +1)) - B(B(V(3, +1), V(2, -1)), V(1, +1));
  LiePoly triple = B(B(V(1, +1), V(1, -1)), V(1, +1));
  LiePoly sym_sum = B(B(V(1, +1), V(1, -1)), V(2, +1)) + B(B(V(2, +1), V(1, -1)), V(1, +1));
  LiePoly c4 = B(B(V(1, +1), V(1, -1)), B(V(2, +1), V(2, -1)));
  LiePoly d5 = B(c4, V(3, +1));
  LiePoly deg4wing = B(B(B(V(1, +1), V(1, -1)), V(2, +1)), V(2, -1));
  LiePoly long5 = B(deg4wing, V(3, +1));
  LiePoly zero2 = comm.scaled(2) - comm - comm;
  LiePoly mixed_support = comm + B(B(V(2, +1), V(2, -1)), V(3, +1));
  LiePoly theta_minus = B(V(1, -1), V(2, +1));
  return {{"[x1+,x2+]", pp},
          {"[x1+,x1-]", comm},
          {"alternating-deg3", alt},
          {"[[x1+,x1-],x1+]", triple},
          {"symmetrized-deg3", sym_sum},
          {"theta0-commutator-deg4", c4},
          {"lowered-deg5", d5},
          {"wing-deg4", deg4wing},
          {"wing-deg5", long5},
          {"zero-combination", zero2},
          {"mixed-support", mixed_support},
          {"[x1-,x2+]", theta_minus}};
}

FieldPtr gauss() {
  auto Q = Field::rationals();
  return Field::extension(Q, {Q->from_int(1), Q->from_int(0), Q->from_int(1)});
}

FieldPtr root2() {
  auto Q = Field::rationals();
  return Field::extension(Q, {Q->from_int(-2), Q->from_int(0), Q->from_int(1)});
}

}  // namespace

int main() {
  auto Q = Field::rationals();
  auto f5 = Field::prime(5);

  criterion(1, "TKK reconstruction for rectangular (1,1), (1,2), (2,2)", 15.0, [&](std::string& note) {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
      auto t0 = std::chrono::steady_clock::now();
      JordanPair v = rectangular_pair(Q, p, q);
      TkkAlgebra t = tkk_construct(v);
      int n = p + q;
      if (t.dim() != n * n - 1) {
        note = "dimension mismatch";
        return false;
      }
      if (t.dp != p * q || t.d0 != p * p + q * q - 1 || t.dm != p * q) {
        note = "grading dimensions mismatch";
        return false;
      }
      if (!verify_lie(t.algebra).ok || !verify_grading(t.algebra).ok ||
          !verify_jordan_3graded(t.algebra).ok) {
        note = "verification failed";
        return false;
      }
      AssociatedPair assoc = associated_pair(t.algebra);
      if (!pair_tables_equal(assoc.pair, v)) {
        note = "roundtrip not structure-constant exact";
        return false;
      }
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (dt >= 5.0) {
        note = "per-pair runtime bound exceeded";
        return false;
      }
    }
    return true;
  });

  criterion(2, "centroid isomorphism (Psi, Upsilon mutually inverse ring homs)", 30.0,
            [&](std::string& note) {
              std::vector<std::pair<std::string, JordanPair>> inputs;
              inputs.emplace_back("rect(1,1)/Q", rectangular_pair(Q, 1, 1));
              inputs.emplace_back("rect(1,1) over Q(i) restricted",
                                  scalar_restriction(rectangular_pair(gauss(), 1, 1)));
              inputs.emplace_back("bilinear(3,id)/Q", bilinear_form_pair(Q, Matrix::identity(Q, 3)));
              for (auto& [label, v] : inputs) {
                auto t0 = std::chrono::steady_clock::now();
                CentroidIsoReport r = verify_centroid_iso(v);
                if (!r.pass || r.lie_dim != r.jordan_dim) {
                  note = label + ": " + (r.detail.empty() ? "failed" : r.detail);
                  return false;
                }
                double dt =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (dt >= 10.0) {
                  note = label + ": per-input runtime bound exceeded";
                  return false;
                }
              }
              return true;
            });

  criterion(3, "closure isomorphism C(L)L = TKK(C(V)V) on the Gaussian restriction", 10.0,
            [&](std::string& note) {
              ClosureIsoReport r = verify_closure_iso(scalar_restriction(rectangular_pair(gauss(), 1, 1)));
              if (!r.pass) {
                note = r.detail;
                return false;
              }
              if (r.dim_over_gamma != 3 || r.gamma->degree() != 2) {
                note = "expected both sides 3-dimensional over the quadratic extension";
                return false;
              }
              // the same machinery on a second extension
              ClosureIsoReport r2 = verify_closure_iso(scalar_restriction(rectangular_pair(root2(), 1, 2)));
              if (!r2.pass || r2.dim_over_gamma != 8) {
                note = "rect(1,2) over Q(sqrt2): " + r2.detail;
                return false;
              }
              return true;
            });

  criterion(4, "essentiality criterion: is_essential agrees with sl(p+q) witnesses", 60.0,
            [&](std::string& note) {
              auto polys = corpus();
              if (polys.size() < 10) {
                note = "corpus too small";
                return false;
              }
              for (auto& [label, f] : polys) {
                EssentialityReport er = is_essential(f);
                WitnessSearchReport wr = essential_witness_search(f, f.degree() + 1);
                bool witness_found = wr.witness.has_value();
                if (er.essential != witness_found) {
                  // a silent disagreement is only tolerated as an explicit
                  // bound-exhaustion report; the corpus has none
                  note = label + ": is_essential=" + (er.essential ? "yes" : "no") +
                         " witness=" + (witness_found ? "yes" : "no") +
                         (wr.bound_exhausted ? " (bound exhausted)" : " (SILENT DISAGREEMENT)");
                  return false;
                }
              }
              // pinned expectations on the named members
              if (is_essential(corpus()[0].second).essential) {
                note = "[x1+,x2+] must not be essential";
                return false;
              }
              auto w_comm = essential_witness_search(corpus()[1].second, 3).witness;
              if (!w_comm || *w_comm != std::pair<int, int>{1, 1}) {
                note = "[x1+,x1-] must have witness (1,1)";
                return false;
              }
              auto w_c4 = essential_witness_search(corpus()[5].second, 5).witness;
              if (!w_c4 || *w_c4 != std::pair<int, int>{1, 2}) {
                note = "theta0-commutator must have witness (1,2)";
                return false;
              }
              return true;
            });

  criterion(5, "induced Jordan identities and degree bookkeeping", 60.0, [&](std::string& note) {
    std::vector<std::pair<std::string, JordanPair>> catalog;
    catalog.emplace_back("rect(1,1)", rectangular_pair(Q, 1, 1));
    catalog.emplace_back("rect(1,2)", rectangular_pair(Q, 1, 2));
    catalog.emplace_back("bilinear(3,id)", bilinear_form_pair(Q, Matrix::identity(Q, 3)));
    int identities_checked = 0;
    for (auto& [plabel, v] : catalog) {
      TkkAlgebra t = tkk_construct(v);
      for (auto& [flabel, f] : corpus()) {
        if (!is_identity(f, t.algebra).identity) continue;
        InducedJordanIdentity ind = induced_jordan_identity(f);
        JordanIdentityReport jr = jordan_is_identity(ind.g_plus, ind.g_minus, v);
        if (!jr.identity) {
          note = flabel + " is an identity of TKK(" + plabel +
                 ") but the induced pair polynomial is not an identity of V";
          return false;
        }
        ++identities_checked;
      }
    }
    if (identities_checked == 0) {
      note = "no corpus identities found on the catalog";
      return false;
    }
    // degree bookkeeping on all nonzero corpus members
    for (auto& [flabel, f] : corpus()) {
      if (f.is_zero()) continue;
      InducedJordanIdentity ind = induced_jordan_identity(f);
      if (!ind.degree_contract_ok) {
        note = flabel + ": degree contract violated (deg f=" + std::to_string(ind.deg_f) +
               ", deg g=" + std::to_string(ind.deg_g) + ")";
        return false;
      }
    }
    return true;
  });

  criterion(6, "radical correspondence K(L) = anti-image(I(Mc(V))) over F5", 120.0,
            [&](std::string& note) {
              struct Case {
                std::string label;
                JordanPair pair;
                bool zero_sides, full_sides;
              };
              std::vector<Case> cases;
              cases.push_back({"rect(1,2)/F5", rectangular_pair(f5, 1, 2), true, false});
              cases.push_back({"zero(1,1)/F5", zero_pair(f5, 1, 1), false, true});
              cases.push_back({"rect(1,1)+zero(1,1)/F5",
                               pair_direct_sum(rectangular_pair(f5, 1, 1), zero_pair(f5, 1, 1)),
                               false, false});
              for (auto& c : cases) {
                RadicalCorrespondenceReport r = verify_radical_correspondence(c.pair);
                if (!r.pass) {
                  note = c.label + ": sides differ";
                  return false;
                }
                if (c.zero_sides && r.kostrikin.dim() != 0) {
                  note = c.label + ": expected both sides zero";
                  return false;
                }
                if (c.full_sides && !r.kostrikin.is_full()) {
                  note = c.label + ": expected both sides everything";
                  return false;
                }
                if (!c.zero_sides && !c.full_sides &&
                    (r.kostrikin.dim() == 0 || r.kostrikin.is_full())) {
                  note = c.label + ": expected a nonzero proper radical";
                  return false;
                }
                if (!r.kostrikin_graded || !r.quotient_jordan_3graded ||
                    !r.quotient_pair_nondegenerate) {
                  note = c.label + ": gradedness or quotient certification failed";
                  return false;
                }
              }
              return true;
            });

  criterion(7, "desk-scale Posner-Rowen: closures simple, type-I fingerprints", 60.0,
            [&](std::string& note) {
              struct Case {
                std::string label;
                JordanPair pair;
                int p, q;  // rectangular fingerprint target; p = 0 for none
              };
              std::vector<Case> cases;
              cases.push_back({"rect(1,1)/Q", rectangular_pair(Q, 1, 1), 1, 1});
              cases.push_back({"rect(1,1) over Q(i) restricted",
                               scalar_restriction(rectangular_pair(gauss(), 1, 1)), 1, 1});
              cases.push_back({"bilinear(3,id)/Q", bilinear_form_pair(Q, Matrix::identity(Q, 3)), 0, 0});
              for (auto& c : cases) {
                TkkAlgebra t = tkk_construct(c.pair);
                CentralClosure cl = central_closure(t.algebra);
                if (!cl.ok) {
                  note = c.label + ": closure refused: " + cl.refusal;
                  return false;
                }
                SimpleCertificate cert = is_simple(cl.algebra);
                if (!cert.simple()) {
                  note = c.label + ": closure not certified simple (" + cert.note + ")";
                  return false;
                }
                if (c.p > 0) {
                  StructureAlgebra model = sl_graded(c.p, c.q, cl.gamma);
                  bool fingerprint =
                      cl.algebra.dim == model.dim &&
                      cl.algebra.indices_of_degree(1).size() == model.indices_of_degree(1).size() &&
                      cl.algebra.indices_of_degree(0).size() == model.indices_of_degree(0).size() &&
                      cl.algebra.indices_of_degree(-1).size() == model.indices_of_degree(-1).size();
                  if (!fingerprint) {
                    note = c.label + ": graded fingerprint does not match sl(p+q)";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(8, "invariant suites (constructions, ideal lemmas, Psi, eval_hom)", 600.0,
            [&](std::string& note) {
              // Jacobi/grading after every construction
              auto mixed = pair_direct_sum(rectangular_pair(Q, 1, 1), zero_pair(Q, 1, 1));
              TkkAlgebra tm = tkk_construct(mixed);
              TkkAlgebra t12 = tkk_construct(rectangular_pair(Q, 1, 2));
              if (!verify_lie(tm.algebra).ok || !verify_lie(t12.algebra).ok ||
                  !verify_grading(tm.algebra).ok || !verify_grading(t12.algebra).ok) {
                note = "tkk constructions failed verification";
                return false;
              }
              StructureAlgebra dsum = direct_sum(t12.algebra, tm.algebra);
              if (!verify_lie(dsum).ok || !verify_grading(dsum).ok) {
                note = "direct_sum failed verification";
                return false;
              }
              Subspace zero_wings = lift_ideal(tm, [&] {
                PairSub s = PairSub::zero(mixed);
                s.plus = Subspace::span(Q, 2, {mixed.basis_vec(+1, 1)});
                s.minus = Subspace::span(Q, 2, {mixed.basis_vec(-1, 1)});
                return s;
              }());
              LieQuotient quo = quotient_by_ideal(tm.algebra, zero_wings);
              if (!verify_lie(quo.algebra).ok || !verify_grading(quo.algebra).ok) {
                note = "quotient failed verification";
                return false;
              }
              CentralClosure cl =
                  central_closure(tkk_construct(scalar_restriction(rectangular_pair(gauss(), 1, 1))).algebra);
              if (!cl.ok || !verify_lie(cl.algebra).ok || !verify_grading(cl.algebra).ok) {
                note = "closure failed verification";
                return false;
              }

              // ideal lemmas on all tested ideals
              std::vector<Subspace> tested = {zero_wings, Subspace::full(Q, tm.dim()),
                                              Subspace::zero(Q, tm.dim())};
              for (const auto& ideal : tested) {
                TildeIdealReport tr = tilde_ideal(tm, ideal);
                if (!tr.contained_in_i || !tr.meets_v_equals_pi) {
                  note = "tilde-ideal lemma failed";
                  return false;
                }
              }
              auto two = pair_direct_sum(rectangular_pair(Q, 1, 1), rectangular_pair(Q, 1, 1));
              TkkAlgebra t2 = tkk_construct(two);
              if (!is_essential_pair_ideal(two, PairSub::full(two)).essential ||
                  !is_essential_ideal(t2.algebra, lift_ideal(t2, PairSub::full(two))).essential) {
                note = "essential-lift lemma failed";
                return false;
              }

              // Psi ring-homomorphism identities
              CentroidIsoReport ci = verify_centroid_iso(scalar_restriction(rectangular_pair(gauss(), 1, 1)));
              if (!ci.pass || !ci.psi_ring_hom) {
                note = "Psi ring-homomorphism identities failed";
                return false;
              }

              // eval_hom bracket compatibility, >= 1000 randomized exact cases
              std::mt19937_64 eng(0x9d5e);
              const auto& l = t12.algebra;
              auto plus_idx = l.indices_of_degree(1);
              auto minus_idx = l.indices_of_degree(-1);
              auto rand_wing = [&](int sigma) {
                Vec v = vec_zero(Q, l.dim);
                for (int i : (sigma > 0 ? plus_idx : minus_idx))
                  v[i] = Q->from_int(std::int64_t(eng() % 9) - 4);
                return v;
              };
              LiePoly f = B(V(1, +1), V(1, -1));
              LiePoly g = B(B(V(2, +1), V(2, -1)), V(3, +1));
              int cases = 0;
              for (int trial = 0; trial < 1000; ++trial) {
                Assignment a;
                a[{1, +1}] = rand_wing(+1);
                a[{2, +1}] = rand_wing(+1);
                a[{3, +1}] = rand_wing(+1);
                a[{1, -1}] = rand_wing(-1);
                a[{2, -1}] = rand_wing(-1);
                if (!vec_eq(eval_hom(B(f, g), a, l), l.bracket(eval_hom(f, a, l), eval_hom(g, a, l)))) {
                  note = "eval_hom bracket compatibility failed";
                  return false;
                }
                ++cases;
              }
              if (cases < 1000) {
                note = "fewer than 1000 randomized cases";
                return false;
              }
              return true;
            });

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
