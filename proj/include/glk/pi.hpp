#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freelie.hpp"
#include "tkk.hpp"

namespace glk {

/// sl(p+q) on the basis {e_ij, i != j} (row-major) followed by
/// {e_ii - e_{i+1,i+1}}, block 3-graded: deg +1 on the (rows < p) x (cols >= p)
/// block, -1 on the transpose block, 0 elsewhere.
inline StructureAlgebra sl_graded(int p, int q, const FieldPtr& F) {
  if (p < 1 || q < 1) throw Error("sl_graded: p, q must be >= 1");
  int n = p + q;
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  int dim = int(offdiag.size()) + n - 1;
  // basis element as dense matrix
  auto basis_mat = [&](int t) {
    Matrix m(F, n, n);
    if (t < int(offdiag.size())) {
      m.at(offdiag[t].first, offdiag[t].second) = F->one();
    } else {
      int i = t - int(offdiag.size());
      m.at(i, i) = F->one();
      m.at(i + 1, i + 1) = -F->one();
    }
    return m;
  };
  // decompose a traceless matrix into basis coordinates
  auto decompose = [&](const Matrix& m) {
    std::vector<std::pair<int, Scalar>> out;
    for (std::size_t t = 0; t < offdiag.size(); ++t) {
      const Scalar& c = m.at(offdiag[t].first, offdiag[t].second);
      if (!c.is_zero()) out.emplace_back(int(t), c);
    }
    Scalar acc = F->zero();
    for (int i = 0; i < n - 1; ++i) {
      acc += m.at(i, i);
      if (!acc.is_zero()) out.emplace_back(int(offdiag.size()) + i, acc);
    }
    return out;
  };
  StructureAlgebra a(F, dim);
  for (int s = 0; s < dim; ++s)
    for (int t = s + 1; t < dim; ++t) {
      Matrix c = basis_mat(s).commutator(basis_mat(t));
      a.set_bracket(s, t, decompose(c));
    }
  std::vector<int> grading(dim, 0);
  for (std::size_t t = 0; t < offdiag.size(); ++t) {
    auto [i, j] = offdiag[t];
    if (i < p && j >= p) grading[t] = +1;
    if (i >= p && j < p) grading[t] = -1;
  }
  a.grading = std::move(grading);
  return a;
}

/// Center subtleties arise when the characteristic divides p+q.
inline std::optional<std::string> sl_graded_warning(int p, int q, const FieldPtr& F) {
  std::int64_t ch = F->characteristic();
  if (ch != 0 && (p + q) % ch == 0)
    return "char divides p+q: sl(" + std::to_string(p + q) + ") has a nontrivial center in characteristic " +
           std::to_string(ch);
  return std::nullopt;
}

struct IdentityOptions {
  std::int64_t budget = 10'000'000;
  bool randomized = false;
  std::uint64_t seed = 1;
  int trials = 200;
};

struct WitnessAssignment {
  Assignment assignment;
  Vec value;  // nonzero re-evaluation of the tested polynomial
};

struct IdentityReport {
  bool identity = true;
  bool multilinearized = false;
  LiePoly tested;  // the polynomial the verdict applies to
  std::string method;
  std::optional<WitnessAssignment> witness;
};

/// Identity test on a 3-graded algebra. Non-multilinear input is linearized
/// first (the verdict then applies to the multilinearization, flagged in the
/// report). Exhaustive mode evaluates every support component on all tuples
/// of graded basis vectors, sound and complete by multilinearity; components
/// are scanned by increasing support so a component witness always
/// re-evaluates nonzero on the full polynomial. Randomized mode samples
/// assignments (completeness not claimed; seed and trials recorded).
inline IdentityReport is_identity(const LiePoly& f, const StructureAlgebra& l,
                                  const IdentityOptions& opts = {}) {
  if (!l.grading) throw Error("is_identity: algebra has no grading");
  IdentityReport rep;
  auto ml = multilinearize(f);
  rep.multilinearized = ml.changed;
  rep.tested = ml.poly;
  if (ml.poly.is_zero()) {
    rep.method = "trivial (zero polynomial)";
    return rep;
  }
  auto vars_of = [](const LiePoly& p) {
    auto s = p.variables();
    return std::vector<VarRef>(s.begin(), s.end());
  };
  auto plus_idx = l.indices_of_degree(1);
  auto minus_idx = l.indices_of_degree(-1);

  if (opts.randomized) {
    rep.method = "randomized(seed=" + std::to_string(opts.seed) +
                 ",trials=" + std::to_string(opts.trials) + ")";
    std::mt19937_64 eng(opts.seed);
    auto rand_vec = [&](int sigma) {
      Vec v = vec_zero(l.field, l.dim);
      for (int i : (sigma > 0 ? plus_idx : minus_idx)) {
        if (l.field->finite())
          v[i] = l.field->element_by_index(std::int64_t(eng() % std::uint64_t(l.field->order())));
        else
          v[i] = l.field->from_int(std::int64_t(eng() % 7) - 3);
      }
      return v;
    };
    std::vector<VarRef> vars = vars_of(ml.poly);
    for (int t = 0; t < opts.trials; ++t) {
      Assignment a;
      for (const auto& v : vars) a[v] = rand_vec(v.sign);
      Vec val = eval_hom(ml.poly, a, l);
      if (!vec_is_zero(val)) {
        rep.identity = false;
        rep.witness = WitnessAssignment{std::move(a), std::move(val)};
        return rep;
      }
    }
    return rep;  // "identity" with a randomized-confidence caveat in method
  }

  rep.method = "exhaustive-basis";
  std::vector<LiePoly> comps = support_components(ml.poly);
  std::sort(comps.begin(), comps.end(), [&](const LiePoly& a, const LiePoly& b) {
    return a.variables().size() < b.variables().size();
  });
  for (const auto& comp : comps) {
    std::vector<VarRef> vars = vars_of(comp);
    std::int64_t total = 1;
    for (const auto& v : vars) {
      int d = int(v.sign > 0 ? plus_idx.size() : minus_idx.size());
      if (d == 0) {
        total = 0;
        break;
      }
      if (total > opts.budget / d + 1) total = opts.budget + 1;
      else total *= d;
    }
    if (total > opts.budget) throw BudgetExceeded("exhaustive identity test", total, opts.budget);
    if (total == 0) continue;  // a wing is zero: every evaluation vanishes
    std::vector<int> odo(vars.size(), 0);
    for (std::int64_t step = 0; step < total; ++step) {
      Assignment a;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        const auto& idx = vars[k].sign > 0 ? plus_idx : minus_idx;
        a[vars[k]] = l.basis_vec(idx[odo[k]]);
      }
      Vec val = eval_hom(comp, a, l);
      if (!vec_is_zero(val)) {
        // assemble the full-polynomial witness: remaining variables -> 0
        Assignment full = a;
        for (const auto& v : ml.poly.variables())
          if (!full.count(v)) full[v] = vec_zero(l.field, l.dim);
        Vec fval = eval_hom(ml.poly, full, l);
        if (vec_is_zero(fval))
          throw Error("is_identity: component witness cancelled on the full polynomial");
        rep.identity = false;
        rep.witness = WitnessAssignment{std::move(full), std::move(fval)};
        return rep;
      }
      // advance odometer
      for (std::size_t k = 0; k < vars.size(); ++k) {
        const auto& idx = vars[k].sign > 0 ? plus_idx : minus_idx;
        if (++odo[k] < int(idx.size())) break;
        odo[k] = 0;
      }
    }
  }
  return rep;
}

struct EssentialityReport {
  bool essential = false;
  AssocPoly pi_image;
  int leading_degree = 0;
  bool monic = false;
};

/// Essential iff pi(f) != 0 (the field case); the monic flag reports whether
/// the leading word literally has coefficient +-1.
inline EssentialityReport is_essential(const LiePoly& f) {
  EssentialityReport rep;
  rep.pi_image = pi_special(f);
  rep.essential = !rep.pi_image.is_zero();
  rep.leading_degree = rep.pi_image.degree();
  if (auto lead = rep.pi_image.leading())
    rep.monic = lead->second == 1 || lead->second == -1;
  return rep;
}

struct WitnessSearchReport {
  std::optional<std::pair<int, int>> witness;
  int max_pq = 0;
  bool essential = false;       // pi(f) != 0
  bool bound_exhausted = false; // essential but no witness within the bound
  IdentityReport found_report;  // report at the found (p, q)
};

/// Scans (p, q) with p+q increasing, p <= q, p+q <= max_pq; returns the first
/// pair where f is not an identity of sl_graded(p, q). A found witness with
/// pi(f) = 0 is an internal error; pi(f) != 0 with no witness within the
/// bound is reported as bound-exhausted, never as "not essential".
inline WitnessSearchReport essential_witness_search(const LiePoly& f, int max_pq,
                                                    const IdentityOptions& opts = {}) {
  WitnessSearchReport rep;
  rep.max_pq = max_pq;
  rep.essential = is_essential(f).essential;
  auto Q = Field::rationals();
  for (int s = 2; s <= max_pq; ++s)
    for (int p = 1; 2 * p <= s; ++p) {
      int q = s - p;
      StructureAlgebra sl = sl_graded(p, q, Q);
      IdentityReport r = is_identity(f, sl, opts);
      if (!r.identity) {
        if (!rep.essential)
          throw Error("witness found for a polynomial with pi(f) = 0 (internal inconsistency)");
        rep.witness = {p, q};
        rep.found_report = std::move(r);
        return rep;
      }
    }
  rep.bound_exhausted = rep.essential;
  return rep;
}

struct InducedJordanIdentity {
  LiePoly g_plus, g_minus;
  int deg_f = 0, deg_g = 0;
  bool degree_contract_ok = true;  // odd deg f: deg g = deg f; even: deg g = deg f + 1
};

/// g = (f_1 + [f_0, y+], f_-1 + [f_0, y-]) with fresh lowering variables.
inline InducedJordanIdentity induced_jordan_identity(const LiePoly& f) {
  InducedJordanIdentity out;
  LiePoly f1 = f.theta_component(1), f0 = f.theta_component(0), fm = f.theta_component(-1);
  out.g_plus = f1 + lower_to_grade(f0, +1);
  out.g_minus = fm + lower_to_grade(f0, -1);
  out.deg_f = f.degree();
  out.deg_g = std::max(out.g_plus.degree(), out.g_minus.degree());
  if (f.is_zero())
    out.degree_contract_ok = true;
  else if (out.deg_f % 2 == 1)
    out.degree_contract_ok = (out.deg_g == out.deg_f);
  else
    out.degree_contract_ok = (out.deg_g == out.deg_f + 1);
  return out;
}

struct JordanIdentityReport {
  bool identity = true;
  IdentityReport plus, minus;
};

/// Evaluates the induced pair polynomial over V through the TKK bracket;
/// components must be homogeneous of theta-degree +-1.
inline JordanIdentityReport jordan_is_identity(const LiePoly& g_plus, const LiePoly& g_minus,
                                               const JordanPair& v,
                                               const IdentityOptions& opts = {}) {
  for (const auto& [t, c] : g_plus.terms)
    if (t->theta != 1) throw Error("jordan_is_identity: g+ not homogeneous of degree +1");
  for (const auto& [t, c] : g_minus.terms)
    if (t->theta != -1) throw Error("jordan_is_identity: g- not homogeneous of degree -1");
  TkkAlgebra t = tkk_construct(v);
  JordanIdentityReport rep;
  rep.plus = is_identity(g_plus, t.algebra, opts);
  rep.minus = is_identity(g_minus, t.algebra, opts);
  rep.identity = rep.plus.identity && rep.minus.identity;
  return rep;
}

}  // namespace glk
