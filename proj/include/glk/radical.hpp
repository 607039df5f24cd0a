#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordan.hpp"
#include "lie.hpp"
#include "tkk.hpp"

namespace glk {

enum class RadicalMode { enumerate_field, witness, structural };

inline std::string radical_mode_name(RadicalMode m) {
  switch (m) {
    case RadicalMode::enumerate_field: return "enumerate";
    case RadicalMode::witness: return "witness";
    case RadicalMode::structural: return "structural";
  }
  return "?";
}

struct RadicalParams {
  RadicalMode mode = RadicalMode::enumerate_field;
  std::int64_t budget = 10'000'000;  // |F|^dim cap for enumeration
  std::uint64_t seed = 0xabcdef;
  int trials = 4000;
};

namespace detail {

inline std::int64_t pow_clamped(std::int64_t q, int e, std::int64_t clamp) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > clamp / q + 1) return clamp + 1;
    r *= q;
  }
  return r;
}

/// Enumerates projective representatives (first nonzero coordinate = 1) of
/// F^n over a finite field, invoking fn on each; stops early when fn returns
/// false.
template <typename Fn>
void for_each_projective(const FieldPtr& F, int n, Fn&& fn) {
  std::int64_t q = F->order();
  for (int lead = 0; lead < n; ++lead) {
    int free = n - lead - 1;
    std::vector<std::int64_t> digits(free, 0);
    for (;;) {
      Vec v = vec_zero(F, n);
      v[lead] = F->one();
      for (int i = 0; i < free; ++i) v[lead + 1 + i] = F->element_by_index(digits[i]);
      if (!fn(v)) return;
      int pos = 0;
      while (pos < free && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == free) break;
    }
  }
}

// int64 triple tables of a prime-field Jordan pair
struct ModpPair {
  std::int64_t p = 0;
  int dp = 0, dm = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> tp, tm;

  static std::optional<ModpPair> make(const JordanPair& v) {
    if (v.field->kind != Field::Kind::Prime) return std::nullopt;
    ModpPair m;
    m.p = v.field->p;
    m.dp = v.dp;
    m.dm = v.dm;
    m.tp.resize(v.tplus.size());
    m.tm.resize(v.tminus.size());
    for (std::size_t i = 0; i < v.tplus.size(); ++i)
      for (const auto& [l, c] : v.tplus[i]) m.tp[i].emplace_back(l, c.residue());
    for (std::size_t i = 0; i < v.tminus.size(); ++i)
      for (const auto& [l, c] : v.tminus[i]) m.tm[i].emplace_back(l, c.residue());
    return m;
  }

  /// Q_x = 0 as an operator, tested as {x, b_j, x} = 0 for all basis j.
  bool is_azd(int sigma, const std::vector<std::int64_t>& x) const {
    int ds = sigma > 0 ? dp : dm, dt = sigma > 0 ? dm : dp;
    const auto& tab = sigma > 0 ? tp : tm;
    for (int j = 0; j < dt; ++j) {
      std::vector<std::int64_t> acc(ds, 0);
      for (int i = 0; i < ds; ++i) {
        if (!x[i]) continue;
        for (int k = 0; k < ds; ++k) {
          if (!x[k]) continue;
          std::int64_t c = glk::detail::mod_mul(x[i], x[k], p);
          for (const auto& [l, s] : tab[(std::size_t(i) * dt + j) * ds + k])
            acc[l] = glk::detail::mod_norm(acc[l] + glk::detail::mod_mul(c, s, p), p);
        }
      }
      for (auto a : acc)
        if (a) return false;
    }
    return true;
  }
};

// int64 bracket table of a prime-field Lie algebra
struct ModpLie {
  std::int64_t p = 0;
  int n = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> table;

  static std::optional<ModpLie> make(const StructureAlgebra& a) {
    if (a.field->kind != Field::Kind::Prime) return std::nullopt;
    ModpLie m;
    m.p = a.field->p;
    m.n = a.dim;
    m.table.resize(a.table.size());
    for (std::size_t i = 0; i < a.table.size(); ++i)
      for (const auto& [k, c] : a.table[i]) m.table[i].emplace_back(k, c.residue());
    return m;
  }

  bool is_sandwich(const std::vector<std::int64_t>& z) const {
    // M = ad z, then M^2 = 0 with early exit
    std::vector<std::int64_t> M(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      if (!z[i]) continue;
      for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : table[std::size_t(i) * n + j])
          M[std::size_t(k) * n + j] =
              glk::detail::mod_norm(M[std::size_t(k) * n + j] + glk::detail::mod_mul(z[i], c, p), p);
    }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        std::int64_t acc = 0;
        for (int k = 0; k < n; ++k)
          if (M[std::size_t(r) * n + k] && M[std::size_t(k) * n + c])
            acc = glk::detail::mod_norm(
                acc + glk::detail::mod_mul(M[std::size_t(r) * n + k], M[std::size_t(k) * n + c], p), p);
        if (acc) return false;
      }
    return true;
  }
};

inline std::vector<std::int64_t> to_int_vec(const Vec& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.residue());
  return out;
}

}  // namespace detail

// ---- absolute zero divisors ----

struct AzdResult {
  // projective representatives (the property is scaling-invariant)
  std::vector<std::pair<int, Vec>> witnesses;
  bool exact = false;  // enumerate mode: the list is complete up to scaling
};

inline bool is_absolute_zero_divisor(const JordanPair& v, int sigma, const Vec& x) {
  for (int j = 0; j < v.dim(-sigma); ++j)
    if (!vec_is_zero(v.triple(sigma, x, v.basis_vec(-sigma, j), x))) return false;
  return true;
}

/// All (enumerate) or some (witness) nonzero x with Q_x = 0, up to scaling.
inline AzdResult absolute_zero_divisors(const JordanPair& v, const RadicalParams& params = {}) {
  AzdResult res;
  if (params.mode == RadicalMode::structural)
    throw Error("structural mode applies to Lie algebras (Killing certificate)");
  if (params.mode == RadicalMode::enumerate_field) {
    if (!v.field->finite()) throw Error("enumerate mode requires a finite field");
    std::int64_t q = v.field->order();
    for (int sigma : {+1, -1}) {
      std::int64_t total = detail::pow_clamped(q, v.dim(sigma), params.budget);
      if (total > params.budget)
        throw BudgetExceeded("zero-divisor enumeration |F|^dim", total, params.budget);
    }
    auto mod = detail::ModpPair::make(v);
    for (int sigma : {+1, -1}) {
      detail::for_each_projective(v.field, v.dim(sigma), [&](const Vec& x) {
        bool azd = mod ? mod->is_azd(sigma, detail::to_int_vec(x))
                       : is_absolute_zero_divisor(v, sigma, x);
        if (azd) res.witnesses.emplace_back(sigma, x);
        return true;
      });
    }
    res.exact = true;
    return res;
  }
  // witness mode: randomized lower bound, seed recorded by the caller
  std::mt19937_64 eng(params.seed);
  for (int t = 0; t < params.trials; ++t) {
    int sigma = (eng() & 1) ? +1 : -1;
    Vec x = vec_zero(v.field, v.dim(sigma));
    for (auto& c : x)
      c = v.field->finite()
              ? v.field->element_by_index(std::int64_t(eng() % std::uint64_t(v.field->order())))
              : v.field->from_int(std::int64_t(eng() % 7) - 3);
    if (vec_is_zero(x)) continue;
    if (is_absolute_zero_divisor(v, sigma, x)) res.witnesses.emplace_back(sigma, x);
  }
  res.exact = false;
  return res;
}

// ---- sandwich elements ----

inline bool is_sandwich(const StructureAlgebra& l, const Vec& z) {
  Matrix ad = l.ad(z);
  return ad.mul(ad).is_zero();
}

struct SandwichResult {
  std::vector<Vec> witnesses;  // projective representatives
  bool exact = false;
  bool structural_certificate = false;  // Killing nondegenerate over char 0
};

inline SandwichResult sandwich_elements(const StructureAlgebra& l, const RadicalParams& params = {}) {
  SandwichResult res;
  if (params.mode == RadicalMode::structural) {
    if (l.field->characteristic() != 0)
      throw Error("structural certificate requires characteristic zero");
    if (l.dim > 0 && rank(killing_form(l)) == l.dim) {
      res.exact = true;
      res.structural_certificate = true;  // no nonzero sandwiches exist
      return res;
    }
    throw Error("structural certificate unavailable (Killing form degenerate)");
  }
  if (params.mode == RadicalMode::enumerate_field) {
    if (!l.field->finite()) throw Error("enumerate mode requires a finite field");
    std::int64_t total = detail::pow_clamped(l.field->order(), l.dim, params.budget);
    if (total > params.budget)
      throw BudgetExceeded("sandwich enumeration |F|^dim", total, params.budget);
    auto mod = detail::ModpLie::make(l);
    detail::for_each_projective(l.field, l.dim, [&](const Vec& z) {
      bool sw = mod ? mod->is_sandwich(detail::to_int_vec(z)) : is_sandwich(l, z);
      if (sw) res.witnesses.push_back(z);
      return true;
    });
    res.exact = true;
    return res;
  }
  std::mt19937_64 eng(params.seed);
  for (int t = 0; t < params.trials; ++t) {
    Vec z = vec_zero(l.field, l.dim);
    for (auto& c : z)
      c = l.field->finite()
              ? l.field->element_by_index(std::int64_t(eng() % std::uint64_t(l.field->order())))
              : l.field->from_int(std::int64_t(eng() % 7) - 3);
    if (vec_is_zero(z)) continue;
    if (is_sandwich(l, z)) res.witnesses.push_back(z);
  }
  return res;
}

// ---- McCrimmon radical ----

struct PairRadicalReport {
  PairSub radical;
  int saturation_steps = 0;
  RadicalMode mode = RadicalMode::enumerate_field;
  bool exact = false;  // witness-mode results are lower bounds
};

/// Saturation: find absolute zero divisors, close them to a pair ideal, pass
/// to the quotient, repeat until none are found. The radical is returned as a
/// subspace pair of the original V (preimages through the quotient tower).
inline PairRadicalReport mccrimmon_radical(const JordanPair& v, const RadicalParams& params = {}) {
  PairRadicalReport rep;
  rep.mode = params.mode;
  rep.radical = PairSub::zero(v);
  for (;;) {
    PairQuotient q = quotient_pair(v, rep.radical);
    AzdResult azd = absolute_zero_divisors(q.pair, params);
    if (azd.witnesses.empty()) {
      rep.exact = (params.mode == RadicalMode::enumerate_field);
      return rep;
    }
    PairSub seeds = rep.radical;
    for (const auto& [sigma, w] : azd.witnesses)
      seeds.side(sigma) =
          seeds.side(sigma).sum(Subspace::span(v.field, v.dim(sigma), {q.lift(sigma, w)}));
    PairSub next = pair_ideal_generated(v, seeds);
    if (next.dim() == rep.radical.dim())
      throw Error("mccrimmon_radical: saturation failed to grow");
    rep.radical = std::move(next);
    ++rep.saturation_steps;
  }
}

// ---- Kostrikin radical ----

struct LieRadicalReport {
  Subspace radical;
  int saturation_steps = 0;
  RadicalMode mode = RadicalMode::enumerate_field;
  bool exact = false;
  bool structural_certificate = false;
};

inline LieRadicalReport kostrikin_radical(const StructureAlgebra& l, const RadicalParams& params = {}) {
  LieRadicalReport rep;
  rep.mode = params.mode;
  rep.radical = Subspace::zero(l.field, l.dim);
  if (params.mode == RadicalMode::structural) {
    SandwichResult s = sandwich_elements(l, params);  // throws when unavailable
    rep.exact = s.exact;
    rep.structural_certificate = s.structural_certificate;
    return rep;  // K(L) = 0 certified
  }
  // saturation works on an ungraded copy (intermediate ideals need no grading)
  StructureAlgebra plain = l;
  plain.grading.reset();
  for (;;) {
    LieQuotient q = quotient_by_ideal(plain, rep.radical);
    SandwichResult sw = sandwich_elements(q.algebra, params);
    if (sw.witnesses.empty()) {
      rep.exact = (params.mode == RadicalMode::enumerate_field);
      return rep;
    }
    std::vector<Vec> seeds = rep.radical.basis;
    for (const auto& w : sw.witnesses) seeds.push_back(q.lift(w));
    Subspace next = ideal_generated(plain, Subspace::span(l.field, l.dim, seeds));
    if (next.dim() == rep.radical.dim()) throw Error("kostrikin_radical: saturation failed to grow");
    rep.radical = std::move(next);
    ++rep.saturation_steps;
  }
}

// ---- the radical correspondence ----

struct RadicalCorrespondenceReport {
  bool pass = false;
  Subspace kostrikin;
  PairSub mccrimmon;
  Subspace anti_image_side;
  bool kostrikin_graded = false;
  bool quotient_jordan_3graded = false;
  bool quotient_pair_nondegenerate = false;
  std::string detail;
};

/// K(L) vs the anti-image of I(Mc(V)) for L = TKK(V), exact subspace equality,
/// plus the gradedness of K(L) and nondegeneracy of the quotient's pair.
inline RadicalCorrespondenceReport verify_radical_correspondence(const JordanPair& v,
                                                                 const RadicalParams& params = {}) {
  RadicalCorrespondenceReport rep;
  TkkAlgebra t = tkk_construct(v);
  rep.kostrikin = kostrikin_radical(t.algebra, params).radical;
  rep.mccrimmon = mccrimmon_radical(v, params).radical;
  Subspace lifted = lift_ideal(t, rep.mccrimmon);
  rep.anti_image_side = anti_image(t.algebra, lifted);
  rep.pass = (rep.kostrikin == rep.anti_image_side);

  // K(L) is a graded ideal: each graded component of each basis row stays inside
  rep.kostrikin_graded = true;
  for (const auto& row : rep.kostrikin.basis)
    for (int d : {-1, 0, 1})
      if (!rep.kostrikin.contains(t.algebra.component(row, d))) rep.kostrikin_graded = false;

  if (rep.kostrikin_graded) {
    LieQuotient q = quotient_by_ideal(t.algebra, rep.kostrikin);
    if (q.algebra.dim == 0) {
      rep.quotient_jordan_3graded = true;
      rep.quotient_pair_nondegenerate = true;
    } else {
      rep.quotient_jordan_3graded = verify_jordan_3graded(q.algebra).ok;
      if (rep.quotient_jordan_3graded) {
        auto assoc = associated_pair(q.algebra);
        rep.quotient_pair_nondegenerate =
            absolute_zero_divisors(assoc.pair, params).witnesses.empty();
      }
    }
  }
  if (!rep.pass) rep.detail = "K(L) differs from the anti-image of I(Mc(V))";
  return rep;
}

// ---- user-supplied strongly prime ideals ----

struct StronglyPrimeReport {
  bool pair_ideal = false;
  bool quotient_prime = false;          // tested on basis-generated ideal pairs
  bool quotient_nondegenerate = false;  // mode-certified
  bool strongly_prime = false;
};

/// Checks a user-supplied candidate P: the quotient pair must be prime (no
/// two nonzero basis-generated ideals with zero *-product) and nondegenerate
/// in the requested mode. Full prime-spectrum enumeration is out of scope.
inline StronglyPrimeReport verify_strongly_prime_ideal(const JordanPair& v, const PairSub& P,
                                                       const RadicalParams& params = {}) {
  StronglyPrimeReport rep;
  rep.pair_ideal = is_pair_ideal(v, P);
  if (!rep.pair_ideal) return rep;
  PairQuotient q = quotient_pair(v, P);
  if (q.pair.dp + q.pair.dm == 0) return rep;  // the zero pair is not prime
  rep.quotient_prime = true;
  std::vector<PairSub> gens;
  for (int sigma : {+1, -1})
    for (int i = 0; i < q.pair.dim(sigma); ++i) {
      PairSub g = pair_ideal_generated(q.pair, sigma, q.pair.basis_vec(sigma, i));
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  for (std::size_t a = 0; a < gens.size() && rep.quotient_prime; ++a)
    for (std::size_t b = 0; b < gens.size() && rep.quotient_prime; ++b)
      if (ideal_product(q.pair, gens[a], gens[b]).is_zero()) rep.quotient_prime = false;
  rep.quotient_nondegenerate = absolute_zero_divisors(q.pair, params).witnesses.empty();
  rep.strongly_prime = rep.quotient_prime && rep.quotient_nondegenerate;
  return rep;
}

struct PrimeIntersectionReport {
  bool pass = false;
  Subspace intersection;  // of the anti-images of the lifted supplied ideals
  Subspace kostrikin;
  std::vector<StronglyPrimeReport> supplied_checks;
};

/// K(L) as the intersection of the anti-images of the lifted user-supplied
/// strongly prime ideals, verified against the computed Kostrikin radical
/// (scoped to the supplied list, never a spectrum enumeration).
inline PrimeIntersectionReport verify_prime_intersection(const JordanPair& v,
                                                         const std::vector<PairSub>& primes,
                                                         const RadicalParams& params = {}) {
  PrimeIntersectionReport rep;
  TkkAlgebra t = tkk_construct(v);
  Subspace inter = Subspace::full(v.field, t.dim());
  for (const auto& P : primes) {
    rep.supplied_checks.push_back(verify_strongly_prime_ideal(v, P, params));
    if (!rep.supplied_checks.back().strongly_prime) return rep;  // pass stays false
    inter = inter.intersect(anti_image(t.algebra, lift_ideal(t, P)));
  }
  rep.intersection = inter;
  rep.kostrikin = kostrikin_radical(t.algebra, params).radical;
  rep.pass = (rep.intersection == rep.kostrikin);
  return rep;
}

struct NondegenerateQuotientResult {
  LieQuotient quotient;
  LieRadicalReport radical;
  bool recertified = false;  // quotient is sandwich-free in the same mode
};

inline NondegenerateQuotientResult nondegenerate_quotient(const StructureAlgebra& l,
                                                          const RadicalParams& params = {}) {
  NondegenerateQuotientResult res;
  res.radical = kostrikin_radical(l, params);
  res.quotient = quotient_by_ideal(l, res.radical.radical);
  res.recertified = sandwich_elements(res.quotient.algebra, params).witnesses.empty();
  return res;
}

}  // namespace glk
