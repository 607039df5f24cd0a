#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace glk {

/// Finite-dimensional Jordan pair by trilinear structure constants
/// {x,y,z} with x,z in V^sigma and y in V^{-sigma}; Q_x y = (1/2){x,y,x}
/// is derived. Stored in the linear-pair presentation.
struct JordanPair {
  FieldPtr field;
  int dp = 0, dm = 0;
  // tplus[(i*dm+j)*dp + k] lists (l, c) of {b_i^+, b_j^-, b_k^+} in the V+ basis
  std::vector<std::vector<std::pair<int, Scalar>>> tplus;
  // tminus[(i*dp+j)*dm + k] lists (l, c) of {b_i^-, b_j^+, b_k^-} in the V- basis
  std::vector<std::vector<std::pair<int, Scalar>>> tminus;

  JordanPair() = default;
  JordanPair(FieldPtr f, int dplus, int dminus)
      : field(std::move(f)),
        dp(dplus),
        dm(dminus),
        tplus(std::size_t(dplus) * dminus * dplus),
        tminus(std::size_t(dminus) * dplus * dminus) {}

  int dim(int sigma) const { return sigma > 0 ? dp : dm; }

  const std::vector<std::pair<int, Scalar>>& entry(int sigma, int i, int j, int k) const {
    return sigma > 0 ? tplus[(std::size_t(i) * dm + j) * dp + k]
                     : tminus[(std::size_t(i) * dp + j) * dm + k];
  }

  void add_triple(int sigma, int i, int j, int k, int l, const Scalar& c) {
    if (c.is_zero()) return;
    auto& row = sigma > 0 ? tplus[(std::size_t(i) * dm + j) * dp + k]
                          : tminus[(std::size_t(i) * dp + j) * dm + k];
    for (auto& [idx, coeff] : row)
      if (idx == l) {
        coeff += c;
        if (coeff.is_zero())
          row.erase(std::find_if(row.begin(), row.end(),
                                 [&](const auto& e) { return e.first == l; }));
        return;
      }
    row.emplace_back(l, c);
  }

  Vec basis_vec(int sigma, int i) const {
    Vec v = vec_zero(field, dim(sigma));
    v[i] = field->one();
    return v;
  }

  Vec triple_basis(int sigma, int i, int j, int k) const {
    Vec v = vec_zero(field, dim(sigma));
    for (const auto& [l, c] : entry(sigma, i, j, k)) v[l] = c;
    return v;
  }

  /// {x, y, z} with x, z in V^sigma, y in V^{-sigma}; exact trilinear expansion.
  Vec triple(int sigma, const Vec& x, const Vec& y, const Vec& z) const {
    Vec r = vec_zero(field, dim(sigma));
    for (int i = 0; i < dim(sigma); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim(-sigma); ++j) {
        if (y[j].is_zero()) continue;
        Scalar xy = x[i] * y[j];
        for (int k = 0; k < dim(sigma); ++k) {
          if (z[k].is_zero()) continue;
          Scalar c = xy * z[k];
          for (const auto& [l, s] : entry(sigma, i, j, k)) r[l] += c * s;
        }
      }
    }
    return r;
  }

  /// Q_x y = (1/2) {x, y, x}
  Vec q_apply(int sigma, const Vec& x, const Vec& y) const {
    Vec t = triple(sigma, x, y, x);
    Scalar half = field->from_rational(Rational(1, 2));
    return vec_scale(t, half);
  }

  /// D_{x,y} on V^sigma: z -> {x, y, z}
  Matrix d_matrix(int sigma, const Vec& x, const Vec& y) const {
    int n = dim(sigma);
    Matrix m(field, n, n);
    for (int k = 0; k < n; ++k) {
      Vec col = triple(sigma, x, y, basis_vec(sigma, k));
      for (int l = 0; l < n; ++l) m.at(l, k) = col[l];
    }
    return m;
  }
};

struct JordanViolation {
  int sigma = 1;
  std::vector<int> tuple;
  std::string what;
};

struct JordanCheckReport {
  bool ok = true;
  std::vector<JordanViolation> violations;
};

/// Identities (i) {x,y,z} = {z,y,x} and (ii) [D(x,y),D(u,v)] =
/// D({x,y,u},v) - D(u,{y,x,v}) on all basis tuples, both signs.
inline JordanCheckReport verify_jordan_pair(const JordanPair& v) {
  JordanCheckReport rep;
  for (int sigma : {+1, -1}) {
    int ds = v.dim(sigma), dt = v.dim(-sigma);
    for (int i = 0; i < ds; ++i)
      for (int j = 0; j < dt; ++j)
        for (int k = 0; k < ds; ++k)
          if (!vec_eq(v.triple_basis(sigma, i, j, k), v.triple_basis(sigma, k, j, i))) {
            rep.ok = false;
            rep.violations.push_back({sigma, {i, j, k}, "outer symmetry"});
          }
    // precompute D matrices on basis pairs
    std::vector<Matrix> D(std::size_t(ds) * dt);
    for (int a = 0; a < ds; ++a)
      for (int b = 0; b < dt; ++b)
        D[std::size_t(a) * dt + b] = v.d_matrix(sigma, v.basis_vec(sigma, a), v.basis_vec(-sigma, b));
    auto d_of = [&](const Vec& x, int b) {
      Matrix m(v.field, ds, ds);
      for (int a = 0; a < ds; ++a)
        if (!x[a].is_zero()) m = m.add(D[std::size_t(a) * dt + b].scaled(x[a]));
      return m;
    };
    auto d_minus_of = [&](int a, const Vec& y) {
      Matrix m(v.field, ds, ds);
      for (int b = 0; b < dt; ++b)
        if (!y[b].is_zero()) m = m.add(D[std::size_t(a) * dt + b].scaled(y[b]));
      return m;
    };
    for (int a = 0; a < ds; ++a)
      for (int b = 0; b < dt; ++b)
        for (int c = 0; c < ds; ++c)
          for (int d = 0; d < dt; ++d) {
            const Matrix& Dxy = D[std::size_t(a) * dt + b];
            const Matrix& Duv = D[std::size_t(c) * dt + d];
            Matrix lhs = Dxy.commutator(Duv);
            Vec xyu = v.triple_basis(sigma, a, b, c);
            Vec yxv = v.triple(-sigma, v.basis_vec(-sigma, b), v.basis_vec(sigma, a),
                               v.basis_vec(-sigma, d));
            Matrix rhs = d_of(xyu, d).sub(d_minus_of(c, yxv));
            if (!(lhs == rhs)) {
              rep.ok = false;
              rep.violations.push_back({sigma, {a, b, c, d}, "operator identity"});
            }
          }
  }
  return rep;
}

/// Subspace pair (I+, I-), the carrier for pair ideals.
struct PairSub {
  Subspace plus, minus;

  static PairSub zero(const JordanPair& v) {
    return {Subspace::zero(v.field, v.dp), Subspace::zero(v.field, v.dm)};
  }
  static PairSub full(const JordanPair& v) {
    return {Subspace::full(v.field, v.dp), Subspace::full(v.field, v.dm)};
  }
  Subspace& side(int sigma) { return sigma > 0 ? plus : minus; }
  const Subspace& side(int sigma) const { return sigma > 0 ? plus : minus; }
  int dim() const { return plus.dim() + minus.dim(); }
  bool is_zero() const { return dim() == 0; }
  bool operator==(const PairSub& o) const { return plus == o.plus && minus == o.minus; }
  bool contains(const PairSub& o) const { return plus.contains(o.plus) && minus.contains(o.minus); }
};

/// Pair-ideal closure: {I,V,V} and {V,I,V} land in I, both signs.
inline bool is_pair_ideal(const JordanPair& v, const PairSub& s) {
  for (int sigma : {+1, -1}) {
    int ds = v.dim(sigma), dt = v.dim(-sigma);
    for (const auto& u : s.side(sigma).basis)
      for (int j = 0; j < dt; ++j)
        for (int k = 0; k < ds; ++k)
          if (!s.side(sigma).contains(v.triple(sigma, u, v.basis_vec(-sigma, j), v.basis_vec(sigma, k))))
            return false;
    for (const auto& u : s.side(-sigma).basis)
      for (int i = 0; i < ds; ++i)
        for (int k = 0; k < ds; ++k)
          if (!s.side(sigma).contains(v.triple(sigma, v.basis_vec(sigma, i), u, v.basis_vec(sigma, k))))
            return false;
  }
  return true;
}

/// Smallest pair ideal containing the seed subspaces.
inline PairSub pair_ideal_generated(const JordanPair& v, const PairSub& seed) {
  Echelon ep(v.field, v.dp), em(v.field, v.dm);
  for (const auto& r : seed.plus.basis) ep.insert(r);
  for (const auto& r : seed.minus.basis) em.insert(r);
  for (;;) {
    int before = ep.dim() + em.dim();
    std::vector<Vec> curp = ep.rows(), curm = em.rows();
    for (const auto& u : curp) {
      for (int j = 0; j < v.dm; ++j)
        for (int k = 0; k < v.dp; ++k)
          ep.insert(v.triple(+1, u, v.basis_vec(-1, j), v.basis_vec(+1, k)));
      for (int j = 0; j < v.dm; ++j)
        for (int k = 0; k < v.dm; ++k)
          em.insert(v.triple(-1, v.basis_vec(-1, j), u, v.basis_vec(-1, k)));
    }
    for (const auto& u : curm) {
      for (int j = 0; j < v.dp; ++j)
        for (int k = 0; k < v.dm; ++k)
          em.insert(v.triple(-1, u, v.basis_vec(+1, j), v.basis_vec(-1, k)));
      for (int j = 0; j < v.dp; ++j)
        for (int k = 0; k < v.dp; ++k)
          ep.insert(v.triple(+1, v.basis_vec(+1, j), u, v.basis_vec(+1, k)));
    }
    if (ep.dim() + em.dim() == before) break;
  }
  PairSub out = PairSub::zero(v);
  out.plus.basis = ep.rows();
  out.plus.pivots = ep.pivots();
  out.minus.basis = em.rows();
  out.minus.pivots = em.pivots();
  return out;
}

inline PairSub pair_ideal_generated(const JordanPair& v, int sigma, const Vec& seed) {
  PairSub s = PairSub::zero(v);
  s.side(sigma) = Subspace::span(v.field, v.dim(sigma), {seed});
  return pair_ideal_generated(v, s);
}

namespace detail {

/// span{ Q_x y : x in X-span, y in Y-span } via the linearized generators
/// {x, y, x'} over basis pairs of X (valid since 1/2 lies in every field here).
inline std::vector<Vec> q_image_span(const JordanPair& v, int sigma, const Subspace& x,
                                     const Subspace& y) {
  std::vector<Vec> out;
  for (std::size_t a = 0; a < x.basis.size(); ++a)
    for (std::size_t b = a; b < x.basis.size(); ++b)
      for (const auto& yy : y.basis)
        out.push_back(v.triple(sigma, x.basis[a], yy, x.basis[b]));
  return out;
}

}  // namespace detail

/// K*I = (Q_{K+}I- + Q_{V+}Q_{K-}I+, Q_{K-}I+ + Q_{V-}Q_{K+}I-), closed to an ideal.
inline PairSub ideal_product(const JordanPair& v, const PairSub& K, const PairSub& I) {
  PairSub gen = PairSub::zero(v);
  for (int sigma : {+1, -1}) {
    std::vector<Vec> parts =
        detail::q_image_span(v, sigma, K.side(sigma), I.side(-sigma));
    // Q_{V^sigma} (Q_{K^-sigma} I^sigma)
    Subspace inner = Subspace::span(
        v.field, v.dim(-sigma), detail::q_image_span(v, -sigma, K.side(-sigma), I.side(sigma)));
    auto outer = detail::q_image_span(v, sigma, Subspace::full(v.field, v.dim(sigma)), inner);
    parts.insert(parts.end(), outer.begin(), outer.end());
    gen.side(sigma) = Subspace::span(v.field, v.dim(sigma), parts);
  }
  return pair_ideal_generated(v, gen);
}

// ---- catalog ----

/// Rectangular matrix pair (M_{p,q}, M_{q,p}) with {x,y,z} = xyz + zyx.
inline JordanPair rectangular_pair(const FieldPtr& F, int p, int q) {
  if (p < 1 || q < 1) throw Error("rectangular_pair: invalid dimensions");
  JordanPair v(F, p * q, q * p);
  const Scalar one = F->one();
  // sigma = +: x = E_{a1,b1}, y = E_{c,d}, z = E_{a2,b2} (p x q, q x p, p x q)
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < q; ++b1)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < p; ++d)
          for (int a2 = 0; a2 < p; ++a2)
            for (int b2 = 0; b2 < q; ++b2) {
              int i = a1 * q + b1, j = c * p + d, k = a2 * q + b2;
              if (b1 == c && d == a2) v.add_triple(+1, i, j, k, a1 * q + b2, one);
              if (b2 == c && d == a1) v.add_triple(+1, i, j, k, a2 * q + b1, one);
            }
  // sigma = -: x = E_{c1,d1}, y = E_{a,b}, z = E_{c2,d2} (q x p, p x q, q x p)
  for (int c1 = 0; c1 < q; ++c1)
    for (int d1 = 0; d1 < p; ++d1)
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b)
          for (int c2 = 0; c2 < q; ++c2)
            for (int d2 = 0; d2 < p; ++d2) {
              int i = c1 * p + d1, j = a * q + b, k = c2 * p + d2;
              if (d1 == a && b == c2) v.add_triple(-1, i, j, k, c1 * p + d2, one);
              if (d2 == a && b == c1) v.add_triple(-1, i, j, k, c2 * p + d1, one);
            }
  return v;
}

/// Pair (F^n, F^n) of a symmetric bilinear form: {x,y,z} = b(x,y)z + b(z,y)x - b(x,z)y.
inline JordanPair bilinear_form_pair(const FieldPtr& F, const Matrix& gram) {
  if (gram.rows != gram.cols) throw Error("bilinear_form_pair: gram matrix must be square");
  if (!(gram == gram.transpose())) throw Error("bilinear_form_pair: gram matrix must be symmetric");
  int n = gram.rows;
  JordanPair v(F, n, n);
  for (int sigma : {+1, -1})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          v.add_triple(sigma, i, j, k, k, gram.at(i, j));
          v.add_triple(sigma, i, j, k, i, gram.at(k, j));
          v.add_triple(sigma, i, j, k, j, -gram.at(i, k));
        }
  return v;
}

inline JordanPair zero_pair(const FieldPtr& F, int m, int n) {
  if (m < 0 || n < 0) throw Error("zero_pair: invalid dimensions");
  return JordanPair(F, m, n);
}

/// Skew-symmetric n x n matrices under transpose with {x,y,z} = xyz + zyx
/// (the hermitian-type construction provided by the catalog).
inline JordanPair skew_pair(const FieldPtr& F, int n) {
  if (n < 2) throw Error("skew_pair: need n >= 2");
  int d = n * (n - 1) / 2;
  auto idx = [n](int i, int j) {  // i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  // dense basis matrices A_{ij} = E_ij - E_ji
  auto basis_mat = [&](int t) {
    Matrix m(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx(i, j) == t) {
          m.at(i, j) = F->one();
          m.at(j, i) = -F->one();
        }
    return m;
  };
  JordanPair v(F, d, d);
  for (int sigma : {+1, -1})
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Matrix x = basis_mat(i), y = basis_mat(j), z = basis_mat(k);
          Matrix t = x.mul(y).mul(z).add(z.mul(y).mul(x));
          for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c)
              if (!t.at(r, c).is_zero()) v.add_triple(sigma, i, j, k, idx(r, c), t.at(r, c));
        }
  return v;
}

inline JordanPair pair_direct_sum(const JordanPair& a, const JordanPair& b) {
  if (!a.field->same(b.field)) throw Error("pair_direct_sum: fields differ");
  JordanPair v(a.field, a.dp + b.dp, a.dm + b.dm);
  for (int sigma : {+1, -1}) {
    int ds = a.dim(sigma), dt = a.dim(-sigma);
    for (int i = 0; i < ds; ++i)
      for (int j = 0; j < dt; ++j)
        for (int k = 0; k < ds; ++k)
          for (const auto& [l, c] : a.entry(sigma, i, j, k)) v.add_triple(sigma, i, j, k, l, c);
    int op = a.dim(sigma), ot = a.dim(-sigma);
    for (int i = 0; i < b.dim(sigma); ++i)
      for (int j = 0; j < b.dim(-sigma); ++j)
        for (int k = 0; k < b.dim(sigma); ++k)
          for (const auto& [l, c] : b.entry(sigma, i, j, k))
            v.add_triple(sigma, i + op, j + ot, k + op, l + op, c);
  }
  return v;
}

/// Views a pair over an extension field as a pair over the base field;
/// basis b_i t^e, powers ascending within each original basis vector.
inline JordanPair scalar_restriction(const JordanPair& a) {
  if (a.field->kind != Field::Kind::Extension)
    throw Error("scalar_restriction: field is not an extension");
  const FieldPtr base = a.field->base;
  int d = a.field->degree();
  Scalar t = a.field->gen();
  JordanPair v(base, a.dp * d, a.dm * d);
  for (int sigma : {+1, -1}) {
    int ds = a.dim(sigma), dt = a.dim(-sigma);
    for (int i = 0; i < ds; ++i)
      for (int j = 0; j < dt; ++j)
        for (int k = 0; k < ds; ++k) {
          const auto& row = a.entry(sigma, i, j, k);
          if (row.empty()) continue;
          for (int e = 0; e < d; ++e)
            for (int f = 0; f < d; ++f)
              for (int g = 0; g < d; ++g) {
                Scalar tt = t.pow(e + f + g);
                for (const auto& [l, c] : row) {
                  Scalar val = c * tt;
                  for (int h = 0; h < d; ++h) {
                    const Scalar& coeff = val.coeffs()[h];
                    if (!coeff.is_zero())
                      v.add_triple(sigma, i * d + e, j * d + f, k * d + g, l * d + h, coeff);
                  }
                }
              }
        }
  }
  return v;
}

// ---- pair quotients ----

struct PairQuotient {
  JordanPair pair;
  PairSub ideal;
  std::vector<int> comp_plus, comp_minus;

  const std::vector<int>& comp(int sigma) const { return sigma > 0 ? comp_plus : comp_minus; }

  Vec project(int sigma, const Vec& v) const {
    Vec red = ideal.side(sigma).reduce(v);
    Vec out;
    for (int c : comp(sigma)) out.push_back(red[c]);
    return out;
  }

  Vec lift(int sigma, const Vec& q) const {
    Vec out = vec_zero(pair.field, sigma > 0 ? ideal.plus.ambient : ideal.minus.ambient);
    const auto& cc = comp(sigma);
    for (std::size_t i = 0; i < cc.size(); ++i) out[cc[i]] = q[i];
    return out;
  }
};

inline PairQuotient quotient_pair(const JordanPair& v, const PairSub& ideal) {
  if (!is_pair_ideal(v, ideal)) throw Error("quotient_pair: not a pair ideal");
  PairQuotient q;
  q.ideal = ideal;
  for (int sigma : {+1, -1}) {
    std::vector<bool> is_piv(v.dim(sigma), false);
    for (int p : ideal.side(sigma).pivots) is_piv[p] = true;
    auto& comp = sigma > 0 ? q.comp_plus : q.comp_minus;
    for (int i = 0; i < v.dim(sigma); ++i)
      if (!is_piv[i]) comp.push_back(i);
  }
  q.pair = JordanPair(v.field, int(q.comp_plus.size()), int(q.comp_minus.size()));
  for (int sigma : {+1, -1}) {
    const auto& cs = q.comp(sigma);
    const auto& ct = q.comp(-sigma);
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < ct.size(); ++j)
        for (std::size_t k = 0; k < cs.size(); ++k) {
          Vec t = v.triple_basis(sigma, cs[i], ct[j], cs[k]);
          Vec proj = q.project(sigma, t);
          for (std::size_t l = 0; l < proj.size(); ++l)
            if (!proj[l].is_zero())
              q.pair.add_triple(sigma, int(i), int(j), int(k), int(l), proj[l]);
        }
  }
  return q;
}

// ---- essentiality (finite test with recorded seeds) ----

struct PairEssentialityReport {
  bool essential = true;
  int k_extra = 16;
  std::uint64_t seed = 0;
  // the pseudorandom supplement actually tested, for reproducibility
  std::vector<std::pair<int, Vec>> random_seeds_used;
  // first failing generator if not essential: (sigma, generating vector)
  std::optional<std::pair<int, Vec>> disjoint_witness;
};

/// An ideal is reported essential when it meets the ideal generated by every
/// basis vector of V^+- plus k extra pseudorandom seed vectors (recorded).
inline PairEssentialityReport is_essential_pair_ideal(const JordanPair& v, const PairSub& ideal,
                                                      int k_extra = 16,
                                                      std::uint64_t seed = 0x6c6b) {
  PairEssentialityReport rep;
  rep.k_extra = k_extra;
  rep.seed = seed;
  auto meets = [&](const PairSub& other) {
    return ideal.plus.intersect(other.plus).dim() + ideal.minus.intersect(other.minus).dim() > 0;
  };
  for (int sigma : {+1, -1})
    for (int i = 0; i < v.dim(sigma); ++i) {
      PairSub gen = pair_ideal_generated(v, sigma, v.basis_vec(sigma, i));
      if (gen.is_zero()) continue;
      if (!meets(gen)) {
        rep.essential = false;
        rep.disjoint_witness = {sigma, v.basis_vec(sigma, i)};
        return rep;
      }
    }
  std::mt19937_64 eng(seed);
  for (int t = 0; t < k_extra; ++t) {
    int sigma = (eng() & 1) ? +1 : -1;
    Vec w = vec_zero(v.field, v.dim(sigma));
    for (auto& x : w) x = v.field->from_int(std::int64_t(eng() % 5) - 2);
    if (vec_is_zero(w)) continue;
    rep.random_seeds_used.emplace_back(sigma, w);
    PairSub gen = pair_ideal_generated(v, sigma, w);
    if (gen.is_zero()) continue;
    if (!meets(gen)) {
      rep.essential = false;
      rep.disjoint_witness = {sigma, w};
      return rep;
    }
  }
  return rep;
}

}  // namespace glk
