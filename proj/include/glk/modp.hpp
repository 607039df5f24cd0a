#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "field.hpp"

namespace glk::modp {

/// Dense matrix over F_p with machine integers; the fast path for
/// finite-field enumeration and invariant-subspace searches.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Mat mul(const Mat& o, std::int64_t p) const {
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        std::int64_t x = at(i, k);
        if (!x) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = detail::mod_norm(r.at(i, j) + detail::mod_mul(x, o.at(k, j), p), p);
      }
    return r;
  }

  Mat add(const Mat& o, std::int64_t p) const {
    Mat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = detail::mod_norm(r.a[i] + o.a[i], p);
    return r;
  }

  Mat scaled(std::int64_t c, std::int64_t p) const {
    Mat r = *this;
    for (auto& x : r.a) x = detail::mod_mul(x, detail::mod_norm(c, p), p);
    return r;
  }

  Mat transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (auto x : a)
      if (x) return false;
    return true;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v, std::int64_t p) const {
    std::vector<std::int64_t> r(rows, 0);
    for (int i = 0; i < rows; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < cols; ++j) acc = detail::mod_norm(acc + detail::mod_mul(at(i, j), v[j], p), p);
      r[i] = acc;
    }
    return r;
  }
};

inline std::vector<int> rref(Mat& m, std::int64_t p) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    std::int64_t inv = detail::mod_inv(m.at(r, c), p);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = detail::mod_mul(m.at(r, j), inv, p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || !m.at(i, c)) continue;
      std::int64_t f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = detail::mod_norm(m.at(i, j) - detail::mod_mul(f, m.at(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Kernel basis rows (canonical, echelonized) of m over F_p.
inline std::vector<std::vector<std::int64_t>> kernel(const Mat& m, std::int64_t p) {
  Mat t = m;
  std::vector<int> pivots = rref(t, p);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<std::vector<std::int64_t>> out;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<std::int64_t> v(m.cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = detail::mod_norm(-t.at(int(r), c), p);
    out.push_back(std::move(v));
  }
  return out;
}

/// Incremental echelon basis over F_p.
struct Echelon {
  std::int64_t p;
  int ambient;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<int> pivots;

  Echelon(std::int64_t pp, int n) : p(pp), ambient(n) {}

  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::int64_t c = v[pivots[r]];
      if (!c) continue;
      for (int j = 0; j < ambient; ++j)
        v[j] = detail::mod_norm(v[j] - detail::mod_mul(c, rows[r][j], p), p);
    }
    return v;
  }

  bool insert(std::vector<std::int64_t> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < ambient; ++j)
      if (v[j]) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    std::int64_t inv = detail::mod_inv(v[piv], p);
    for (auto& x : v) x = detail::mod_mul(x, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::int64_t c = rows[r][piv];
      if (!c) continue;
      for (int j = 0; j < ambient; ++j)
        rows[r][j] = detail::mod_norm(rows[r][j] - detail::mod_mul(c, v[j], p), p);
    }
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, piv);
    return true;
  }

  int dim() const { return int(rows.size()); }
};

/// Submodule generated by v under the given action matrices.
inline Echelon spin(const std::vector<std::int64_t>& v, const std::vector<Mat>& actions,
                    std::int64_t p) {
  int n = int(v.size());
  Echelon e(p, n);
  std::vector<std::vector<std::int64_t>> queue;
  if (e.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    auto w = queue.back();
    queue.pop_back();
    for (const auto& act : actions) {
      auto img = act.apply(w, p);
      if (e.insert(img)) queue.push_back(img);
    }
  }
  return e;
}

/// Rational reconstruction of r mod p: a/b with |a|, b <= sqrt(p/2).
inline std::optional<Rational> rational_reconstruct(std::int64_t r, std::int64_t p) {
  std::int64_t bound = 1;
  while ((bound + 1) * (bound + 1) * 2 <= p) ++bound;
  std::int64_t r0 = p, r1 = detail::mod_norm(r, p), t0 = 0, t1 = 1;
  while (r1 > bound) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0 || std::abs(t1) > bound) return std::nullopt;
  if (std::gcd(std::abs(r1), std::abs(t1)) != 1 && r1 != 0) return std::nullopt;
  return Rational(BigInt(t1 < 0 ? -r1 : r1), BigInt(std::abs(t1)));
}

}  // namespace glk::modp
