#pragma once

#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace glk {

using Vec = std::vector<Scalar>;

inline Vec vec_zero(const FieldPtr& f, int n) { return Vec(n, f->zero()); }

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

inline Vec vec_scale(const Vec& a, const Scalar& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

/// Dense exact matrix over a fixed field; row-major.
struct Matrix {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(FieldPtr f, int r, int c) : field(std::move(f)), rows(r), cols(c), a(std::size_t(r) * c, field->zero()) {}

  static Matrix zero(const FieldPtr& f, int r, int c) { return Matrix(f, r, c); }

  static Matrix identity(const FieldPtr& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
  }

  static Matrix from_rows(const FieldPtr& f, const std::vector<Vec>& rs, int ncols) {
    Matrix m(f, int(rs.size()), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (int j = 0; j < ncols; ++j) m.at(int(i), j) = rs[i][j];
    return m;
  }

  Scalar& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  Vec row(int r) const { return Vec(a.begin() + std::size_t(r) * cols, a.begin() + std::size_t(r + 1) * cols); }
  Vec col(int c) const {
    Vec v;
    v.reserve(rows);
    for (int r = 0; r < rows; ++r) v.push_back(at(r, c));
    return v;
  }

  Matrix mul(const Matrix& o) const {
    if (cols != o.rows) throw Error("matrix dimension mismatch in mul");
    Matrix r(field, rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Scalar& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols; ++j) {
          const Scalar& y = o.at(k, j);
          if (!y.is_zero()) r.at(i, j) += x * y;
        }
      }
    return r;
  }

  Vec apply(const Vec& v) const {
    if (int(v.size()) != cols) throw Error("matrix/vector dimension mismatch");
    Vec r = vec_zero(field, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const Scalar& x = at(i, j);
        if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
      }
    return r;
  }

  Matrix add(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }

  Matrix sub(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }

  Matrix neg() const {
    Matrix r = *this;
    for (auto& x : r.a) x = -x;
    return r;
  }

  Matrix scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.a) x *= c;
    return r;
  }

  Matrix transpose() const {
    Matrix r(field, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Scalar trace() const {
    Scalar t = field->zero();
    for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
  }

  Matrix commutator(const Matrix& o) const { return mul(o).sub(o.mul(*this)); }

  bool is_zero() const { return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); }); }

  bool operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == o.a[i])) return false;
    return true;
  }
};

/// Incremental reduced-row-echelon accumulator. Pivot columns strictly
/// increasing, pivot entries 1, pivot columns cleared above and below.
/// The resulting basis is the canonical RREF of the inserted row space,
/// independent of insertion order.
class Echelon {
 public:
  Echelon(FieldPtr f, int ambient) : field_(std::move(f)), ambient_(ambient) {}

  /// Reduces v against the current rows; returns the residue (not inserted).
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v[pivots_[r]];
      if (!c.is_zero()) v = vec_sub(v, vec_scale(rows_[r], c));
    }
    return v;
  }

  /// Inserts v; returns true if the dimension grew.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    v = vec_scale(v, v[piv].inverse());
    // clear this pivot from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = rows_[r][piv];
      if (!c.is_zero()) rows_[r] = vec_sub(rows_[r], vec_scale(v, c));
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

  int dim() const { return int(rows_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const FieldPtr& field() const { return field_; }

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

 private:
  FieldPtr field_;
  int ambient_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

/// Exact-basis subspace: rows of a reduced row-echelon matrix.
struct Subspace {
  FieldPtr field;
  int ambient = 0;
  std::vector<Vec> basis;   // RREF rows
  std::vector<int> pivots;  // strictly increasing

  Subspace() = default;

  static Subspace zero(const FieldPtr& f, int n) {
    Subspace s;
    s.field = f;
    s.ambient = n;
    return s;
  }

  static Subspace full(const FieldPtr& f, int n) {
    Subspace s = zero(f, n);
    for (int i = 0; i < n; ++i) {
      Vec e = vec_zero(f, n);
      e[i] = f->one();
      s.basis.push_back(std::move(e));
      s.pivots.push_back(i);
    }
    return s;
  }

  static Subspace span(const FieldPtr& f, int n, const std::vector<Vec>& gens) {
    Echelon e(f, n);
    for (const auto& g : gens) e.insert(g);
    Subspace s = zero(f, n);
    s.basis = e.rows();
    s.pivots = e.pivots();
    return s;
  }

  int dim() const { return int(basis.size()); }
  bool is_zero_space() const { return basis.empty(); }
  bool is_full() const { return dim() == ambient; }

  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Scalar& c = v[pivots[r]];
      if (!c.is_zero()) v = vec_sub(v, vec_scale(basis[r], c));
    }
    return v;
  }

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  bool contains(const Subspace& o) const {
    for (const auto& r : o.basis)
      if (!contains(r)) return false;
    return true;
  }

  /// Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const {
    Vec coords = vec_zero(field, dim());
    Vec w = v;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Scalar& c = w[pivots[r]];
      if (!c.is_zero()) {
        coords[r] = c;
        w = vec_sub(w, vec_scale(basis[r], c));
      }
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coords;
  }

  Subspace sum(const Subspace& o) const {
    std::vector<Vec> gens = basis;
    gens.insert(gens.end(), o.basis.begin(), o.basis.end());
    return span(field, ambient, gens);
  }

  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    if (ambient != o.ambient || basis.size() != o.basis.size()) return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!vec_eq(basis[i], o.basis[i])) return false;
    return true;
  }
};

/// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(const Matrix& m) {
  Matrix t = m;
  return int(rref(t).size());
}

/// Null space of m as a canonical Subspace; dim(kernel) + rank = cols.
inline Subspace kernel(const Matrix& m) {
  Matrix t = m;
  std::vector<int> pivots = rref(t);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zero(m.field, m.cols);
    v[c] = m.field->one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -t.at(int(r), c);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field, m.cols, gens);
}

/// Particular solution of m x = b with free variables set to zero;
/// nullopt signals an inconsistent system (not a fault).
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows) throw Error("solve: dimension mismatch");
  Matrix aug(m.field, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  Vec x = vec_zero(m.field, m.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), m.cols);
  return x;
}

inline Subspace Subspace::intersect(const Subspace& o) const {
  // v = alpha * basis = beta * o.basis; kernel of [basis^T | -o.basis^T]
  if (is_zero_space() || o.is_zero_space()) return Subspace::zero(field, ambient);
  Matrix m(field, ambient, dim() + o.dim());
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < ambient; ++i) m.at(i, j) = basis[j][i];
  for (int j = 0; j < o.dim(); ++j)
    for (int i = 0; i < ambient; ++i) m.at(i, dim() + j) = -o.basis[j][i];
  Subspace k = kernel(m);
  std::vector<Vec> gens;
  for (const auto& kv : k.basis) {
    Vec v = vec_zero(field, ambient);
    for (int j = 0; j < dim(); ++j)
      if (!kv[j].is_zero()) v = vec_add(v, vec_scale(basis[j], kv[j]));
    gens.push_back(std::move(v));
  }
  return Subspace::span(field, ambient, gens);
}

/// Flattens a matrix into a coordinate vector (row-major).
inline Vec mat_flatten(const Matrix& m) { return m.a; }

inline Matrix mat_unflatten(const FieldPtr& f, int rows, int cols, const Vec& v) {
  Matrix m(f, rows, cols);
  m.a = v;
  return m;
}

}  // namespace glk
