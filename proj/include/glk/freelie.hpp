#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lie.hpp"

namespace glk {

/// Signed variable x_index^sign, sign in {+1, -1}.
struct VarRef {
  int index = 1;
  int sign = +1;
  bool operator==(const VarRef& o) const { return index == o.index && sign == o.sign; }
  bool operator<(const VarRef& o) const {
    if (index != o.index) return index < o.index;
    return sign < o.sign;
  }
  std::string str() const { return "x" + std::to_string(index) + (sign > 0 ? "+" : "-"); }
};

/// Immutable binary bracket tree with cached theta-degree and leaf count.
struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

struct Tree {
  bool is_leaf = true;
  VarRef var;
  TreePtr left, right;
  int theta = 0;
  int degree = 1;

  static TreePtr leaf(VarRef v) {
    auto t = std::make_shared<Tree>();
    t->is_leaf = true;
    t->var = v;
    t->theta = v.sign;
    t->degree = 1;
    return t;
  }

  static TreePtr node(TreePtr l, TreePtr r) {
    auto t = std::make_shared<Tree>();
    t->is_leaf = false;
    t->theta = l->theta + r->theta;
    t->degree = l->degree + r->degree;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
  }

  void leaves(std::vector<VarRef>& out) const {
    if (is_leaf) {
      out.push_back(var);
      return;
    }
    left->leaves(out);
    right->leaves(out);
  }

  std::string str() const {
    if (is_leaf) return var.str();
    return "[" + left->str() + ", " + right->str() + "]";
  }
};

inline int tree_cmp(const TreePtr& a, const TreePtr& b) {
  if (a->is_leaf != b->is_leaf) return a->is_leaf ? -1 : 1;
  if (a->is_leaf) {
    if (a->var.index != b->var.index) return a->var.index < b->var.index ? -1 : 1;
    if (a->var.sign != b->var.sign) return a->var.sign < b->var.sign ? -1 : 1;
    return 0;
  }
  if (int c = tree_cmp(a->left, b->left)) return c;
  return tree_cmp(a->right, b->right);
}

/// Element of the free 3-graded Lie algebra: formal sum of bracket trees over
/// signed variables with rational coefficients. Trees of |theta| >= 2 are
/// identified with 0 at construction (the quotient's 3-grading); no further
/// rewriting is performed, so distinct trees may represent equal elements.
/// Zero-testing is delegated to pi_special or to evaluation.
class LiePoly {
 public:
  // sorted by tree_cmp, nonzero coefficients
  std::vector<std::pair<TreePtr, Rational>> terms;

  LiePoly() = default;

  static LiePoly zero() { return LiePoly(); }

  static LiePoly var(int index, int sign) {
    LiePoly p;
    p.add_term(Tree::leaf({index, sign}), 1);
    return p;
  }

  static LiePoly from_tree(TreePtr t, Rational c = 1) {
    LiePoly p;
    p.add_term(std::move(t), std::move(c));
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& [t, c] : terms) d = std::max(d, t->degree);
    return d;
  }

  void add_term(TreePtr t, Rational c) {
    if (c == 0) return;
    if (t->theta < -1 || t->theta > 1) return;  // killed by the 3-grading
    auto it = std::lower_bound(terms.begin(), terms.end(), t,
                               [](const auto& e, const TreePtr& k) { return tree_cmp(e.first, k) < 0; });
    if (it != terms.end() && tree_cmp(it->first, t) == 0) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    } else {
      terms.insert(it, {std::move(t), std::move(c)});
    }
  }

  LiePoly operator+(const LiePoly& o) const {
    LiePoly r = *this;
    for (const auto& [t, c] : o.terms) r.add_term(t, c);
    return r;
  }

  LiePoly operator-() const {
    LiePoly r = *this;
    for (auto& [t, c] : r.terms) c = -c;
    return r;
  }

  LiePoly operator-(const LiePoly& o) const { return *this + (-o); }

  LiePoly scaled(const Rational& c) const {
    if (c == 0) return LiePoly();
    LiePoly r = *this;
    for (auto& [t, cc] : r.terms) cc *= c;
    return r;
  }

  static LiePoly bracket(const LiePoly& f, const LiePoly& g) {
    LiePoly r;
    for (const auto& [tf, cf] : f.terms)
      for (const auto& [tg, cg] : g.terms) r.add_term(Tree::node(tf, tg), cf * cg);
    return r;
  }

  bool operator==(const LiePoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (tree_cmp(terms[i].first, o.terms[i].first) != 0 || terms[i].second != o.terms[i].second)
        return false;
    return true;
  }

  /// Component of homogeneous theta-degree k.
  LiePoly theta_component(int k) const {
    LiePoly r;
    for (const auto& [t, c] : terms)
      if (t->theta == k) r.add_term(t, c);
    return r;
  }

  std::set<VarRef> variables() const {
    std::set<VarRef> out;
    for (const auto& [t, c] : terms) {
      std::vector<VarRef> ls;
      t->leaves(ls);
      out.insert(ls.begin(), ls.end());
    }
    return out;
  }

  /// Max multiplicity of v over all terms.
  int var_degree(const VarRef& v) const {
    int d = 0;
    for (const auto& [t, c] : terms) {
      std::vector<VarRef> ls;
      t->leaves(ls);
      d = std::max(d, int(std::count(ls.begin(), ls.end(), v)));
    }
    return d;
  }

  /// Multilinear: all terms share one variable set, each variable once per term.
  bool is_multilinear() const {
    if (terms.empty()) return true;
    std::set<VarRef> first;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::vector<VarRef> ls;
      terms[i].first->leaves(ls);
      std::set<VarRef> s(ls.begin(), ls.end());
      if (s.size() != ls.size()) return false;
      if (i == 0)
        first = s;
      else if (s != first)
        return false;
    }
    return true;
  }

  /// Smallest unused index of the given sign.
  int fresh_index(int sign) const {
    std::set<int> used;
    for (const auto& v : variables())
      if (v.sign == sign) used.insert(v.index);
    int i = 1;
    while (used.count(i)) ++i;
    return i;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : terms) {
      Rational ac = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (ac != 1) s += rational_str(ac) + "*";
      s += t->str();
    }
    return s;
  }
};

/// Substitutes a polynomial for every occurrence of v (expanding products
/// across multiple occurrences).
inline LiePoly substitute(const LiePoly& f, const VarRef& v, const LiePoly& replacement) {
  std::function<LiePoly(const TreePtr&)> sub = [&](const TreePtr& t) -> LiePoly {
    if (t->is_leaf) {
      if (t->var == v) return replacement;
      return LiePoly::from_tree(t);
    }
    return LiePoly::bracket(sub(t->left), sub(t->right));
  };
  LiePoly out;
  for (const auto& [t, c] : f.terms) out = out + sub(t).scaled(c);
  return out;
}

struct MultilinearizeResult {
  LiePoly poly;
  bool changed = false;
  // substitution trail: (original variable, fresh pair) per linearization step
  std::vector<std::tuple<VarRef, VarRef, VarRef>> steps;
};

/// Standard linearization: Delta_x f = f(x -> x'+x'') - f(x -> x') - f(x -> x''),
/// applied to the part of degree >= 2 in each offending variable, with fresh
/// variables of the same sign, until every variable has degree <= 1 in every
/// term. Degree never increases; identities of any 3-graded algebra are
/// preserved (every step is a difference of substitution instances).
inline MultilinearizeResult multilinearize(const LiePoly& f) {
  MultilinearizeResult res;
  res.poly = f;
  for (;;) {
    std::optional<VarRef> bad;
    for (const auto& v : res.poly.variables())
      if (res.poly.var_degree(v) >= 2) {
        bad = v;
        break;
      }
    if (!bad) break;
    // split off the terms of degree >= 2 in bad
    LiePoly high, keep;
    for (const auto& [t, c] : res.poly.terms) {
      std::vector<VarRef> ls;
      t->leaves(ls);
      if (std::count(ls.begin(), ls.end(), *bad) >= 2)
        high.add_term(t, c);
      else
        keep.add_term(t, c);
    }
    int i1 = res.poly.fresh_index(bad->sign);
    VarRef v1{i1, bad->sign};
    // v2 fresh with respect to f and v1
    LiePoly marker = res.poly + LiePoly::var(v1.index, v1.sign);
    VarRef v2{marker.fresh_index(bad->sign), bad->sign};
    LiePoly sum = LiePoly::var(v1.index, v1.sign) + LiePoly::var(v2.index, v2.sign);
    LiePoly spread = substitute(high, *bad, sum) - substitute(high, *bad, LiePoly::var(v1.index, v1.sign)) -
                     substitute(high, *bad, LiePoly::var(v2.index, v2.sign));
    res.poly = keep + spread;
    res.changed = true;
    res.steps.emplace_back(*bad, v1, v2);
  }
  return res;
}

/// Splits a degree-<=1-per-variable polynomial into components by variable
/// support (identity-preserving: extraction is iterated zero-substitution).
inline std::vector<LiePoly> support_components(const LiePoly& f) {
  std::map<std::set<VarRef>, LiePoly> by_support;
  for (const auto& [t, c] : f.terms) {
    std::vector<VarRef> ls;
    t->leaves(ls);
    by_support[std::set<VarRef>(ls.begin(), ls.end())].add_term(t, c);
  }
  std::vector<LiePoly> out;
  for (auto& [s, p] : by_support) out.push_back(std::move(p));
  return out;
}

// ---- free special 3-graded associative algebra ----

using AssocWord = std::vector<VarRef>;

inline bool word_alternating(const AssocWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].sign == w[i - 1].sign) return false;
  return true;
}

/// Element of Ass[X+, X-]: only sign-alternating words are stored (words with
/// two adjacent equal signs are zero in the 3-graded quotient).
struct AssocPoly {
  std::map<AssocWord, Rational> terms;

  bool is_zero() const { return terms.empty(); }

  void add_word(AssocWord w, Rational c) {
    if (c == 0 || !word_alternating(w)) return;
    auto it = terms.find(w);
    if (it == terms.end())
      terms.emplace(std::move(w), std::move(c));
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  AssocPoly operator+(const AssocPoly& o) const {
    AssocPoly r = *this;
    for (const auto& [w, c] : o.terms) r.add_word(w, c);
    return r;
  }

  AssocPoly operator-() const {
    AssocPoly r = *this;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
  }

  AssocPoly operator-(const AssocPoly& o) const { return *this + (-o); }

  AssocPoly mul(const AssocPoly& o) const {
    AssocPoly r;
    for (const auto& [w1, c1] : terms)
      for (const auto& [w2, c2] : o.terms) {
        AssocWord w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add_word(std::move(w), c1 * c2);
      }
    return r;
  }

  int degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms) d = std::max(d, w.size());
    return int(d);
  }

  /// Leading word: highest degree, then lexicographically first (index, sign).
  std::optional<std::pair<AssocWord, Rational>> leading() const {
    std::optional<std::pair<AssocWord, Rational>> best;
    for (const auto& [w, c] : terms) {
      bool better = !best || w.size() > best->first.size() ||
                    (w.size() == best->first.size() && w < best->first);
      if (better) best = {w, c};
    }
    return best;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms) {
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      first = false;
      Rational ac = c < 0 ? Rational(-c) : c;
      if (ac != 1) s += rational_str(ac) + "*";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += w[i].str();
      }
    }
    return s;
  }
};

/// The homomorphism into the free special 3-graded Lie algebra: brackets
/// expand as commutators, non-alternating words vanish.
inline AssocPoly pi_special(const LiePoly& f) {
  std::function<AssocPoly(const TreePtr&)> expand = [&](const TreePtr& t) -> AssocPoly {
    AssocPoly r;
    if (t->is_leaf) {
      r.add_word({t->var}, 1);
      return r;
    }
    AssocPoly l = expand(t->left), rr = expand(t->right);
    return l.mul(rr) - rr.mul(l);
  };
  AssocPoly out;
  for (const auto& [t, c] : f.terms) {
    AssocPoly e = expand(t);
    for (auto& [w, cc] : e.terms) out.add_word(w, cc * c);
  }
  return out;
}

// ---- evaluation ----

using Assignment = std::map<VarRef, Vec>;

/// Homomorphic evaluation into a 3-graded algebra; sign-sigma variables must
/// be assigned elements of L_sigma ("grading mismatch" otherwise).
inline Vec eval_hom(const LiePoly& f, const Assignment& assignment, const StructureAlgebra& l) {
  if (!l.grading) throw Error("eval_hom: algebra has no grading");
  for (const auto& [v, vec] : assignment) {
    if (int(vec.size()) != l.dim) throw Error("eval_hom: assignment dimension mismatch");
    for (int i = 0; i < l.dim; ++i)
      if (!vec[i].is_zero() && (*l.grading)[i] != v.sign) throw Error("grading mismatch");
  }
  std::function<Vec(const TreePtr&)> ev = [&](const TreePtr& t) -> Vec {
    if (t->is_leaf) {
      auto it = assignment.find(t->var);
      if (it == assignment.end()) throw Error("eval_hom: unassigned variable " + t->var.str());
      return it->second;
    }
    return l.bracket(ev(t->left), ev(t->right));
  };
  Vec out = vec_zero(l.field, l.dim);
  for (const auto& [t, c] : f.terms) out = vec_add(out, vec_scale(ev(t), l.field->from_rational(c)));
  return out;
}

/// [f0, y^sigma] with y a fresh variable of the requested sign; input must be
/// homogeneous of theta-degree 0.
inline LiePoly lower_to_grade(const LiePoly& f0, int sigma) {
  for (const auto& [t, c] : f0.terms)
    if (t->theta != 0) throw Error("not degree-0 homogeneous");
  if (f0.is_zero()) return LiePoly();
  int idx = f0.fresh_index(sigma);
  return LiePoly::bracket(f0, LiePoly::var(idx, sigma));
}

}  // namespace glk
