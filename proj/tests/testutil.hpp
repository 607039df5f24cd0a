#pragma once

#include <cstdint>
#include <random>

#include "glk/field.hpp"
#include "glk/linalg.hpp"

namespace glktest {

/// Deterministic test randomness (mt19937_64 keeps streams platform-stable).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(eng() % std::uint64_t(hi - lo + 1));
  }

  glk::Scalar scalar(const glk::FieldPtr& f) {
    using glk::Field;
    switch (f->kind) {
      case Field::Kind::Rationals:
        return f->from_rational(glk::Rational(uniform(-6, 6), uniform(1, 4)));
      case Field::Kind::Prime:
        return f->from_int(uniform(0, f->p - 1));
      case Field::Kind::Extension: {
        std::vector<glk::Scalar> c;
        for (int i = 0; i < f->degree(); ++i) c.push_back(scalar(f->base));
        return f->from_coeffs(std::move(c));
      }
    }
    return f->zero();
  }

  glk::Scalar nonzero_scalar(const glk::FieldPtr& f) {
    for (;;) {
      glk::Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  glk::Vec vec(const glk::FieldPtr& f, int n) {
    glk::Vec v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
  }

  glk::Matrix matrix(const glk::FieldPtr& f, int r, int c) {
    glk::Matrix m(f, r, c);
    for (auto& x : m.a) x = scalar(f);
    return m;
  }
};

}  // namespace glktest
