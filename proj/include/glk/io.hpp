#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "freelie.hpp"
#include "jordan.hpp"
#include "lie.hpp"

namespace glk {

/// Parse failure with position information.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

namespace io {

// ---- scalar literals ----
// rational: "a" or "a/b"; prime residue: "a"; extension: "[c0,c1,...]"

inline std::string scalar_str(const Scalar& s) { return s.str(); }

inline Scalar parse_scalar(const FieldPtr& f, const std::string& tok, int line, int col) {
  switch (f->kind) {
    case Field::Kind::Rationals: {
      auto q = parse_rational(tok);
      if (!q) throw ParseError("bad rational literal '" + tok + "'", line, col);
      return f->from_rational(*q);
    }
    case Field::Kind::Prime: {
      auto q = parse_rational(tok);
      if (!q || denominator(*q) != 1)
        throw ParseError("bad residue literal '" + tok + "'", line, col);
      return f->from_rational(*q);
    }
    case Field::Kind::Extension: {
      if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        throw ParseError("extension literal must be [c0,c1,...], got '" + tok + "'", line, col);
      std::vector<Scalar> coeffs;
      std::string inner = tok.substr(1, tok.size() - 2);
      // split at top-level commas (coefficients may themselves be bracketed)
      int depth = 0;
      std::string cur;
      auto flush = [&]() {
        coeffs.push_back(parse_scalar(f->base, cur, line, col));
        cur.clear();
      };
      for (char ch : inner) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
          flush();
          continue;
        }
        cur += ch;
      }
      if (!cur.empty() || !coeffs.empty()) flush();
      if (int(coeffs.size()) > f->degree())
        throw ParseError("extension literal has too many coefficients", line, col);
      return f->from_coeffs(std::move(coeffs));
    }
  }
  throw ParseError("unreachable scalar kind", line, col);
}

// ---- field lines ----
// "Q" | "Fp <p>" | "ext <BASE...> <minpoly coefficients, low -> high, monic>"

inline std::string field_tokens(const FieldPtr& f) {
  switch (f->kind) {
    case Field::Kind::Rationals: return "Q";
    case Field::Kind::Prime: return "Fp " + std::to_string(f->p);
    case Field::Kind::Extension: {
      std::string s = "ext " + field_tokens(f->base);
      for (const auto& c : f->minpoly) s += " " + scalar_str(c);
      return s;
    }
  }
  return "?";
}

inline FieldPtr parse_field_tokens(const std::vector<std::string>& toks, std::size_t& pos, int line) {
  if (pos >= toks.size()) throw ParseError("missing field specification", line, 1);
  std::string head = toks[pos++];
  if (head == "Q") return Field::rationals();
  if (head == "Fp") {
    if (pos >= toks.size()) throw ParseError("Fp requires a prime", line, 1);
    try {
      return Field::prime(std::stoll(toks[pos++]));
    } catch (const Error& e) {
      throw ParseError(e.what(), line, 1);
    } catch (...) {
      throw ParseError("bad prime '" + toks[pos - 1] + "'", line, 1);
    }
  }
  if (head == "ext") {
    FieldPtr base = parse_field_tokens(toks, pos, line);
    std::vector<Scalar> mp;
    while (pos < toks.size()) mp.push_back(parse_scalar(base, toks[pos++], line, 1));
    try {
      return Field::extension(base, mp);
    } catch (const Error& e) {
      throw ParseError(e.what(), line, 1);
    }
  }
  throw ParseError("unknown field kind '" + head + "'", line, 1);
}

// ---- line tokenization with comments ----

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, tokens)
};

inline Lines tokenize(const std::string& text) {
  Lines out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.rows.emplace_back(no, std::move(toks));
  }
  return out;
}

// ---- AlgebraFile ----
// glk-algebra v1 / field ... / dim N / [grading d1..dN] / bracket i j k c
// bracket lines carry i < j; the antisymmetric mirror is implied.

inline std::string serialize_algebra(const StructureAlgebra& a) {
  std::ostringstream out;
  out << "glk-algebra v1\n";
  out << "field " << field_tokens(a.field) << "\n";
  out << "dim " << a.dim << "\n";
  if (a.grading) {
    out << "grading";
    for (int d : *a.grading) out << " " << d;
    out << "\n";
  }
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      for (const auto& [k, c] : a.entry(i, j))
        out << "bracket " << i << " " << j << " " << k << " " << scalar_str(c) << "\n";
  return out.str();
}

inline StructureAlgebra parse_algebra(const std::string& text) {
  Lines lines = tokenize(text);
  std::size_t r = 0;
  auto need = [&](const char* what) -> std::pair<int, std::vector<std::string>>& {
    if (r >= lines.rows.size()) throw ParseError(std::string("expected ") + what, int(lines.rows.size()), 1);
    return lines.rows[r];
  };
  {
    auto& [no, toks] = need("format tag");
    if (toks.size() != 2 || toks[0] != "glk-algebra" || toks[1] != "v1")
      throw ParseError("expected 'glk-algebra v1'", no, 1);
    ++r;
  }
  FieldPtr field;
  {
    auto& [no, toks] = need("field line");
    if (toks.empty() || toks[0] != "field") throw ParseError("expected 'field ...'", no, 1);
    std::size_t pos = 1;
    field = parse_field_tokens(toks, pos, no);
    if (pos != toks.size()) throw ParseError("trailing tokens on field line", no, 1);
    ++r;
  }
  int dim = -1;
  {
    auto& [no, toks] = need("dim line");
    if (toks.size() != 2 || toks[0] != "dim") throw ParseError("expected 'dim N'", no, 1);
    dim = std::stoi(toks[1]);
    if (dim < 0) throw ParseError("dim must be nonnegative", no, 1);
    ++r;
  }
  StructureAlgebra a(field, dim);
  if (r < lines.rows.size() && lines.rows[r].second[0] == "grading") {
    auto& [no, toks] = lines.rows[r];
    if (int(toks.size()) != dim + 1) throw ParseError("grading needs one degree per basis vector", no, 1);
    std::vector<int> g;
    for (int i = 1; i <= dim; ++i) g.push_back(std::stoi(toks[i]));
    a.grading = std::move(g);
    ++r;
  }
  for (; r < lines.rows.size(); ++r) {
    auto& [no, toks] = lines.rows[r];
    if (toks[0] != "bracket") throw ParseError("expected 'bracket i j k c'", no, 1);
    if (toks.size() != 5) throw ParseError("bracket needs 4 arguments", no, 1);
    int i = std::stoi(toks[1]), j = std::stoi(toks[2]), k = std::stoi(toks[3]);
    if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
      throw ParseError("bracket index out of range", no, 1);
    if (i >= j) throw ParseError("bracket lines carry i < j (the mirror is implied)", no, 1);
    a.add_to_bracket(i, j, k, parse_scalar(field, toks[4], no, 1));
  }
  return a;
}

// ---- PairFile ----
// glk-pair v1 / field ... / dims DP DM / triple s i j k l c

inline std::string serialize_pair(const JordanPair& v) {
  std::ostringstream out;
  out << "glk-pair v1\n";
  out << "field " << field_tokens(v.field) << "\n";
  out << "dims " << v.dp << " " << v.dm << "\n";
  for (int sigma : {+1, -1}) {
    int ds = v.dim(sigma), dt = v.dim(-sigma);
    for (int i = 0; i < ds; ++i)
      for (int j = 0; j < dt; ++j)
        for (int k = 0; k < ds; ++k)
          for (const auto& [l, c] : v.entry(sigma, i, j, k))
            out << "triple " << (sigma > 0 ? "+" : "-") << " " << i << " " << j << " " << k << " "
                << l << " " << scalar_str(c) << "\n";
  }
  return out.str();
}

inline JordanPair parse_pair(const std::string& text) {
  Lines lines = tokenize(text);
  std::size_t r = 0;
  auto need = [&](const char* what) -> std::pair<int, std::vector<std::string>>& {
    if (r >= lines.rows.size()) throw ParseError(std::string("expected ") + what, int(lines.rows.size()), 1);
    return lines.rows[r];
  };
  {
    auto& [no, toks] = need("format tag");
    if (toks.size() != 2 || toks[0] != "glk-pair" || toks[1] != "v1")
      throw ParseError("expected 'glk-pair v1'", no, 1);
    ++r;
  }
  FieldPtr field;
  {
    auto& [no, toks] = need("field line");
    if (toks.empty() || toks[0] != "field") throw ParseError("expected 'field ...'", no, 1);
    std::size_t pos = 1;
    field = parse_field_tokens(toks, pos, no);
    ++r;
  }
  int dp = -1, dm = -1;
  {
    auto& [no, toks] = need("dims line");
    if (toks.size() != 3 || toks[0] != "dims") throw ParseError("expected 'dims DP DM'", no, 1);
    dp = std::stoi(toks[1]);
    dm = std::stoi(toks[2]);
    if (dp < 0 || dm < 0) throw ParseError("dims must be nonnegative", no, 1);
    ++r;
  }
  JordanPair v(field, dp, dm);
  for (; r < lines.rows.size(); ++r) {
    auto& [no, toks] = lines.rows[r];
    if (toks[0] != "triple") throw ParseError("expected 'triple s i j k l c'", no, 1);
    if (toks.size() != 7) throw ParseError("triple needs 6 arguments", no, 1);
    int sigma = toks[1] == "+" ? +1 : toks[1] == "-" ? -1 : 0;
    if (sigma == 0) throw ParseError("sign must be + or -", no, 1);
    int i = std::stoi(toks[2]), j = std::stoi(toks[3]), k = std::stoi(toks[4]), l = std::stoi(toks[5]);
    int ds = v.dim(sigma), dt = v.dim(-sigma);
    if (i < 0 || i >= ds || j < 0 || j >= dt || k < 0 || k >= ds || l < 0 || l >= ds)
      throw ParseError("triple index out of range", no, 1);
    v.add_triple(sigma, i, j, k, l, parse_scalar(field, toks[6], no, 1));
  }
  return v;
}

// ---- PolyFile grammar ----
// poly := term (('+' | '-') term)* ; term := [integer '*'] factor ;
// factor := var | '[' poly ',' poly ']' ; var := 'x' digits ('+' | '-')
// A bare "0" denotes the zero polynomial.

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  LiePoly parse() {
    skip_ws();
    if (peek() == '0') {
      get();
      skip_ws();
      if (pos_ < text_.size()) fail("trailing input after 0");
      return LiePoly::zero();
    }
    LiePoly p = parse_poly();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input");
    return p;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char get() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    ++pos_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) get();
  }

  LiePoly parse_poly() {
    LiePoly acc = parse_term();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        LiePoly t = parse_term();
        acc = c == '+' ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  LiePoly parse_term() {
    skip_ws();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
      std::string num;
      if (peek() == '-') num += get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
      if (num.empty() || num == "-") fail("expected integer coefficient");
      coeff = Rational(BigInt(num));
      skip_ws();
      if (peek() != '*') fail("expected '*' after coefficient");
      get();
    }
    return parse_factor().scaled(coeff);
  }

  LiePoly parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '[') {
      get();
      LiePoly l = parse_poly();
      skip_ws();
      if (peek() != ',') fail("expected ',' in bracket");
      get();
      LiePoly r = parse_poly();
      skip_ws();
      if (peek() != ']') fail("expected ']'");
      get();
      return LiePoly::bracket(l, r);
    }
    if (c == 'x') {
      get();
      std::string num;
      while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
      if (num.empty()) fail("expected variable index after 'x'");
      char s = peek();
      if (s != '+' && s != '-') fail("expected '+' or '-' sign on variable");
      get();
      return LiePoly::var(std::stoi(num), s == '+' ? +1 : -1);
    }
    fail(std::string("expected variable or bracket, got '") + c + "'");
  }
};

inline LiePoly parse_poly_text(const std::string& text) { return PolyParser(text).parse(); }

/// Serializes to the PolyFile grammar; coefficients must be integers.
inline std::string serialize_poly(const LiePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : p.terms) {
    if (denominator(c) != 1)
      throw Error("polynomial has a non-integer coefficient, not representable in the poly format");
    BigInt n = numerator(c);
    if (first) {
      first = false;
      if (n != 1) out += n.str() + "*";  // a leading negative stays in the coefficient
    } else {
      out += n < 0 ? " - " : " + ";
      BigInt mag = boost::multiprecision::abs(n);
      if (mag != 1) out += mag.str() + "*";
    }
    out += t->str();
  }
  return out;
}

// PolyFile: "glk-poly v1" then the polynomial text (rest of the file)
inline std::string serialize_poly_file(const LiePoly& p) { return "glk-poly v1\n" + serialize_poly(p) + "\n"; }

inline LiePoly parse_poly_file(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty poly file", 1, 1);
  std::istringstream hs(header);
  std::string a, b;
  hs >> a >> b;
  if (a != "glk-poly" || b != "v1") throw ParseError("expected 'glk-poly v1'", 1, 1);
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // strip comment lines
  std::ostringstream body;
  std::istringstream rs(rest);
  std::string line;
  while (std::getline(rs, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    body << line << "\n";
  }
  return parse_poly_text(body.str());
}

// PairPolyFile: "glk-pairpoly v1" / "plus <poly|0>" / "minus <poly|0>"
inline std::string serialize_pairpoly_file(const LiePoly& gp, const LiePoly& gm) {
  return "glk-pairpoly v1\nplus " + serialize_poly(gp) + "\nminus " + serialize_poly(gm) + "\n";
}

inline std::pair<LiePoly, LiePoly> parse_pairpoly_file(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string a, b;
  hs >> a >> b;
  if (a != "glk-pairpoly" || b != "v1") throw ParseError("expected 'glk-pairpoly v1'", 1, 1);
  std::string pl, mn;
  if (!std::getline(in, pl) || pl.rfind("plus ", 0) != 0) throw ParseError("expected 'plus <poly>'", 2, 1);
  if (!std::getline(in, mn) || mn.rfind("minus ", 0) != 0) throw ParseError("expected 'minus <poly>'", 3, 1);
  return {parse_poly_text(pl.substr(5)), parse_poly_text(mn.substr(6))};
}

// ---- file helpers ----

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace io
}  // namespace glk
