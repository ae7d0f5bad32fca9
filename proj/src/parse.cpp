#include "folex/parse.hpp"

#include <cctype>

namespace folex {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
  long read_nat() {
    skip_ws();
    if (!peek_digit()) throw ParseError("expected a number", pos);
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }
};

// 0-forms carry the polynomial factors; higher factors wedge in order.
struct Parser {
  Lexer lex;
  int nv;

  DiffForm parse_expr() {
    DiffForm acc = parse_term(lex.eat('-'));
    while (true) {
      char c = lex.peek();
      if (c == '+' || c == '-') {
        ++lex.pos;
        DiffForm t = parse_term(c == '-');
        if (t.form_degree() != acc.form_degree()) {
          if (acc.is_zero())
            acc = std::move(t);
          else if (!t.is_zero())
            throw ParseError("mixed form degrees in a sum", lex.pos);
        } else {
          acc += t;
        }
      } else {
        break;
      }
    }
    return acc;
  }

  // An atom with exponents applied; `^digit` binds to the atom, not the
  // accumulated product, so 3/2*x0^2 means 3/2*(x0^2).
  DiffForm parse_factor() {
    DiffForm a = parse_atom();
    while (lex.peek() == '^') {
      size_t save = lex.pos;
      ++lex.pos;
      if (!lex.peek_digit()) {
        lex.pos = save;  // wedge between form factors, handled by the caller
        break;
      }
      long e = lex.read_nat();
      a = pow_form(a, e, save);
    }
    return a;
  }

  DiffForm parse_term(bool negate) {
    DiffForm acc = parse_factor();
    while (true) {
      char c = lex.peek();
      if (c == '*' || c == '^') {
        ++lex.pos;
        acc = wedge_checked(acc, parse_factor());
      } else {
        break;
      }
    }
    if (negate) acc = -acc;
    return acc;
  }

  DiffForm pow_form(const DiffForm& a, long e, size_t at) {
    if (a.form_degree() != 0) throw ParseError("exponent on a differential factor", at);
    Poly base = a.component(0);
    Poly r = Poly::constant(nv, Rat(1));
    for (long i = 0; i < e; ++i) r = r * base;
    DiffForm out(nv, 0);
    out.add_component(0, r);
    return out;
  }

  DiffForm wedge_checked(const DiffForm& a, const DiffForm& b) { return wedge(a, b); }

  DiffForm parse_atom() {
    char c = lex.peek();
    if (c == '(') {
      ++lex.pos;
      DiffForm inner = parse_expr();
      if (!lex.eat(')')) throw ParseError("expected ')'", lex.pos);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = lex.read_nat();
      Rat r(num);
      if (lex.peek() == '/') {
        ++lex.pos;
        long den = lex.read_nat();
        if (den == 0) throw ParseError("zero denominator", lex.pos);
        r = Rat(num, den);
        r.canonicalize();
      }
      DiffForm out(nv, 0);
      out.add_component(0, Poly::constant(nv, r));
      return out;
    }
    if (c == 'd') {
      size_t at = lex.pos;
      ++lex.pos;
      if (lex.peek() != 'x') throw ParseError("expected 'dx'", at);
      ++lex.pos;
      long i = lex.read_nat();
      if (i >= nv) throw ParseError("variable index out of range", at);
      return DiffForm::dx(nv, static_cast<int>(i));
    }
    if (c == 'x') {
      size_t at = lex.pos;
      ++lex.pos;
      long i = lex.read_nat();
      if (i >= nv) throw ParseError("variable index out of range", at);
      DiffForm out(nv, 0);
      out.add_component(0, Poly::variable(nv, static_cast<int>(i)));
      return out;
    }
    throw ParseError("unexpected character", lex.pos);
  }
};

int infer_n_vars(const std::string& text) {
  int max_idx = -1;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      int v = 0;
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        v = v * 10 + (text[j] - '0');
        ++j;
      }
      max_idx = std::max(max_idx, v);
    }
  }
  return max_idx + 1;
}

}  // namespace

DiffForm parse_form(const std::string& text, int n_vars) {
  int nv = n_vars >= 0 ? n_vars : infer_n_vars(text);
  if (nv <= 0) nv = 1;
  Parser p{Lexer{text}, nv};
  DiffForm f = p.parse_expr();
  p.lex.skip_ws();
  if (p.lex.pos != text.size()) throw ParseError("trailing input", p.lex.pos);
  return f;
}

Poly parse_poly(const std::string& text, int n_vars) {
  DiffForm f = parse_form(text, n_vars);
  if (f.form_degree() != 0) throw ParseError("expected a polynomial, found a form", 0);
  return f.component(0);
}

DiffForm parse_form_homogeneous(const std::string& text, int n_vars) {
  DiffForm f = parse_form(text, n_vars);
  if (!f.coeffs_homogeneous()) throw ParseError("coefficients are not homogeneous of one degree", 0);
  return f;
}

}  // namespace folex
