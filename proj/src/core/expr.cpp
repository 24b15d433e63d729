#include "expr.hpp"

#include <cctype>

namespace hamgraph {

namespace {

struct Lexer {
  std::string s;
  size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  long long number() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error("expr", "expected a number at '" + s.substr(start) + "'");
    return std::stoll(s.substr(start, pos - start));
  }
};

CohClass2 parse_linear(Lexer& lx);

CohClass2 parse_atom(Lexer& lx) {
  if (lx.eat('(')) {
    CohClass2 inner = parse_linear(lx);
    if (!lx.eat(')')) throw Error("expr", "missing ')'");
    return inner;
  }
  if (lx.eat_word("tauinf")) return CohClass2::unit(Gen::tauinf());
  if (lx.eat_word("tau0")) return CohClass2::unit(Gen::tau0());
  if (lx.eat_word("tauh")) return CohClass2::unit(Gen::tauh());
  if (lx.eat_word("s(") || lx.eat_word("sigma(")) {
    long long i = lx.number();
    if (!lx.eat(',')) throw Error("expr", "expected ',' in sigma index");
    long long j = lx.number();
    if (!lx.eat(')')) throw Error("expr", "missing ')' after sigma index");
    if (i < 1 || j < 1) throw Error("expr", "sigma indices are 1-based");
    return CohClass2::unit(Gen::sigma(static_cast<size_t>(i), static_cast<size_t>(j)));
  }
  throw Error("expr", "expected a generator at '" + lx.s.substr(lx.pos) + "'");
}

CohClass2 parse_term(Lexer& lx) {
  long long coef = 1;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    coef = lx.number();
    lx.eat('*');
  }
  CohClass2 atom = parse_atom(lx);
  atom *= BigInt(coef);
  return atom;
}

CohClass2 parse_linear(Lexer& lx) {
  CohClass2 out;
  bool neg = lx.eat('-');
  if (!neg) lx.eat('+');
  CohClass2 t = parse_term(lx);
  if (neg) t *= BigInt(-1);
  out += t;
  while (true) {
    if (lx.eat('+')) {
      out += parse_term(lx);
    } else if (lx.eat('-')) {
      CohClass2 u = parse_term(lx);
      u *= BigInt(-1);
      out += u;
    } else {
      break;
    }
  }
  return out;
}

}  // namespace

CohClass2 parse_class(const std::string& text) {
  Lexer lx{text, 0};
  CohClass2 c = parse_linear(lx);
  if (!lx.eof()) throw Error("expr", "unexpected trailing input: '" + lx.s.substr(lx.pos) + "'");
  return c;
}

std::vector<CohClass2> parse_class_product(const std::string& text) {
  // A top-level '*' separates factors exactly when the text before it is a
  // complete linear expression; otherwise it marks a coefficient ("2*s(1,1)").
  std::vector<CohClass2> out;
  int depth = 0;
  size_t start = 0;
  for (size_t p = 0; p < text.size(); ++p) {
    char c = text[p];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '*' && depth == 0) {
      std::string head = text.substr(start, p - start);
      try {
        out.push_back(parse_class(head));
        start = p + 1;
      } catch (const Error&) {
        // coefficient multiplication; keep scanning
      }
    }
  }
  out.push_back(parse_class(text.substr(start)));
  return out;
}

}  // namespace hamgraph
