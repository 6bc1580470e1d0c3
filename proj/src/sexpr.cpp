#include "dmc/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace dmc {

namespace {

struct Reader {
  const std::string& src;
  size_t pos = 0;
  int line = 1;
  int column = 1;

  explicit Reader(const std::string& s) : src(s) {}

  bool done() const { return pos >= src.size(); }
  char peek() const { return src[pos]; }

  char advance() {
    char c = src[pos++];
    if (c == '\n') {
      line++;
      column = 1;
    } else {
      column++;
    }
    return c;
  }

  void skip_ws() {
    while (!done()) {
      char c = peek();
      if (c == ';') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Sexpr read() {
    skip_ws();
    if (done()) throw ParseError("unexpected end of input", line, column);
    int l = line, c = column;
    if (peek() == '(') {
      advance();
      Sexpr e;
      e.kind = Sexpr::Kind::List;
      e.line = l;
      e.column = c;
      while (true) {
        skip_ws();
        if (done()) throw ParseError("unbalanced parentheses", l, c);
        if (peek() == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (peek() == ')') throw ParseError("unexpected ')'", l, c);
    Sexpr e;
    e.kind = Sexpr::Kind::Atom;
    e.line = l;
    e.column = c;
    while (!done()) {
      char ch = peek();
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' ||
          ch == ')' || ch == ';')
        break;
      e.atom.push_back(advance());
    }
    return e;
  }
};

}  // namespace

std::vector<Sexpr> parse_sexprs(const std::string& src) {
  Reader r(src);
  std::vector<Sexpr> out;
  while (true) {
    r.skip_ws();
    if (r.done()) break;
    out.push_back(r.read());
  }
  return out;
}

Sexpr parse_sexpr(const std::string& src) {
  auto all = parse_sexprs(src);
  if (all.size() != 1)
    throw ParseError("expected exactly one expression", 1, 1);
  return all[0];
}

std::string print_sexpr(const Sexpr& e) {
  if (e.is_atom()) return e.atom;
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < e.items.size(); ++i) {
    if (i) os << ' ';
    os << print_sexpr(e.items[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace dmc
