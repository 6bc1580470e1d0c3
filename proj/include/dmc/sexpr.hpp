#ifndef DMC_SEXPR_HPP
#define DMC_SEXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmc {

// Generic s-expression reader shared by the term grammar and program files.

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
};

struct Sexpr {
  enum class Kind { Atom, List } kind;
  std::string atom;
  std::vector<Sexpr> items;
  int line = 0;
  int column = 0;

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_list() const { return kind == Kind::List; }
  size_t size() const { return items.size(); }
  const Sexpr& at(size_t i) const {
    if (i >= items.size())
      throw ParseError("form has too few items", line, column);
    return items[i];
  }
  std::string head() const {
    if (!is_list() || items.empty() || !items[0].is_atom()) return "";
    return items[0].atom;
  }
};

std::vector<Sexpr> parse_sexprs(const std::string& src);
Sexpr parse_sexpr(const std::string& src);
std::string print_sexpr(const Sexpr& e);

}  // namespace dmc

#endif
