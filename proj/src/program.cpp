#include "dmc/program.hpp"

#include <map>

#include "dmc/sexpr.hpp"

namespace dmc {

const Definition* ProgramFile::find(const std::string& name) const {
  // later definitions win, matching the scope the parser gives directives
  for (auto it = definitions.rbegin(); it != definitions.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

ProgramFile parse_program(const std::string& src, int levels,
                          bool extended_prn) {
  ProgramFile p;
  std::map<std::string, TermPtr> scope;
  for (const auto& e : stdlib(levels)) scope[e.name] = e.term;

  NameLookup lookup = [&](const std::string& name) -> TermPtr {
    auto it = scope.find(name);
    return it == scope.end() ? nullptr : it->second;
  };

  for (const Sexpr& e : parse_sexprs(src)) {
    if (e.is_atom() || e.size() == 0)
      throw ParseError("expected (def ...), (run ...) or (check ...)", e.line,
                       e.column);
    std::string h = e.head();
    if (h == "def") {
      if (e.size() != 3 && e.size() != 4)
        throw ParseError("expected (def NAME [TYPE] TERM)", e.line, e.column);
      const Sexpr& name = e.at(1);
      if (!name.is_atom())
        throw ParseError("definition name must be an atom", name.line,
                         name.column);
      for (const auto& d : p.definitions)
        if (d.name == name.atom)
          throw ParseError("duplicate definition '" + name.atom + "'",
                           name.line, name.column);
      Definition d;
      d.name = name.atom;
      if (e.size() == 4) {
        const Sexpr& ty = e.at(2);
        if (ty.is_atom() || ty.size() != 3 || ty.head() != "arrow")
          throw ParseError("expected type (arrow DOM COD)", ty.line,
                           ty.column);
        d.declared = {object_of_sexpr(ty.at(1)), object_of_sexpr(ty.at(2))};
      }
      d.term = term_from_sexpr(e.at(e.size() - 1), levels, extended_prn,
                               lookup);
      scope[d.name] = d.term;
      p.definitions.push_back(std::move(d));
    } else if (h == "run" || h == "check") {
      if (e.size() < 2 || !e.at(1).is_atom())
        throw ParseError("expected (" + h + " NAME ...)", e.line, e.column);
      if (h == "check" && e.size() != 2)
        throw ParseError("expected (check NAME)", e.line, e.column);
      Directive dir;
      dir.kind = h == "run" ? Directive::Kind::Run : Directive::Kind::Check;
      dir.name = e.at(1).atom;
      if (!scope.count(dir.name))
        throw ParseError("unknown name '" + dir.name + "'", e.at(1).line,
                         e.at(1).column);
      for (size_t i = 2; i < e.size(); ++i)
        dir.args.push_back(print_sexpr(e.at(i)));
      p.directives.push_back(std::move(dir));
    } else {
      throw ParseError("unknown top-level form '" + h + "'", e.line, e.column);
    }
  }
  return p;
}

std::string print_program(const ProgramFile& p) {
  std::string out;
  for (const auto& d : p.definitions) {
    out += "(def " + d.name;
    if (d.declared)
      out += " (arrow " + print_sexpr(sexpr_of_object(d.declared->first)) +
             " " + print_sexpr(sexpr_of_object(d.declared->second)) + ")";
    out += " " + print_term(d.term) + ")\n";
  }
  for (const auto& dir : p.directives) {
    out += dir.kind == Directive::Kind::Run ? "(run " : "(check ";
    out += dir.name;
    for (const auto& a : dir.args) out += " " + a;
    out += ")\n";
  }
  return out;
}

bool program_equal(const ProgramFile& a, const ProgramFile& b) {
  if (a.definitions.size() != b.definitions.size() ||
      a.directives.size() != b.directives.size())
    return false;
  for (size_t i = 0; i < a.definitions.size(); ++i) {
    const auto& x = a.definitions[i];
    const auto& y = b.definitions[i];
    if (x.name != y.name || x.declared.has_value() != y.declared.has_value())
      return false;
    if (x.declared &&
        (!obj_equal(x.declared->first, y.declared->first) ||
         !obj_equal(x.declared->second, y.declared->second)))
      return false;
    if (!term_equal(x.term, y.term)) return false;
  }
  for (size_t i = 0; i < a.directives.size(); ++i) {
    const auto& x = a.directives[i];
    const auto& y = b.directives[i];
    if (x.kind != y.kind || x.name != y.name || x.args != y.args) return false;
  }
  return true;
}

}  // namespace dmc
