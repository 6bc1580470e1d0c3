#include "dmc/model2i.hpp"

#include <sstream>

namespace dmc {

namespace {

std::string cell_text(const Cell& c) {
  std::string base;
  switch (c.tag) {
    case Cell::Tag::One: base = "1"; break;
    case Cell::Tag::NatCell: base = "N"; break;
    case Cell::Tag::XCell: base = "X"; break;
  }
  for (int j = 0; j < c.plus_one; ++j) base = "1+" + base;
  return base;
}

// Maps are display-level tags derived from the cells; keeping them canonical
// makes grid equality cell equality.
void canonical_maps(GridObj& g) {
  g.horizontal.assign(2, std::vector<std::string>());
  g.vertical.clear();
  for (int row = 0; row < 2; ++row)
    for (int c = 0; c + 1 < g.levels; ++c) {
      const Cell& from = g.cells[row][c];
      const Cell& to = g.cells[row][c + 1];
      g.horizontal[row].push_back(from == to ? "id"
                                  : to.tag == Cell::Tag::One ? "!"
                                                             : "h");
    }
  for (int c = 0; c < g.levels; ++c) {
    const Cell& top = g.cells[0][c];
    const Cell& bot = g.cells[1][c];
    g.vertical.push_back(top == bot ? "id"
                         : bot.tag == Cell::Tag::One ? "!"
                                                     : "v");
  }
}

GridObj make_grid(int levels) {
  GridObj g;
  g.levels = levels;
  g.cells.assign(2, std::vector<Cell>(levels));
  canonical_maps(g);
  return g;
}

}  // namespace

bool GridObj::is_terminal() const {
  for (const auto& row : cells)
    for (const auto& c : row)
      if (c != Cell{}) return false;
  return true;
}

GridObj terminal_grid(int levels) { return make_grid(levels); }

GridObj levels_of_nat(int p, int k, int levels) {
  if (p < 0 || p >= levels || k < 0 || k > 1)
    throw IndexOutOfRange("levels_of_nat: index out of range");
  GridObj g = make_grid(levels);
  for (int c = 0; c <= p; ++c) {
    g.cells[0][c] = {Cell::Tag::NatCell};
    if (k == 1) g.cells[1][c] = {Cell::Tag::NatCell};
  }
  canonical_maps(g);
  return g;
}

GridObj x_level(int count, int levels) {
  GridObj g = make_grid(levels);
  for (int c = 0; c < count && c < levels; ++c) {
    g.cells[0][c] = {Cell::Tag::XCell};
    g.cells[1][c] = {Cell::Tag::XCell};
  }
  canonical_maps(g);
  return g;
}

GridObj grid_functor(FunctorTag f, const GridObj& x) {
  GridObj g = x;
  switch (f.kind) {
    case FunctorKind::T:
      // erase the top of every mixed column, keeping its (+)-wrapping so the
      // action commutes with f2i cellwise
      for (int c = 0; c < g.levels; ++c)
        if (g.cells[0][c].tag != g.cells[1][c].tag)
          g.cells[0][c] = Cell{Cell::Tag::One, g.cells[0][c].plus_one};
      break;
    case FunctorKind::G:
      // fill the one-point side of a mixed column with the other cell
      for (int c = 0; c < g.levels; ++c) {
        Cell& top = g.cells[0][c];
        Cell& bot = g.cells[1][c];
        if (top.tag == bot.tag) continue;
        if (bot.tag == Cell::Tag::One)
          bot.tag = top.tag;
        else
          top.tag = bot.tag;
      }
      break;
    case FunctorKind::M: {
      // reindexing along M_p: column p reads column p+1 (terminal past the
      // end of the chain)
      if (f.q < 0 || f.q >= x.levels)
        throw IndexOutOfRange("grid functor M index out of range");
      for (int row = 0; row < 2; ++row)
        g.cells[row][f.q] =
            f.q + 1 < x.levels ? x.cells[row][f.q + 1] : Cell{};
      break;
    }
  }
  canonical_maps(g);
  return g;
}

GridObj f2i(const GridObj& x) {
  GridObj g = x;
  for (auto& row : g.cells)
    for (auto& c : row) c.plus_one++;
  canonical_maps(g);
  return g;
}

GridMap zero_cube(int p, int k, int levels) {
  GridMap m;
  m.source = terminal_grid(levels);
  m.target = levels_of_nat(p, k, levels);
  m.cell_arrows.assign(2, std::vector<std::string>(levels, "id"));
  for (int row = 0; row < 2; ++row)
    for (int c = 0; c < levels; ++c)
      if (m.target.cells[row][c].tag == Cell::Tag::NatCell)
        m.cell_arrows[row][c] = "0";
  return m;
}

GridMap succ_cube(int n, int p, int k, int levels) {
  GridMap m;
  m.source = levels_of_nat(p, k, levels);
  m.target = m.source;
  m.cell_arrows.assign(2, std::vector<std::string>(levels, "id"));
  std::string s = n == 1 ? "s1" : "s2";
  for (int row = 0; row < 2; ++row)
    for (int c = 0; c < levels; ++c)
      if (m.target.cells[row][c].tag == Cell::Tag::NatCell)
        m.cell_arrows[row][c] = s;
  return m;
}

std::string print_grid(const GridObj& g) {
  std::ostringstream os;
  for (int row = 0; row < 2; ++row) {
    for (int c = 0; c < g.levels; ++c) {
      if (c) os << " | ";
      os << cell_text(g.cells[row][c]);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::string xname(int q) { return "X^(" + std::to_string(q) + ")"; }

std::string grid_name(const GridObj& g, int levels) {
  if (g.is_terminal()) return "1^{2xi}";
  int count = 0;
  for (int c = 0; c < levels; ++c)
    if (g.cells[0][c].tag == Cell::Tag::XCell) count++;
  return xname(count - 1);
}

// M_p applied to the level object X^(q), by the abstract three-clause rule.
std::string abstract_cell(int p, int q) {
  if (p == q && p == 0) return "1^{2xi}";
  if (p == q) return xname(q - 1);
  return xname(q);
}

}  // namespace

std::vector<std::vector<std::string>> reference_table(int levels) {
  std::vector<std::vector<std::string>> t(levels,
                                          std::vector<std::string>(levels));
  for (int p = 0; p < levels; ++p)
    for (int q = 0; q < levels; ++q) t[p][q] = abstract_cell(p, q);
  // the source's printed bottom row deviates from the rule; reproduce it
  int last = levels - 1;
  t[last][last] = xname(last);
  if (levels >= 3) t[last][levels - 2] = xname(levels - 3);
  return t;
}

std::string render_table(int levels) {
  auto t = reference_table(levels);
  std::ostringstream os;
  os << "      ";
  for (int q = 0; q < levels; ++q) os << '\t' << xname(q);
  os << '\n';
  for (int p = 0; p < levels; ++p) {
    os << "M_" << p << "^S";
    for (int q = 0; q < levels; ++q) os << '\t' << t[p][q];
    os << '\n';
  }
  return os.str();
}

ModelReport verify_model_equations(int levels) {
  ModelReport rep;
  auto check = [&](const std::string& what, bool ok,
                   const std::string& detail = "") {
    rep.checks.push_back({what, ok, detail});
  };

  // M_p on the levels of the naturals, against the abstract rule
  for (int k = 0; k <= 1; ++k)
    for (int p = 0; p < levels; ++p)
      for (int q = 0; q < levels; ++q) {
        GridObj got = grid_functor(FunctorTag::m(p), levels_of_nat(q, k, levels));
        GridObj want = (p == q && p == 0) ? terminal_grid(levels)
                       : (p == q) ? levels_of_nat(p - 1, k, levels)
                                  : levels_of_nat(q, k, levels);
        std::ostringstream what;
        what << "M_" << p << " N[" << k << "," << q << "]";
        check(what.str(), got == want,
              got == want ? "" : "got\n" + print_grid(got));
      }

  // T/G actions and fixed points
  for (int p = 0; p < levels; ++p) {
    check("T N[0," + std::to_string(p) + "] = terminal",
          grid_functor(FunctorTag::t(), levels_of_nat(p, 0, levels)) ==
              terminal_grid(levels));
    check("T N[1," + std::to_string(p) + "] fixed",
          grid_functor(FunctorTag::t(), levels_of_nat(p, 1, levels)) ==
              levels_of_nat(p, 1, levels));
    check("G N[0," + std::to_string(p) + "] = N[1," + std::to_string(p) + "]",
          grid_functor(FunctorTag::g(), levels_of_nat(p, 0, levels)) ==
              levels_of_nat(p, 1, levels));
    check("G N[1," + std::to_string(p) + "] fixed",
          grid_functor(FunctorTag::g(), levels_of_nat(p, 1, levels)) ==
              levels_of_nat(p, 1, levels));
  }

  // minimization fiber: the composite M_{i-1}...M_0 lands on the terminal
  // grid exactly when the object-level residue is Top
  for (int k = 0; k <= 1; ++k)
    for (int p = 0; p < levels; ++p) {
      GridObj g = levels_of_nat(p, k, levels);
      for (int q = 0; q < levels; ++q) g = grid_functor(FunctorTag::m(q), g);
      bool grid_in_fiber = g.is_terminal();
      bool residue_top =
          min_fiber_residue(obj_nat(k, p), levels)->kind == ObjExpr::Kind::Top;
      std::ostringstream what;
      what << "fiber of M_{i-1}..M_0 at N[" << k << "," << p << "]";
      check(what.str(), grid_in_fiber == residue_top);
    }

  // the printed table against the rule: disagreements are flagged, the
  // consistent part must match the computed action
  auto printed = reference_table(levels);
  for (int p = 0; p < levels; ++p)
    for (int q = 0; q < levels; ++q) {
      std::string computed =
          grid_name(grid_functor(FunctorTag::m(p), x_level(q + 1, levels)),
                    levels);
      std::string rule = abstract_cell(p, q);
      std::ostringstream at;
      at << "table row M_" << p << "^S, column " << xname(q);
      if (printed[p][q] != rule) {
        rep.flagged.push_back({at.str(), false,
                               "printed " + printed[p][q] + ", rule gives " +
                                   rule});
      } else {
        check(at.str(), computed == rule,
              "computed " + computed + ", rule " + rule);
      }
    }

  return rep;
}

}  // namespace dmc
