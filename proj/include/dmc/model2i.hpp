#ifndef DMC_MODEL2I_HPP
#define DMC_MODEL2I_HPP

#include <string>
#include <vector>

#include "dmc/objects.hpp"

namespace dmc {

/// A cell of a 2 x i grid: a one-point set, a copy of the naturals, or a
/// generic set named X; plus_one counts wrappings in 1 (+) - .
struct Cell {
  enum class Tag { One, NatCell, XCell };
  Tag tag = Tag::One;
  int plus_one = 0;
  auto operator<=>(const Cell&) const = default;
};

/// An object of the presheaf model: 2 rows by i columns of cells, with
/// symbolic horizontal and vertical arrow tags.
struct GridObj {
  int levels = 0;
  std::vector<std::vector<Cell>> cells;  // [row][col], 2 rows
  // horizontal[row][col] names the arrow col -> col+1; vertical[col] the
  // arrow row 0 -> row 1
  std::vector<std::vector<std::string>> horizontal;
  std::vector<std::string> vertical;

  bool is_terminal() const;
  bool operator==(const GridObj&) const = default;
};

/// A cube between grids: one arrow tag per cell.
struct GridMap {
  GridObj source, target;
  std::vector<std::vector<std::string>> cell_arrows;
};

GridObj terminal_grid(int levels);

/// The grid of N[k,p]: NatCell in columns 0..p of row 0 (and of row 1 as
/// well when k = 1), One elsewhere.
GridObj levels_of_nat(int p, int k, int levels);

/// Grid with X cells in columns 0..count-1 of both rows (the row object
/// X^(p) of the model's table, drawn on both rows).
GridObj x_level(int count, int levels);

/// Column action of T and G, row reindexing for M(p).
GridObj grid_functor(FunctorTag f, const GridObj& x);

/// Cellwise 1 (+) - .
GridObj f2i(const GridObj& x);

/// Zero / successor cube families for N[k,p].
GridMap zero_cube(int p, int k, int levels);
GridMap succ_cube(int n, int p, int k, int levels);

std::string print_grid(const GridObj& g);

struct ModelReport {
  struct Entry {
    std::string what;
    bool ok;
    std::string detail;
  };
  std::vector<Entry> checks;
  std::vector<Entry> flagged;  // known discrepancies with the printed table

  bool passed() const {
    for (const auto& e : checks)
      if (!e.ok) return false;
    return true;
  }
};

/// Checks the grid functors against the abstract three-clause rule for M_p,
/// the T/G fixed points, and the minimization fiber condition; separately
/// compares the reference table against the rule and flags disagreements.
ModelReport verify_model_equations(int levels);

/// The M_p action table in its reference layout (rows M_0..M_{i-1},
/// columns X^(0)..X^(i-1)); the last row keeps its hand-written entries
/// even where they disagree with the rule.
std::vector<std::vector<std::string>> reference_table(int levels);
std::string render_table(int levels);

}  // namespace dmc

#endif
