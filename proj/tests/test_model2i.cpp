#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmc/model2i.hpp"

using namespace dmc;

namespace {

std::vector<GridObj> sample_grids(int levels) {
  std::vector<GridObj> gs = {terminal_grid(levels)};
  for (int k = 0; k <= 1; ++k)
    for (int p = 0; p < levels; ++p)
      gs.push_back(levels_of_nat(p, k, levels));
  for (int c = 1; c <= levels; ++c) gs.push_back(x_level(c, levels));
  size_t n = gs.size();
  for (size_t i = 0; i < n; ++i) gs.push_back(f2i(gs[i]));
  return gs;
}

std::vector<FunctorTag> all_functors(int levels) {
  std::vector<FunctorTag> fs = {FunctorTag::t(), FunctorTag::g()};
  for (int p = 0; p < levels; ++p) fs.push_back(FunctorTag::m(p));
  return fs;
}

}  // namespace

TEST_CASE("column actions on mixed columns") {
  // (X over 1) -> T -> (1 over 1); -> G -> (X over X)
  GridObj x = x_level(1, 3);
  GridObj mixed = x;
  mixed.cells[1][0] = Cell{};  // X over 1 in column 0
  GridObj t = grid_functor(FunctorTag::t(), mixed);
  CHECK(t.is_terminal());
  GridObj g = grid_functor(FunctorTag::g(), mixed);
  CHECK(g.cells[0][0].tag == Cell::Tag::XCell);
  CHECK(g.cells[1][0].tag == Cell::Tag::XCell);
}

TEST_CASE("M_0 collapses the lowest level") {
  CHECK(grid_functor(FunctorTag::m(0), x_level(1, 3)).is_terminal());
  CHECK(grid_functor(FunctorTag::m(0), levels_of_nat(0, 1, 3)).is_terminal());
  // and fixes higher levels
  CHECK(grid_functor(FunctorTag::m(0), levels_of_nat(2, 0, 3)) ==
        levels_of_nat(2, 0, 3));
}

TEST_CASE("levels of the naturals") {
  GridObj full = levels_of_nat(2, 1, 3);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(full.cells[r][c].tag == Cell::Tag::NatCell);
  GridObj g = levels_of_nat(1, 0, 3);
  CHECK(g.cells[0][1].tag == Cell::Tag::NatCell);
  CHECK(g.cells[0][2].tag == Cell::Tag::One);
  CHECK(g.cells[1][0].tag == Cell::Tag::One);
  CHECK_FALSE(g.is_terminal());
  CHECK_THROWS_AS(levels_of_nat(3, 0, 3), IndexOutOfRange);
}

TEST_CASE("T and G are idempotent; all functors preserve the terminal grid") {
  for (const GridObj& g : sample_grids(3)) {
    GridObj t = grid_functor(FunctorTag::t(), g);
    CHECK(grid_functor(FunctorTag::t(), t) == t);
    GridObj gg = grid_functor(FunctorTag::g(), g);
    CHECK(grid_functor(FunctorTag::g(), gg) == gg);
  }
  for (FunctorTag f : all_functors(3))
    CHECK(grid_functor(f, terminal_grid(3)) == terminal_grid(3));
}

TEST_CASE("f2i acts cellwise and commutes with the column functors") {
  GridObj g = f2i(terminal_grid(3));
  for (const auto& row : g.cells)
    for (const Cell& c : row) CHECK(c.plus_one == 1);
  CHECK(g.cells.size() == 2);
  CHECK((int)g.cells[0].size() == 3);
  // the column functors ignore the (+)-wrapping, so f2i slides past them
  for (const GridObj& x : sample_grids(3))
    for (FunctorTag f : {FunctorTag::t(), FunctorTag::g()})
      CHECK(f2i(grid_functor(f, x)) == grid_functor(f, f2i(x)));
}

TEST_CASE("zero and successor cubes target the naturals cellwise") {
  GridMap z = zero_cube(1, 0, 3);
  CHECK(z.source.is_terminal());
  CHECK(z.cell_arrows[0][0] == "0");
  CHECK(z.cell_arrows[1][0] == "id");
  GridMap s = succ_cube(2, 1, 1, 3);
  CHECK(s.source == s.target);
  CHECK(s.cell_arrows[0][1] == "s2");
  CHECK(s.cell_arrows[0][2] == "id");
}

TEST_CASE("model equations hold for i in {2,3,5} with the table row flagged") {
  for (int levels : {2, 3, 5}) {
    ModelReport rep = verify_model_equations(levels);
    CHECK_MESSAGE(rep.passed(), "levels=" << levels);
    CHECK_FALSE(rep.flagged.empty());
  }
}

TEST_CASE("printed table layout at i = 3") {
  auto t = reference_table(3);
  std::vector<std::vector<std::string>> want = {
      {"1^{2xi}", "X^(1)", "X^(2)"},
      {"X^(0)", "X^(0)", "X^(2)"},
      {"X^(0)", "X^(0)", "X^(2)"},
  };
  CHECK(t == want);
  std::string rendered = render_table(3);
  CHECK(rendered.find("M_0^S") != std::string::npos);
  CHECK(rendered.find("X^(2)") != std::string::npos);
}

TEST_CASE("grid textual format uses bars") {
  std::string s = print_grid(levels_of_nat(0, 0, 3));
  CHECK(s == "N | 1 | 1\n1 | 1 | 1\n");
  CHECK(print_grid(f2i(terminal_grid(2))) == "1+1 | 1+1\n1+1 | 1+1\n");
}
