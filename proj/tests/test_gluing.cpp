#include <doctest.h>

#include <numeric>
#include <set>

#include "brauer/gluing.hpp"
#include "support.hpp"

using namespace brauer;
using brauer::test::gv;

namespace {

// Maximal sets of pairwise product-order comparable cells, by brute force.
std::set<std::vector<Cell>> maximal_chains(int s, int t) {
  std::vector<Cell> grid;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j) grid.emplace_back(i, j);
  auto comparable = [](Cell a, Cell b) {
    return (a.first <= b.first && a.second <= b.second) ||
           (a.first >= b.first && a.second >= b.second);
  };
  const std::size_t m = grid.size();
  std::vector<std::uint32_t> chains;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x)
      for (std::size_t y = x + 1; y < m && ok; ++y)
        if ((mask >> x & 1) && (mask >> y & 1) && !comparable(grid[x], grid[y])) ok = false;
    if (ok) chains.push_back(mask);
  }
  std::set<std::vector<Cell>> out;
  for (auto c : chains) {
    bool maximal = true;
    for (auto d : chains)
      if (d != c && (d & c) == c) maximal = false;
    if (!maximal) continue;
    std::vector<Cell> cells;
    for (std::size_t x = 0; x < m; ++x)
      if (c >> x & 1) cells.push_back(grid[x]);
    out.insert(cells);
  }
  return out;
}

std::shared_ptr<const CollectionSet> enumerate(const PlaneTree& g) {
  return std::make_shared<const CollectionSet>(CollectionSet::enumerate(g));
}

}  // namespace

TEST_CASE("lattice_paths") {
  auto one = lattice_paths(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].cells == std::vector<Cell>{{1, 1}});
  CHECK(lattice_paths(2, 2).size() == 2);

  auto p32 = lattice_paths(3, 2);
  CHECK(p32.size() == 3);
  std::set<std::vector<Cell>> got;
  for (auto& p : p32) got.insert(p.cells);
  CHECK(got == std::set<std::vector<Cell>>{{{1, 1}, {1, 2}, {2, 2}, {3, 2}},
                                           {{1, 1}, {2, 1}, {2, 2}, {3, 2}},
                                           {{1, 1}, {2, 1}, {3, 1}, {3, 2}}});
  CHECK_THROWS_AS(lattice_paths(0, 2), InputError);
}

TEST_CASE("lattice paths are the maximal comparable sets") {
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= 4; ++t) {
      if (s * t > 16) continue;
      std::set<std::vector<Cell>> got;
      for (auto& p : lattice_paths(s, t)) got.insert(p.cells);
      CHECK(got == maximal_chains(s, t));
    }
}

TEST_CASE("lattice path counts and shape") {
  for (int s = 1; s <= 10; ++s)
    for (int t = 1; t <= 10; ++t) {
      auto ps = lattice_paths(s, t);
      CHECK(BigInt(static_cast<unsigned long>(ps.size())) == binomial(s + t - 2, s - 1));
      if (s + t > 14) continue;
      for (auto& p : ps) {
        CHECK(p.cells.size() == static_cast<std::size_t>(s + t - 1));
        CHECK(p.cells.front() == Cell{1, 1});
        CHECK(p.cells.back() == Cell{s, t});
        CHECK(is_lattice_path(s, t, p.cells));
      }
    }
  CHECK(!is_lattice_path(2, 2, {{1, 1}, {1, 2}, {2, 1}}));
  CHECK(!is_lattice_path(2, 2, {{1, 1}, {2, 2}}));
}

TEST_CASE("path_multiplicities") {
  auto m = path_multiplicities({2, 2, {{1, 1}, {2, 1}, {2, 2}}});
  CHECK(m.rows == std::vector{1, 2});
  CHECK(m.cols == std::vector{2, 1});
  auto one = path_multiplicities({1, 1, {{1, 1}}});
  CHECK(one.rows == std::vector{1});
  CHECK(one.cols == std::vector{1});
  auto p = path_multiplicities({3, 2, {{1, 1}, {1, 2}, {2, 2}, {3, 2}}});
  CHECK(p.rows == std::vector{2, 1, 1});
  for (auto& path : lattice_paths(4, 3)) {
    auto mm = path_multiplicities(path);
    CHECK(std::accumulate(mm.rows.begin(), mm.rows.end(), 0) == 6);
    CHECK(std::accumulate(mm.cols.begin(), mm.cols.end(), 0) == 6);
  }
}

TEST_CASE("restrict_collection") {
  SUBCASE("stalks on the 3-edge line") {
    auto whole = enumerate(line_tree(3));
    auto ctx = GluingContext::build(whole, {2});
    auto x = *whole->index_of(gv({1, 1, 1}));
    auto [ia, ib] = ctx.restriction(x);
    REQUIRE(ia != GluingContext::npos);
    REQUIRE(ib != GluingContext::npos);
    CHECK(ctx.first().collections()[ia].gvec == gv({1, 1}));
    CHECK(ctx.second().collections()[ib].gvec == gv({1, 1}));
  }
  SUBCASE("external edge of the 2-edge line") {
    auto whole = enumerate(line_tree(2));
    auto ctx = GluingContext::build(whole, {1});
    auto x = *whole->index_of(gv({-2, 1}));
    auto r = restrict_collection(*whole, ctx.split(), whole->collections()[x]);
    CHECK(ctx.first().tree().edge_count() == 1);
    REQUIRE(r.first.size() == 1);
    CHECK(r.first[0].g() == gv({-1}));
    CHECK(ctx.second().collections()[ctx.restriction(x).second] == whole->collections()[x]);
  }
  SUBCASE("g_e adds up to j + 1") {
    for (auto& [name, g] : test::corpus(5)) {
      auto whole = enumerate(g);
      for (EdgeId e : g.edges()) {
        auto ctx = GluingContext::build(whole, e);
        const std::size_t ka = ctx.first().tree().edge_pos(e), kb = ctx.second().tree().edge_pos(e);
        for (std::size_t x = 0; x < whole->size(); ++x) {
          auto [ia, ib] = ctx.restriction(x);
          REQUIRE(ia != GluingContext::npos);
          REQUIRE(ib != GluingContext::npos);
          const int j = whole->collections()[x].gvec[g.edge_pos(e)];
          const int sa = ctx.first().collections()[ia].gvec[ka];
          const int sb = ctx.second().collections()[ib].gvec[kb];
          CHECK(sa + sb == j + (j > 0 ? 1 : -1));
        }
      }
    }
  }
}

TEST_CASE("glue_all") {
  auto whole = enumerate(line_tree(3));
  auto ctx = GluingContext::build(whole, {2});
  auto xa = *ctx.first().index_of(gv({-1, 2}));
  auto xb = *ctx.second().index_of(gv({2, -1}));
  auto fiber = ctx.glue_all(xa, xb);
  REQUIRE(fiber.size() == 2);
  for (auto x : fiber) CHECK(whole->collections()[x].gvec[1] == 3);

  auto one_a = *ctx.first().index_of(gv({1, 1}));
  auto one_b = *ctx.second().index_of(gv({1, 1}));
  CHECK(ctx.glue_all(one_a, one_b).size() == 1);

  auto neg_b = *ctx.second().index_of(gv({-1, -1}));
  CHECK_THROWS_AS(ctx.glue_all(one_a, neg_b), InputError);

  // Counting identity over every j at the middle edge.
  for (int j = 1; j <= 3; ++j) {
    std::size_t total = 0;
    for (int s = 1; s <= j; ++s) {
      const int t = j + 1 - s;
      total += ctx.first().with_value({2}, s).size() * ctx.second().with_value({2}, t).size() *
               binomial(s + t - 2, s - 1).get_ui();
    }
    CHECK(total == whole->with_value({2}, j).size());
  }
}

TEST_CASE("reconstruct_path") {
  auto whole = enumerate(line_tree(3));
  auto ctx = GluingContext::build(whole, {2});
  auto top = *whole->index_of(gv({1, 1, 1}));
  auto r = ctx.reconstruct_path(top);
  CHECK(r.s == 1);
  CHECK(r.t == 1);
  CHECK(r.path.cells == std::vector<Cell>{{1, 1}});

  std::set<std::vector<Cell>> shapes;
  for (auto x : whole->with_value({2}, 3)) {
    auto p = ctx.reconstruct_path(x);
    CHECK(p.s == 2);
    CHECK(p.t == 2);
    CHECK(p.unique_up_to_reversal);
    shapes.insert(p.path.cells);
  }
  CHECK(shapes.size() == 2);

  auto a1 = *ctx.first().index_of(gv({-1, 2}));
  auto b1 = *ctx.second().index_of(gv({2, -1}));
  auto order = ctx.fiber_order(a1, b1);
  REQUIRE(order);
  CHECK(order->rows.size() == 2);
  CHECK(order->cols.size() == 2);
}

TEST_CASE("verify_gluing_decomposition") {
  SUBCASE("middle edge of the 3-edge line") {
    auto rep = verify_gluing_decomposition(line_tree(3), {2});
    CHECK(rep.pass());
    std::map<std::string, std::string> cover;
    for (const auto& row : rep.rows)
      if (row.claim == "counting identity") cover[row.instance] = row.actual.get_str();
    CHECK(cover["edge 2 j=1"] == "4");
    CHECK(cover["edge 2 j=2"] == "4");
    CHECK(cover["edge 2 j=3"] == "2");
  }
  SUBCASE("external edge of the 2-edge line") { CHECK(verify_gluing_decomposition(line_tree(2), {1}).pass()); }
  SUBCASE("every edge of the example tree") {
    auto g = test::ex_tree();
    auto whole = enumerate(g);
    for (EdgeId e : g.edges()) CHECK(verify_gluing_decomposition(GluingContext::build(whole, e)).pass());
  }
}
