#include <doctest.h>

#include <set>

#include "brauer/arcs.hpp"
#include "support.hpp"

using namespace brauer;
using brauer::test::gv;

namespace {

std::vector<int> ids(const std::vector<EdgeId>& es) {
  std::vector<int> out;
  for (EdgeId e : es) out.push_back(e.value);
  return out;
}

}  // namespace

TEST_CASE("all_arcs") {
  CHECK(all_arcs(line_tree(1)).size() == 2);

  std::set<GVector> two;
  for (const Arc& a : all_arcs(line_tree(2))) two.insert(a.g());
  CHECK(two == std::set<GVector>{gv({1, 0}), gv({-1, 0}), gv({0, 1}), gv({0, -1}), gv({1, -1}),
                                 gv({-1, 1})});

  CHECK(all_arcs(test::ex_tree()).size() == 20);

  for (auto& [name, g] : test::corpus(5)) {
    auto arcs = all_arcs(g);
    const std::size_t n = g.edge_count();
    CHECK(arcs.size() == n * (n + 1));
    CHECK(std::is_sorted(arcs.begin(), arcs.end()));
    CHECK(std::adjacent_find(arcs.begin(), arcs.end()) == arcs.end());
  }
  for (std::size_t n : {8, 10}) {
    const std::size_t m = all_arcs(random_tree(n, 4)).size();
    CHECK(m == n * (n + 1));
  }
}

TEST_CASE("arc_from_pair") {
  auto g = line_tree(2);
  auto a = arc_from_pair(g, {0}, {2}, 1);
  CHECK(ids(a.walk().edges) == std::vector{1, 2});
  CHECK(a.walk().signs == std::vector{1, -1});

  auto b = arc_from_pair(g, {0}, {1}, -1);
  CHECK(ids(b.walk().edges) == std::vector{1});
  CHECK(b.walk().signs == std::vector{-1});

  // The sign belongs to the edge seen first from the smaller vertex.
  CHECK(arc_from_pair(g, {2}, {0}, 1) == a);
  CHECK_THROWS_AS(arc_from_pair(g, {0}, {0}, 1), InputError);
}

TEST_CASE("g_vector") {
  auto g = line_tree(3);
  CHECK(g_vector(arc_from_pair(g, {0}, {1}, 1)) == gv({1, 0, 0}));
  CHECK(g_vector(arc_from_pair(g, {0}, {2}, 1)) == gv({1, -1, 0}));

  auto two = line_tree(2);
  GVector sum{0, 0};
  for (auto x : {gv({-1, 0}), gv({-1, 1})}) {
    const GVector y = g_vector(arc_from_gvector(two, x));
    for (std::size_t k = 0; k < 2; ++k) sum[k] += y[k];
  }
  CHECK(sum == gv({-2, 1}));
}

TEST_CASE("arc_from_gvector") {
  auto g = line_tree(3);
  auto a = arc_from_gvector(g, gv({1, -1, 1}));
  CHECK(ids(a.walk().edges) == std::vector{1, 2, 3});
  CHECK_THROWS_WITH_AS(arc_from_gvector(g, gv({1, 1, 0})), doctest::Contains("alternate"), InputError);
  CHECK_THROWS_WITH_AS(arc_from_gvector(g, gv({1, 0, 1})), doctest::Contains("not a path"), InputError);
  CHECK_THROWS_WITH_AS(arc_from_gvector(g, gv({0, 0, 0})), doctest::Contains("empty"), InputError);
  CHECK_THROWS_AS(arc_from_gvector(g, gv({2, 0, 0})), InputError);
  CHECK_THROWS_AS(arc_from_gvector(g, gv({1, 0})), InputError);
  // Three edges at a vertex are not a path.
  CHECK_THROWS_AS(arc_from_gvector(star_tree(3), gv({1, -1, 1})), InputError);
}

TEST_CASE("restrict_arc") {
  auto g = line_tree(3);
  auto s = split_at_edge(g, {2});
  auto r = restrict_arc(g, arc_from_gvector(g, gv({1, -1, 1})), s.first);
  REQUIRE(r);
  CHECK(r->g() == gv({1, -1}));

  CHECK(!restrict_arc(g, arc_from_gvector(g, gv({0, 0, 1})), s.first));

  auto r2 = restrict_arc(g, arc_from_gvector(g, gv({0, -1, 0})), s.second);
  REQUIRE(r2);
  CHECK(r2->g() == gv({-1, 0}));

  // Signs survive when the walk direction flips on the subtree.
  auto r3 = restrict_arc(g, arc_from_gvector(g, gv({-1, 1, -1})), s.second);
  REQUIRE(r3);
  CHECK(r3->g() == gv({1, -1}));

  CHECK_THROWS_AS(restrict_arc(g, arc_from_gvector(g, gv({1, 0, 0})), flip(g, {1})), InputError);
}

TEST_CASE("arc invariants on the corpus") {
  for (auto& [name, g] : test::corpus(5, 2, 2)) {
    CAPTURE(name);
    for (const Arc& a : all_arcs(g)) {
      CHECK(arc_from_gvector(g, a.g()) == a);
      const SignedWalk w = signed_walk(a);
      CHECK(w.vertices.size() == w.edges.size() + 1);
      CHECK(w.vertices.front() < w.vertices.back());
      for (std::size_t i = 0; i + 1 < w.signs.size(); ++i) {
        CHECK(w.signs[i] == -w.signs[i + 1]);
        CHECK(g.shared_vertex(w.edges[i], w.edges[i + 1]) == w.vertices[i + 1]);
      }
      for (EdgeId e : g.edges())
        if (auto v = g.external_vertex(e); v && a.contains(e))
          CHECK((w.vertices.front() == *v || w.vertices.back() == *v));
    }
  }
}
