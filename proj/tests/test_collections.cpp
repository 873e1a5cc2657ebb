#include <doctest.h>

#include <set>

#include "brauer/collections.hpp"
#include "support.hpp"

using namespace brauer;
using brauer::test::gv;

namespace {

std::multiset<GVector> gvecs(const CollectionSet& s) {
  std::multiset<GVector> out;
  for (const auto& x : s.collections()) out.insert(x.gvec);
  return out;
}

std::set<GVector> arc_gvecs(const CollectionSet& s, const CompleteCollection& x) {
  std::set<GVector> out;
  for (std::size_t i : x.arcs) out.insert(s.arc(i).g());
  return out;
}

}  // namespace

TEST_CASE("enumerate_complete") {
  CHECK(enumerate_complete(line_tree(1)).size() == 2);

  auto two = CollectionSet::enumerate(line_tree(2));
  CHECK(two.size() == 6);
  CHECK(gvecs(two) == std::multiset<GVector>{gv({-2, 1}), gv({2, -1}), gv({-1, -1}), gv({1, 1}),
                                             gv({-1, 2}), gv({1, -2})});

  CHECK(enumerate_complete(line_tree(3)).size() == 20);

  CHECK_THROWS_AS(CollectionSet::enumerate(line_tree(4), {.max_edges = 3}), InputError);
}

TEST_CASE("enumeration order is lexicographic in arc g-vectors") {
  auto s = CollectionSet::enumerate(test::ex_tree());
  CHECK(s.size() == 70);
  std::vector<std::vector<GVector>> keys;
  for (const auto& x : s.collections()) {
    std::vector<GVector> k;
    for (std::size_t i : x.arcs) k.push_back(s.arc(i).g());
    CHECK(std::is_sorted(k.begin(), k.end()));
    keys.push_back(k);
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("counts_by_gvector") {
  auto s = CollectionSet::enumerate(line_tree(3));
  CHECK(s.counts_by_gvector({1}) ==
        std::map<int, std::size_t>{{-3, 1}, {-2, 3}, {-1, 6}, {1, 6}, {2, 3}, {3, 1}});
  CHECK(s.counts_by_gvector({2}) ==
        std::map<int, std::size_t>{{-3, 2}, {-2, 4}, {-1, 4}, {1, 4}, {2, 4}, {3, 2}});
  CHECK(CollectionSet::enumerate(line_tree(1)).counts_by_gvector({1}) ==
        std::map<int, std::size_t>{{-1, 1}, {1, 1}});
}

TEST_CASE("lookup_by_gvector") {
  auto two = CollectionSet::enumerate(line_tree(2));
  auto a1 = lookup_by_gvector(two, gv({-2, 1}));
  REQUIRE(a1);
  CHECK(arc_gvecs(two, *a1) == std::set<GVector>{gv({-1, 0}), gv({-1, 1})});
  CHECK(!lookup_by_gvector(two, gv({0, 1})));

  auto three = CollectionSet::enumerate(line_tree(3));
  auto top = lookup_by_gvector(three, gv({1, 1, 1}));
  REQUIRE(top);
  CHECK(arc_gvecs(three, *top) == std::set<GVector>{gv({1, 0, 0}), gv({0, 1, 0}), gv({0, 0, 1})});
}

TEST_CASE("count_by_edge_pair") {
  auto two = CollectionSet::enumerate(line_tree(2));
  auto h = two.count_by_edge_pair({1}, {2});
  CHECK(h[{2, -1}] == 1);
  CHECK(h[{1, 1}] == 1);
  CHECK(h[{0, 1}] == 0);

  auto s = CollectionSet::enumerate(test::ex_tree());
  for (EdgeId e : s.tree().edges())
    for (EdgeId f : s.tree().edges()) {
      std::map<int, std::size_t> me, mf;
      for (auto [k, c] : s.count_by_edge_pair(e, f)) {
        me[k.first] += c;
        mf[k.second] += c;
      }
      CHECK(me == s.counts_by_gvector(e));
      CHECK(mf == s.counts_by_gvector(f));
    }
}

TEST_CASE("collection invariants on the corpus") {
  for (auto& [name, g] : test::corpus(4, 2)) {
    CAPTURE(name);
    auto s = CollectionSet::enumerate(g);
    const int n = static_cast<int>(g.edge_count());
    std::set<GVector> distinct;
    for (const auto& x : s.collections()) {
      distinct.insert(x.gvec);
      CHECK(x.arcs.size() == g.edge_count());
      for (std::size_t i : x.arcs)
        for (std::size_t j : x.arcs) CHECK(s.compatibility()(i, j));
      for (int v : x.gvec) {
        CHECK(v != 0);
        CHECK(std::abs(v) <= n);
      }
      CHECK(s.lookup(x.gvec) == &x);
    }
    CHECK(distinct.size() == s.size());
    for (const auto& m : s.maximal_compatible_sets()) CHECK(m.size() == g.edge_count());
  }
}

TEST_CASE("fields give the same enumeration") {
  auto g = test::ex_tree();
  auto q = CollectionSet::enumerate(g);
  auto f2 = CollectionSet::enumerate(g, {.field = Field::gf2});
  CHECK(q.collections() == f2.collections());
}
