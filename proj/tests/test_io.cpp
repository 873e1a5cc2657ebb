#include <doctest.h>

#include "brauer/complexes.hpp"
#include "support.hpp"

using namespace brauer;

TEST_CASE("tree documents round trip") {
  auto g = test::ex_tree();
  CHECK(g.edge_count() == 4);
  CHECK(g.rotation({3}) == std::vector<EdgeId>{{2}, {3}, {4}});
  CHECK(parse_tree(tree_to_json(g).dump()) == g);
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& t : all_plane_trees(n)) CHECK(parse_tree(tree_to_json(t).dump()) == t);
  auto r = random_tree(7, 3);
  CHECK(parse_tree(tree_to_json(r).dump(2)) == r);
}

TEST_CASE("malformed tree documents") {
  CHECK_THROWS_AS(parse_tree("not json"), InputError);
  CHECK_THROWS_AS(parse_tree("[]"), InputError);
  CHECK_THROWS_AS(parse_tree(R"({"vertices":[1,2],"edges":[]})"), InputError);
  CHECK_THROWS_AS(
      parse_tree(R"({"vertices":[1,2],"edges":[{"id":1,"ends":[1,2]}],"rotations":{"x":[1]}})"),
      InputError);
  CHECK_THROWS_AS(
      parse_tree(R"({"vertices":[1,2],"edges":[{"id":1,"ends":[1]}],"rotations":{}})"),
      InputError);
  CHECK_THROWS_AS(
      parse_tree(R"({"vertices":[1,2],"edges":[{"id":1,"ends":[1,2]}],"rotations":{"1":[1],"2":[2]}})"),
      InputError);
  CHECK_THROWS_AS(read_tree_file(std::string(BRAUER_TEST_DATA) + "/cycle.json"), InputError);
  CHECK_THROWS_AS(read_tree_file("/nonexistent/tree.json"), InputError);
}

TEST_CASE("quiver exports") {
  auto g = test::ex_tree();
  auto q = build_quiver(g);
  auto dot = quiver_dot(g, q);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(count("[label=") == 4 + 8);
  CHECK(count(" -> ") == 8);

  auto rel = relations_to_json(g, q);
  CHECK(rel["arrows"].size() == 8);
  CHECK(rel["J"].size() == 4);
  CHECK(rel["Isc"].size() == 8);
  CHECK(rel["I"].size() == 8);
}

TEST_CASE("complex and collection exports") {
  auto g = line_tree(2);
  auto alg = BrauerAlgebra::build(g);
  auto t = complex_of_arc(alg, arc_from_gvector(g, test::gv({1, -1})));
  auto j = complex_to_json(alg, t);
  CHECK(j["deg0"].size() == 1);
  CHECK(j["degm1"].size() == 1);
  REQUIRE(j["d"].size() == 1);
  CHECK(j["d"][0]["arrows"].size() == 1);

  auto set = CollectionSet::enumerate(g);
  auto cj = collections_to_json(set);
  CHECK(cj.size() == 6);
  auto counts = set.counts_by_gvector({1});
  CHECK(counts_to_json({1}, counts)["counts"].size() == 4);
  CHECK(counts_table({1}, counts).find("edge 1") == 0);

  Report r{"demo", {}, {}};
  r.add("x", "claim", 3, 3);
  r.add("y", "claim", 3, 4);
  auto rj = report_to_json(r);
  CHECK(rj["pass"] == false);
  CHECK(rj["rows"][1]["status"] == "fail");
  CHECK(report_table(r).find("1 failed") != std::string::npos);
}
