#include <doctest.h>

#include <random>

#include "brauer/algebra.hpp"
#include "support.hpp"

using namespace brauer;
using brauer::test::ex_tree;

namespace {

// Reduces a composable arrow word by hand: a turn between two vertices is
// zero, a run around one vertex is a sub-path, the socle, or zero.
std::optional<std::size_t> reduce_word(const BrauerAlgebra& alg, const ArrowPath& w) {
  const Quiver& q = alg.quiver();
  const VertexId v = q.arrows[w.front()].at;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (q.arrows[w[i]].at != v) return std::nullopt;
    if (i > 0 && q.arrows[w[i - 1]].target != q.arrows[w[i]].source) return std::nullopt;
  }
  const std::size_t deg = alg.tree().degree(v);
  if (w.size() > deg) return std::nullopt;
  return alg.path(v, q.arrows[w.front()].source, w.size());
}

void words(const Quiver& q, std::size_t len, ArrowPath& cur, std::vector<ArrowPath>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (cur.empty() || q.arrows[cur.back()].target == q.arrows[a].source) {
      cur.push_back(a);
      words(q, len, cur, out);
      cur.pop_back();
    }
}

std::size_t dim_formula(const PlaneTree& g) {
  std::size_t d = 0;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.ends(e);
    d += g.degree(u) + g.degree(v);
  }
  return d;
}

}  // namespace

TEST_CASE("build_quiver") {
  auto q = build_quiver(ex_tree());
  CHECK(q.vertices.size() == 4);
  CHECK(q.arrows.size() == 8);

  auto one = build_quiver(line_tree(1));
  REQUIRE(one.arrows.size() == 2);
  for (const Arrow& a : one.arrows) CHECK((a.source == EdgeId{1} && a.target == EdgeId{1}));

  auto two = build_quiver(line_tree(2));
  REQUIRE(two.arrows.size() == 4);
  std::vector<std::tuple<int, int, int>> got;
  for (const Arrow& a : two.arrows) got.emplace_back(a.at.value, a.source.value, a.target.value);
  CHECK(got == std::vector<std::tuple<int, int, int>>{{0, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 2, 2}});
}

TEST_CASE("special_cycle") {
  auto g = ex_tree();
  auto q = build_quiver(g);
  auto c = special_cycle(g, q, {3}, {2});
  REQUIRE(c.arrows.size() == 3);
  CHECK(q.arrows[c.arrows[0]].source == EdgeId{2});
  CHECK(q.arrows[c.arrows[0]].target == EdgeId{3});
  CHECK(q.arrows[c.arrows[1]].target == EdgeId{4});
  CHECK(q.arrows[c.arrows[2]].target == EdgeId{2});

  auto loop = special_cycle(g, q, {1}, {1});
  REQUIRE(loop.arrows.size() == 1);
  CHECK(q.arrows[loop.arrows[0]].source == q.arrows[loop.arrows[0]].target);

  CHECK_THROWS_AS(special_cycle(g, q, {4}, {1}), InputError);
}

TEST_CASE("relation_generators") {
  auto g = ex_tree();
  auto r = relation_generators(g, build_quiver(g));
  CHECK(r.zero_paths.size() == 8);
  CHECK(r.commutations.size() == 4);
  CHECK(r.special_cycles.size() == 8);

  auto one = line_tree(1);
  auto q1 = build_quiver(one);
  auto r1 = relation_generators(one, q1);
  REQUIRE(r1.zero_paths.size() == 2);
  const std::size_t la = q1.arrow_index({0}, {1}), lb = q1.arrow_index({1}, {1});
  CHECK(r1.zero_paths[0] == ArrowPath{la, lb});
  CHECK(r1.zero_paths[1] == ArrowPath{lb, la});
  REQUIRE(r1.commutations.size() == 1);
  CHECK(r1.commutations[0].first == ArrowPath{la});
  CHECK(r1.commutations[0].second == ArrowPath{lb});

  auto two = line_tree(2);
  CHECK(relation_generators(two, build_quiver(two)).special_cycles.size() == 4);
}

TEST_CASE("build_algebra dimensions and products") {
  auto one = BrauerAlgebra::build(line_tree(1));
  CHECK(one.dim() == 2);
  const std::size_t z = one.socle({1});
  CHECK(!one.multiply(z, z));
  CHECK(one.multiply(one.idempotent({1}), z) == z);

  CHECK(BrauerAlgebra::build(line_tree(2)).dim() == 6);
  auto alg = BrauerAlgebra::build(ex_tree());
  CHECK(alg.dim() == 16);

  // Two steps around the centre from 2 then one more reach the socle.
  const std::size_t p2 = alg.path({3}, {2}, 2);
  const std::size_t p1 = alg.path({3}, {4}, 1);
  CHECK(alg.multiply(p2, p1) == alg.socle({2}));
  CHECK(alg.multiply(p1, p2) == alg.socle({4}));
  CHECK(!alg.multiply(alg.path({3}, {4}, 2), alg.path({3}, {3}, 2)));
  CHECK(!alg.multiply(alg.path({2}, {1}, 1), alg.path({3}, {2}, 1)));
  CHECK(alg.path_between({3}, {2}, {4}) == p2);
  CHECK_THROWS_AS(alg.path_between({3}, {2}, {2}), InputError);
}

TEST_CASE("hom_basis") {
  auto alg = BrauerAlgebra::build(line_tree(2));
  CHECK(alg.hom_basis({1}, {1}).size() == 2);
  CHECK(alg.hom_basis({1}, {2}).size() == 1);
  CHECK(alg.hom_basis({2}, {1}).size() == 1);
  // Hom(P_1, P_2) is spanned by the arrow from 2 to 1.
  const BasisElement& b = alg.basis(alg.hom_indices({1}, {2}).front());
  CHECK(b.source == EdgeId{2});
  CHECK(b.target == EdgeId{1});

  for (auto& [name, g] : test::corpus(4)) {
    auto a = BrauerAlgebra::build(g);
    for (EdgeId e : g.edges()) {
      auto& idx = a.hom_indices(e, e);
      CHECK(std::find(idx.begin(), idx.end(), a.idempotent(e)) != idx.end());
      CHECK(std::find(idx.begin(), idx.end(), a.socle(e)) != idx.end());
    }
  }
}

TEST_CASE("arrow words reduce as in the presentation") {
  for (auto g : {line_tree(3), star_tree(3), ex_tree()}) {
    auto alg = BrauerAlgebra::build(g);
    for (std::size_t len = 1; len <= 5; ++len) {
      std::vector<ArrowPath> ws;
      ArrowPath cur;
      words(alg.quiver(), len, cur, ws);
      for (const auto& w : ws) {
        auto expect = reduce_word(alg, w);
        auto got = alg.evaluate(w);
        if (expect)
          CHECK(got == AlgebraElement::basis(*expect));
        else
          CHECK(got.is_zero());
      }
    }
  }
}

TEST_CASE("algebra invariants on the corpus") {
  std::mt19937_64 rng(5);
  for (auto& [name, g] : test::corpus(5, 3)) {
    CAPTURE(name);
    auto alg = BrauerAlgebra::build(g);
    CHECK(alg.dim() == dim_formula(g));
    CHECK(alg.quiver().arrows.size() == 2 * g.edge_count());

    std::size_t sum = 0;
    for (EdgeId e : g.edges()) sum += alg.projective_dim(e);
    CHECK(sum == alg.dim());

    const AlgebraElement one = alg.unit();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      const AlgebraElement x = AlgebraElement::basis(i);
      CHECK(alg.multiply(one, x) == x);
      CHECK(alg.multiply(x, one) == x);
    }

    std::uniform_int_distribution<std::size_t> pick(0, alg.dim() - 1);
    for (int k = 0; k < 1000; ++k) {
      auto x = AlgebraElement::basis(pick(rng)), y = AlgebraElement::basis(pick(rng)),
           z = AlgebraElement::basis(pick(rng));
      CHECK(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)));
    }

    auto rel = relation_generators(g, alg.quiver());
    for (const auto& p : rel.zero_paths) CHECK(alg.evaluate(p).is_zero());
    for (const auto& [c1, c2] : rel.commutations) {
      CHECK((alg.evaluate(c1) - alg.evaluate(c2)).is_zero());
      CHECK(!alg.evaluate(c1).is_zero());
    }
    for (const auto& c : rel.special_cycles) {
      auto x = alg.evaluate(c);
      REQUIRE(x.terms().size() == 1);
      CHECK(alg.basis(x.terms().begin()->first).kind == BasisKind::socle);
    }

    for (EdgeId e : g.edges())
      for (EdgeId f : g.edges())
        CHECK(alg.hom_indices(e, f).size() == alg.hom_indices(f, e).size());
  }
}
