#include "brauer/algebra.hpp"

#include <algorithm>

namespace brauer {

std::size_t Quiver::arrow_index(VertexId at, EdgeId source) const {
  auto it = std::lower_bound(arrows.begin(), arrows.end(), std::pair{at, source},
                             [](const Arrow& a, const std::pair<VertexId, EdgeId>& key) {
                               return std::pair{a.at, a.source} < key;
                             });
  if (it == arrows.end() || it->at != at || it->source != source)
    throw InputError("no arrow from edge " + std::to_string(source.value) +
                     " at vertex " + std::to_string(at.value));
  return static_cast<std::size_t>(it - arrows.begin());
}

Quiver build_quiver(const PlaneTree& g) {
  Quiver q;
  q.vertices.assign(g.edges().begin(), g.edges().end());
  for (VertexId v : g.vertices()) {
    std::vector<EdgeId> rot = g.rotation(v);
    std::sort(rot.begin(), rot.end());
    for (EdgeId e : rot) q.arrows.push_back(Arrow{e, g.next_at(v, e), v});
  }
  return q;
}

SpecialCycle special_cycle(const PlaneTree& g, const Quiver& q, VertexId v, EdgeId e) {
  if (!g.is_endpoint(v, e))
    throw InputError("vertex " + std::to_string(v.value) + " is not an endpoint of edge " +
                     std::to_string(e.value));
  SpecialCycle c{v, e, {}};
  EdgeId x = e;
  for (std::size_t i = 0; i < g.degree(v); ++i) {
    c.arrows.push_back(q.arrow_index(v, x));
    x = g.next_at(v, x);
  }
  return c;
}

RelationGenerators relation_generators(const PlaneTree& g, const Quiver& q) {
  RelationGenerators r;
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.ends(e);
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      r.zero_paths.push_back({q.arrow_index(u, g.prev_at(u, e)), q.arrow_index(v, e)});
    }
    r.commutations.emplace_back(special_cycle(g, q, a, e).arrows,
                                special_cycle(g, q, b, e).arrows);
  }
  for (VertexId v : g.vertices()) {
    std::vector<EdgeId> rot = g.rotation(v);
    std::sort(rot.begin(), rot.end());
    for (EdgeId e : rot) r.special_cycles.push_back(special_cycle(g, q, v, e).arrows);
  }
  return r;
}

AlgebraElement AlgebraElement::basis(std::size_t index, Rational coeff) {
  AlgebraElement x;
  x.add(index, coeff);
  return x;
}

Rational AlgebraElement::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement& AlgebraElement::add(std::size_t index, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [i, c] : other.terms_) add(i, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [i, c] : other.terms_) add(i, -c);
  return *this;
}

BrauerAlgebra BrauerAlgebra::build(const PlaneTree& g) {
  BrauerAlgebra alg(g);
  alg.quiver_ = build_quiver(g);
  const std::size_t n = g.edge_count();
  alg.idempotent_index_.resize(n);
  alg.socle_index_.resize(n);

  // eps_e, then the proper sub-paths leaving e around each endpoint, then z_e.
  for (EdgeId e : g.edges()) {
    const std::size_t pe = g.edge_pos(e);
    alg.idempotent_index_[pe] = alg.basis_.size();
    alg.basis_.push_back({BasisKind::idempotent, e, e});
    auto [a, b] = g.ends(e);
    for (VertexId v : {a, b}) {
      EdgeId target = e;
      for (std::size_t len = 1; len < g.degree(v); ++len) {
        target = g.next_at(v, target);
        alg.path_index_[{v.value, e.value, len}] = alg.basis_.size();
        alg.basis_.push_back({BasisKind::path, e, target, v, static_cast<std::uint32_t>(len)});
      }
    }
    alg.socle_index_[pe] = alg.basis_.size();
    alg.basis_.push_back({BasisKind::socle, e, e});
  }

  const std::size_t d = alg.basis_.size();
  alg.table_.assign(d * d, -1);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      if (auto r = alg.compute_product(x, y)) alg.table_[x * d + y] = static_cast<std::int32_t>(*r);

  alg.hom_.assign(n * n, {});
  for (std::size_t i = 0; i < d; ++i) {
    const auto& be = alg.basis_[i];
    // Hom(P_target, P_source) contains left multiplication by this element.
    alg.hom_[g.edge_pos(be.target) * n + g.edge_pos(be.source)].push_back(i);
  }
  return alg;
}

std::optional<std::size_t> BrauerAlgebra::compute_product(std::size_t x, std::size_t y) const {
  const BasisElement& p = basis_[x];
  const BasisElement& q = basis_[y];
  if (p.target != q.source) return std::nullopt;
  if (p.kind == BasisKind::idempotent) return y;
  if (q.kind == BasisKind::idempotent) return x;
  if (p.kind == BasisKind::socle || q.kind == BasisKind::socle) return std::nullopt;
  // Turning from one special cycle into another passes through a zero
  // relation; running past a full cycle does as well.
  if (p.at != q.at) return std::nullopt;
  const std::size_t total = p.length + q.length;
  const std::size_t deg = tree_.degree(p.at);
  if (total < deg) return path_index_.at({p.at.value, p.source.value, total});
  if (total == deg) return socle(p.source);
  return std::nullopt;
}

std::size_t BrauerAlgebra::idempotent(EdgeId e) const {
  return idempotent_index_[tree_.edge_pos(e)];
}

std::size_t BrauerAlgebra::socle(EdgeId e) const { return socle_index_[tree_.edge_pos(e)]; }

std::size_t BrauerAlgebra::path(VertexId v, EdgeId from, std::size_t length) const {
  if (!tree_.is_endpoint(v, from))
    throw InputError("path start is not incident to its vertex");
  const std::size_t deg = tree_.degree(v);
  if (length == 0 || length > deg) throw InputError("path length out of range");
  if (length == deg) return socle(from);
  return path_index_.at({v.value, from.value, length});
}

std::size_t BrauerAlgebra::path_between(VertexId v, EdgeId from, EdgeId to) const {
  if (from == to) throw InputError("path_between needs distinct edges");
  return path(v, from, tree_.steps_at(v, from, to));
}

std::size_t BrauerAlgebra::arrow_element(std::size_t arrow) const {
  const Arrow& a = quiver_.arrows.at(arrow);
  return path(a.at, a.source, 1);
}

AlgebraElement BrauerAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      if (auto r = multiply(i, j)) out.add(*r, a * b);
  return out;
}

AlgebraElement BrauerAlgebra::evaluate(const ArrowPath& p) const {
  if (p.empty()) throw InputError("empty arrow path");
  AlgebraElement acc = AlgebraElement::basis(arrow_element(p.front()));
  for (std::size_t k = 1; k < p.size(); ++k)
    acc = multiply(acc, AlgebraElement::basis(arrow_element(p[k])));
  return acc;
}

AlgebraElement BrauerAlgebra::unit() const {
  AlgebraElement one;
  for (std::size_t i : idempotent_index_) one.add(i, 1);
  return one;
}

const std::vector<std::size_t>& BrauerAlgebra::hom_indices(EdgeId e, EdgeId f) const {
  const std::size_t n = tree_.edge_count();
  return hom_[tree_.edge_pos(e) * n + tree_.edge_pos(f)];
}

std::vector<AlgebraElement> BrauerAlgebra::hom_basis(EdgeId e, EdgeId f) const {
  std::vector<AlgebraElement> out;
  for (std::size_t i : hom_indices(e, f)) out.push_back(AlgebraElement::basis(i));
  return out;
}

std::size_t BrauerAlgebra::projective_dim(EdgeId e) const {
  return static_cast<std::size_t>(std::count_if(
      basis_.begin(), basis_.end(), [&](const BasisElement& b) { return b.source == e; }));
}

}  // namespace brauer
