#include "brauer/collections.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace brauer {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Clears bits 0..i.
void clear_through(Bits& b, std::size_t i) {
  for (std::size_t w = 0; w < i / 64; ++w) b[w] = 0;
  const std::size_t r = i % 64;
  b[i / 64] &= r == 63 ? 0 : ~std::uint64_t{0} << (r + 1);
}

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

Bits intersect(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

bool empty(const Bits& b) {
  for (auto w : b)
    if (w) return false;
  return true;
}

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w)
    for (std::uint64_t x = b[w]; x; x &= x - 1)
      f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
}

struct CliqueSearch {
  std::size_t target;
  const std::vector<Bits>& adj;
  std::vector<std::size_t> current;
  std::vector<std::vector<std::size_t>> found;

  // Candidates are restricted to indices above the last chosen one, so each
  // clique is produced once, in lexicographic order of its index list.
  void run(const Bits& cand) {
    if (current.size() == target) {
      found.push_back(current);
      return;
    }
    if (current.size() + popcount(cand) < target) return;
    for_each_bit(cand, [&](std::size_t v) {
      Bits next = intersect(cand, adj[v]);
      clear_through(next, v);
      if (current.size() + 1 + popcount(next) < target) return;
      current.push_back(v);
      run(next);
      current.pop_back();
    });
  }
};

}  // namespace

CollectionSet CollectionSet::enumerate(const PlaneTree& g, const EnumerateOptions& options) {
  if (g.edge_count() > options.max_edges)
    throw InputError("tree has " + std::to_string(g.edge_count()) + " edges, above the bound " +
                     std::to_string(options.max_edges));
  BrauerAlgebra alg = BrauerAlgebra::build(g);
  CompatibilityMatrix cm = CompatibilityMatrix::build(alg, options.field);
  CollectionSet set(std::move(alg), std::move(cm));

  const std::size_t m = set.compat_.size();
  for (std::size_t i = 0; i < m; ++i) set.arc_by_gvec_.emplace(set.arc(i).g(), i);

  std::vector<Bits> adj(m, make_bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && set.compat_(i, j)) set_bit(adj[i], j);
  Bits all = make_bits(m);
  for (std::size_t i = 0; i < m; ++i)
    if (set.compat_(i, i)) set_bit(all, i);

  CliqueSearch search{g.edge_count(), adj, {}, {}};
  search.run(all);

  set.collections_.reserve(search.found.size());
  for (auto& c : search.found) {
    CompleteCollection x;
    x.gvec.assign(g.edge_count(), 0);
    for (std::size_t i : c)
      for (std::size_t k = 0; k < x.gvec.size(); ++k) x.gvec[k] += set.arc(i).g()[k];
    x.arcs = std::move(c);
    set.collections_.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < set.collections_.size(); ++i)
    set.by_gvec_.emplace(set.collections_[i].gvec, i);
  return set;
}

const CompleteCollection* CollectionSet::lookup(const GVector& gv) const {
  auto it = by_gvec_.find(gv);
  return it == by_gvec_.end() ? nullptr : &collections_[it->second];
}

std::optional<std::size_t> CollectionSet::index_of(const GVector& gv) const {
  auto it = by_gvec_.find(gv);
  if (it == by_gvec_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CollectionSet::arc_index(const GVector& gv) const {
  auto it = arc_by_gvec_.find(gv);
  if (it == arc_by_gvec_.end()) return std::nullopt;
  return it->second;
}

std::map<int, std::size_t> CollectionSet::counts_by_gvector(EdgeId e) const {
  const std::size_t k = tree().edge_pos(e);
  std::map<int, std::size_t> out;
  for (const auto& x : collections_) ++out[x.gvec[k]];
  return out;
}

std::map<std::pair<int, int>, std::size_t> CollectionSet::count_by_edge_pair(EdgeId e,
                                                                             EdgeId f) const {
  const std::size_t ke = tree().edge_pos(e), kf = tree().edge_pos(f);
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& x : collections_) ++out[{x.gvec[ke], x.gvec[kf]}];
  return out;
}

std::vector<std::size_t> CollectionSet::with_value(EdgeId e, int j) const {
  const std::size_t k = tree().edge_pos(e);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < collections_.size(); ++i)
    if (collections_[i].gvec[k] == j) out.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> CollectionSet::maximal_compatible_sets() const {
  const std::size_t m = compat_.size();
  std::vector<Bits> adj(m, make_bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && compat_(i, j)) set_bit(adj[i], j);

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r;
  auto bk = [&](auto&& self, Bits p, Bits x) -> void {
    if (empty(p) && empty(x)) {
      out.push_back(r);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      std::size_t c = popcount(intersect(p, adj[u]));
      if (!have || c > best) pivot = u, best = c, have = true;
    };
    for_each_bit(p, consider);
    for_each_bit(x, consider);
    Bits todo = p;
    for (std::size_t w = 0; w < todo.size(); ++w) todo[w] &= ~adj[pivot][w];
    for_each_bit(todo, [&](std::size_t v) {
      r.push_back(v);
      self(self, intersect(p, adj[v]), intersect(x, adj[v]));
      r.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      set_bit(x, v);
    });
  };
  Bits all = make_bits(m);
  for (std::size_t i = 0; i < m; ++i)
    if (compat_(i, i)) set_bit(all, i);
  bk(bk, all, make_bits(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompleteCollection> enumerate_complete(const PlaneTree& g,
                                                   const EnumerateOptions& options) {
  return CollectionSet::enumerate(g, options).collections();
}

std::optional<CompleteCollection> lookup_by_gvector(const CollectionSet& set, const GVector& gv) {
  if (const CompleteCollection* x = set.lookup(gv)) return *x;
  return std::nullopt;
}

}  // namespace brauer
