#include "brauer/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace brauer {

namespace {

std::string edge_name(EdgeId e) { return std::to_string(e.value); }
std::string vertex_name(VertexId v) { return std::to_string(v.value); }

void normalize_rotation(std::vector<EdgeId>& rot) {
  if (rot.empty()) return;
  auto smallest = std::min_element(rot.begin(), rot.end());
  std::rotate(rot.begin(), smallest, rot.end());
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

PlaneTree PlaneTree::create(std::vector<VertexId> vertices,
                            std::map<EdgeId, Ends> ends,
                            std::map<VertexId, std::vector<EdgeId>> rotations) {
  if (ends.empty()) throw InputError("tree has no edges");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("duplicate vertex id");

  PlaneTree t;
  t.vertices_ = std::move(vertices);
  auto vpos = [&](VertexId v) -> std::size_t {
    auto it = std::lower_bound(t.vertices_.begin(), t.vertices_.end(), v);
    if (it == t.vertices_.end() || *it != v)
      throw InputError("edge endpoint " + vertex_name(v) + " is not a listed vertex");
    return static_cast<std::size_t>(it - t.vertices_.begin());
  };

  UnionFind uf(t.vertices_.size());
  for (auto& [e, uv] : ends) {
    if (uv.first == uv.second) throw InputError("edge " + edge_name(e) + " is a loop");
    if (uv.second < uv.first) std::swap(uv.first, uv.second);
    if (!uf.unite(vpos(uv.first), vpos(uv.second)))
      throw InputError("cycle present (through edge " + edge_name(e) + ")");
    t.edges_.push_back(e);
    t.ends_.push_back(uv);
  }
  if (t.edges_.size() + 1 != t.vertices_.size())
    throw InputError("graph is disconnected");

  t.rotations_.assign(t.vertices_.size(), {});
  for (std::size_t i = 0; i < t.edges_.size(); ++i) {
    t.rotations_[vpos(t.ends_[i].first)].push_back(t.edges_[i]);
    t.rotations_[vpos(t.ends_[i].second)].push_back(t.edges_[i]);
  }
  for (auto& [v, rot] : rotations) {
    if (!std::binary_search(t.vertices_.begin(), t.vertices_.end(), v))
      throw InputError("rotation given for unknown vertex " + vertex_name(v));
  }
  for (std::size_t i = 0; i < t.vertices_.size(); ++i) {
    auto it = rotations.find(t.vertices_[i]);
    if (it == rotations.end())
      throw InputError("missing rotation at vertex " + vertex_name(t.vertices_[i]));
    std::vector<EdgeId> given = it->second;
    std::vector<EdgeId> sorted_given = given;
    std::sort(sorted_given.begin(), sorted_given.end());
    std::vector<EdgeId> incident = t.rotations_[i];
    std::sort(incident.begin(), incident.end());
    if (sorted_given != incident)
      throw InputError("rotation at vertex " + vertex_name(t.vertices_[i]) +
                       " is not a permutation of its incident edges");
    normalize_rotation(given);
    t.rotations_[i] = std::move(given);
  }
  return t;
}

bool PlaneTree::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool PlaneTree::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t PlaneTree::edge_pos(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw InputError("unknown edge " + edge_name(e));
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t PlaneTree::vertex_pos(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw InputError("unknown vertex " + vertex_name(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

PlaneTree::Ends PlaneTree::ends(EdgeId e) const { return ends_[edge_pos(e)]; }

VertexId PlaneTree::other_end(EdgeId e, VertexId v) const {
  auto [a, b] = ends(e);
  if (v == a) return b;
  if (v == b) return a;
  throw InputError("vertex " + vertex_name(v) + " is not an endpoint of edge " +
                   edge_name(e));
}

bool PlaneTree::is_endpoint(VertexId v, EdgeId e) const {
  auto [a, b] = ends(e);
  return v == a || v == b;
}

const std::vector<EdgeId>& PlaneTree::rotation(VertexId v) const {
  return rotations_[vertex_pos(v)];
}

EdgeId PlaneTree::next_at(VertexId v, EdgeId e) const {
  const auto& rot = rotation(v);
  auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end())
    throw InputError("edge " + edge_name(e) + " is not incident to vertex " +
                     vertex_name(v));
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

EdgeId PlaneTree::prev_at(VertexId v, EdgeId e) const {
  const auto& rot = rotation(v);
  auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end())
    throw InputError("edge " + edge_name(e) + " is not incident to vertex " +
                     vertex_name(v));
  return it == rot.begin() ? rot.back() : *(it - 1);
}

std::size_t PlaneTree::steps_at(VertexId v, EdgeId from, EdgeId to) const {
  const auto& rot = rotation(v);
  auto i = std::find(rot.begin(), rot.end(), from);
  auto j = std::find(rot.begin(), rot.end(), to);
  if (i == rot.end() || j == rot.end())
    throw InputError("edges not incident to vertex " + vertex_name(v));
  auto m = static_cast<std::ptrdiff_t>(rot.size());
  return static_cast<std::size_t>(((j - i) % m + m) % m);
}

bool PlaneTree::is_external(EdgeId e) const { return external_vertex(e).has_value(); }

std::optional<VertexId> PlaneTree::external_vertex(EdgeId e) const {
  auto [a, b] = ends(e);
  if (degree(a) == 1) return a;
  if (degree(b) == 1) return b;
  return std::nullopt;
}

std::optional<VertexId> PlaneTree::shared_vertex(EdgeId e, EdgeId f) const {
  if (e == f) return std::nullopt;
  auto [a, b] = ends(e);
  if (is_endpoint(a, f)) return a;
  if (is_endpoint(b, f)) return b;
  return std::nullopt;
}

std::vector<EdgeId> PlaneTree::path_between(VertexId u, VertexId v) const {
  const std::size_t src = vertex_pos(u);
  const std::size_t dst = vertex_pos(v);
  std::vector<std::ptrdiff_t> via(vertices_.size(), -1);  // edge_pos used to reach
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> queue{src};
  seen[src] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t x = queue[head];
    for (EdgeId e : rotations_[x]) {
      std::size_t y = vertex_pos(other_end(e, vertices_[x]));
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = static_cast<std::ptrdiff_t>(edge_pos(e));
      queue.push_back(y);
    }
  }
  std::vector<EdgeId> path;
  for (std::size_t x = dst; x != src;) {
    EdgeId e = edges_[static_cast<std::size_t>(via[x])];
    path.push_back(e);
    x = vertex_pos(other_end(e, vertices_[x]));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

PlaneTree induced_subtree(const PlaneTree& g, std::span<const EdgeId> keep) {
  std::set<EdgeId> kept(keep.begin(), keep.end());
  std::map<EdgeId, PlaneTree::Ends> ends;
  std::set<VertexId> verts;
  for (EdgeId e : kept) {
    auto uv = g.ends(e);
    ends[e] = uv;
    verts.insert(uv.first);
    verts.insert(uv.second);
  }
  std::map<VertexId, std::vector<EdgeId>> rotations;
  for (VertexId v : verts) {
    auto& rot = rotations[v];
    for (EdgeId e : g.rotation(v))
      if (kept.count(e)) rot.push_back(e);
  }
  return PlaneTree::create({verts.begin(), verts.end()}, std::move(ends),
                           std::move(rotations));
}

EdgeSplit split_at_edge(const PlaneTree& g, EdgeId e, std::optional<VertexId> near) {
  auto [a, b] = g.ends(e);
  VertexId anchor = near.value_or(a);
  if (anchor != a && anchor != b)
    throw InputError("split vertex is not an endpoint of the split edge");
  VertexId far = anchor == a ? b : a;

  // Vertices reachable from `anchor` without using `e`.
  std::set<VertexId> side{anchor};
  std::vector<VertexId> stack{anchor};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId d : g.rotation(x)) {
      if (d == e) continue;
      VertexId y = g.other_end(d, x);
      if (side.insert(y).second) stack.push_back(y);
    }
  }
  std::vector<EdgeId> first{e};
  std::vector<EdgeId> second{e};
  for (EdgeId d : g.edges()) {
    if (d == e) continue;
    (side.count(g.ends(d).first) ? first : second).push_back(d);
  }
  return EdgeSplit{e, induced_subtree(g, first), induced_subtree(g, second), far, anchor};
}

namespace {

std::map<VertexId, std::vector<EdgeId>> rotation_map(const PlaneTree& g) {
  std::map<VertexId, std::vector<EdgeId>> out;
  for (VertexId v : g.vertices()) out[v] = g.rotation(v);
  return out;
}

std::map<EdgeId, PlaneTree::Ends> ends_map(const PlaneTree& g) {
  std::map<EdgeId, PlaneTree::Ends> out;
  for (EdgeId e : g.edges()) out[e] = g.ends(e);
  return out;
}

void erase_edge(std::vector<EdgeId>& rot, EdgeId e) {
  rot.erase(std::remove(rot.begin(), rot.end(), e), rot.end());
}

void insert_after(std::vector<EdgeId>& rot, EdgeId anchor, EdgeId e) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, e);
}

}  // namespace

PlaneTree flip(const PlaneTree& g, EdgeId e) {
  if (g.edge_count() < 2) throw InputError("flip needs at least two edges");
  auto ends = ends_map(g);
  auto rot = rotation_map(g);
  if (auto leaf = g.external_vertex(e)) {
    VertexId a = *leaf;
    VertexId b = g.other_end(e, a);
    EdgeId f = g.next_at(b, e);
    VertexId c = g.other_end(f, b);
    ends[e] = {a, c};
    erase_edge(rot[b], e);
    insert_after(rot[c], f, e);
  } else {
    auto [a, b] = g.ends(e);
    EdgeId fa = g.next_at(a, e);
    EdgeId fb = g.next_at(b, e);
    VertexId ca = g.other_end(fa, a);
    VertexId cb = g.other_end(fb, b);
    ends[e] = {ca, cb};
    erase_edge(rot[a], e);
    erase_edge(rot[b], e);
    insert_after(rot[ca], fa, e);
    insert_after(rot[cb], fb, e);
  }
  std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  return PlaneTree::create(std::move(verts), std::move(ends), std::move(rot));
}

PlaneTree opposite(const PlaneTree& g) {
  auto rot = rotation_map(g);
  for (auto& [v, r] : rot) std::reverse(r.begin(), r.end());
  std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  return PlaneTree::create(std::move(verts), ends_map(g), std::move(rot));
}

PlaneTree line_tree(std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one edge");
  std::vector<VertexId> verts;
  std::map<EdgeId, PlaneTree::Ends> ends;
  std::map<VertexId, std::vector<EdgeId>> rot;
  for (int i = 0; i <= static_cast<int>(n); ++i) verts.push_back({i});
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    ends[{i}] = {{i - 1}, {i}};
    rot[{i - 1}].push_back({i});
    rot[{i}].push_back({i});
  }
  return PlaneTree::create(std::move(verts), std::move(ends), std::move(rot));
}

PlaneTree star_tree(std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one edge");
  std::vector<VertexId> verts{{0}};
  std::map<EdgeId, PlaneTree::Ends> ends;
  std::map<VertexId, std::vector<EdgeId>> rot;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    verts.push_back({i});
    ends[{i}] = {{0}, {i}};
    rot[{0}].push_back({i});
    rot[{i}] = {{i}};
  }
  return PlaneTree::create(std::move(verts), std::move(ends), std::move(rot));
}

namespace {

// Unbiased draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

PlaneTree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("a tree needs at least one edge");
  std::mt19937_64 rng(seed);
  const std::size_t nv = n + 1;
  std::vector<std::size_t> code(nv - 2);
  for (auto& c : code) c = draw_below(rng, nv);

  std::vector<std::size_t> degree(nv, 1);
  for (auto c : code) ++degree[c];
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    pairs.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < nv; ++v)
    if (degree[v] == 1) rest.push_back(v);
  pairs.emplace_back(rest[0], rest[1]);

  std::vector<VertexId> verts;
  for (std::size_t v = 0; v < nv; ++v) verts.push_back({static_cast<int>(v)});
  std::map<EdgeId, PlaneTree::Ends> ends;
  std::map<VertexId, std::vector<EdgeId>> rot;
  int id = 1;
  for (auto [u, v] : pairs) {
    EdgeId e{id++};
    VertexId a{static_cast<int>(u)}, b{static_cast<int>(v)};
    ends[e] = {a, b};
    rot[a].push_back(e);
    rot[b].push_back(e);
  }
  for (auto& [v, r] : rot) {
    for (std::size_t i = r.size(); i > 1; --i)
      std::swap(r[i - 1], r[draw_below(rng, i)]);
  }
  return PlaneTree::create(std::move(verts), std::move(ends), std::move(rot));
}

namespace {

// Children of v, counterclockwise, starting right after `parent` (or at
// `start` for the root).
std::vector<EdgeId> child_edges(const PlaneTree& g, VertexId v, EdgeId first,
                                bool is_root) {
  std::vector<EdgeId> out;
  const std::size_t deg = g.degree(v);
  EdgeId x = is_root ? first : g.next_at(v, first);
  for (std::size_t i = 0; i < (is_root ? deg : deg - 1); ++i) {
    out.push_back(x);
    x = g.next_at(v, x);
  }
  return out;
}

void encode(const PlaneTree& g, VertexId v, EdgeId first, bool is_root, std::string& out) {
  for (EdgeId c : child_edges(g, v, first, is_root)) {
    out.push_back('(');
    encode(g, g.other_end(c, v), c, false, out);
    out.push_back(')');
  }
}

std::pair<VertexId, EdgeId> canonical_root(const PlaneTree& g, std::string* code) {
  std::string best;
  std::pair<VertexId, EdgeId> root{};
  bool have = false;
  for (VertexId v : g.vertices()) {
    for (EdgeId e : g.rotation(v)) {
      std::string s;
      encode(g, v, e, true, s);
      if (!have || s < best) {
        best = std::move(s);
        root = {v, e};
        have = true;
      }
    }
  }
  if (code) *code = std::move(best);
  return root;
}

}  // namespace

std::string canonical_code(const PlaneTree& g) {
  std::string code;
  canonical_root(g, &code);
  return code;
}

PlaneTree canonical_relabel(const PlaneTree& g) {
  auto [root, start] = canonical_root(g, nullptr);
  std::map<VertexId, VertexId> vmap;
  std::map<EdgeId, EdgeId> emap;
  int next_vertex = 0;
  int next_edge = 1;
  struct Frame {
    VertexId v;
    EdgeId first;
    bool is_root;
  };
  // Recursive preorder; depth is at most n.
  auto visit = [&](auto&& self, const Frame& fr) -> void {
    vmap[fr.v] = VertexId{next_vertex++};
    for (EdgeId c : child_edges(g, fr.v, fr.first, fr.is_root)) {
      emap[c] = EdgeId{next_edge++};
      self(self, Frame{g.other_end(c, fr.v), c, false});
    }
  };
  visit(visit, Frame{root, start, true});

  std::vector<VertexId> verts;
  std::map<EdgeId, PlaneTree::Ends> ends;
  std::map<VertexId, std::vector<EdgeId>> rot;
  for (VertexId v : g.vertices()) {
    verts.push_back(vmap[v]);
    auto& r = rot[vmap[v]];
    for (EdgeId e : g.rotation(v)) r.push_back(emap[e]);
  }
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.ends(e);
    ends[emap[e]] = {vmap[a], vmap[b]};
  }
  return PlaneTree::create(std::move(verts), std::move(ends), std::move(rot));
}

std::vector<PlaneTree> all_plane_trees(std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one edge");
  std::map<std::string, PlaneTree> level;
  PlaneTree seed = canonical_relabel(line_tree(1));
  level.emplace(canonical_code(seed), seed);
  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::string, PlaneTree> next;
    for (const auto& [code, g] : level) {
      const VertexId fresh_v{static_cast<int>(g.vertex_count())};
      const EdgeId fresh_e{static_cast<int>(k + 1)};
      for (VertexId v : g.vertices()) {
        for (EdgeId anchor : g.rotation(v)) {
          std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
          verts.push_back(fresh_v);
          std::map<EdgeId, PlaneTree::Ends> ends;
          std::map<VertexId, std::vector<EdgeId>> rot;
          for (EdgeId e : g.edges()) ends[e] = g.ends(e);
          for (VertexId w : g.vertices()) rot[w] = g.rotation(w);
          ends[fresh_e] = {v, fresh_v};
          insert_after(rot[v], anchor, fresh_e);
          rot[fresh_v] = {fresh_e};
          PlaneTree h = canonical_relabel(
              PlaneTree::create(std::move(verts), std::move(ends), std::move(rot)));
          next.try_emplace(canonical_code(h), std::move(h));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<PlaneTree> out;
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace brauer
