#include "brauer/arcs.hpp"

#include <algorithm>
#include <string>

namespace brauer {

namespace {

SignedWalk walk_along(const PlaneTree& g, VertexId u, VertexId v, int first_sign) {
  if (u == v) throw InputError("arc endpoints must differ");
  if (first_sign != 1 && first_sign != -1) throw InputError("sign must be +1 or -1");
  if (v < u) std::swap(u, v);
  SignedWalk w;
  w.edges = g.path_between(u, v);
  w.vertices.push_back(u);
  int s = first_sign;
  for (EdgeId e : w.edges) {
    w.signs.push_back(s);
    w.vertices.push_back(g.other_end(e, w.vertices.back()));
    s = -s;
  }
  return w;
}

}  // namespace

Arc make_arc(const PlaneTree& g, SignedWalk w) {
  Arc a;
  a.g_.assign(g.edge_count(), 0);
  for (std::size_t i = 0; i < w.edges.size(); ++i) a.g_[g.edge_pos(w.edges[i])] = w.signs[i];
  a.walk_ = std::move(w);
  return a;
}

bool Arc::contains(EdgeId e) const {
  return std::find(walk_.edges.begin(), walk_.edges.end(), e) != walk_.edges.end();
}

std::vector<Arc> all_arcs(const PlaneTree& g) {
  std::vector<Arc> out;
  auto vs = g.vertices();
  out.reserve(vs.size() * (vs.size() - 1));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (int s : {1, -1}) out.push_back(arc_from_pair(g, vs[i], vs[j], s));
  std::sort(out.begin(), out.end());
  return out;
}

Arc arc_from_pair(const PlaneTree& g, VertexId u, VertexId v, int first_sign) {
  if (!g.contains(u) || !g.contains(v)) throw InputError("arc endpoint not in tree");
  return make_arc(g, walk_along(g, u, v, first_sign));
}

Arc arc_from_gvector(const PlaneTree& g, const GVector& gv) {
  if (gv.size() != g.edge_count()) throw InputError("g-vector has wrong length");
  std::vector<EdgeId> support;
  for (std::size_t i = 0; i < gv.size(); ++i) {
    if (gv[i] < -1 || gv[i] > 1) throw InputError("arc g-vector entries must be in {-1,0,1}");
    if (gv[i] != 0) support.push_back(g.edges()[i]);
  }
  if (support.empty()) throw InputError("arc g-vector has empty support");

  // The support is a path iff exactly two vertices have odd support degree
  // and the path between them uses every support edge.
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : support) {
    auto [a, b] = g.ends(e);
    ++deg[g.vertex_pos(a)];
    ++deg[g.vertex_pos(b)];
  }
  std::vector<VertexId> odd;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] % 2 == 1) odd.push_back(g.vertices()[i]);
  if (odd.size() != 2) throw InputError("arc g-vector support is not a path");
  auto path = g.path_between(odd[0], odd[1]);
  if (path.size() != support.size()) throw InputError("arc g-vector support is not a path");
  for (EdgeId e : path)
    if (gv[g.edge_pos(e)] == 0) throw InputError("arc g-vector support is not a path");
  for (std::size_t i = 1; i < path.size(); ++i)
    if (gv[g.edge_pos(path[i])] == gv[g.edge_pos(path[i - 1])])
      throw InputError("arc g-vector signs do not alternate");
  return arc_from_pair(g, odd[0], odd[1], gv[g.edge_pos(path.front())]);
}

SignedWalk signed_walk(const Arc& a) { return a.walk(); }

std::optional<Arc> restrict_arc(const PlaneTree& whole, const Arc& arc, const PlaneTree& sub) {
  for (EdgeId e : sub.edges())
    if (!whole.contains(e) || whole.ends(e) != sub.ends(e))
      throw InputError("restriction target is not a subtree");
  const SignedWalk& w = arc.walk();
  std::size_t lo = w.edges.size(), hi = 0;
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    if (sub.contains(w.edges[i])) {
      lo = std::min(lo, i);
      hi = i + 1;
    }
  if (lo >= hi) return std::nullopt;
  for (std::size_t i = lo; i < hi; ++i)
    if (!sub.contains(w.edges[i])) throw InputError("arc meets the subtree in a disconnected set");
  const VertexId u = w.vertices[lo], v = w.vertices[hi];
  return arc_from_pair(sub, u, v, u < v ? w.signs[lo] : w.signs[hi - 1]);
}

}  // namespace brauer
