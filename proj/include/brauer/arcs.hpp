#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "brauer/common.hpp"
#include "brauer/ribbon.hpp"

namespace brauer {

/// Walk of distinct edges with alternating signs.  `vertices` has one more
/// entry than `edges`: edge i joins vertices[i] and vertices[i+1].
struct SignedWalk {
  std::vector<EdgeId> edges;
  std::vector<int> signs;
  std::vector<VertexId> vertices;
};

/// A G-arc, stored by its g-vector (indexed by sorted edge id).  The walk is
/// kept alongside and always runs from the smaller endpoint vertex.
class Arc {
 public:
  const GVector& g() const { return g_; }
  const SignedWalk& walk() const { return walk_; }
  std::size_t length() const { return walk_.edges.size(); }
  /// Sign on e, or 0 when the walk avoids e.
  int sign(const PlaneTree& g, EdgeId e) const { return g_[g.edge_pos(e)]; }
  bool contains(EdgeId e) const;

  friend bool operator==(const Arc& a, const Arc& b) { return a.g_ == b.g_; }
  friend auto operator<=>(const Arc& a, const Arc& b) { return a.g_ <=> b.g_; }

 private:
  friend Arc make_arc(const PlaneTree&, SignedWalk);
  GVector g_;
  SignedWalk walk_;
};

/// Every arc of g, sorted by g-vector.  There are n(n+1) of them.
std::vector<Arc> all_arcs(const PlaneTree& g);

/// The arc along the u-v path whose first edge, seen from min(u, v), carries
/// `first_sign`.
Arc arc_from_pair(const PlaneTree& g, VertexId u, VertexId v, int first_sign);

inline const GVector& g_vector(const Arc& a) { return a.g(); }

/// Inverse of g_vector.  Throws InputError unless gv has entries in
/// {-1, 0, 1} and a nonempty path support with alternating signs.
Arc arc_from_gvector(const PlaneTree& g, const GVector& gv);

SignedWalk signed_walk(const Arc& a);

/// The part of the arc lying in `sub`, which must be a subtree of `whole`
/// with the same edge ends.  None when the walk misses `sub` entirely.
std::optional<Arc> restrict_arc(const PlaneTree& whole, const Arc& arc, const PlaneTree& sub);

}  // namespace brauer
