#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brauer/common.hpp"

namespace brauer {

/// A tree together with a counterclockwise cyclic order of the edges at
/// every vertex (a genus-zero ribbon graph).
///
/// Values are immutable after construction.  Rotation lists are stored
/// rotated so that the smallest edge id comes first, which makes equality
/// structural.
class PlaneTree {
 public:
  using Ends = std::pair<VertexId, VertexId>;

  /// Validates and builds a tree.  Throws InputError when the edges contain
  /// a loop or a cycle, the graph is disconnected, or a rotation list is not
  /// a permutation of the incident edges.
  static PlaneTree create(std::vector<VertexId> vertices,
                          std::map<EdgeId, Ends> ends,
                          std::map<VertexId, std::vector<EdgeId>> rotations);

  std::size_t edge_count() const { return edges_.size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const EdgeId> edges() const { return edges_; }

  bool contains(EdgeId e) const;
  bool contains(VertexId v) const;

  /// Position of `e` in the sorted edge list; the g-vector coordinate of `e`.
  std::size_t edge_pos(EdgeId e) const;
  std::size_t vertex_pos(VertexId v) const;

  /// Endpoints, smaller id first.
  Ends ends(EdgeId e) const;
  VertexId other_end(EdgeId e, VertexId v) const;
  bool is_endpoint(VertexId v, EdgeId e) const;

  const std::vector<EdgeId>& rotation(VertexId v) const;
  std::size_t degree(VertexId v) const { return rotation(v).size(); }
  /// sigma_v(e): the edge after `e` counterclockwise around `v`.
  EdgeId next_at(VertexId v, EdgeId e) const;
  /// sigma_v^{-1}(e).
  EdgeId prev_at(VertexId v, EdgeId e) const;
  /// Number of counterclockwise steps from `from` to `to` around `v`.
  std::size_t steps_at(VertexId v, EdgeId from, EdgeId to) const;

  bool is_external(EdgeId e) const;
  /// The degree-one endpoint of an external edge (the smaller one when both
  /// endpoints have degree one).
  std::optional<VertexId> external_vertex(EdgeId e) const;
  /// The vertex shared by two distinct edges, if any.
  std::optional<VertexId> shared_vertex(EdgeId e, EdgeId f) const;

  /// Edges of the unique path from u to v, in order of traversal from u.
  std::vector<EdgeId> path_between(VertexId u, VertexId v) const;

  bool operator==(const PlaneTree& other) const = default;

 private:
  PlaneTree() = default;

  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::vector<Ends> ends_;                       // by edge_pos
  std::vector<std::vector<EdgeId>> rotations_;  // by vertex_pos
};

/// Result of cutting a tree at an edge.  `e` belongs to both parts and is an
/// external edge of each; `first_tip` is its degree-one endpoint in `first`.
struct EdgeSplit {
  EdgeId edge;
  PlaneTree first;
  PlaneTree second;
  VertexId first_tip;
  VertexId second_tip;
};

/// Splits at `e`.  `first` holds `e` together with every edge on the side of
/// `near` (an endpoint of `e`); its tip is the other endpoint.  Without
/// `near` the smaller endpoint is used.
EdgeSplit split_at_edge(const PlaneTree& g, EdgeId e,
                        std::optional<VertexId> near = std::nullopt);

/// The tree spanned by `keep` (which must induce a subtree), with rotations
/// restricted.
PlaneTree induced_subtree(const PlaneTree& g, std::span<const EdgeId> keep);

/// Flip (Kauer move) at `e`.  Throws InputError for a single-edge tree.
PlaneTree flip(const PlaneTree& g, EdgeId e);

/// Same graph with every rotation reversed.
PlaneTree opposite(const PlaneTree& g);

// Generators ---------------------------------------------------------------

/// Path 0 - 1 - ... - n with edge i joining i-1 and i.
PlaneTree line_tree(std::size_t n);
/// Centre 0 with leaves 1..n, counterclockwise order 1, 2, ..., n.
PlaneTree star_tree(std::size_t n);
/// Uniform labelled tree from a random Pruefer code on n+1 vertices, with
/// uniformly shuffled rotations.  Deterministic in `seed` on every platform.
PlaneTree random_tree(std::size_t n, std::uint64_t seed);

/// Isomorphism-invariant code (orientation preserving).
std::string canonical_code(const PlaneTree& g);
/// Relabels vertices 0..n and edges 1..n following the canonical traversal.
PlaneTree canonical_relabel(const PlaneTree& g);
/// One representative per isomorphism class of plane trees with n edges,
/// canonically labelled and sorted by code.
std::vector<PlaneTree> all_plane_trees(std::size_t n);

}  // namespace brauer
