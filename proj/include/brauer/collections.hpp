#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauer/complexes.hpp"

namespace brauer {

/// n pairwise compatible arcs, as ascending indices into the owning
/// CollectionSet's arc list.
struct CompleteCollection {
  std::vector<std::size_t> arcs;
  GVector gvec;
  bool operator==(const CompleteCollection&) const = default;
};

struct EnumerateOptions {
  std::size_t max_edges = 10;
  Field field = Field::rational;
};

/// All complete collections of a tree.
class CollectionSet {
 public:
  /// Throws InputError when the tree has more than options.max_edges edges.
  static CollectionSet enumerate(const PlaneTree& g, const EnumerateOptions& options = {});

  const PlaneTree& tree() const { return alg_.tree(); }
  const BrauerAlgebra& algebra() const { return alg_; }
  const CompatibilityMatrix& compatibility() const { return compat_; }
  const std::vector<Arc>& arcs() const { return compat_.arcs(); }
  const Arc& arc(std::size_t i) const { return compat_.arcs()[i]; }
  const std::vector<CompleteCollection>& collections() const { return collections_; }
  std::size_t size() const { return collections_.size(); }

  const CompleteCollection* lookup(const GVector& gv) const;
  std::optional<std::size_t> index_of(const GVector& gv) const;
  std::optional<std::size_t> arc_index(const GVector& gv) const;

  std::map<int, std::size_t> counts_by_gvector(EdgeId e) const;
  std::map<std::pair<int, int>, std::size_t> count_by_edge_pair(EdgeId e, EdgeId f) const;
  /// Indices of collections with g_e = j.
  std::vector<std::size_t> with_value(EdgeId e, int j) const;

  /// Every maximal pairwise compatible set of arcs (Bron-Kerbosch with pivot).
  std::vector<std::vector<std::size_t>> maximal_compatible_sets() const;

 private:
  CollectionSet(BrauerAlgebra alg, CompatibilityMatrix cm)
      : alg_(std::move(alg)), compat_(std::move(cm)) {}

  BrauerAlgebra alg_;
  CompatibilityMatrix compat_;
  std::vector<CompleteCollection> collections_;
  std::unordered_map<GVector, std::size_t, GVectorHash> by_gvec_;
  std::unordered_map<GVector, std::size_t, GVectorHash> arc_by_gvec_;
};

std::vector<CompleteCollection> enumerate_complete(const PlaneTree& g,
                                                   const EnumerateOptions& options = {});
std::optional<CompleteCollection> lookup_by_gvector(const CollectionSet& set, const GVector& gv);

}  // namespace brauer
