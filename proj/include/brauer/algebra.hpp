#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "brauer/common.hpp"
#include "brauer/ribbon.hpp"

namespace brauer {

/// Arrow (e | sigma_v(e)) of the quiver: one per incidence of an edge and a
/// vertex.
struct Arrow {
  EdgeId source;
  EdgeId target;
  VertexId at;
  bool operator==(const Arrow&) const = default;
};

using ArrowPath = std::vector<std::size_t>;  // indices into Quiver::arrows

struct Quiver {
  std::vector<EdgeId> vertices;
  /// Sorted by (at-vertex, source edge).
  std::vector<Arrow> arrows;

  std::size_t arrow_index(VertexId at, EdgeId source) const;
};

Quiver build_quiver(const PlaneTree& g);

/// C_{v,e}: deg(v) arrows following sigma_v from e back to e.
struct SpecialCycle {
  VertexId vertex;
  EdgeId base;
  ArrowPath arrows;
};

SpecialCycle special_cycle(const PlaneTree& g, const Quiver& q, VertexId v, EdgeId e);

/// Generators of the defining ideals.
///  zero_paths    length-2 paths (sigma_u^{-1}(e)|e)(e|sigma_v(e)), u != v
///  commutations  pairs (C_{u,e}, C_{v,e}), one per edge
///  special_cycles every C_{v,e}
struct RelationGenerators {
  std::vector<ArrowPath> zero_paths;
  std::vector<std::pair<ArrowPath, ArrowPath>> commutations;
  std::vector<ArrowPath> special_cycles;
};

RelationGenerators relation_generators(const PlaneTree& g, const Quiver& q);

enum class BasisKind : std::uint8_t { idempotent, path, socle };

/// One basis vector of the Brauer tree algebra.  A `path` of the given
/// length runs counterclockwise around `at` starting at `source`; its length
/// is strictly between 0 and deg(at).  The socle z_e stands for both full
/// special cycles through e.
struct BasisElement {
  BasisKind kind;
  EdgeId source;
  EdgeId target;
  VertexId at{};
  std::uint32_t length = 0;
  bool operator==(const BasisElement&) const = default;
};

/// Sparse linear combination of basis elements with exact coefficients.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement basis(std::size_t index, Rational coeff = 1);

  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(std::size_t index) const;

  AlgebraElement& add(std::size_t index, const Rational& coeff);
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  bool operator==(const AlgebraElement&) const = default;

 private:
  std::map<std::size_t, Rational> terms_;
};

/// The Brauer tree algebra of a plane tree (all multiplicities one), paths
/// composed left to right.  Right modules: P_e = eps_e B, and
/// Hom(P_e, P_f) = eps_f B eps_e acting by left multiplication.
class BrauerAlgebra {
 public:
  static BrauerAlgebra build(const PlaneTree& g);

  const PlaneTree& tree() const { return tree_; }
  const Quiver& quiver() const { return quiver_; }
  std::size_t dim() const { return basis_.size(); }
  const BasisElement& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }

  std::size_t idempotent(EdgeId e) const;
  std::size_t socle(EdgeId e) const;
  /// Sub-path of length 1..deg(v) around v from e; full length gives the socle.
  std::size_t path(VertexId v, EdgeId from, std::size_t length) const;
  /// The basis element (sub-path at v) from edge `from` to edge `to`.
  std::size_t path_between(VertexId v, EdgeId from, EdgeId to) const;
  std::size_t arrow_element(std::size_t arrow) const;

  /// Product of two basis elements: none for zero, otherwise another basis
  /// element (all structure constants are 0 or 1).
  std::optional<std::size_t> multiply(std::size_t x, std::size_t y) const {
    auto r = table_[x * basis_.size() + y];
    if (r < 0) return std::nullopt;
    return static_cast<std::size_t>(r);
  }
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement evaluate(const ArrowPath& p) const;
  AlgebraElement unit() const;

  /// Basis of Hom(P_e, P_f): basis elements from f to e.
  const std::vector<std::size_t>& hom_indices(EdgeId e, EdgeId f) const;
  std::vector<AlgebraElement> hom_basis(EdgeId e, EdgeId f) const;
  std::size_t projective_dim(EdgeId e) const;

 private:
  explicit BrauerAlgebra(PlaneTree g) : tree_(std::move(g)) {}
  std::optional<std::size_t> compute_product(std::size_t x, std::size_t y) const;

  PlaneTree tree_;
  Quiver quiver_;
  std::vector<BasisElement> basis_;
  std::vector<std::int32_t> table_;
  std::map<std::tuple<int, int, std::size_t>, std::size_t> path_index_;
  std::vector<std::size_t> idempotent_index_;  // by edge_pos
  std::vector<std::size_t> socle_index_;       // by edge_pos
  std::vector<std::vector<std::size_t>> hom_;  // [pos e * n + pos f]
};

}  // namespace brauer
