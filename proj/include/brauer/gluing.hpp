#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "brauer/collections.hpp"
#include "brauer/report.hpp"

namespace brauer {

using Cell = std::pair<int, int>;

/// A maximal chain in [1,s] x [1,t] under the product order; cells sorted.
struct LatticePath {
  int s = 1;
  int t = 1;
  std::vector<Cell> cells;
  auto operator<=>(const LatticePath&) const = default;
};

/// All monotone staircases from (1,1) to (s,t), sorted by cell list.
std::vector<LatticePath> lattice_paths(int s, int t);
bool is_lattice_path(int s, int t, std::vector<Cell> cells);

struct Multiplicities {
  std::vector<int> rows;  // P(j,-), j = 1..s
  std::vector<int> cols;  // P(-,k), k = 1..t
};
Multiplicities path_multiplicities(const LatticePath& p);

/// The arcs of X|_{G^a} and X|_{G^b}, deduplicated and sorted.
struct Restriction {
  std::vector<Arc> first;
  std::vector<Arc> second;
};
Restriction restrict_collection(const CollectionSet& whole, const EdgeSplit& split,
                                const CompleteCollection& x);

/// Row and column orders, given as arc indices of the two sides.
struct StaircaseOrder {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  auto operator<=>(const StaircaseOrder&) const = default;
};

struct PathReconstruction {
  int s = 0;
  int t = 0;
  LatticePath path;
  StaircaseOrder order;
  /// Number of distinct cell sets over all valid orders, and whether they
  /// are all equal to `path` or its reversal.
  std::size_t cell_sets = 0;
  bool unique_up_to_reversal = true;
};

/// Every complete collection of G together with its restrictions to the two
/// sides of an edge.  `first` of the split plays the role of G^a.
class GluingContext {
 public:
  static GluingContext build(std::shared_ptr<const CollectionSet> whole, EdgeId e,
                             const EnumerateOptions& options = {});

  EdgeId edge() const { return split_.edge; }
  const EdgeSplit& split() const { return split_; }
  const CollectionSet& whole() const { return *whole_; }
  const CollectionSet& first() const { return *first_; }
  const CollectionSet& second() const { return *second_; }

  /// Indices into first() and second(); npos when a restriction is not a
  /// complete collection of its side.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::pair<std::size_t, std::size_t> restriction(std::size_t x) const { return restricted_[x]; }
  const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>& fibers() const {
    return fibers_;
  }

  /// Collections of G restricting to (xa, xb).  Throws InputError when g_e of
  /// the two has different signs or is zero.
  std::vector<std::size_t> glue_all(std::size_t xa, std::size_t xb) const;

  /// (row arc, column arc) of every crossing arc of X, as side arc indices.
  std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(std::size_t x) const;

  /// Throws TheoremViolation when no staircase order exists.
  PathReconstruction reconstruct_path(std::size_t x) const;

  /// The least order under which every member of the fiber over (xa, xb) is
  /// a lattice path, with the members hitting pairwise distinct paths.
  std::optional<StaircaseOrder> fiber_order(std::size_t xa, std::size_t xb) const;

 private:
  GluingContext(EdgeSplit split) : split_(std::move(split)) {}

  EdgeSplit split_;
  std::shared_ptr<const CollectionSet> whole_;
  std::shared_ptr<const CollectionSet> first_;
  std::shared_ptr<const CollectionSet> second_;
  std::vector<std::pair<std::size_t, std::size_t>> restricted_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> fibers_;
};

/// Cell set of X's crossing pairs under an order, when it is a lattice path.
std::optional<LatticePath> path_under_order(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const StaircaseOrder& order);

Report verify_gluing_decomposition(const GluingContext& ctx);
Report verify_gluing_decomposition(const PlaneTree& g, EdgeId e,
                                   const EnumerateOptions& options = {});

}  // namespace brauer
