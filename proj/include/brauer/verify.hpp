#pragma once

#include <cstddef>
#include <map>

#include "brauer/collections.hpp"
#include "brauer/report.hpp"

namespace brauer {

/// C(2n-|j|-1, n-1) for |j| in [1,n], otherwise 0.
BigInt expected_edge_count(long n, long j);

/// Total count, external-edge distributions and empty j = 0 buckets.
Report verify_main_theorem(const CollectionSet& set);

/// g-vector of the image on flip(g, e) of an arc with g_e in {0, 1}.
GVector flip_gvector(const PlaneTree& g, EdgeId e, const GVector& gv);

/// A(G)_e^{>0} -> A(flip(G,e))_e^{<0}, arc by arc.
Report verify_flip(const CollectionSet& set, const CollectionSet& flipped, EdgeId e);
Report verify_flip(const PlaneTree& g, EdgeId e, const EnumerateOptions& options = {});

/// X -> -g(X) into the collections of the opposite tree.
Report verify_opposite(const CollectionSet& set, const CollectionSet& opp);
Report verify_opposite(const PlaneTree& g, const EnumerateOptions& options = {});

struct Lemma2Terms {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt f;
  bool pass = false;
};

/// A_{p,q-1}(j), B_{p,q-1}(j), C_{p,q-1}(j) and F_{p+q-1}(j).
Lemma2Terms lemma2_terms(long p, long q, long j);
Report verify_lemma2(long max_p, long max_q);

/// The three-family decomposition at an external edge e and f = sigma_b(e),
/// checked on the side G^c of f that contains e, then the resulting count
/// of A(G)_e^j.
Report verify_lemma1_subsets(const CollectionSet& set, EdgeId e, EdgeId f,
                             const EnumerateOptions& options = {});

/// The (e, f) configuration used by verify_lemma1_subsets, if e is external
/// and the tree has at least two edges.
std::optional<EdgeId> lemma1_partner(const PlaneTree& g, EdgeId e);

}  // namespace brauer
