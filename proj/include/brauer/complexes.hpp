#pragma once

#include <cstddef>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/arcs.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

/// T^{-1} --d--> T^0 with indecomposable projective summands listed by edge.
/// differential[i][j] lies in Hom(P_{degree_minus1[j]}, P_{degree0[i]}).
struct TwoTermComplex {
  std::vector<EdgeId> degree0;
  std::vector<EdgeId> degree_minus1;
  std::vector<std::vector<AlgebraElement>> differential;

  /// Multiplicity in degree 0 minus multiplicity in degree -1, per edge.
  GVector g_vector(const PlaneTree& g) const;
};

/// T_gamma: positive walk edges in degree 0, negative ones in degree -1, and
/// between consecutive edges the sub-path around their shared vertex from the
/// positive edge to the negative one.
TwoTermComplex complex_of_arc(const BrauerAlgebra& alg, const Arc& arc);

/// dim Hom_K(T, U[1]).  For complexes in degrees -1 and 0 this is the only
/// shift that can be nonzero: Hom(T, U[i]) for i >= 2 has no overlapping
/// degrees.
std::size_t hom1_dim(const BrauerAlgebra& alg, const TwoTermComplex& t, const TwoTermComplex& u,
                     Field field = Field::rational);

bool compatible(const BrauerAlgebra& alg, const Arc& a, const Arc& b,
                Field field = Field::rational);

/// Pairwise compatibility of every arc of a tree, arcs in g-vector order.
class CompatibilityMatrix {
 public:
  static CompatibilityMatrix build(const BrauerAlgebra& alg, Field field = Field::rational);

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool operator()(std::size_t i, std::size_t j) const { return ok_[i * arcs_.size() + j] != 0; }
  /// hom1_dim(T_i, T_j).
  std::size_t hom1(std::size_t i, std::size_t j) const { return hom1_[i * arcs_.size() + j]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::size_t> hom1_;
  std::vector<char> ok_;
};

}  // namespace brauer
