#include "brauer/complexes.hpp"

#include <cstdint>

namespace brauer {

GVector TwoTermComplex::g_vector(const PlaneTree& g) const {
  GVector out(g.edge_count(), 0);
  for (EdgeId e : degree0) ++out[g.edge_pos(e)];
  for (EdgeId e : degree_minus1) --out[g.edge_pos(e)];
  return out;
}

TwoTermComplex complex_of_arc(const BrauerAlgebra& alg, const Arc& arc) {
  const PlaneTree& g = alg.tree();
  const SignedWalk& w = arc.walk();
  if (arc.g().size() != g.edge_count()) throw InputError("arc does not belong to the algebra's tree");
  for (EdgeId e : w.edges)
    if (!g.contains(e)) throw InputError("arc does not belong to the algebra's tree");

  TwoTermComplex t;
  std::vector<std::size_t> slot(w.edges.size());
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    auto& side = w.signs[i] > 0 ? t.degree0 : t.degree_minus1;
    slot[i] = side.size();
    side.push_back(w.edges[i]);
  }
  t.differential.assign(t.degree0.size(), std::vector<AlgebraElement>(t.degree_minus1.size()));
  for (std::size_t i = 0; i + 1 < w.edges.size(); ++i) {
    std::size_t pos = w.signs[i] > 0 ? i : i + 1;
    std::size_t neg = w.signs[i] > 0 ? i + 1 : i;
    const VertexId v = w.vertices[i + 1];
    t.differential[slot[pos]][slot[neg]] =
        AlgebraElement::basis(alg.path_between(v, w.edges[pos], w.edges[neg]));
  }
  return t;
}

std::size_t hom1_dim(const BrauerAlgebra& alg, const TwoTermComplex& t, const TwoTermComplex& u,
                     Field field) {
  const PlaneTree& g = alg.tree();
  const std::size_t n = alg.dim();

  // Each basis element lies in exactly one Hom space; remember its slot there.
  std::vector<std::size_t> local(n);
  for (EdgeId e : g.edges())
    for (EdgeId f : g.edges()) {
      const auto& idx = alg.hom_indices(e, f);
      for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
    }

  // Rows: Hom(T^{-1}, U^0), block (i, j) for U^0_i <- T^{-1}_j.
  const std::size_t ri = u.degree0.size(), rj = t.degree_minus1.size();
  std::vector<std::size_t> offset(ri * rj + 1, 0);
  for (std::size_t i = 0; i < ri; ++i)
    for (std::size_t j = 0; j < rj; ++j)
      offset[i * rj + j + 1] =
          offset[i * rj + j] + alg.hom_indices(t.degree_minus1[j], u.degree0[i]).size();
  const std::size_t rows = offset.back();
  if (rows == 0) return 0;

  std::size_t cols = 0;
  for (EdgeId a : t.degree0)
    for (EdgeId b : u.degree0) cols += alg.hom_indices(a, b).size();
  for (EdgeId a : t.degree_minus1)
    for (EdgeId b : u.degree_minus1) cols += alg.hom_indices(a, b).size();

  ExactMatrix m(rows, cols);
  std::size_t col = 0;
  auto put = [&](std::size_t i, std::size_t j, const AlgebraElement& x) {
    for (const auto& [b, c] : x.terms()) m(offset[i * rj + j] + local[b], col) += c;
  };
  // s0 in Hom(T^0, U^0) contributes s0 * d_T.
  for (std::size_t i = 0; i < ri; ++i)
    for (std::size_t k = 0; k < t.degree0.size(); ++k)
      for (std::size_t b : alg.hom_indices(t.degree0[k], u.degree0[i])) {
        const AlgebraElement s = AlgebraElement::basis(b);
        for (std::size_t j = 0; j < rj; ++j) {
          const AlgebraElement& d = t.differential[k][j];
          if (!d.is_zero()) put(i, j, alg.multiply(s, d));
        }
        ++col;
      }
  // s1 in Hom(T^{-1}, U^{-1}) contributes d_U * s1.
  for (std::size_t l = 0; l < u.degree_minus1.size(); ++l)
    for (std::size_t j = 0; j < rj; ++j)
      for (std::size_t b : alg.hom_indices(t.degree_minus1[j], u.degree_minus1[l])) {
        const AlgebraElement s = AlgebraElement::basis(b);
        for (std::size_t i = 0; i < ri; ++i) {
          const AlgebraElement& d = u.differential[i][l];
          if (!d.is_zero()) put(i, j, alg.multiply(d, s));
        }
        ++col;
      }
  return rows - m.rank(field);
}

bool compatible(const BrauerAlgebra& alg, const Arc& a, const Arc& b, Field field) {
  const TwoTermComplex ta = complex_of_arc(alg, a), tb = complex_of_arc(alg, b);
  return hom1_dim(alg, ta, tb, field) == 0 && hom1_dim(alg, tb, ta, field) == 0;
}

CompatibilityMatrix CompatibilityMatrix::build(const BrauerAlgebra& alg, Field field) {
  CompatibilityMatrix cm;
  cm.arcs_ = all_arcs(alg.tree());
  const std::size_t n = cm.arcs_.size();
  std::vector<TwoTermComplex> cx;
  cx.reserve(n);
  for (const Arc& a : cm.arcs_) cx.push_back(complex_of_arc(alg, a));
  cm.hom1_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cm.hom1_[i * n + j] = hom1_dim(alg, cx[i], cx[j], field);
  cm.ok_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cm.ok_[i * n + j] = cm.hom1_[i * n + j] == 0 && cm.hom1_[j * n + i] == 0;
  return cm;
}

}  // namespace brauer
