#include "brauer/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace brauer {

namespace {

std::string edge_label(EdgeId e) { return "edge " + std::to_string(e.value); }

std::size_t count_of(const std::map<int, std::size_t>& h, int j) {
  auto it = h.find(j);
  return it == h.end() ? 0 : it->second;
}

BigInt big(std::size_t x) { return BigInt(static_cast<unsigned long>(x)); }

// F_p(s) and P(s,t) of the binomial identity.
BigInt ff(long p, long s) { return binomial(2 * p - s - 1, p - 1); }
BigInt pp(long s, long t) {
  if (s < 1 || t < 1) return 0;
  return binomial(s + t - 2, s - 1);
}

/// Images under `map_arc` of the arcs of X, as a collection of `target`.
template <class F>
std::optional<std::size_t> image_of(const CollectionSet& source, const CompleteCollection& x,
                                    const CollectionSet& target, F&& map_arc) {
  std::vector<std::size_t> arcs;
  for (std::size_t i : x.arcs) {
    auto k = target.arc_index(map_arc(source.arc(i).g()));
    if (!k) return std::nullopt;
    arcs.push_back(*k);
  }
  std::sort(arcs.begin(), arcs.end());
  GVector gv(target.tree().edge_count(), 0);
  for (std::size_t k : arcs)
    for (std::size_t d = 0; d < gv.size(); ++d) gv[d] += target.arc(k).g()[d];
  auto idx = target.index_of(gv);
  if (!idx || target.collections()[*idx].arcs != arcs) return std::nullopt;
  return idx;
}

}  // namespace

BigInt expected_edge_count(long n, long j) {
  const long a = j < 0 ? -j : j;
  if (a < 1 || a > n) return 0;
  return binomial(2 * n - a - 1, n - 1);
}

Report verify_main_theorem(const CollectionSet& set) {
  Report rep;
  rep.suite = "main";
  const PlaneTree& g = set.tree();
  const long n = static_cast<long>(g.edge_count());
  const std::string inst = "n=" + std::to_string(n);
  rep.add(inst, "total count is C(2n,n)", binomial(2 * n, n), big(set.size()));

  std::set<GVector> distinct;
  for (const auto& x : set.collections()) distinct.insert(x.gvec);
  rep.add(inst, "collection g-vectors are pairwise distinct", big(set.size()), big(distinct.size()));

  for (EdgeId e : g.edges()) {
    const auto hist = set.counts_by_gvector(e);
    const std::string lbl = edge_label(e);
    rep.add(lbl, "j=0 bucket is empty", 0, big(count_of(hist, 0)));
    std::size_t outside = 0;
    for (auto [j, c] : hist)
      if (j < -n || j > n) outside += c;
    rep.add(lbl, "|g_e| <= n", 0, big(outside));
    if (!g.is_external(e)) continue;
    for (long j = -n; j <= n; ++j) {
      if (j == 0) continue;
      rep.add(lbl + " j=" + std::to_string(j), "external edge count",
              expected_edge_count(n, j), big(count_of(hist, static_cast<int>(j))));
    }
  }
  return rep;
}

GVector flip_gvector(const PlaneTree& g, EdgeId e, const GVector& gv) {
  if (gv.size() != g.edge_count()) throw InputError("g-vector has wrong length");
  const std::size_t ke = g.edge_pos(e);
  if (gv[ke] != 0 && gv[ke] != 1) throw InputError("flip needs g_e in {0,1}");
  if (g.edge_count() < 2) throw InputError("flip needs at least two edges");
  GVector out = gv;
  out[ke] = -gv[ke];
  if (auto leaf = g.external_vertex(e)) {
    const EdgeId f = g.next_at(g.other_end(e, *leaf), e);
    out[g.edge_pos(f)] += gv[ke];
  } else {
    auto [a, b] = g.ends(e);
    for (EdgeId f : {g.next_at(a, e), g.next_at(b, e)}) out[g.edge_pos(f)] += gv[ke];
  }
  return out;
}

Report verify_flip(const CollectionSet& set, const CollectionSet& flipped, EdgeId e) {
  Report rep;
  rep.suite = "flip";
  const PlaneTree& g = set.tree();
  const std::string inst = edge_label(e);
  const std::size_t ke = g.edge_pos(e);

  std::size_t arcs_ok = 0, arcs_total = 0, complete = 0, negative = 0;
  std::set<std::size_t> images;
  const auto members = [&] {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < set.size(); ++i)
      if (set.collections()[i].gvec[ke] > 0) out.push_back(i);
    return out;
  }();
  for (std::size_t i : members) {
    const auto& x = set.collections()[i];
    for (std::size_t a : x.arcs) {
      ++arcs_total;
      try {
        arc_from_gvector(flipped.tree(), flip_gvector(g, e, set.arc(a).g()));
        ++arcs_ok;
      } catch (const InputError&) {
      }
    }
    auto img = image_of(set, x, flipped, [&](const GVector& gv) { return flip_gvector(g, e, gv); });
    if (!img) continue;
    ++complete;
    images.insert(*img);
    if (flipped.collections()[*img].gvec[flipped.tree().edge_pos(e)] < 0) ++negative;
  }
  std::size_t target = 0;
  for (const auto& y : flipped.collections())
    if (y.gvec[flipped.tree().edge_pos(e)] < 0) ++target;

  rep.add(inst, "images of arcs are arcs of the flipped tree", big(arcs_total), big(arcs_ok));
  rep.add(inst, "images are complete collections", big(members.size()), big(complete));
  rep.add(inst, "images have g_e < 0", big(members.size()), big(negative));
  rep.add(inst, "map is injective", big(members.size()), big(images.size()));
  rep.add(inst, "|A(G)_e^{>0}| = |A(H)_e^{<0}|", big(members.size()), big(target));
  return rep;
}

Report verify_flip(const PlaneTree& g, EdgeId e, const EnumerateOptions& options) {
  return verify_flip(CollectionSet::enumerate(g, options),
                     CollectionSet::enumerate(flip(g, e), options), e);
}

Report verify_opposite(const CollectionSet& set, const CollectionSet& opp) {
  Report rep;
  rep.suite = "opposite";
  const PlaneTree& g = set.tree();
  const std::string inst = "n=" + std::to_string(g.edge_count());
  auto negate = [](GVector gv) {
    for (int& x : gv) x = -x;
    return gv;
  };
  std::size_t found = 0;
  std::set<std::size_t> images;
  for (const auto& x : set.collections())
    if (auto img = image_of(set, x, opp, negate)) {
      ++found;
      images.insert(*img);
    }
  rep.add(inst, "-g(X) indexes a collection of the opposite tree", big(set.size()), big(found));
  rep.add(inst, "map is injective", big(set.size()), big(images.size()));
  rep.add(inst, "collection counts agree", big(set.size()), big(opp.size()));
  for (EdgeId e : g.edges()) {
    const auto a = set.counts_by_gvector(e), b = opp.counts_by_gvector(e);
    for (auto [j, c] : a)
      rep.add(edge_label(e) + " j=" + std::to_string(j), "|A(G)_e^j| = |A(G^op)_e^-j|", big(c),
              big(count_of(b, -j)));
  }
  return rep;
}

Report verify_opposite(const PlaneTree& g, const EnumerateOptions& options) {
  return verify_opposite(CollectionSet::enumerate(g, options),
                         CollectionSet::enumerate(opposite(g), options));
}

Lemma2Terms lemma2_terms(long p, long q, long j) {
  if (p < 1 || q < 2) throw InputError("lemma2 needs p >= 1 and q >= 2");
  if (j < 1 || j > p + q - 1) throw InputError("lemma2 needs j in [1, p+q-1]");
  Lemma2Terms r;
  r.a = r.b = r.c = 0;
  for (long s = 1; s <= p; ++s)
    for (long t = 1; t <= q - 1; ++t) {
      const BigInt w = ff(p, s) * ff(q - 1, t);
      if (s + t == j) r.a += w;
      r.b += w * pp(s - j + 1, t);
      const long u = t - j + 1;
      if (u >= 1 && u <= t) r.c += w * pp(s, u);
    }
  r.f = ff(p + q - 1, j);
  r.pass = r.f == r.a + r.b + r.c;
  return r;
}

Report verify_lemma2(long max_p, long max_q) {
  Report rep;
  rep.suite = "lemma2";
  for (long p = 1; p <= max_p; ++p)
    for (long q = 2; q <= max_q; ++q)
      for (long j = 1; j <= p + q - 1; ++j) {
        const Lemma2Terms t = lemma2_terms(p, q, j);
        rep.add("p=" + std::to_string(p) + " q=" + std::to_string(q) + " j=" + std::to_string(j),
                "F = A + B + C", t.f, t.a + t.b + t.c);
      }
  return rep;
}

std::optional<EdgeId> lemma1_partner(const PlaneTree& g, EdgeId e) {
  if (g.edge_count() < 2) return std::nullopt;
  auto a = g.external_vertex(e);
  if (!a) return std::nullopt;
  return g.next_at(g.other_end(e, *a), e);
}

Report verify_lemma1_subsets(const CollectionSet& set, EdgeId e, EdgeId f,
                             const EnumerateOptions& options) {
  const PlaneTree& g = set.tree();
  auto partner = lemma1_partner(g, e);
  if (!partner || *partner != f)
    throw InputError("lemma1 needs an external edge e and f = sigma_b(e)");
  Report rep;
  rep.suite = "lemma1";
  const std::string inst = edge_label(e) + " f=" + std::to_string(f.value);

  const VertexId b = g.other_end(e, *g.external_vertex(e));
  const EdgeSplit sp = split_at_edge(g, f, b);
  const long nc = static_cast<long>(sp.first.edge_count());
  const long nb = static_cast<long>(sp.second.edge_count());
  auto side = [&](const PlaneTree& t) {
    return t == g ? set : CollectionSet::enumerate(t, options);
  };
  const CollectionSet set_c = side(sp.first);
  const CollectionSet set_b = side(sp.second);

  const auto hist = set_c.count_by_edge_pair(e, f);
  auto h = [&](int x, int y) -> std::size_t {
    auto it = hist.find({x, y});
    return it == hist.end() ? 0 : it->second;
  };

  std::size_t covered = 0, positive = 0;
  for (auto [key, c] : hist)
    if (key.first > 0) positive += c;
  for (long t = 1; t <= nc - 1; ++t) {
    const BigInt expect = binomial(2 * nc - t - 3, nc - 2);
    const std::string lbl = inst + " t=" + std::to_string(t);
    const int ti = static_cast<int>(t);
    rep.add(lbl, "family (t+1,-1) count", expect, big(h(ti + 1, -1)));
    rep.add(lbl, "family (1,-t-1) count", expect, big(h(1, -ti - 1)));
    covered += h(ti + 1, -1) + h(1, -ti - 1);
    for (long u = 1; u <= t; ++u) {
      const int ui = static_cast<int>(u);
      rep.add(lbl + " u=" + std::to_string(u), "family (t-u+1,u) count", expect,
              big(h(ti - ui + 1, ui)));
      covered += h(ti - ui + 1, ui);
    }
  }
  rep.add(inst, "families cover A(G^c)_e^{>0}", big(positive), big(covered));

  const auto hb = set_b.counts_by_gvector(f);
  const auto he = set.counts_by_gvector(e);
  const long n = static_cast<long>(g.edge_count());
  for (long j = 1; j <= n; ++j) {
    BigInt aa = 0, bb = 0, cc = 0;
    for (long s = 1; s <= nb; ++s)
      for (long t = 1; t <= nc - 1; ++t) {
        const int si = static_cast<int>(s), ti = static_cast<int>(t);
        const BigInt neg = big(count_of(hb, -si));
        if (s + t == j) aa += neg * big(h(ti + 1, -1));
        // Paths of P(s,t+1) whose first column holds j cells.
        bb += neg * big(h(1, -ti - 1)) * pp(s - j + 1, t);
        const long u = t - j + 1;
        if (u >= 1 && u <= t)
          cc += big(count_of(hb, si)) * big(h(static_cast<int>(j), static_cast<int>(u))) * pp(s, u);
      }
    const Lemma2Terms terms = lemma2_terms(nb, nc, j);
    const std::string lbl = inst + " j=" + std::to_string(j);
    rep.add(lbl, "first family total", terms.a, aa);
    rep.add(lbl, "second family total", terms.b, bb);
    rep.add(lbl, "third family total", terms.c, cc);
    rep.add(lbl, "families sum to |A(G)_e^j|", big(count_of(he, static_cast<int>(j))), aa + bb + cc);
  }
  return rep;
}

}  // namespace brauer
