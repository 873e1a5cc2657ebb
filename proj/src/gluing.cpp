#include "brauer/gluing.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace brauer {

namespace {

int sign_of(int x) { return (x > 0) - (x < 0); }

void extend_paths(int s, int t, std::vector<Cell>& cur, std::vector<LatticePath>& out) {
  auto [i, j] = cur.back();
  if (i == s && j == t) {
    LatticePath p{s, t, cur};
    std::sort(p.cells.begin(), p.cells.end());
    out.push_back(std::move(p));
    return;
  }
  if (i < s) {
    cur.emplace_back(i + 1, j);
    extend_paths(s, t, cur, out);
    cur.pop_back();
  }
  if (j < t) {
    cur.emplace_back(i, j + 1);
    extend_paths(s, t, cur, out);
    cur.pop_back();
  }
}

/// Calls f(rows, cols) for every pair of orders of local row/column ids
/// under which `pairs` walks a staircase from (1,1) to (s,t).
template <class F>
void staircase_orders(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t s,
                      std::size_t t, F&& f) {
  if (pairs.size() != s + t - 1) return;
  std::vector<char> has(s * t, 0);
  for (auto [r, c] : pairs) has[r * t + c] = 1;
  std::vector<char> used_r(s, 0), used_c(t, 0);
  std::vector<std::size_t> rows, cols;

  auto row_done = [&](std::size_t r) {
    for (std::size_t c = 0; c < t; ++c)
      if (has[r * t + c] && !used_c[c]) return false;
    return true;
  };
  auto col_done = [&](std::size_t c) {
    for (std::size_t r = 0; r < s; ++r)
      if (has[r * t + c] && !used_r[r]) return false;
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (rows.size() == s && cols.size() == t) {
      f(rows, cols);
      return;
    }
    // A new row keeps the current column, so the current row must be done.
    if (row_done(r))
      for (std::size_t r2 = 0; r2 < s; ++r2)
        if (!used_r[r2] && has[r2 * t + c]) {
          used_r[r2] = 1;
          rows.push_back(r2);
          self(self, r2, c);
          rows.pop_back();
          used_r[r2] = 0;
        }
    if (col_done(c))
      for (std::size_t c2 = 0; c2 < t; ++c2)
        if (!used_c[c2] && has[r * t + c2]) {
          used_c[c2] = 1;
          cols.push_back(c2);
          self(self, r, c2);
          cols.pop_back();
          used_c[c2] = 0;
        }
  };

  for (auto [r, c] : pairs) {
    used_r[r] = used_c[c] = 1;
    rows = {r};
    cols = {c};
    dfs(dfs, r, c);
    used_r[r] = used_c[c] = 0;
  }
}

struct LocalPairs {
  std::vector<std::size_t> row_ids;  // side arc indices, ascending
  std::vector<std::size_t> col_ids;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

LocalPairs localize(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  LocalPairs lp;
  for (auto [a, b] : pairs) {
    lp.row_ids.push_back(a);
    lp.col_ids.push_back(b);
  }
  for (auto* v : {&lp.row_ids, &lp.col_ids}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  for (auto [a, b] : pairs) {
    auto r = std::lower_bound(lp.row_ids.begin(), lp.row_ids.end(), a) - lp.row_ids.begin();
    auto c = std::lower_bound(lp.col_ids.begin(), lp.col_ids.end(), b) - lp.col_ids.begin();
    lp.pairs.emplace_back(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  return lp;
}

StaircaseOrder to_global(const LocalPairs& lp, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  StaircaseOrder o;
  for (auto r : rows) o.rows.push_back(lp.row_ids[r]);
  for (auto c : cols) o.cols.push_back(lp.col_ids[c]);
  return o;
}

LatticePath reversed(const LatticePath& p) {
  LatticePath q{p.s, p.t, {}};
  for (auto [i, j] : p.cells) q.cells.emplace_back(p.s + 1 - i, p.t + 1 - j);
  std::sort(q.cells.begin(), q.cells.end());
  return q;
}

std::string signed_j(int sigma, int j) { return "j=" + std::to_string(sigma * j); }

}  // namespace

std::vector<LatticePath> lattice_paths(int s, int t) {
  if (s < 1 || t < 1) throw InputError("lattice path dimensions must be positive");
  std::vector<LatticePath> out;
  std::vector<Cell> cur{{1, 1}};
  extend_paths(s, t, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_lattice_path(int s, int t, std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) return false;
  if (cells.size() != static_cast<std::size_t>(s + t - 1)) return false;
  for (auto [i, j] : cells)
    if (i < 1 || i > s || j < 1 || j > t) return false;
  for (std::size_t x = 0; x < cells.size(); ++x)
    for (std::size_t y = x + 1; y < cells.size(); ++y) {
      auto [i1, j1] = cells[x];
      auto [i2, j2] = cells[y];
      bool le = i1 <= i2 && j1 <= j2, ge = i1 >= i2 && j1 >= j2;
      if (!le && !ge) return false;
    }
  return true;
}

Multiplicities path_multiplicities(const LatticePath& p) {
  Multiplicities m{std::vector<int>(p.s, 0), std::vector<int>(p.t, 0)};
  for (auto [i, j] : p.cells) {
    ++m.rows[i - 1];
    ++m.cols[j - 1];
  }
  return m;
}

Restriction restrict_collection(const CollectionSet& whole, const EdgeSplit& split,
                                const CompleteCollection& x) {
  Restriction r;
  for (std::size_t i : x.arcs) {
    const Arc& a = whole.arc(i);
    if (auto ra = restrict_arc(whole.tree(), a, split.first)) r.first.push_back(*ra);
    if (auto rb = restrict_arc(whole.tree(), a, split.second)) r.second.push_back(*rb);
  }
  for (auto* v : {&r.first, &r.second}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return r;
}

std::optional<LatticePath> path_under_order(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const StaircaseOrder& order) {
  LatticePath p{static_cast<int>(order.rows.size()), static_cast<int>(order.cols.size()), {}};
  for (auto [a, b] : pairs) {
    auto r = std::find(order.rows.begin(), order.rows.end(), a);
    auto c = std::find(order.cols.begin(), order.cols.end(), b);
    if (r == order.rows.end() || c == order.cols.end()) return std::nullopt;
    p.cells.emplace_back(static_cast<int>(r - order.rows.begin()) + 1,
                         static_cast<int>(c - order.cols.begin()) + 1);
  }
  std::sort(p.cells.begin(), p.cells.end());
  if (!is_lattice_path(p.s, p.t, p.cells)) return std::nullopt;
  return p;
}

GluingContext GluingContext::build(std::shared_ptr<const CollectionSet> whole, EdgeId e,
                                   const EnumerateOptions& options) {
  GluingContext ctx(split_at_edge(whole->tree(), e));
  ctx.whole_ = whole;
  auto side = [&](const PlaneTree& t) {
    if (t == whole->tree()) return whole;
    return std::shared_ptr<const CollectionSet>(
        std::make_shared<CollectionSet>(CollectionSet::enumerate(t, options)));
  };
  ctx.first_ = side(ctx.split_.first);
  ctx.second_ = side(ctx.split_.second);

  auto find = [](const CollectionSet& set, const std::vector<Arc>& arcs) {
    GVector gv(set.tree().edge_count(), 0);
    for (const Arc& a : arcs)
      for (std::size_t k = 0; k < gv.size(); ++k) gv[k] += a.g()[k];
    auto idx = set.index_of(gv);
    if (!idx) return npos;
    const auto& x = set.collections()[*idx];
    if (x.arcs.size() != arcs.size()) return npos;
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if (set.arc(x.arcs[k]) != arcs[k]) return npos;
    return *idx;
  };

  const auto& all = whole->collections();
  ctx.restricted_.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    Restriction r = restrict_collection(*whole, ctx.split_, all[i]);
    std::pair<std::size_t, std::size_t> key{find(*ctx.first_, r.first), find(*ctx.second_, r.second)};
    ctx.restricted_.push_back(key);
    if (key.first != npos && key.second != npos) ctx.fibers_[key].push_back(i);
  }
  return ctx;
}

std::vector<std::size_t> GluingContext::glue_all(std::size_t xa, std::size_t xb) const {
  const int ga = first_->collections().at(xa).gvec[split_.first.edge_pos(split_.edge)];
  const int gb = second_->collections().at(xb).gvec[split_.second.edge_pos(split_.edge)];
  if (ga == 0 || gb == 0) throw InputError("gluing needs nonzero g_e on both sides");
  if (sign_of(ga) != sign_of(gb)) throw InputError("gluing needs g_e of the same sign");
  auto it = fibers_.find({xa, xb});
  if (it == fibers_.end()) return {};
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> GluingContext::crossing_pairs(
    std::size_t x) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i : whole_->collections().at(x).arcs) {
    const Arc& a = whole_->arc(i);
    if (!a.contains(split_.edge)) continue;
    auto ra = restrict_arc(whole_->tree(), a, split_.first);
    auto rb = restrict_arc(whole_->tree(), a, split_.second);
    out.emplace_back(*first_->arc_index(ra->g()), *second_->arc_index(rb->g()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathReconstruction GluingContext::reconstruct_path(std::size_t x) const {
  const int ge = whole_->collections().at(x).gvec[whole_->tree().edge_pos(split_.edge)];
  if (ge == 0) throw InputError("reconstruction needs nonzero g_e");
  const auto pairs = crossing_pairs(x);
  const LocalPairs lp = localize(pairs);

  std::optional<StaircaseOrder> best;
  std::set<LatticePath> cell_sets;
  staircase_orders(lp.pairs, lp.row_ids.size(), lp.col_ids.size(),
                   [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
                     StaircaseOrder o = to_global(lp, rows, cols);
                     cell_sets.insert(*path_under_order(pairs, o));
                     if (!best || o < *best) best = std::move(o);
                   });
  if (!best)
    throw TheoremViolation("no staircase order for the crossing arcs at edge " +
                           std::to_string(split_.edge.value));

  PathReconstruction out;
  out.s = static_cast<int>(lp.row_ids.size());
  out.t = static_cast<int>(lp.col_ids.size());
  out.order = *best;
  out.path = *path_under_order(pairs, out.order);
  out.cell_sets = cell_sets.size();
  const LatticePath rev = reversed(out.path);
  for (const auto& p : cell_sets)
    if (p != out.path && p != rev) out.unique_up_to_reversal = false;
  return out;
}

std::optional<StaircaseOrder> GluingContext::fiber_order(std::size_t xa, std::size_t xb) const {
  auto it = fibers_.find({xa, xb});
  if (it == fibers_.end() || it->second.empty()) return std::nullopt;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> members;
  for (std::size_t x : it->second) members.push_back(crossing_pairs(x));

  const LocalPairs lp = localize(members.front());
  std::optional<StaircaseOrder> best;
  staircase_orders(
      lp.pairs, lp.row_ids.size(), lp.col_ids.size(),
      [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        StaircaseOrder o = to_global(lp, rows, cols);
        if (best && !(o < *best)) return;
        std::set<LatticePath> seen;
        for (const auto& m : members) {
          auto p = path_under_order(m, o);
          if (!p || !seen.insert(*p).second) return;
        }
        best = std::move(o);
      });
  return best;
}

Report verify_gluing_decomposition(const GluingContext& ctx) {
  Report rep;
  rep.suite = "gluing";
  const CollectionSet& whole = ctx.whole();
  const EdgeId e = ctx.edge();
  const std::string inst = "edge " + std::to_string(e.value);
  const int n = static_cast<int>(whole.tree().edge_count());
  const std::size_t ke = whole.tree().edge_pos(e);
  const std::size_t ka = ctx.first().tree().edge_pos(e);
  const std::size_t kb = ctx.second().tree().edge_pos(e);
  const auto& all = whole.collections();

  std::size_t complete = 0, signs = 0;
  for (std::size_t x = 0; x < all.size(); ++x) {
    auto [ia, ib] = ctx.restriction(x);
    if (ia == GluingContext::npos || ib == GluingContext::npos) continue;
    ++complete;
    const int g = all[x].gvec[ke];
    const int ga = ctx.first().collections()[ia].gvec[ka];
    const int gb = ctx.second().collections()[ib].gvec[kb];
    if (sign_of(g) != 0 && sign_of(ga) == sign_of(g) && sign_of(gb) == sign_of(g)) ++signs;
  }
  rep.add(inst, "restrictions are complete collections", all.size(), complete);
  rep.add(inst, "restriction signs agree with g_e", all.size(), signs);

  std::size_t non_unique = 0;
  for (int sigma : {1, -1})
    for (int j = 1; j <= n; ++j) {
      const std::string lbl = inst + " " + signed_j(sigma, j);
      const auto members = whole.with_value(e, sigma * j);

      BigInt predicted = 0;
      std::size_t pairs = 0, sized = 0, ordered = 0, glued = 0;
      std::set<std::size_t> uni;
      for (int s = 1; s <= j; ++s) {
        const int t = j + 1 - s;
        const auto as = ctx.first().with_value(e, sigma * s);
        const auto bs = ctx.second().with_value(e, sigma * t);
        const BigInt paths = binomial(s + t - 2, s - 1);
        predicted += BigInt(static_cast<unsigned long>(as.size())) *
                     static_cast<unsigned long>(bs.size()) * paths;
        for (std::size_t xa : as)
          for (std::size_t xb : bs) {
            ++pairs;
            const auto fiber = ctx.glue_all(xa, xb);
            glued += fiber.size();
            uni.insert(fiber.begin(), fiber.end());
            if (BigInt(static_cast<unsigned long>(fiber.size())) == paths) ++sized;
            const auto order = ctx.fiber_order(xa, xb);
            if (order && order->rows.size() == static_cast<std::size_t>(s) &&
                order->cols.size() == static_cast<std::size_t>(t))
              ++ordered;
          }
      }
      rep.add(lbl, "counting identity", predicted, members.size());
      rep.add(lbl, "fibers cover the class", members.size(), uni.size());
      rep.add(lbl, "fibers are disjoint", uni.size(), glued);
      rep.add(lbl, "fiber sizes are C(s+t-2,s-1)", pairs, sized);
      rep.add(lbl, "fibers admit a common staircase order", pairs, ordered);

      std::size_t rebuilt = 0, ga_ok = 0, gb_ok = 0;
      for (std::size_t x : members) {
        PathReconstruction pr;
        try {
          pr = ctx.reconstruct_path(x);
        } catch (const TheoremViolation&) {
          continue;
        }
        if (pr.s + pr.t - 1 != j) continue;
        ++rebuilt;
        if (!pr.unique_up_to_reversal) ++non_unique;

        const auto [ia, ib] = ctx.restriction(x);
        const Multiplicities mult = path_multiplicities(pr.path);
        auto side_ok = [&](const CollectionSet& side, std::size_t xi,
                           const std::vector<std::size_t>& order, const std::vector<int>& m) {
          const PlaneTree& st = side.tree();
          GVector rhs(st.edge_count(), 0);
          for (std::size_t r = 0; r < order.size(); ++r)
            for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += side.arc(order[r]).g()[k] * m[r];
          for (std::size_t i : side.collections()[xi].arcs)
            if (!side.arc(i).contains(e))
              for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += side.arc(i).g()[k];
          for (EdgeId d : st.edges())
            if (rhs[st.edge_pos(d)] != all[x].gvec[whole.tree().edge_pos(d)]) return false;
          return true;
        };
        if (ia != GluingContext::npos && side_ok(ctx.first(), ia, pr.order.rows, mult.rows))
          ++ga_ok;
        if (ib != GluingContext::npos && side_ok(ctx.second(), ib, pr.order.cols, mult.cols))
          ++gb_ok;
      }
      rep.add(lbl, "reconstruction finds a staircase with s+t-1=j", members.size(), rebuilt);
      rep.add(lbl, "g-vector formula on the first side", members.size(), ga_ok);
      rep.add(lbl, "g-vector formula on the second side", members.size(), gb_ok);
    }
  if (non_unique > 0)
    rep.notes.push_back(inst + ": " + std::to_string(non_unique) +
                        " collections admit staircase orders beyond simultaneous reversal");
  return rep;
}

Report verify_gluing_decomposition(const PlaneTree& g, EdgeId e, const EnumerateOptions& options) {
  auto whole = std::make_shared<const CollectionSet>(CollectionSet::enumerate(g, options));
  return verify_gluing_decomposition(GluingContext::build(whole, e, options));
}

}  // namespace brauer
