#include "tropic/divisor_theory.hpp"

#include <algorithm>
#include <map>

#include "tropic/errors.hpp"
#include "tropic/subdivision.hpp"

namespace tropic {

Rational RationalFunction::value_at(const VertexId& v) const {
  auto it = values.find(v);
  if (it == values.end()) throw domain_error("rational function has no value at vertex " + v);
  return it->second;
}

Divisor principal_divisor(const RationalFunction& f) {
  const MetricGraph& g = f.model;
  Divisor div;
  for (auto& v : g.vertices()) {
    if (v.infinite) {
      // single edge, slope recorded away from the finite end
      const auto& ds = g.directions(v.id);
      if (ds.size() != 1) throw domain_error("infinite vertex with valence != 1");
      div.add(Point::vertex(v.id), -f.ray_slope(ds[0].edge));
      continue;
    }
    std::int64_t out = 0;
    for (auto& d : g.directions(v.id)) {
      const Edge& e = g.edge(d.edge);
      if (e.infinite) {
        out += f.ray_slope(e.id);
        continue;
      }
      Rational delta = f.value_at(d.end == 0 ? e.head : e.tail) - f.value_at(v.id);
      Rational slope = delta / e.length;
      if (!slope.is_integer())
        throw domain_error("non-integer slope on edge " + e.id + ": " + slope.str());
      out += slope.as_integer();
    }
    if (out != 0) div.add(Point::vertex(v.id), out);
  }
  return div;
}

namespace {

void require_finite_support(const MetricGraph& g, const Divisor& d) {
  for (auto& [p, c] : d.entries())
    if (p.kind == Point::AtVertex && g.vertex(p.id).infinite)
      throw domain_error("divisor supported at infinite vertex " + p.id);
}

// Shared preprocessing: refine the graph so every involved point is a
// vertex, drop the infinite tails, and build the unit-length model.
struct ReductionContext {
  MetricGraph refined;  // finite refined model
  Subdivision sub;
  PointMap map;  // original -> refined (before the finite-part cut)

  static ReductionContext build(const MetricGraph& g, const std::vector<Point>& pts) {
    ReductionContext ctx;
    auto ref = g.refine_at(pts);
    ctx.map = ref.map;
    ctx.refined = ref.graph.finite_part();
    ctx.sub = Subdivision::build(ctx.refined, {});
    return ctx;
  }

  std::vector<std::int64_t> chips(const Divisor& original) const {
    Divisor moved = map.forward(original);
    return sub.to_chips(refined, moved);
  }

  Divisor to_original(const std::vector<std::int64_t>& chips) const {
    return map.backward(sub.to_divisor(chips));
  }
};

std::vector<Point> support_points(const MetricGraph& g, const Divisor& d) {
  std::vector<Point> pts;
  for (auto& [p, c] : d.entries()) pts.push_back(g.normalized(p));
  return pts;
}

}  // namespace

Divisor reduce_divisor(const MetricGraph& g, const Divisor& D0, const Point& q0) {
  Divisor D = g.normalized(D0);
  require_finite_support(g, D);
  Point q = g.normalized(q0);
  auto pts = support_points(g, D);
  pts.push_back(q);
  auto ctx = ReductionContext::build(g, pts);
  int ql = ctx.sub.lattice_of(ctx.refined, ctx.map.forward(q));
  auto red = ctx.sub.reduce(ctx.chips(D), ql);
  return ctx.to_original(red);
}

bool is_linearly_equivalent(const MetricGraph& g, const Divisor& A0, const Divisor& B0) {
  Divisor A = g.normalized(A0), B = g.normalized(B0);
  require_finite_support(g, A);
  require_finite_support(g, B);
  if (A.degree() != B.degree()) return false;
  Point q = Point::vertex(g.lex_smallest_vertex());
  auto pts = support_points(g, A);
  for (auto& p : support_points(g, B)) pts.push_back(p);
  pts.push_back(q);
  auto ctx = ReductionContext::build(g, pts);
  int ql = ctx.sub.lattice_of(ctx.refined, ctx.map.forward(q));
  return ctx.sub.reduce(ctx.chips(A), ql) == ctx.sub.reduce(ctx.chips(B), ql);
}

namespace {

// Exact rank search.  Effective test divisors E run over the vertices of
// the refined model (a rank-determining set); multisets are enumerated in
// non-decreasing index order and memoized.
struct RankSearch {
  const Subdivision& sub;
  std::vector<int> candidates;  // lattice ids
  std::vector<std::int64_t> base;
  std::int64_t base_deg;
  int q;
  std::map<std::vector<int>, std::int64_t> memo;

  std::int64_t run(std::vector<int>& sub_idx) {
    if (base_deg - (std::int64_t)sub_idx.size() < 0) return -1;
    auto it = memo.find(sub_idx);
    if (it != memo.end()) return it->second;
    std::vector<std::int64_t> chips = base;
    for (int i : sub_idx) chips[candidates[i]] -= 1;
    auto red = sub.reduce(std::move(chips), q);
    std::int64_t result;
    if (std::any_of(red.begin(), red.end(), [](std::int64_t c) { return c < 0; })) {
      result = -1;
    } else {
      std::int64_t best = INT64_MAX;
      int start = sub_idx.empty() ? 0 : sub_idx.back();
      for (int i = start; i < (int)candidates.size(); ++i) {
        sub_idx.push_back(i);
        std::int64_t r = run(sub_idx);
        sub_idx.pop_back();
        best = std::min(best, r);
        if (best == -1) break;
      }
      result = best == INT64_MAX ? -1 : best + 1;
    }
    memo[sub_idx] = result;
    return result;
  }

  // Reconstruct a cheapest failing effective divisor along the memoized
  // minimum path.
  std::vector<int> witness_path() {
    std::vector<int> path;
    std::int64_t r = memo.at(path);
    while (r >= 0) {
      int start = path.empty() ? 0 : path.back();
      for (int i = start; i < (int)candidates.size(); ++i) {
        path.push_back(i);
        std::int64_t ri = run(path);
        if (ri == r - 1) {
          r = ri;
          break;
        }
        path.pop_back();
      }
    }
    return path;
  }
};

}  // namespace

RankResult rank(const MetricGraph& g, const Divisor& D0) {
  Divisor D = g.normalized(D0);
  require_finite_support(g, D);
  RankResult out;
  if (D.degree() < 0) {
    out.rank = -1;
    return out;
  }
  // candidate points must form a rank-determining set: vertices of a
  // LOOPLESS model containing supp(D), so split every chip-free loop at
  // its midpoint
  std::vector<Point> pts = support_points(g, D);
  for (auto& e : g.edges()) {
    if (!e.is_loop()) continue;
    bool cut = false;
    for (auto& p : pts)
      if (p.kind == Point::OnEdge && p.id == e.id) cut = true;
    if (!cut) pts.push_back(Point::on_edge(e.id, e.length / Rational(2)));
  }
  auto ctx = ReductionContext::build(g, pts);
  RankSearch search{ctx.sub, {}, ctx.chips(D), D.degree(), 0, {}};
  for (auto& v : ctx.refined.vertices()) search.candidates.push_back(ctx.sub.lattice_of_vertex(v.id));
  std::sort(search.candidates.begin(), search.candidates.end());
  search.q = search.candidates.front();
  std::vector<int> empty;
  out.rank = search.run(empty);
  if (out.rank >= 0) {
    Divisor w;
    for (int i : search.witness_path()) w.add(ctx.sub.point_of(search.candidates[i]), 1);
    out.witness = ctx.map.backward(w);
  }
  return out;
}

std::int64_t weighted_rank(const MetricGraph& g, const Divisor& D,
                           const Rational& virtual_loop_length) {
  GraphBuilder b(g.finite_part());
  MetricGraph fin = b.build();
  GraphBuilder out(fin);
  for (auto& v : fin.vertices()) {
    for (int i = 0; i < v.genus; ++i) {
      EdgeId id = fin.fresh_edge_id("virt:" + v.id + ":" + std::to_string(i));
      out.edge(id, v.id, v.id, virtual_loop_length);
    }
  }
  auto& vs = out.raw_vertices();
  for (auto& v : vs) v.genus = 0;
  MetricGraph sharp = out.build();
  return rank(sharp, g.normalized(D, /*slide_rays=*/true)).rank;
}

WedgeRankResult wedge_rank(const MetricGraph& g0, const Divisor& D0, const Point& cut0,
                           const std::optional<VertexId>& side_hint) {
  Divisor D = g0.normalized(D0);
  require_finite_support(g0, D);
  Point cut = g0.normalized(cut0);

  // make the cut a vertex, split loops at the cut so components are clean
  std::vector<Point> pts = support_points(g0, D);
  pts.push_back(cut);
  auto ref0 = g0.refine_at(pts);
  MetricGraph g = ref0.graph.finite_part();
  D = ref0.map.forward(D);
  cut = ref0.map.forward(cut);
  VertexId t = cut.id;
  {
    std::vector<Point> mids;
    for (auto& e : g.edges())
      if (e.is_loop() && e.tail == t) mids.push_back(Point::on_edge(e.id, e.length / Rational(2)));
    if (!mids.empty()) {
      auto ref1 = g.refine_at(mids);
      g = ref1.graph;
      D = ref1.map.forward(D);
    }
  }

  auto comps = g.components_without_vertex(t);
  if (comps.size() < 2) throw domain_error("point " + t + " is not a cut vertex");

  // piece 1: the component holding side_hint (or the smallest vertex id);
  // piece 2: the rest
  std::size_t first = 0;
  if (side_hint) {
    bool found = false;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i].count(*side_hint)) {
        first = i;
        found = true;
      }
    if (!found) throw domain_error("side hint " + *side_hint + " not found off the cut");
  } else {
    for (std::size_t i = 1; i < comps.size(); ++i)
      if (*comps[i].begin() < *comps[first].begin()) first = i;
  }

  auto make_piece = [&](const std::set<VertexId>& keep) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (auto& v : g.vertices())
      if (v.id == t || keep.count(v.id)) vs.push_back(v);
    for (auto& e : g.edges())
      if (keep.count(e.tail) || keep.count(e.head)) es.push_back(e);
    return MetricGraph::build(vs, es);
  };
  std::set<VertexId> side1 = comps[first];
  std::set<VertexId> side2;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != first) side2.insert(comps[i].begin(), comps[i].end());

  MetricGraph g1 = make_piece(side1);
  MetricGraph g2 = make_piece(side2);

  Divisor D1, D2;
  for (auto& [p, c] : D.entries()) {
    VertexId home = p.kind == Point::AtVertex ? p.id : g.edge(p.id).tail;
    if (home == t && p.kind == Point::OnEdge) home = g.edge(p.id).head;
    if (home == t || side1.count(home))
      D1.add(p, c);
    else
      D2.add(p, c);
  }

  WedgeRankResult out;
  Point t1 = Point::vertex(t);
  std::int64_t table_max = D.degree() + 1;
  if (table_max < 1) table_max = 1;
  std::int64_t g1_genus = g1.genus_data().first_betti;

  std::int64_t best = INT64_MAX;
  for (std::int64_t m = 0; m <= table_max; ++m) {
    // eta(m): least h (of either sign) with r_{G1}(D1 + h t) = m; the rank
    // is a nondecreasing unit-step function of h, so this is well defined
    std::optional<std::int64_t> eta;
    std::int64_t h_lo = -D1.degree();        // below this the degree is negative
    std::int64_t h_hi = g1_genus + m - D1.degree() + 1;  // rank >= deg - g forces it by here
    for (std::int64_t h = h_lo; h <= h_hi; ++h) {
      Divisor dh = D1;
      dh.add(t1, h);
      std::int64_t r1 = rank(g1, dh).rank;
      if (r1 == m) {
        eta = h;
        break;
      }
      if (r1 > m) break;
    }
    out.eta.push_back(eta);
    if (eta) {
      Divisor d2 = D2;
      d2.add(t1, -*eta);
      std::int64_t val = m + rank(g2, d2).rank;
      best = std::min(best, val);
    }
  }
  out.rank = best == INT64_MAX ? -1 : best;
  return out;
}

}  // namespace tropic
