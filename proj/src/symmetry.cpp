#include "tropic/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tropic/errors.hpp"
#include "tropic/divisor_theory.hpp"

namespace tropic {

bool GraphAutomorphism::is_identity() const {
  for (auto& [v, w] : vperm)
    if (v != w) return false;
  for (auto& [e, f] : eperm)
    if (f.first != e || f.second) return false;
  return true;
}

GraphAutomorphism compose(const MetricGraph& model, const GraphAutomorphism& first,
                          const GraphAutomorphism& then) {
  (void)model;
  GraphAutomorphism r;
  for (auto& [v, w] : first.vperm) r.vperm[v] = then.vperm.at(w);
  for (auto& [e, f] : first.eperm) {
    auto g = then.eperm.at(f.first);
    r.eperm[e] = {g.first, f.second != g.second};
  }
  return r;
}

namespace {

struct LengthKey {
  bool infinite;
  Rational len;
  friend bool operator<(const LengthKey& a, const LengthKey& b) {
    if (a.infinite != b.infinite) return a.infinite < b.infinite;
    return a.len < b.len;
  }
  friend bool operator==(const LengthKey& a, const LengthKey& b) {
    return a.infinite == b.infinite && (a.infinite || a.len == b.len);
  }
};

LengthKey key_of(const Edge& e) { return LengthKey{e.infinite, e.infinite ? Rational() : e.length}; }

MetricGraph loopless_model(const MetricGraph& g, PointMap& map_out) {
  std::vector<Point> mids;
  for (auto& e : g.edges())
    if (e.is_loop()) mids.push_back(Point::on_edge(e.id, e.length / Rational(2)));
  auto ref = g.refine_at(mids);
  map_out = ref.map;
  return ref.graph;
}

struct AutoSearch {
  const MetricGraph& m;
  std::int64_t budget;
  std::vector<VertexId> order;
  std::map<VertexId, std::multiset<LengthKey>> star;
  // edges grouped per unordered vertex pair and length
  std::map<std::pair<VertexId, VertexId>, std::map<LengthKey, std::vector<EdgeId>>> bundles;
  std::map<VertexId, VertexId> vmap;
  std::set<VertexId> used;
  std::vector<GraphAutomorphism> out;

  explicit AutoSearch(const MetricGraph& model, std::int64_t b) : m(model), budget(b) {
    for (auto& v : m.vertices()) order.push_back(v.id);
    for (auto& v : m.vertices()) {
      std::multiset<LengthKey> s;
      for (auto& d : m.directions(v.id)) s.insert(key_of(m.edge(d.edge)));
      star[v.id] = std::move(s);
    }
    for (auto& e : m.edges()) {
      auto pr = std::minmax(e.tail, e.head);
      bundles[{pr.first, pr.second}][key_of(e)].push_back(e.id);
    }
  }

  bool compatible(const VertexId& v, const VertexId& w) const {
    const Vertex& a = m.vertex(v);
    const Vertex& b = m.vertex(w);
    if (a.genus != b.genus || a.infinite != b.infinite) return false;
    return star.at(v) == star.at(w);
  }

  bool pair_ok(const VertexId& v, const VertexId& w) const {
    // bundles between v and every assigned vertex must match in length profile
    for (auto& [u, img] : vmap) {
      auto p1 = std::minmax(v, u);
      auto p2 = std::minmax(w, img);
      auto b1 = bundles.find({p1.first, p1.second});
      auto b2 = bundles.find({p2.first, p2.second});
      std::size_t n1 = 0, n2 = 0;
      if (b1 != bundles.end())
        for (auto& [k, es] : b1->second) n1 += es.size();
      if (b2 != bundles.end())
        for (auto& [k, es] : b2->second) n2 += es.size();
      if (n1 != n2) return false;
      if (b1 != bundles.end() && b2 != bundles.end()) {
        if (b1->second.size() != b2->second.size()) return false;
        auto i1 = b1->second.begin();
        auto i2 = b2->second.begin();
        for (; i1 != b1->second.end(); ++i1, ++i2)
          if (!(i1->first == i2->first) || i1->second.size() != i2->second.size()) return false;
      }
    }
    return true;
  }

  void emit_edge_maps(std::size_t /*unused*/) {
    // enumerate, per bundle, every bijection between matched length classes
    std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> classes;
    std::set<EdgeId> done;
    for (auto& e : m.edges()) {
      if (done.count(e.id)) continue;
      auto pr = std::minmax(e.tail, e.head);
      auto& src = bundles.at({pr.first, pr.second}).at(key_of(e));
      for (auto& id : src) done.insert(id);
      auto ipr = std::minmax(vmap.at(e.tail), vmap.at(e.head));
      auto it = bundles.find({ipr.first, ipr.second});
      if (it == bundles.end()) return;
      auto jt = it->second.find(key_of(e));
      if (jt == it->second.end() || jt->second.size() != src.size()) return;
      classes.push_back({src, jt->second});
    }
    // iterate over products of per-class bijections
    std::vector<std::vector<EdgeId>> arrangements(classes.size());
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
      if (ci == classes.size()) {
        GraphAutomorphism a;
        a.vperm = vmap;
        for (std::size_t i = 0; i < classes.size(); ++i) {
          for (std::size_t j = 0; j < classes[i].first.size(); ++j) {
            const Edge& src = m.edge(classes[i].first[j]);
            const Edge& dst = m.edge(arrangements[i][j]);
            bool reversed = vmap.at(src.tail) != dst.tail;
            a.eperm[src.id] = {dst.id, reversed};
          }
        }
        out.push_back(std::move(a));
        if ((std::int64_t)out.size() > budget)
          throw resource_error("automorphism budget exceeded");
        return;
      }
      std::vector<EdgeId> arr = classes[ci].second;
      std::sort(arr.begin(), arr.end());
      do {
        arrangements[ci] = arr;
        rec(ci + 1);
      } while (std::next_permutation(arr.begin(), arr.end()));
    };
    rec(0);
  }

  void backtrack(std::size_t i) {
    if (i == order.size()) {
      emit_edge_maps(0);
      return;
    }
    const VertexId& v = order[i];
    for (auto& w : m.vertices()) {
      if (used.count(w.id) || !compatible(v, w.id) || !pair_ok(v, w.id)) continue;
      vmap[v] = w.id;
      used.insert(w.id);
      backtrack(i + 1);
      vmap.erase(v);
      used.erase(w.id);
    }
  }
};

}  // namespace

AutomorphismGroup automorphisms(const MetricGraph& g, std::int64_t max_elements) {
  AutomorphismGroup G;
  G.model = loopless_model(g, G.to_model);
  AutoSearch search(G.model, max_elements);
  search.backtrack(0);
  G.elements = std::move(search.out);
  std::sort(G.elements.begin(), G.elements.end());
  // identity first
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    if (G.elements[i].is_identity()) {
      std::swap(G.elements[0], G.elements[i]);
      break;
    }
  }
  return G;
}

std::vector<FixedMidpoint> fixed_midpoints(const MetricGraph& model,
                                           const std::vector<GraphAutomorphism>& H) {
  std::vector<FixedMidpoint> out;
  for (auto& e : model.edges()) {
    bool flipped = false;
    std::int64_t stab = 0, rot = 0;
    for (auto& h : H) {
      auto it = h.eperm.find(e.id);
      if (it == h.eperm.end()) throw domain_error("automorphism does not cover edge " + e.id);
      if (it->second.first == e.id) {
        ++stab;
        if (it->second.second)
          flipped = true;
        else
          ++rot;
      }
    }
    if (flipped) {
      if (e.infinite) throw domain_error("internal: infinite edge cannot be reversed");
      out.push_back(FixedMidpoint{Point::on_edge(e.id, e.length / Rational(2)), e.id, stab, rot});
    }
  }
  return out;
}

namespace {

std::vector<GraphAutomorphism> closure(const MetricGraph& model,
                                       std::vector<GraphAutomorphism> gens,
                                       std::int64_t max_elements = 100000) {
  GraphAutomorphism id;
  for (auto& v : model.vertices()) id.vperm[v.id] = v.id;
  for (auto& e : model.edges()) id.eperm[e.id] = {e.id, false};
  std::set<GraphAutomorphism> group{id};
  std::vector<GraphAutomorphism> frontier{id};
  for (auto& g : gens)
    if (group.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<GraphAutomorphism> next;
    for (auto& a : frontier) {
      for (auto& g : gens) {
        GraphAutomorphism c = compose(model, a, g);
        if (group.insert(c).second) {
          next.push_back(c);
          if ((std::int64_t)group.size() > max_elements)
            throw resource_error("group closure budget exceeded");
        }
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

GraphAutomorphism extend_to_refinement(const MetricGraph& /*model*/, const PointMap& ref,
                                       const GraphAutomorphism& h) {
  GraphAutomorphism r;
  r.vperm = h.vperm;
  for (auto& [e, img] : h.eperm) {
    auto se = ref.splits().find(e);
    auto sf = ref.splits().find(img.first);
    bool esplit = se != ref.splits().end();
    bool fsplit = sf != ref.splits().end();
    if (esplit != fsplit) throw domain_error("internal: refinement does not respect the action");
    if (!esplit) {
      r.eperm[e] = img;
      continue;
    }
    const auto& ep = se->second.pieces;
    const auto& fp = sf->second.pieces;
    if (ep.size() != 2 || fp.size() != 2)
      throw domain_error("internal: midpoint refinement expected");
    if (!img.second) {
      r.eperm[ep[0].id] = {fp[0].id, false};
      r.eperm[ep[1].id] = {fp[1].id, false};
    } else {
      r.eperm[ep[0].id] = {fp[1].id, true};
      r.eperm[ep[1].id] = {fp[0].id, true};
    }
    r.vperm[se->second.cuts[0]] = sf->second.cuts[0];
  }
  return r;
}

}  // namespace

QuotientResult quotient(const MetricGraph& model, const std::vector<GraphAutomorphism>& gens,
                        std::int64_t char_p) {
  std::vector<GraphAutomorphism> group = closure(model, gens);

  // refine at W_H so no element reverses an edge; the folded midpoints
  // acquire stabilizers of order two, so this needs odd characteristic
  auto W = fixed_midpoints(model, group);
  if (char_p == 2 && !W.empty())
    throw domain_error("non-tame stabilizer: folded midpoints in characteristic 2");
  std::vector<Point> mids;
  for (auto& w : W) mids.push_back(w.point);
  auto ref = model.refine_at(mids);
  MetricGraph rm = ref.graph;
  std::vector<GraphAutomorphism> rgroup;
  for (auto& h : group) rgroup.push_back(extend_to_refinement(model, ref.map, h));
  for (auto& h : rgroup)
    for (auto& [e, f] : h.eperm)
      if (f.first == e && f.second)
        throw domain_error("internal: reversal survived midpoint refinement");

  QuotientResult out;
  out.refined_model = rm;
  out.refinement = ref.map;
  out.group_order = (std::int64_t)rgroup.size();

  auto vorbit = [&](const VertexId& v) {
    VertexId rep = v;
    for (auto& h : rgroup) rep = std::min(rep, h.vperm.at(v));
    return rep;
  };
  auto eorbit = [&](const EdgeId& e) {
    EdgeId rep = e;
    for (auto& h : rgroup) rep = std::min(rep, h.eperm.at(e).first);
    return rep;
  };
  auto stab_order = [&](const EdgeId& e) {
    std::int64_t c = 0;
    for (auto& h : rgroup)
      if (h.eperm.at(e).first == e) ++c;
    return c;
  };

  GraphBuilder qb;
  std::set<VertexId> vreps;
  for (auto& v : rm.vertices()) {
    VertexId rep = vorbit(v.id);
    if (vreps.insert(rep).second) qb.vertex(rep, 0, rm.vertex(rep).infinite);
  }
  std::set<EdgeId> ereps;
  for (auto& e : rm.edges()) {
    EdgeId rep = eorbit(e.id);
    if (!ereps.insert(rep).second) continue;
    const Edge& re = rm.edge(rep);
    std::int64_t st = stab_order(rep);
    if (char_p > 0 && st % char_p == 0)
      throw domain_error("non-tame stabilizer of order " + std::to_string(st) +
                         " in characteristic " + std::to_string(char_p));
    if (re.infinite)
      qb.infinite_edge(rep, vorbit(re.tail), vorbit(re.head));
    else
      qb.edge(rep, vorbit(re.tail), vorbit(re.head), re.length * Rational(st));
  }
  out.graph = qb.build();

  HarmonicMorphism& pr = out.projection;
  pr.source = rm;
  pr.target = out.graph;
  for (auto& v : rm.vertices()) pr.vertex_map[v.id] = vorbit(v.id);
  for (auto& e : rm.edges()) {
    EdgeId rep = eorbit(e.id);
    bool reversed = false;
    for (auto& h : rgroup) {
      if (h.eperm.at(e.id).first == rep) {
        reversed = h.eperm.at(e.id).second;
        break;
      }
    }
    pr.edge_map[e.id] = EdgeAction::mapped(rep, stab_order(rep), reversed);
  }
  MorphismReport rep = require_harmonic(pr);
  if (!rm.edges().empty() && rep.degree != out.group_order)
    throw domain_error("internal: quotient projection degree != group order");
  return out;
}

HyperellipticSearch hyperelliptic_involution(const MetricGraph& g) {
  MetricGraph gm = g.minimize();
  if (gm.genus_data().genus < 2) throw domain_error("hyperelliptic theory requires genus >= 2");
  AutomorphismGroup G = automorphisms(gm);
  auto bridges = G.model.bridge_edges();

  HyperellipticSearch out;
  out.minimal_model = G.model;
  std::vector<GraphAutomorphism> found;
  for (auto& s : G.elements) {
    if (!compose(G.model, s, s).is_identity()) continue;
    bool fixes_genus = true;
    for (auto& v : G.model.vertices())
      if (v.genus > 0 && s.vperm.at(v.id) != v.id) fixes_genus = false;
    if (!fixes_genus) continue;
    bool fixes_bridges = true;
    for (auto& b : bridges) {
      auto im = s.eperm.at(b);
      if (im.first != b || im.second) fixes_bridges = false;
    }
    if (!fixes_bridges) continue;
    QuotientResult q = quotient(G.model, {s}, 0);
    if (q.graph.finite_part().genus_data().first_betti != 0) continue;
    found.push_back(s);
  }
  if (found.size() > 1) throw domain_error("internal: hyperelliptic involution is not unique");
  if (!found.empty()) {
    out.involution = found.front();
    out.hyperelliptic = true;
  }
  return out;
}

HyperellipticSearch is_hyperelliptic(const MetricGraph& g) {
  HyperellipticSearch out = hyperelliptic_involution(g);
  if (!out.hyperelliptic) return out;
  VertexId p = out.minimal_model.vertices().front().id;
  Divisor D;
  D.add(Point::vertex(p), 1);
  D.add(Point::vertex(out.involution->vperm.at(p)), 1);
  out.weighted_rank_check = weighted_rank(out.minimal_model, D);
  return out;
}

HyperellipticLiftReport hyperelliptic_liftable(const MetricGraph& g) {
  HyperellipticSearch hs = hyperelliptic_involution(g);
  if (!hs.hyperelliptic) throw domain_error("not hyperelliptic");
  const GraphAutomorphism& s = *hs.involution;
  const MetricGraph& m = hs.minimal_model;
  auto bridges = m.bridge_edges();

  HyperellipticLiftReport rep;
  rep.liftable = true;
  rep.kappa_equals_bridges = true;
  for (auto& v : m.vertices()) {
    HyperellipticLiftReport::PerVertex pv;
    pv.vertex = v.id;
    pv.genus = v.genus;
    if (s.vperm.at(v.id) == v.id) {
      for (auto& d : m.directions(v.id)) {
        auto im = s.eperm.at(d.edge);
        if (im.first == d.edge && !im.second) ++pv.kappa;
      }
    }
    for (auto& d : m.directions(v.id))
      if (bridges.count(d.edge)) ++pv.bridge_count;
    pv.ok = 2 * pv.genus >= pv.kappa - 2;
    if (!pv.ok) rep.liftable = false;
    if (pv.kappa != pv.bridge_count) rep.kappa_equals_bridges = false;
    rep.vertices.push_back(std::move(pv));
  }
  return rep;
}

}  // namespace tropic
