#include "tropic/harmonic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tropic/errors.hpp"

namespace tropic {

const VertexId& HarmonicMorphism::image_of(const VertexId& v) const {
  auto it = vertex_map.find(v);
  if (it == vertex_map.end()) throw domain_error("vertex " + v + " has no image");
  return it->second;
}

const EdgeAction& HarmonicMorphism::action(const EdgeId& e) const {
  auto it = edge_map.find(e);
  if (it == edge_map.end()) throw domain_error("edge " + e + " has no image data");
  return it->second;
}

Point HarmonicMorphism::apply(const Point& raw) const {
  Point p = source.normalized(raw);
  if (p.kind == Point::AtVertex) return Point::vertex(image_of(p.id));
  const EdgeAction& a = action(p.id);
  if (a.contracted) return Point::vertex(a.contracted_to);
  const Edge& f = target.edge(a.image);
  Rational pos = p.offset * Rational(a.degree);
  if (a.reversed) pos = f.length - pos;
  return target.normalized(Point::on_edge(f.id, pos));
}

std::string MorphismReport::str() const {
  if (ok()) return "harmonic, degree " + std::to_string(degree);
  std::ostringstream os;
  for (auto& v : violations) os << v.code << ": " << v.detail << "\n";
  return os.str();
}

namespace {

// Target tangent direction hit by a source direction (e, end).
std::pair<EdgeId, int> image_direction(const EdgeAction& a, int end) {
  return {a.image, a.reversed ? 1 - end : end};
}

}  // namespace

MorphismReport validate_morphism(const HarmonicMorphism& phi) {
  MorphismReport rep;
  const MetricGraph& S = phi.source;
  const MetricGraph& T = phi.target;
  auto bad = [&rep](const std::string& code, const std::string& detail) {
    rep.violations.push_back({code, detail});
  };

  for (auto& v : S.validate().violations) bad("source " + v.code, v.detail);
  for (auto& v : T.validate().violations) bad("target " + v.code, v.detail);
  if (!rep.ok()) return rep;

  for (auto& v : S.vertices()) {
    auto it = phi.vertex_map.find(v.id);
    if (it == phi.vertex_map.end())
      bad("missing vertex image", v.id);
    else if (!T.has_vertex(it->second))
      bad("unknown target vertex", it->second + " (image of " + v.id + ")");
  }
  for (auto& e : S.edges()) {
    if (!phi.edge_map.count(e.id)) bad("missing edge image", e.id);
  }
  for (auto& [e, a] : phi.edge_map) {
    if (!S.has_edge(e)) bad("unknown source edge", e);
  }
  if (!rep.ok()) return rep;

  for (auto& e : S.edges()) {
    const EdgeAction& a = phi.action(e.id);
    const VertexId& vt = phi.image_of(e.tail);
    const VertexId& vh = phi.image_of(e.head);
    if (a.contracted) {
      if (!T.has_vertex(a.contracted_to)) {
        bad("unknown target vertex", a.contracted_to);
        continue;
      }
      if (vt != a.contracted_to || vh != a.contracted_to)
        bad("bad contraction", "edge " + e.id + " endpoints do not map to " + a.contracted_to);
      continue;
    }
    if (!T.has_edge(a.image)) {
      bad("unknown target edge", a.image);
      continue;
    }
    if (a.degree < 1) bad("bad expansion factor", "edge " + e.id);
    const Edge& f = T.edge(a.image);
    const VertexId& ft = a.reversed ? f.head : f.tail;
    const VertexId& fh = a.reversed ? f.tail : f.head;
    if (!(vt == ft && vh == fh) && !e.is_loop())
      bad("endpoint mismatch", "edge " + e.id + " -> " + f.id);
    if (e.is_loop() && (!f.is_loop() || vt != f.tail))
      bad("endpoint mismatch", "loop " + e.id + " -> " + f.id);
    if (e.infinite != f.infinite) {
      bad("length mismatch", "edge " + e.id + " and image " + f.id + " disagree on finiteness");
    } else if (!e.infinite && f.length != e.length * Rational(a.degree)) {
      bad("length mismatch",
          "edge " + e.id + ": image length " + f.length.str() + " != " +
              std::to_string(a.degree) + " * " + e.length.str());
    }
  }
  if (!rep.ok()) return rep;

  // harmonicity at every source vertex
  for (auto& v : S.vertices()) {
    const VertexId& p = phi.image_of(v.id);
    std::map<std::pair<EdgeId, int>, std::int64_t> sums;
    for (auto& d : T.directions(p)) sums[{d.edge, d.end}] = 0;
    for (auto& d : S.directions(v.id)) {
      const EdgeAction& a = phi.action(d.edge);
      if (a.contracted) continue;
      auto key = image_direction(a, d.end);
      auto it = sums.find(key);
      if (it == sums.end()) {
        bad("direction mismatch", "edge " + d.edge + " at " + v.id + " maps off the target star");
        continue;
      }
      it->second += a.degree;
    }
    std::int64_t dv = sums.empty() ? 0 : sums.begin()->second;
    for (auto& [dir, s] : sums) {
      if (s != dv) {
        bad("not harmonic", "vertex " + v.id + ": direction sums " + std::to_string(dv) + " vs " +
                                std::to_string(s) + " toward " + dir.first);
        dv = std::max(dv, s);
      }
    }
    rep.local_degree[v.id] = sums.empty() ? 0 : dv;
  }
  if (!rep.ok()) return rep;
  rep.harmonic = true;

  // global degree over target vertices and edges
  std::map<VertexId, std::int64_t> vdeg;
  std::map<EdgeId, std::int64_t> edeg;
  for (auto& v : T.vertices()) vdeg[v.id] = 0;
  for (auto& e : T.edges()) edeg[e.id] = 0;
  for (auto& v : S.vertices()) vdeg[phi.image_of(v.id)] += rep.local_degree[v.id];
  for (auto& e : S.edges()) {
    const EdgeAction& a = phi.action(e.id);
    if (!a.contracted) edeg[a.image] += a.degree;
  }
  std::int64_t deg = vdeg.begin()->second;
  rep.degree_constant = true;
  for (auto& [p, d] : vdeg)
    if (d != deg) rep.degree_constant = false;
  for (auto& [f, d] : edeg)
    if (d != deg) rep.degree_constant = false;
  rep.degree = deg;
  rep.surjective = true;
  for (auto& [f, d] : edeg)
    if (d == 0) rep.surjective = false;
  for (auto& [p, d] : vdeg)
    if (d == 0) rep.surjective = false;
  for (auto& [e, a] : phi.edge_map)
    if (a.contracted) rep.has_contracted = true;
  rep.finite = !rep.has_contracted && rep.surjective;
  if (!rep.degree_constant)
    bad("degree not constant", "fiber degree sums differ across the target");
  rep.harmonic = rep.ok();
  return rep;
}

MorphismReport require_harmonic(const HarmonicMorphism& phi) {
  MorphismReport rep = validate_morphism(phi);
  if (!rep.ok()) throw domain_error("morphism is not harmonic:\n" + rep.str());
  return rep;
}

RamificationData ramification(const HarmonicMorphism& phi) {
  MorphismReport rep = require_harmonic(phi);
  const MetricGraph& S = phi.source;
  const MetricGraph& T = phi.target;
  RamificationData out;
  out.finite = rep.finite;
  out.effective = true;
  for (auto& v : S.vertices()) {
    std::int64_t d = rep.local_degree.at(v.id);
    std::int64_t gsrc = v.genus;
    std::int64_t gtgt = T.vertex(phi.image_of(v.id)).genus;
    std::int64_t sum_dv = 0;
    std::int64_t contracted_dirs = 0;
    for (auto& dir : S.directions(v.id)) {
      const EdgeAction& a = phi.action(dir.edge);
      if (a.contracted)
        ++contracted_dirs;
      else
        sum_dv += a.degree;
    }
    std::int64_t nd = (std::int64_t)S.directions(v.id).size();
    std::int64_t R = d * (2 - 2 * gtgt) - (2 - 2 * gsrc) - (sum_dv - nd);
    if (R != 0) out.R.add(Point::vertex(v.id), R);
    if (!v.infinite && d > 0) {
      std::int64_t r = R - contracted_dirs;
      out.ram[v.id] = r;
      if (r < 0) out.effective = false;
    }
  }
  out.etale = out.R.is_zero();
  out.generically_etale = true;
  for (auto& [p, c] : out.R.entries())
    if (!(p.kind == Point::AtVertex && S.vertex(p.id).infinite)) out.generically_etale = false;

  // Riemann-Hurwitz: K_src = phi^*(K_tgt) + R, with the pullback taken
  // formally at vertices.
  Divisor K_src = S.genus_data().canonical;
  Divisor K_tgt = T.genus_data().canonical;
  Divisor pulled;
  for (auto& v : S.vertices()) {
    std::int64_t c = K_tgt.coeff(Point::vertex(phi.image_of(v.id)));
    if (c != 0 && rep.local_degree.at(v.id) != 0)
      pulled.add(Point::vertex(v.id), c * rep.local_degree.at(v.id));
  }
  if (!(K_src == pulled + out.R))
    throw domain_error("Riemann-Hurwitz identity failed; morphism data inconsistent");
  return out;
}

std::vector<ContractedComponent> contracted_set(const HarmonicMorphism& phi) {
  MorphismReport rep = require_harmonic(phi);
  const MetricGraph& S = phi.source;
  std::vector<ContractedComponent> comps;
  std::set<EdgeId> contracted;
  for (auto& [e, a] : phi.edge_map)
    if (a.contracted) contracted.insert(e);
  std::set<VertexId> interior;  // vertices with every direction contracted
  for (auto& v : S.vertices()) {
    auto& ds = S.directions(v.id);
    if (ds.empty()) {
      if (rep.local_degree.at(v.id) == 0) interior.insert(v.id);
      continue;
    }
    bool all = true;
    for (auto& d : ds)
      if (!phi.action(d.edge).contracted) all = false;
    if (all) interior.insert(v.id);
  }
  std::set<EdgeId> seen_e;
  std::set<VertexId> seen_v;
  for (auto& e0 : contracted) {
    if (seen_e.count(e0)) continue;
    ContractedComponent comp;
    comp.image = phi.action(e0).contracted_to;
    std::deque<EdgeId> q{e0};
    seen_e.insert(e0);
    while (!q.empty()) {
      EdgeId e = q.front();
      q.pop_front();
      comp.edges.push_back(e);
      const Edge& ed = S.edge(e);
      for (const VertexId& v : {ed.tail, ed.head}) {
        if (!interior.count(v) || seen_v.count(v)) continue;
        seen_v.insert(v);
        comp.vertices.push_back(v);
        for (auto& d : S.directions(v))
          if (contracted.count(d.edge) && seen_e.insert(d.edge).second) q.push_back(d.edge);
      }
    }
    comps.push_back(std::move(comp));
  }
  for (auto& v : interior) {
    if (seen_v.count(v)) continue;
    if (!S.directions(v).empty()) continue;  // reachable only for edgeless vertices
    ContractedComponent comp;
    comp.vertices.push_back(v);
    comp.image = phi.image_of(v);
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

std::map<VertexId, std::int64_t> local_degrees(const HarmonicMorphism& phi) {
  return require_harmonic(phi).local_degree;
}

}  // namespace

Divisor fiber_divisor(const HarmonicMorphism& phi, const Point& raw) {
  auto degs = local_degrees(phi);
  const MetricGraph& T = phi.target;
  Point x = T.normalized(raw);
  Divisor out;
  if (x.kind == Point::AtVertex) {
    for (auto& comp : contracted_set(phi))
      if (comp.image == x.id)
        throw domain_error("non-finite over point " + x.id);
    for (auto& v : phi.source.vertices())
      if (phi.image_of(v.id) == x.id && degs.at(v.id) > 0)
        out.add(Point::vertex(v.id), degs.at(v.id));
  } else {
    const Edge& f = T.edge(x.id);
    for (auto& e : phi.source.edges()) {
      const EdgeAction& a = phi.action(e.id);
      if (a.contracted || a.image != f.id) continue;
      Rational off = a.reversed ? (f.length - x.offset) / Rational(a.degree)
                                : x.offset / Rational(a.degree);
      out.add(Point::on_edge(e.id, off), a.degree);
    }
  }
  return out;
}

Divisor pullback(const HarmonicMorphism& phi, const Divisor& D) {
  Divisor out;
  for (auto& [p, c] : D.entries()) out = out + c * fiber_divisor(phi, p);
  return out;
}

Divisor pushforward(const HarmonicMorphism& phi, const Divisor& D) {
  Divisor out;
  for (auto& [p, c] : D.entries()) out.add(phi.apply(p), c);
  return out;
}

LocalProfiles local_profiles(const HarmonicMorphism& phi, const VertexId& pv) {
  auto degs = local_degrees(phi);
  LocalProfiles out;
  out.d = degs.at(pv);
  if (out.d == 0) throw domain_error("local degree is zero at " + pv);
  const MetricGraph& T = phi.target;
  const VertexId& p = phi.image_of(pv);
  std::vector<std::pair<EdgeId, int>> tdirs;
  for (auto& d : T.directions(p)) tdirs.push_back({d.edge, d.end});
  std::sort(tdirs.begin(), tdirs.end());
  for (auto& td : tdirs) {
    std::vector<std::int64_t> part;
    for (auto& d : phi.source.directions(pv)) {
      const EdgeAction& a = phi.action(d.edge);
      if (a.contracted) continue;
      if (image_direction(a, d.end) == td) part.push_back(a.degree);
    }
    std::sort(part.rbegin(), part.rend());
    out.profiles.push_back(std::move(part));
  }
  return out;
}

CompatibleMorphism refine_to_compatible(const MetricGraph& S, const MetricGraph& T,
                                        const std::map<VertexId, VertexId>& vm,
                                        const std::map<EdgeId, RawEdgeImage>& raw) {
  std::vector<Point> cuts;
  // walk validation and source cut offsets
  std::map<EdgeId, std::vector<std::pair<Rational, std::size_t>>> edge_cuts;  // offset, path index
  for (auto& e : S.edges()) {
    auto it = raw.find(e.id);
    if (it == raw.end()) throw domain_error("edge " + e.id + " has no image data");
    const RawEdgeImage& r = it->second;
    if (r.contracted) continue;
    if (r.path.empty()) throw domain_error("empty image path for edge " + e.id);
    if (r.degree < 1) throw domain_error("bad expansion factor on edge " + e.id);
    VertexId cur = vm.at(e.tail);
    Rational run(0);
    for (std::size_t i = 0; i < r.path.size(); ++i) {
      const Edge& f = T.edge(r.path[i].first);
      bool rev = r.path[i].second;
      const VertexId& start = rev ? f.head : f.tail;
      const VertexId& stop = rev ? f.tail : f.head;
      if (start != cur) throw domain_error("image path of edge " + e.id + " is not a walk");
      cur = stop;
      if (f.infinite) {
        if (i + 1 != r.path.size()) throw domain_error("infinite edge inside image path of " + e.id);
      } else if (i + 1 < r.path.size()) {
        run += f.length;
        edge_cuts[e.id].push_back({run / Rational(r.degree), i});
      }
    }
    if (cur != vm.at(e.head)) throw domain_error("image path of edge " + e.id + " ends at the wrong vertex");
    const Edge& last = T.edge(r.path.back().first);
    if (e.infinite != last.infinite)
      throw domain_error("length mismatch on edge " + e.id + " (finite/infinite)");
    if (!e.infinite) {
      Rational total = run + last.length;
      if (total != e.length * Rational(r.degree))
        throw domain_error("length mismatch on edge " + e.id + ": path length " + total.str() +
                           " != " + std::to_string(r.degree) + " * " + e.length.str());
    }
    for (auto& [off, idx] : edge_cuts[e.id]) cuts.push_back(Point::on_edge(e.id, off));
  }

  auto sref = S.refine_at(cuts);
  CompatibleMorphism out;
  HarmonicMorphism& phi = out.phi;
  out.source_map = sref.map;
  phi.source = sref.graph;
  phi.target = T;
  phi.vertex_map = vm;
  for (auto& e : S.edges()) {
    const RawEdgeImage& r = raw.at(e.id);
    if (r.contracted) {
      VertexId to = r.contracted_to.empty() ? vm.at(e.tail) : r.contracted_to;
      auto s = sref.map.splits().find(e.id);
      if (s == sref.map.splits().end()) {
        phi.edge_map[e.id] = EdgeAction::contract(to);
      } else {
        for (auto& piece : s->second.pieces) phi.edge_map[piece.id] = EdgeAction::contract(to);
        for (auto& cv : s->second.cuts) phi.vertex_map[cv] = to;
      }
      continue;
    }
    auto s = sref.map.splits().find(e.id);
    if (s == sref.map.splits().end()) {
      phi.edge_map[e.id] = EdgeAction::mapped(r.path[0].first, r.degree, r.path[0].second);
      continue;
    }
    for (std::size_t i = 0; i < s->second.pieces.size(); ++i)
      phi.edge_map[s->second.pieces[i].id] =
          EdgeAction::mapped(r.path[i].first, r.degree, r.path[i].second);
    for (std::size_t i = 0; i < s->second.cuts.size(); ++i) {
      const Edge& f = T.edge(r.path[i].first);
      phi.vertex_map[s->second.cuts[i]] = r.path[i].second ? f.tail : f.head;
    }
  }
  require_harmonic(phi);
  return out;
}

RefinedMorphism refine_morphism_at_targets(const HarmonicMorphism& phi,
                                           const std::vector<Point>& pts) {
  RefinedMorphism out;
  auto tref = phi.target.refine_at(pts);
  out.target_map = tref.map;

  std::vector<Point> scuts;
  for (auto& e : phi.source.edges()) {
    const EdgeAction& a = phi.action(e.id);
    if (a.contracted) continue;
    auto s = tref.map.splits().find(a.image);
    if (s == tref.map.splits().end()) continue;
    const Edge& f = phi.target.edge(a.image);
    for (std::size_t i = 0; i + 1 < s->second.pieces.size(); ++i) {
      Rational c = *s->second.pieces[i].end;
      Rational so = a.reversed ? (f.length - c) / Rational(a.degree) : c / Rational(a.degree);
      scuts.push_back(Point::on_edge(e.id, so));
    }
  }
  auto sref = phi.source.refine_at(scuts);
  out.source_map = sref.map;

  HarmonicMorphism& np = out.phi;
  np.source = sref.graph;
  np.target = tref.graph;
  np.vertex_map = phi.vertex_map;
  for (auto& e : phi.source.edges()) {
    const EdgeAction& a = phi.action(e.id);
    auto s = sref.map.splits().find(e.id);
    if (a.contracted) {
      if (s == sref.map.splits().end()) {
        np.edge_map[e.id] = a;
      } else {
        for (auto& piece : s->second.pieces) np.edge_map[piece.id] = a;
        for (auto& cv : s->second.cuts) np.vertex_map[cv] = a.contracted_to;
      }
      continue;
    }
    auto t = tref.map.splits().find(a.image);
    if (t == tref.map.splits().end()) {
      np.edge_map[e.id] = a;
      continue;
    }
    const auto& fpieces = t->second.pieces;
    const auto& fcuts = t->second.cuts;
    const std::size_t n = fpieces.size();
    if (s == sref.map.splits().end() || s->second.pieces.size() != n)
      throw domain_error("internal: source split does not mirror target split");
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = a.reversed ? n - 1 - i : i;
      np.edge_map[s->second.pieces[i].id] = EdgeAction::mapped(fpieces[j].id, a.degree, a.reversed);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t j = a.reversed ? n - 2 - i : i;
      np.vertex_map[s->second.cuts[i]] = fcuts[j];
    }
  }
  require_harmonic(np);
  return out;
}

namespace {

// Exact distances from a finite vertex through finite edges (tree use).
std::map<VertexId, Rational> tree_distances(const MetricGraph& g, const VertexId& from) {
  std::map<VertexId, Rational> dist;
  dist[from] = Rational(0);
  std::deque<VertexId> q{from};
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (auto& d : g.directions(v)) {
      const Edge& e = g.edge(d.edge);
      if (e.infinite) continue;
      VertexId w = g.other_end(e, v, d.end);
      if (!dist.count(w)) {
        dist[w] = dist[v] + e.length;
        q.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

FiberEquivalence fibers_equivalent_check(const HarmonicMorphism& phi, const Point& x1raw,
                                         const Point& x2raw) {
  MorphismReport rep = require_harmonic(phi);
  if (!rep.finite) throw domain_error("morphism is not finite");
  if (phi.target.genus_data().first_betti != 0) throw domain_error("target is not a tree");
  Point x1 = phi.target.normalized(x1raw);
  Point x2 = phi.target.normalized(x2raw);
  for (const Point& x : {x1, x2})
    if (x.kind == Point::AtVertex && phi.target.vertex(x.id).infinite)
      throw domain_error("fiber comparison at an infinite point");

  auto ref = refine_morphism_at_targets(phi, {x1, x2});
  const HarmonicMorphism& rphi = ref.phi;
  VertexId v1 = ref.target_map.forward(x1).id;
  VertexId v2 = ref.target_map.forward(x2).id;

  auto d1 = tree_distances(rphi.target, v1);
  auto d2 = tree_distances(rphi.target, v2);
  Rational L = d1.at(v2);

  // lambda(z) = distance from x1 of the projection of z onto [x1, x2]
  std::map<VertexId, Rational> lambda;
  for (auto& v : rphi.target.vertices()) {
    if (v.infinite) continue;
    lambda[v.id] = (d1.at(v.id) + L - d2.at(v.id)) / Rational(2);
  }
  for (auto& v : rphi.target.vertices()) {
    if (!v.infinite) continue;
    const auto& ds = rphi.target.directions(v.id);
    const Edge& e = rphi.target.edge(ds[0].edge);
    lambda[v.id] = lambda.at(e.tail);  // rays sit entirely off the path
  }

  FiberEquivalence out;
  out.witness.model = rphi.source;
  for (auto& v : rphi.source.vertices())
    if (!v.infinite) out.witness.values[v.id] = lambda.at(rphi.image_of(v.id));

  Divisor want = fiber_divisor(rphi, Point::vertex(v1)) - fiber_divisor(rphi, Point::vertex(v2));
  Divisor got = principal_divisor(out.witness);
  out.equivalent = (got == want);
  return out;
}

HarmonicMorphism identity_morphism(const MetricGraph& g) {
  HarmonicMorphism phi;
  phi.source = g;
  phi.target = g;
  for (auto& v : g.vertices()) phi.vertex_map[v.id] = v.id;
  for (auto& e : g.edges()) phi.edge_map[e.id] = EdgeAction::mapped(e.id, 1, false);
  return phi;
}

}  // namespace tropic
