#include "tropic/lifting.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tropic/errors.hpp"

namespace tropic {

std::string to_string(LiftVerdict v) {
  switch (v) {
    case LiftVerdict::liftable: return "liftable";
    case LiftVerdict::not_liftable: return "not-liftable";
    default: return "unknown";
  }
}

Point ModTrail::relocate(Point p) const {
  for (auto& s : steps) p = s.relocation.forward(p);
  return p;
}

Point ModTrail::retract(Point p) const {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) p = it->retract(p);
  return p;
}

Divisor ModTrail::retract(const Divisor& d) const {
  Divisor r;
  for (auto& [p, c] : d.entries()) r.add(retract(p), c);
  return r;
}

namespace {

bool is_tame(const HarmonicMorphism& phi, std::int64_t char_p) {
  if (char_p == 0) return true;
  for (auto& [e, a] : phi.edge_map)
    if (!a.contracted && a.degree % char_p == 0) return false;
  return true;
}

bool zd_shortcut(const HarmonicMorphism& phi, const VertexId& pv, const LocalProfiles& lp) {
  if (phi.source.vertex(pv).genus != 0) return false;
  if (phi.target.vertex(phi.image_of(pv)).genus != 0) return false;
  if (lp.profiles.size() != 2) return false;
  std::vector<std::int64_t> full{lp.d};
  return lp.profiles[0] == full && lp.profiles[1] == full;
}

}  // namespace

LiftCertificate liftability_certificate(const HarmonicMorphism& phi, std::int64_t char_p,
                                        const hurwitz::Budget& budget) {
  MorphismReport rep = require_harmonic(phi);
  if (!rep.finite) throw domain_error("liftability requires a finite harmonic morphism");
  if (!is_tame(phi, char_p))
    throw domain_error("wild edge degree in characteristic " + std::to_string(char_p));

  LiftCertificate cert;
  RamificationData ram = ramification(phi);
  if (!ram.effective) {
    cert.verdict = LiftVerdict::not_liftable;
    for (auto& [v, r] : ram.ram) {
      if (r >= 0) continue;
      VertexCertificate vc;
      vc.vertex = v;
      vc.d = rep.local_degree.at(v);
      vc.source_genus = phi.source.vertex(v).genus;
      vc.target_genus = phi.target.vertex(phi.image_of(v)).genus;
      vc.status = VertexCertificate::zero;
      vc.note = "ramification degree " + std::to_string(r) + " < 0";
      cert.vertices.push_back(std::move(vc));
      cert.reasons.push_back("not effective at " + v);
    }
    return cert;
  }

  bool any_zero = false, any_unknown = false;
  for (auto& v : phi.source.vertices()) {
    if (v.infinite) continue;
    LocalProfiles lp = local_profiles(phi, v.id);
    VertexCertificate vc;
    vc.vertex = v.id;
    vc.d = lp.d;
    vc.source_genus = v.genus;
    vc.target_genus = phi.target.vertex(phi.image_of(v.id)).genus;
    vc.profiles = lp.profiles;

    bool trivial = true;
    for (auto& part : lp.profiles)
      for (auto p : part)
        if (p != 1) trivial = false;
    // after the effectiveness gate the local R equals r_{p'} >= 0, so the
    // all-trivial covering set is nonempty outright
    if (trivial) {
      vc.status = VertexCertificate::shortcut;
      vc.note = "trivial profiles";
    } else if (zd_shortcut(phi, v.id, lp)) {
      vc.status = VertexCertificate::shortcut;
      vc.note = "z^d covering";
    } else if (char_p == 0 || char_p > lp.d) {
      hurwitz::Query q;
      q.d = lp.d;
      q.g = vc.target_genus;
      q.gprime = vc.source_genus;
      for (auto& part : lp.profiles) q.profiles.push_back(hurwitz::Partition::of(part));
      if (hurwitz::compute_R(q) < 0) {
        vc.status = VertexCertificate::zero;
        vc.note = "local R < 0";
      } else {
        auto res = hurwitz::hurwitz_number(q, budget);
        vc.hurwitz_value = res.value;
        vc.status = res.raw_count != 0 ? VertexCertificate::nonzero : VertexCertificate::zero;
      }
    } else {
      vc.status = VertexCertificate::unknown_char;
      vc.note = "no criterion for characteristic " + std::to_string(char_p);
    }
    if (vc.status == VertexCertificate::zero) {
      any_zero = true;
      std::string ps;
      for (auto& part : lp.profiles) ps += hurwitz::Partition::of(part).str();
      cert.reasons.push_back("H^" + std::to_string(lp.d) + "_{" + std::to_string(vc.source_genus) +
                             "," + std::to_string(vc.target_genus) + "}(" + ps + ") = 0 at " + v.id);
    }
    if (vc.status == VertexCertificate::unknown_char) any_unknown = true;
    cert.vertices.push_back(std::move(vc));
  }
  cert.verdict = any_zero      ? LiftVerdict::not_liftable
                 : any_unknown ? LiftVerdict::unknown
                               : LiftVerdict::liftable;
  return cert;
}

EnrichedMorphism enrich_genus(const HarmonicMorphism& phi, std::int64_t char_p,
                              const hurwitz::Budget& budget) {
  MorphismReport rep = require_harmonic(phi);
  if (!rep.finite) throw domain_error("genus enrichment requires a finite harmonic morphism");
  if (!is_tame(phi, char_p)) throw domain_error("wild edge degree");
  std::int64_t dmax = 0;
  for (auto& [e, a] : phi.edge_map)
    if (!a.contracted) dmax = std::max(dmax, a.degree);
  if (char_p != 0 && char_p <= dmax)
    throw domain_error("genus enrichment requires characteristic 0 or > the local degrees");

  EnrichedMorphism out;
  out.phi = phi;
  GraphBuilder b(phi.source);
  for (auto& v : b.raw_vertices()) {
    if (v.infinite) {
      v.genus = 0;
      continue;
    }
    LocalProfiles lp = local_profiles(phi, v.id);
    std::vector<hurwitz::Partition> profiles;
    for (auto& part : lp.profiles) profiles.push_back(hurwitz::Partition::of(part));
    std::int64_t gt = phi.target.vertex(phi.image_of(v.id)).genus;
    v.genus = (int)hurwitz::minimal_source_genus(lp.d, gt, profiles, char_p, budget).gprime;
  }
  out.phi.source = b.build();
  out.certificate = liftability_certificate(out.phi, char_p, budget);
  return out;
}

namespace {

// Stateful surgery for the contraction-resolution algorithm.  Every
// public step leaves phi harmonic.
struct Resolver {
  HarmonicMorphism phi;
  ModTrail src_trail, tgt_trail;
  int fresh_counter = 0;

  std::string fresh(const std::string& hint) {
    std::string id = hint + "~" + std::to_string(fresh_counter++);
    while (phi.source.has_vertex(id) || phi.source.has_edge(id) || phi.target.has_vertex(id) ||
           phi.target.has_edge(id))
      id += "'";
    return id;
  }

  std::pair<EdgeId, VertexId> attach_target_ray(const VertexId& y) {
    GraphBuilder b(phi.target);
    VertexId nv = fresh("T" + y);
    EdgeId ne = fresh("Tray" + y);
    b.vertex(nv, 0, true);
    b.infinite_edge(ne, y, nv);
    phi.target = b.build();
    GraphMod gm;
    gm.added_vertex_retract[nv] = Point::vertex(y);
    gm.added_edge_retract[ne] = Point::vertex(y);
    tgt_trail.push(gm);
    return {ne, nv};
  }

  // split a freshly attached target ray (nothing maps over it yet)
  std::pair<EdgeId, EdgeId> split_target_ray(const EdgeId& ray, const Rational& off) {
    auto ref = phi.target.refine_at({Point::on_edge(ray, off)});
    phi.target = ref.graph;
    GraphMod gm;
    gm.relocation = ref.map;
    tgt_trail.push(gm);
    auto& split = ref.map.splits().at(ray);
    return {split.pieces[0].id, split.pieces[1].id};
  }

  VertexId split_contracted_at_mid(const EdgeId& e) {
    const Edge& ed = phi.source.edge(e);
    EdgeAction a = phi.action(e);
    auto ref = phi.source.refine_at({Point::on_edge(e, ed.length / Rational(2))});
    phi.source = ref.graph;
    auto& split = ref.map.splits().at(e);
    phi.edge_map.erase(e);
    for (auto& piece : split.pieces) phi.edge_map[piece.id] = a;
    VertexId m = split.cuts[0];
    phi.vertex_map[m] = a.contracted_to;
    GraphMod gm;
    gm.relocation = ref.map;
    src_trail.push(gm);
    return m;
  }

  // one degree-1 copy of the target grafted at a fully contracted vertex
  void graft_target_copy(const VertexId& v) {
    const VertexId& y = phi.image_of(v);
    GraphBuilder b(phi.source);
    GraphMod gm;
    std::map<VertexId, VertexId> clone;
    clone[y] = v;
    for (auto& w : phi.target.vertices()) {
      if (w.id == y) continue;
      VertexId nv = fresh("cp" + v);
      b.vertex(nv, 0, w.infinite);
      clone[w.id] = nv;
      gm.added_vertex_retract[nv] = Point::vertex(v);
      phi.vertex_map[nv] = w.id;
    }
    for (auto& f : phi.target.edges()) {
      EdgeId ne = fresh("cp" + v);
      if (f.infinite)
        b.infinite_edge(ne, clone.at(f.tail), clone.at(f.head));
      else
        b.edge(ne, clone.at(f.tail), clone.at(f.head), f.length);
      gm.added_edge_retract[ne] = Point::vertex(v);
      phi.edge_map[ne] = EdgeAction::mapped(f.id, 1, false);
    }
    phi.source = b.build();
    src_trail.push(gm);
  }

  // Attach degree-one mirror chains so every fiber point over y reaches
  // its cached local degree toward the new chain direction.
  void balance_over(const VertexId& y, const std::vector<EdgeId>& chain,
                    const std::map<VertexId, std::int64_t>& cached) {
    std::vector<VertexId> anchors;
    for (auto& v : phi.source.vertices()) {
      auto vm = phi.vertex_map.find(v.id);
      if (vm == phi.vertex_map.end() || vm->second != y) continue;
      auto it = cached.find(v.id);
      std::int64_t want = it == cached.end() ? 0 : it->second;
      if (want == 0) continue;
      std::int64_t have = 0;
      for (auto& dir : phi.source.directions(v.id)) {
        const EdgeAction& a = phi.action(dir.edge);
        if (a.contracted || a.image != chain[0]) continue;
        if ((dir.end ^ (a.reversed ? 1 : 0)) == 0) have += a.degree;
      }
      for (std::int64_t k = have; k < want; ++k) anchors.push_back(v.id);
    }
    if (anchors.empty()) return;
    GraphBuilder b(phi.source);
    GraphMod gm;
    struct Pending {
      EdgeId edge;
      EdgeId image;
      VertexId vtx;
      VertexId image_vtx;
    };
    std::vector<Pending> pend;
    for (auto& w : anchors) {
      VertexId cur = w;
      for (auto& fid : chain) {
        const Edge& f = phi.target.edge(fid);
        VertexId nv = fresh("ch" + w);
        EdgeId ne = fresh("ch" + w);
        b.vertex(nv, 0, f.infinite ? true : false);
        if (f.infinite)
          b.infinite_edge(ne, cur, nv);
        else
          b.edge(ne, cur, nv, f.length);
        gm.added_vertex_retract[nv] = Point::vertex(w);
        gm.added_edge_retract[ne] = Point::vertex(w);
        pend.push_back({ne, fid, nv, f.head});
        cur = nv;
      }
    }
    phi.source = b.build();
    for (auto& p : pend) {
      phi.edge_map[p.edge] = EdgeAction::mapped(p.image, 1, false);
      phi.vertex_map[p.vtx] = p.image_vtx;
    }
    src_trail.push(gm);
  }
};

}  // namespace

WeakResolution weak_resolution(const HarmonicMorphism& phi0) {
  MorphismReport rep0 = require_harmonic(phi0);
  if (phi0.target.finite_part().genus_data().first_betti != 0)
    throw domain_error("target is not a tree");

  Resolver R;
  R.phi = phi0;

  // finite leaves (and an isolated finite point) of the target become
  // infinite via elementary modifications of the morphism
  {
    std::vector<VertexId> leaves;
    for (auto& v : R.phi.target.vertices())
      if (!v.infinite && R.phi.target.valence(v.id) <= 1) leaves.push_back(v.id);
    for (auto& y : leaves) {
      auto cached = require_harmonic(R.phi).local_degree;
      auto [ray, infv] = R.attach_target_ray(y);
      R.balance_over(y, {ray}, cached);
    }
  }

  // graft a copy of the target at every fully contracted vertex
  {
    std::vector<VertexId> grafts;
    for (auto& v : R.phi.source.vertices()) {
      auto& ds = R.phi.source.directions(v.id);
      bool all_contracted = true;
      for (auto& d : ds)
        if (!R.phi.action(d.edge).contracted) all_contracted = false;
      if (ds.empty()) all_contracted = true;
      if (all_contracted) grafts.push_back(v.id);
    }
    for (auto& v : grafts) R.graft_target_copy(v);
  }

  // trade every contracted edge for a fold over a fresh target leaf
  for (;;) {
    EdgeId target_edge;
    bool found = false;
    for (auto& e : R.phi.source.edges()) {
      if (R.phi.action(e.id).contracted) {
        target_edge = e.id;
        found = true;
        break;
      }
    }
    if (!found) break;
    const Edge ed = R.phi.source.edge(target_edge);
    const VertexId y = R.phi.action(target_edge).contracted_to;
    if (ed.is_loop()) {
      // folding needs two distinct endpoints; cut the loop first and let
      // the next rounds treat the halves as ordinary contracted edges.
      // The fresh cut vertex is fully contracted, so it gets its copy of
      // the target like the ones handled before the loop.
      VertexId m = R.split_contracted_at_mid(target_edge);
      R.graft_target_copy(m);
      continue;
    }
    auto cached = require_harmonic(R.phi).local_degree;
    if (!ed.infinite) {
      VertexId m = R.split_contracted_at_mid(target_edge);
      auto halves = R.phi.source.directions(m);
      EdgeId e4 = halves[0].edge, e5 = halves[1].edge;
      if (R.phi.source.edge(e4).head != m) std::swap(e4, e5);
      auto [ray, infv] = R.attach_target_ray(y);
      auto [stub, tail] = R.split_target_ray(ray, ed.length / Rational(2));
      const VertexId z = R.phi.target.edge(stub).head;
      R.phi.vertex_map[m] = z;
      R.phi.edge_map[e4] = EdgeAction::mapped(stub, 1, false);
      R.phi.edge_map[e5] = EdgeAction::mapped(stub, 1, true);
      // two infinite legs folded over the tail of the new leaf
      {
        GraphBuilder b(R.phi.source);
        GraphMod gm;
        VertexId i1 = R.fresh("fold" + m), i2 = R.fresh("fold" + m);
        EdgeId r1 = R.fresh("fold" + m), r2 = R.fresh("fold" + m);
        b.vertex(i1, 0, true).vertex(i2, 0, true);
        b.infinite_edge(r1, m, i1);
        b.infinite_edge(r2, m, i2);
        for (auto& id : {i1, i2}) gm.added_vertex_retract[id] = Point::vertex(m);
        for (auto& id : {r1, r2}) gm.added_edge_retract[id] = Point::vertex(m);
        R.phi.source = b.build();
        R.src_trail.push(gm);
        R.phi.edge_map[r1] = EdgeAction::mapped(tail, 1, false);
        R.phi.edge_map[r2] = EdgeAction::mapped(tail, 1, false);
        VertexId tiv = R.phi.target.edge(tail).head;
        R.phi.vertex_map[i1] = tiv;
        R.phi.vertex_map[i2] = tiv;
      }
      R.balance_over(y, {stub, tail}, cached);
    } else {
      // a contracted infinite end maps isometrically onto a fresh leaf
      auto [ray, infv] = R.attach_target_ray(y);
      R.phi.edge_map[target_edge] = EdgeAction::mapped(ray, 1, false);
      R.phi.vertex_map[ed.head] = infv;
      R.balance_over(y, {ray}, cached);
    }
  }

  WeakResolution out;
  MorphismReport rep = require_harmonic(R.phi);
  if (!rep.finite) throw domain_error("internal: resolution left a non-finite morphism");
  out.phi = std::move(R.phi);
  out.source_trail = std::move(R.src_trail);
  out.target_trail = std::move(R.tgt_trail);
  return out;
}

LineExtension extend_to_line(const RationalFunction& f) {
  const MetricGraph& base = f.model;
  for (auto& [e, s] : f.ray_slopes)
    if (s != 0) throw domain_error("function has a pole or zero at infinity");
  Divisor D = Divisor() - principal_divisor(f);

  // work with h = -f so that the positive part of D runs to -infinity
  std::map<VertexId, Rational> h;
  for (auto& v : base.vertices())
    if (!v.infinite) h[v.id] = -f.value_at(v.id);

  std::vector<Rational> levels;
  for (auto& [v, c] : h)
    if (std::find(levels.begin(), levels.end(), c) == levels.end()) levels.push_back(c);
  std::sort(levels.begin(), levels.end());
  auto level_index = [&](const Rational& c) {
    return (std::size_t)(std::find(levels.begin(), levels.end(), c) - levels.begin());
  };
  auto level_vertex = [&](std::size_t i) { return "lv" + std::to_string(i); };

  GraphBuilder lb;
  for (std::size_t i = 0; i < levels.size(); ++i) lb.vertex(level_vertex(i), 0, false);
  lb.vertex("minus_inf", 0, true);
  lb.vertex("plus_inf", 0, true);
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    lb.edge("lseg" + std::to_string(i), level_vertex(i), level_vertex(i + 1),
            levels[i + 1] - levels[i]);
  lb.infinite_edge("lray_minus", level_vertex(0), "minus_inf");
  lb.infinite_edge("lray_plus", level_vertex(levels.size() - 1), "plus_inf");
  MetricGraph line = lb.build();

  // segments of the line between two level indices, low to high
  auto segments_up = [&](std::size_t a, std::size_t b) {
    std::vector<std::pair<EdgeId, bool>> path;
    for (std::size_t i = a; i < b; ++i) path.push_back({"lseg" + std::to_string(i), false});
    return path;
  };
  auto segments_down = [&](std::size_t a, std::size_t b) {
    std::vector<std::pair<EdgeId, bool>> path;
    for (std::size_t i = a; i > b; --i) path.push_back({"lseg" + std::to_string(i - 1), true});
    return path;
  };

  // source: base graph plus one ray at each vertex of supp(D)
  GraphBuilder sb(base);
  GraphMod attach_mod;
  std::map<VertexId, VertexId> vm;
  std::map<EdgeId, RawEdgeImage> raw;
  for (auto& v : base.vertices()) {
    if (v.infinite) continue;
    vm[v.id] = level_vertex(level_index(h.at(v.id)));
  }
  for (auto& v : base.vertices()) {
    if (v.infinite) {
      const auto& ds = base.directions(v.id);
      vm[v.id] = vm.at(base.edge(ds[0].edge).tail);
    }
  }
  for (auto& e : base.edges()) {
    RawEdgeImage r;
    if (e.infinite) {
      r.contracted = true;
      r.contracted_to = vm.at(e.tail);
      raw[e.id] = r;
      continue;
    }
    Rational delta = h.at(e.head) - h.at(e.tail);
    if (delta.is_zero()) {
      r.contracted = true;
      r.contracted_to = vm.at(e.tail);
      raw[e.id] = r;
      continue;
    }
    std::int64_t slope = (delta / e.length).as_integer();
    std::size_t a = level_index(h.at(e.tail));
    std::size_t b = level_index(h.at(e.head));
    r.degree = slope > 0 ? slope : -slope;
    r.path = slope > 0 ? segments_up(a, b) : segments_down(a, b);
    raw[e.id] = r;
  }
  int rayn = 0;
  for (auto& [p, c] : D.entries()) {
    const VertexId& v = p.id;
    VertexId nv = "dray_v" + std::to_string(rayn);
    EdgeId ne = "dray" + std::to_string(rayn);
    ++rayn;
    sb.vertex(nv, 0, true);
    sb.infinite_edge(ne, v, nv);
    attach_mod.added_vertex_retract[nv] = Point::vertex(v);
    attach_mod.added_edge_retract[ne] = Point::vertex(v);
    RawEdgeImage r;
    r.degree = c > 0 ? c : -c;
    std::size_t a = level_index(h.at(v));
    if (c > 0) {  // h falls toward -infinity along the ray
      r.path = segments_down(a, 0);
      r.path.push_back({"lray_minus", false});
      vm[nv] = "minus_inf";
    } else {
      r.path = segments_up(a, levels.size() - 1);
      r.path.push_back({"lray_plus", false});
      vm[nv] = "plus_inf";
    }
    raw[ne] = r;
  }

  MetricGraph source_ext = sb.build();
  CompatibleMorphism cm = refine_to_compatible(source_ext, line, vm, raw);

  LineExtension out;
  out.phi = cm.phi;
  out.minus_end = "minus_inf";
  out.plus_end = "plus_inf";
  out.source_trail.push(attach_mod);
  GraphMod compat_mod;
  compat_mod.relocation = cm.source_map;
  out.source_trail.push(compat_mod);
  return out;
}

EffectiveEquivalenceWitness effective_equivalence_witness(const MetricGraph& g, const Divisor& D0,
                                                          const RationalFunction& f) {
  // the function's model must refine the ambient graph
  for (auto& v : g.vertices())
    if (!f.model.has_vertex(v.id))
      throw domain_error("function model does not contain vertex " + v.id);
  const MetricGraph& base = f.model;
  Divisor D = base.normalized(D0);
  for (auto& [p, c] : D.entries())
    if (p.kind != Point::AtVertex)
      throw domain_error("divisor of a model function must be supported on vertices");
  Divisor divf = principal_divisor(f);
  if (!((D + divf).is_zero())) throw domain_error("D + div(f) is not zero");

  LineExtension ext = extend_to_line(f);
  WeakResolution res = weak_resolution(ext.phi);

  EffectiveEquivalenceWitness out;
  out.phi = res.phi;
  out.minus_end = ext.minus_end;
  out.plus_end = ext.plus_end;
  out.source_trail = ext.source_trail;
  for (auto& s : res.source_trail.steps) out.source_trail.push(s);

  Divisor fiber_minus = fiber_divisor(res.phi, Point::vertex(out.minus_end));
  Divisor fiber_plus = fiber_divisor(res.phi, Point::vertex(out.plus_end));
  out.retract_minus = out.source_trail.retract(fiber_minus);
  out.retract_plus = out.source_trail.retract(fiber_plus);

  Divisor Dp = D.positive_part();
  Divisor Dm = D.negative_part();
  out.E = out.retract_minus - Dp;
  if (!out.E.is_effective())
    throw domain_error("internal: retraction of the -inf fiber is not D_+ + E");
  if (!(out.retract_plus - Dm == out.E))
    throw domain_error("internal: retraction identities disagree");
  return out;
}

bool polynomial_like_check(const HarmonicMorphism& phi, std::int64_t char_p) {
  MorphismReport rep = require_harmonic(phi);
  if (!rep.finite) throw domain_error("not a finite morphism");
  auto tree = [](const MetricGraph& g) {
    if (g.finite_part().genus_data().first_betti != 0) return false;
    for (auto& v : g.vertices())
      if (v.genus != 0) return false;
    return true;
  };
  if (!tree(phi.source) || !tree(phi.target)) throw domain_error("not a morphism of metric trees");
  std::int64_t d = rep.degree;
  if (char_p != 0 && char_p <= d) return false;

  VertexId inf_vertex;
  bool found = false;
  for (auto& v : phi.source.vertices())
    if (v.infinite && rep.local_degree.at(v.id) == d) {
      inf_vertex = v.id;
      found = true;
      break;
    }
  if (!found) return false;  // not polynomial-like

  if (!ramification(phi).generically_etale) return false;

  // local degree must equal the degree toward infinity at every finite
  // vertex (next edge on the unique path to the chosen infinite vertex)
  std::map<VertexId, EdgeId> toward;
  {
    std::deque<VertexId> q{inf_vertex};
    std::set<VertexId> seen{inf_vertex};
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (auto& dir : phi.source.directions(v)) {
        VertexId w = phi.source.other_end(phi.source.edge(dir.edge), v, dir.end);
        if (seen.insert(w).second) {
          toward[w] = dir.edge;
          q.push_back(w);
        }
      }
    }
  }
  for (auto& v : phi.source.vertices()) {
    if (v.infinite) continue;
    auto it = toward.find(v.id);
    if (it == toward.end()) return false;
    if (phi.action(it->second).degree != rep.local_degree.at(v.id)) return false;
  }
  return true;
}

}  // namespace tropic
