#include "tropic/metric_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace tropic {

std::string Divisor::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : entries_) {
    if (!first) os << " ";
    if (c >= 0 && !first) os << "+";
    os << c << "(" << p.str() << ")";
    first = false;
  }
  return os.str();
}

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (auto& v : violations) os << v.code << ": " << v.detail << "\n";
  return os.str();
}

void PointMap::add_split(const EdgeId& old_edge, Split s) {
  for (std::size_t i = 0; i < s.pieces.size(); ++i) {
    piece_origin_[s.pieces[i].id] = {old_edge, s.pieces[i].start};
    if (i + 1 < s.pieces.size())
      cut_origin_[s.cuts[i]] = Point::on_edge(old_edge, *s.pieces[i].end);
  }
  splits_[old_edge] = std::move(s);
}

Point PointMap::forward(const Point& p) const {
  if (p.kind == Point::AtVertex) return p;
  auto it = splits_.find(p.id);
  if (it == splits_.end()) return p;
  for (std::size_t i = 0; i < it->second.pieces.size(); ++i) {
    const Piece& piece = it->second.pieces[i];
    if (piece.end && p.offset > *piece.end) continue;
    if (piece.end && p.offset == *piece.end) return Point::vertex(it->second.cuts[i]);
    return Point::on_edge(piece.id, p.offset - piece.start);
  }
  throw domain_error("point offset beyond edge in relocation");
}

Point PointMap::backward(const Point& p) const {
  if (p.kind == Point::AtVertex) {
    auto it = cut_origin_.find(p.id);
    return it == cut_origin_.end() ? p : it->second;
  }
  auto it = piece_origin_.find(p.id);
  if (it == piece_origin_.end()) return p;
  return Point::on_edge(it->second.first, it->second.second + p.offset);
}

Divisor PointMap::forward(const Divisor& d) const {
  Divisor r;
  for (auto& [p, c] : d.entries()) r.add(forward(p), c);
  return r;
}

Divisor PointMap::backward(const Divisor& d) const {
  Divisor r;
  for (auto& [p, c] : d.entries()) r.add(backward(p), c);
  return r;
}

Point GraphMod::retract(const Point& p) const {
  if (p.kind == Point::AtVertex) {
    auto it = added_vertex_retract.find(p.id);
    if (it != added_vertex_retract.end()) return it->second;
  } else {
    auto it = added_edge_retract.find(p.id);
    if (it != added_edge_retract.end()) return it->second;
  }
  return relocation.backward(p);
}

Divisor GraphMod::retract(const Divisor& d) const {
  Divisor r;
  for (auto& [p, c] : d.entries()) r.add(retract(p), c);
  return r;
}

MetricGraph MetricGraph::build(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  MetricGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!g.vindex_.emplace(g.vertices_[i].id, i).second)
      throw schema_error("duplicate vertex id: " + g.vertices_[i].id);
  }
  for (auto& e : g.edges_) {
    if (!g.vindex_.count(e.tail)) throw schema_error("edge " + e.id + " references unknown vertex " + e.tail);
    if (!g.vindex_.count(e.head)) throw schema_error("edge " + e.id + " references unknown vertex " + e.head);
    // store infinite edges finite-end first
    if (e.infinite) {
      const Vertex& t = g.vertices_[g.vindex_[e.tail]];
      const Vertex& h = g.vertices_[g.vindex_[e.head]];
      if (t.infinite && !h.infinite) std::swap(e.tail, e.head);
    }
  }
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    if (!g.eindex_.emplace(g.edges_[i].id, i).second)
      throw schema_error("duplicate edge id: " + g.edges_[i].id);
  }
  g.index();
  return g;
}

void MetricGraph::index() {
  dirs_.clear();
  for (auto& v : vertices_) dirs_[v.id];
  for (auto& e : edges_) {
    dirs_[e.tail].push_back(Direction{e.id, 0});
    dirs_[e.head].push_back(Direction{e.id, 1});
  }
}

const Vertex& MetricGraph::vertex(const VertexId& v) const {
  auto it = vindex_.find(v);
  if (it == vindex_.end()) throw schema_error("unknown vertex: " + v);
  return vertices_[it->second];
}

const Edge& MetricGraph::edge(const EdgeId& e) const {
  auto it = eindex_.find(e);
  if (it == eindex_.end()) throw schema_error("unknown edge: " + e);
  return edges_[it->second];
}

const std::vector<MetricGraph::Direction>& MetricGraph::directions(const VertexId& v) const {
  auto it = dirs_.find(v);
  if (it == dirs_.end()) throw schema_error("unknown vertex: " + v);
  return it->second;
}

bool MetricGraph::is_connected() const {
  if (vertices_.empty()) return false;
  std::set<VertexId> seen;
  std::deque<VertexId> q{vertices_.front().id};
  seen.insert(vertices_.front().id);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (auto& d : directions(v)) {
      const Edge& e = edge(d.edge);
      VertexId w = other_end(e, v, d.end);
      if (seen.insert(w).second) q.push_back(w);
    }
  }
  return seen.size() == vertices_.size();
}

std::vector<std::set<VertexId>> MetricGraph::components_without_vertex(const VertexId& cut) const {
  std::vector<std::set<VertexId>> comps;
  std::set<VertexId> seen{cut};
  for (auto& v : vertices_) {
    if (seen.count(v.id)) continue;
    std::set<VertexId> comp;
    std::deque<VertexId> q{v.id};
    seen.insert(v.id);
    comp.insert(v.id);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop_front();
      for (auto& d : directions(u)) {
        VertexId w = other_end(edge(d.edge), u, d.end);
        if (w == cut) continue;
        if (seen.insert(w).second) {
          comp.insert(w);
          q.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::set<EdgeId> MetricGraph::bridge_edges() const {
  std::set<EdgeId> bridges;
  std::map<VertexId, int> disc, low;
  int timer = 0;
  // iterative DFS, skipping the entering edge id (handles parallel edges)
  std::function<void(const VertexId&, const EdgeId*)> dfs = [&](const VertexId& v, const EdgeId* in_edge) {
    disc[v] = low[v] = ++timer;
    for (auto& d : directions(v)) {
      const Edge& e = edge(d.edge);
      if (e.is_loop()) continue;
      if (in_edge && d.edge == *in_edge) continue;
      VertexId w = other_end(e, v, d.end);
      if (!disc.count(w)) {
        dfs(w, &d.edge);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.insert(d.edge);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (auto& v : vertices_)
    if (!disc.count(v.id)) dfs(v.id, nullptr);
  return bridges;
}

ValidationReport MetricGraph::validate() const {
  ValidationReport rep;
  if (vertices_.empty()) {
    rep.violations.push_back({"empty", "graph has no vertices"});
    return rep;
  }
  if (!is_connected()) rep.violations.push_back({"disconnected", "underlying multigraph is not connected"});
  for (auto& v : vertices_) {
    if (v.genus < 0) rep.violations.push_back({"negative genus", "vertex " + v.id});
    if (v.infinite) {
      if (valence(v.id) != 1)
        rep.violations.push_back({"bad infinite vertex", "vertex " + v.id + " has valence " + std::to_string(valence(v.id))});
      if (v.genus != 0) rep.violations.push_back({"bad infinite vertex", "vertex " + v.id + " has positive genus"});
    }
  }
  for (auto& e : edges_) {
    bool tinf = vertex(e.tail).infinite;
    bool hinf = vertex(e.head).infinite;
    int ninf = (tinf ? 1 : 0) + (hinf ? 1 : 0);
    if (e.infinite) {
      if (ninf != 1)
        rep.violations.push_back({"bad infinite edge", "edge " + e.id + " must have exactly one infinite endpoint"});
    } else {
      if (ninf != 0)
        rep.violations.push_back({"bad infinite edge", "finite edge " + e.id + " touches an infinite vertex"});
      if (!(e.length > Rational(0)))
        rep.violations.push_back({"nonpositive length", "edge " + e.id + " has length " + e.length.str()});
    }
  }
  return rep;
}

Point MetricGraph::normalized(const Point& p) const {
  if (p.kind == Point::AtVertex) {
    vertex(p.id);
    return p;
  }
  const Edge& e = edge(p.id);
  if (p.offset == Rational(0)) return Point::vertex(e.tail);
  if (p.offset < Rational(0)) throw domain_error("negative offset on edge " + e.id);
  if (!e.infinite) {
    if (p.offset == e.length) return Point::vertex(e.head);
    if (p.offset > e.length) throw domain_error("offset beyond length of edge " + e.id);
  }
  return p;
}

Divisor MetricGraph::normalized(const Divisor& d, bool slide_rays) const {
  Divisor r;
  for (auto& [p, c] : d.entries()) {
    Point q = normalized(p);
    if (slide_rays && q.kind == Point::OnEdge && edge(q.id).infinite) q = Point::vertex(edge(q.id).tail);
    r.add(q, c);
  }
  return r;
}

GenusData MetricGraph::genus_data() const {
  GenusData gd;
  std::int64_t fin_v = 0, fin_e = 0, total_g = 0;
  for (auto& v : vertices_) {
    if (!v.infinite) ++fin_v;
    total_g += v.genus;
  }
  for (auto& e : edges_)
    if (!e.infinite) ++fin_e;
  gd.first_betti = fin_e - fin_v + 1;
  gd.genus = gd.first_betti + total_g;
  for (auto& v : vertices_) {
    std::int64_t k = valence(v.id) + 2 * v.genus - 2;
    if (k != 0) gd.canonical.add(Point::vertex(v.id), k);
  }
  return gd;
}

MetricGraph::Refined MetricGraph::refine_at(const std::vector<Point>& pts) const {
  std::map<EdgeId, std::set<Rational>> cuts;
  for (auto& raw : pts) {
    Point p = normalized(raw);
    if (p.kind == Point::AtVertex) continue;
    cuts[p.id].insert(p.offset);
  }
  Refined out;
  if (cuts.empty()) {
    out.graph = *this;
    return out;
  }
  std::vector<Vertex> vs = vertices_;
  std::vector<Edge> es;
  int counter = 0;
  for (auto& e : edges_) {
    auto it = cuts.find(e.id);
    if (it == cuts.end()) {
      es.push_back(e);
      continue;
    }
    PointMap::Split split;
    VertexId prev = e.tail;
    Rational prev_off(0);
    for (auto& off : it->second) {
      VertexId nv = e.id + "@" + std::to_string(counter++);
      while (vindex_.count(nv)) nv += "'";
      vs.push_back(Vertex{nv, 0, false});
      EdgeId ne = e.id + "#" + std::to_string(split.pieces.size());
      while (eindex_.count(ne)) ne += "'";
      es.push_back(Edge{ne, prev, nv, off - prev_off, false});
      split.pieces.push_back(PointMap::Piece{ne, prev_off, off});
      split.cuts.push_back(nv);
      prev = nv;
      prev_off = off;
    }
    EdgeId ne = e.id + "#" + std::to_string(split.pieces.size());
    while (eindex_.count(ne)) ne += "'";
    if (e.infinite) {
      es.push_back(Edge{ne, prev, e.head, Rational(), true});
      split.pieces.push_back(PointMap::Piece{ne, prev_off, std::nullopt});
    } else {
      es.push_back(Edge{ne, prev, e.head, e.length - prev_off, false});
      split.pieces.push_back(PointMap::Piece{ne, prev_off, e.length});
    }
    out.map.add_split(e.id, std::move(split));
  }
  out.graph = MetricGraph::build(std::move(vs), std::move(es));
  return out;
}

MetricGraph::Modified MetricGraph::elementary_modification(const Point& raw) const {
  Point p = normalized(raw);
  Modified out;
  Refined ref = refine_at({p});
  Point np = ref.map.forward(p);
  out.attach_vertex = np.id;

  GraphBuilder b(ref.graph);
  out.new_infinite_vertex = ref.graph.fresh_vertex_id("inf");
  out.new_infinite_edge = ref.graph.fresh_edge_id("leaf");
  b.vertex(out.new_infinite_vertex, 0, true);
  b.infinite_edge(out.new_infinite_edge, np.id, out.new_infinite_vertex);
  out.graph = b.build();
  out.mod.relocation = ref.map;
  out.mod.added_vertex_retract[out.new_infinite_vertex] = p;
  out.mod.added_edge_retract[out.new_infinite_edge] = p;
  return out;
}

MetricGraph MetricGraph::finite_part() const {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (auto& v : vertices_)
    if (!v.infinite) vs.push_back(v);
  for (auto& e : edges_)
    if (!e.infinite) es.push_back(e);
  return MetricGraph::build(std::move(vs), std::move(es));
}

MetricGraph MetricGraph::minimize() const {
  if (genus() < 1) throw domain_error("rational curve");
  std::vector<Vertex> vs = vertices_;
  std::vector<Edge> es = edges_;
  auto rebuild = [&]() { return MetricGraph::build(vs, es); };
  MetricGraph g = rebuild();
  bool changed = true;
  while (changed) {
    changed = false;
    // drop infinite edges together with their infinite endpoints
    std::set<VertexId> drop_v;
    std::set<EdgeId> drop_e;
    for (auto& e : es) {
      if (e.infinite) {
        drop_e.insert(e.id);
        drop_v.insert(g.vertex(e.tail).infinite ? e.tail : e.head);
      }
    }
    // prune 1-valent genus-0 finite vertices
    for (auto& v : vs) {
      if (v.infinite || v.genus != 0 || drop_v.count(v.id)) continue;
      std::vector<EdgeId> live;
      for (auto& d : g.directions(v.id))
        if (!drop_e.count(d.edge)) live.push_back(d.edge);
      if (live.size() == 1 && vs.size() - drop_v.size() > 1) {
        drop_v.insert(v.id);
        drop_e.insert(live.front());
      }
    }
    if (!drop_v.empty() || !drop_e.empty()) {
      changed = true;
      std::vector<Vertex> nvs;
      std::vector<Edge> nes;
      for (auto& v : vs)
        if (!drop_v.count(v.id)) nvs.push_back(v);
      for (auto& e : es)
        if (!drop_e.count(e.id)) nes.push_back(e);
      vs = std::move(nvs);
      es = std::move(nes);
      g = rebuild();
      continue;
    }
    // suppress a 2-valent genus-0 vertex joining two distinct edges
    for (auto& v : vs) {
      if (v.infinite || v.genus != 0) continue;
      auto& ds = g.directions(v.id);
      if (ds.size() != 2 || ds[0].edge == ds[1].edge) continue;
      const Edge& e1 = g.edge(ds[0].edge);
      const Edge& e2 = g.edge(ds[1].edge);
      VertexId a = g.other_end(e1, v.id, ds[0].end);
      VertexId bb = g.other_end(e2, v.id, ds[1].end);
      Edge merged{e1.id, a, bb, e1.length + e2.length, false};
      std::vector<Vertex> nvs;
      std::vector<Edge> nes;
      for (auto& w : vs)
        if (w.id != v.id) nvs.push_back(w);
      for (auto& e : es) {
        if (e.id == e2.id) continue;
        if (e.id == e1.id)
          nes.push_back(merged);
        else
          nes.push_back(e);
      }
      vs = std::move(nvs);
      es = std::move(nes);
      g = rebuild();
      changed = true;
      break;
    }
  }
  return g;
}

VertexId MetricGraph::fresh_vertex_id(const std::string& hint) const {
  if (!vindex_.count(hint)) return hint;
  for (int i = 0;; ++i) {
    VertexId c = hint + "." + std::to_string(i);
    if (!vindex_.count(c)) return c;
  }
}

EdgeId MetricGraph::fresh_edge_id(const std::string& hint) const {
  if (!eindex_.count(hint)) return hint;
  for (int i = 0;; ++i) {
    EdgeId c = hint + "." + std::to_string(i);
    if (!eindex_.count(c)) return c;
  }
}

VertexId MetricGraph::lex_smallest_vertex() const {
  VertexId best;
  bool found = false;
  for (auto& v : vertices_) {
    if (v.infinite) continue;
    if (!found || v.id < best) {
      best = v.id;
      found = true;
    }
  }
  if (!found) throw domain_error("graph has no finite vertex");
  return best;
}

}  // namespace tropic
