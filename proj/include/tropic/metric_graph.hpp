#ifndef TROPIC_METRIC_GRAPH_HPP
#define TROPIC_METRIC_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/rational.hpp"

namespace tropic {

using VertexId = std::string;
using EdgeId = std::string;

struct Vertex {
  VertexId id;
  int genus = 0;
  bool infinite = false;
};

// Edges carry positive rational lengths, or are infinite.  Infinite edges
// are stored with the finite endpoint as tail and the infinite vertex as
// head; offsets on them are measured from the finite end.  Orientation of
// finite edges is storage only.
struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;
  Rational length;       // meaningful iff !infinite
  bool infinite = false;

  bool is_loop() const { return tail == head; }
};

// A location on the graph: a vertex, or an interior point of an edge at a
// given offset from the tail.  Boundary offsets are normalized away by
// MetricGraph::normalized.
struct Point {
  enum Kind { AtVertex, OnEdge } kind = AtVertex;
  std::string id;    // vertex id or edge id
  Rational offset;   // only for OnEdge, 0 < offset < length

  static Point vertex(VertexId v) { return Point{AtVertex, std::move(v), Rational()}; }
  static Point on_edge(EdgeId e, Rational off) { return Point{OnEdge, std::move(e), off}; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.kind == b.kind && a.id == b.id && (a.kind == AtVertex || a.offset == b.offset);
  }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.id != b.id) return a.id < b.id;
    if (a.kind == AtVertex) return false;
    return a.offset < b.offset;
  }
  std::string str() const {
    if (kind == AtVertex) return id;
    return id + ":" + offset.str();
  }
};

// Finite formal sum of points with integer coefficients.  Keys are expected
// to be normalized with respect to the graph they live on.
class Divisor {
public:
  Divisor() = default;

  void add(const Point& p, std::int64_t c) {
    if (c == 0) return;
    auto it = entries_.find(p);
    if (it == entries_.end()) {
      entries_.emplace(p, c);
    } else {
      it->second += c;
      if (it->second == 0) entries_.erase(it);
    }
  }

  std::int64_t coeff(const Point& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
  }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (auto& [p, c] : entries_) d += c;
    return d;
  }

  bool is_zero() const { return entries_.empty(); }
  bool is_effective() const {
    for (auto& [p, c] : entries_)
      if (c < 0) return false;
    return true;
  }

  const std::map<Point, std::int64_t>& entries() const { return entries_; }

  friend Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (auto& [p, c] : b.entries_) r.add(p, c);
    return r;
  }
  friend Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (auto& [p, c] : b.entries_) r.add(p, -c);
    return r;
  }
  friend Divisor operator*(std::int64_t k, const Divisor& a) {
    Divisor r;
    for (auto& [p, c] : a.entries_) r.add(p, k * c);
    return r;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.entries_ == b.entries_; }

  Divisor positive_part() const {
    Divisor r;
    for (auto& [p, c] : entries_)
      if (c > 0) r.add(p, c);
    return r;
  }
  Divisor negative_part() const {  // effective: D = positive_part - negative_part
    Divisor r;
    for (auto& [p, c] : entries_)
      if (c < 0) r.add(p, -c);
    return r;
  }

  std::string str() const;

private:
  std::map<Point, std::int64_t> entries_;
};

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

struct GenusData {
  std::int64_t first_betti = 0;  // of the finite part
  std::int64_t genus = 0;
  Divisor canonical;
};

// Relocation data produced by refinements: each split edge is replaced by
// pieces covering [cut_i, cut_{i+1}] in tail-to-head order.
class PointMap {
public:
  struct Piece {
    EdgeId id;
    Rational start;
    std::optional<Rational> end;  // nullopt on the infinite tail piece
  };
  struct Split {
    std::vector<Piece> pieces;
    std::vector<VertexId> cuts;  // cuts[i] separates pieces[i] and pieces[i+1]
  };

  bool trivial() const { return splits_.empty(); }
  void add_split(const EdgeId& old_edge, Split s);

  Point forward(const Point& p) const;   // old model -> new model
  Point backward(const Point& p) const;  // new model -> old model
  Divisor forward(const Divisor& d) const;
  Divisor backward(const Divisor& d) const;

  const std::map<EdgeId, Split>& splits() const { return splits_; }

private:
  std::map<EdgeId, Split> splits_;
  std::map<EdgeId, std::pair<EdgeId, Rational>> piece_origin_;
  std::map<VertexId, Point> cut_origin_;
};

class MetricGraph;

// Result of a graph operation that may refine and attach new material.
// relocate maps points of the input model into the output, retract is the
// opposite direction and sends attached parts to their attachment point.
struct GraphMod {
  PointMap relocation;
  std::map<VertexId, Point> added_vertex_retract;  // in old coordinates
  std::map<EdgeId, Point> added_edge_retract;

  Point relocate(const Point& p) const { return relocation.forward(p); }
  Point retract(const Point& p) const;
  Divisor relocate(const Divisor& d) const { return relocation.forward(d); }
  Divisor retract(const Divisor& d) const;
};

class MetricGraph {
public:
  MetricGraph() = default;
  static MetricGraph build(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const VertexId& v) const { return vindex_.count(v) > 0; }
  bool has_edge(const EdgeId& e) const { return eindex_.count(e) > 0; }
  const Vertex& vertex(const VertexId& v) const;
  const Edge& edge(const EdgeId& e) const;

  // Incident (edge, end) pairs; a loop appears twice with ends 0 and 1.
  // One entry per tangent direction at the vertex.
  struct Direction {
    EdgeId edge;
    int end;  // 0 = the vertex is the tail, 1 = the head
  };
  const std::vector<Direction>& directions(const VertexId& v) const;
  int valence(const VertexId& v) const { return (int)directions(v).size(); }

  VertexId other_end(const Edge& e, const VertexId& /*v*/, int end) const {
    return end == 0 ? e.head : e.tail;
  }

  bool is_connected() const;
  std::vector<std::set<VertexId>> components_without_vertex(const VertexId& cut) const;
  std::set<EdgeId> bridge_edges() const;  // loops and parallel edges are never bridges

  ValidationReport validate() const;

  Point normalized(const Point& p) const;
  // The two endpoints of the closed edge as points.
  Point tail_point(const EdgeId& e) const { return Point::vertex(edge(e).tail); }
  Point head_point(const EdgeId& e) const { return Point::vertex(edge(e).head); }

  GenusData genus_data() const;
  std::int64_t genus() const { return genus_data().genus; }

  // A model in which every listed (finite, normalized) point is a vertex.
  struct Refined;
  Refined refine_at(const std::vector<Point>& pts) const;

  // Attach one infinite leaf edge at p (p promoted to a vertex first).
  struct Modified;
  Modified elementary_modification(const Point& p) const;

  // Iteratively remove infinite edges and 1-valent genus-0 vertices, and
  // suppress 2-valent genus-0 vertices.  Requires genus >= 1.
  MetricGraph minimize() const;

  // The graph with infinite edges and infinite vertices removed.
  MetricGraph finite_part() const;

  // Divisor keyed by normalized points; also slides coefficients on
  // infinite-edge interiors down to the finite attachment vertex (a linear
  // equivalence), so the result lives on the finite part.
  Divisor normalized(const Divisor& d, bool slide_rays = false) const;

  VertexId fresh_vertex_id(const std::string& hint) const;
  EdgeId fresh_edge_id(const std::string& hint) const;

  // Smallest vertex id (canonical base point choice).
  VertexId lex_smallest_vertex() const;

private:
  friend class GraphBuilder;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vindex_;
  std::map<EdgeId, std::size_t> eindex_;
  std::map<VertexId, std::vector<Direction>> dirs_;

  void index();
};

struct MetricGraph::Refined {
  MetricGraph graph;
  PointMap map;
};

struct MetricGraph::Modified {
  MetricGraph graph;
  GraphMod mod;
  VertexId new_infinite_vertex;
  EdgeId new_infinite_edge;
  VertexId attach_vertex;  // id of p in the new model
};

// Convenience for building graphs in code and in surgery-heavy modules.
class GraphBuilder {
public:
  GraphBuilder() = default;
  explicit GraphBuilder(const MetricGraph& g) : vertices_(g.vertices()), edges_(g.edges()) {}

  GraphBuilder& vertex(VertexId id, int genus = 0, bool infinite = false) {
    vertices_.push_back(Vertex{std::move(id), genus, infinite});
    return *this;
  }
  GraphBuilder& edge(EdgeId id, VertexId a, VertexId b, Rational len) {
    edges_.push_back(Edge{std::move(id), std::move(a), std::move(b), len, false});
    return *this;
  }
  GraphBuilder& infinite_edge(EdgeId id, VertexId finite_end, VertexId infinite_end) {
    edges_.push_back(Edge{std::move(id), std::move(finite_end), std::move(infinite_end), Rational(), true});
    return *this;
  }
  MetricGraph build() const { return MetricGraph::build(vertices_, edges_); }

  std::vector<Vertex>& raw_vertices() { return vertices_; }
  std::vector<Edge>& raw_edges() { return edges_; }

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

}  // namespace tropic

#endif
