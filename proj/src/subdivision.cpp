#include "tropic/subdivision.hpp"

#include <algorithm>
#include <deque>

#include "tropic/errors.hpp"

namespace tropic {

Subdivision Subdivision::build(const MetricGraph& g, const std::vector<Point>& pts,
                               std::int64_t max_vertices, std::int64_t scale_multiplier) {
  for (auto& v : g.vertices())
    if (v.infinite) throw domain_error("uniform subdivision requires a finite graph");

  std::int64_t N = scale_multiplier;
  for (auto& e : g.edges()) N = lcm_den(N, e.length);
  for (auto& p : pts) {
    Point q = g.normalized(p);
    if (q.kind == Point::OnEdge) N = lcm_den(N, q.offset);
  }
  bool has_short_loop = true;
  while (has_short_loop) {
    has_short_loop = false;
    for (auto& e : g.edges()) {
      if (e.is_loop() && (e.length * Rational(N)).as_integer() < 2) {
        N *= 2;
        has_short_loop = true;
        break;
      }
    }
  }

  Subdivision s;
  s.scale_ = N;
  std::int64_t total = g.vertices().size();
  for (auto& e : g.edges()) total += (e.length * Rational(N)).as_integer() - 1;
  if (total > max_vertices) throw resource_error("subdivision too large: " + std::to_string(total));

  s.adj_.resize(total);
  s.points_.resize(total);
  int next = 0;
  for (auto& v : g.vertices()) {
    s.vlat_[v.id] = next;
    s.points_[next] = Point::vertex(v.id);
    ++next;
  }
  auto arc = [&s](int a, int b) {
    s.adj_[a].push_back(b);
    s.adj_[b].push_back(a);
    ++s.arcs_;
  };
  for (auto& e : g.edges()) {
    std::int64_t units = (e.length * Rational(N)).as_integer();
    int prev = s.vlat_[e.tail];
    std::vector<int> interior;
    for (std::int64_t k = 1; k < units; ++k) {
      s.points_[next] = Point::on_edge(e.id, Rational(k, N));
      interior.push_back(next);
      arc(prev, next);
      prev = next++;
    }
    arc(prev, s.vlat_[e.head]);
    s.edge_path_[e.id] = std::move(interior);
  }
  return s;
}

int Subdivision::lattice_of_vertex(const VertexId& v) const {
  auto it = vlat_.find(v);
  if (it == vlat_.end()) throw domain_error("vertex not in subdivision: " + v);
  return it->second;
}

int Subdivision::lattice_of(const MetricGraph& g, const Point& raw) const {
  Point p = g.normalized(raw);
  if (p.kind == Point::AtVertex) return lattice_of_vertex(p.id);
  Rational pos = p.offset * Rational(scale_);
  if (!pos.is_integer()) throw domain_error("point not on the lattice: " + p.str());
  auto it = edge_path_.find(p.id);
  if (it == edge_path_.end()) throw domain_error("edge not in subdivision: " + p.id);
  std::int64_t k = pos.as_integer();
  if (k < 1 || k > (std::int64_t)it->second.size()) throw domain_error("lattice offset out of range");
  return it->second[k - 1];
}

std::vector<std::int64_t> Subdivision::to_chips(const MetricGraph& g, const Divisor& d) const {
  std::vector<std::int64_t> chips(size(), 0);
  for (auto& [p, c] : d.entries()) chips[lattice_of(g, p)] += c;
  return chips;
}

Divisor Subdivision::to_divisor(const std::vector<std::int64_t>& chips) const {
  Divisor d;
  for (int i = 0; i < size(); ++i)
    if (chips[i] != 0) d.add(points_[i], chips[i]);
  return d;
}

namespace {

// Fire every vertex of the set marked in `in_set` m times: each unit arc
// with exactly one end in the set moves m chips out of the set.
void fire_set(const std::vector<std::vector<int>>& adj, const std::vector<char>& in_set,
              std::int64_t m, std::vector<std::int64_t>& chips) {
  for (int v = 0; v < (int)adj.size(); ++v) {
    if (!in_set[v]) continue;
    for (int w : adj[v]) {
      if (!in_set[w]) {
        chips[v] -= m;
        chips[w] += m;
      }
    }
  }
}

}  // namespace

std::vector<std::int64_t> Subdivision::reduce(std::vector<std::int64_t> chips, int q) const {
  const int n = size();
  // Phase 1: make chips non-negative away from q by firing distance balls
  // around q, outermost debt first.
  std::vector<int> dist(n, -1);
  {
    std::deque<int> bfs{q};
    dist[q] = 0;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (int w : adj_[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          bfs.push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
      if (dist[v] < 0) throw domain_error("reduction requires a connected graph");
  }
  for (;;) {
    int k = -1;
    for (int v = 0; v < n; ++v)
      if (v != q && chips[v] < 0) k = std::max(k, dist[v]);
    if (k < 0) break;
    std::vector<char> ball(n, 0);
    for (int v = 0; v < n; ++v)
      if (dist[v] < k) ball[v] = 1;
    std::int64_t m = 1;
    for (int v = 0; v < n; ++v) {
      if (dist[v] != k || chips[v] >= 0) continue;
      std::int64_t inward = 0;
      for (int w : adj_[v])
        if (dist[w] < k) ++inward;
      m = std::max(m, (-chips[v] + inward - 1) / inward);
    }
    fire_set(adj_, ball, m, chips);
  }

  // Phase 2: Dhar burning until everything burns.
  std::vector<char> burnt(n, 0);
  std::vector<std::int64_t> cnt(n, 0);
  for (;;) {
    std::fill(burnt.begin(), burnt.end(), 0);
    std::fill(cnt.begin(), cnt.end(), 0);
    std::deque<int> fire{q};
    burnt[q] = 1;
    int burnt_count = 1;
    while (!fire.empty()) {
      int v = fire.front();
      fire.pop_front();
      for (int w : adj_[v]) {
        if (burnt[w]) continue;
        if (++cnt[w] > chips[w]) {
          burnt[w] = 1;
          ++burnt_count;
          fire.push_back(w);
        }
      }
    }
    if (burnt_count == n) break;
    // every unburnt vertex v has cnt[w] = edges to the burnt side <= chips
    std::int64_t m = INT64_MAX;
    for (int v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      if (cnt[v] > 0) m = std::min(m, chips[v] / cnt[v]);
    }
    if (m == INT64_MAX || m < 1) m = 1;
    std::vector<char> unburnt(n, 0);
    for (int v = 0; v < n; ++v) unburnt[v] = !burnt[v];
    fire_set(adj_, unburnt, m, chips);
  }
  return chips;
}

bool Subdivision::is_reduced(const std::vector<std::int64_t>& chips, int q) const {
  const int n = size();
  for (int v = 0; v < n; ++v)
    if (v != q && chips[v] < 0) return false;
  std::vector<char> burnt(n, 0);
  std::vector<std::int64_t> cnt(n, 0);
  std::deque<int> fire{q};
  burnt[q] = 1;
  int burnt_count = 1;
  while (!fire.empty()) {
    int v = fire.front();
    fire.pop_front();
    for (int w : adj_[v]) {
      if (burnt[w]) continue;
      if (++cnt[w] > chips[w]) {
        burnt[w] = 1;
        ++burnt_count;
        fire.push_back(w);
      }
    }
  }
  return burnt_count == n;
}

}  // namespace tropic
