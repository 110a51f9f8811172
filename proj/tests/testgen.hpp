#ifndef TROPIC_TESTS_TESTGEN_HPP
#define TROPIC_TESTS_TESTGEN_HPP

#include <random>
#include <vector>

#include "tropic/divisor_theory.hpp"
#include "tropic/metric_graph.hpp"

namespace testgen {

using namespace tropic;

struct Options {
  int max_vertices = 4;
  int max_extra_edges = 3;  // beyond a random spanning tree
  bool rational_lengths = true;
  int max_genus = 0;  // per-vertex decoration
};

inline Rational random_length(std::mt19937& rng, bool rational) {
  if (!rational) return Rational(1 + (int)(rng() % 3));
  std::int64_t den = 1 + (std::int64_t)(rng() % 3);
  std::int64_t num = 1 + (std::int64_t)(rng() % 4);
  return Rational(num, den);
}

// connected multigraph with random loops and parallels
inline MetricGraph random_graph(std::mt19937& rng, const Options& opt = {}) {
  int n = 1 + (int)(rng() % opt.max_vertices);
  GraphBuilder b;
  for (int i = 0; i < n; ++i)
    b.vertex("v" + std::to_string(i), opt.max_genus ? (int)(rng() % (opt.max_genus + 1)) : 0);
  int en = 0;
  for (int i = 1; i < n; ++i) {
    int j = (int)(rng() % i);
    b.edge("e" + std::to_string(en++), "v" + std::to_string(i), "v" + std::to_string(j),
           random_length(rng, opt.rational_lengths));
  }
  int extra = (int)(rng() % (opt.max_extra_edges + 1));
  for (int k = 0; k < extra; ++k) {
    int i = (int)(rng() % n), j = (int)(rng() % n);
    b.edge("e" + std::to_string(en++), "v" + std::to_string(i), "v" + std::to_string(j),
           random_length(rng, opt.rational_lengths));
  }
  return b.build();
}

inline Divisor random_divisor(std::mt19937& rng, const MetricGraph& g, int max_coeff = 2) {
  Divisor d;
  for (auto& v : g.vertices()) {
    int c = (int)(rng() % (2 * max_coeff + 1)) - max_coeff;
    if (c != 0) d.add(Point::vertex(v.id), c);
  }
  return d;
}

// every connected multigraph on <= 3 labelled vertices with <= max_edges
// edges (loops and parallels included), unit lengths
std::vector<MetricGraph> small_graph_suite(int max_edges);

// a random piecewise-affine function with integer slopes: vertex values in
// {0..3}, edge lengths chosen to divide the value differences
inline RationalFunction random_integer_slope_function(std::mt19937& rng, int max_vertices = 4,
                                                      int max_extra = 3) {
  MetricGraph shape = random_graph(rng, {max_vertices, max_extra, false, 0});
  std::map<VertexId, Rational> vals;
  for (auto& v : shape.vertices()) vals[v.id] = Rational((std::int64_t)(rng() % 4));
  GraphBuilder b;
  for (auto& v : shape.vertices()) b.vertex(v.id);
  for (auto& e : shape.edges()) {
    Rational delta = vals[e.head] - vals[e.tail];
    Rational len = delta.is_zero() ? random_length(rng, true)
                                   : (delta.sign() > 0 ? delta : -delta) / Rational(1 + (std::int64_t)(rng() % 2));
    b.edge(e.id, e.tail, e.head, len);
  }
  RationalFunction f;
  f.model = b.build();
  f.values = std::move(vals);
  return f;
}

}  // namespace testgen

#endif
