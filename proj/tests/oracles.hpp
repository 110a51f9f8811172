#ifndef TROPIC_TESTS_ORACLES_HPP
#define TROPIC_TESTS_ORACLES_HPP

// Independent reference implementations used only by the test suite.
// Deliberately naive and structured differently from the library engine:
// reduction fires one unit at a time, the rank search runs over the full
// vertex set of the unit-length model, and divisors are checked on a
// doubled subdivision.

#include <cstdint>
#include <map>
#include <vector>

#include "tropic/metric_graph.hpp"

namespace oracle {

struct UnitGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // unit segments, no loops
  std::vector<std::vector<int>> adj;

  void add_arc(int a, int b) {
    arcs.push_back({a, b});
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
};

// Scale-N unit model of a finite metric graph together with the chip
// vector of a divisor.  N must clear all denominators.
struct UnitModel {
  UnitGraph graph;
  std::map<tropic::VertexId, int> vertex_at;
  std::int64_t scale = 1;
};

UnitModel unit_model(const tropic::MetricGraph& g, std::int64_t scale);
std::vector<std::int64_t> chips_of(const UnitModel& m, const tropic::MetricGraph& g,
                                   const tropic::Divisor& d);

// Slow single-step q-reduction (Dhar's algorithm without batching).
std::vector<std::int64_t> reduce_slow(const UnitGraph& g, std::vector<std::int64_t> chips, int q);

bool effective(const std::vector<std::int64_t>& chips);

// Baker-Norine rank by definition, searching effective test divisors over
// every vertex of the unit model.
std::int64_t rank_naive(const UnitGraph& g, const std::vector<std::int64_t>& chips);

// Direct burning check on the metric model: a divisor supported on the
// vertices of a refined model is q-reduced iff it is effective away from q
// and the fire started at q crosses the whole graph.
bool metric_reduced(const tropic::MetricGraph& g, const tropic::Divisor& d, const tropic::Point& q);

// rank of a divisor on the metric graph computed entirely through the
// oracle path (2N subdivision, full candidate set, slow reduction)
std::int64_t metric_rank_naive(const tropic::MetricGraph& g, const tropic::Divisor& d);

// Independent of the rank-determining restriction: the plain finite-graph
// rank recursion over ALL vertices of a doubled subdivision, with the fast
// burning engine.  This is the "subdivided finite graph" route.
std::int64_t rank_full_lattice(const tropic::MetricGraph& g, const tropic::Divisor& d);

}  // namespace oracle

#endif
