#ifndef TROPIC_SYMMETRY_HPP
#define TROPIC_SYMMETRY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tropic/harmonic.hpp"
#include "tropic/metric_graph.hpp"

namespace tropic {

// Length- and genus-preserving automorphism of the canonical loopless
// model (loops are subdivided at their midpoints first).
struct GraphAutomorphism {
  std::map<VertexId, VertexId> vperm;
  std::map<EdgeId, std::pair<EdgeId, bool>> eperm;  // image, reversed

  bool is_identity() const;
  friend bool operator==(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    return a.vperm == b.vperm && a.eperm == b.eperm;
  }
  friend bool operator<(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    if (a.vperm != b.vperm) return a.vperm < b.vperm;
    return a.eperm < b.eperm;
  }
};

GraphAutomorphism compose(const MetricGraph& model, const GraphAutomorphism& first,
                          const GraphAutomorphism& then);

struct AutomorphismGroup {
  MetricGraph model;  // loopless canonical refinement of the input
  PointMap to_model;  // input -> model
  std::vector<GraphAutomorphism> elements;  // full group, identity first
};

// All automorphisms, by backtracking over incidence with length/genus
// signatures.  Throws resource_error past the budget.
AutomorphismGroup automorphisms(const MetricGraph& g, std::int64_t max_elements = 100000);

struct FixedMidpoint {
  Point point;  // midpoint, in model coordinates
  EdgeId edge;
  std::int64_t stabilizer_order;  // |H_w|
  std::int64_t rotation_order;    // the index-2 subgroup fixing the edge ends
};

// W_H: midpoints of edges reversed by some element of H.
std::vector<FixedMidpoint> fixed_midpoints(const MetricGraph& model,
                                           const std::vector<GraphAutomorphism>& H);

struct QuotientResult {
  MetricGraph graph;            // quotient metric graph (plain, genus 0)
  HarmonicMorphism projection;  // refined model -> quotient, degree |H|
  MetricGraph refined_model;    // model refined at W_H
  PointMap refinement;          // model -> refined model
  std::int64_t group_order = 1;
};

// Quotient by the subgroup generated by the given elements.  The model is
// refined at W_H first; edge orbits project with length l(e)*|H_e|.
// Stabilizer orders must be prime to char_p when char_p > 0.
QuotientResult quotient(const MetricGraph& model, const std::vector<GraphAutomorphism>& gens,
                        std::int64_t char_p = 0);

struct HyperellipticSearch {
  MetricGraph minimal_model;  // minimized, loops subdivided
  std::optional<GraphAutomorphism> involution;
  bool hyperelliptic = false;
  std::int64_t weighted_rank_check = -2;  // r^#((p)+(s(p))) when an involution exists
};

// The involution with tree quotient fixing all positive-genus points, when
// it exists; unique on minimal graphs of genus >= 2.
HyperellipticSearch hyperelliptic_involution(const MetricGraph& g);

// Involution search plus the weighted-rank cross-check.
HyperellipticSearch is_hyperelliptic(const MetricGraph& g);

struct HyperellipticLiftReport {
  bool liftable = false;
  struct PerVertex {
    VertexId vertex;
    std::int64_t genus = 0;
    std::int64_t kappa = 0;         // tangent directions fixed by s
    std::int64_t bridge_count = 0;  // bridges at the vertex
    bool ok = false;                // 2 g >= kappa - 2
  };
  std::vector<PerVertex> vertices;
  bool kappa_equals_bridges = false;
};

// Minimal skeleton criterion for hyperelliptic graphs: liftable iff
// 2 g(p) >= kappa(p) - 2 at every point.
HyperellipticLiftReport hyperelliptic_liftable(const MetricGraph& g);

}  // namespace tropic

#endif
