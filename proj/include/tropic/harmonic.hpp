#ifndef TROPIC_HARMONIC_HPP
#define TROPIC_HARMONIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropic/divisor_theory.hpp"
#include "tropic/metric_graph.hpp"

namespace tropic {

// Per-edge behaviour of a morphism in normal form: an edge either maps
// onto exactly one whole target edge with a positive expansion factor, or
// is contracted to a target vertex.
struct EdgeAction {
  bool contracted = false;
  EdgeId image;             // if !contracted
  std::int64_t degree = 1;  // expansion factor, > 0
  bool reversed = false;    // source tail maps onto image head
  VertexId contracted_to;   // if contracted

  static EdgeAction mapped(EdgeId img, std::int64_t deg, bool rev = false) {
    EdgeAction a;
    a.image = std::move(img);
    a.degree = deg;
    a.reversed = rev;
    return a;
  }
  static EdgeAction contract(VertexId v) {
    EdgeAction a;
    a.contracted = true;
    a.contracted_to = std::move(v);
    return a;
  }
};

struct HarmonicMorphism {
  MetricGraph source;
  MetricGraph target;
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, EdgeAction> edge_map;

  const VertexId& image_of(const VertexId& v) const;
  const EdgeAction& action(const EdgeId& e) const;
  Point apply(const Point& source_point) const;  // pushforward of a point
};

struct MorphismReport {
  std::vector<Violation> violations;
  std::map<VertexId, std::int64_t> local_degree;  // d_{p'} per source vertex
  std::int64_t degree = 0;
  bool harmonic = false;
  bool degree_constant = false;
  bool surjective = false;
  bool has_contracted = false;
  bool finite = false;  // no contracted edges and surjective
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

MorphismReport validate_morphism(const HarmonicMorphism& phi);

// Throws domain_error when the morphism does not pass validate_morphism.
MorphismReport require_harmonic(const HarmonicMorphism& phi);

struct RamificationData {
  Divisor R;                              // on all source vertices
  std::map<VertexId, std::int64_t> ram;   // r_{p'} at finite vertices with d_{p'} > 0
  bool effective = false;                 // all r_{p'} >= 0
  bool etale = false;                     // R == 0
  bool generically_etale = false;         // R supported on infinite vertices
  bool finite = false;
};

// Also verifies the Riemann-Hurwitz identity K' = phi^*(K) + R exactly and
// throws if it fails (it cannot for a validated morphism).
RamificationData ramification(const HarmonicMorphism& phi);

struct ContractedComponent {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // fully contracted vertices, including isolated ones
  VertexId image;                  // the target vertex the component sits over
};

std::vector<ContractedComponent> contracted_set(const HarmonicMorphism& phi);

// phi^*(D).  Throws "non-finite over point" when the fiber of a support
// point meets a contracted component.
Divisor pullback(const HarmonicMorphism& phi, const Divisor& target_divisor);
// The fiber divisor D_x(phi) = phi^*(x).
Divisor fiber_divisor(const HarmonicMorphism& phi, const Point& x);
Divisor pushforward(const HarmonicMorphism& phi, const Divisor& source_divisor);

struct LocalProfiles {
  std::int64_t d = 0;  // d_{p'}
  // one partition (non-increasing) per tangent direction at phi(p'),
  // ordered by (target edge id, end)
  std::vector<std::vector<std::int64_t>> profiles;
};

LocalProfiles local_profiles(const HarmonicMorphism& phi, const VertexId& source_vertex);

// Raw morphism input where a source edge may run over a path of target
// edges; refine_to_compatible turns it into normal form.
struct RawEdgeImage {
  bool contracted = false;
  VertexId contracted_to;
  std::vector<std::pair<EdgeId, bool>> path;  // (target edge, reversed)
  std::int64_t degree = 1;
};

struct CompatibleMorphism {
  HarmonicMorphism phi;
  PointMap source_map;  // input source model -> normal-form model
};

CompatibleMorphism refine_to_compatible(const MetricGraph& source, const MetricGraph& target,
                                        const std::map<VertexId, VertexId>& vertex_map,
                                        const std::map<EdgeId, RawEdgeImage>& edges);

// Common refinement: make every listed target point a vertex and split
// source edges over the cuts.  Point maps for both sides are returned.
struct RefinedMorphism {
  HarmonicMorphism phi;
  PointMap source_map;
  PointMap target_map;
};
RefinedMorphism refine_morphism_at_targets(const HarmonicMorphism& phi,
                                           const std::vector<Point>& target_points);

struct FiberEquivalence {
  bool equivalent = false;
  RationalFunction witness;  // 0 on phi^{-1}(T_{x1}) side, d(x1,x2) on the other
};

// For finite phi onto a metric tree: constructs the explicit rational
// function with div F = D_{x1} - D_{x2} and verifies the identity.
FiberEquivalence fibers_equivalent_check(const HarmonicMorphism& phi, const Point& x1,
                                         const Point& x2);

HarmonicMorphism identity_morphism(const MetricGraph& g);

}  // namespace tropic

#endif
