#ifndef TROPIC_DIVISOR_THEORY_HPP
#define TROPIC_DIVISOR_THEORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tropic/metric_graph.hpp"

namespace tropic {

// Continuous piecewise affine function with integer slopes, stored on a
// model refined far enough that it is affine on every edge.  Slopes on
// infinite edges are recorded separately, pointing away from the finite
// end; the value at an infinite vertex is +/-inf when its slope is nonzero.
struct RationalFunction {
  MetricGraph model;
  std::map<VertexId, Rational> values;
  std::map<EdgeId, std::int64_t> ray_slopes;

  Rational value_at(const VertexId& v) const;
  std::int64_t ray_slope(const EdgeId& e) const {
    auto it = ray_slopes.find(e);
    return it == ray_slopes.end() ? 0 : it->second;
  }
};

// div(f): sum of outgoing slopes at every vertex.  Throws on a
// non-integer slope.  Degree is always zero.
Divisor principal_divisor(const RationalFunction& f);

// The unique q-reduced representative of the class of D, computed on the
// uniform subdivision by Dhar's burning algorithm and mapped back to
// metric coordinates.
Divisor reduce_divisor(const MetricGraph& g, const Divisor& D, const Point& q);

// Reduced-divisor comparison at the canonical base point.
bool is_linearly_equivalent(const MetricGraph& g, const Divisor& D1, const Divisor& D2);

struct RankResult {
  std::int64_t rank = -1;
  // For rank r >= -1 the cheapest failing effective divisor: degree r+1,
  // |D - witness| empty.  Verifiable by the reduction test.
  Divisor witness;
};

// Baker-Norine rank of D.  The search runs over effective divisors
// supported on the vertices of the refined model containing supp(D)
// (a rank-determining set), with all reductions on the uniform
// subdivision.
RankResult rank(const MetricGraph& g, const Divisor& D);

// Rank on the non-augmented graph obtained by attaching g(p) virtual
// loops at every vertex of positive genus.  The loop length does not
// matter; it is a parameter so the invariance is testable.
std::int64_t weighted_rank(const MetricGraph& g, const Divisor& D,
                           const Rational& virtual_loop_length = Rational(1));

struct WedgeRankResult {
  std::int64_t rank = -1;
  // eta[m] = least h with r_{G1}(D1 + h(t)) == m, when it exists
  std::vector<std::optional<std::int64_t>> eta;
};

// Rank through the cut-vertex decomposition G = G1 v G2 at t:
//   r(D) = min_m { m + r_{G2}(D2 - eta(m)(t)) }.
// G1 is the component of side_hint when given, otherwise the one holding
// the smallest vertex id; the coefficient of D at t goes to G1.
WedgeRankResult wedge_rank(const MetricGraph& g, const Divisor& D, const Point& cut,
                           const std::optional<VertexId>& side_hint = std::nullopt);

}  // namespace tropic

#endif
