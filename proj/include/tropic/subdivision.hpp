#ifndef TROPIC_SUBDIVISION_HPP
#define TROPIC_SUBDIVISION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "tropic/metric_graph.hpp"

namespace tropic {

// Integer-length model of a finite metric graph: the common denominator N
// of all edge lengths (and requested point offsets) is cleared and every
// edge is cut into unit segments.  Loops are forced to have at least two
// segments so the multigraph carries the full cycle space for chip-firing.
class Subdivision {
public:
  static Subdivision build(const MetricGraph& g, const std::vector<Point>& pts,
                           std::int64_t max_vertices = 2000000,
                           std::int64_t scale_multiplier = 1);

  int size() const { return (int)adj_.size(); }
  std::int64_t scale() const { return scale_; }
  std::int64_t arc_count() const { return arcs_; }

  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  int lattice_of_vertex(const VertexId& v) const;
  // p must be normalized and have offset a multiple of 1/scale
  int lattice_of(const MetricGraph& g, const Point& p) const;
  const Point& point_of(int lattice) const { return points_[lattice]; }

  std::vector<std::int64_t> to_chips(const MetricGraph& g, const Divisor& d) const;
  Divisor to_divisor(const std::vector<std::int64_t>& chips) const;

  // Dhar's burning algorithm: the unique q-reduced divisor equivalent to
  // chips.  Exact integer arithmetic throughout.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> chips, int q) const;

  // True iff chips is effective away from q and every nonempty subset not
  // containing q can be "burnt" (i.e. chips is q-reduced).
  bool is_reduced(const std::vector<std::int64_t>& chips, int q) const;

private:
  std::vector<std::vector<int>> adj_;  // neighbor lists with multiplicity
  std::vector<Point> points_;          // lattice vertex -> metric point
  std::map<VertexId, int> vlat_;
  std::map<EdgeId, std::vector<int>> edge_path_;  // interior lattice ids, tail to head
  std::int64_t scale_ = 1;
  std::int64_t arcs_ = 0;
};

}  // namespace tropic

#endif
