#include "testgen.hpp"

#include <array>
#include <functional>

namespace testgen {

std::vector<MetricGraph> small_graph_suite(int max_edges) {
  std::vector<MetricGraph> out;
  // vertex counts 1..3; edge slots: (0,0),(1,1),(2,2),(0,1),(0,2),(1,2)
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) slots.push_back({i, j});
    std::vector<int> mult(slots.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t s, int used) {
      if (s == slots.size()) {
        // connectivity over non-loop slots
        std::array<int, 3> parent{0, 1, 2};
        std::function<int(int)> find = [&](int x) {
          return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (std::size_t k = 0; k < slots.size(); ++k)
          if (mult[k] > 0 && slots[k].first != slots[k].second)
            parent[find(slots[k].first)] = find(slots[k].second);
        for (int i = 1; i < n; ++i)
          if (find(i) != find(0)) return;
        GraphBuilder b;
        for (int i = 0; i < n; ++i) b.vertex("v" + std::to_string(i));
        int en = 0;
        for (std::size_t k = 0; k < slots.size(); ++k)
          for (int m = 0; m < mult[k]; ++m)
            b.edge("e" + std::to_string(en++), "v" + std::to_string(slots[k].first),
                   "v" + std::to_string(slots[k].second), Rational(1));
        out.push_back(b.build());
        return;
      }
      for (int m = 0; m + used <= max_edges; ++m) {
        mult[s] = m;
        rec(s + 1, used + m);
      }
      mult[s] = 0;
    };
    rec(0, 0);
  }
  return out;
}

}  // namespace testgen
