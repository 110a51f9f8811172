// Regenerates the shipped example corpus under data/ from the builders in
// tropic::figures.  Run from the repository root:
//
//   ./build/tools/corpus_gen data
//
#include <iostream>

#include "tropic/figures.hpp"
#include "tropic/json_io.hpp"

using namespace tropic;
using io::json;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  json entries = json::array();
  auto put = [&](const std::string& name, const std::string& kind, const json& payload,
                 const std::string& note) {
    std::string file = name + ".json";
    io::save_file(dir + "/" + file, payload);
    entries.push_back({{"name", name}, {"file", file}, {"kind", kind}, {"note", note}});
  };

  put("star_map", "morphism", io::to_json(figures::star_map()),
      "figure-derived: degree-4 star with profiles (2,2),(2,2),(3,1); harmonic and effective "
      "but not liftable");
  put("loop_double_cover", "morphism", io::to_json(figures::loop_double_cover(Rational(2))),
      "etale degree-2 cover of a loop by the cycle of twice the length");
  put("segment_fold", "morphism", io::to_json(figures::segment_fold(Rational(2))),
      "degree-2 fold of a segment, the |x| map");
  put("cycle_contraction", "morphism", io::to_json(figures::cycle_contraction()),
      "figure-derived: degree-1 morphism contracting a cycle over a line; input for the weak "
      "resolution");
  put("polynomial_like_deg3", "morphism", io::to_json(figures::polynomial_like_deg3()),
      "generically etale polynomial-like degree-3 tree morphism, profiles (3),(2,1),(2,1)");
  put("theta_to_tripod", "morphism",
      io::to_json(figures::theta_to_tripod(Rational(1), Rational(2), Rational(3))),
      "hyperelliptic quotient of the theta graph, fold points explicit");
  put("theta", "graph", io::to_json(figures::theta_graph(Rational(1), Rational(2), Rational(3))),
      "genus-2 theta graph with distinct edge lengths");
  put("glasses", "graph", io::to_json(figures::glasses_graph()),
      "figure-derived: genus-2 two-loop graph, K = (p)+(q) ~ 2(t)");
  put("glasses_divisor", "divisor", io::to_json(figures::glasses_divisor()),
      "(p)+(q)-2(t) on the glasses graph; principal");
  put("glasses_function", "function", io::to_json(figures::glasses_function()),
      "f with div(f) = 2(t)-(p)-(q) on the glasses graph");
  put("g3", "graph", io::to_json(figures::g3_graph()),
      "figure-derived: genus-3 graph on which 3(p) and 3(t) are not equivalent");
  put("a1", "graph", io::to_json(figures::a1_graph()),
      "figure-derived: genus-9 chain component; a(p)+b(q) has rank 0 for a<=3, b<=1");
  put("a2", "graph", io::to_json(figures::a2_graph()),
      "figure-derived: second metric realization of the a1 type");
  put("a3", "graph", io::to_json(figures::a3_graph()),
      "figure-derived: genus-6 chain component; a(p)+b(q) has rank 0 for a,b<=2");
  put("g27", "graph", io::to_json(figures::g27_graph()),
      "figure-derived: genus-27 assembly of two a1-type components and one a3-type component "
      "at a central vertex");
  put("luo_g7", "graph", io::to_json(figures::luo_g7_graph()),
      "figure-derived: genus-7 graph with unit lengths, not hyperelliptic");
  put("luo_divisor", "divisor", io::to_json(figures::luo_divisor()),
      "(p)+(q)+(s) on luo_g7; rank 1");
  put("kappa_bridge_3_0", "graph", io::to_json(figures::kappa_bridge_graph(3, 0)),
      "figure-derived: three bridges at a genus-0 point; hyperelliptic but not liftable");
  put("kappa_bridge_3_1", "graph", io::to_json(figures::kappa_bridge_graph(3, 1)),
      "figure-derived: three bridges at a genus-1 point; hyperelliptic and liftable");

  io::save_file(dir + "/corpus.json", json{{"entries", entries}});
  std::cout << "wrote " << entries.size() << " corpus entries to " << dir << "\n";
  return 0;
}
