#include <doctest.h>

#include "testgen.hpp"
#include "tropic/corpus.hpp"
#include "tropic/figures.hpp"
#include "tropic/json_io.hpp"

using namespace tropic;

#ifndef TROPIC_DATA_DIR
#define TROPIC_DATA_DIR "data"
#endif

TEST_CASE("rational serialization is canonical p/q") {
  CHECK(io::to_json(Rational(6, 4)) == "3/2");
  CHECK(io::to_json(Rational(-2, 4)) == "-1/2");
  CHECK(io::to_json(Rational(5)) == "5/1");
  CHECK(io::rational_from_json("3/2") == Rational(3, 2));
  CHECK(io::rational_from_json("7") == Rational(7));
  CHECK(io::rational_from_json(io::json(4)) == Rational(4));
  CHECK_THROWS_AS(io::rational_from_json("x/y"), domain_error);
  CHECK_THROWS_AS(io::rational_from_json(io::json::object()), schema_error);
}

TEST_CASE("graph round trip on random graphs") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    MetricGraph g = testgen::random_graph(rng, {4, 4, true, 2});
    io::json j = io::to_json(g);
    MetricGraph g2 = io::graph_from_json(j);
    CHECK(io::to_json(g2) == j);
  }
}

TEST_CASE("graph round trip keeps infinite edges") {
  auto mod = figures::loop_graph(Rational(1)).elementary_modification(Point::vertex("p"));
  io::json j = io::to_json(mod.graph);
  MetricGraph g2 = io::graph_from_json(j);
  CHECK(io::to_json(g2) == j);
  CHECK(g2.vertex(mod.new_infinite_vertex).infinite);
}

TEST_CASE("divisor and point round trips") {
  Divisor d;
  d.add(Point::vertex("u"), 3);
  d.add(Point::on_edge("e1", Rational(1, 3)), -2);
  io::json j = io::to_json(d);
  CHECK(io::divisor_from_json(j) == d);
}

TEST_CASE("morphism round trip, normal and path form") {
  auto phi = figures::star_map();
  io::json j = io::to_json(phi);
  HarmonicMorphism phi2 = io::morphism_from_json(j);
  CHECK(io::to_json(phi2) == j);

  // a path-image morphism normalizes through refinement on load
  io::json jp = {
      {"source", io::to_json(figures::segment_graph(Rational(1)))},
      {"target",
       io::to_json(GraphBuilder()
                       .vertex("x")
                       .vertex("y")
                       .vertex("z")
                       .edge("f1", "x", "y", Rational(1))
                       .edge("f2", "y", "z", Rational(1))
                       .build())},
      {"vertex_map", {{"a", "x"}, {"b", "z"}}},
      {"edges", {{"e", {{"image", {"f1", "f2"}}, {"degree", 2}}}}}};
  HarmonicMorphism phi3 = io::morphism_from_json(jp);
  CHECK(validate_morphism(phi3).degree == 2);
  CHECK(phi3.source.edges().size() == 2);
}

TEST_CASE("function round trip with an infinite slope") {
  auto mod = figures::segment_graph(Rational(2)).elementary_modification(Point::vertex("b"));
  RationalFunction f;
  f.model = mod.graph;
  f.values = {{"a", Rational(0)}, {"b", Rational(1, 2)}};
  f.ray_slopes[mod.new_infinite_edge] = 2;
  io::json j = io::to_json(f);
  RationalFunction f2 = io::function_from_json(mod.graph, j);
  CHECK(f2.values == f.values);
  CHECK(f2.ray_slopes == f.ray_slopes);
}

TEST_CASE("query and certificate serialization") {
  hurwitz::Query q{4, 0, 1, {hurwitz::Partition::of({2, 2}), hurwitz::Partition::of({3, 1})}};
  io::json j = io::to_json(q);
  auto q2 = io::query_from_json(j);
  CHECK(q2.d == 4);
  CHECK(q2.profiles.size() == 2);
  CHECK(q2.profiles[0].parts == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("schema errors carry useful messages") {
  CHECK_THROWS_AS(io::graph_from_json(io::json::object()), schema_error);
  CHECK_THROWS_AS(io::graph_from_json({{"vertices", io::json::array()},
                                       {"edges", {{{"id", "e"}, {"ends", {"a"}}, {"length", "1"}}}}}),
                  schema_error);
}

TEST_CASE("corpus: at least ten entries, every file loads and validates") {
  auto entries = corpus::list(TROPIC_DATA_DIR);
  CHECK(entries.size() >= 10);
  for (auto& e : entries) {
    CAPTURE(e.name);
    io::json j = io::load_file(std::string(TROPIC_DATA_DIR) + "/" + e.file);
    if (e.kind == "graph") {
      CHECK(io::graph_from_json(j).validate().ok());
    } else if (e.kind == "morphism") {
      auto phi = io::morphism_from_json(j);
      CHECK(phi.source.validate().ok());
      CHECK(phi.target.validate().ok());
      CHECK(validate_morphism(phi).ok());
    } else if (e.kind == "divisor") {
      CHECK_NOTHROW(io::divisor_from_json(j));
    } else if (e.kind == "function") {
      CHECK_NOTHROW(io::function_from_json(figures::glasses_graph(), j));
    }
  }
}

TEST_CASE("corpus files agree with the figure builders") {
  auto same = [](const io::json& a, const io::json& b) { return a == b; };
  std::string dir = TROPIC_DATA_DIR;
  CHECK(same(io::load_file(dir + "/star_map.json"), io::to_json(figures::star_map())));
  CHECK(same(io::load_file(dir + "/glasses.json"), io::to_json(figures::glasses_graph())));
  CHECK(same(io::load_file(dir + "/a1.json"), io::to_json(figures::a1_graph())));
  CHECK(same(io::load_file(dir + "/a3.json"), io::to_json(figures::a3_graph())));
  CHECK(same(io::load_file(dir + "/g27.json"), io::to_json(figures::g27_graph())));
  CHECK(same(io::load_file(dir + "/luo_g7.json"), io::to_json(figures::luo_g7_graph())));
}
