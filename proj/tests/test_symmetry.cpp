#include <doctest.h>

#include "tropic/divisor_theory.hpp"
#include "tropic/figures.hpp"
#include "tropic/symmetry.hpp"

using namespace tropic;

TEST_CASE("automorphisms: segment with distinct endpoint genera is rigid") {
  GraphBuilder b;
  b.vertex("a", 1).vertex("b", 2).edge("e", "a", "b", Rational(1));
  auto G = automorphisms(b.build());
  CHECK(G.elements.size() == 1);
  CHECK(G.elements[0].is_identity());
}

TEST_CASE("automorphisms of the equilateral theta graph: order 12") {
  auto G = automorphisms(figures::theta_graph(Rational(1), Rational(1), Rational(1)));
  CHECK(G.elements.size() == 12);
}

TEST_CASE("automorphisms of a theta graph with distinct lengths: order 2") {
  auto G = automorphisms(figures::theta_graph(Rational(1), Rational(2), Rational(3)));
  REQUIRE(G.elements.size() == 2);
  const GraphAutomorphism& s = G.elements[0].is_identity() ? G.elements[1] : G.elements[0];
  CHECK(s.vperm.at("u") == "v");
  for (auto& [e, f] : s.eperm) {
    CHECK(f.first == e);
    CHECK(f.second);  // every edge is reversed
  }
}

TEST_CASE("the group is closed under composition") {
  auto G = automorphisms(figures::theta_graph(Rational(1), Rational(1), Rational(2)));
  for (auto& a : G.elements)
    for (auto& b : G.elements) {
      GraphAutomorphism c = compose(G.model, a, b);
      CHECK(std::find(G.elements.begin(), G.elements.end(), c) != G.elements.end());
    }
}

TEST_CASE("fixed midpoints: identity only gives the empty set") {
  auto G = automorphisms(figures::theta_graph(Rational(1), Rational(2), Rational(3)));
  GraphAutomorphism id;
  for (auto& v : G.model.vertices()) id.vperm[v.id] = v.id;
  for (auto& e : G.model.edges()) id.eperm[e.id] = {e.id, false};
  CHECK(fixed_midpoints(G.model, {id}).empty());
}

TEST_CASE("fixed midpoints of the theta end swap: three of them") {
  auto G = automorphisms(figures::theta_graph(Rational(1), Rational(2), Rational(3)));
  auto W = fixed_midpoints(G.model, G.elements);
  CHECK(W.size() == 3);
  for (auto& w : W) {
    CHECK(w.stabilizer_order == 2);
    CHECK(w.rotation_order == 1);
  }
}

TEST_CASE("a rotation of the triangle has no fixed midpoints") {
  GraphBuilder b;
  b.vertex("v1").vertex("v2").vertex("v3");
  b.edge("e12", "v1", "v2", Rational(1));
  b.edge("e23", "v2", "v3", Rational(1));
  b.edge("e31", "v3", "v1", Rational(1));
  auto G = automorphisms(b.build());
  CHECK(G.elements.size() == 6);
  for (auto& a : G.elements) {
    bool rotation = !a.is_identity() && a.vperm.at("v1") != "v1" && a.vperm.at("v2") != "v2" &&
                    a.vperm.at("v3") != "v3";
    if (rotation) CHECK(fixed_midpoints(G.model, {a}).empty());
  }
}

TEST_CASE("quotient by the trivial group is the identity") {
  MetricGraph g = figures::theta_graph(Rational(1), Rational(2), Rational(3));
  auto q = quotient(g, {});
  CHECK(q.group_order == 1);
  CHECK(q.graph.edges().size() == 3);
  CHECK(validate_morphism(q.projection).degree == 1);
}

TEST_CASE("theta quotient by the end swap is a tripod with halved legs") {
  auto G = automorphisms(figures::theta_graph(Rational(1), Rational(2), Rational(3)));
  const GraphAutomorphism& s = G.elements[0].is_identity() ? G.elements[1] : G.elements[0];
  auto q = quotient(G.model, {s});
  CHECK(q.group_order == 2);
  CHECK(q.graph.genus_data().first_betti == 0);
  CHECK(q.graph.edges().size() == 3);
  std::multiset<Rational> lens;
  for (auto& e : q.graph.edges()) lens.insert(e.length);
  CHECK(lens == std::multiset<Rational>{Rational(1, 2), Rational(1), Rational(3, 2)});
  auto rep = validate_morphism(q.projection);
  REQUIRE(rep.ok());
  CHECK(rep.degree == 2);
  CHECK(rep.finite);
}

TEST_CASE("free rotation of a cycle gives an etale degree-2 projection") {
  GraphBuilder b;
  b.vertex("v1").vertex("v2");
  b.edge("e1", "v1", "v2", Rational(3)).edge("e2", "v2", "v1", Rational(3));
  MetricGraph g = b.build();
  GraphAutomorphism rot;
  rot.vperm = {{"v1", "v2"}, {"v2", "v1"}};
  rot.eperm = {{"e1", {"e2", false}}, {"e2", {"e1", false}}};
  auto q = quotient(g, {rot});
  CHECK(q.group_order == 2);
  REQUIRE(q.graph.edges().size() == 1);
  CHECK(q.graph.edges()[0].is_loop());
  CHECK(q.graph.edges()[0].length == Rational(3));
  auto ram = ramification(q.projection);
  CHECK(ram.etale);
}

TEST_CASE("non-tame stabilizers are rejected") {
  auto G = automorphisms(figures::theta_graph(Rational(1), Rational(2), Rational(3)));
  const GraphAutomorphism& s = G.elements[0].is_identity() ? G.elements[1] : G.elements[0];
  CHECK_THROWS_WITH_AS(quotient(G.model, {s}, 2), doctest::Contains("non-tame"), domain_error);
}

TEST_CASE("the theta graph is hyperelliptic with the end-swap involution") {
  auto hs = is_hyperelliptic(figures::theta_graph(Rational(1), Rational(2), Rational(3)));
  REQUIRE(hs.hyperelliptic);
  CHECK(hs.involution->vperm.at("u") == "v");
  CHECK(hs.weighted_rank_check == 1);
}

TEST_CASE("all seven minimal genus-2 types are hyperelliptic") {
  for (auto& [name, g] : figures::genus2_types()) {
    CAPTURE(name);
    auto hs = is_hyperelliptic(g);
    CHECK(hs.hyperelliptic);
    CHECK(hs.weighted_rank_check == 1);
  }
}

TEST_CASE("the Luo graph is not hyperelliptic") {
  auto hs = hyperelliptic_involution(figures::luo_g7_graph());
  CHECK_FALSE(hs.hyperelliptic);
}

TEST_CASE("kappa-bridge graphs: folding involution fixing the bridges") {
  MetricGraph g = figures::kappa_bridge_graph(3, 1);
  auto hs = hyperelliptic_involution(g);
  REQUIRE(hs.hyperelliptic);
  for (auto& b : hs.minimal_model.bridge_edges()) {
    auto im = hs.involution->eperm.at(b);
    CHECK(im.first == b);
    CHECK_FALSE(im.second);
  }
}

TEST_CASE("hyperelliptic liftability: theta has kappa = 0 everywhere") {
  auto rep = hyperelliptic_liftable(figures::theta_graph(Rational(1), Rational(2), Rational(3)));
  CHECK(rep.liftable);
  CHECK(rep.kappa_equals_bridges);
  for (auto& pv : rep.vertices) CHECK(pv.kappa == 0);
}

TEST_CASE("kappa-bridge family: liftable iff 2 g(p) >= kappa - 2") {
  for (int kappa = 1; kappa <= 4; ++kappa)
    for (int gp = 0; gp <= 2; ++gp) {
      CAPTURE(kappa);
      CAPTURE(gp);
      auto rep = hyperelliptic_liftable(figures::kappa_bridge_graph(kappa, gp));
      CHECK(rep.liftable == (2 * gp >= kappa - 2));
      CHECK(rep.kappa_equals_bridges);
    }
}

TEST_CASE("weighted rank of 2(p) on the kappa-bridge graph of the example") {
  // 2 <= 2 g(p) < kappa - 2
  MetricGraph g = figures::kappa_bridge_graph(5, 1);
  Divisor d;
  d.add(Point::vertex("p"), 2);
  CHECK(weighted_rank(g, d) == 1);
}

TEST_CASE("non-hyperelliptic input to the liftability criterion errors") {
  CHECK_THROWS_WITH_AS(hyperelliptic_liftable(figures::luo_g7_graph()),
                       doctest::Contains("not hyperelliptic"), domain_error);
}
