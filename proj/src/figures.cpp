#include "tropic/figures.hpp"

#include "tropic/errors.hpp"

namespace tropic::figures {

MetricGraph loop_graph(const Rational& len) {
  return GraphBuilder().vertex("p").edge("loop", "p", "p", len).build();
}

MetricGraph theta_graph(const Rational& l1, const Rational& l2, const Rational& l3) {
  return GraphBuilder()
      .vertex("u")
      .vertex("v")
      .edge("e1", "u", "v", l1)
      .edge("e2", "u", "v", l2)
      .edge("e3", "u", "v", l3)
      .build();
}

MetricGraph banana_graph(int k, const std::vector<Rational>& lengths) {
  GraphBuilder b;
  b.vertex("u").vertex("v");
  for (int i = 0; i < k; ++i) b.edge("e" + std::to_string(i + 1), "u", "v", lengths.at(i));
  return b.build();
}

MetricGraph segment_graph(const Rational& len) {
  return GraphBuilder().vertex("a").vertex("b").edge("e", "a", "b", len).build();
}

HarmonicMorphism star_map() {
  GraphBuilder tb;
  tb.vertex("c").vertex("A", 0, true).vertex("B", 0, true).vertex("C", 0, true);
  tb.infinite_edge("legA", "c", "A").infinite_edge("legB", "c", "B").infinite_edge("legC", "c", "C");
  GraphBuilder sb;
  sb.vertex("c'");
  for (const char* l : {"a1", "a2", "b1", "b2", "c1", "c2"}) {
    sb.vertex(std::string(l) + "_end", 0, true);
    sb.infinite_edge(l, "c'", std::string(l) + "_end");
  }
  HarmonicMorphism phi;
  phi.source = sb.build();
  phi.target = tb.build();
  phi.vertex_map = {{"c'", "c"},      {"a1_end", "A"}, {"a2_end", "A"}, {"b1_end", "B"},
                    {"b2_end", "B"},  {"c1_end", "C"}, {"c2_end", "C"}};
  phi.edge_map = {{"a1", EdgeAction::mapped("legA", 2)}, {"a2", EdgeAction::mapped("legA", 2)},
                  {"b1", EdgeAction::mapped("legB", 2)}, {"b2", EdgeAction::mapped("legB", 2)},
                  {"c1", EdgeAction::mapped("legC", 3)}, {"c2", EdgeAction::mapped("legC", 1)}};
  return phi;
}

HarmonicMorphism loop_double_cover(const Rational& L) {
  HarmonicMorphism phi;
  phi.source = GraphBuilder()
                   .vertex("u1")
                   .vertex("u2")
                   .edge("s1", "u1", "u2", L)
                   .edge("s2", "u2", "u1", L)
                   .build();
  phi.target = GraphBuilder().vertex("w").edge("t", "w", "w", L).build();
  phi.vertex_map = {{"u1", "w"}, {"u2", "w"}};
  phi.edge_map = {{"s1", EdgeAction::mapped("t", 1)}, {"s2", EdgeAction::mapped("t", 1)}};
  return phi;
}

HarmonicMorphism segment_fold(const Rational& half) {
  HarmonicMorphism phi;
  phi.source = GraphBuilder()
                   .vertex("m")
                   .vertex("a")
                   .vertex("b")
                   .edge("left", "m", "a", half)
                   .edge("right", "m", "b", half)
                   .build();
  phi.target = GraphBuilder().vertex("w").vertex("t").edge("wt", "w", "t", half).build();
  phi.vertex_map = {{"m", "w"}, {"a", "t"}, {"b", "t"}};
  phi.edge_map = {{"left", EdgeAction::mapped("wt", 1)}, {"right", EdgeAction::mapped("wt", 1)}};
  return phi;
}

HarmonicMorphism cycle_contraction() {
  HarmonicMorphism phi;
  phi.source = GraphBuilder()
                   .vertex("v")
                   .vertex("ia", 0, true)
                   .vertex("ib", 0, true)
                   .edge("cyc", "v", "v", Rational(1))
                   .infinite_edge("arm_a", "v", "ia")
                   .infinite_edge("arm_b", "v", "ib")
                   .build();
  phi.target = GraphBuilder()
                   .vertex("w")
                   .vertex("ja", 0, true)
                   .vertex("jb", 0, true)
                   .infinite_edge("ray_a", "w", "ja")
                   .infinite_edge("ray_b", "w", "jb")
                   .build();
  phi.vertex_map = {{"v", "w"}, {"ia", "ja"}, {"ib", "jb"}};
  phi.edge_map = {{"cyc", EdgeAction::contract("w")},
                  {"arm_a", EdgeAction::mapped("ray_a", 1)},
                  {"arm_b", EdgeAction::mapped("ray_b", 1)}};
  return phi;
}

HarmonicMorphism polynomial_like_deg3() {
  GraphBuilder tb;
  tb.vertex("c").vertex("A", 0, true).vertex("B", 0, true).vertex("C", 0, true);
  tb.infinite_edge("legA", "c", "A").infinite_edge("legB", "c", "B").infinite_edge("legC", "c", "C");
  GraphBuilder sb;
  sb.vertex("p");
  for (const char* l : {"rA", "rB1", "rB2", "rC1", "rC2"}) {
    sb.vertex(std::string(l) + "_end", 0, true);
    sb.infinite_edge(l, "p", std::string(l) + "_end");
  }
  HarmonicMorphism phi;
  phi.source = sb.build();
  phi.target = tb.build();
  phi.vertex_map = {{"p", "c"},        {"rA_end", "A"},  {"rB1_end", "B"},
                    {"rB2_end", "B"},  {"rC1_end", "C"}, {"rC2_end", "C"}};
  phi.edge_map = {{"rA", EdgeAction::mapped("legA", 3)},  {"rB1", EdgeAction::mapped("legB", 2)},
                  {"rB2", EdgeAction::mapped("legB", 1)}, {"rC1", EdgeAction::mapped("legC", 2)},
                  {"rC2", EdgeAction::mapped("legC", 1)}};
  return phi;
}

HarmonicMorphism theta_to_tripod(const Rational& l1, const Rational& l2, const Rational& l3) {
  GraphBuilder sb;
  sb.vertex("u").vertex("v");
  const Rational ls[3] = {l1, l2, l3};
  for (int i = 0; i < 3; ++i) {
    std::string m = "m" + std::to_string(i + 1);
    sb.vertex(m);
    sb.edge("e" + std::to_string(i + 1) + "a", "u", m, ls[i] / Rational(2));
    sb.edge("e" + std::to_string(i + 1) + "b", m, "v", ls[i] / Rational(2));
  }
  GraphBuilder tb;
  tb.vertex("w");
  for (int i = 0; i < 3; ++i) {
    std::string n = "n" + std::to_string(i + 1);
    tb.vertex(n);
    tb.edge("leg" + std::to_string(i + 1), "w", n, ls[i] / Rational(2));
  }
  HarmonicMorphism phi;
  phi.source = sb.build();
  phi.target = tb.build();
  phi.vertex_map = {{"u", "w"}, {"v", "w"}, {"m1", "n1"}, {"m2", "n2"}, {"m3", "n3"}};
  for (int i = 1; i <= 3; ++i) {
    std::string leg = "leg" + std::to_string(i);
    phi.edge_map["e" + std::to_string(i) + "a"] = EdgeAction::mapped(leg, 1, false);
    phi.edge_map["e" + std::to_string(i) + "b"] = EdgeAction::mapped(leg, 1, true);
  }
  return phi;
}

MetricGraph glasses_graph() {
  return GraphBuilder()
      .vertex("p")
      .vertex("q")
      .vertex("t")
      .edge("lp", "p", "p", Rational(2))
      .edge("br", "p", "q", Rational(1))
      .edge("c1", "q", "t", Rational(1))
      .edge("c2", "q", "t", Rational(1))
      .build();
}

Divisor glasses_divisor() {
  Divisor d;
  d.add(Point::vertex("p"), 1);
  d.add(Point::vertex("q"), 1);
  d.add(Point::vertex("t"), -2);
  return d;
}

RationalFunction glasses_function() {
  RationalFunction f;
  f.model = glasses_graph();
  f.values = {{"p", Rational(0)}, {"q", Rational(-1)}, {"t", Rational(-2)}};
  return f;
}

MetricGraph g3_graph() {
  return GraphBuilder()
      .vertex("p")
      .vertex("u")
      .vertex("z")
      .vertex("w")
      .vertex("t")
      .edge("pu", "p", "u", Rational(1))
      .edge("uz", "u", "z", Rational(1))
      .edge("zw", "z", "w", Rational(1))
      .edge("uw1", "u", "w", Rational(2))
      .edge("uw2", "u", "w", Rational(3))
      .edge("uw3", "u", "w", Rational(5))
      .edge("wt", "w", "t", Rational(2))
      .build();
}

namespace {

// chain [pendant p] - [banana core] - [theta] - [cycle with q], the shape
// behind the rank-zero lemmas; `core` sets the banana lengths
MetricGraph a_chain(const std::string& prefix, const std::vector<Rational>& core,
                    const Rational theta_l[3], const Rational& cyc1, const Rational& cyc2) {
  GraphBuilder b;
  auto id = [&prefix](const std::string& s) { return prefix + s; };
  b.vertex(id("p")).vertex(id("u")).vertex(id("w")).vertex(id("t")).vertex(id("s")).vertex(id("q"));
  b.edge(id("pu"), id("p"), id("u"), Rational(1));
  for (std::size_t i = 0; i < core.size(); ++i)
    b.edge(id("core") + std::to_string(i + 1), id("u"), id("w"), core[i]);
  b.edge(id("wt"), id("w"), id("t"), Rational(2));
  for (int i = 0; i < 3; ++i)
    b.edge(id("th") + std::to_string(i + 1), id("t"), id("s"), theta_l[i]);
  b.edge(id("cy1"), id("s"), id("q"), cyc1);
  b.edge(id("cy2"), id("s"), id("q"), cyc2);
  return b.build();
}

}  // namespace

MetricGraph a1_graph() {
  const Rational th[3] = {Rational(1), Rational(2), Rational(3)};
  return a_chain("a1_", {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6), Rational(7)},
                 th, Rational(1), Rational(2));
}

MetricGraph a2_graph() {
  const Rational th[3] = {Rational(2), Rational(3), Rational(5)};
  return a_chain("a2_", {Rational(2), Rational(3), Rational(4), Rational(5), Rational(6), Rational(7), Rational(9)},
                 th, Rational(1), Rational(3));
}

MetricGraph a3_graph() {
  GraphBuilder b;
  auto id = [](const std::string& s) { return "a3_" + s; };
  b.vertex(id("p")).vertex(id("u")).vertex(id("w")).vertex(id("t")).vertex(id("x")).vertex(id("s")).vertex(id("q"));
  b.edge(id("pu"), id("p"), id("u"), Rational(1));
  const Rational core[4] = {Rational(1), Rational(2), Rational(3), Rational(5)};
  for (int i = 0; i < 4; ++i) b.edge(id("core") + std::to_string(i + 1), id("u"), id("w"), core[i]);
  b.edge(id("wt"), id("w"), id("t"), Rational(2));
  // theta between t and x, with the cut s sitting inside the length-2 edge
  b.edge(id("th1"), id("t"), id("x"), Rational(1));
  b.edge(id("th2a"), id("t"), id("s"), Rational(1));
  b.edge(id("th2b"), id("s"), id("x"), Rational(1));
  b.edge(id("th3"), id("t"), id("x"), Rational(3));
  b.edge(id("cy1"), id("s"), id("q"), Rational(1));
  b.edge(id("cy2"), id("s"), id("q"), Rational(2));
  return b.build();
}

MetricGraph g27_graph() {
  // two A1-type and one A3-type components, their pendant tips p and q
  // merged into one central vertex
  GraphBuilder b;
  b.vertex("P");
  auto splice = [&b](const MetricGraph& comp, const std::string& prefix) {
    for (auto& v : comp.vertices()) {
      if (v.id == prefix + "p" || v.id == prefix + "q") continue;
      b.vertex(v.id, v.genus, v.infinite);
    }
    for (auto& e : comp.edges()) {
      VertexId t = e.tail, h = e.head;
      if (t == prefix + "p" || t == prefix + "q") t = "P";
      if (h == prefix + "p" || h == prefix + "q") h = "P";
      b.edge(e.id, t, h, e.length);
    }
  };
  MetricGraph a1 = a1_graph();
  MetricGraph a3 = a3_graph();
  splice(a1, "a1_");
  // second copy of A1 with fresh ids
  {
    GraphBuilder c;
    for (auto& v : a1.vertices()) c.vertex("x2_" + v.id, v.genus, v.infinite);
    for (auto& e : a1.edges()) c.edge("x2_" + e.id, "x2_" + e.tail, "x2_" + e.head, e.length);
    MetricGraph copy = c.build();
    // the pendant tips of the copy are x2_a1_p and x2_a1_q
    for (auto& v : copy.vertices()) {
      if (v.id == "x2_a1_p" || v.id == "x2_a1_q") continue;
      b.vertex(v.id, v.genus, v.infinite);
    }
    for (auto& e : copy.edges()) {
      VertexId t = e.tail, h = e.head;
      if (t == "x2_a1_p" || t == "x2_a1_q") t = "P";
      if (h == "x2_a1_p" || h == "x2_a1_q") h = "P";
      b.edge(e.id, t, h, e.length);
    }
  }
  splice(a3, "a3_");
  return b.build();
}

MetricGraph luo_g7_graph() {
  // three vertices with three unit edges between each pair; genus 7
  GraphBuilder b;
  b.vertex("p").vertex("q").vertex("s");
  int n = 0;
  const char* pairs[3][2] = {{"p", "q"}, {"q", "s"}, {"s", "p"}};
  for (auto& pr : pairs)
    for (int k = 0; k < 3; ++k)
      b.edge("e" + std::to_string(++n), pr[0], pr[1], Rational(1));
  return b.build();
}

Divisor luo_divisor() {
  Divisor d;
  d.add(Point::vertex("p"), 1);
  d.add(Point::vertex("q"), 1);
  d.add(Point::vertex("s"), 1);
  return d;
}

MetricGraph kappa_bridge_graph(int kappa, int gp) {
  GraphBuilder b;
  b.vertex("p", gp);
  for (int i = 1; i <= kappa; ++i) {
    std::string c = "c" + std::to_string(i);
    b.vertex(c, 1);
    b.edge("b" + std::to_string(i), "p", c, Rational(i));
    b.edge("loop" + std::to_string(i), c, c, Rational(2 * i + 1));
  }
  return b.build();
}

std::vector<std::pair<std::string, MetricGraph>> genus2_types() {
  std::vector<std::pair<std::string, MetricGraph>> out;
  out.push_back({"theta", theta_graph(Rational(1), Rational(2), Rational(3))});
  out.push_back({"dumbbell", GraphBuilder()
                                 .vertex("u")
                                 .vertex("v")
                                 .edge("lu", "u", "u", Rational(1))
                                 .edge("br", "u", "v", Rational(2))
                                 .edge("lv", "v", "v", Rational(3))
                                 .build()});
  out.push_back({"figure8", GraphBuilder()
                                .vertex("c")
                                .edge("l1", "c", "c", Rational(1))
                                .edge("l2", "c", "c", Rational(2))
                                .build()});
  out.push_back({"genus2_vertex", GraphBuilder().vertex("p", 2).build()});
  out.push_back({"genus1_loop", GraphBuilder().vertex("p", 1).edge("l", "p", "p", Rational(1)).build()});
  out.push_back({"two_genus1", GraphBuilder()
                                   .vertex("u", 1)
                                   .vertex("v", 1)
                                   .edge("br", "u", "v", Rational(1))
                                   .build()});
  out.push_back({"loop_bridge_genus1", GraphBuilder()
                                           .vertex("u")
                                           .vertex("v", 1)
                                           .edge("lu", "u", "u", Rational(1))
                                           .edge("br", "u", "v", Rational(2))
                                           .build()});
  return out;
}

}  // namespace tropic::figures
