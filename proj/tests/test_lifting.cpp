#include <doctest.h>

#include "testgen.hpp"
#include "tropic/figures.hpp"
#include "tropic/lifting.hpp"

using namespace tropic;

namespace {

// the resolved morphism must agree with the input away from the
// contracted set: probe interior points of every non-contracted edge
void check_agreement(const HarmonicMorphism& phi0, const WeakResolution& res) {
  for (auto& e : phi0.source.edges()) {
    const EdgeAction& a = phi0.action(e.id);
    if (a.contracted) continue;
    std::vector<Rational> offsets;
    if (e.infinite) {
      offsets = {Rational(1), Rational(2)};
    } else {
      offsets = {e.length / Rational(4), e.length / Rational(2), e.length * Rational(3, 4)};
    }
    for (auto& off : offsets) {
      Point p = Point::on_edge(e.id, off);
      Point expected = phi0.apply(p);
      Point moved = res.source_trail.relocate(p);
      Point image = res.phi.apply(moved);
      Point back = res.target_trail.retract(image);
      CAPTURE(e.id);
      CHECK(back == expected);
    }
  }
}

}  // namespace

TEST_CASE("identity morphism is liftable") {
  MetricGraph g = figures::theta_graph(Rational(1), Rational(2), Rational(3));
  auto cert = liftability_certificate(identity_morphism(g), 0);
  CHECK(cert.verdict == LiftVerdict::liftable);
}

TEST_CASE("star map is not liftable, with the degree-4 zero as reason") {
  auto cert = liftability_certificate(figures::star_map(), 0);
  CHECK(cert.verdict == LiftVerdict::not_liftable);
  REQUIRE(cert.reasons.size() == 1);
  CHECK(cert.reasons[0].find("H^4") != std::string::npos);
  bool found_zero = false;
  for (auto& v : cert.vertices)
    if (v.vertex == "c'" && v.status == VertexCertificate::zero) found_zero = true;
  CHECK(found_zero);
}

TEST_CASE("the shipped gallery of degree <= 3 is liftable") {
  for (auto phi : {figures::loop_double_cover(Rational(2)), figures::segment_fold(Rational(1)),
                   figures::theta_to_tripod(Rational(1), Rational(2), Rational(3)),
                   figures::polynomial_like_deg3(),
                   identity_morphism(figures::glasses_graph())}) {
    auto rep = validate_morphism(phi);
    REQUIRE(rep.ok());
    REQUIRE(rep.degree <= 3);
    auto cert = liftability_certificate(phi, 0);
    CHECK(cert.verdict == LiftVerdict::liftable);
  }
}

TEST_CASE("certificates are stable under model refinement") {
  for (auto phi : {figures::star_map(), figures::theta_to_tripod(Rational(1), Rational(2), Rational(3))}) {
    auto cert = liftability_certificate(phi, 0);
    const Edge& f = phi.target.edges().front();
    Rational off = f.infinite ? Rational(7, 2) : f.length / Rational(3);
    auto ref = refine_morphism_at_targets(phi, {Point::on_edge(f.id, off)});
    auto cert2 = liftability_certificate(ref.phi, 0);
    CHECK(cert.verdict == cert2.verdict);
  }
}

TEST_CASE("small characteristic gives an unknown verdict") {
  // degree-4 star with odd expansion factors, tame in characteristic 2
  GraphBuilder tb, sb;
  tb.vertex("c");
  sb.vertex("c'");
  for (const char* l : {"A", "B", "C"}) {
    tb.vertex(l, 0, true);
    tb.infinite_edge(std::string("leg") + l, "c", l);
    for (const char* suff : {"3", "1"}) {
      std::string id = std::string(l) + suff;
      sb.vertex(id + "_end", 0, true);
      sb.infinite_edge(id, "c'", id + "_end");
    }
  }
  HarmonicMorphism phi;
  phi.source = sb.build();
  phi.target = tb.build();
  phi.vertex_map["c'"] = "c";
  for (const char* l : {"A", "B", "C"}) {
    phi.vertex_map[std::string(l) + "3_end"] = l;
    phi.vertex_map[std::string(l) + "1_end"] = l;
    phi.edge_map[std::string(l) + "3"] = EdgeAction::mapped(std::string("leg") + l, 3);
    phi.edge_map[std::string(l) + "1"] = EdgeAction::mapped(std::string("leg") + l, 1);
  }
  REQUIRE(validate_morphism(phi).finite);
  auto cert = liftability_certificate(phi, 2);
  CHECK(cert.verdict == LiftVerdict::unknown);
}

TEST_CASE("wild characteristic is rejected") {
  CHECK_THROWS_WITH_AS(liftability_certificate(figures::star_map(), 2),
                       doctest::Contains("wild"), domain_error);
}

TEST_CASE("non-finite morphisms cannot be certified") {
  CHECK_THROWS_AS(liftability_certificate(figures::cycle_contraction(), 0), domain_error);
}

TEST_CASE("enrich_genus on the star map produces a liftable certificate") {
  auto enriched = enrich_genus(figures::star_map(), 0);
  CHECK(enriched.certificate.verdict == LiftVerdict::liftable);
  CHECK(enriched.phi.source.vertex("c'").genus >= 1);
  // minimality: one less genus at the center is obstructed
  hurwitz::Query q{4, 0, enriched.phi.source.vertex("c'").genus - 1,
                   {hurwitz::Partition::of({2, 2}), hurwitz::Partition::of({2, 2}),
                    hurwitz::Partition::of({3, 1})}};
  if (hurwitz::compute_R(q) >= 0) CHECK(hurwitz::hurwitz_number(q).raw_count == 0);
}

TEST_CASE("enrich_genus of an etale cover keeps genus zero") {
  auto enriched = enrich_genus(figures::loop_double_cover(Rational(1)), 0);
  for (auto& v : enriched.phi.source.vertices()) CHECK(v.genus == 0);
  CHECK(enriched.certificate.verdict == LiftVerdict::liftable);
}

TEST_CASE("enrich_genus of a degree-1 morphism copies the target genus") {
  GraphBuilder tb;
  tb.vertex("u", 2).vertex("v", 1).edge("e", "u", "v", Rational(1));
  MetricGraph t = tb.build();
  GraphBuilder sb;
  sb.vertex("u'").vertex("v'").edge("e'", "u'", "v'", Rational(1));
  HarmonicMorphism phi;
  phi.source = sb.build();
  phi.target = t;
  phi.vertex_map = {{"u'", "u"}, {"v'", "v"}};
  phi.edge_map = {{"e'", EdgeAction::mapped("e", 1)}};
  auto enriched = enrich_genus(phi, 0);
  CHECK(enriched.phi.source.vertex("u'").genus == 2);
  CHECK(enriched.phi.source.vertex("v'").genus == 1);
}

TEST_CASE("weak resolution leaves an already-finite morphism untouched") {
  auto phi = figures::star_map();
  auto res = weak_resolution(phi);
  CHECK(res.phi.source.edges().size() == phi.source.edges().size());
  CHECK(res.phi.target.edges().size() == phi.target.edges().size());
  CHECK(validate_morphism(res.phi).finite);
}

TEST_CASE("weak resolution of the cycle contraction") {
  auto phi = figures::cycle_contraction();
  auto res = weak_resolution(phi);
  auto rep = validate_morphism(res.phi);
  REQUIRE(rep.ok());
  CHECK(rep.finite);
  CHECK(rep.degree >= 1);
  check_agreement(phi, res);
  // every edge added by the resolution maps with expansion factor one
  for (auto& [e, a] : res.phi.edge_map)
    if (!phi.source.has_edge(e)) CHECK(a.degree == 1);
}

TEST_CASE("weak resolution of a single contracted finite edge over a tree") {
  // segment mapping onto a segment with one dangling contracted edge
  GraphBuilder sb;
  sb.vertex("a").vertex("b").vertex("c");
  sb.edge("e", "a", "b", Rational(1));
  sb.edge("dead", "b", "c", Rational(1));
  GraphBuilder tb;
  tb.vertex("x").vertex("y");
  tb.edge("f", "x", "y", Rational(1));
  HarmonicMorphism phi;
  phi.source = sb.build();
  phi.target = tb.build();
  phi.vertex_map = {{"a", "x"}, {"b", "y"}, {"c", "y"}};
  phi.edge_map = {{"e", EdgeAction::mapped("f", 1)}, {"dead", EdgeAction::contract("y")}};
  REQUIRE(validate_morphism(phi).ok());
  auto res = weak_resolution(phi);
  auto rep = validate_morphism(res.phi);
  REQUIRE(rep.ok());
  CHECK(rep.finite);
  check_agreement(phi, res);
  // the new legs fold with degree one over a fresh leaf
  for (auto& [e, a] : res.phi.edge_map) {
    if (res.phi.source.has_edge(e) && !phi.source.has_edge(e) && !a.contracted)
      CHECK(a.degree == 1);
  }
}

TEST_CASE("weak resolution of randomly generated contracting morphisms") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    RationalFunction f = testgen::random_integer_slope_function(rng);
    LineExtension ext = extend_to_line(f);
    CAPTURE(trial);
    auto res = weak_resolution(ext.phi);
    auto rep = validate_morphism(res.phi);
    REQUIRE(rep.ok());
    CHECK(rep.finite);
    check_agreement(ext.phi, res);
  }
}

TEST_CASE("weak resolution requires a tree target") {
  CHECK_THROWS_WITH_AS(weak_resolution(figures::loop_double_cover(Rational(1))),
                       doctest::Contains("tree"), domain_error);
}

TEST_CASE("effective equivalence witness on the glasses graph") {
  auto g = figures::glasses_graph();
  auto D = figures::glasses_divisor();
  auto f = figures::glasses_function();
  auto w = effective_equivalence_witness(g, D, f);
  CHECK(validate_morphism(w.phi).finite);
  CHECK(w.E.is_effective());
  Divisor Dp = D.positive_part(), Dm = D.negative_part();
  CHECK(w.retract_minus == Dp + w.E);
  CHECK(w.retract_plus == Dm + w.E);
}

TEST_CASE("effective equivalence witness for a constant function") {
  RationalFunction f;
  f.model = figures::theta_graph(Rational(1), Rational(1), Rational(2));
  f.values = {{"u", Rational(0)}, {"v", Rational(0)}};
  auto w = effective_equivalence_witness(f.model, Divisor(), f);
  CHECK(w.E.is_effective());
  CHECK(w.retract_minus == w.E);
  CHECK(w.retract_plus == w.E);
}

TEST_CASE("effective equivalence witness on a segment") {
  RationalFunction f;
  f.model = figures::segment_graph(Rational(1));
  f.values = {{"a", Rational(0)}, {"b", Rational(-1)}};
  Divisor D;
  D.add(Point::vertex("a"), 1);
  D.add(Point::vertex("b"), -1);
  auto w = effective_equivalence_witness(f.model, D, f);
  CHECK(w.retract_minus.coeff(Point::vertex("a")) >= 1);
}

TEST_CASE("effective equivalence witness on random principal divisors") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    RationalFunction f = testgen::random_integer_slope_function(rng, 3, 2);
    Divisor D = Divisor() - principal_divisor(f);
    CAPTURE(trial);
    auto w = effective_equivalence_witness(f.model, D, f);
    CHECK(w.E.is_effective());
    CHECK(w.retract_minus == D.positive_part() + w.E);
    CHECK(w.retract_plus == D.negative_part() + w.E);
  }
}

TEST_CASE("effective equivalence rejects non-principal pairs") {
  RationalFunction f;
  f.model = figures::segment_graph(Rational(1));
  f.values = {{"a", Rational(0)}, {"b", Rational(0)}};
  Divisor D;
  D.add(Point::vertex("a"), 1);
  CHECK_THROWS_WITH_AS(effective_equivalence_witness(f.model, D, f),
                       doctest::Contains("not zero"), domain_error);
}

TEST_CASE("polynomial-like: the z^d shadow on the line") {
  for (std::int64_t d = 2; d <= 4; ++d) {
    GraphBuilder sb, tb;
    sb.vertex("u").vertex("i1", 0, true).vertex("i2", 0, true);
    sb.infinite_edge("a1", "u", "i1").infinite_edge("a2", "u", "i2");
    tb.vertex("w").vertex("j1", 0, true).vertex("j2", 0, true);
    tb.infinite_edge("t1", "w", "j1").infinite_edge("t2", "w", "j2");
    HarmonicMorphism phi;
    phi.source = sb.build();
    phi.target = tb.build();
    phi.vertex_map = {{"u", "w"}, {"i1", "j1"}, {"i2", "j2"}};
    phi.edge_map = {{"a1", EdgeAction::mapped("t1", d)}, {"a2", EdgeAction::mapped("t2", d)}};
    CHECK(polynomial_like_check(phi, 0));
    CHECK(polynomial_like_check(phi, d + 1));
    CHECK_FALSE(polynomial_like_check(phi, 2));  // characteristic too small
  }
}

TEST_CASE("polynomial-like: the generically etale degree-3 star") {
  CHECK(polynomial_like_check(figures::polynomial_like_deg3(), 0));
}

TEST_CASE("polynomial-like fails without a full-degree infinite vertex") {
  // fold of a line over a half line: both ends have local degree 1
  GraphBuilder sb, tb;
  sb.vertex("u").vertex("i1", 0, true).vertex("i2", 0, true);
  sb.infinite_edge("a1", "u", "i1").infinite_edge("a2", "u", "i2");
  tb.vertex("w").vertex("j", 0, true);
  tb.infinite_edge("t", "w", "j");
  HarmonicMorphism phi;
  phi.source = sb.build();
  phi.target = tb.build();
  phi.vertex_map = {{"u", "w"}, {"i1", "j"}, {"i2", "j"}};
  phi.edge_map = {{"a1", EdgeAction::mapped("t", 1)}, {"a2", EdgeAction::mapped("t", 1)}};
  REQUIRE(validate_morphism(phi).finite);
  CHECK_FALSE(polynomial_like_check(phi, 0));
}

TEST_CASE("polynomial-like requires trees") {
  CHECK_THROWS_WITH_AS(polynomial_like_check(figures::loop_double_cover(Rational(1)), 0),
                       doctest::Contains("trees"), domain_error);
}
