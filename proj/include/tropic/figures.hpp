#ifndef TROPIC_FIGURES_HPP
#define TROPIC_FIGURES_HPP

#include "tropic/divisor_theory.hpp"
#include "tropic/harmonic.hpp"
#include "tropic/metric_graph.hpp"

// Builders for the example corpus shipped under data/.  Each graph is a
// transcription of a picture from the literature with concrete edge
// lengths chosen so the documented divisor and morphism facts hold; the
// test suite checks every one of them.
namespace tropic::figures {

// one vertex of genus 0 with a loop of the given length
MetricGraph loop_graph(const Rational& len);
// two vertices joined by three parallel edges
MetricGraph theta_graph(const Rational& l1, const Rational& l2, const Rational& l3);
// k parallel edges between two vertices
MetricGraph banana_graph(int k, const std::vector<Rational>& lengths);
// single finite segment
MetricGraph segment_graph(const Rational& len);

// Degree-4 star map with local profiles (2,2),(2,2),(3,1): harmonic and
// effective but with vanishing Hurwitz number at the center.
HarmonicMorphism star_map();

// etale degree-2 cover of a loop by a cycle of twice the length
HarmonicMorphism loop_double_cover(const Rational& target_len);

// degree-2 fold of a segment onto a segment (the |x| map)
HarmonicMorphism segment_fold(const Rational& half_len);

// degree-1 map contracting the cycle of a lollipop-with-arms onto a line
HarmonicMorphism cycle_contraction();

// generically etale polynomial-like degree-3 morphism of star trees with
// profiles (3),(2,1),(2,1) at the center
HarmonicMorphism polynomial_like_deg3();

// degree-2 projection of the theta graph onto a tripod (the hyperelliptic
// quotient with the three fold points explicit)
HarmonicMorphism theta_to_tripod(const Rational& l1, const Rational& l2, const Rational& l3);

// genus-2 graph with two loops joined by a bridge, the mid-loop point t a
// vertex; ships with K = (p)+(q) ~ 2(t)
MetricGraph glasses_graph();
Divisor glasses_divisor();              // (p)+(q)-2(t)
RationalFunction glasses_function();    // D + div(f) = 0

// genus-3 graph on which 3(p) and 3(t) are not linearly equivalent
MetricGraph g3_graph();

// the two genus-9 components and the genus-6 component of the genus-27
// assembly; a(p)+b(q) has rank zero for the documented ranges
MetricGraph a1_graph();
MetricGraph a2_graph();  // same combinatorial type, different lengths
MetricGraph a3_graph();

// central vertex joined to two A1-type and one A3-type components
MetricGraph g27_graph();

// the 4-regular genus-7 graph with a rank-1 degree-3 divisor (p)+(q)+(s)
MetricGraph luo_g7_graph();
Divisor luo_divisor();

// vertex of genus gp with kappa bridges to genus-1 loop vertices
MetricGraph kappa_bridge_graph(int kappa, int gp);

// the seven minimal genus-2 combinatorial types (stable weighted graphs)
std::vector<std::pair<std::string, MetricGraph>> genus2_types();

}  // namespace tropic::figures

#endif
