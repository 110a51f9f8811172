#ifndef TROPIC_LIFTING_HPP
#define TROPIC_LIFTING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropic/harmonic.hpp"
#include "tropic/hurwitz.hpp"

namespace tropic {

enum class LiftVerdict { liftable, not_liftable, unknown };

std::string to_string(LiftVerdict v);

struct VertexCertificate {
  VertexId vertex;
  std::int64_t d = 0;
  std::int64_t source_genus = 0;
  std::int64_t target_genus = 0;
  std::vector<std::vector<std::int64_t>> profiles;
  enum Status { nonzero, zero, shortcut, unknown_char } status = nonzero;
  std::optional<Rational> hurwitz_value;  // set when actually enumerated
  std::string note;
};

struct LiftCertificate {
  LiftVerdict verdict = LiftVerdict::unknown;
  std::vector<VertexCertificate> vertices;
  std::vector<std::string> reasons;
};

// The numerical lifting criterion: a finite tame harmonic morphism of
// augmented metric graphs lifts iff it is effective and every local
// covering problem has a nonzero Hurwitz number.
LiftCertificate liftability_certificate(const HarmonicMorphism& phi, std::int64_t char_p,
                                        const hurwitz::Budget& budget = {});

struct EnrichedMorphism {
  HarmonicMorphism phi;  // source genus function filled in
  LiftCertificate certificate;
};

// Smallest per-vertex source genus making every local covering set
// nonempty; the result certifies liftable by construction.
EnrichedMorphism enrich_genus(const HarmonicMorphism& phi, std::int64_t char_p,
                              const hurwitz::Budget& budget = {});

// Composable record of graph surgeries, for carrying points and divisors
// between the original models and the resolved ones.
struct ModTrail {
  std::vector<GraphMod> steps;
  Point relocate(Point p) const;
  Point retract(Point p) const;
  Divisor retract(const Divisor& d) const;
  void push(GraphMod step) { steps.push_back(std::move(step)); }
};

struct WeakResolution {
  HarmonicMorphism phi;  // finite harmonic, agrees with the input off its contracted set
  ModTrail source_trail;
  ModTrail target_trail;
};

// Resolution of contractions for a harmonic morphism onto a metric tree:
// graft a copy of the target at every fully contracted vertex, then trade
// each contracted edge for a pair of infinite edges folded over a new leaf
// of the target, balancing all fibers with degree-one copies.
WeakResolution weak_resolution(const HarmonicMorphism& phi);

struct LineExtension {
  HarmonicMorphism phi;  // harmonic onto a modified line, usually contracting
  ModTrail source_trail;
  VertexId minus_end, plus_end;  // infinite vertices of the target line
};

// Extends h = -f to a harmonic morphism onto the real line by attaching a
// ray of slope -ord_v(h) at every vertex where div(h) is nonzero; the
// positive part of div(h) runs to the minus end.
LineExtension extend_to_line(const RationalFunction& f);

struct EffectiveEquivalenceWitness {
  HarmonicMorphism phi;  // finite harmonic onto a tree (a modified line)
  Divisor E;             // effective
  Divisor retract_minus;  // tau_*(fiber over -inf) = D_+ + E
  Divisor retract_plus;   // tau_*(fiber over +inf) = D_- + E
  VertexId minus_end, plus_end;
  ModTrail source_trail;
};

// For D + div(f) = 0: realizes D_+ + E and D_- + E as retractions of the
// two end fibers of a finite harmonic morphism from a modification of the
// graph onto a modified line.  Both identities are verified exactly.
EffectiveEquivalenceWitness effective_equivalence_witness(const MetricGraph& g, const Divisor& D,
                                                          const RationalFunction& f);

// Generically etale polynomial-like tree morphisms lift with no genus
// increase; returns false when the criterion does not apply.
bool polynomial_like_check(const HarmonicMorphism& phi, std::int64_t char_p);

}  // namespace tropic

#endif
