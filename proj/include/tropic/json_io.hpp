#ifndef TROPIC_JSON_IO_HPP
#define TROPIC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "tropic/divisor_theory.hpp"
#include "tropic/harmonic.hpp"
#include "tropic/hurwitz.hpp"
#include "tropic/lifting.hpp"
#include "tropic/metric_graph.hpp"
#include "tropic/symmetry.hpp"

namespace tropic::io {

using nlohmann::json;

// Rationals travel as "p/q" strings with q > 0 and gcd(p, q) = 1; bare
// integers are accepted on input.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const MetricGraph& g);
MetricGraph graph_from_json(const json& j);

json to_json(const Point& p);
Point point_from_json(const json& j);
// "v:<id>" or "<edge>:<offset>" (command-line form)
Point point_from_string(const MetricGraph& g, const std::string& s);

json to_json(const Divisor& d);
Divisor divisor_from_json(const json& j);

json to_json(const RationalFunction& f);
RationalFunction function_from_json(const MetricGraph& model, const json& j);

json to_json(const HarmonicMorphism& phi);
HarmonicMorphism morphism_from_json(const json& j);

json to_json(const hurwitz::Query& q);
hurwitz::Query query_from_json(const json& j);

json to_json(const LiftCertificate& c);
json to_json(const GraphAutomorphism& a);
GraphAutomorphism automorphism_from_json(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace tropic::io

#endif
