#include "tropic/json_io.hpp"

#include <fstream>

#include "tropic/errors.hpp"

namespace tropic::io {

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw schema_error(std::string("missing field: ") + name);
  return *it;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw schema_error("expected a rational: " + j.dump());
}

json to_json(const MetricGraph& g) {
  json vs = json::array();
  for (auto& v : g.vertices())
    vs.push_back({{"id", v.id}, {"genus", v.genus}, {"infinite", v.infinite}});
  json es = json::array();
  for (auto& e : g.edges()) {
    json je = {{"id", e.id}, {"ends", {e.tail, e.head}}};
    je["length"] = e.infinite ? json("inf") : json(e.length.str());
    es.push_back(je);
  }
  return {{"vertices", vs}, {"edges", es}};
}

MetricGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw schema_error("graph must be an object");
  std::vector<Vertex> vs;
  for (auto& jv : field(j, "vertices")) {
    Vertex v;
    v.id = field(jv, "id").get<std::string>();
    v.genus = jv.value("genus", 0);
    v.infinite = jv.value("infinite", false);
    if (v.genus < 0) throw schema_error("negative genus on vertex " + v.id);
    vs.push_back(std::move(v));
  }
  std::vector<Edge> es;
  for (auto& je : field(j, "edges")) {
    Edge e;
    e.id = field(je, "id").get<std::string>();
    auto& ends = field(je, "ends");
    if (!ends.is_array() || ends.size() != 2) throw schema_error("edge ends must be a pair");
    e.tail = ends[0].get<std::string>();
    e.head = ends[1].get<std::string>();
    auto& len = field(je, "length");
    if (len.is_string() && len.get<std::string>() == "inf") {
      e.infinite = true;
    } else {
      e.length = rational_from_json(len);
    }
    es.push_back(std::move(e));
  }
  return MetricGraph::build(std::move(vs), std::move(es));
}

json to_json(const Point& p) {
  if (p.kind == Point::AtVertex) return {{"vertex", p.id}};
  return {{"edge", p.id}, {"offset", p.offset.str()}};
}

Point point_from_json(const json& j) {
  if (j.contains("vertex")) return Point::vertex(j["vertex"].get<std::string>());
  if (j.contains("edge"))
    return Point::on_edge(j["edge"].get<std::string>(), rational_from_json(field(j, "offset")));
  throw schema_error("point must have vertex or edge form: " + j.dump());
}

Point point_from_string(const MetricGraph& g, const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    if (g.has_vertex(s)) return Point::vertex(s);
    throw schema_error("unknown vertex: " + s);
  }
  std::string head = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  if (head == "v") return Point::vertex(rest);
  return g.normalized(Point::on_edge(head, Rational::parse(rest)));
}

json to_json(const Divisor& d) {
  json entries = json::array();
  for (auto& [p, c] : d.entries()) entries.push_back({{"point", to_json(p)}, {"coeff", c}});
  return {{"entries", entries}};
}

Divisor divisor_from_json(const json& j) {
  Divisor d;
  for (auto& je : field(j, "entries"))
    d.add(point_from_json(field(je, "point")), field(je, "coeff").get<std::int64_t>());
  return d;
}

json to_json(const RationalFunction& f) {
  json values = json::object();
  for (auto& [v, val] : f.values) values[v] = val.str();
  for (auto& v : f.model.vertices()) {
    if (!v.infinite) continue;
    std::int64_t s = f.ray_slope(f.model.directions(v.id)[0].edge);
    values[v.id] = s > 0 ? "+inf" : s < 0 ? "-inf" : values[f.model.edge(f.model.directions(v.id)[0].edge).tail];
  }
  json slopes = json::object();
  for (auto& [e, s] : f.ray_slopes)
    if (s != 0) slopes[e] = s;
  json out = {{"values", values}};
  if (!slopes.empty()) out["slopes"] = slopes;
  return out;
}

RationalFunction function_from_json(const MetricGraph& model, const json& j) {
  RationalFunction f;
  f.model = model;
  std::map<VertexId, std::string> inf_marks;
  for (auto& [key, val] : field(j, "values").items()) {
    if (!model.has_vertex(key)) throw schema_error("function value at unknown vertex " + key);
    if (val.is_string() && (val == "+inf" || val == "-inf")) {
      inf_marks[key] = val.get<std::string>();
      continue;
    }
    f.values[key] = rational_from_json(val);
  }
  if (j.contains("slopes"))
    for (auto& [key, val] : j["slopes"].items()) {
      if (!model.has_edge(key)) throw schema_error("slope on unknown edge " + key);
      f.ray_slopes[key] = val.get<std::int64_t>();
    }
  for (auto& v : model.vertices()) {
    if (v.infinite) {
      const EdgeId& e = model.directions(v.id)[0].edge;
      auto mark = inf_marks.find(v.id);
      if (mark != inf_marks.end() && !f.ray_slopes.count(e))
        f.ray_slopes[e] = mark->second == "+inf" ? 1 : -1;
      f.values.erase(v.id);
    } else if (!f.values.count(v.id)) {
      throw schema_error("function missing a value at vertex " + v.id);
    }
  }
  return f;
}

json to_json(const HarmonicMorphism& phi) {
  json vm = json::object();
  for (auto& [v, w] : phi.vertex_map) vm[v] = w;
  json em = json::object();
  for (auto& [e, a] : phi.edge_map) {
    if (a.contracted)
      em[e] = {{"contracted_to", a.contracted_to}};
    else
      em[e] = {{"image", a.image}, {"degree", a.degree}, {"reversed", a.reversed}};
  }
  return {{"source", to_json(phi.source)},
          {"target", to_json(phi.target)},
          {"vertex_map", vm},
          {"edges", em}};
}

HarmonicMorphism morphism_from_json(const json& j) {
  MetricGraph source = graph_from_json(field(j, "source"));
  MetricGraph target = graph_from_json(field(j, "target"));
  std::map<VertexId, VertexId> vm;
  for (auto& [k, v] : field(j, "vertex_map").items()) vm[k] = v.get<std::string>();

  bool any_path = false;
  for (auto& [e, ja] : field(j, "edges").items())
    if (ja.contains("image") && ja["image"].is_array()) any_path = true;

  if (!any_path) {
    HarmonicMorphism phi;
    phi.source = std::move(source);
    phi.target = std::move(target);
    phi.vertex_map = std::move(vm);
    for (auto& [e, ja] : field(j, "edges").items()) {
      if (ja.contains("contracted_to")) {
        phi.edge_map[e] = EdgeAction::contract(ja["contracted_to"].get<std::string>());
      } else {
        phi.edge_map[e] = EdgeAction::mapped(field(ja, "image").get<std::string>(),
                                             ja.value("degree", std::int64_t(1)),
                                             ja.value("reversed", false));
      }
    }
    return phi;
  }

  // path-image form: normalize through refine_to_compatible
  std::map<EdgeId, RawEdgeImage> raw;
  for (auto& [e, ja] : field(j, "edges").items()) {
    RawEdgeImage r;
    if (ja.contains("contracted_to")) {
      r.contracted = true;
      r.contracted_to = ja["contracted_to"].get<std::string>();
    } else {
      r.degree = ja.value("degree", std::int64_t(1));
      auto& img = field(ja, "image");
      if (img.is_string()) {
        r.path.push_back({img.get<std::string>(), ja.value("reversed", false)});
      } else {
        for (auto& step : img) {
          if (step.is_string())
            r.path.push_back({step.get<std::string>(), false});
          else
            r.path.push_back({field(step, "edge").get<std::string>(), step.value("reversed", false)});
        }
      }
    }
    raw[e] = std::move(r);
  }
  return refine_to_compatible(source, target, vm, raw).phi;
}

json to_json(const hurwitz::Query& q) {
  json profiles = json::array();
  for (auto& mu : q.profiles) profiles.push_back(mu.parts);
  return {{"d", q.d}, {"g", q.g}, {"gprime", q.gprime}, {"profiles", profiles}};
}

hurwitz::Query query_from_json(const json& j) {
  hurwitz::Query q;
  q.d = field(j, "d").get<std::int64_t>();
  q.g = j.value("g", std::int64_t(0));
  q.gprime = j.value("gprime", std::int64_t(0));
  if (j.contains("profiles"))
    for (auto& jp : j["profiles"])
      q.profiles.push_back(hurwitz::Partition::of(jp.get<std::vector<std::int64_t>>()));
  return q;
}

json to_json(const LiftCertificate& c) {
  json vs = json::array();
  for (auto& v : c.vertices) {
    json jv = {{"id", v.vertex},
               {"d", v.d},
               {"source_genus", v.source_genus},
               {"target_genus", v.target_genus},
               {"profiles", v.profiles}};
    switch (v.status) {
      case VertexCertificate::nonzero:
      case VertexCertificate::zero:
        jv["hurwitz"] = v.hurwitz_value ? json(v.hurwitz_value->str())
                                        : json(v.status == VertexCertificate::zero ? "0/1" : "");
        break;
      case VertexCertificate::shortcut: jv["hurwitz"] = "shortcut"; break;
      case VertexCertificate::unknown_char: jv["hurwitz"] = "unknown"; break;
    }
    if (!v.note.empty()) jv["note"] = v.note;
    vs.push_back(std::move(jv));
  }
  return {{"verdict", to_string(c.verdict)}, {"vertices", vs}, {"reasons", c.reasons}};
}

json to_json(const GraphAutomorphism& a) {
  json vp = json::object(), ep = json::object();
  for (auto& [v, w] : a.vperm) vp[v] = w;
  for (auto& [e, f] : a.eperm) ep[e] = {{"image", f.first}, {"reversed", f.second}};
  return {{"vertex_perm", vp}, {"edge_perm", ep}};
}

GraphAutomorphism automorphism_from_json(const json& j) {
  GraphAutomorphism a;
  for (auto& [k, v] : field(j, "vertex_perm").items()) a.vperm[k] = v.get<std::string>();
  for (auto& [k, v] : field(j, "edge_perm").items())
    a.eperm[k] = {field(v, "image").get<std::string>(), v.value("reversed", false)};
  return a;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw schema_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw schema_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace tropic::io
