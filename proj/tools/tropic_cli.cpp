// Command-line interface for the tropic library: metric graphs, divisor
// ranks, harmonic morphisms, Hurwitz numbers, lifting certificates, and
// graph symmetries.  All arithmetic is exact; rationals print as "p/q".
//
// Exit codes: 0 success, 1 schema or validation error, 2 semantic negative
// (not harmonic, not equivalent, not liftable, ...), 3 resource budget
// exceeded, 4 I/O error.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tropic/corpus.hpp"
#include "tropic/divisor_theory.hpp"
#include "tropic/errors.hpp"
#include "tropic/figures.hpp"
#include "tropic/harmonic.hpp"
#include "tropic/hurwitz.hpp"
#include "tropic/json_io.hpp"
#include "tropic/lifting.hpp"
#include "tropic/metric_graph.hpp"
#include "tropic/symmetry.hpp"

using namespace tropic;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kSchema = 1;
constexpr int kNegative = 2;
constexpr int kResource = 3;
constexpr int kIo = 4;

struct Output {
  bool as_json = false;
  void emit(const json& j, const std::string& text) const {
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text;
  }
};

std::vector<hurwitz::Partition> parse_profiles(const std::string& s) {
  std::vector<hurwitz::Partition> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string block;
  while (std::getline(ss, block, ';')) {
    std::vector<std::int64_t> parts;
    std::stringstream bs(block);
    std::string num;
    while (std::getline(bs, num, ',')) {
      if (!num.empty()) parts.push_back(std::stoll(num));
    }
    if (!parts.empty()) out.push_back(hurwitz::Partition::of(parts));
  }
  return out;
}

MetricGraph load_graph(const std::string& path) { return io::graph_from_json(io::load_file(path)); }
Divisor load_divisor(const std::string& path) { return io::divisor_from_json(io::load_file(path)); }
HarmonicMorphism load_morphism(const std::string& path) {
  return io::morphism_from_json(io::load_file(path));
}

std::string profiles_str(const std::vector<std::vector<std::int64_t>>& ps) {
  std::string s;
  for (auto& p : ps) s += hurwitz::Partition::of(p).str();
  return s;
}

json ramification_json(const RamificationData& ram) {
  json jr = json::object();
  jr["R"] = io::to_json(ram.R);
  json rj = json::object();
  for (auto& [v, r] : ram.ram) rj[v] = r;
  jr["r"] = rj;
  jr["effective"] = ram.effective;
  jr["etale"] = ram.etale;
  jr["generically_etale"] = ram.generically_etale;
  jr["finite"] = ram.finite;
  return jr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with metric graphs and tropical morphisms"};
  app.require_subcommand(1);
  Output out;
  std::int64_t char_p = 0;
  std::int64_t budget_nodes = 50000000;
  app.add_flag_callback("--json", [&out] { out.as_json = true; }, "machine-readable output");
  app.add_option("--char", char_p, "residue characteristic (default 0)")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", budget_nodes, "enumeration budget in search nodes");

  int rc = kOk;
  auto budget = [&]() {
    hurwitz::Budget b;
    b.max_nodes = budget_nodes;
    return b;
  };

  // ---- graph ----
  auto* graph = app.add_subcommand("graph", "metric graph operations");
  graph->require_subcommand(1);
  std::string g_file, out_file;

  auto* g_validate = graph->add_subcommand("validate", "check the graph invariants");
  g_validate->add_option("graph", g_file)->required();
  g_validate->callback([&] {
    auto rep = load_graph(g_file).validate();
    json jv = json::array();
    for (auto& v : rep.violations) jv.push_back({{"code", v.code}, {"detail", v.detail}});
    out.emit({{"ok", rep.ok()}, {"violations", jv}}, rep.str() + "\n");
    if (!rep.ok()) rc = kSchema;
  });

  auto* g_genus = graph->add_subcommand("genus", "first Betti number, genus, canonical divisor");
  g_genus->add_option("graph", g_file)->required();
  g_genus->callback([&] {
    auto gd = load_graph(g_file).genus_data();
    out.emit({{"first_betti", gd.first_betti},
              {"genus", gd.genus},
              {"canonical", io::to_json(gd.canonical)}},
             "first Betti number: " + std::to_string(gd.first_betti) +
                 "\ngenus: " + std::to_string(gd.genus) + "\nK = " + gd.canonical.str() + "\n");
  });

  auto* g_min = graph->add_subcommand("minimize", "minimal representative (genus >= 1)");
  g_min->add_option("graph", g_file)->required();
  g_min->add_option("-o,--out", out_file, "write the result to a file");
  g_min->callback([&] {
    MetricGraph m = load_graph(g_file).minimize();
    json j = io::to_json(m);
    if (!out_file.empty()) io::save_file(out_file, j);
    out.emit(j, "minimal model: " + std::to_string(m.vertices().size()) + " vertices, " +
                    std::to_string(m.edges().size()) + " edges\n");
  });

  // ---- divisor ----
  auto* divisor = app.add_subcommand("divisor", "divisors, reduction, rank");
  divisor->require_subcommand(1);
  std::string d_file, d2_file, base_pt, cut_pt, side_hint;

  auto* d_rank = divisor->add_subcommand("rank", "Baker-Norine rank with a witness");
  d_rank->add_option("graph", g_file)->required();
  d_rank->add_option("divisor", d_file)->required();
  d_rank->callback([&] {
    MetricGraph g = load_graph(g_file);
    auto rr = rank(g, load_divisor(d_file));
    out.emit({{"rank", rr.rank}, {"witness", io::to_json(rr.witness)}},
             "rank: " + std::to_string(rr.rank) +
                 (rr.rank >= 0 ? "\nfailing effective divisor: " + rr.witness.str() : "") + "\n");
  });

  auto* d_reduce = divisor->add_subcommand("reduce", "the q-reduced representative");
  d_reduce->add_option("graph", g_file)->required();
  d_reduce->add_option("divisor", d_file)->required();
  d_reduce->add_option("--base", base_pt, "base point, v:<id> or <edge>:<offset>")->required();
  d_reduce->callback([&] {
    MetricGraph g = load_graph(g_file);
    Divisor red = reduce_divisor(g, load_divisor(d_file), io::point_from_string(g, base_pt));
    out.emit(io::to_json(red), red.str() + "\n");
  });

  auto* d_equiv = divisor->add_subcommand("equiv", "linear equivalence test");
  d_equiv->add_option("graph", g_file)->required();
  d_equiv->add_option("divisor1", d_file)->required();
  d_equiv->add_option("divisor2", d2_file)->required();
  d_equiv->callback([&] {
    MetricGraph g = load_graph(g_file);
    bool eq = is_linearly_equivalent(g, load_divisor(d_file), load_divisor(d2_file));
    out.emit({{"equivalent", eq}}, eq ? "equivalent\n" : "not equivalent\n");
    if (!eq) rc = kNegative;
  });

  auto* d_wedge = divisor->add_subcommand("wedge", "rank through a cut-vertex decomposition");
  d_wedge->add_option("graph", g_file)->required();
  d_wedge->add_option("divisor", d_file)->required();
  d_wedge->add_option("--cut", cut_pt, "cut vertex")->required();
  d_wedge->add_option("--side", side_hint, "vertex selecting the first piece");
  d_wedge->callback([&] {
    MetricGraph g = load_graph(g_file);
    std::optional<VertexId> hint;
    if (!side_hint.empty()) hint = side_hint;
    auto wr = wedge_rank(g, load_divisor(d_file), io::point_from_string(g, cut_pt), hint);
    json etas = json::array();
    std::string ts;
    for (std::size_t m = 0; m < wr.eta.size(); ++m) {
      etas.push_back(wr.eta[m] ? json(*wr.eta[m]) : json(nullptr));
      ts += "eta(" + std::to_string(m) + ") = " + (wr.eta[m] ? std::to_string(*wr.eta[m]) : "-") +
            "\n";
    }
    out.emit({{"rank", wr.rank}, {"eta", etas}}, "rank: " + std::to_string(wr.rank) + "\n" + ts);
  });

  // ---- morphism ----
  auto* morphism = app.add_subcommand("morphism", "harmonic morphism operations");
  morphism->require_subcommand(1);
  std::string m_file, at_pt, at_vertex;

  auto* m_check = morphism->add_subcommand("check", "validate harmonicity and degree");
  m_check->add_option("morphism", m_file)->required();
  m_check->callback([&] {
    auto rep = validate_morphism(load_morphism(m_file));
    json jd = json::object();
    for (auto& [v, d] : rep.local_degree) jd[v] = d;
    json jv = json::array();
    for (auto& v : rep.violations) jv.push_back({{"code", v.code}, {"detail", v.detail}});
    out.emit({{"harmonic", rep.harmonic},
              {"degree", rep.degree},
              {"finite", rep.finite},
              {"surjective", rep.surjective},
              {"local_degree", jd},
              {"violations", jv}},
             rep.str() + (rep.ok() ? (rep.finite ? ", finite\n" : ", not finite\n") : ""));
    if (!rep.ok()) rc = kNegative;
  });

  auto* m_ram = morphism->add_subcommand("ramification", "ramification data and flags");
  m_ram->add_option("morphism", m_file)->required();
  m_ram->callback([&] {
    auto ram = ramification(load_morphism(m_file));
    std::string ts = "R = " + ram.R.str() + "\n";
    ts += std::string("effective: ") + (ram.effective ? "yes" : "no") + "\n";
    ts += std::string("etale: ") + (ram.etale ? "yes" : "no") + "\n";
    out.emit(ramification_json(ram), ts);
  });

  auto* m_fiber = morphism->add_subcommand("fiber", "fiber divisor over a target point");
  m_fiber->add_option("morphism", m_file)->required();
  m_fiber->add_option("--at", at_pt, "target point")->required();
  m_fiber->callback([&] {
    HarmonicMorphism phi = load_morphism(m_file);
    Divisor f = fiber_divisor(phi, io::point_from_string(phi.target, at_pt));
    out.emit(io::to_json(f), f.str() + "\n");
  });

  auto* m_pull = morphism->add_subcommand("pullback", "pullback of a target divisor");
  m_pull->add_option("morphism", m_file)->required();
  m_pull->add_option("divisor", d_file)->required();
  m_pull->callback([&] {
    HarmonicMorphism phi = load_morphism(m_file);
    Divisor r = pullback(phi, load_divisor(d_file));
    out.emit(io::to_json(r), r.str() + "\n");
  });

  auto* m_push = morphism->add_subcommand("pushforward", "pushforward of a source divisor");
  m_push->add_option("morphism", m_file)->required();
  m_push->add_option("divisor", d_file)->required();
  m_push->callback([&] {
    HarmonicMorphism phi = load_morphism(m_file);
    Divisor r = pushforward(phi, load_divisor(d_file));
    out.emit(io::to_json(r), r.str() + "\n");
  });

  auto* m_prof = morphism->add_subcommand("profiles", "local partitions at a source vertex");
  m_prof->add_option("morphism", m_file)->required();
  m_prof->add_option("--vertex", at_vertex, "source vertex")->required();
  m_prof->callback([&] {
    auto lp = local_profiles(load_morphism(m_file), at_vertex);
    out.emit({{"d", lp.d}, {"profiles", lp.profiles}},
             "d = " + std::to_string(lp.d) + ", profiles " + profiles_str(lp.profiles) + "\n");
  });

  auto* m_res = morphism->add_subcommand("resolve", "weak resolution of contractions");
  m_res->add_option("morphism", m_file)->required();
  m_res->add_option("-o,--out", out_file, "write the resolved morphism to a file");
  m_res->callback([&] {
    auto res = weak_resolution(load_morphism(m_file));
    auto rep = validate_morphism(res.phi);
    json j = io::to_json(res.phi);
    if (!out_file.empty()) io::save_file(out_file, j);
    out.emit(j, "resolved: finite harmonic of degree " + std::to_string(rep.degree) + "\n");
  });

  // ---- hurwitz ----
  auto* hw = app.add_subcommand("hurwitz", "exact Hurwitz numbers");
  hw->require_subcommand(1);
  std::int64_t q_d = 1, q_g = 0, q_gp = 0;
  std::string profile_str;

  auto add_query_opts = [&](CLI::App* cmd, bool with_gp, bool with_g) {
    cmd->add_option("-d,--degree", q_d, "covering degree")->required();
    if (with_g) cmd->add_option("-g,--genus", q_g, "target genus");
    if (with_gp) cmd->add_option("--gprime", q_gp, "source genus");
    cmd->add_option("-p,--profiles", profile_str, "profiles, e.g. \"2,2;2,2;3,1\"");
  };

  auto* h_compute = hw->add_subcommand("compute", "H^d_{g',g}(profiles)");
  add_query_opts(h_compute, true, true);
  h_compute->callback([&] {
    hurwitz::Query q{q_d, q_g, q_gp, parse_profiles(profile_str)};
    auto res = hurwitz::hurwitz_number(q, budget());
    json jw = json::array();
    for (std::size_t i = 0; i < res.witness.size(); ++i)
      jw.push_back({{"role", res.witness_roles[i]}, {"perm", res.witness[i]}});
    out.emit({{"value", res.value.str()}, {"raw_count", res.raw_count}, {"witness", jw}},
             "H = " + res.value.str() + "  (tuples: " + std::to_string(res.raw_count) + ")\n");
  });

  auto* h_r = hw->add_subcommand("R", "the branch-count invariant");
  add_query_opts(h_r, true, true);
  h_r->callback([&] {
    hurwitz::Query q{q_d, q_g, q_gp, parse_profiles(profile_str)};
    std::int64_t R = hurwitz::compute_R(q);
    out.emit({{"R", R}}, "R = " + std::to_string(R) + "\n");
  });

  auto* h_min = hw->add_subcommand("mingenus", "least source genus with a nonempty covering set");
  add_query_opts(h_min, false, true);
  h_min->callback([&] {
    auto res =
        hurwitz::minimal_source_genus(q_d, q_g, parse_profiles(profile_str), char_p, budget());
    out.emit({{"gprime", res.gprime},
              {"upper_bound", res.upper_bound},
              {"value", res.witness.value.str()}},
             "g' = " + std::to_string(res.gprime) + "  (bound " + std::to_string(res.upper_bound) +
                 ", H = " + res.witness.value.str() + ")\n");
  });

  auto* h_pad = hw->add_subcommand("pad", "pad profiles with 1s until realizable over genus 0");
  add_query_opts(h_pad, true, false);
  h_pad->callback([&] {
    auto res = hurwitz::pad_profiles(q_d, q_gp, parse_profiles(profile_str), char_p, budget());
    json jp = json::array();
    for (auto& mu : res.profiles) jp.push_back(mu.parts);
    std::string note = res.cyclic_shortcut ? " (cyclic monodromy)" : "";
    out.emit({{"dprime", res.dprime}, {"profiles", jp}, {"cyclic_shortcut", res.cyclic_shortcut}},
             "d' = " + std::to_string(res.dprime) + note + "\n");
  });

  // ---- lift ----
  auto* lift = app.add_subcommand("lift", "liftability of harmonic morphisms");
  lift->require_subcommand(1);
  std::string f_file;

  auto* l_cert = lift->add_subcommand("certify", "numerical lifting certificate");
  l_cert->add_option("morphism", m_file)->required();
  l_cert->callback([&] {
    auto cert = liftability_certificate(load_morphism(m_file), char_p, budget());
    std::string ts = "verdict: " + to_string(cert.verdict) + "\n";
    for (auto& r : cert.reasons) ts += "  " + r + "\n";
    out.emit(io::to_json(cert), ts);
    if (cert.verdict == LiftVerdict::not_liftable) rc = kNegative;
  });

  auto* l_enrich = lift->add_subcommand("enrich", "minimal genus enrichment of the source");
  l_enrich->add_option("morphism", m_file)->required();
  l_enrich->add_option("-o,--out", out_file, "write the enriched morphism to a file");
  l_enrich->callback([&] {
    auto res = enrich_genus(load_morphism(m_file), char_p, budget());
    json j = {{"morphism", io::to_json(res.phi)}, {"certificate", io::to_json(res.certificate)}};
    if (!out_file.empty()) io::save_file(out_file, io::to_json(res.phi));
    std::string ts = "verdict: " + to_string(res.certificate.verdict) + "\ngenera:";
    for (auto& v : res.phi.source.vertices())
      if (!v.infinite && v.genus > 0) ts += " " + v.id + ":" + std::to_string(v.genus);
    out.emit(j, ts + "\n");
  });

  auto* l_poly = lift->add_subcommand("poly-like", "polynomial-like tree morphism criterion");
  l_poly->add_option("morphism", m_file)->required();
  l_poly->callback([&] {
    bool ok = polynomial_like_check(load_morphism(m_file), char_p);
    out.emit({{"liftable_without_genus_increase", ok}},
             ok ? "liftable without genus increase\n" : "criterion does not apply\n");
    if (!ok) rc = kNegative;
  });

  auto* l_eff = lift->add_subcommand("effective-equiv", "effective equivalence witness");
  l_eff->add_option("graph", g_file)->required();
  l_eff->add_option("divisor", d_file)->required();
  l_eff->add_option("function", f_file)->required();
  l_eff->callback([&] {
    MetricGraph g = load_graph(g_file);
    Divisor D = load_divisor(d_file);
    RationalFunction f = io::function_from_json(g, io::load_file(f_file));
    auto w = effective_equivalence_witness(g, D, f);
    out.emit({{"E", io::to_json(w.E)},
              {"retract_minus", io::to_json(w.retract_minus)},
              {"retract_plus", io::to_json(w.retract_plus)},
              {"degree", validate_morphism(w.phi).degree}},
             "E = " + w.E.str() + "\ntau(D_-inf) = " + w.retract_minus.str() +
                 "\ntau(D_+inf) = " + w.retract_plus.str() + "\n");
  });

  // ---- symmetry ----
  auto* sym = app.add_subcommand("symmetry", "automorphisms and quotients");
  sym->require_subcommand(1);
  std::string auto_file;

  auto* s_autos = sym->add_subcommand("autos", "all automorphisms of the loopless model");
  s_autos->add_option("graph", g_file)->required();
  s_autos->callback([&] {
    auto G = automorphisms(load_graph(g_file));
    json ja = json::array();
    for (auto& a : G.elements) ja.push_back(io::to_json(a));
    out.emit({{"order", G.elements.size()}, {"elements", ja}},
             "automorphism group of order " + std::to_string(G.elements.size()) + "\n");
  });

  auto* s_quot = sym->add_subcommand("quotient", "quotient by the group the file generates");
  s_quot->add_option("graph", g_file)->required();
  s_quot->add_option("automorphism", auto_file)->required();
  s_quot->callback([&] {
    auto G = automorphisms(load_graph(g_file));
    GraphAutomorphism a = io::automorphism_from_json(io::load_file(auto_file));
    auto q = quotient(G.model, {a}, char_p);
    out.emit({{"quotient", io::to_json(q.graph)},
              {"projection", io::to_json(q.projection)},
              {"group_order", q.group_order}},
             "quotient with " + std::to_string(q.graph.vertices().size()) + " vertices, " +
                 std::to_string(q.graph.edges().size()) + " edges; projection degree " +
                 std::to_string(q.group_order) + "\n");
  });

  auto* s_hyper = sym->add_subcommand("hyperelliptic", "hyperelliptic involution search");
  s_hyper->add_option("graph", g_file)->required();
  s_hyper->callback([&] {
    auto hs = is_hyperelliptic(load_graph(g_file));
    json j = {{"hyperelliptic", hs.hyperelliptic}};
    std::string ts;
    if (hs.hyperelliptic) {
      j["involution"] = io::to_json(*hs.involution);
      j["weighted_rank_check"] = hs.weighted_rank_check;
      ts = "hyperelliptic; weighted rank check r# = " + std::to_string(hs.weighted_rank_check) +
           "\n";
    } else {
      ts = "not hyperelliptic\n";
      rc = kNegative;
    }
    out.emit(j, ts);
  });

  auto* s_hl = sym->add_subcommand("hyperelliptic-liftable", "minimal skeleton criterion");
  s_hl->add_option("graph", g_file)->required();
  s_hl->callback([&] {
    auto rep = hyperelliptic_liftable(load_graph(g_file));
    json jv = json::array();
    std::string ts = rep.liftable ? "liftable\n" : "not liftable\n";
    for (auto& pv : rep.vertices) {
      jv.push_back({{"vertex", pv.vertex},
                    {"genus", pv.genus},
                    {"kappa", pv.kappa},
                    {"bridges", pv.bridge_count},
                    {"ok", pv.ok}});
      if (pv.kappa > 0)
        ts += "  " + pv.vertex + ": genus " + std::to_string(pv.genus) + ", kappa " +
              std::to_string(pv.kappa) + (pv.ok ? "" : "  <- fails 2g >= kappa-2") + "\n";
    }
    out.emit(
        {{"liftable", rep.liftable}, {"vertices", jv}, {"kappa_equals_bridges", rep.kappa_equals_bridges}},
        ts);
    if (!rep.liftable) rc = kNegative;
  });

  // ---- corpus ----
  std::string data_dir = "data";
  auto* corpus_cmd = app.add_subcommand("corpus", "list the shipped example files");
  corpus_cmd->add_option("--data", data_dir, "data directory (default: data)");
  corpus_cmd->callback([&] {
    auto entries = corpus::list(data_dir);
    json je = json::array();
    std::string ts;
    for (auto& e : entries) {
      je.push_back({{"name", e.name}, {"file", e.file}, {"kind", e.kind}, {"note", e.note}});
      ts += e.name + " (" + e.kind + "): " + e.note + "\n";
    }
    out.emit({{"entries", je}}, ts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const schema_error& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const resource_error& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  }
  return rc;
}
