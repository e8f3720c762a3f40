#include "lvpoly/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "lvpoly/embedding_io.hpp"
#include "lvpoly/errors.hpp"
#include "lvpoly/identities.hpp"
#include "lvpoly/invariants.hpp"
#include "lvpoly/matroid.hpp"
#include "lvpoly/states.hpp"

namespace lvpoly {

namespace {

struct Options {
  std::string file;
  std::string which = "lv";
  std::string method = "expansion";
  std::string suite = "all";
  int cap = kDefaultExpansionCap;
  int suite_cap = 16;
  int state_cap = 10;
  int points = 8;
};

std::string side_visit(const SideVisit& s) {
  return std::to_string(s.edge) + "." + std::to_string(s.side) + (s.forward ? ">" : "<");
}

int cmd_trace(const EmbeddedGraph& emb, std::ostream& out) {
  const BoundaryTrace& t = emb.circles();
  const RotationSystem& r = emb.rotation();
  out << "circles: " << t.count() << "\n";
  for (int c = 0; c < t.count(); ++c) {
    const BoundaryCircle& circle = t.circles[c];
    out << "circle " << c << ":";
    if (circle.sides.empty()) {
      const auto& ref = r.sector_ref(circle.sectors.front());
      out << " empty sector " << ref.index << " of vertex " << ref.vertex;
    }
    for (const SideVisit& s : circle.sides) out << " " << side_visit(s);
    out << "\n";
  }
  out << "RESULT: trace circles=" << t.count() << "\n";
  return 0;
}

int cmd_validate(const EmbeddedGraph& emb, std::ostream& out) {
  const SurfaceReport rep = validate(emb);
  const RotationSystem& r = emb.rotation();
  int pinch = 0;
  for (int v : r.graph().vertices()) pinch += r.sectors(v).size() > 1;
  out << "vertices: " << r.graph().num_vertices() << "\n";
  out << "edges: " << r.graph().num_edges() << "\n";
  out << "pinch vertices: " << pinch << "\n";
  out << "boundary circles: " << emb.circles().count() << "\n";
  out << "regions: " << emb.regions().size() << "\n";
  out << "k: " << rep.components << "\n";
  out << "chi: " << rep.euler_characteristic << "\n";
  out << "euler genus: " << rep.euler_genus << "\n";
  out << "cellular: " << (rep.cellular ? "yes" : "no") << "\n";
  out << "RESULT: validate pass\n";
  return 0;
}

std::string describe(const EdgeClass& c) {
  switch (c.kind()) {
    case EdgeKind::bridge: return "bridge (quasi-bridge, not quasi-loop)";
    case EdgeKind::quasi_bridge_only: return "quasi-bridge (not bridge, not quasi-loop)";
    case EdgeKind::quasi_loop: return "quasi-loop (loop, not quasi-bridge)";
    case EdgeKind::ordinary: return std::string("ordinary (") + (c.loop ? "loop" : "not loop") +
                                    ", not quasi-bridge, not quasi-loop)";
  }
  return "?";
}

int cmd_classify(const EmbeddedGraph& emb, std::ostream& out) {
  const EmbeddingScheme scheme = derive_dagger(emb);
  const RankMatroid bond = bond_matroid(scheme.dagger);
  int disagreements = 0;
  for (int e : emb.edges()) {
    const EdgeClass topo = classify_edge(emb, e);
    const EdgeClass mat = classify_edge(scheme, e);
    const bool agree = topo == mat && topo.quasi_loop == is_loop(bond, e) && topo.quasi_bridge == is_isthmus(bond, e);
    disagreements += !agree;
    out << "edge " << e << ": " << describe(topo) << (agree ? "" : " [matroid test disagrees]") << "\n";
  }
  if (disagreements > 0) {
    out << "RESULT: classify FAIL " << disagreements << " edges disagree\n";
    return 1;
  }
  out << "RESULT: classify pass\n";
  return 0;
}

int cmd_poly(const EmbeddedGraph& emb, const Options& o, std::ostream& out, std::ostream& err) {
  const Method method = o.method == "recursion" ? Method::recursion : Method::expansion;
  MPolynomial p;
  if (o.which == "tutte") {
    if (method == Method::recursion) {
      const RankMatroid c = cycle_matroid(emb.graph());
      p = tutte_perspective(MatroidPerspective::unchecked(c, c), method, o.cap);
    } else {
      p = tutte(emb.graph(), o.cap);
    }
  } else if (o.which == "lv") {
    if (!validate(emb).cellular) throw DomainError("--which lv needs a cellular embedding; use lv-ext");
    p = method == Method::recursion ? las_vergnas_embedded(emb, method, o.cap) : las_vergnas_cellular(emb.rotation(), o.cap);
  } else if (o.which == "lv-ext") {
    p = las_vergnas_embedded(emb, method, o.cap);
  } else {
    if (method == Method::recursion) {
      err << "error: --method recursion is not available for --which " << o.which << "\n";
      return 2;
    }
    if (o.which == "br") p = bollobas_riordan(emb.rotation(), o.cap);
    if (o.which == "krushkal") p = krushkal(emb, o.cap);
    if (o.which == "dichromatic") p = dichromatic(emb.graph(), o.cap);
  }
  out << p.to_string() << "\n";
  return 0;
}

int print_report(const CheckReport& rep, const std::string& label, std::ostream& out) {
  for (const CheckResult& r : rep.results) {
    out << "RESULT: " << r.name << " " << to_string(r.status);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
  }
  const int fails = rep.count(CheckStatus::fail);
  out << "RESULT: " << label << " " << (fails ? "FAIL" : "pass") << " (" << rep.count(CheckStatus::pass)
      << " passed, " << fails << " failed, " << rep.count(CheckStatus::skipped) << " skipped)\n";
  return fails ? 1 : 0;
}

IdentityOptions identity_options(const Options& o) {
  IdentityOptions io;
  io.points = o.points;
  io.cap = o.suite_cap;
  io.state_cap = o.state_cap;
  return io;
}

int cmd_identities(const EmbeddedGraph& emb, const Options& o, std::ostream& out) {
  const IdentityOptions io = identity_options(o);
  CheckReport rep;
  if (o.suite == "all" || o.suite == "polynomials") rep = verify_identities(emb, io);
  if (o.suite == "all" || o.suite == "states") {
    CheckReport states = verify_state_identities(emb, io);
    rep.results.insert(rep.results.end(), states.results.begin(), states.results.end());
  }
  return print_report(rep, "identities", out);
}

int cmd_states(const EmbeddedGraph& emb, const Options& o, std::ostream& out) {
  const RotationSystem& g = emb.rotation();
  if (validate(emb).cellular && components(emb.graph(), emb.edges()) == 1) {
    if (g.edges().size() > o.suite_cap) throw CapExceeded("state enumeration", g.edges().size(), o.suite_cap);
    out << "surface: " << to_string(surface_type(g)) << "\n";
    for (const auto& [k, n] : noncrossing_profile(g, o.suite_cap)) {
      out << "crossing-free states with " << k << " components: " << n << "\n";
    }
    const auto bad = min_formula_counterexample(g, o.suite_cap);
    out << "minimum formula: " << (bad ? "misses at state " + bad->to_string() : std::string("exact on every state"))
        << "\n";
  }
  return print_report(verify_state_identities(emb, identity_options(o)), "states", out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Las Vergnas, Tutte, Bollobas-Riordan and Krushkal polynomials of embedded graphs", "lvpoly"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "embedded graph file")->required(); };
  auto add_suite_caps = [&](CLI::App* sub) {
    sub->add_option("--cap", o.suite_cap, "largest edge count for exhaustive suites")->check(CLI::PositiveNumber);
    sub->add_option("--state-cap", o.state_cap, "largest edge count for the all-states sweep")->check(CLI::NonNegativeNumber);
    sub->add_option("--points", o.points, "evaluation points per identity")->check(CLI::PositiveNumber);
  };

  CLI::App* trace = app.add_subcommand("trace", "print the boundary circles");
  add_file(trace);
  CLI::App* valid = app.add_subcommand("validate", "report k, chi, Euler genus and cellularity");
  add_file(valid);
  CLI::App* classify = app.add_subcommand("classify", "bridge / quasi-bridge / quasi-loop per edge");
  add_file(classify);
  CLI::App* poly = app.add_subcommand("poly", "print a polynomial");
  add_file(poly);
  poly->add_option("--which", o.which, "polynomial")
      ->check(CLI::IsMember({"tutte", "lv", "lv-ext", "br", "krushkal", "dichromatic"}));
  poly->add_option("--method", o.method, "expansion or recursion")->check(CLI::IsMember({"expansion", "recursion"}));
  poly->add_option("--cap", o.cap, "largest edge count")->check(CLI::PositiveNumber);
  CLI::App* ids = app.add_subcommand("identities", "check every applicable identity");
  add_file(ids);
  ids->add_option("--suite", o.suite, "all, polynomials or states")->check(CLI::IsMember({"all", "polynomials", "states"}));
  add_suite_caps(ids);
  CLI::App* states = app.add_subcommand("states", "medial graph states");
  add_file(states);
  add_suite_caps(states);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) return 2;
    err << app.get_subcommands().front()->help();
    return 2;
  }

  try {
    const EmbeddedGraph emb = read_embedded_graph_file(o.file);
    if (trace->parsed()) return cmd_trace(emb, out);
    if (valid->parsed()) return cmd_validate(emb, out);
    if (classify->parsed()) return cmd_classify(emb, out);
    if (poly->parsed()) return cmd_poly(emb, o, out, err);
    if (ids->parsed()) return cmd_identities(emb, o, out);
    if (states->parsed()) return cmd_states(emb, o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << o.file << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lvpoly
