#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "surfcluster/cluster.hpp"
#include "surfcluster/duality.hpp"
#include "surfcluster/ensemble.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/gluing.hpp"
#include "surfcluster/json_io.hpp"
#include "surfcluster/lamination.hpp"
#include "surfcluster/verify.hpp"
#include "surfcluster/wilson.hpp"

using namespace surfcluster;
using io::json;

namespace {

struct Options {
  std::string surface, tri, lam, chart, vec, suite, json_out, labels, separator = "*", kind = "X", family = "ix",
                                                                 method = "coords";
  std::string boundary;
  int polygon = 0, genus = 0, punctures = 0, edge = -1, left = -1, right = -1, a = -1, b = -1, bound = 2;
  bool dual = false;
};

json read_json(const std::string& file) {
  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

// The triangulation comes from --tri when given, otherwise from the "tri"
// field of the primary input.
Triangulation tri_for(const Options& o, const json& primary) {
  if (!o.tri.empty()) return io::triangulation_from_json(read_json(o.tri));
  if (primary.is_object() && primary.contains("tri")) return io::triangulation_from_json(primary["tri"], "/tri");
  return io::triangulation_from_json(primary);
}

std::map<int, std::string> parse_labels(const std::string& spec) {
  std::map<int, std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidInput, "label '" + item + "' is not id=name");
    out[std::stoi(item.substr(0, eq))] = item.substr(eq + 1);
  }
  return out;
}

json poly_out(const LaurentPoly& p, const std::string& prefix, const Options& o) {
  std::string text = o.labels.empty() && o.separator == "*" ? format(p, prefix)
                                                            : format(p, prefix, parse_labels(o.labels), o.separator);
  return {{"poly", io::to_json(p)}, {"text", text}};
}

// Indented JSON with arrays of scalars kept on one line.
void render(const json& j, int indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += inner + json(k).dump() + ": ";
      render(v, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
    return;
  }
  if (j.is_array() && !j.empty()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && v.is_primitive();
    if (flat) {
      out += j.dump(-1, ' ', false);
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      render(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
    return;
  }
  out += j.dump(-1, ' ', false);
}

json glue_info(const GlueResult& g) {
  json map = json::object();
  for (const auto& [from, to] : g.edge_map) map[std::to_string(from)] = to;
  return {{"alpha_bar", g.alpha_bar}, {"edge_map", map}, {"new_punctures", g.new_punctures}};
}

int run(const std::string& verb, const Options& o, json& out) {
  if (verb == "surface-new") {
    MarkedSurface s;
    if (!o.surface.empty())
      s = named_surface(o.surface);
    else if (o.polygon > 0)
      s = polygon_surface(o.polygon);
    else {
      std::vector<int> counts;
      std::stringstream ss(o.boundary);
      std::string item;
      while (std::getline(ss, item, ',')) counts.push_back(std::stoi(item));
      s = new_surface(o.genus, o.punctures, counts);
    }
    validate_surface(s);
    out = io::to_json(s);
    return 0;
  }
  if (verb == "triangulate") {
    out = io::to_json(initial_triangulation(io::surface_from_json(read_json(o.surface))));
    return 0;
  }
  if (verb == "exchange") {
    Triangulation t = io::triangulation_from_json(read_json(o.tri));
    ExchangeData d = exchange_data(t);
    out = {{"ids", t.ids()}, {"epsilon", io::to_json(d.epsilon)}, {"m", io::to_json(d.m)}, {"p", io::to_json(d.p)}};
    return 0;
  }
  if (verb == "flip") {
    FlipResult f = flip(io::triangulation_from_json(read_json(o.tri)), o.edge);
    json relabel = json::object();
    for (const auto& [from, to] : f.relabel) relabel[std::to_string(from)] = to;
    out = {{"tri", io::to_json(f.tri)}, {"relabel", relabel}, {"new_id", f.new_id}};
    return 0;
  }
  if (verb == "chart") {
    Triangulation t = io::triangulation_from_json(read_json(o.tri));
    out = io::to_json(symbolic_chart(t, o.kind == "A" ? ChartKind::A : ChartKind::X));
    return 0;
  }
  if (verb == "mutate-x" || verb == "mutate-a") {
    json in = read_json(o.chart);
    const bool numeric = in.value("mode", "symbolic") == "numeric";
    auto relabel_json = [](const EdgeRelabeling& r) {
      json j = json::object();
      for (const auto& [from, to] : r) j[std::to_string(from)] = to;
      return j;
    };
    if (numeric) {
      NumericChart c = io::numeric_chart_from_json(in);
      NumericMutation m = verb == "mutate-x" ? mutate_x(c, o.edge) : mutate_a(c, o.edge);
      out = io::to_json(m.chart);
      out["relabel"] = relabel_json(m.relabel);
    } else {
      Chart c = io::chart_from_json(in);
      ChartMutation m = verb == "mutate-x" ? mutate_x(c, o.edge) : mutate_a(c, o.edge);
      out = io::to_json(m.chart);
      out["relabel"] = relabel_json(m.relabel);
    }
    return 0;
  }
  if (verb == "mutate-trop") {
    TropicalVector v = io::vector_from_json(read_json(o.vec.empty() ? o.chart : o.vec));
    TropicalMutation m = o.kind == "A" || o.kind == "a" ? mutate_a_tropical(v, o.edge) : mutate_x_tropical(v, o.edge);
    out = io::to_json(m.vec);
    return 0;
  }
  if (verb == "ensemble") {
    if (!o.lam.empty()) {
      json in = read_json(o.lam);
      Triangulation t = tri_for(o, in);
      ALamination lam = io::alamination_from_json(in, t);
      out = io::to_json(o.dual ? dual_tropical_ensemble(lam, t) : tropical_ensemble(lam, t), t);
      return 0;
    }
    Triangulation t = io::triangulation_from_json(read_json(o.tri));
    json pull = json::object();
    for (const auto& [id, p] : ensemble_pullback(t)) pull[std::to_string(id)] = poly_out(p, "A", o);
    out = {{"pullback", pull}, {"p", io::to_json(exchange_data(t).p)}};
    return 0;
  }
  if (verb == "q-matrix") {
    Triangulation t = io::triangulation_from_json(read_json(o.tri));
    out = {{"ids", t.ids()}, {"q", io::to_json(q_matrix(t))}, {"index", io::to_json(integrality_index(t))}};
    return 0;
  }
  if (verb == "poisson") {
    Triangulation t = io::triangulation_from_json(read_json(o.tri));
    out = {{"ids", t.ids()}, {"pi", io::to_json(muller_matrix(t))}, {"epsilon", io::to_json(exchange_data(t).epsilon)}};
    if (o.a >= 0 && o.b >= 0) {
      out["bracket_x"] = poly_out(poisson_bracket_x(o.a, o.b, t), "X", o);
      out["bracket_a"] = poly_out(poisson_bracket_a(o.a, o.b, t), "A", o);
    }
    return 0;
  }
  if (verb == "wilson") {
    json in = read_json(o.lam);
    Triangulation t = tri_for(o, in);
    std::vector<Curve> curves;
    if (in.contains("components")) {
      for (const auto& wc : io::alamination_from_json(in, t).components) curves.push_back(wc.curve);
    } else {
      curves.push_back(io::curve_from_json(in, t));
    }
    out = json::array();
    for (const Curve& c : curves) {
      TurningWord w = turning_pattern(c, t);
      json item = {{"word", io::to_json(w, t)}};
      if (w.loop) {
        item["matrix"] = io::to_json(loop_matrix(w, t));
        item["trace"] = poly_out(trace_monodromy(w, 1, t), "X", o);
      } else {
        Matrix2 g = wilson_line(w, t);
        item["matrix"] = io::to_json(g);
        item["delta22"] = poly_out(delta22(g), "X", o);
      }
      out.push_back(item);
    }
    return 0;
  }
  if (verb == "shear") {
    json in = read_json(o.lam);
    Triangulation t = tri_for(o, in);
    PLamination lam = io::plamination_from_json(in, t);
    out = io::to_json(o.dual ? dual_shear_coords(lam, t) : shear_coords(lam, t));
    return 0;
  }
  if (verb == "a-coords") {
    json in = read_json(o.lam);
    Triangulation t = tri_for(o, in);
    out = io::to_json(a_coords(io::alamination_from_json(in, t), t));
    return 0;
  }
  if (verb == "reconstruct") {
    TropicalVector v = io::vector_from_json(read_json(o.vec));
    if (o.kind == "A" || o.kind == "a")
      out = io::to_json(alamination_from_a(v), v.tri);
    else
      out = io::to_json(o.dual ? reconstruct_from_dual_shear(v) : reconstruct_from_shear(v), v.tri);
    return 0;
  }
  if (verb == "glue") {
    if (!o.chart.empty()) {
      json in = read_json(o.chart);
      if (in.value("mode", "symbolic") == "numeric") {
        GluedNumericChart g = glue_chart(io::numeric_chart_from_json(in), o.left, o.right);
        out = io::to_json(g.chart);
        out["glue"] = glue_info(g.glue);
      } else {
        GluedChart g = glue_chart(io::chart_from_json(in), o.left, o.right);
        out = io::to_json(g.chart);
        out["glue"] = glue_info(g.glue);
      }
      return 0;
    }
    if (!o.lam.empty()) {
      json in = read_json(o.lam);
      Triangulation t = tri_for(o, in);
      PLamination lam = io::plamination_from_json(in, t);
      GluedLamination g = o.method == "pins" ? glue_by_pins(lam, t, o.left, o.right, o.dual)
                          : o.dual           ? dual_glue_tropical(lam, t, o.left, o.right)
                                             : glue_tropical(lam, t, o.left, o.right);
      out = io::to_json(g.lam, g.glue.tri);
      out["glue"] = glue_info(g.glue);
      return 0;
    }
    GlueResult g = glue_surface(io::triangulation_from_json(read_json(o.tri)), o.left, o.right);
    out = {{"tri", io::to_json(g.tri)}, {"glue", glue_info(g)}};
    return 0;
  }
  if (verb == "ia" || verb == "ix") {
    json in = read_json(o.lam);
    Triangulation t = tri_for(o, in);
    if (verb == "ia")
      out = poly_out(I_A(io::alamination_from_json(in, t), t), "X", o);
    else
      out = poly_out(I_X(io::plamination_from_json(in, t), t), "A", o);
    return 0;
  }
  if (verb == "check-duality") {
    json in = read_json(o.lam);
    Triangulation t = tri_for(o, in);
    ALamination lam = io::alamination_from_json(in, t);
    LaurentPoly lhs = substitute_monomial(I_A(lam, t), ensemble_pullback(t));
    LaurentPoly rhs = I_X(dual_tropical_ensemble(lam, t), t);
    out = {{"holds", lhs == rhs}, {"pullback_of_ia", poly_out(lhs, "A", o)}, {"ix_of_dual_ensemble", poly_out(rhs, "A", o)}};
    return lhs == rhs ? 0 : 1;
  }
  if (verb == "check-amal") {
    json in = read_json(o.lam);
    Triangulation t = tri_for(o, in);
    AmalgamationReport rep = check_bracelet_amalgamation(io::plamination_from_json(in, t), t, o.left, o.right);
    const char* status = rep.status == AmalgamationStatus::Holds   ? "holds"
                         : rep.status == AmalgamationStatus::Fails ? "fails"
                                                                   : "negative-pinning-sum";
    json quotients = json::array();
    for (const auto& q : rep.frozen_quotients) quotients.push_back(poly_out(q, "A", o));
    out = {{"status", status},         {"equal", rep.equal},
           {"restricted", poly_out(rep.restricted, "A", o)}, {"glued", poly_out(rep.glued, "A", o)},
           {"frozen_quotients", quotients}, {"glue", glue_info(rep.glue)}};
    return rep.status == AmalgamationStatus::Fails ? 1 : 0;
  }
  if (verb == "rank") {
    Triangulation t = io::triangulation_from_json(read_json(o.tri));
    std::vector<LaurentPoly> family;
    const int n = t.num_edges();
    const bool ia = o.family == "ia";
    const int lo = ia ? 0 : -o.bound;
    std::vector<int> digits(n, lo);
    while (true) {
      VectorXq v(n);
      for (int i = 0; i < n; ++i) v(i) = digits[i];
      family.push_back(ia ? I_A(alamination_from_a({t, v}), t) : I_X(reconstruct_from_dual_shear({t, v}), t));
      int i = 0;
      while (i < n && digits[i] == o.bound) digits[i++] = lo;
      if (i == n) break;
      ++digits[i];
    }
    int r = polynomial_rank(family);
    out = {{"family", o.family}, {"bound", o.bound}, {"size", family.size()}, {"rank", r},
           {"independent", r == static_cast<int>(family.size())}};
    return 0;
  }
  if (verb == "verify") {
    SuiteOptions so;
    so.surface = o.surface.empty() ? "square" : o.surface;
    so.bound = o.bound;
    if (const char* seed = std::getenv("SURFCLUSTER_SEED")) so.seed = std::stoull(seed);
    SuiteResult r = run_suite(o.suite, so);
    out = {{"suite", o.suite}, {"surface", so.surface}, {"bound", so.bound}, {"pass", r.pass},
           {"cases", r.cases}, {"skipped", r.skipped}};
    if (!r.pass) out["counterexample"] = r.counterexample;
    return r.pass ? 0 : 1;
  }
  throw Error(ErrorKind::InvalidInput, "unknown command " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with cluster charts and laminations on marked surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--json-out", o.json_out, "Write the result to this file instead of stdout");

  auto add_tri = [&](CLI::App* c) { return c->add_option("--tri", o.tri, "Triangulation JSON (default: stdin)"); };
  auto add_lam = [&](CLI::App* c) { return c->add_option("--lam", o.lam, "Lamination or curve JSON (default: stdin)"); };
  auto add_labels = [&](CLI::App* c) {
    c->add_option("--labels", o.labels, "Variable names, e.g. 1=b,2=c");
    c->add_option("--separator", o.separator, "Separator between factors of a monomial");
  };
  std::vector<std::pair<std::string, CLI::App*>> verbs;
  auto verb = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--json-out", o.json_out, "Write the result to this file instead of stdout");
    verbs.emplace_back(name, c);
    return c;
  };

  CLI::App* surface = app.add_subcommand("surface", "Surface definitions");
  surface->require_subcommand(1);
  CLI::App* snew = surface->add_subcommand("new", "Emit surface JSON");
  snew->add_option("--polygon", o.polygon, "Disk with this many special points");
  snew->add_option("--genus", o.genus, "Genus");
  snew->add_option("--punctures", o.punctures, "Number of punctures");
  snew->add_option("--boundary", o.boundary, "Special points per boundary component, comma separated");
  snew->add_option("--surface", o.surface, "Named surface such as square, annulus, triangle+triangle");
  snew->add_option("--json-out", o.json_out, "Write the result to this file instead of stdout");

  verb("triangulate", "Initial triangulation of a surface")->add_option("--surface", o.surface, "Surface JSON");
  add_tri(verb("exchange", "Exchange matrices eps, m and p = eps + m"));
  auto* cflip = verb("flip", "Flip an interior edge");
  add_tri(cflip);
  cflip->add_option("--edge", o.edge, "Edge id")->required();
  auto* cchart = verb("chart", "Symbolic chart of a triangulation");
  add_tri(cchart);
  cchart->add_option("--kind", o.kind, "X or A");
  for (const char* name : {"mutate-x", "mutate-a"}) {
    auto* c = verb(name, "Mutate a symbolic or numeric chart");
    c->add_option("--chart", o.chart, "Chart JSON");
    c->add_option("--edge", o.edge, "Edge id")->required();
  }
  auto* ctrop = verb("mutate-trop", "Tropical mutation of a coordinate vector");
  ctrop->add_option("--chart,--vec", o.vec, "Coordinate vector JSON");
  ctrop->add_option("--edge", o.edge, "Edge id")->required();
  ctrop->add_option("--kind", o.kind, "x or a");
  auto* cens = verb("ensemble", "Ensemble map, or its tropical version on an A-lamination");
  add_tri(cens);
  cens->add_option("--lam", o.lam, "A-lamination JSON");
  cens->add_flag("--dual", o.dual, "Use the dual ensemble map");
  add_labels(cens);
  add_tri(verb("q-matrix", "Matrix of the inverse ensemble map"));
  auto* cpois = verb("poisson", "Compatibility matrix and brackets");
  add_tri(cpois);
  cpois->add_option("--a", o.a, "First edge id");
  cpois->add_option("--b", o.b, "Second edge id");
  add_labels(cpois);
  auto* cwil = verb("wilson", "Wilson lines and monodromy traces");
  add_tri(cwil);
  add_lam(cwil);
  add_labels(cwil);
  auto* cshear = verb("shear", "Shear coordinates of a P-lamination");
  add_tri(cshear);
  add_lam(cshear);
  cshear->add_flag("--dual", o.dual, "Dual coordinates");
  auto* cacoords = verb("a-coords", "Coordinates of an A-lamination");
  add_tri(cacoords);
  add_lam(cacoords);
  auto* crec = verb("reconstruct", "Lamination from a coordinate vector");
  crec->add_option("--vec", o.vec, "Coordinate vector JSON");
  crec->add_option("--kind", o.kind, "X for shear coordinates, A for A-lamination coordinates");
  crec->add_flag("--dual", o.dual, "Input holds dual coordinates");
  auto* cglue = verb("glue", "Glue two boundary intervals");
  add_tri(cglue);
  cglue->add_option("--lam", o.lam, "P-lamination JSON");
  cglue->add_option("--chart", o.chart, "Chart JSON");
  cglue->add_option("--left", o.left, "Left interval id")->required();
  cglue->add_option("--right", o.right, "Right interval id")->required();
  cglue->add_flag("--dual", o.dual, "Dual gluing");
  cglue->add_option("--method", o.method, "coords or pins");
  for (const char* name : {"ia", "ix"}) {
    auto* c = verb(name, name == std::string("ia") ? "Duality map on A-laminations" : "Duality map on P-laminations");
    add_tri(c);
    add_lam(c);
    add_labels(c);
  }
  auto* cdual = verb("check-duality", "Compare p* I_A with I_X of the dual ensemble map");
  add_tri(cdual);
  add_lam(cdual);
  add_labels(cdual);
  auto* camal = verb("check-amal", "Bracelet amalgamation check");
  add_tri(camal);
  add_lam(camal);
  camal->add_option("--left", o.left, "Left interval id")->required();
  camal->add_option("--right", o.right, "Right interval id")->required();
  add_labels(camal);
  auto* crank = verb("rank", "Exact rank of a family of duality functions");
  add_tri(crank);
  crank->add_option("--family", o.family, "ix (dual coordinates in [-bound, bound]) or ia (a in [0, bound])");
  crank->add_option("--bound", o.bound, "Coordinate bound");
  auto* cver = verb("verify", "Run a named verification suite");
  cver->add_option("--suite", o.suite, "Suite name")->required();
  cver->add_option("--surface", o.surface, "Named surface");
  cver->add_option("--bound", o.bound, "Sweep bound");

  CLI11_PARSE(app, argc, argv);

  std::string name = surface->parsed() ? "surface-new" : "";
  for (const auto& [n, c] : verbs)
    if (c->parsed()) name = n;

  json out;
  int code = 0;
  try {
    code = run(name, o, out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::string text;
  render(out, 0, text);
  text += "\n";
  if (o.json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.json_out);
    f << text;
  }
  if (name == "verify" && code != 0) std::cerr << "counterexample: " << out.value("counterexample", "") << "\n";
  return code;
}
