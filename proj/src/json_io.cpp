#include "surfcluster/json_io.hpp"

#include <algorithm>

#include "surfcluster/error.hpp"

namespace surfcluster::io {

namespace {

std::string child(const std::string& path, const std::string& key) {
  std::string k;
  for (char ch : key) {
    if (ch == '~')
      k += "~0";
    else if (ch == '/')
      k += "~1";
    else
      k += ch;
  }
  return path + "/" + k;
}
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(child(path, key), "missing field");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<int>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema(path, "expected a boolean");
  return j.get<bool>();
}

const std::string& as_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get_ref<const std::string&>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

int key_id(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    int id = std::stoi(key, &used);
    if (used == key.size()) return id;
  } catch (const std::exception&) {
  }
  schema(path, "expected an integer key");
}

std::vector<int> int_list(const json& j, const std::string& path) {
  std::vector<int> out;
  as_array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], child(path, i)));
  return out;
}

json component_json(const SurfaceComponent& c) {
  return {{"genus", c.genus}, {"punctures", c.punctures}, {"boundary", c.boundary}};
}

SurfaceComponent component_from_json(const json& j, const std::string& path) {
  SurfaceComponent c;
  c.genus = as_int(field(j, "genus", path), child(path, "genus"));
  c.punctures = int_list(field(j, "punctures", path), child(path, "punctures"));
  const std::string bp = child(path, "boundary");
  const json& b = as_array(field(j, "boundary", path), bp);
  for (std::size_t i = 0; i < b.size(); ++i) c.boundary.push_back(int_list(b[i], child(bp, i)));
  return c;
}

const char* kind_name(ChartKind k) { return k == ChartKind::X ? "X" : "A"; }

ChartKind kind_from_json(const json& j, const std::string& path) {
  const std::string& s = as_string(j, path);
  if (s == "X") return ChartKind::X;
  if (s == "A") return ChartKind::A;
  schema(path, "expected \"X\" or \"A\"");
}

// Triangulation either inline under "tri" or supplied by the caller.
Triangulation embedded_tri(const json& j, const std::string& path) {
  return triangulation_from_json(field(j, "tri", path), child(path, "tri"));
}

json curve_fields(const Curve& c, const Triangulation& t) {
  CurveWord w = to_word(c, t);
  json out;
  if (w.along_edge_id >= 0) {
    out["kind"] = "edge";
    out["edge"] = w.along_edge_id;
    return out;
  }
  out["kind"] = w.loop ? "loop" : "arc";
  out["word"] = w.sides;
  if (w.start_vertex) out["start_vertex"] = true;
  if (w.end_vertex) out["end_vertex"] = true;
  return out;
}

std::vector<WeightedCurve> components_from_json(const json& j, const Triangulation& t, const std::string& path) {
  const std::string cp = child(path, "components");
  const json& arr = as_array(field(j, "components", path), cp);
  std::vector<WeightedCurve> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(cp, i);
    WeightedCurve wc;
    wc.curve = curve_from_json(arr[i], t, p);
    wc.weight = arr[i].contains("weight") ? rational_from_json(arr[i]["weight"], child(p, "weight")) : Rational(1);
    out.push_back(std::move(wc));
  }
  return out;
}

json components_json(const std::vector<WeightedCurve>& comps, const Triangulation& t) {
  json arr = json::array();
  for (const auto& wc : comps) {
    json c = curve_fields(wc.curve, t);
    c["weight"] = rational_object(wc.weight);
    arr.push_back(std::move(c));
  }
  return arr;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }

json rational_object(const Rational& r) {
  return {{"num", to_string(Integer(boost::multiprecision::numerator(r)))},
          {"den", to_string(Integer(boost::multiprecision::denominator(r)))}};
}

Rational rational_from_json(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_object()) {
      auto part = [&](const char* key) -> Integer {
        const json& v = field(j, key, path);
        if (v.is_number_integer()) return Integer(v.get<long long>());
        if (v.is_string()) return Integer(v.get<std::string>());
        schema(child(path, key), "expected an integer or integer string");
      };
      Integer num = part("num");
      Integer den = j.contains("den") ? part("den") : Integer(1);
      if (den == 0) schema(child(path, "den"), "zero denominator");
      return make_rational(num, den);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    schema(path, "malformed rational");
  }
  schema(path, "expected a rational");
}

json to_json(const MarkedSurface& s) {
  if (s.components.size() == 1) return component_json(s.components[0]);
  json arr = json::array();
  for (const auto& c : s.components) arr.push_back(component_json(c));
  return {{"components", arr}};
}

MarkedSurface surface_from_json(const json& j, const std::string& path) {
  MarkedSurface s;
  if (j.is_object() && j.contains("components")) {
    const std::string cp = child(path, "components");
    const json& arr = as_array(j["components"], cp);
    for (std::size_t i = 0; i < arr.size(); ++i) s.components.push_back(component_from_json(arr[i], child(cp, i)));
  } else {
    s.components.push_back(component_from_json(j, path));
  }
  validate_surface(s);
  return s;
}

json to_json(const Triangulation& t) {
  json edges = json::array();
  for (const auto& e : t.edges)
    edges.push_back({{"id", e.id}, {"kind", e.boundary ? "boundary" : "interior"}, {"mplus", e.mplus},
                     {"mminus", e.mminus}});
  json tris = json::array();
  for (const auto& tr : t.triangles) {
    json row = json::array();
    for (const auto& s : tr.sides) row.push_back(2 * t.edges[s.edge].id + s.k);
    tris.push_back(row);
  }
  return {{"surface", to_json(t.surface)}, {"edges", edges}, {"triangles", tris}};
}

Triangulation triangulation_from_json(const json& j, const std::string& path) {
  MarkedSurface s = surface_from_json(field(j, "surface", path), child(path, "surface"));
  const std::string ep = child(path, "edges");
  const json& ej = as_array(field(j, "edges", path), ep);
  std::vector<EdgeInfo> edges;
  std::map<int, int> pos;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string p = child(ep, i);
    EdgeInfo e;
    e.id = as_int(field(ej[i], "id", p), child(p, "id"));
    if (e.id < 0) schema(child(p, "id"), "edge ids are nonnegative");
    const std::string& kind = as_string(field(ej[i], "kind", p), child(p, "kind"));
    if (kind != "boundary" && kind != "interior") schema(child(p, "kind"), "expected \"boundary\" or \"interior\"");
    e.boundary = kind == "boundary";
    e.mplus = as_int(field(ej[i], "mplus", p), child(p, "mplus"));
    e.mminus = as_int(field(ej[i], "mminus", p), child(p, "mminus"));
    if (!pos.emplace(e.id, static_cast<int>(i)).second) schema(child(p, "id"), "duplicate edge id");
    edges.push_back(e);
  }
  const std::string tp = child(path, "triangles");
  const json& tj = as_array(field(j, "triangles", path), tp);
  std::vector<Triangle> tris;
  for (std::size_t i = 0; i < tj.size(); ++i) {
    const std::string p = child(tp, i);
    std::vector<int> ids = int_list(tj[i], p);
    if (ids.size() != 3) schema(p, "a triangle has three sides");
    Triangle tr;
    for (int k = 0; k < 3; ++k) {
      auto it = pos.find(ids[k] / 2);
      if (ids[k] < 0 || it == pos.end()) schema(child(p, k), "unknown side id");
      tr.sides[k] = {it->second, ids[k] % 2};
      const EdgeInfo& e = edges[it->second];
      tr.corners[k] = tr.sides[k].k == 0 ? e.mminus : e.mplus;
    }
    tris.push_back(tr);
  }
  Triangulation t(std::move(s), std::move(edges), std::move(tris));
  t.validate();
  return t;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e},
                     {"num", to_string(Integer(boost::multiprecision::numerator(c)))},
                     {"den", to_string(Integer(boost::multiprecision::denominator(c)))}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j, const std::string& path) {
  std::vector<int> vars = int_list(field(j, "vars", path), child(path, "vars"));
  if (!std::is_sorted(vars.begin(), vars.end()) || std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    schema(child(path, "vars"), "variables must be strictly ascending");
  LaurentPoly p(vars);
  const std::string tp = child(path, "terms");
  const json& tj = as_array(field(j, "terms", path), tp);
  for (std::size_t i = 0; i < tj.size(); ++i) {
    const std::string q = child(tp, i);
    Exponent e = int_list(field(tj[i], "exp", q), child(q, "exp"));
    if (e.size() != vars.size()) schema(child(q, "exp"), "exponent length differs from vars");
    p.add_term(e, rational_from_json(tj[i], q));
  }
  return p;
}

json to_json(const Fraction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Fraction fraction_from_json(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("terms")) return Fraction(poly_from_json(j, path));
  return Fraction(poly_from_json(field(j, "num", path), child(path, "num")),
                  poly_from_json(field(j, "den", path), child(path, "den")));
}

json to_json(const MatrixXq& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Eigen::MatrixXi& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Chart& c) {
  json values = json::object();
  for (int e = 0; e < c.tri.num_edges(); ++e) values[std::to_string(c.tri.edges[e].id)] = to_json(c.values[e]);
  return {{"tri", to_json(c.tri)}, {"kind", kind_name(c.kind)}, {"mode", "symbolic"}, {"values", values}};
}

json to_json(const NumericChart& c) {
  json values = json::object();
  for (int e = 0; e < c.tri.num_edges(); ++e) values[std::to_string(c.tri.edges[e].id)] = to_json(c.values[e]);
  return {{"tri", to_json(c.tri)}, {"kind", kind_name(c.kind)}, {"mode", "numeric"}, {"values", values}};
}

Chart chart_from_json(const json& j, const std::string& path) {
  Chart c;
  c.tri = embedded_tri(j, path);
  c.kind = kind_from_json(field(j, "kind", path), child(path, "kind"));
  if (j.contains("mode") && j["mode"] != "symbolic") schema(child(path, "mode"), "expected a symbolic chart");
  c.values.assign(c.tri.num_edges(), Fraction());
  const std::string vp = child(path, "values");
  const json& vj = field(j, "values", path);
  if (!vj.is_object()) schema(vp, "expected an object keyed by edge id");
  std::vector<bool> seen(c.tri.num_edges(), false);
  for (const auto& [key, val] : vj.items()) {
    const std::string p = child(vp, key);
    int id = key_id(key, p);
    if (!c.tri.has_id(id)) schema(p, "unknown edge id");
    int e = c.tri.index_of(id);
    c.values[e] = fraction_from_json(val, p);
    seen[e] = true;
  }
  for (int e = 0; e < c.tri.num_edges(); ++e)
    if (!seen[e]) schema(child(vp, std::to_string(c.tri.edges[e].id)), "missing value");
  return c;
}

NumericChart numeric_chart_from_json(const json& j, const std::string& path) {
  Triangulation t = embedded_tri(j, path);
  ChartKind kind = kind_from_json(field(j, "kind", path), child(path, "kind"));
  const std::string vp = child(path, "values");
  const json& vj = field(j, "values", path);
  if (!vj.is_object()) schema(vp, "expected an object keyed by edge id");
  std::map<int, Rational> values;
  for (const auto& [key, val] : vj.items()) {
    const std::string p = child(vp, key);
    int id = key_id(key, p);
    if (!t.has_id(id)) schema(p, "unknown edge id");
    values[id] = rational_from_json(val, p);
  }
  for (int id : t.ids())
    if (!values.count(id)) schema(child(vp, std::to_string(id)), "missing value");
  return numeric_chart(t, kind, values);
}

json to_json(const TropicalVector& v) {
  json entries = json::object();
  for (int e = 0; e < v.tri.num_edges(); ++e) entries[std::to_string(v.tri.edges[e].id)] = to_json(v.entries(e));
  return {{"tri", to_json(v.tri)}, {"entries", entries}};
}

TropicalVector vector_from_json(const json& j, const std::string& path) {
  TropicalVector v;
  v.tri = embedded_tri(j, path);
  v.entries = VectorXq::Zero(v.tri.num_edges());
  const std::string vp = child(path, "entries");
  const json& vj = field(j, "entries", path);
  if (!vj.is_object()) schema(vp, "expected an object keyed by edge id");
  for (const auto& [key, val] : vj.items()) {
    const std::string p = child(vp, key);
    int id = key_id(key, p);
    if (!v.tri.has_id(id)) schema(p, "unknown edge id");
    v.entries(v.tri.index_of(id)) = rational_from_json(val, p);
  }
  return v;
}

json curve_to_json(const Curve& c, const Triangulation& t) { return curve_fields(c, t); }

Curve curve_from_json(const json& j, const Triangulation& t, const std::string& path) {
  const std::string& kind = as_string(field(j, "kind", path), child(path, "kind"));
  CurveWord w;
  if (kind == "edge") {
    w.along_edge_id = as_int(field(j, "edge", path), child(path, "edge"));
    if (!t.has_id(w.along_edge_id)) schema(child(path, "edge"), "unknown edge id");
    return from_word(w, t);
  }
  if (kind != "arc" && kind != "loop") schema(child(path, "kind"), "expected \"arc\", \"loop\" or \"edge\"");
  w.loop = kind == "loop";
  w.sides = int_list(field(j, "word", path), child(path, "word"));
  for (std::size_t i = 0; i < w.sides.size(); ++i)
    if (w.sides[i] < 0 || !t.has_id(w.sides[i] / 2)) schema(child(child(path, "word"), i), "unknown side id");
  if (j.contains("start_vertex")) w.start_vertex = as_bool(j["start_vertex"], child(path, "start_vertex"));
  if (j.contains("end_vertex")) w.end_vertex = as_bool(j["end_vertex"], child(path, "end_vertex"));
  return from_word(w, t);
}

json to_json(const PLamination& lam, const Triangulation& t) {
  json sigma = json::object();
  for (const auto& [p, s] : lam.sigma) sigma[std::to_string(p)] = s;
  json nu = json::object();
  for (const auto& [id, v] : lam.nu) nu[std::to_string(id)] = rational_object(v);
  return {{"tri", to_json(t)}, {"components", components_json(lam.components, t)}, {"sigma", sigma}, {"nu", nu}};
}

json to_json(const ALamination& lam, const Triangulation& t) {
  return {{"tri", to_json(t)}, {"components", components_json(lam.components, t)}};
}

PLamination plamination_from_json(const json& j, const Triangulation& t, const std::string& path) {
  PLamination lam;
  lam.components = components_from_json(j, t, path);
  if (j.contains("sigma")) {
    const std::string sp = child(path, "sigma");
    if (!j["sigma"].is_object()) schema(sp, "expected an object keyed by puncture");
    for (const auto& [key, val] : j["sigma"].items()) {
      const std::string p = child(sp, key);
      int point = key_id(key, p);
      if (!t.surface.is_puncture(point)) schema(p, "not a puncture");
      int s = as_int(val, p);
      if (s != 1 && s != -1 && s != 0) schema(p, "expected -1, 0 or 1");
      lam.sigma[point] = s;
    }
  }
  for (const auto& comp : t.surface.components)
    for (int point : comp.punctures) lam.sigma.emplace(point, 0);
  if (j.contains("nu")) {
    const std::string np = child(path, "nu");
    if (!j["nu"].is_object()) schema(np, "expected an object keyed by boundary interval id");
    for (const auto& [key, val] : j["nu"].items()) {
      const std::string p = child(np, key);
      int id = key_id(key, p);
      if (!t.has_id(id) || !t.is_boundary(t.index_of(id))) schema(p, "not a boundary interval id");
      lam.nu[id] = rational_from_json(val, p);
    }
  }
  for (int e : t.boundary_edges()) lam.nu.emplace(t.edges[e].id, 0);
  validate_lamination(lam, t);
  return lam;
}

ALamination alamination_from_json(const json& j, const Triangulation& t, const std::string& path) {
  ALamination lam;
  lam.components = components_from_json(j, t, path);
  for (std::size_t i = 0; i < lam.components.size(); ++i)
    if (has_vertex_end(lam.components[i].curve))
      schema(child(child(path, "components"), i), "A-lamination curves end on boundary intervals");
  return lam;
}

json to_json(const TurningWord& w, const Triangulation& t) {
  json edges = json::array();
  for (int e : w.edges) edges.push_back(t.edges[e].id);
  return {{"loop", w.loop}, {"edges", edges}, {"turns", w.turns}};
}

json to_json(const Matrix2& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& p : row) r.push_back({{"poly", to_json(p)}, {"text", format(p, "X_")}});
    out.push_back(r);
  }
  return out;
}

}  // namespace surfcluster::io
