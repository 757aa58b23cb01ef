#pragma once

#include <string>

#include <json.hpp>

#include "surfcluster/cluster.hpp"
#include "surfcluster/lamination.hpp"
#include "surfcluster/poly.hpp"
#include "surfcluster/surface.hpp"
#include "surfcluster/wilson.hpp"

namespace surfcluster::io {

using json = nlohmann::json;

// Rationals are written as "p/q" strings (or "p" when integral) and read
// from integers, such strings, or {num, den} objects.
json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& path = "");
json rational_object(const Rational& r);  // {num, den}

json to_json(const MarkedSurface& s);
MarkedSurface surface_from_json(const json& j, const std::string& path = "");

// {surface, edges:[{id, kind, mplus, mminus}], triangles:[[side,side,side]]}
// with side id = 2 * edge id + k.
json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j, const std::string& path = "");

// {vars, terms:[{exp:[doubled], num, den}]}
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j, const std::string& path = "");

json to_json(const Fraction& f);
Fraction fraction_from_json(const json& j, const std::string& path = "");

json to_json(const MatrixXq& m);
json to_json(const Eigen::MatrixXi& m);

// {tri, kind, mode:"symbolic"|"numeric", values:{id: value}}
json to_json(const Chart& c);
json to_json(const NumericChart& c);
Chart chart_from_json(const json& j, const std::string& path = "");
NumericChart numeric_chart_from_json(const json& j, const std::string& path = "");

// {tri, entries:{id: rational}}
json to_json(const TropicalVector& v);
TropicalVector vector_from_json(const json& j, const std::string& path = "");

// {kind:"arc"|"loop"|"edge", word:[side ids], puncture_ends:[...], edge}
json curve_to_json(const Curve& c, const Triangulation& t);
Curve curve_from_json(const json& j, const Triangulation& t, const std::string& path = "");

// {tri, components:[curve fields + weight:{num,den}], sigma, nu}
json to_json(const PLamination& lam, const Triangulation& t);
json to_json(const ALamination& lam, const Triangulation& t);
PLamination plamination_from_json(const json& j, const Triangulation& t, const std::string& path = "");
ALamination alamination_from_json(const json& j, const Triangulation& t, const std::string& path = "");

json to_json(const TurningWord& w, const Triangulation& t);
json to_json(const Matrix2& m);

}  // namespace surfcluster::io
