#pragma once

#include <map>
#include <vector>

#include "surfcluster/poly.hpp"
#include "surfcluster/rational.hpp"
#include "surfcluster/surface.hpp"

namespace surfcluster {

enum class ChartKind { X, A };

// Values are indexed by edge position of `tri`. Symbolic charts start as
// the coordinate variables of the triangulation they were created on.
struct Chart {
  Triangulation tri;
  ChartKind kind = ChartKind::X;
  std::vector<Fraction> values;

  const Fraction& at_id(int id) const { return values[tri.index_of(id)]; }
};

struct NumericChart {
  Triangulation tri;
  ChartKind kind = ChartKind::X;
  std::vector<Rational> values;

  const Rational& at_id(int id) const { return values[tri.index_of(id)]; }
};

struct TropicalVector {
  Triangulation tri;
  VectorXq entries;

  const Rational& at_id(int id) const { return entries(tri.index_of(id)); }
};

Chart symbolic_chart(const Triangulation& t, ChartKind kind);
NumericChart numeric_chart(const Triangulation& t, ChartKind kind, const std::map<int, Rational>& values);
NumericChart evaluate(const Chart& c, const std::map<int, Rational>& point);

struct ChartMutation {
  Chart chart;
  EdgeRelabeling relabel;
};
struct NumericMutation {
  NumericChart chart;
  EdgeRelabeling relabel;
};
struct TropicalMutation {
  TropicalVector vec;
  EdgeRelabeling relabel;
};

ChartMutation mutate_x(const Chart& c, int edge_id);
ChartMutation mutate_a(const Chart& c, int edge_id);
NumericMutation mutate_x(const NumericChart& c, int edge_id);
NumericMutation mutate_a(const NumericChart& c, int edge_id);
TropicalMutation mutate_x_tropical(const TropicalVector& v, int edge_id);
TropicalMutation mutate_a_tropical(const TropicalVector& v, int edge_id);

// Dispatches on the chart kind.
ChartMutation mutate(const Chart& c, int edge_id);

// {X_a, X_b} = eps_ab X_a X_b in the variables of `t`.
LaurentPoly poisson_bracket_x(int a_id, int b_id, const Triangulation& t);

}  // namespace surfcluster
