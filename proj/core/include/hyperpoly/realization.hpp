#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperpoly/construct.hpp"
#include "hyperpoly/errors.hpp"
#include "hyperpoly/rational.hpp"

namespace hyperpoly {

enum class ConstraintKind { equal, greater_equal };

// sum of x_i over `support` (kind) rhs.
struct LinearConstraint {
  AtomSet support;
  ConstraintKind kind = ConstraintKind::greater_equal;
  BigInt rhs;
};

// The polytope cut out by one inequality per proper saturated set and one
// equality for the carrier. Coordinates follow the carrier's atom order.
struct HalfSpaceSystem {
  std::vector<LinearConstraint> inequalities;
  LinearConstraint equality;
};

HalfSpaceSystem hrep(const Hypergraph& h);

// Coordinates indexed by the carrier atoms in label order.
using RationalPoint = std::vector<Rational>;

// The point where the sets spanned below each node are tight. Throws
// VerificationError if some other saturated set is tight or violated.
RationalPoint vertex_of_construction(const Hypergraph& h, const Construct& v);

// Vertices of the face matching t.
std::vector<RationalPoint> face_vertex_set(const Hypergraph& h, const Construct& t);

// Face counts indexed by dimension, dimension |H| minus node count.
std::vector<std::size_t> f_vector(const Hypergraph& h, const Limits& limits = {});

struct IsomorphismReport {
  std::size_t constructs = 0;
  std::size_t vertices = 0;
  std::size_t facets = 0;
  std::size_t dimension = 0;
  // Failure class name to up to ten witnesses.
  std::map<std::string, std::vector<std::string>> failures;
  bool passed() const { return failures.empty(); }
};

// Checks that the face lattice of the realization matches the construct
// order: order against vertex-set inclusion, injectivity, simplicity,
// dimension, facet count, and closure of the vertex set under edge walks.
IsomorphismReport verify_isomorphism(const Hypergraph& h, const Limits& limits = {});

std::string format_constraint(const Hypergraph& h, const LinearConstraint& c);
std::string hrep_text(const Hypergraph& h, const HalfSpaceSystem& s);
std::string hrep_json(const Hypergraph& h, const HalfSpaceSystem& s);
std::string vertices_json(const Hypergraph& h, const std::vector<Construct>& constructions);

}  // namespace hyperpoly
