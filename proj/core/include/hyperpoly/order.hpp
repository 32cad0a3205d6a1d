#pragma once

#include <set>
#include <vector>

#include "hyperpoly/construct.hpp"

namespace hyperpoly {

enum class OrderVariant {
  rules,      // closure of single-edge contractions
  recursive,  // componentwise recursion over the children
  grafting,   // grafting of constructs into a partial construct
};

// All constructs obtained from s by contracting one parent-child edge into
// a single node decorated by the union. These are the covers of s.
std::vector<Construct> covers(const Construct& s);

// Constructs reachable from s by contractions, s included.
std::set<Construct> upset_by_contraction(const Construct& s);

// s <= t in the face order. Throws InputError unless both span the carrier of h.
bool leq(const Hypergraph& h, const Construct& s, const Construct& t, OrderVariant variant = OrderVariant::recursive);

// Normal forms of the rewriting system started from Omega_carrier that
// expands atoms of x: exactly the partial constructions spanning x.
std::vector<PartialConstruct> spanning_partial_constructions(const Hypergraph& h, AtomSet x);

// One rewriting step expanding atom `atom` of the target. Throws InputError
// if the atom is already spanned or lies outside every Omega leaf.
PartialConstruct rewrite_step(const Hypergraph& h, const PartialConstruct& p, unsigned atom);

// Constructions below t, obtained by expanding every node of t into a
// partial construction spanning its decoration and grafting.
std::vector<Construct> vertices_below(const Hypergraph& h, const Construct& t);

}  // namespace hyperpoly
