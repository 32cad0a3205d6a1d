#pragma once

#include <string>

#include "hyperpoly/nested_sets.hpp"
#include "hyperpoly/operadic.hpp"
#include "hyperpoly/truncation.hpp"

namespace hyperpoly {

inline constexpr int kFormatVersion = 1;

std::string read_file(const std::string& path);

// {"format":1,"carrier":[...],"hyperedges":[[...],...]}
Hypergraph hypergraph_from_json(const std::string& text, bool atomize = false);
std::string hypergraph_to_json(const Hypergraph& h);

// {"format":1,"family":[[...],...]}, or a bare list of label lists.
NestedSet nested_set_from_json(const Hypergraph& h, const std::string& text);

// {"label":"a","children":[...]}; a child may name its parent edge with "edge".
OperadicTree operadic_tree_from_json(const std::string& text);
std::string operadic_tree_to_json(const OperadicTree& t);

// Facets as {"x":2,"y":1}; vertex hyperedges and traces by facet name.
RoundState round_state_from_json(const std::string& text);
std::string round_state_to_json(const RoundState& s);

}  // namespace hyperpoly
