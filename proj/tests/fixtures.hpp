#pragma once

#include <string>
#include <vector>

#include "hyperpoly/construct.hpp"
#include "hyperpoly/hypergraph.hpp"

namespace fixtures {

using hyperpoly::Hypergraph;

// Singletons are added.
inline Hypergraph make(std::vector<std::string> carrier, const std::vector<std::vector<std::string>>& edges) {
  return Hypergraph::from_labels(std::move(carrier), edges, true);
}

inline Hypergraph pentagon() { return make({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}); }
inline Hypergraph simplex(std::vector<std::string> atoms) {
  std::vector<std::vector<std::string>> edges{atoms};
  return make(std::move(atoms), edges);
}
inline Hypergraph complete_graph(std::vector<std::string> atoms) {
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) edges.push_back({atoms[i], atoms[j]});
  }
  return make(std::move(atoms), edges);
}
inline Hypergraph path(std::vector<std::string> atoms) {
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) edges.push_back({atoms[i], atoms[i + 1]});
  return make(std::move(atoms), edges);
}

inline std::vector<std::string> strings(const Hypergraph& h, const std::vector<hyperpoly::Construct>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(hyperpoly::to_string(h, c));
  return out;
}

}  // namespace fixtures
