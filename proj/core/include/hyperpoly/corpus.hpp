#pragma once

#include <string>
#include <vector>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/hypergraph.hpp"

namespace hyperpoly {

struct NamedHypergraph {
  std::string name;
  Hypergraph h;
};

// Connected atomic hypergraphs on `atoms` atoms labelled a, b, c, ...; one
// per isomorphism class of the family of non-singleton hyperedges.
std::vector<Hypergraph> connected_hypergraphs(std::size_t atoms);

// Familiar polytopes: simplices, associahedra, cyclohedra, permutohedra,
// stellohedra and the hemiassociahedron, in three and four dimensions.
std::vector<NamedHypergraph> named_examples();

struct CorpusReport {
  std::size_t hypergraphs = 0;
  std::size_t constructs = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Runs every structural cross-check over the exhaustive corpus up to
// `max_atoms` atoms plus the named examples.
CorpusReport verify_corpus(std::size_t max_atoms = 4, const Limits& limits = {});

}  // namespace hyperpoly
