#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperpoly/construct.hpp"
#include "hyperpoly/errors.hpp"

namespace hyperpoly {

// A finite multiset over an ordered base: counts[i] copies of base[i].
struct Multiset {
  std::vector<unsigned> counts;

  bool empty() const;
  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;
};

// Formal sum in base order, e.g. "2x+y".
std::string to_string(const std::vector<std::string>& base, const Multiset& m);
Multiset parse_multiset(const std::vector<std::string>& base, std::string_view text);
Multiset unit(std::size_t base_size, std::size_t element);
// Pointwise sum. Throws InputError on an empty family.
Multiset mu_sigma(const std::vector<Multiset>& family);

// One round of truncation: the facets, the vertex hypergraph over them, and
// the traces of earlier rounds. Facets are sorted by print name, which is the
// atom order of every hypergraph over them.
struct RoundState {
  struct Trace {
    std::vector<std::string> facets;
    std::vector<std::vector<std::string>> vertex_hypergraph;
    std::vector<std::vector<std::string>> truncation_hypergraph;
  };

  std::vector<std::string> base;
  std::vector<Multiset> facets;
  std::vector<AtomSet> vertex_hypergraph;
  std::vector<Trace> trace;

  std::vector<std::string> facet_names() const;
  std::string name(AtomSet facet_set) const;
  // Throws InputError unless every facet lies in some vertex hyperedge.
  void check_property_p() const;
};

RoundState make_state(std::vector<std::string> base, std::vector<Multiset> facets,
                      std::vector<std::vector<Multiset>> vertex_hypergraph);
// The simplex: singleton facets, vertices opposite each facet.
RoundState simplex_round(std::vector<std::string> base);

// Checks that the truncation hypergraph is atomic, connected and over the
// state's facets, and returns it re-indexed to the facet order.
Hypergraph truncation_hypergraph(const RoundState& s, const Hypergraph& ht);

bool is_tamed(const RoundState& s, const Hypergraph& ht, const Construct& c);
// Constructs whose root contains the complement of a vertex hyperedge.
std::vector<Construct> tamed_constructs(const RoundState& s, const Hypergraph& ht, const Limits& limits = {});
// Constructions whose root is exactly such a complement.
std::vector<Construct> tamed_constructions(const RoundState& s, const Hypergraph& ht, const Limits& limits = {});
// Tamed constructions below a tamed construct.
std::vector<Construct> tamed_vertices_below(const RoundState& s, const Hypergraph& ht, const Construct& c,
                                            const Limits& limits = {});

struct RoundReport {
  RoundState next;
  std::size_t tamed_constructs = 0;
  std::vector<std::string> constrs;
  std::vector<std::string> constructions;
  // Distinct constructions mapped to the same vertex hyperedge.
  std::vector<std::string> coincidences;
};

// Builds the next round. Throws VerificationError if the flattening is not
// injective where applied, if a facet is lost, or if property (P) fails.
RoundReport next_round(const RoundState& s, const Hypergraph& ht, const Limits& limits = {});

}  // namespace hyperpoly
