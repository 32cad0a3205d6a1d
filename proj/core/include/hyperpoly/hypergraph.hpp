#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/atom_set.hpp"

namespace hyperpoly {

// Atom labels shared by a hypergraph and everything restricted from it.
class Universe {
 public:
  explicit Universe(std::vector<std::string> sorted_labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(unsigned index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<unsigned> index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

// A finite atomic hypergraph. Hyperedges are kept sorted and deduplicated;
// every singleton of the carrier is a hyperedge.
class Hypergraph {
 public:
  // The empty hypergraph.
  Hypergraph();

  // Labels are sorted into canonical order. Missing singletons are rejected
  // unless `atomize` is set, in which case they are added.
  static Hypergraph from_labels(std::vector<std::string> carrier,
                                const std::vector<std::vector<std::string>>& hyperedges,
                                bool atomize = false);

  // Same universe, given carrier and hyperedges. Used by restriction and by
  // constructions that already work in bitmask form.
  static Hypergraph from_sets(std::shared_ptr<const Universe> universe, AtomSet carrier,
                              std::vector<AtomSet> hyperedges, bool atomize = false);

  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const { return universe_; }
  AtomSet carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  std::span<const AtomSet> hyperedges() const { return edges_; }

  const std::string& label(unsigned index) const { return universe_->label(index); }
  std::vector<std::string> labels(AtomSet s) const;
  // Throws InputError on a label outside the carrier.
  unsigned atom(std::string_view label) const;
  AtomSet atoms(std::span<const std::string> labels) const;
  AtomSet atoms(std::initializer_list<std::string_view> labels) const;

  // Whether the restriction to x is connected. False on the empty set.
  bool connected(AtomSet x) const;
  // Connected components of the restriction to x, ordered by least atom.
  std::vector<AtomSet> components_of(AtomSet x) const;

  bool operator==(const Hypergraph& other) const;

 private:
  Hypergraph(std::shared_ptr<const Universe> universe, AtomSet carrier, std::vector<AtomSet> edges);

  std::shared_ptr<const Universe> universe_;
  AtomSet carrier_;
  std::vector<AtomSet> edges_;
};

// Hyperedges contained in x, over carrier x.
Hypergraph restrict(const Hypergraph& h, AtomSet x);
bool is_connected(const Hypergraph& h);
// Components of the restriction to carrier minus removed.
std::vector<AtomSet> components(const Hypergraph& h, AtomSet removed);
// All connected non-empty subsets of the carrier, as a hypergraph.
Hypergraph saturate(const Hypergraph& h);
std::vector<AtomSet> saturated_sets(const Hypergraph& h);

// For y a subset of x: each component of h minus y, mapped to the components
// of h minus x that it contains.
std::map<AtomSet, std::vector<AtomSet>> quasi_partition_refine(const Hypergraph& h, AtomSet y, AtomSet x);

// "{x,y}" with labels in canonical order; a singleton prints bare when `bare_singleton`.
std::string format_set(const Hypergraph& h, AtomSet s, bool bare_singleton = false);

}  // namespace hyperpoly
