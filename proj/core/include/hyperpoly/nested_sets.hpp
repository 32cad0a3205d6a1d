#pragma once

#include <optional>
#include <vector>

#include "hyperpoly/construct.hpp"

namespace hyperpoly {

// A family of subsets of the carrier, sorted and without repeats.
struct NestedSet {
  std::vector<AtomSet> members;

  static NestedSet from(std::vector<AtomSet> sets);
  bool contains(AtomSet s) const;
  friend bool operator==(const NestedSet&, const NestedSet&) = default;
};

// The sets spanned below each node.
NestedSet psi(const Construct& t);

// Rebuilds the construct from its family: parent links follow the inclusion
// Hasse diagram and each node keeps what its children do not cover.
// Throws InputError naming the failed condition and a witness.
Construct unpsi(const Hypergraph& h, const NestedSet& family);

struct FamilyReport {
  bool contains_carrier = false;
  // Every member is non-empty and connected.
  bool connected_members = false;
  std::optional<AtomSet> disconnected_member;
  // Every antichain of two or more members has a disconnected union.
  bool antichain_condition = false;
  // A smallest antichain with connected union, when one exists.
  std::vector<AtomSet> antichain_witness;
  // The same, restricted to two-element antichains.
  bool pair_condition = false;
};

FamilyReport check_family(const Hypergraph& h, const NestedSet& family);

struct TubingReport {
  // Intersecting members are nested.
  bool nested_or_disjoint = false;
  // Disjoint members have a disconnected union.
  bool disjoint_disconnected = false;
  bool tubing() const { return nested_or_disjoint && disjoint_disconnected; }
  bool antichain_condition = false;
  bool pair_condition = false;
  std::vector<AtomSet> antichain_witness;
  // The pairwise conditions are only equivalent to the antichain condition
  // on graphs.
  bool has_large_hyperedge = false;
};

TubingReport check_tubing_conditions(const Hypergraph& h, const NestedSet& family);

enum class TreeCharacterization {
  inductive,        // the recursive definition
  local_antichain,  // disjoint cover, connected subtrees, disconnected sibling unions
  global_antichain  // disjoint cover, connected subtrees, disconnected antichain unions
};

bool check_tree_characterization(const Hypergraph& h, const Tree& raw, TreeCharacterization variant);

}  // namespace hyperpoly
