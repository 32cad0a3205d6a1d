#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/atom_set.hpp"
#include "hyperpoly/hypergraph.hpp"

namespace hyperpoly {

// A rooted tree decorated by atom sets. No invariants are assumed; a raw
// tree becomes a Construct only through validation.
struct Tree {
  AtomSet label;
  std::vector<Tree> children;

  // Union of all decorations below and including this node.
  AtomSet span() const;
  std::size_t node_count() const;
  // Sorts children by span, recursively.
  void canonicalize();

  friend bool operator==(const Tree& a, const Tree& b);
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
};

// A construct of a connected hypergraph: children of a node decorated Y
// inside a connected set X are constructs of the components of X minus Y.
// Children are kept sorted by the least atom they span.
class Construct {
 public:
  // For trees already known to be valid and canonical. Library code uses
  // this after building trees by a correct-by-construction recursion.
  static Construct assume_valid(Tree tree) { return Construct(std::move(tree)); }

  const Tree& tree() const { return tree_; }
  AtomSet root_label() const { return tree_.label; }
  AtomSet span() const { return tree_.span(); }
  std::size_t node_count() const { return tree_.node_count(); }
  // All decorations are singletons.
  bool is_construction() const;

  friend bool operator==(const Construct& a, const Construct& b) { return a.tree_ == b.tree_; }
  friend std::strong_ordering operator<=>(const Construct& a, const Construct& b) { return a.tree_ <=> b.tree_; }

 private:
  explicit Construct(Tree tree) : tree_(std::move(tree)) {}
  Tree tree_;
};

// The one-node construct decorated by the whole carrier.
Construct top_construct(const Hypergraph& h);

// Checks a raw tree against the inductive definition over the carrier of h.
// Throws InputError naming the offending node and the reason.
Construct validate_construct(const Hypergraph& h, Tree raw);

// Text syntax: "{x,y}(z)", "x(y(z))", "y(x,z)". Braces around singletons are
// optional and whitespace is ignored. "{}(T)" reads as T.
Tree parse_tree(const Hypergraph& h, std::string_view text);
Construct parse_construct(const Hypergraph& h, std::string_view text);
std::string to_string(const Hypergraph& h, const Tree& t);
std::string to_string(const Hypergraph& h, const Construct& c);

// A construct with leaves Omega_X standing for unexpanded components.
struct PartialConstruct {
  AtomSet label;
  bool omega = false;
  std::vector<PartialConstruct> children;

  friend bool operator==(const PartialConstruct& a, const PartialConstruct& b);
  friend std::strong_ordering operator<=>(const PartialConstruct& a, const PartialConstruct& b);
};

PartialConstruct omega_leaf(AtomSet x);
// Union of the non-Omega decorations.
AtomSet span(const PartialConstruct& p);
// Union of all decorations, Omega leaves included.
AtomSet full_span(const PartialConstruct& p);
// Throws InputError if p is not a partial construct of h.
void validate_partial(const Hypergraph& h, const PartialConstruct& p);
std::string to_string(const Hypergraph& h, const PartialConstruct& p);
PartialConstruct to_partial(const Tree& t);
// Fails with InputError if any Omega leaf remains.
Tree to_tree(const PartialConstruct& p);

}  // namespace hyperpoly

template <>
struct std::hash<hyperpoly::Tree> {
  std::size_t operator()(const hyperpoly::Tree& t) const noexcept;
};
template <>
struct std::hash<hyperpoly::Construct> {
  std::size_t operator()(const hyperpoly::Construct& c) const noexcept { return std::hash<hyperpoly::Tree>{}(c.tree()); }
};
