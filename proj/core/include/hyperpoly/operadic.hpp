#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/construct.hpp"
#include "hyperpoly/errors.hpp"

namespace hyperpoly {

// A rooted tree with labelled nodes. Node 0 is the root; nodes are stored in
// preorder. Each non-root node also names the edge to its parent, by default
// with its own label.
class OperadicTree {
 public:
  struct NodeSpec {
    std::string label;
    std::string edge;  // empty means: use the label
    std::vector<NodeSpec> children;
  };

  static OperadicTree from_spec(const NodeSpec& root);
  // "a(b(c,d),e)"; an edge name may follow a label as "c:x".
  static OperadicTree parse(std::string_view text);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(int node) const { return labels_.at(static_cast<std::size_t>(node)); }
  const std::string& edge_name(int node) const { return edge_names_.at(static_cast<std::size_t>(node)); }
  int parent(int node) const { return parents_.at(static_cast<std::size_t>(node)); }
  const std::vector<int>& children(int node) const { return children_.at(static_cast<std::size_t>(node)); }
  unsigned depth(int node) const { return depths_.at(static_cast<std::size_t>(node)); }
  std::optional<int> node(std::string_view label) const;
  // Whether a lies on the path from the root to b, a == b included.
  bool is_ancestor(int a, int b) const;
  NodeSpec spec() const;
  std::string to_string() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> edge_names_;
  std::vector<int> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<unsigned> depths_;
};

// The graph whose vertices are the tree's edges: stacked edges are joined by
// a solid link, sibling edges by a dashed link.
class EdgeGraph {
 public:
  explicit EdgeGraph(OperadicTree tree);

  const OperadicTree& tree() const { return tree_; }
  const Hypergraph& graph() const { return graph_; }
  // Child endpoint of the tree edge behind an atom.
  int node_of(unsigned atom) const { return node_of_atom_.at(atom); }
  unsigned atom_of(int node) const;
  // Depth of the child endpoint; edges at the root have level 1.
  unsigned level(unsigned atom) const { return tree_.depth(node_of(atom)); }
  bool solid(unsigned a, unsigned b) const;
  bool dashed(unsigned a, unsigned b) const;
  bool adjacent(unsigned a, unsigned b) const { return solid(a, b) || dashed(a, b); }
  // Atoms whose tree edges have both endpoints in `nodes`.
  AtomSet atoms_within(const std::vector<int>& nodes) const;

 private:
  OperadicTree tree_;
  Hypergraph graph_;
  std::vector<int> node_of_atom_;
};

enum class PathShape {
  stacked,  // monotone chain of solid links
  bent,     // solid links down, one dashed link, solid links up
  other
};

struct MinPath {
  std::vector<unsigned> vertices;
  PathShape shape = PathShape::other;
};

PathShape classify_path(const EdgeGraph& g, const std::vector<unsigned>& path);
// Applies the four local rewriting rules until none applies.
MinPath normalize_path(const EdgeGraph& g, std::vector<unsigned> path);
// The shortest path, by breadth-first search.
MinPath min_path(const EdgeGraph& g, unsigned from, unsigned to);

enum class EdgeKind { beta, theta };

// An edge of the polytope, given by a construct with one two-atom node.
// Beta edges are oriented from `from` to `to`; theta edges are unoriented and
// their endpoints are listed in construct order.
struct EdgeClassification {
  Construct edge;
  EdgeKind kind;
  Construct from;
  Construct to;
};

EdgeClassification classify_edge(const EdgeGraph& g, const Construct& edge);

struct Skeleton {
  std::vector<Construct> vertices;
  std::vector<EdgeClassification> edges;
};

Skeleton skeleton(const EdgeGraph& g, const Limits& limits = {});

// Parenthesised words over the tree's nodes: a letter, or (w1 w2) where w1
// holds the parent endpoint of the tree edge joining the two halves.
struct DecompositionWord {
  int letter = -1;
  std::vector<DecompositionWord> parts;

  friend bool operator==(const DecompositionWord&, const DecompositionWord&) = default;
};

// Outermost parentheses are dropped.
std::string to_string(const OperadicTree& t, const DecompositionWord& w);
DecompositionWord parse_word(const OperadicTree& t, std::string_view text);
DecompositionWord construction_to_word(const EdgeGraph& g, const Construct& v);
Construct word_to_construction(const EdgeGraph& g, const DecompositionWord& w);
// Number of decompositions by the edge-splitting recurrence.
std::size_t count_decompositions(const OperadicTree& t);

// The tree nodes touched by a connected set of atoms; they form a subtree.
std::vector<int> subtree_of_component(const EdgeGraph& g, AtomSet component);

struct EdgeRemovalCensus {
  std::vector<std::vector<int>> subtrees;
  std::size_t non_empty = 0;
  std::vector<AtomSet> graph_components;
  bool consistent = false;
};

EdgeRemovalCensus edge_removal_census(const EdgeGraph& g, AtomSet removed);

// Rooted unlabelled trees with `nodes` nodes, one per isomorphism class,
// labelled a, b, c, ... in preorder.
std::vector<OperadicTree> rooted_trees(std::size_t nodes);

std::string edge_graph_dot(const EdgeGraph& g);
std::string skeleton_dot(const EdgeGraph& g, const Skeleton& s);

}  // namespace hyperpoly
