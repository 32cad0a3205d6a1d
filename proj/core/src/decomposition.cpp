#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "hyperpoly/operadic.hpp"

namespace hyperpoly {

namespace {

void print_word(const OperadicTree& t, const DecompositionWord& w, std::string& out) {
  if (w.parts.empty()) {
    out += t.label(w.letter);
    return;
  }
  out += "(";
  print_word(t, w.parts[0], out);
  print_word(t, w.parts[1], out);
  out += ")";
}

class WordParser {
 public:
  WordParser(const OperadicTree& t, std::string_view text) : t_(t), text_(text) {}

  DecompositionWord parse() {
    DecompositionWord w = sequence();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("word syntax error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  DecompositionWord item() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      DecompositionWord w = sequence();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    // Longest node label starting here.
    int best = -1;
    std::size_t best_len = 0;
    for (int n = 0; n < static_cast<int>(t_.size()); ++n) {
      const std::string& l = t_.label(n);
      if (l.size() > best_len && text_.substr(pos_, l.size()) == l) {
        best = n;
        best_len = l.size();
      }
    }
    if (best < 0) fail("expected a node label");
    pos_ += best_len;
    return DecompositionWord{best, {}};
  }
  DecompositionWord sequence() {
    std::vector<DecompositionWord> items;
    while (true) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      items.push_back(item());
    }
    if (items.size() == 1) return std::move(items.front());
    if (items.size() != 2) fail("every group must hold exactly two parts");
    return DecompositionWord{-1, std::move(items)};
  }

  const OperadicTree& t_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

// The subtree hanging from `top`, restricted to `nodes`.
std::vector<int> hanging(const OperadicTree& t, const std::vector<int>& nodes, int top) {
  std::vector<int> out;
  for (int n : nodes) {
    if (t.is_ancestor(top, n)) out.push_back(n);
  }
  return out;
}

DecompositionWord word_of(const EdgeGraph& g, const std::vector<int>& nodes, const Tree* v) {
  if (nodes.size() == 1) return DecompositionWord{nodes.front(), {}};
  const OperadicTree& t = g.tree();
  const int child = g.node_of(v->label.least());
  std::vector<int> lower = hanging(t, nodes, child);
  std::vector<int> upper;
  for (int n : nodes) {
    if (std::find(lower.begin(), lower.end(), n) == lower.end()) upper.push_back(n);
  }
  auto sub = [&](const std::vector<int>& part) -> const Tree* {
    const AtomSet atoms = g.atoms_within(part);
    if (atoms.empty()) return nullptr;
    for (const auto& c : v->children) {
      if (c.span() == atoms) return &c;
    }
    throw VerificationError("construction child does not match a subtree");
  };
  DecompositionWord w{-1, {}};
  w.parts.push_back(word_of(g, upper, sub(upper)));
  w.parts.push_back(word_of(g, lower, sub(lower)));
  return w;
}

struct Built {
  std::vector<int> nodes;
  std::optional<Tree> tree;
};

Built build(const EdgeGraph& g, const DecompositionWord& w) {
  const OperadicTree& t = g.tree();
  if (w.parts.empty()) {
    if (w.letter < 0 || w.letter >= static_cast<int>(t.size())) throw InputError("word letter outside the tree");
    return Built{{w.letter}, std::nullopt};
  }
  Built upper = build(g, w.parts[0]);
  Built lower = build(g, w.parts[1]);
  for (int n : lower.nodes) {
    if (std::find(upper.nodes.begin(), upper.nodes.end(), n) != upper.nodes.end()) {
      throw InputError("letter " + t.label(n) + " occurs twice");
    }
  }
  // The joining tree edge runs from the top of the lower half up into the upper half.
  int joint = -1;
  int crossings = 0;
  for (int n : lower.nodes) {
    const int p = t.parent(n);
    if (p >= 0 && std::find(upper.nodes.begin(), upper.nodes.end(), p) != upper.nodes.end()) {
      joint = n;
      ++crossings;
    }
  }
  for (int n : upper.nodes) {
    const int p = t.parent(n);
    if (p >= 0 && std::find(lower.nodes.begin(), lower.nodes.end(), p) != lower.nodes.end()) {
      throw InputError("the left half of a group must hold the parent endpoint");
    }
  }
  if (crossings != 1) throw InputError("the two halves of a group must be joined by exactly one tree edge");
  for (int n : lower.nodes) {
    if (n != joint && !t.is_ancestor(joint, n)) throw InputError("the right half of a group must hang from the joining edge");
  }
  Built out;
  out.nodes = upper.nodes;
  out.nodes.insert(out.nodes.end(), lower.nodes.begin(), lower.nodes.end());
  Tree node{AtomSet::single(g.atom_of(joint)), {}};
  if (upper.tree) node.children.push_back(std::move(*upper.tree));
  if (lower.tree) node.children.push_back(std::move(*lower.tree));
  out.tree = std::move(node);
  return out;
}

}  // namespace

std::string to_string(const OperadicTree& t, const DecompositionWord& w) {
  std::string out;
  if (w.parts.empty()) {
    print_word(t, w, out);
    return out;
  }
  print_word(t, w.parts[0], out);
  print_word(t, w.parts[1], out);
  return out;
}

DecompositionWord parse_word(const OperadicTree& t, std::string_view text) { return WordParser(t, text).parse(); }

DecompositionWord construction_to_word(const EdgeGraph& g, const Construct& v) {
  if (!v.is_construction() || v.span() != g.graph().carrier()) throw InputError("not a construction of the edge graph");
  std::vector<int> all(g.tree().size());
  std::iota(all.begin(), all.end(), 0);
  return word_of(g, all, &v.tree());
}

Construct word_to_construction(const EdgeGraph& g, const DecompositionWord& w) {
  Built b = build(g, w);
  if (b.nodes.size() != g.tree().size()) throw InputError("word does not use every node of the tree");
  if (!b.tree) throw InputError("a single letter decomposes a one-node tree only");
  return validate_construct(g.graph(), std::move(*b.tree));
}

std::size_t count_decompositions(const OperadicTree& t) {
  std::vector<int> all(t.size());
  std::iota(all.begin(), all.end(), 0);
  std::function<std::size_t(const std::vector<int>&)> count = [&](const std::vector<int>& nodes) -> std::size_t {
    if (nodes.size() == 1) return 1;
    std::size_t total = 0;
    for (int n : nodes) {
      if (std::find(nodes.begin(), nodes.end(), t.parent(n)) == nodes.end()) continue;
      const auto lower = hanging(t, nodes, n);
      std::vector<int> upper;
      for (int m : nodes) {
        if (std::find(lower.begin(), lower.end(), m) == lower.end()) upper.push_back(m);
      }
      total += count(upper) * count(lower);
    }
    return total;
  };
  return count(all);
}

std::vector<int> subtree_of_component(const EdgeGraph& g, AtomSet component) {
  if (!g.graph().connected(component)) throw InputError("atom set is not connected in the edge graph");
  std::vector<int> nodes;
  for (unsigned a : component) {
    const int c = g.node_of(a);
    for (int n : {g.tree().parent(c), c}) {
      if (std::find(nodes.begin(), nodes.end(), n) == nodes.end()) nodes.push_back(n);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

EdgeRemovalCensus edge_removal_census(const EdgeGraph& g, AtomSet removed) {
  const OperadicTree& t = g.tree();
  const Hypergraph& h = g.graph();
  if (!removed.subset_of(h.carrier())) throw InputError("removed atoms outside the edge graph");
  std::vector<int> root(t.size());
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[static_cast<std::size_t>(x)] == x ? x : root[static_cast<std::size_t>(x)] = find(root[static_cast<std::size_t>(x)]); };
  for (int n = 1; n < static_cast<int>(t.size()); ++n) {
    if (!removed.contains(g.atom_of(n))) root[static_cast<std::size_t>(find(n))] = find(t.parent(n));
  }
  std::map<int, std::vector<int>> groups;
  for (int n = 0; n < static_cast<int>(t.size()); ++n) groups[find(n)].push_back(n);
  EdgeRemovalCensus c;
  for (auto& [r, nodes] : groups) {
    if (nodes.size() > 1) ++c.non_empty;
    c.subtrees.push_back(std::move(nodes));
  }
  std::sort(c.subtrees.begin(), c.subtrees.end());
  c.graph_components = h.components_of(h.carrier() - removed);
  c.consistent = c.subtrees.size() == removed.size() + 1 && c.non_empty == c.graph_components.size();
  if (c.consistent) {
    for (AtomSet k : c.graph_components) {
      const auto nodes = subtree_of_component(g, k);
      if (std::find(c.subtrees.begin(), c.subtrees.end(), nodes) == c.subtrees.end()) c.consistent = false;
    }
  }
  return c;
}

}  // namespace hyperpoly
