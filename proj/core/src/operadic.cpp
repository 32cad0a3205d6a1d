#include "hyperpoly/operadic.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/order.hpp"

namespace hyperpoly {

OperadicTree OperadicTree::from_spec(const NodeSpec& root) {
  OperadicTree t;
  std::function<void(const NodeSpec&, int, unsigned)> add = [&](const NodeSpec& s, int parent, unsigned depth) {
    if (s.label.empty()) throw InputError("tree node without a label");
    const int id = static_cast<int>(t.labels_.size());
    t.labels_.push_back(s.label);
    t.edge_names_.push_back(parent < 0 ? std::string{} : (s.edge.empty() ? s.label : s.edge));
    t.parents_.push_back(parent);
    t.children_.emplace_back();
    t.depths_.push_back(depth);
    if (parent >= 0) t.children_[static_cast<std::size_t>(parent)].push_back(id);
    for (const auto& c : s.children) add(c, id, depth + 1);
  };
  add(root, -1, 0);
  std::set<std::string> labels(t.labels_.begin(), t.labels_.end());
  if (labels.size() != t.labels_.size()) throw InputError("tree node labels must be distinct");
  std::set<std::string> edges(t.edge_names_.begin() + 1, t.edge_names_.end());
  if (edges.size() + 1 != t.edge_names_.size()) throw InputError("tree edge names must be distinct");
  return t;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  OperadicTree::NodeSpec parse() {
    auto n = node();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("tree syntax error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' || c == ':') break;
      ++pos_;
    }
    if (start == pos_) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }
  OperadicTree::NodeSpec node() {
    OperadicTree::NodeSpec n;
    n.label = name();
    if (accept(':')) n.edge = name();
    if (accept('(')) {
      do {
        n.children.push_back(node());
      } while (accept(','));
      if (!accept(')')) fail("expected ')'");
    }
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OperadicTree OperadicTree::parse(std::string_view text) { return from_spec(SpecParser(text).parse()); }

std::optional<int> OperadicTree::node(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool OperadicTree::is_ancestor(int a, int b) const {
  for (int n = b; n >= 0; n = parent(n)) {
    if (n == a) return true;
  }
  return false;
}

OperadicTree::NodeSpec OperadicTree::spec() const {
  std::function<NodeSpec(int)> build = [&](int n) {
    NodeSpec s{label(n), n == 0 || edge_name(n) == label(n) ? std::string{} : edge_name(n), {}};
    for (int c : children(n)) s.children.push_back(build(c));
    return s;
  };
  return build(0);
}

std::string OperadicTree::to_string() const {
  std::function<std::string(int)> print = [&](int n) {
    std::string out = label(n);
    if (n != 0 && edge_name(n) != label(n)) out += ":" + edge_name(n);
    if (!children(n).empty()) {
      out += "(";
      for (std::size_t i = 0; i < children(n).size(); ++i) {
        if (i) out += ",";
        out += print(children(n)[i]);
      }
      out += ")";
    }
    return out;
  };
  return print(0);
}

namespace {

Hypergraph edge_hypergraph(const OperadicTree& t) {
  if (t.size() < 2) throw InputError("a single-node tree has no edges");
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> links;
  for (int n = 1; n < static_cast<int>(t.size()); ++n) {
    names.push_back(t.edge_name(n));
    links.push_back({t.edge_name(n)});
    for (int c : t.children(n)) links.push_back({t.edge_name(n), t.edge_name(c)});
  }
  for (int n = 0; n < static_cast<int>(t.size()); ++n) {
    const auto& kids = t.children(n);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) links.push_back({t.edge_name(kids[i]), t.edge_name(kids[j])});
    }
  }
  return Hypergraph::from_labels(std::move(names), links);
}

}  // namespace

EdgeGraph::EdgeGraph(OperadicTree tree) : tree_(std::move(tree)), graph_(edge_hypergraph(tree_)) {
  node_of_atom_.assign(graph_.universe().size(), -1);
  for (int n = 1; n < static_cast<int>(tree_.size()); ++n) node_of_atom_[graph_.atom(tree_.edge_name(n))] = n;
}

unsigned EdgeGraph::atom_of(int node) const {
  if (node <= 0) throw InputError("the root has no parent edge");
  return graph_.atom(tree_.edge_name(node));
}

bool EdgeGraph::solid(unsigned a, unsigned b) const {
  const int x = node_of(a);
  const int y = node_of(b);
  return tree_.parent(x) == y || tree_.parent(y) == x;
}

bool EdgeGraph::dashed(unsigned a, unsigned b) const {
  const int x = node_of(a);
  const int y = node_of(b);
  return x != y && tree_.parent(x) == tree_.parent(y);
}

AtomSet EdgeGraph::atoms_within(const std::vector<int>& nodes) const {
  AtomSet s;
  for (int n : nodes) {
    if (n == 0) continue;
    if (std::find(nodes.begin(), nodes.end(), tree_.parent(n)) != nodes.end()) s |= AtomSet::single(atom_of(n));
  }
  return s;
}

namespace {

enum class Step { up, down, across, none };

// "down" moves to a lower level, towards the root.
Step step(const EdgeGraph& g, unsigned a, unsigned b) {
  if (g.dashed(a, b)) return Step::across;
  if (g.solid(a, b)) return g.level(b) < g.level(a) ? Step::down : Step::up;
  return Step::none;
}

}  // namespace

PathShape classify_path(const EdgeGraph& g, const std::vector<unsigned>& path) {
  std::size_t i = 0;
  const std::size_t steps = path.empty() ? 0 : path.size() - 1;
  std::vector<Step> s;
  for (std::size_t k = 0; k < steps; ++k) s.push_back(step(g, path[k], path[k + 1]));
  if (std::find(s.begin(), s.end(), Step::none) != s.end()) return PathShape::other;
  while (i < s.size() && s[i] == Step::down) ++i;
  const std::size_t downs = i;
  bool across = false;
  if (i < s.size() && s[i] == Step::across) {
    across = true;
    ++i;
  }
  const std::size_t ups_from = i;
  while (i < s.size() && s[i] == Step::up) ++i;
  if (i != s.size()) return PathShape::other;
  if (across) return PathShape::bent;
  const bool only_down = ups_from == s.size();
  const bool only_up = downs == 0;
  return (only_down || only_up) ? PathShape::stacked : PathShape::other;
}

MinPath normalize_path(const EdgeGraph& g, std::vector<unsigned> path) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!g.adjacent(path[k], path[k + 1])) throw InputError("not a path in the edge graph");
  }
  std::size_t i = 0;
  while (i + 2 < path.size()) {
    const Step a = step(g, path[i], path[i + 1]);
    const Step b = step(g, path[i + 1], path[i + 2]);
    const bool fires = (a == Step::across && b == Step::across) || (a == Step::down && b == Step::up) ||
                       (a == Step::across && b == Step::down) || (a == Step::up && b == Step::across);
    if (fires) {
      path.erase(path.begin() + static_cast<std::ptrdiff_t>(i + 1));
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return MinPath{path, classify_path(g, path)};
}

MinPath min_path(const EdgeGraph& g, unsigned from, unsigned to) {
  const AtomSet carrier = g.graph().carrier();
  if (!carrier.contains(from) || !carrier.contains(to)) throw InputError("path endpoints outside the edge graph");
  std::map<unsigned, unsigned> prev;
  std::deque<unsigned> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    const unsigned a = queue.front();
    queue.pop_front();
    if (a == to) break;
    for (unsigned b : carrier) {
      if (!prev.contains(b) && g.adjacent(a, b)) {
        prev[b] = a;
        queue.push_back(b);
      }
    }
  }
  if (!prev.contains(to)) throw InputError("edge graph is disconnected");
  std::vector<unsigned> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return MinPath{path, classify_path(g, path)};
}

namespace {

const Tree* node_holding(const Tree& t, unsigned atom) {
  if (t.label.contains(atom)) return &t;
  for (const auto& c : t.children) {
    if (c.span().contains(atom)) return node_holding(c, atom);
  }
  return nullptr;
}

}  // namespace

EdgeClassification classify_edge(const EdgeGraph& g, const Construct& edge) {
  const Hypergraph& h = g.graph();
  std::optional<AtomSet> pair;
  std::function<void(const Tree&)> scan = [&](const Tree& t) {
    if (t.label.size() == 2) {
      if (pair) throw InputError("edge construct has more than one two-atom node");
      pair = t.label;
    } else if (t.label.size() > 2) {
      throw InputError("edge construct has a node with more than two atoms");
    }
    for (const auto& c : t.children) scan(c);
  };
  scan(edge.tree());
  if (!pair) throw InputError("edge construct has no two-atom node");
  const auto ends = vertices_below(h, edge);
  if (ends.size() != 2) throw VerificationError("edge " + to_string(h, edge) + " does not have two endpoints");
  unsigned u = pair->least();
  unsigned v = (*pair - AtomSet::single(u)).least();
  const MinPath p = min_path(g, u, v);
  if (p.shape != PathShape::stacked) return EdgeClassification{edge, EdgeKind::theta, ends[0], ends[1]};
  if (g.level(v) < g.level(u)) std::swap(u, v);
  for (std::size_t k = 0; k < 2; ++k) {
    const Tree* n = node_holding(ends[k].tree(), u);
    if (n && n->span().contains(v)) return EdgeClassification{edge, EdgeKind::beta, ends[1 - k], ends[k]};
  }
  throw VerificationError("beta edge " + to_string(h, edge) + " has no oriented endpoint");
}

Skeleton skeleton(const EdgeGraph& g, const Limits& limits) {
  const Hypergraph& h = g.graph();
  Skeleton s;
  for (const auto& c : enumerate_constructs(h, limits)) {
    if (c.is_construction()) {
      s.vertices.push_back(c);
    } else if (c.node_count() + 1 == h.size()) {
      s.edges.push_back(classify_edge(g, c));
    }
  }
  return s;
}

std::vector<OperadicTree> rooted_trees(std::size_t nodes) {
  if (nodes == 0) return {};
  // Structures as canonical strings "(...)" with children sorted.
  struct Shape {
    std::vector<Shape> kids;
    std::string key() const {
      std::vector<std::string> ks;
      for (const auto& k : kids) ks.push_back(k.key());
      std::sort(ks.begin(), ks.end());
      std::string out = "(";
      for (const auto& k : ks) out += k;
      return out + ")";
    }
    void sort_kids() {
      for (auto& k : kids) k.sort_kids();
      std::sort(kids.begin(), kids.end(), [](const Shape& a, const Shape& b) { return a.key() < b.key(); });
    }
  };
  std::map<std::string, Shape> level{{"()", Shape{}}};
  for (std::size_t n = 2; n <= nodes; ++n) {
    std::map<std::string, Shape> next;
    for (const auto& [key, shape] : level) {
      std::size_t count = 0;
      std::function<void(const Shape&)> tally = [&](const Shape& s) {
        ++count;
        for (const auto& k : s.kids) tally(k);
      };
      tally(shape);
      // Hang a new leaf under the i-th node in preorder.
      for (std::size_t i = 0; i < count; ++i) {
        Shape grown = shape;
        std::size_t seen = 0;
        std::function<void(Shape&)> hang = [&](Shape& s) {
          if (seen++ == i) {
            s.kids.push_back(Shape{});
            return;
          }
          for (auto& k : s.kids) hang(k);
        };
        hang(grown);
        grown.sort_kids();
        next.emplace(grown.key(), grown);
      }
    }
    level = std::move(next);
  }
  std::vector<OperadicTree> out;
  for (const auto& [key, shape] : level) {
    char letter = 'a';
    std::function<OperadicTree::NodeSpec(const Shape&)> label = [&](const Shape& s) {
      OperadicTree::NodeSpec n{std::string(1, letter++), {}, {}};
      for (const auto& k : s.kids) n.children.push_back(label(k));
      return n;
    };
    out.push_back(OperadicTree::from_spec(label(shape)));
  }
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string edge_graph_dot(const EdgeGraph& g) {
  const Hypergraph& h = g.graph();
  std::string out = "graph edges {\n";
  for (unsigned a : h.carrier()) {
    const int n = g.node_of(a);
    out += "  " + quoted(h.label(a)) + " [label=" +
           quoted(h.label(a) + " = " + g.tree().label(g.tree().parent(n)) + g.tree().label(n) + ", level " +
                  std::to_string(g.level(a))) +
           "];\n";
  }
  for (unsigned a : h.carrier()) {
    for (unsigned b : h.carrier()) {
      if (b <= a) continue;
      if (g.solid(a, b)) out += "  " + quoted(h.label(a)) + " -- " + quoted(h.label(b)) + " [style=solid];\n";
      if (g.dashed(a, b)) out += "  " + quoted(h.label(a)) + " -- " + quoted(h.label(b)) + " [style=dashed];\n";
    }
  }
  return out + "}\n";
}

std::string skeleton_dot(const EdgeGraph& g, const Skeleton& s) {
  std::map<Construct, std::string> id;
  std::string out = "digraph skeleton {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    id[s.vertices[i]] = "v" + std::to_string(i);
    out += "  v" + std::to_string(i) + " [label=" + quoted(to_string(g.tree(), construction_to_word(g, s.vertices[i]))) +
           "];\n";
  }
  for (const auto& e : s.edges) {
    if (e.kind == EdgeKind::beta) {
      out += "  " + id.at(e.from) + " -> " + id.at(e.to) + " [label=\"beta\"];\n";
    } else {
      out += "  " + id.at(e.from) + " -> " + id.at(e.to) + " [label=\"theta\", style=dashed, dir=none];\n";
    }
  }
  return out + "}\n";
}

}  // namespace hyperpoly
