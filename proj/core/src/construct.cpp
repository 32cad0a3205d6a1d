#include "hyperpoly/construct.hpp"

#include <algorithm>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

AtomSet Tree::span() const {
  AtomSet s = label;
  for (const auto& c : children) s |= c.span();
  return s;
}

std::size_t Tree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

void Tree::canonicalize() {
  for (auto& c : children) c.canonicalize();
  std::sort(children.begin(), children.end(),
            [](const Tree& a, const Tree& b) { return a.span() < b.span(); });
}

bool operator==(const Tree& a, const Tree& b) {
  return a.label == b.label && a.children == b.children;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.label <=> b.label; c != 0) return c;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

bool Construct::is_construction() const {
  std::vector<const Tree*> stack{&tree_};
  while (!stack.empty()) {
    const Tree* t = stack.back();
    stack.pop_back();
    if (!t->label.singleton()) return false;
    for (const auto& c : t->children) stack.push_back(&c);
  }
  return true;
}

Construct top_construct(const Hypergraph& h) { return Construct::assume_valid(Tree{h.carrier(), {}}); }

namespace {

void collect_labels(const Tree& t, std::vector<AtomSet>& out) {
  out.push_back(t.label);
  for (const auto& c : t.children) collect_labels(c, out);
}

void validate_node(const Hypergraph& h, const Tree& t, AtomSet x) {
  auto fail = [&](const std::string& why) {
    throw InputError("invalid construct at node " + to_string(h, t) + ": " + why);
  };
  if (t.label.empty()) fail("empty decoration");
  if (!t.label.subset_of(x)) fail("decoration leaves the enclosing component " + format_set(h, x));
  const auto comps = h.components_of(x - t.label);
  std::vector<AtomSet> spans;
  for (const auto& c : t.children) spans.push_back(c.span());
  for (AtomSet s : spans) {
    if (std::find(comps.begin(), comps.end(), s) == comps.end()) {
      fail("child spans " + format_set(h, s) + ", which is not a component");
    }
  }
  for (AtomSet k : comps) {
    if (std::count(spans.begin(), spans.end(), k) != 1) {
      fail("component " + format_set(h, k) + " is not spanned by exactly one child");
    }
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) validate_node(h, t.children[i], spans[i]);
}

}  // namespace

Construct validate_construct(const Hypergraph& h, Tree raw) {
  if (!is_connected(h)) throw InputError("hypergraph is not connected");
  std::vector<AtomSet> labels;
  collect_labels(raw, labels);
  AtomSet seen;
  for (AtomSet l : labels) {
    if (l.intersects(seen)) throw InputError("decorations overlap on " + format_set(h, l & seen));
    seen |= l;
  }
  if (seen != h.carrier()) throw InputError("decorations do not cover the carrier; missing " + format_set(h, h.carrier() - seen));
  validate_node(h, raw, h.carrier());
  raw.canonicalize();
  return Construct::assume_valid(std::move(raw));
}

bool operator==(const PartialConstruct& a, const PartialConstruct& b) {
  return a.label == b.label && a.omega == b.omega && a.children == b.children;
}

std::strong_ordering operator<=>(const PartialConstruct& a, const PartialConstruct& b) {
  if (auto c = a.omega <=> b.omega; c != 0) return c;
  if (auto c = a.label <=> b.label; c != 0) return c;
  const std::size_t n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

PartialConstruct omega_leaf(AtomSet x) { return PartialConstruct{x, true, {}}; }

AtomSet span(const PartialConstruct& p) {
  if (p.omega) return {};
  AtomSet s = p.label;
  for (const auto& c : p.children) s |= span(c);
  return s;
}

AtomSet full_span(const PartialConstruct& p) {
  AtomSet s = p.label;
  for (const auto& c : p.children) s |= full_span(c);
  return s;
}

namespace {

void validate_partial_node(const Hypergraph& h, const PartialConstruct& p, AtomSet x) {
  auto fail = [&](const std::string& why) {
    throw InputError("invalid partial construct at node " + to_string(h, p) + ": " + why);
  };
  if (p.omega) {
    if (!p.children.empty()) fail("Omega leaf with children");
    if (p.label != x) fail("Omega leaf does not carry its component");
    return;
  }
  if (p.label.empty() || !p.label.subset_of(x)) fail("decoration leaves the enclosing component");
  const auto comps = h.components_of(x - p.label);
  if (comps.size() != p.children.size()) fail("wrong number of children");
  std::vector<bool> used(comps.size(), false);
  for (const auto& c : p.children) {
    const AtomSet s = full_span(c);
    auto it = std::find(comps.begin(), comps.end(), s);
    if (it == comps.end() || used[it - comps.begin()]) fail("child does not span a distinct component");
    used[it - comps.begin()] = true;
    validate_partial_node(h, c, s);
  }
}

}  // namespace

void validate_partial(const Hypergraph& h, const PartialConstruct& p) {
  validate_partial_node(h, p, h.carrier());
}

PartialConstruct to_partial(const Tree& t) {
  PartialConstruct p{t.label, false, {}};
  for (const auto& c : t.children) p.children.push_back(to_partial(c));
  return p;
}

Tree to_tree(const PartialConstruct& p) {
  if (p.omega) throw InputError("partial construct still has an Omega leaf");
  Tree t{p.label, {}};
  for (const auto& c : p.children) t.children.push_back(to_tree(c));
  return t;
}

}  // namespace hyperpoly

std::size_t std::hash<hyperpoly::Tree>::operator()(const hyperpoly::Tree& t) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(t.label.bits() * 0x9E3779B97F4A7C15ULL + t.children.size());
  for (const auto& c : t.children) h = h * 1000003U ^ (*this)(c);
  return h;
}
