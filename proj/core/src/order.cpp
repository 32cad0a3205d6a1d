#include "hyperpoly/order.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

void collect_contractions(const Tree& root, const Tree& node, std::vector<std::size_t>& path, std::vector<Tree>& out) {
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    // Contract the edge from `node` to its i-th child.
    Tree copy = root;
    Tree* at = &copy;
    for (std::size_t step : path) at = &at->children[step];
    Tree child = std::move(at->children[i]);
    at->children.erase(at->children.begin() + static_cast<std::ptrdiff_t>(i));
    at->label |= child.label;
    for (auto& g : child.children) at->children.push_back(std::move(g));
    copy.canonicalize();
    out.push_back(std::move(copy));
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    collect_contractions(root, node.children[i], path, out);
    path.pop_back();
  }
}

void require_same_carrier(const Hypergraph& h, const Construct& s, const Construct& t) {
  if (s.span() != h.carrier() || t.span() != h.carrier()) {
    throw InputError("order comparison between constructs of different hypergraphs");
  }
}

bool leq_rules(const Construct& s, const Construct& t) {
  if (s.node_count() < t.node_count()) return false;
  std::set<Construct> seen{s};
  std::deque<Construct> queue{s};
  while (!queue.empty()) {
    Construct c = std::move(queue.front());
    queue.pop_front();
    if (c == t) return true;
    if (c.node_count() <= t.node_count()) continue;
    for (auto& up : covers(c)) {
      if (seen.insert(up).second) queue.push_back(std::move(up));
    }
  }
  return false;
}

bool leq_recursive(const Hypergraph& h, AtomSet k, const Tree& s, const Tree& t) {
  if (s.label == k) return t.label == k;
  if (!s.label.subset_of(t.label)) return false;
  const AtomSet x = t.label;
  for (const Tree& sj : s.children) {
    const AtomSet kj = sj.span();
    Tree r{kj & x, {}};
    for (const Tree& ti : t.children) {
      if (ti.span().subset_of(kj)) r.children.push_back(ti);
    }
    if (r.label.empty()) {
      if (r.children.size() != 1) return false;
      Tree only = std::move(r.children.front());
      r = std::move(only);
    }
    if (!leq_recursive(h, kj, sj, r)) return false;
  }
  return true;
}

// Replaces the subtrees of s spanning the given sets by Omega leaves,
// recording the removed subtrees.
PartialConstruct cut_at(const Tree& s, const std::vector<AtomSet>& targets, std::map<AtomSet, const Tree*>& removed) {
  const AtomSet here = s.span();
  if (std::find(targets.begin(), targets.end(), here) != targets.end()) {
    removed[here] = &s;
    return omega_leaf(here);
  }
  PartialConstruct p{s.label, false, {}};
  for (const Tree& c : s.children) p.children.push_back(cut_at(c, targets, removed));
  return p;
}

bool leq_grafting(const Hypergraph& h, AtomSet k, const Tree& s, const Tree& t) {
  if (t.label == k) return true;
  std::vector<AtomSet> targets;
  for (const Tree& ti : t.children) targets.push_back(ti.span());
  std::map<AtomSet, const Tree*> removed;
  const PartialConstruct frame = cut_at(s, targets, removed);
  if (removed.size() != targets.size()) return false;
  if (span(frame) != t.label) return false;
  for (const Tree& ti : t.children) {
    if (!leq_grafting(h, ti.span(), *removed.at(ti.span()), ti)) return false;
  }
  return true;
}

PartialConstruct expand(const Hypergraph& h, const PartialConstruct& p, unsigned atom, bool& done) {
  if (p.omega) {
    if (!p.label.contains(atom)) return p;
    done = true;
    PartialConstruct node{AtomSet::single(atom), false, {}};
    for (AtomSet k : h.components_of(p.label - AtomSet::single(atom))) node.children.push_back(omega_leaf(k));
    return node;
  }
  PartialConstruct q{p.label, false, {}};
  q.children.reserve(p.children.size());
  for (const auto& c : p.children) q.children.push_back(done ? c : expand(h, c, atom, done));
  return q;
}

std::vector<PartialConstruct> spanning_within(const Hypergraph& h, AtomSet k, AtomSet x) {
  std::set<PartialConstruct> seen;
  std::set<PartialConstruct> normal;
  std::vector<PartialConstruct> stack{omega_leaf(k)};
  seen.insert(stack.back());
  while (!stack.empty()) {
    PartialConstruct p = std::move(stack.back());
    stack.pop_back();
    const AtomSet open = x - span(p);
    if (open.empty()) {
      normal.insert(std::move(p));
      continue;
    }
    for (unsigned a : open) {
      PartialConstruct q = rewrite_step(h, p, a);
      if (seen.insert(q).second) stack.push_back(std::move(q));
    }
  }
  return {normal.begin(), normal.end()};
}

void graft(const PartialConstruct& p, const std::map<AtomSet, std::vector<Tree>>& fills,
           std::vector<const Tree*>& chosen, std::vector<AtomSet>& order, std::size_t i, std::vector<Tree>& out);

Tree substitute(const PartialConstruct& p, const std::vector<AtomSet>& order, const std::vector<const Tree*>& chosen) {
  if (p.omega) {
    const auto it = std::find(order.begin(), order.end(), p.label);
    return *chosen[static_cast<std::size_t>(it - order.begin())];
  }
  Tree t{p.label, {}};
  for (const auto& c : p.children) t.children.push_back(substitute(c, order, chosen));
  return t;
}

void graft(const PartialConstruct& p, const std::map<AtomSet, std::vector<Tree>>& fills,
           std::vector<const Tree*>& chosen, std::vector<AtomSet>& order, std::size_t i, std::vector<Tree>& out) {
  if (i == order.size()) {
    Tree t = substitute(p, order, chosen);
    t.canonicalize();
    out.push_back(std::move(t));
    return;
  }
  for (const Tree& v : fills.at(order[i])) {
    chosen[i] = &v;
    graft(p, fills, chosen, order, i + 1, out);
  }
}

std::vector<Tree> below(const Hypergraph& h, AtomSet k, const Tree& t) {
  std::map<AtomSet, std::vector<Tree>> fills;
  std::vector<AtomSet> order;
  for (const Tree& ti : t.children) {
    order.push_back(ti.span());
    fills[ti.span()] = below(h, ti.span(), ti);
  }
  std::vector<Tree> out;
  std::vector<const Tree*> chosen(order.size(), nullptr);
  for (const auto& p : spanning_within(h, k, t.label)) graft(p, fills, chosen, order, 0, out);
  return out;
}

}  // namespace

std::vector<Construct> covers(const Construct& s) {
  std::vector<Tree> raw;
  std::vector<std::size_t> path;
  collect_contractions(s.tree(), s.tree(), path, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Construct> out;
  out.reserve(raw.size());
  for (auto& t : raw) out.push_back(Construct::assume_valid(std::move(t)));
  return out;
}

std::set<Construct> upset_by_contraction(const Construct& s) {
  std::set<Construct> seen{s};
  std::vector<Construct> stack{s};
  while (!stack.empty()) {
    Construct c = std::move(stack.back());
    stack.pop_back();
    for (auto& up : covers(c)) {
      if (seen.insert(up).second) stack.push_back(std::move(up));
    }
  }
  return seen;
}

bool leq(const Hypergraph& h, const Construct& s, const Construct& t, OrderVariant variant) {
  require_same_carrier(h, s, t);
  switch (variant) {
    case OrderVariant::rules:
      return leq_rules(s, t);
    case OrderVariant::recursive:
      return leq_recursive(h, h.carrier(), s.tree(), t.tree());
    case OrderVariant::grafting:
      return leq_grafting(h, h.carrier(), s.tree(), t.tree());
  }
  return false;
}

PartialConstruct rewrite_step(const Hypergraph& h, const PartialConstruct& p, unsigned atom) {
  if (span(p).contains(atom)) throw InputError("atom " + h.label(atom) + " is already spanned");
  bool done = false;
  PartialConstruct q = expand(h, p, atom, done);
  if (!done) throw InputError("atom " + h.label(atom) + " lies in no Omega leaf");
  return q;
}

std::vector<PartialConstruct> spanning_partial_constructions(const Hypergraph& h, AtomSet x) {
  if (!x.subset_of(h.carrier())) throw InputError("target set outside the carrier");
  return spanning_within(h, h.carrier(), x);
}

std::vector<Construct> vertices_below(const Hypergraph& h, const Construct& t) {
  if (t.span() != h.carrier()) throw InputError("construct does not belong to this hypergraph");
  auto raw = below(h, h.carrier(), t.tree());
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Construct> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.push_back(Construct::assume_valid(std::move(v)));
  return out;
}

}  // namespace hyperpoly
