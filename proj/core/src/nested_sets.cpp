#include "hyperpoly/nested_sets.hpp"

#include <algorithm>
#include <functional>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

NestedSet NestedSet::from(std::vector<AtomSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return NestedSet{std::move(sets)};
}

bool NestedSet::contains(AtomSet s) const { return std::binary_search(members.begin(), members.end(), s); }

namespace {

void collect_spans(const Tree& t, std::vector<AtomSet>& out) {
  out.push_back(t.span());
  for (const auto& c : t.children) collect_spans(c, out);
}

bool comparable(AtomSet a, AtomSet b) { return a.subset_of(b) || b.subset_of(a); }

// Smallest antichain of at least two members whose union is connected.
std::vector<AtomSet> connected_antichain(const Hypergraph& h, const std::vector<AtomSet>& members, std::size_t max_size) {
  std::vector<AtomSet> pick;
  std::function<bool(std::size_t, std::size_t, AtomSet)> search = [&](std::size_t start, std::size_t want, AtomSet acc) {
    if (pick.size() == want) return h.connected(acc);
    for (std::size_t i = start; i < members.size(); ++i) {
      const AtomSet m = members[i];
      if (std::any_of(pick.begin(), pick.end(), [&](AtomSet p) { return comparable(p, m); })) continue;
      pick.push_back(m);
      if (search(i + 1, want, acc | m)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 2; k <= std::min(max_size, members.size()); ++k) {
    pick.clear();
    if (search(0, k, AtomSet{})) return pick;
  }
  return {};
}

}  // namespace

NestedSet psi(const Construct& t) {
  std::vector<AtomSet> spans;
  collect_spans(t.tree(), spans);
  return NestedSet::from(std::move(spans));
}

FamilyReport check_family(const Hypergraph& h, const NestedSet& family) {
  FamilyReport r;
  r.contains_carrier = family.contains(h.carrier());
  r.connected_members = true;
  for (AtomSet m : family.members) {
    if (!m.subset_of(h.carrier()) || !h.connected(m)) {
      r.connected_members = false;
      r.disconnected_member = m;
      break;
    }
  }
  r.antichain_witness = connected_antichain(h, family.members, family.members.size());
  r.antichain_condition = r.antichain_witness.empty();
  r.pair_condition = connected_antichain(h, family.members, 2).empty();
  return r;
}

Construct unpsi(const Hypergraph& h, const NestedSet& family) {
  const FamilyReport r = check_family(h, family);
  if (!r.contains_carrier) throw InputError("family does not contain the carrier");
  if (!r.connected_members) {
    throw InputError("member " + format_set(h, *r.disconnected_member) + " is not connected");
  }
  if (!r.antichain_condition) {
    std::string w;
    for (AtomSet a : r.antichain_witness) w += (w.empty() ? "" : ", ") + format_set(h, a);
    throw InputError("antichain {" + w + "} has a connected union");
  }
  // Members by decreasing size; each member's parent is its least strict superset.
  std::vector<AtomSet> order = family.members;
  std::stable_sort(order.begin(), order.end(), [](AtomSet a, AtomSet b) { return a.size() > b.size(); });
  std::vector<int> parent(order.size(), -1);
  for (std::size_t i = 1; i < order.size(); ++i) {
    for (std::size_t j = i; j-- > 0;) {
      if (order[i].proper_subset_of(order[j])) {
        parent[i] = static_cast<int>(j);
        break;
      }
    }
    if (parent[i] < 0) throw InputError("member " + format_set(h, order[i]) + " lies outside the carrier");
  }
  std::function<Tree(std::size_t)> build = [&](std::size_t i) {
    Tree t{order[i], {}};
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (parent[j] == static_cast<int>(i)) {
        t.children.push_back(build(j));
        t.label -= order[j];
      }
    }
    return t;
  };
  return validate_construct(h, build(0));
}

TubingReport check_tubing_conditions(const Hypergraph& h, const NestedSet& family) {
  TubingReport r;
  r.nested_or_disjoint = true;
  r.disjoint_disconnected = true;
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i].intersects(m[j])) {
        if (!comparable(m[i], m[j])) r.nested_or_disjoint = false;
      } else if (h.connected(m[i] | m[j])) {
        r.disjoint_disconnected = false;
      }
    }
  }
  const FamilyReport f = check_family(h, family);
  r.antichain_condition = f.antichain_condition;
  r.pair_condition = f.pair_condition;
  r.antichain_witness = f.antichain_witness;
  for (AtomSet e : h.hyperedges()) {
    if (e.size() > 2) r.has_large_hyperedge = true;
  }
  return r;
}

namespace {

bool disjoint_cover(const Hypergraph& h, const Tree& t) {
  std::vector<AtomSet> labels;
  std::function<void(const Tree&)> walk = [&](const Tree& n) {
    labels.push_back(n.label);
    for (const auto& c : n.children) walk(c);
  };
  walk(t);
  AtomSet seen;
  for (AtomSet l : labels) {
    if (l.empty() || l.intersects(seen)) return false;
    seen |= l;
  }
  return seen == h.carrier();
}

bool connected_subtrees(const Hypergraph& h, const Tree& t) {
  if (!h.connected(t.span())) return false;
  return std::all_of(t.children.begin(), t.children.end(), [&](const Tree& c) { return connected_subtrees(h, c); });
}

bool sibling_unions_disconnected(const Hypergraph& h, const Tree& t) {
  std::vector<AtomSet> spans;
  for (const auto& c : t.children) spans.push_back(c.span());
  const std::size_t n = spans.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << n); ++pick) {
    if (std::popcount(pick) < 2) continue;
    AtomSet u;
    for (std::size_t i = 0; i < n; ++i) {
      if ((pick >> i) & 1U) u |= spans[i];
    }
    if (h.connected(u)) return false;
  }
  return std::all_of(t.children.begin(), t.children.end(), [&](const Tree& c) { return sibling_unions_disconnected(h, c); });
}

}  // namespace

bool check_tree_characterization(const Hypergraph& h, const Tree& raw, TreeCharacterization variant) {
  switch (variant) {
    case TreeCharacterization::inductive:
      try {
        validate_construct(h, raw);
        return true;
      } catch (const InputError&) {
        return false;
      }
    case TreeCharacterization::local_antichain:
      return disjoint_cover(h, raw) && connected_subtrees(h, raw) && sibling_unions_disconnected(h, raw);
    case TreeCharacterization::global_antichain: {
      if (!disjoint_cover(h, raw) || !connected_subtrees(h, raw)) return false;
      std::vector<AtomSet> spans;
      collect_spans(raw, spans);
      return connected_antichain(h, spans, spans.size()).empty();
    }
  }
  return false;
}

}  // namespace hyperpoly
