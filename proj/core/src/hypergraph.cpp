#include "hyperpoly/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

Universe::Universe(std::vector<std::string> sorted_labels) : labels_(std::move(sorted_labels)) {}

std::optional<unsigned> Universe::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<unsigned>(it - labels_.begin());
}

Hypergraph::Hypergraph() : universe_(std::make_shared<const Universe>(std::vector<std::string>{})) {}

Hypergraph::Hypergraph(std::shared_ptr<const Universe> universe, AtomSet carrier, std::vector<AtomSet> edges)
    : universe_(std::move(universe)), carrier_(carrier), edges_(std::move(edges)) {}

Hypergraph Hypergraph::from_labels(std::vector<std::string> carrier,
                                   const std::vector<std::vector<std::string>>& hyperedges, bool atomize) {
  std::sort(carrier.begin(), carrier.end());
  if (std::adjacent_find(carrier.begin(), carrier.end()) != carrier.end()) {
    throw InputError("duplicate atom label in carrier");
  }
  if (carrier.size() > kMaxAtoms) throw InputError("carrier exceeds 64 atoms");
  for (const auto& l : carrier) {
    if (l.empty()) throw InputError("empty atom label");
  }
  auto universe = std::make_shared<const Universe>(std::move(carrier));
  std::vector<AtomSet> edges;
  for (const auto& e : hyperedges) {
    AtomSet s;
    for (const auto& l : e) {
      auto idx = universe->index_of(l);
      if (!idx) throw InputError("hyperedge mentions unknown atom '" + l + "'");
      s |= AtomSet::single(*idx);
    }
    edges.push_back(s);
  }
  return from_sets(std::move(universe), AtomSet::first_n(static_cast<unsigned>(universe->size())),
                   std::move(edges), atomize);
}

Hypergraph Hypergraph::from_sets(std::shared_ptr<const Universe> universe, AtomSet carrier,
                                 std::vector<AtomSet> hyperedges, bool atomize) {
  if (!carrier.subset_of(AtomSet::first_n(static_cast<unsigned>(universe->size())))) {
    throw InputError("carrier outside the atom universe");
  }
  std::set<AtomSet> edges;
  for (AtomSet e : hyperedges) {
    if (e.empty()) throw InputError("empty hyperedge");
    if (!e.subset_of(carrier)) throw InputError("hyperedge outside the carrier");
    edges.insert(e);
  }
  for (unsigned i : carrier) {
    if (!edges.contains(AtomSet::single(i))) {
      if (!atomize) throw InputError("hypergraph is not atomic: missing singleton {" + universe->label(i) + "}");
      edges.insert(AtomSet::single(i));
    }
  }
  std::vector<AtomSet> sorted(edges.begin(), edges.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](AtomSet a, AtomSet b) { return a.size() < b.size(); });
  return Hypergraph(std::move(universe), carrier, std::move(sorted));
}

std::vector<std::string> Hypergraph::labels(AtomSet s) const {
  std::vector<std::string> out;
  for (unsigned i : s) out.push_back(universe_->label(i));
  return out;
}

unsigned Hypergraph::atom(std::string_view label) const {
  auto idx = universe_->index_of(label);
  if (!idx || !carrier_.contains(*idx)) throw InputError("unknown atom '" + std::string(label) + "'");
  return *idx;
}

AtomSet Hypergraph::atoms(std::span<const std::string> labels) const {
  AtomSet s;
  for (const auto& l : labels) s |= AtomSet::single(atom(l));
  return s;
}

AtomSet Hypergraph::atoms(std::initializer_list<std::string_view> labels) const {
  AtomSet s;
  for (auto l : labels) s |= AtomSet::single(atom(l));
  return s;
}

bool Hypergraph::connected(AtomSet x) const {
  if (x.empty()) return false;
  AtomSet reached = AtomSet::single(x.least());
  bool grew = true;
  while (grew && reached != x) {
    grew = false;
    for (AtomSet e : edges_) {
      if (e.subset_of(x) && e.intersects(reached) && !e.subset_of(reached)) {
        reached |= e;
        grew = true;
      }
    }
  }
  return reached == x;
}

std::vector<AtomSet> Hypergraph::components_of(AtomSet x) const {
  std::vector<AtomSet> inside;
  for (AtomSet e : edges_) {
    if (e.size() > 1 && e.subset_of(x)) inside.push_back(e);
  }
  std::vector<AtomSet> out;
  AtomSet rest = x;
  while (!rest.empty()) {
    AtomSet comp = AtomSet::single(rest.least());
    bool grew = true;
    while (grew) {
      grew = false;
      for (AtomSet e : inside) {
        if (e.intersects(comp) && !e.subset_of(comp)) {
          comp |= e;
          grew = true;
        }
      }
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool Hypergraph::operator==(const Hypergraph& other) const {
  if (carrier_ != other.carrier_ || edges_ != other.edges_) return false;
  if (universe_ == other.universe_) return true;
  for (unsigned i : carrier_) {
    if (universe_->label(i) != other.universe_->label(i)) return false;
  }
  return true;
}

Hypergraph restrict(const Hypergraph& h, AtomSet x) {
  if (!x.subset_of(h.carrier())) throw InputError("restriction outside the carrier");
  if (x.empty()) throw InputError("restriction to the empty set");
  std::vector<AtomSet> kept;
  for (AtomSet e : h.hyperedges()) {
    if (e.subset_of(x)) kept.push_back(e);
  }
  return Hypergraph::from_sets(h.universe_ptr(), x, std::move(kept));
}

bool is_connected(const Hypergraph& h) { return h.connected(h.carrier()); }

std::vector<AtomSet> components(const Hypergraph& h, AtomSet removed) {
  return h.components_of(h.carrier() - removed);
}

std::vector<AtomSet> saturated_sets(const Hypergraph& h) {
  std::vector<AtomSet> out;
  for_each_nonempty_subset(h.carrier(), [&](AtomSet s) {
    if (h.connected(s)) out.push_back(s);
  });
  return out;
}

Hypergraph saturate(const Hypergraph& h) {
  return Hypergraph::from_sets(h.universe_ptr(), h.carrier(), saturated_sets(h));
}

std::map<AtomSet, std::vector<AtomSet>> quasi_partition_refine(const Hypergraph& h, AtomSet y, AtomSet x) {
  if (!y.subset_of(x) || !x.subset_of(h.carrier())) throw InputError("quasi-partition needs y within x within the carrier");
  const auto coarse = components(h, y);
  const auto fine = components(h, x);
  std::map<AtomSet, std::vector<AtomSet>> out;
  for (AtomSet k : coarse) {
    auto& inside = out[k];
    for (AtomSet f : fine) {
      if (f.subset_of(k)) inside.push_back(f);
    }
  }
  return out;
}

std::string format_set(const Hypergraph& h, AtomSet s, bool bare_singleton) {
  if (bare_singleton && s.singleton()) return h.label(s.least());
  std::string out = "{";
  bool first = true;
  for (unsigned i : s) {
    if (!first) out += ",";
    out += h.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace hyperpoly
