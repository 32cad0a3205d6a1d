#include "hyperpoly/truncation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/nested_sets.hpp"
#include "hyperpoly/order.hpp"

namespace hyperpoly {

bool Multiset::empty() const {
  return std::all_of(counts.begin(), counts.end(), [](unsigned c) { return c == 0; });
}

std::string to_string(const std::vector<std::string>& base, const Multiset& m) {
  std::string out;
  for (std::size_t i = 0; i < m.counts.size(); ++i) {
    if (m.counts[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (m.counts[i] > 1) out += std::to_string(m.counts[i]);
    out += base.at(i);
  }
  return out;
}

Multiset parse_multiset(const std::vector<std::string>& base, std::string_view text) {
  Multiset m{std::vector<unsigned>(base.size(), 0)};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.front()))) term.remove_prefix(1);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.remove_suffix(1);
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    const unsigned coefficient = digits ? static_cast<unsigned>(std::stoul(std::string(term.substr(0, digits)))) : 1;
    const std::string name(term.substr(digits));
    auto it = std::find(base.begin(), base.end(), name);
    if (it == base.end() || coefficient == 0) throw InputError("bad multiset term '" + std::string(term) + "'");
    m.counts[static_cast<std::size_t>(it - base.begin())] += coefficient;
    pos = end + 1;
  }
  return m;
}

Multiset unit(std::size_t base_size, std::size_t element) {
  Multiset m{std::vector<unsigned>(base_size, 0)};
  m.counts.at(element) = 1;
  return m;
}

Multiset mu_sigma(const std::vector<Multiset>& family) {
  if (family.empty()) throw InputError("flattening needs a non-empty family");
  Multiset out{std::vector<unsigned>(family.front().counts.size(), 0)};
  for (const auto& m : family) {
    if (m.counts.size() != out.counts.size()) throw InputError("multisets over different bases");
    for (std::size_t i = 0; i < m.counts.size(); ++i) out.counts[i] += m.counts[i];
  }
  return out;
}

std::vector<std::string> RoundState::facet_names() const {
  std::vector<std::string> out;
  for (const auto& f : facets) out.push_back(to_string(base, f));
  return out;
}

std::string RoundState::name(AtomSet facet_set) const {
  std::string out = "{";
  for (unsigned i : facet_set) {
    if (out.size() > 1) out += ",";
    out += to_string(base, facets.at(i));
  }
  return out + "}";
}

void RoundState::check_property_p() const {
  AtomSet covered;
  for (AtomSet v : vertex_hypergraph) covered |= v;
  const AtomSet all = AtomSet::first_n(static_cast<unsigned>(facets.size()));
  if (covered != all) throw InputError("property (P) fails: facets " + name(all - covered) + " lie in no vertex hyperedge");
}

RoundState make_state(std::vector<std::string> base, std::vector<Multiset> facets,
                      std::vector<std::vector<Multiset>> vertex_hypergraph) {
  if (facets.size() > kMaxAtoms) throw InputError("more than 64 facets");
  RoundState s;
  s.base = std::move(base);
  for (const auto& b : s.base) {
    if (b.empty() || std::isdigit(static_cast<unsigned char>(b.front())) || b.find('+') != std::string::npos) {
      throw InputError("base element names must be non-empty, start with a non-digit and avoid '+'");
    }
  }
  for (const auto& f : facets) {
    if (f.counts.size() != s.base.size() || f.empty()) throw InputError("facet is not a non-empty multiset over the base");
  }
  std::sort(facets.begin(), facets.end(), [&](const Multiset& a, const Multiset& b) {
    return to_string(s.base, a) < to_string(s.base, b);
  });
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) throw InputError("repeated facet");
  s.facets = std::move(facets);
  for (const auto& v : vertex_hypergraph) {
    AtomSet set;
    for (const auto& m : v) {
      auto it = std::find(s.facets.begin(), s.facets.end(), m);
      if (it == s.facets.end()) throw InputError("vertex hyperedge mentions an unknown facet " + to_string(s.base, m));
      set |= AtomSet::single(static_cast<unsigned>(it - s.facets.begin()));
    }
    s.vertex_hypergraph.push_back(set);
  }
  std::sort(s.vertex_hypergraph.begin(), s.vertex_hypergraph.end());
  s.vertex_hypergraph.erase(std::unique(s.vertex_hypergraph.begin(), s.vertex_hypergraph.end()), s.vertex_hypergraph.end());
  s.check_property_p();
  return s;
}

RoundState simplex_round(std::vector<std::string> base) {
  std::vector<Multiset> facets;
  for (std::size_t i = 0; i < base.size(); ++i) facets.push_back(unit(base.size(), i));
  std::vector<std::vector<Multiset>> vertices;
  for (std::size_t skip = 0; skip < base.size(); ++skip) {
    std::vector<Multiset> v;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (i != skip) v.push_back(unit(base.size(), i));
    }
    vertices.push_back(std::move(v));
  }
  return make_state(std::move(base), std::move(facets), std::move(vertices));
}

Hypergraph truncation_hypergraph(const RoundState& s, const Hypergraph& ht) {
  const auto names = s.facet_names();
  if (ht.labels(ht.carrier()) != names) throw InputError("truncation hypergraph is not over the current facets");
  if (!is_connected(ht)) throw InputError("truncation hypergraph is not connected");
  return Hypergraph::from_labels(names, [&] {
    std::vector<std::vector<std::string>> edges;
    for (AtomSet e : ht.hyperedges()) edges.push_back(ht.labels(e));
    return edges;
  }());
}

namespace {

std::vector<Construct> with_roots(const Hypergraph& h, const std::set<AtomSet>& roots, bool constructions) {
  ConstructEnumerator e(h);
  std::vector<Construct> out;
  for (AtomSet y : roots) {
    const auto comps = h.components_of(h.carrier() - y);
    std::vector<std::vector<Tree>> options;
    for (AtomSet k : comps) options.push_back(constructions ? e.constructions_of(k) : e.constructs_of(k));
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      Tree t{y, {}};
      for (std::size_t i = 0; i < options.size(); ++i) t.children.push_back(options[i][pick[i]]);
      out.push_back(Construct::assume_valid(std::move(t)));
      std::size_t i = options.size();
      bool more = false;
      while (i > 0) {
        --i;
        if (++pick[i] < options[i].size()) {
          more = true;
          break;
        }
        pick[i] = 0;
      }
      if (!more) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_tamed(const RoundState& s, const Hypergraph& ht, const Construct& c) {
  return std::any_of(s.vertex_hypergraph.begin(), s.vertex_hypergraph.end(),
                     [&](AtomSet v) { return (ht.carrier() - v).subset_of(c.root_label()); });
}

std::vector<Construct> tamed_constructs(const RoundState& s, const Hypergraph& ht, const Limits&) {
  const Hypergraph h = truncation_hypergraph(s, ht);
  std::set<AtomSet> roots;
  for (AtomSet v : s.vertex_hypergraph) {
    const AtomSet base = h.carrier() - v;
    if (!base.empty()) roots.insert(base);
    for_each_nonempty_subset(v, [&](AtomSet w) { roots.insert(base | w); });
  }
  return with_roots(h, roots, false);
}

std::vector<Construct> tamed_constructions(const RoundState& s, const Hypergraph& ht, const Limits&) {
  const Hypergraph h = truncation_hypergraph(s, ht);
  std::set<AtomSet> roots;
  for (AtomSet v : s.vertex_hypergraph) {
    if (v != h.carrier()) roots.insert(h.carrier() - v);
  }
  return with_roots(h, roots, true);
}

std::vector<Construct> tamed_vertices_below(const RoundState& s, const Hypergraph& ht, const Construct& c,
                                            const Limits& limits) {
  const Hypergraph h = truncation_hypergraph(s, ht);
  if (!is_tamed(s, h, c)) throw InputError("construct is not tamed by any vertex hyperedge");
  std::vector<Construct> out;
  for (const auto& v : tamed_constructions(s, h, limits)) {
    if (leq(h, v, c)) out.push_back(v);
  }
  return out;
}

RoundReport next_round(const RoundState& s, const Hypergraph& ht, const Limits& limits) {
  const Hypergraph h = truncation_hypergraph(s, ht);
  s.check_property_p();
  RoundReport report;
  const auto tamed = tamed_constructs(s, h, limits);
  report.tamed_constructs = tamed.size();

  // Maximal tamed constructs below the top have exactly two nodes, since
  // contracting an edge keeps a construct tamed.
  std::set<AtomSet> constr_sets;
  for (const auto& c : tamed) {
    if (c.node_count() != 2) continue;
    constr_sets.insert(c.tree().children.front().label);
    report.constrs.push_back(to_string(h, c));
  }
  std::set<AtomSet> expected;
  for (AtomSet v : s.vertex_hypergraph) {
    for_each_nonempty_subset(v, [&](AtomSet y) {
      if (y != h.carrier() && h.connected(y)) expected.insert(y);
    });
  }
  if (expected != constr_sets) throw VerificationError("constrs disagree with their characterization");

  auto flatten = [&](AtomSet y) {
    std::vector<Multiset> family;
    for (unsigned i : y) family.push_back(s.facets[i]);
    return mu_sigma(family);
  };
  std::map<Multiset, AtomSet> facet_source;
  for (AtomSet y : constr_sets) {
    const Multiset m = flatten(y);
    auto [it, fresh] = facet_source.emplace(m, y);
    if (!fresh) {
      throw VerificationError("flattening is not injective on constrs: " + s.name(it->second) + " and " + s.name(y) +
                              " both give " + to_string(s.base, m));
    }
  }
  for (const auto& f : s.facets) {
    if (!facet_source.contains(f)) throw VerificationError("facet " + to_string(s.base, f) + " is lost in the next round");
  }

  std::vector<Multiset> next_facets;
  for (const auto& [m, y] : facet_source) next_facets.push_back(m);
  std::map<std::vector<Multiset>, std::string> vertex_source;
  std::vector<std::vector<Multiset>> next_vertices;
  for (const auto& v : tamed_constructions(s, h, limits)) {
    report.constructions.push_back(to_string(h, v));
    std::vector<Multiset> hyperedge;
    for (AtomSet y : psi(v).members) {
      if (y == h.carrier()) continue;
      const Multiset m = flatten(y);
      if (!facet_source.contains(m)) {
        throw VerificationError("vertex " + to_string(h, v) + " flattens " + s.name(y) + " outside the new facets");
      }
      hyperedge.push_back(m);
    }
    std::sort(hyperedge.begin(), hyperedge.end());
    if (std::adjacent_find(hyperedge.begin(), hyperedge.end()) != hyperedge.end()) {
      throw VerificationError("flattening is not injective on the nested set of " + to_string(h, v));
    }
    auto [it, fresh] = vertex_source.emplace(hyperedge, to_string(h, v));
    if (!fresh) {
      report.coincidences.push_back(it->second + " and " + to_string(h, v));
      continue;
    }
    next_vertices.push_back(std::move(hyperedge));
  }

  RoundState::Trace trace;
  trace.facets = s.facet_names();
  for (AtomSet v : s.vertex_hypergraph) trace.vertex_hypergraph.push_back(h.labels(v));
  for (AtomSet e : h.hyperedges()) trace.truncation_hypergraph.push_back(h.labels(e));
  try {
    report.next = make_state(s.base, std::move(next_facets), std::move(next_vertices));
  } catch (const InputError& e) {
    throw VerificationError(std::string("next round is malformed: ") + e.what());
  }
  report.next.trace = s.trace;
  report.next.trace.push_back(std::move(trace));
  return report;
}

}  // namespace hyperpoly
