#include "hyperpoly/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/nested_sets.hpp"
#include "hyperpoly/order.hpp"
#include "hyperpoly/operadic.hpp"
#include "hyperpoly/realization.hpp"

namespace hyperpoly {

std::vector<Hypergraph> connected_hypergraphs(std::size_t atoms) {
  if (atoms == 0 || atoms > 5) throw InputError("exhaustive generation supports 1 to 5 atoms");
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << atoms); ++s) {
    if (std::popcount(s) >= 2) subsets.push_back(s);
  }
  if (subsets.size() > 20) throw InputError("too many candidate hyperedges for exhaustive generation");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(atoms);
  std::iota(p.begin(), p.end(), 0U);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](std::uint64_t s) {
    return static_cast<std::size_t>(std::lower_bound(subsets.begin(), subsets.end(), s) - subsets.begin());
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < atoms; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::set<std::uint64_t> seen;
  std::vector<Hypergraph> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets.size()); ++family) {
    std::uint64_t canonical = family;
    for (const auto& perm : perms) {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < subsets.size(); ++k) {
        if (!((family >> k) & 1U)) continue;
        std::uint64_t mapped = 0;
        for (unsigned b = 0; b < atoms; ++b) {
          if ((subsets[k] >> b) & 1U) mapped |= std::uint64_t{1} << perm[b];
        }
        image |= std::uint64_t{1} << index_of(mapped);
      }
      canonical = std::min(canonical, image);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<std::vector<std::string>> edges;
    for (std::size_t i = 0; i < atoms; ++i) edges.push_back({labels[i]});
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      if (!((family >> k) & 1U)) continue;
      std::vector<std::string> e;
      for (unsigned b = 0; b < atoms; ++b) {
        if ((subsets[k] >> b) & 1U) e.push_back(labels[b]);
      }
      edges.push_back(std::move(e));
    }
    Hypergraph h = Hypergraph::from_labels(labels, edges);
    if (is_connected(h)) out.push_back(std::move(h));
  }
  return out;
}

namespace {

Hypergraph graph_on(const std::vector<std::string>& atoms, const std::vector<std::pair<int, int>>& links,
                    std::vector<std::vector<std::string>> extra = {}) {
  for (const auto& [a, b] : links) extra.push_back({atoms[static_cast<std::size_t>(a)], atoms[static_cast<std::size_t>(b)]});
  return Hypergraph::from_labels(atoms, extra, true);
}

std::vector<std::pair<int, int>> path(int n) {
  std::vector<std::pair<int, int>> l;
  for (int i = 0; i + 1 < n; ++i) l.emplace_back(i, i + 1);
  return l;
}

std::vector<std::pair<int, int>> cycle(int n) {
  auto l = path(n);
  l.emplace_back(n - 1, 0);
  return l;
}

std::vector<std::pair<int, int>> complete(int n) {
  std::vector<std::pair<int, int>> l;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) l.emplace_back(i, j);
  }
  return l;
}

std::vector<std::pair<int, int>> star(int n) {
  std::vector<std::pair<int, int>> l;
  for (int i = 1; i < n; ++i) l.emplace_back(0, i);
  return l;
}

}  // namespace

std::vector<NamedHypergraph> named_examples() {
  const std::vector<std::string> four{"u", "x", "y", "z"};
  const std::vector<std::string> five{"a", "b", "c", "d", "e"};
  std::vector<NamedHypergraph> out;
  out.push_back({"simplex-3", graph_on(four, {}, {four})});
  out.push_back({"edge-truncated-simplex-3", graph_on(four, {{0, 3}}, {four})});
  out.push_back({"vertex-truncated-simplex-3", graph_on(four, {}, {four, {"u", "y", "z"}})});
  out.push_back({"associahedron-3", graph_on({"x", "y", "z", "u"}, {{1, 2}, {2, 3}, {3, 0}})});
  out.push_back({"cyclohedron-3", graph_on(four, cycle(4))});
  out.push_back({"permutohedron-3", graph_on(four, complete(4))});
  out.push_back({"stellohedron-3", graph_on(four, star(4))});
  out.push_back({"hemiassociahedron", EdgeGraph(OperadicTree::parse("a(b(c,d),e)")).graph()});
  out.push_back({"simplex-4", graph_on(five, {}, {five})});
  out.push_back({"associahedron-4", graph_on(five, path(5))});
  out.push_back({"cyclohedron-4", graph_on(five, cycle(5))});
  out.push_back({"permutohedron-4", graph_on(five, complete(5))});
  out.push_back({"stellohedron-4", graph_on(five, star(5))});
  return out;
}

namespace {

std::string hypergraph_name(const Hypergraph& h) {
  std::string out = std::to_string(h.size()) + " atoms";
  for (AtomSet e : h.hyperedges()) {
    if (e.size() > 1) out += " " + format_set(h, e);
  }
  return out;
}

void check_one(const std::string& name, const Hypergraph& h, const Limits& limits, CorpusReport& r) {
  auto fail = [&](const std::string& what) {
    if (r.failures.size() < 50) r.failures.push_back(name + ": " + what);
  };
  const auto constructs = enumerate_constructs(h, limits);
  r.constructs += constructs.size();
  std::vector<Construct> constructions;
  for (const auto& c : constructs) {
    if (c.is_construction()) constructions.push_back(c);
  }
  for (const auto& s : constructs) {
    const auto up = upset_by_contraction(s);
    for (const auto& t : constructs) {
      ++r.comparisons;
      const bool a = up.contains(t);
      const bool b = leq(h, s, t, OrderVariant::recursive);
      const bool c = leq(h, s, t, OrderVariant::grafting);
      if (a != b || b != c) fail("orders disagree on " + to_string(h, s) + " and " + to_string(h, t));
    }
    std::vector<Construct> brute;
    for (const auto& v : constructions) {
      if (leq(h, v, s)) brute.push_back(v);
    }
    if (vertices_below(h, s) != brute) fail("vertices below " + to_string(h, s));
    if (unpsi(h, psi(s)) != s) fail("nested set round trip of " + to_string(h, s));
  }
  const auto iso = verify_isomorphism(h, limits);
  for (const auto& [kind, witnesses] : iso.failures) fail("realization " + kind + ": " + witnesses.front());
}

}  // namespace

CorpusReport verify_corpus(std::size_t max_atoms, const Limits& limits) {
  CorpusReport r;
  for (std::size_t n = 1; n <= max_atoms; ++n) {
    for (const auto& h : connected_hypergraphs(n)) {
      ++r.hypergraphs;
      check_one(hypergraph_name(h), h, limits, r);
    }
  }
  for (const auto& [name, h] : named_examples()) {
    ++r.hypergraphs;
    check_one(name, h, limits, r);
  }
  return r;
}

}  // namespace hyperpoly
