#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "hyperpoly/corpus.hpp"
#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/nested_sets.hpp"
#include "hyperpoly/order.hpp"
#include "oracles.hpp"

using namespace hyperpoly;
using fixtures::make;

namespace {

NestedSet family(const Hypergraph& h, std::initializer_list<std::initializer_list<std::string_view>> sets) {
  std::vector<AtomSet> out;
  for (auto s : sets) out.push_back(h.atoms(s));
  return NestedSet::from(out);
}

bool is_graph(const Hypergraph& h) {
  return std::all_of(h.hyperedges().begin(), h.hyperedges().end(), [](AtomSet e) { return e.size() <= 2; });
}

}  // namespace

TEST_SUITE("nestedsets") {

TEST_CASE("psi and its inverse on examples") {
  const Hypergraph p = fixtures::pentagon();
  const auto chain = family(p, {{"z"}, {"y", "z"}, {"x", "y", "z"}});
  CHECK(psi(parse_construct(p, "x(y(z))")) == chain);
  CHECK(to_string(p, unpsi(p, chain)) == "x(y(z))");
  CHECK(psi(top_construct(p)) == family(p, {{"x", "y", "z"}}));
  CHECK(unpsi(p, family(p, {{"x", "y", "z"}})) == top_construct(p));
  const Hypergraph s = fixtures::simplex({"x", "y", "z"});
  CHECK(psi(parse_construct(s, "{x,y}(z)")) == family(s, {{"z"}, {"x", "y", "z"}}));
}

TEST_CASE("the antichain condition separates from its pairwise relaxation") {
  const Hypergraph s = fixtures::simplex({"x", "y", "z"});
  const auto f = family(s, {{"x"}, {"y"}, {"z"}, {"x", "y", "z"}});
  const FamilyReport r = check_family(s, f);
  CHECK(r.contains_carrier);
  CHECK(r.connected_members);
  CHECK(r.pair_condition);
  CHECK_FALSE(r.antichain_condition);
  CHECK(r.antichain_witness == std::vector<AtomSet>{s.atoms({"x"}), s.atoms({"y"}), s.atoms({"z"})});
  try {
    unpsi(s, f);
    FAIL("accepted a family violating the antichain condition");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("{x}, {y}, {z}") != std::string::npos);
  }
  const TubingReport t = check_tubing_conditions(s, f);
  CHECK(t.pair_condition);
  CHECK_FALSE(t.antichain_condition);
  CHECK(t.has_large_hyperedge);
}

TEST_CASE("tubing conditions on the pentagon") {
  const Hypergraph p = fixtures::pentagon();
  const TubingReport chain = check_tubing_conditions(p, family(p, {{"z"}, {"y", "z"}, {"x", "y", "z"}}));
  CHECK(chain.tubing());
  CHECK(chain.antichain_condition);
  CHECK(chain.pair_condition);
  CHECK_FALSE(chain.has_large_hyperedge);
  const TubingReport overlap = check_tubing_conditions(p, family(p, {{"x", "y"}, {"y", "z"}, {"x", "y", "z"}}));
  CHECK_FALSE(overlap.nested_or_disjoint);
  CHECK_FALSE(overlap.tubing());
  CHECK_FALSE(overlap.antichain_condition);
}

TEST_CASE("tree characterizations") {
  const Hypergraph p = fixtures::pentagon();
  for (auto v : {TreeCharacterization::inductive, TreeCharacterization::local_antichain,
                 TreeCharacterization::global_antichain}) {
    CHECK(check_tree_characterization(p, parse_tree(p, "y(x,z)"), v));
    CHECK_FALSE(check_tree_characterization(p, parse_tree(p, "y(x,{y,z})"), v));
  }
  const Hypergraph t = make({"x", "y", "z"}, {{"y", "z"}, {"x", "y", "z"}});
  for (auto v : {TreeCharacterization::inductive, TreeCharacterization::local_antichain,
                 TreeCharacterization::global_antichain}) {
    CHECK_FALSE(check_tree_characterization(t, parse_tree(t, "x(y,z)"), v));
  }
}

TEST_CASE("characterizations agree on every decorated tree of small hypergraphs") {
  // All trees whose decorations partition the carrier, up to four atoms.
  for (unsigned n = 1; n <= 3; ++n) {
    for (const Hypergraph& h : connected_hypergraphs(n)) {
      std::set<Construct> valid;
      for (const auto& c : enumerate_constructs(h)) valid.insert(c);
      // Brute force: decorate a rooted tree shape by an ordered set partition.
      std::function<void(AtomSet, std::function<void(std::vector<Tree>)>)> forests;
      std::function<void(AtomSet, std::function<void(Tree)>)> trees = [&](AtomSet rest,
                                                                            std::function<void(Tree)> emit) {
        for_each_nonempty_subset(rest, [&](AtomSet label) {
          forests(rest - label, [&](std::vector<Tree> kids) { emit(Tree{label, std::move(kids)}); });
        });
      };
      forests = [&](AtomSet rest, std::function<void(std::vector<Tree>)> emit) {
        if (rest.empty()) {
          emit({});
          return;
        }
        // The first tree spans the least atom, so each forest is produced once.
        const AtomSet least = AtomSet::single(rest.least());
        for_each_nonempty_subset(rest - least, [&](AtomSet more) {
          trees(least | more, [&](Tree first) {
            forests(rest - least - more, [&](std::vector<Tree> others) {
              others.insert(others.begin(), first);
              emit(std::move(others));
            });
          });
        });
        trees(least, [&](Tree first) {
          forests(rest - least, [&](std::vector<Tree> others) {
            others.insert(others.begin(), first);
            emit(std::move(others));
          });
        });
      };
      std::size_t accepted = 0;
      trees(h.carrier(), [&](Tree t) {
        const bool a = check_tree_characterization(h, t, TreeCharacterization::inductive);
        CHECK(a == check_tree_characterization(h, t, TreeCharacterization::local_antichain));
        CHECK(a == check_tree_characterization(h, t, TreeCharacterization::global_antichain));
        if (a) {
          ++accepted;
          CHECK(valid.count(validate_construct(h, t)) == 1);
        }
      });
      CHECK(accepted == valid.size());
    }
  }
}

TEST_CASE("psi is an order anti-isomorphism and unpsi inverts it") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const Hypergraph& h : connected_hypergraphs(n)) {
      const auto cs = enumerate_constructs(h);
      std::set<std::vector<AtomSet>> images;
      for (const auto& a : cs) {
        const NestedSet pa = psi(a);
        CHECK(pa.members == oracle::spans(a.tree()));
        CHECK(pa.members.size() == a.node_count());
        CHECK(unpsi(h, pa) == a);
        images.insert(pa.members);
        for (const auto& b : cs) {
          const NestedSet pb = psi(b);
          const bool contained = std::includes(pa.members.begin(), pa.members.end(), pb.members.begin(), pb.members.end());
          CHECK(leq(h, a, b) == contained);
        }
      }
      CHECK(images.size() == cs.size());
    }
  }
}

TEST_CASE("image characterization over all families containing the carrier") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const Hypergraph& h : connected_hypergraphs(n)) {
      const auto expected = oracle::nested_sets(h);
      const std::set<std::vector<AtomSet>> nested(expected.begin(), expected.end());
      std::vector<AtomSet> proper;
      for (AtomSet s : nonempty_subsets(h.carrier())) {
        if (s != h.carrier()) proper.push_back(s);
      }
      std::size_t accepted = 0;
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << proper.size()); ++pick) {
        std::vector<AtomSet> sets{h.carrier()};
        for (std::size_t i = 0; i < proper.size(); ++i) {
          if ((pick >> i) & 1U) sets.push_back(proper[i]);
        }
        const NestedSet f = NestedSet::from(sets);
        const FamilyReport r = check_family(h, f);
        const bool ok = r.contains_carrier && r.connected_members && r.antichain_condition;
        CHECK(ok == (nested.count(f.members) == 1));
        if (ok) {
          ++accepted;
          CHECK(psi(unpsi(h, f)) == f);
        } else {
          CHECK_THROWS_AS(unpsi(h, f), InputError);
        }
        if (is_graph(h) && r.connected_members) {
          const TubingReport t = check_tubing_conditions(h, f);
          CHECK(t.antichain_condition == r.antichain_condition);
          CHECK(t.pair_condition == r.antichain_condition);
          CHECK(t.tubing() == r.antichain_condition);
        }
      }
      CHECK(accepted == nested.size());
    }
  }
}

}  // TEST_SUITE
