#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hyperpoly/corpus.hpp"
#include "hyperpoly/errors.hpp"
#include "oracles.hpp"

using namespace hyperpoly;
using fixtures::make;

TEST_SUITE("hypergraph") {

TEST_CASE("atom sets order lexicographically and iterate in index order") {
  const AtomSet a = AtomSet::from_bits(0b0101);
  const AtomSet b = AtomSet::from_bits(0b0011);
  CHECK(b < a);  // {0,1} before {0,2}
  CHECK(AtomSet::single(0) < AtomSet::from_bits(0b11));
  CHECK(AtomSet::from_bits(0b1000) > AtomSet::from_bits(0b0111));
  std::vector<unsigned> seen(a.begin(), a.end());
  CHECK(seen == std::vector<unsigned>{0, 2});
  CHECK(nonempty_subsets(AtomSet::first_n(4)).size() == 15);
}

TEST_CASE("labels are sorted and singletons are required") {
  const Hypergraph h = make({"z", "x", "y"}, {{"y", "x"}});
  CHECK(h.label(0) == "x");
  CHECK(h.atoms({"x", "y"}) == AtomSet::from_bits(0b011));
  CHECK_THROWS_AS(Hypergraph::from_labels({"x", "y"}, {{"x"}, {"x", "y"}}), InputError);
  CHECK_THROWS_AS(Hypergraph::from_labels({"x", "y"}, {{"x"}, {"y"}, {"x", "w"}}), InputError);
  CHECK_THROWS_AS(Hypergraph::from_labels({"x", "x"}, {{"x"}}), InputError);
  CHECK_THROWS_AS(h.atom("w"), InputError);
}

TEST_CASE("restriction keeps the hyperedges inside the subset") {
  const Hypergraph p = fixtures::pentagon();
  const Hypergraph r = restrict(p, p.atoms({"x", "y"}));
  CHECK(r.carrier() == p.atoms({"x", "y"}));
  CHECK(r.hyperedges().size() == 3);
  CHECK(restrict(p, p.carrier()) == p);

  const Hypergraph s = fixtures::simplex({"x", "y", "z"});
  const Hypergraph yz = restrict(s, s.atoms({"y", "z"}));
  CHECK(yz.hyperedges().size() == 2);
  CHECK_FALSE(is_connected(yz));
  CHECK_THROWS_AS(restrict(p, AtomSet{}), InputError);
  CHECK_THROWS_AS(restrict(p, AtomSet::from_bits(0b1000)), InputError);
}

TEST_CASE("connectivity and components") {
  const Hypergraph p = fixtures::pentagon();
  CHECK(is_connected(p));
  CHECK(is_connected(fixtures::simplex({"x", "y", "z"})));
  CHECK(components(p, p.atoms({"y"})) == std::vector<AtomSet>{p.atoms({"x"}), p.atoms({"z"})});
  const Hypergraph k = fixtures::complete_graph({"x", "y", "z"});
  CHECK(components(k, k.atoms({"y"})) == std::vector<AtomSet>{k.atoms({"x", "z"})});
  CHECK(components(p, AtomSet{}) == std::vector<AtomSet>{p.carrier()});
  CHECK(components(p, p.carrier()).empty());
}

TEST_CASE("saturation adds exactly the connected subsets") {
  const Hypergraph p = fixtures::pentagon();
  const Hypergraph sp = saturate(p);
  CHECK(std::count(sp.hyperedges().begin(), sp.hyperedges().end(), p.carrier()) == 1);
  CHECK(saturate(sp) == sp);

  const Hypergraph a = fixtures::path({"x", "y", "z", "u"});
  const auto sat = saturated_sets(a);
  CHECK(sat == oracle::connected_subsets(a));
  CHECK(sat.size() == 10);
  for (const auto& extra : {a.atoms({"x", "y", "z"}), a.atoms({"y", "z", "u"}), a.carrier()}) {
    CHECK(std::find(sat.begin(), sat.end(), extra) != sat.end());
  }
}

TEST_CASE("quasi-partition refinement") {
  const Hypergraph p = fixtures::pentagon();
  const auto m = quasi_partition_refine(p, p.atoms({"y"}), p.atoms({"x", "y"}));
  REQUIRE(m.size() == 2);
  CHECK(m.at(p.atoms({"x"})).empty());
  CHECK(m.at(p.atoms({"z"})) == std::vector<AtomSet>{p.atoms({"z"})});
  const auto same = quasi_partition_refine(p, p.atoms({"y"}), p.atoms({"y"}));
  for (const auto& [k, fiber] : same) CHECK(fiber == std::vector<AtomSet>{k});
  CHECK_THROWS_AS(quasi_partition_refine(p, p.atoms({"x"}), p.atoms({"y"})), InputError);

  const Hypergraph k4 = fixtures::complete_graph({"a", "b", "c", "d"});
  const auto km = quasi_partition_refine(k4, k4.atoms({"a"}), k4.atoms({"a", "b"}));
  REQUIRE(km.size() == 1);
  CHECK(km.begin()->first == k4.atoms({"b", "c", "d"}));
  CHECK(km.begin()->second == std::vector<AtomSet>{k4.atoms({"c", "d"})});
}

TEST_CASE("component and quasi-partition properties on the small corpus") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const Hypergraph& h : connected_hypergraphs(n)) {
      CHECK(saturated_sets(h) == oracle::connected_subsets(h));
      for (AtomSet x : nonempty_subsets(h.carrier())) {
        AtomSet seen;
        for (AtomSet c : components(h, x)) {
          CHECK_FALSE(c.intersects(seen));
          CHECK(oracle::connected(h, c));
          seen |= c;
        }
        CHECK(seen == h.carrier() - x);
        CHECK(h.connected(x) == oracle::connected(h, x));
        for (AtomSet y : nonempty_subsets(x)) {
          const auto m = quasi_partition_refine(h, y, x);
          std::size_t assigned = 0;
          for (const auto& [k, fiber] : m) {
            for (AtomSet c : fiber) CHECK(c.subset_of(k));
            assigned += fiber.size();
          }
          CHECK(assigned == components(h, x).size());
        }
      }
    }
  }
}

TEST_CASE("isomorph-free generation matches brute force") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto expected = oracle::hypergraph_classes(n);
    std::set<std::vector<std::uint64_t>> got;
    const auto hs = connected_hypergraphs(n);
    for (const Hypergraph& h : hs) {
      std::vector<std::uint64_t> edges;
      for (AtomSet e : h.hyperedges()) {
        if (e.size() >= 2) edges.push_back(e.bits());
      }
      got.insert(oracle::canonical_form(n, edges));
    }
    CHECK(hs.size() == got.size());
    CHECK(got == expected);
  }
  // Frozen from the brute force above.
  CHECK(connected_hypergraphs(3).size() == 6);
}

}  // TEST_SUITE
