#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/nested_sets.hpp"
#include "hyperpoly/order.hpp"
#include "hyperpoly/truncation.hpp"

using namespace hyperpoly;
using fixtures::make;

namespace {

const std::vector<std::string> kBase{"x", "y", "z", "u"};

Hypergraph round1_truncations() { return make({"x", "y", "z", "u"}, {{"x", "y"}, {"x", "y", "z", "u"}}); }
Hypergraph round2_truncations() {
  return make({"x", "y", "z", "u", "x+y"}, {{"x", "x+y"}, {"u", "x", "y", "z", "x+y"}});
}

std::set<std::set<std::string>> vertex_names(const RoundState& s) {
  std::set<std::set<std::string>> out;
  const auto names = s.facet_names();
  for (AtomSet v : s.vertex_hypergraph) {
    std::set<std::string> e;
    for (unsigned i : v) e.insert(names[i]);
    out.insert(e);
  }
  return out;
}

std::set<std::string> sset(std::initializer_list<std::string> xs) { return xs; }

// Constrs are the two-node tamed constructs; they must also be exactly the
// tamed constructs covered only by the top.
void check_constrs(const RoundState& s, const Hypergraph& ht, const RoundReport& r) {
  const Hypergraph h = truncation_hypergraph(s, ht);
  const auto tamed = tamed_constructs(s, h);
  std::set<std::string> maximal;
  for (const auto& c : tamed) {
    if (c == top_construct(h)) continue;
    bool below_other = false;
    for (const auto& d : tamed) {
      if (!(d == c) && !(d == top_construct(h)) && leq(h, c, d)) below_other = true;
    }
    if (!below_other) maximal.insert(to_string(h, c));
  }
  CHECK(maximal == std::set<std::string>(r.constrs.begin(), r.constrs.end()));
  for (const auto& c : tamed) {
    CHECK(is_tamed(s, h, c));
    for (const auto& up : covers(c)) CHECK(is_tamed(s, h, up));
  }
  std::size_t tamed_count = 0;
  for (const auto& c : enumerate_constructs(h)) tamed_count += is_tamed(s, h, c);
  CHECK(tamed_count == tamed.size());
}

void check_rounds_grow(const RoundState& before, const RoundState& after) {
  for (const auto& f : before.facets) CHECK(std::find(after.facets.begin(), after.facets.end(), f) != after.facets.end());
  CHECK_NOTHROW(after.check_property_p());
}

}  // namespace

TEST_SUITE("truncation") {

TEST_CASE("multisets") {
  const Multiset m = parse_multiset(kBase, "2x+y");
  CHECK(m.counts == std::vector<unsigned>{2, 1, 0, 0});
  CHECK(to_string(kBase, m) == "2x+y");
  CHECK(to_string(kBase, parse_multiset(kBase, "y + x + x")) == "2x+y");
  const Multiset x = unit(4, 0);
  CHECK(to_string(kBase, mu_sigma({x, parse_multiset(kBase, "x+y")})) == "2x+y");
  CHECK(mu_sigma({x}) == x);
  CHECK(to_string(kBase, mu_sigma({x, m})) == "3x+y");
  CHECK_THROWS_AS(mu_sigma({}), InputError);
  CHECK_THROWS_AS(parse_multiset(kBase, "w"), InputError);
  CHECK_THROWS_AS(parse_multiset(kBase, ""), InputError);
}

TEST_CASE("the simplex round") {
  const RoundState s = simplex_round(kBase);
  CHECK(s.facet_names() == std::vector<std::string>{"u", "x", "y", "z"});
  CHECK(vertex_names(s) == std::set<std::set<std::string>>{sset({"x", "y", "z"}), sset({"y", "z", "u"}),
                                                           sset({"z", "u", "x"}), sset({"u", "x", "y"})});
  const Hypergraph ht = round1_truncations();
  CHECK(tamed_constructs(s, ht).size() == enumerate_constructs(ht).size());
  const auto vs = tamed_constructions(s, ht);
  const auto plain = enumerate_constructions(ht);
  CHECK(std::set<Construct>(vs.begin(), vs.end()) == std::set<Construct>(plain.begin(), plain.end()));
  CHECK_THROWS_AS(make_state(kBase, {unit(4, 0), unit(4, 1)}, {{unit(4, 0)}}), InputError);
}

TEST_CASE("the worked example, first round") {
  const RoundState s1 = simplex_round(kBase);
  const Hypergraph ht = round1_truncations();
  const Hypergraph h = truncation_hypergraph(s1, ht);
  const Construct v = parse_construct(h, "z(y(x),u)");
  CHECK(v.is_construction());
  std::vector<std::string> sets;
  for (AtomSet y : psi(v).members) {
    if (y != h.carrier()) sets.push_back(format_set(h, y));
  }
  CHECK(sets == std::vector<std::string>{"{u}", "{x}", "{x,y}"});

  const RoundReport r = next_round(s1, ht);
  CHECK(r.next.facet_names() == std::vector<std::string>{"u", "x", "x+y", "y", "z"});
  CHECK(vertex_names(r.next) ==
        std::set<std::set<std::string>>{sset({"y", "z", "u"}), sset({"x", "z", "u"}), sset({"y", "x+y", "z"}),
                                        sset({"x", "x+y", "z"}), sset({"y", "x+y", "u"}), sset({"x", "x+y", "u"})});
  CHECK(r.coincidences.empty());
  CHECK(r.next.trace.size() == 1);
  check_constrs(s1, ht, r);
  check_rounds_grow(s1, r.next);
}

TEST_CASE("the worked example, second round") {
  const RoundState s2 = next_round(simplex_round(kBase), round1_truncations()).next;
  const Hypergraph ht = round2_truncations();
  const Hypergraph h = truncation_hypergraph(s2, ht);
  CHECK(is_tamed(s2, h, parse_construct(h, "{y,x+y}(x,z,u)")));
  CHECK_FALSE(is_tamed(s2, h, parse_construct(h, "x(u,x+y,y,z)")));

  const RoundReport r = next_round(s2, ht);
  // The drawn polytope, and the eight triples listed for the next round.
  CHECK(r.constructions.size() == 8);
  CHECK(r.next.facet_names() == std::vector<std::string>{"2x+y", "u", "x", "x+y", "y", "z"});
  CHECK(vertex_names(r.next) ==
        std::set<std::set<std::string>>{sset({"x", "z", "u"}), sset({"y", "z", "u"}), sset({"x+y", "y", "z"}),
                                        sset({"x+y", "y", "u"}), sset({"x+y", "2x+y", "z"}), sset({"x", "2x+y", "z"}),
                                        sset({"x+y", "2x+y", "u"}), sset({"x", "2x+y", "u"})});
  CHECK(r.next.trace.size() == 2);
  check_constrs(s2, ht, r);
  check_rounds_grow(s2, r.next);

  // {y,z}(x(x+y),u) flattens x+(x+y) to 2x+y.
  const Construct v = parse_construct(h, "{y,z}(x(x+y),u)");
  std::set<std::string> flattened;
  for (AtomSet y : psi(v).members) {
    if (y == h.carrier()) continue;
    std::vector<Multiset> family;
    for (unsigned i : y) family.push_back(s2.facets[i]);
    flattened.insert(to_string(kBase, mu_sigma(family)));
  }
  CHECK(flattened == sset({"x+y", "2x+y", "u"}));
}

TEST_CASE("degenerate and extreme truncation hypergraphs") {
  const RoundState s = simplex_round(kBase);
  const RoundReport bare = next_round(s, fixtures::simplex({"x", "y", "z", "u"}));
  CHECK(bare.next.facets == s.facets);
  CHECK(bare.constructions.size() == 4);

  const RoundReport full = next_round(s, fixtures::complete_graph({"x", "y", "z", "u"}));
  CHECK(full.next.facets.size() == 14);
  CHECK(full.constructions.size() == 24);
  CHECK(full.next.vertex_hypergraph.size() == 24);
  check_constrs(s, fixtures::complete_graph({"x", "y", "z", "u"}), full);
}

TEST_CASE("rejections") {
  const RoundState s = simplex_round(kBase);
  CHECK_THROWS_AS(next_round(s, make({"x", "y", "z"}, {{"x", "y", "z"}})), InputError);
  CHECK_THROWS_AS(next_round(s, make({"x", "y", "z", "u"}, {{"x", "y"}})), InputError);
  const RoundState s2 = next_round(s, round1_truncations()).next;
  const Hypergraph h2 = truncation_hypergraph(s2, round2_truncations());
  CHECK_THROWS_AS(tamed_vertices_below(s2, h2, parse_construct(h2, "x(u,x+y,y,z)")), InputError);
  const Construct face = parse_construct(h2, "{u,y,z}({x,x+y})");
  const auto below = tamed_vertices_below(s2, h2, face);
  std::set<Construct> expected;
  for (const auto& v : tamed_constructions(s2, h2)) {
    if (leq(h2, v, face)) expected.insert(v);
  }
  CHECK(std::set<Construct>(below.begin(), below.end()) == expected);
  // Roots {u,y} and {y,z}, each with the two orders of x and x+y.
  CHECK(below.size() == 4);
}

}  // TEST_SUITE
