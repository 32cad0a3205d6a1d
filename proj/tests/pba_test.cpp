#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "hyperpoly/order.hpp"
#include "hyperpoly/pba.hpp"

using namespace hyperpoly;

namespace {

const PbaSetup& setup(std::size_t n) {
  static std::map<std::size_t, PbaSetup> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, pba_setup(n)).first;
  return it->second;
}

LetterSet letters(std::initializer_list<unsigned> xs) {
  LetterSet out = 0;
  for (unsigned x : xs) out |= LetterSet{1} << (x - 1);
  return out;
}

// Root is everything but the named facets; each named facet is a leaf child.
Construct with_leaves(const PbaSetup& s, std::initializer_list<std::string_view> leaves) {
  const Hypergraph& h = s.round2_truncations;
  Tree t;
  AtomSet removed;
  for (auto name : leaves) {
    const unsigned a = h.atom(name);
    removed |= AtomSet::single(a);
    t.children.push_back({AtomSet::single(a), {}});
  }
  t.label = h.carrier() - removed;
  return validate_construct(h, t);
}

std::string ascii(const HoleWord& w) { return to_string(w, WordStyle::ascii); }

using Interval = std::pair<unsigned, unsigned>;

struct SigmaWord {
  std::vector<HoleWord::Letter> letters;
  std::vector<LetterSet> holes;
  std::set<Interval> zones;
  std::set<Interval> groups;
};

// Groups for the node t over positions lo..hi, reading facet gaps off sigma.
void parenthesize(const PbaSetup& s, const Tree& t, unsigned lo, unsigned hi, std::set<Interval>& groups) {
  std::vector<unsigned> cuts;
  for (unsigned f : t.label) cuts.push_back(static_cast<unsigned>(std::popcount(s.facet_letters[f])));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(hi + 1);
  unsigned from = lo;
  for (unsigned cut : cuts) {
    if (cut - from >= 2) {
      groups.insert({from, cut - 1});
      const Tree* child = nullptr;
      for (const auto& c : t.children) {
        const unsigned g = static_cast<unsigned>(std::popcount(s.facet_letters[c.span().least()]));
        if (g > from && g < cut) child = &c;
      }
      REQUIRE(child);
      parenthesize(s, *child, from, cut - 1, groups);
    }
    from = cut;
  }
}

// The word of t read through the letter order sigma, which must list every
// chain member of the root complement as a prefix.
SigmaWord word_via(const PbaSetup& s, const Construct& t, const std::vector<unsigned>& sigma) {
  const unsigned total = static_cast<unsigned>(s.n + 1);
  const AtomSet y = s.round2_truncations.carrier() - t.root_label();
  std::vector<unsigned> sizes{0};
  for (unsigned f : y) sizes.push_back(static_cast<unsigned>(std::popcount(s.facet_letters[f])));
  sizes.push_back(total);
  std::sort(sizes.begin(), sizes.end());

  SigmaWord out;
  out.letters.resize(total);
  for (std::size_t b = 0; b + 1 < sizes.size(); ++b) {
    const unsigned from = sizes[b];
    const unsigned to = sizes[b + 1];
    if (to - from == 1) {
      out.letters[from] = {false, sigma[from] + 1};
      continue;
    }
    LetterSet block = 0;
    for (unsigned p = from; p < to; ++p) block |= LetterSet{1} << sigma[p];
    out.holes.push_back(block);
    for (unsigned p = from; p < to; ++p) out.letters[p] = {true, static_cast<unsigned>(out.holes.size())};
  }

  // Gap g sits between positions g-1 and g; chain gaps one letter apart form a zone.
  std::vector<unsigned> gaps(sizes.begin() + 1, sizes.end() - 1);
  std::size_t i = 0;
  while (i < gaps.size()) {
    std::size_t j = i;
    while (j + 1 < gaps.size() && gaps[j + 1] == gaps[j] + 1) ++j;
    const Interval zone{gaps[i] - 1, gaps[j]};
    const Tree* child = nullptr;
    for (const auto& c : t.tree().children) {
      const unsigned g = static_cast<unsigned>(std::popcount(s.facet_letters[c.span().least()]));
      if (g >= gaps[i] && g <= gaps[j]) child = &c;
    }
    REQUIRE(child);
    if (zone != Interval{0, total - 1}) {
      out.zones.insert(zone);
      out.groups.insert(zone);
    }
    parenthesize(s, *child, zone.first, zone.second, out.groups);
    i = j + 1;
  }
  return out;
}

bool sigma_fits(const PbaSetup& s, const Construct& t, const std::vector<unsigned>& sigma) {
  const AtomSet y = s.round2_truncations.carrier() - t.root_label();
  for (unsigned f : y) {
    const unsigned k = static_cast<unsigned>(std::popcount(s.facet_letters[f]));
    LetterSet prefix = 0;
    for (unsigned p = 0; p < k; ++p) prefix |= LetterSet{1} << sigma[p];
    if (prefix != s.facet_letters[f]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("pba") {
  TEST_CASE("setup sizes") {
    const auto& s2 = setup(2);
    CHECK(s2.round2.facets.size() == 6);
    CHECK(s2.round2.vertex_hypergraph.size() == 6);
    CHECK(s2.round2.facet_names() ==
          std::vector<std::string>{"x1", "x1+x2", "x1+x3", "x2", "x2+x3", "x3"});
    const auto& s3 = setup(3);
    CHECK(s3.round2.facets.size() == 14);
    CHECK(s3.round2.vertex_hypergraph.size() == 24);
    CHECK_THROWS_AS(pba_setup(1), InputError);
    CHECK_THROWS_AS(pba_setup(5), GuardError);
  }

  TEST_CASE("round-two vertices are the permutation chains") {
    const auto& s = setup(3);
    std::vector<unsigned> perm{0, 1, 2, 3};
    std::set<AtomSet> chains;
    do {
      chains.insert(s.chain_of(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(chains == std::set<AtomSet>(s.round2.vertex_hypergraph.begin(), s.round2.vertex_hypergraph.end()));
  }

  TEST_CASE("standardization of a chain") {
    // x9 | x2 x4 x8 | x3 | x1 x7 | x6 | x5 x10
    std::vector<LetterSet> chain;
    LetterSet acc = 0;
    for (LetterSet b : {letters({9}), letters({2, 4, 8}), letters({3}), letters({1, 7}), letters({6})}) {
      acc |= b;
      chain.push_back(acc);
    }
    CHECK(ascii(standardize(9, chain)) == "[x9.1].1[.1x3.2][.2x6.3].3; .1={x2,x4,x8}; .2={x1,x7}; .3={x5,x10}");
    CHECK(ascii(standardize(3, {})) == ".1.1.1.1; .1={x1,x2,x3,x4}");
    CHECK(ascii(standardize(3, {letters({2}), letters({2, 4}), letters({1, 2, 4})})) == "x2x4x1x3");
    CHECK(ascii(standardize(3, {letters({1, 2})})) == ".1[.1.2].2; .1={x1,x2}; .2={x3,x4}");
  }

  TEST_CASE("encode examples") {
    const auto& s = setup(3);
    const Construct two_sided = with_leaves(s, {"x1", "x1+x2+x3"});
    CHECK(ascii(encode(s, two_sided)) == "[x1.1][.1x4]; .1={x2,x3}");
    CHECK(to_string(encode(s, two_sided), WordStyle::classic) ==
          "(x₁·₁)(·₁x₄); ·₁↦{x₂,x₃}");

    const Construct octagon = with_leaves(s, {"x1+x2"});
    CHECK(to_string(encode(s, octagon)) ==
          "·₁[·₁·₂]·₂; ·₁={x₁,x₂}; ·₂={x₃,x₄}");

    const Hypergraph& h = s.round2_truncations;
    auto leaf = [&](std::string_view name) { return Tree{AtomSet::single(h.atom(name)), {}}; };
    Tree below = leaf("x1+x2");
    below.children = {leaf("x1"), leaf("x1+x2+x3")};
    // The root complement is a full chain, so only the vertex itself is left.
    const Construct vertex = validate_construct(h, Tree{h.carrier() - below.span(), {below}});
    CHECK(ascii(encode(s, vertex)) == "(x1x2)(x3x4)");
    CHECK(decode(s, parse_hole_word("(x1x2)(x3x4)")) == vertex);
  }

  TEST_CASE("decode accepts every style") {
    const auto& s = setup(3);
    const Construct two_sided = with_leaves(s, {"x1", "x1+x2+x3"});
    CHECK(decode(s, parse_hole_word("[x1.1][.1x4]; .1={x2,x3}")) == two_sided);
    CHECK(decode(s, parse_hole_word("(x1.1)(.1x4); .1={x2,x3}")) == two_sided);
    CHECK(decode(s, parse_hole_word("(x₁·₁)(·₁x₄); ·₁↦{x₂,x₃}")) ==
          two_sided);
    const Construct octagon = with_leaves(s, {"x1+x2"});
    CHECK(decode(s, parse_hole_word("·₁(·₁·₂)·₂; ·₁↦{x₁,x₂}; "
                                    "·₂↦{x₃,x₄}")) == octagon);
  }

  TEST_CASE("decode rejects malformed words") {
    const auto& s = setup(3);
    try {
      (void)decode(s, parse_hole_word("(x1x2)(.1.1); .1={x3,x4}"));
      FAIL("accepted a word without its standard bracket");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("missing standard bracket") != std::string::npos);
      CHECK(std::string(e.what()).find("[x1x2.1].1") != std::string::npos);
    }
    CHECK_THROWS_AS(decode(s, parse_hole_word("x1x1x2x3")), InputError);
    CHECK_THROWS_AS(decode(s, parse_hole_word("x1x2x3")), InputError);
    CHECK_THROWS_AS(decode(s, parse_hole_word(".1.1x3x4; .1={x1,x3}")), InputError);
    CHECK_THROWS_AS(decode(s, parse_hole_word("[x1x2]x3x4")), InputError);
    CHECK_THROWS_AS(parse_hole_word("(x1x2"), InputError);
    CHECK_THROWS_AS(parse_hole_word("(x1)x2"), InputError);
  }

  TEST_CASE("order examples") {
    const auto& s = setup(3);
    const HoleWord low = parse_hole_word(".1[(.1x3)x4]; .1={x1,x2}");
    const std::vector<HoleWord> above{
        parse_hole_word(".1[.1x3x4]; .1={x1,x2}"),
        parse_hole_word(".1[.1.2].2; .1={x1,x2}; .2={x3,x4}"),
    };
    const auto up = word_upset_by_rules(s, low);
    for (const auto& w : above) {
      CHECK(word_leq(s, low, w));
      CHECK_FALSE(word_leq(s, w, low));
      CHECK(up.count(encode(s, decode(s, w))) == 1);
    }
    const HoleWord left = parse_hole_word("[x1.1].1.1; .1={x2,x3,x4}");
    const HoleWord top = parse_hole_word(".1.1.1.1; .1={x1,x2,x3,x4}");
    CHECK(word_leq(s, left, top));
    CHECK(word_upset_by_rules(s, left).count(top) == 1);
  }

  TEST_CASE("encode and decode are inverse bijections") {
    for (std::size_t n : {2, 3}) {
      const auto& s = setup(n);
      const auto faces = tamed_constructs(s.round2, s.round2_truncations);
      std::set<HoleWord> words;
      for (const auto& t : faces) {
        const HoleWord w = encode(s, t);
        CHECK(decode(s, w) == t);
        words.insert(w);
        for (auto style : {WordStyle::ascii, WordStyle::unicode}) CHECK(parse_hole_word(to_string(w, style)) == w);
        // Classic text drops the standard marking, which decoding restores.
        CHECK(encode(s, decode(s, parse_hole_word(to_string(w, WordStyle::classic)))) == w);
      }
      CHECK(words.size() == faces.size());
    }
  }

  TEST_CASE("encode does not depend on the letter order") {
    for (std::size_t n : {2, 3}) {
      const auto& s = setup(n);
      std::vector<unsigned> base(n + 1);
      std::iota(base.begin(), base.end(), 0U);
      for (const auto& t : tamed_constructs(s.round2, s.round2_truncations)) {
        const HoleWord w = encode(s, t);
        std::set<Interval> groups;
        std::set<Interval> zones;
        for (const auto& g : w.groups) {
          groups.insert({g.first, g.last});
          if (g.standard) zones.insert({g.first, g.last});
        }
        std::vector<unsigned> sigma = base;
        std::size_t fitting = 0;
        do {
          if (!sigma_fits(s, t, sigma)) continue;
          ++fitting;
          const SigmaWord v = word_via(s, t, sigma);
          CHECK(v.letters == w.letters);
          CHECK(v.holes == w.holes);
          CHECK(v.groups == groups);
          CHECK(v.zones == zones);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(fitting >= 1);
      }
    }
  }

  TEST_CASE("the skeleton of an encoded word is its standardization") {
    const auto& s = setup(3);
    for (const auto& t : tamed_constructs(s.round2, s.round2_truncations)) {
      HoleWord w = encode(s, t);
      std::erase_if(w.groups, [](const HoleWord::Group& g) { return !g.standard; });
      std::vector<LetterSet> chain;
      for (unsigned f : s.round2_truncations.carrier() - t.root_label()) chain.push_back(s.facet_letters[f]);
      std::sort(chain.begin(), chain.end(), [](LetterSet a, LetterSet b) { return std::popcount(a) < std::popcount(b); });
      CHECK(standardize(s.n, chain) == w);
    }
  }

  TEST_CASE("rewriting rules generate the order") {
    for (std::size_t n : {2, 3}) {
      const auto& s = setup(n);
      const Hypergraph& h = s.round2_truncations;
      const auto faces = tamed_constructs(s.round2, h);
      for (const auto& a : faces) {
        std::set<HoleWord> expected;
        for (const auto& b : faces) {
          if (leq(h, a, b)) expected.insert(encode(s, b));
        }
        const auto up = word_upset_by_rules(s, encode(s, a));
        CHECK(up == expected);
      }
    }
  }

  TEST_CASE("census of the three-dimensional case") {
    const auto c = pba_census(setup(3));
    CHECK(c.faces == 363);
    CHECK(c.vertices == 120);
    CHECK(c.f_vector == std::vector<std::size_t>{120, 180, 62, 1});
    CHECK(c.facets_by_vertex_count == std::map<std::size_t, std::size_t>{{4, 24}, {5, 24}, {8, 6}, {12, 8}});
    CHECK(c.facets.size() == 62);
    const auto c2 = pba_census(setup(2));
    CHECK(c2.vertices == 12);
    CHECK(c2.f_vector == std::vector<std::size_t>{12, 12, 1});
  }
}
