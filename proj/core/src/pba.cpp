#include "hyperpoly/pba.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "hole_layout.hpp"
#include "hyperpoly/order.hpp"

namespace hyperpoly {

using detail::Layout;

unsigned PbaSetup::facet_of(LetterSet letters) const {
  auto it = std::find(facet_letters.begin(), facet_letters.end(), letters);
  if (it == facet_letters.end()) throw InputError("no facet sums this letter set");
  return static_cast<unsigned>(it - facet_letters.begin());
}

AtomSet PbaSetup::chain_of(const std::vector<unsigned>& permutation) const {
  AtomSet out;
  LetterSet acc = 0;
  for (std::size_t k = 0; k + 1 < permutation.size(); ++k) {
    acc |= LetterSet{1} << permutation[k];
    out |= AtomSet::single(facet_of(acc));
  }
  return out;
}

PbaSetup pba_setup(std::size_t n, const Limits& limits) {
  if (n < 2) throw InputError("the construction needs n >= 2");
  if (n > limits.max_pba_n) {
    throw GuardError("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limits.max_pba_n) +
                     " (raise it with --max-n)");
  }
  PbaSetup s;
  s.n = n;
  std::vector<std::string> base;
  for (std::size_t i = 1; i <= n + 1; ++i) base.push_back("x" + std::to_string(i));
  s.round1 = simplex_round(base);
  {
    const auto names = s.round1.facet_names();
    std::vector<std::vector<std::string>> edges;
    for (std::size_t i = 0; i < names.size(); ++i) {
      edges.push_back({names[i]});
      for (std::size_t j = i + 1; j < names.size(); ++j) edges.push_back({names[i], names[j]});
    }
    s.round1_truncations = Hypergraph::from_labels(names, edges);
  }
  Limits wide = limits;
  wide.max_carrier = std::max(wide.max_carrier, n + 1);
  RoundReport r = next_round(s.round1, s.round1_truncations, wide);
  s.round2 = std::move(r.next);

  for (const auto& f : s.round2.facets) {
    LetterSet l = 0;
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
      if (f.counts[i] > 1) throw VerificationError("round-two facet with a repeated letter");
      if (f.counts[i]) l |= LetterSet{1} << i;
    }
    s.facet_letters.push_back(l);
  }
  const std::size_t expected_facets = (std::size_t{1} << (n + 1)) - 2;
  if (s.facet_letters.size() != expected_facets) throw VerificationError("round-two facets are not the proper subsets");
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n + 1; ++i) factorial *= i;
  if (s.round2.vertex_hypergraph.size() != factorial) throw VerificationError("round-two vertices are not the permutations");
  std::vector<unsigned> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<AtomSet> chains;
  do {
    chains.push_back(s.chain_of(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(chains.begin(), chains.end());
  if (chains != s.round2.vertex_hypergraph) throw VerificationError("round-two vertices are not the chains x_sigma");

  const auto names = s.round2.facet_names();
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < names.size(); ++i) {
    edges.push_back({names[i]});
    for (std::size_t j = 0; j < names.size(); ++j) {
      const LetterSet a = s.facet_letters[i];
      const LetterSet b = s.facet_letters[j];
      if ((a & ~b) == 0 && std::popcount(b & ~a) == 1) edges.push_back({names[i], names[j]});
    }
  }
  s.round2_truncations = Hypergraph::from_labels(names, edges);
  return s;
}

namespace {

std::vector<LetterSet> chain_of_root(const PbaSetup& s, const Construct& c) {
  const AtomSet y = s.round2_truncations.carrier() - c.root_label();
  std::vector<LetterSet> chain;
  for (unsigned i : y) chain.push_back(s.facet_letters[i]);
  std::sort(chain.begin(), chain.end(), [](LetterSet a, LetterSet b) { return std::popcount(a) < std::popcount(b); });
  return chain;
}

unsigned gap_of_facet(const Layout& l, const PbaSetup& s, unsigned facet) {
  const LetterSet letters = s.facet_letters[facet];
  for (unsigned g = 0; g + 1 < l.blocks.size(); ++g) {
    if (l.prefix[g] == letters) return g;
  }
  throw VerificationError("facet is not a gap of the word");
}

// Groups for the construct t over the positions first..last, whose gaps it spans.
void emit_groups(const Layout& l, const PbaSetup& s, const Tree& t, unsigned first, unsigned last, HoleWord& w) {
  std::vector<unsigned> cuts;
  for (unsigned f : t.label) cuts.push_back(l.gap_after(gap_of_facet(l, s, f)));
  std::sort(cuts.begin(), cuts.end());
  unsigned from = first;
  cuts.push_back(last);
  for (unsigned cut : cuts) {
    if (cut > from) {
      // A piece of several letters is handled by the child spanning its gaps.
      const Tree* child = nullptr;
      for (const auto& c : t.children) {
        const unsigned g = l.gap_after(gap_of_facet(l, s, c.span().least()));
        if (g >= from && g < cut) child = &c;
      }
      if (!child) throw VerificationError("no child covers a piece of the word");
      w.groups.push_back({from, cut, false});
      emit_groups(l, s, *child, from, cut, w);
    }
    from = cut + 1;
  }
}

struct Decoded {
  Layout layout;
  std::vector<HoleWord::Group> zone_groups;
};

Tree tree_of_group(const Layout& l, const PbaSetup& s, const HoleWord& w, unsigned first, unsigned last) {
  // Maximal groups strictly inside first..last.
  std::vector<HoleWord::Group> inner;
  for (const auto& g : w.groups) {
    if (g.first >= first && g.last <= last && !(g.first == first && g.last == last)) {
      const bool covered = std::any_of(w.groups.begin(), w.groups.end(), [&](const HoleWord::Group& o) {
        return o.first >= first && o.last <= last && !(o.first == first && o.last == last) && o.first <= g.first &&
               o.last >= g.last && !(o == g);
      });
      if (!covered) inner.push_back(g);
    }
  }
  Tree t;
  std::vector<unsigned> boundaries;
  unsigned p = first;
  while (p <= last) {
    auto it = std::find_if(inner.begin(), inner.end(), [&](const HoleWord::Group& g) { return g.first == p; });
    const unsigned end = it == inner.end() ? p : it->last;
    if (it != inner.end()) t.children.push_back(tree_of_group(l, s, w, it->first, it->last));
    if (end < last) boundaries.push_back(end);
    p = end + 1;
  }
  for (unsigned b : boundaries) {
    bool found = false;
    for (unsigned g = 0; g + 1 < l.blocks.size(); ++g) {
      if (l.gap_after(g) == b) {
        t.label |= AtomSet::single(s.facet_of(l.prefix[g]));
        found = true;
      }
    }
    if (!found) throw InputError("a group splits a hole block");
  }
  return t;
}

bool inside(const HoleWord::Group& g, unsigned first, unsigned last) { return g.first >= first && g.last <= last; }

}  // namespace

HoleWord encode(const PbaSetup& s, const Construct& c) {
  const Hypergraph& h = s.round2_truncations;
  if (c.span() != h.carrier()) throw InputError("construct is not over the round-two facets");
  if (!is_tamed(s.round2, h, c)) throw InputError("construct is not tamed by any x_sigma");
  if (c.root_label() == h.carrier()) {
    HoleWord w;
    const LetterSet all = (LetterSet{1} << (s.n + 1)) - 1;
    w.letters.assign(s.n + 1, HoleWord::Letter{true, 1});
    w.holes.push_back(all);
    return w;
  }
  const auto chain = chain_of_root(s, c);
  const Layout l = detail::make_layout(detail::blocks_of_chain(s.n, chain));
  HoleWord w = detail::skeleton_word(l);
  for (const auto& child : c.tree().children) {
    const unsigned g = gap_of_facet(l, s, child.span().least());
    auto zone = std::find_if(l.zones.begin(), l.zones.end(), [&](const Layout::Zone& z) {
      return g >= z.first_gap && g <= z.last_gap;
    });
    if (zone == l.zones.end()) throw VerificationError("child construct lies in no zone");
    emit_groups(l, s, child, zone->first_pos, zone->last_pos, w);
  }
  w.normalize();
  return w;
}

Construct decode(const PbaSetup& s, const HoleWord& w) {
  const Hypergraph& h = s.round2_truncations;
  const auto blocks = detail::blocks_of_word(s.n, w);
  if (blocks.size() == 1) {
    if (!w.groups.empty()) throw InputError("a word made of a single hole block takes no groups");
    return top_construct(h);
  }
  const Layout l = detail::make_layout(blocks);
  const HoleWord skeleton = detail::skeleton_word(l);
  for (const auto& z : skeleton.groups) {
    const bool present = std::any_of(w.groups.begin(), w.groups.end(), [&](const HoleWord::Group& g) {
      return g.first == z.first && g.last == z.last;
    });
    if (!present) {
      throw InputError("missing standard bracket around positions " + std::to_string(z.first + 1) + ".." +
                       std::to_string(z.last + 1) + "; the standard form is " + to_string(skeleton, WordStyle::ascii));
    }
  }
  for (const auto& g : w.groups) {
    const bool is_zone = std::any_of(skeleton.groups.begin(), skeleton.groups.end(), [&](const HoleWord::Group& z) {
      return z.first == g.first && z.last == g.last;
    });
    if (g.standard && !is_zone) throw InputError("square brackets mark a group that is not standard");
    const bool scoped = std::any_of(l.zones.begin(), l.zones.end(), [&](const Layout::Zone& z) {
      return inside(g, z.first_pos, z.last_pos);
    });
    if (!scoped) {
      throw InputError("group around positions " + std::to_string(g.first + 1) + ".." + std::to_string(g.last + 1) +
                       " lies outside every standard bracket of " + to_string(skeleton, WordStyle::ascii));
    }
  }
  std::vector<LetterSet> chain(l.prefix.begin(), l.prefix.end() - 1);
  Tree t;
  t.label = h.carrier();
  for (LetterSet i : chain) t.label -= AtomSet::single(s.facet_of(i));
  for (const auto& z : l.zones) t.children.push_back(tree_of_group(l, s, w, z.first_pos, z.last_pos));
  Construct c = validate_construct(h, std::move(t));
  if (!is_tamed(s.round2, h, c)) throw InputError("decoded construct is not tamed");
  return c;
}

bool word_leq(const PbaSetup& s, const HoleWord& a, const HoleWord& b) {
  return leq(s.round2_truncations, decode(s, a), decode(s, b));
}

std::set<HoleWord> word_upset_by_rules(const PbaSetup& s, const HoleWord& w) {
  decode(s, w);
  std::set<HoleWord> seen{w};
  std::deque<HoleWord> queue{w};
  while (!queue.empty()) {
    const HoleWord cur = queue.front();
    queue.pop_front();
    std::vector<HoleWord> next;
    for (std::size_t i = 0; i < cur.groups.size(); ++i) {
      if (cur.groups[i].standard) continue;
      HoleWord up = cur;
      up.groups.erase(up.groups.begin() + static_cast<std::ptrdiff_t>(i));
      next.push_back(std::move(up));
    }
    // Contracting the root with the tree of one zone removes every gap of
    // that zone not enclosed by a non-standard group, merging the blocks on
    // both sides. Several gaps can go at once, so this is coarser than an
    // elementary refinement.
    const auto blocks = detail::blocks_of_word(s.n, cur);
    const Layout l = detail::make_layout(blocks);
    for (const auto& z : l.zones) {
      std::vector<bool> removed(blocks.size(), false);
      for (unsigned g = z.first_gap; g <= z.last_gap; ++g) {
        const unsigned p = l.gap_after(g);
        removed[g] = std::none_of(cur.groups.begin(), cur.groups.end(), [&](const HoleWord::Group& grp) {
          return !grp.standard && grp.first <= p && p + 1 <= grp.last;
        });
      }
      std::vector<LetterSet> merged{blocks[0]};
      for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
        if (removed[j]) {
          merged.back() |= blocks[j + 1];
        } else {
          merged.push_back(blocks[j + 1]);
        }
      }
      HoleWord up = detail::skeleton_word(detail::make_layout(merged));
      const std::vector<HoleWord::Group> zones = up.groups;
      for (const auto& g : cur.groups) {
        if (g.standard) continue;
        const bool is_zone = std::any_of(zones.begin(), zones.end(), [&](const HoleWord::Group& n) {
          return n.first == g.first && n.last == g.last;
        });
        if (!is_zone) up.groups.push_back(g);
      }
      up.normalize();
      next.push_back(std::move(up));
    }
    for (auto& n : next) {
      if (seen.insert(n).second) queue.push_back(std::move(n));
    }
  }
  return seen;
}

PbaCensus pba_census(const PbaSetup& s, WordStyle style) {
  const Hypergraph& h = s.round2_truncations;
  PbaCensus c;
  const auto faces = tamed_constructs(s.round2, h);
  const auto vertices = tamed_constructions(s.round2, h);
  c.faces = faces.size();
  c.vertices = vertices.size();
  c.f_vector.assign(s.n + 1, 0);
  for (const auto& f : faces) {
    const std::size_t dim = s.n + 1 - f.node_count();
    ++c.f_vector.at(dim);
    if (f.node_count() != 2) continue;
    std::size_t below = 0;
    for (const auto& v : vertices) {
      if (leq(h, v, f)) ++below;
    }
    ++c.facets_by_vertex_count[below];
    c.facets.push_back({to_string(h, f), to_string(encode(s, f), style), below});
  }
  return c;
}

}  // namespace hyperpoly
