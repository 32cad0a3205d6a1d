#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperpoly/truncation.hpp"

namespace hyperpoly {

// Subsets of the letters x1..x_{n+1}; bit i stands for x_{i+1}.
using LetterSet = std::uint32_t;

// The two-round construction over n+1 letters: the simplex truncated by the
// complete graph, then by the chains of subsets differing in one letter.
struct PbaSetup {
  std::size_t n = 0;
  RoundState round1;
  Hypergraph round1_truncations;
  RoundState round2;
  Hypergraph round2_truncations;
  // Letter set summed by each round-two facet, by facet index.
  std::vector<LetterSet> facet_letters;

  unsigned facet_of(LetterSet letters) const;
  // The chain x_I1, x_I1+x_I2, ... of a permutation given as letter indices.
  AtomSet chain_of(const std::vector<unsigned>& permutation) const;
};

PbaSetup pba_setup(std::size_t n, const Limits& limits = {});

// A word over determined letters and numbered holes, with a laminar family of
// groups and the letter set of each hole.
struct HoleWord {
  struct Letter {
    bool hole = false;
    unsigned index = 0;  // 1-based letter number, or 1-based hole number
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
  };
  // Positions first..last, inclusive. Standard groups come from the
  // skeleton of the word alone.
  struct Group {
    unsigned first = 0;
    unsigned last = 0;
    bool standard = false;
    friend bool operator==(const Group&, const Group&) = default;
    friend auto operator<=>(const Group&, const Group&) = default;
  };

  std::vector<Letter> letters;
  std::vector<Group> groups;
  std::vector<LetterSet> holes;

  // Sorts groups outermost first.
  void normalize();
  friend bool operator==(const HoleWord&, const HoleWord&) = default;
  friend auto operator<=>(const HoleWord&, const HoleWord&) = default;
};

enum class WordStyle {
  ascii,    // x1 .1 [ ] ( ) ; .1={x2,x3}
  unicode,  // x₁ ·₁ [ ] ( ) ; ·₁={x₂,x₃}
  classic   // x₁ ·₁, standard groups in round brackets, ; ·₁↦{x₂,x₃}
};

std::string to_string(const HoleWord& w, WordStyle style = WordStyle::unicode);
// Reads any of the styles. Groups written with square brackets are marked
// standard; the marking is rechecked on decoding.
HoleWord parse_hole_word(std::string_view text);

// The skeleton word of a chain of letter sets I1 < ... < Ik, with its
// standard groups.
HoleWord standardize(std::size_t n, const std::vector<LetterSet>& chain);

HoleWord encode(const PbaSetup& setup, const Construct& c);
// Throws InputError naming the violated rule.
Construct decode(const PbaSetup& setup, const HoleWord& w);

// Order through decoding.
bool word_leq(const PbaSetup& setup, const HoleWord& a, const HoleWord& b);
// Words reachable from w by dropping a non-standard group, or by merging the
// blocks around every gap of one zone that no non-standard group encloses.
std::set<HoleWord> word_upset_by_rules(const PbaSetup& setup, const HoleWord& w);

struct PbaCensus {
  std::size_t faces = 0;
  std::size_t vertices = 0;
  std::vector<std::size_t> f_vector;
  // Facets grouped by their number of vertices.
  std::map<std::size_t, std::size_t> facets_by_vertex_count;
  struct Facet {
    std::string construct;
    std::string word;
    std::size_t vertices = 0;
  };
  std::vector<Facet> facets;
};

PbaCensus pba_census(const PbaSetup& setup, WordStyle style = WordStyle::unicode);

}  // namespace hyperpoly
