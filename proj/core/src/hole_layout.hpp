#pragma once

#include <vector>

#include "hyperpoly/pba.hpp"

namespace hyperpoly::detail {

// Positions, gaps and zones of a block decomposition of the letters. Gap j
// separates block j from block j+1; a zone is a maximal run of gaps joined
// through single-letter blocks.
struct Layout {
  struct Zone {
    unsigned first_gap = 0;
    unsigned last_gap = 0;
    unsigned first_pos = 0;
    unsigned last_pos = 0;
    bool whole = false;
  };

  std::vector<LetterSet> blocks;
  std::vector<unsigned> start;
  std::vector<LetterSet> prefix;  // union of blocks 0..j, the set behind gap j
  std::vector<Zone> zones;

  // The gap sits right after this position.
  unsigned gap_after(unsigned gap) const { return start[gap + 1] - 1; }
};

Layout make_layout(const std::vector<LetterSet>& blocks);
std::vector<LetterSet> blocks_of_chain(std::size_t n, const std::vector<LetterSet>& chain);
// Blocks read off a word; throws InputError on a malformed letter pattern.
std::vector<LetterSet> blocks_of_word(std::size_t n, const HoleWord& w);
HoleWord skeleton_word(const Layout& l);

}  // namespace hyperpoly::detail
