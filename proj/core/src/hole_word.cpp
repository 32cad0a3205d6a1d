#include <algorithm>
#include <bit>
#include <cctype>

#include "hole_layout.hpp"
#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace detail {

Layout make_layout(const std::vector<LetterSet>& blocks) {
  Layout l;
  l.blocks = blocks;
  unsigned pos = 0;
  LetterSet acc = 0;
  for (LetterSet b : blocks) {
    l.start.push_back(pos);
    pos += static_cast<unsigned>(std::popcount(b));
    acc |= b;
    l.prefix.push_back(acc);
  }
  const unsigned gaps = blocks.empty() ? 0 : static_cast<unsigned>(blocks.size() - 1);
  const unsigned last_position = pos == 0 ? 0 : pos - 1;
  unsigned g = 0;
  while (g < gaps) {
    Layout::Zone z;
    z.first_gap = g;
    while (g + 1 < gaps && std::popcount(blocks[g + 1]) == 1) ++g;
    z.last_gap = g;
    z.first_pos = l.gap_after(z.first_gap);
    z.last_pos = l.start[z.last_gap + 1];
    z.whole = z.first_pos == 0 && z.last_pos == last_position;
    l.zones.push_back(z);
    ++g;
  }
  return l;
}

std::vector<LetterSet> blocks_of_chain(std::size_t n, const std::vector<LetterSet>& chain) {
  const LetterSet all = (LetterSet{1} << (n + 1)) - 1;
  std::vector<LetterSet> blocks;
  LetterSet prev = 0;
  for (LetterSet i : chain) {
    if (i == 0 || i == all || (i & ~all) != 0) throw InputError("chain member is not a proper non-empty letter set");
    if ((prev & ~i) != 0 || prev == i) throw InputError("letter sets do not form a strict chain");
    blocks.push_back(i & ~prev);
    prev = i;
  }
  blocks.push_back(all & ~prev);
  return blocks;
}

std::vector<LetterSet> blocks_of_word(std::size_t n, const HoleWord& w) {
  if (w.letters.size() != n + 1) {
    throw InputError("word has " + std::to_string(w.letters.size()) + " letters; expected " + std::to_string(n + 1));
  }
  std::vector<LetterSet> blocks;
  LetterSet used = 0;
  unsigned next_hole = 1;
  for (std::size_t p = 0; p < w.letters.size();) {
    const auto& letter = w.letters[p];
    if (!letter.hole) {
      if (letter.index < 1 || letter.index > n + 1) throw InputError("letter x" + std::to_string(letter.index) + " outside the alphabet");
      const LetterSet b = LetterSet{1} << (letter.index - 1);
      if (used & b) throw InputError("letter x" + std::to_string(letter.index) + " occurs more than once");
      used |= b;
      blocks.push_back(b);
      ++p;
      continue;
    }
    if (letter.index != next_hole) {
      throw InputError("hole blocks must be contiguous and numbered in order; found hole " + std::to_string(letter.index) +
                       " where hole " + std::to_string(next_hole) + " was due");
    }
    std::size_t q = p;
    while (q < w.letters.size() && w.letters[q].hole && w.letters[q].index == letter.index) ++q;
    if (letter.index > w.holes.size() || w.holes[letter.index - 1] == 0) {
      throw InputError("hole " + std::to_string(letter.index) + " has no letter set");
    }
    const LetterSet b = w.holes[letter.index - 1];
    if (static_cast<std::size_t>(std::popcount(b)) != q - p) {
      throw InputError("hole " + std::to_string(letter.index) + " spans " + std::to_string(q - p) + " positions but holds " +
                       std::to_string(std::popcount(b)) + " letters");
    }
    if (q - p < 2) throw InputError("a hole block needs at least two letters");
    if (used & b) throw InputError("hole " + std::to_string(letter.index) + " repeats a letter");
    used |= b;
    blocks.push_back(b);
    ++next_hole;
    p = q;
  }
  if (next_hole - 1 != w.holes.size()) throw InputError("letter sets given for holes that do not occur");
  if (used != (LetterSet{1} << (n + 1)) - 1) throw InputError("the blocks do not partition the alphabet");
  return blocks;
}

HoleWord skeleton_word(const Layout& l) {
  HoleWord w;
  unsigned hole = 0;
  for (LetterSet b : l.blocks) {
    if (std::popcount(b) == 1) {
      w.letters.push_back({false, static_cast<unsigned>(std::countr_zero(b)) + 1});
    } else {
      ++hole;
      w.holes.push_back(b);
      for (int k = 0; k < std::popcount(b); ++k) w.letters.push_back({true, hole});
    }
  }
  for (const auto& z : l.zones) {
    if (!z.whole) w.groups.push_back({z.first_pos, z.last_pos, true});
  }
  w.normalize();
  return w;
}

}  // namespace detail

void HoleWord::normalize() {
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return a.first != b.first ? a.first < b.first : a.last > b.last;
  });
}

namespace {

std::string subscript(unsigned v) {
  std::string digits = std::to_string(v);
  std::string out;
  for (char d : digits) out += std::string("\xE2\x82") + static_cast<char>(0x80 + (d - '0'));
  return out;
}

std::string letter_text(bool hole, unsigned index, WordStyle style) {
  if (style == WordStyle::ascii) return (hole ? "." : "x") + std::to_string(index);
  return (hole ? std::string("\xC2\xB7") : std::string("x")) + subscript(index);
}

}  // namespace

std::string to_string(const HoleWord& w, WordStyle style) {
  std::string out;
  for (unsigned p = 0; p < w.letters.size(); ++p) {
    std::vector<const HoleWord::Group*> open;
    std::vector<const HoleWord::Group*> close;
    for (const auto& g : w.groups) {
      if (g.first == p) open.push_back(&g);
      if (g.last == p) close.push_back(&g);
    }
    std::sort(open.begin(), open.end(), [](auto* a, auto* b) { return a->last > b->last; });
    std::sort(close.begin(), close.end(), [](auto* a, auto* b) { return a->first > b->first; });
    for (auto* g : open) out += (g->standard && style != WordStyle::classic) ? "[" : "(";
    out += letter_text(w.letters[p].hole, w.letters[p].index, style);
    for (auto* g : close) out += (g->standard && style != WordStyle::classic) ? "]" : ")";
  }
  for (std::size_t j = 0; j < w.holes.size(); ++j) {
    out += "; " + letter_text(true, static_cast<unsigned>(j + 1), style);
    out += style == WordStyle::classic ? "\xE2\x86\xA6{" : "={";
    bool first = true;
    for (unsigned i = 0; i < 32; ++i) {
      if (!((w.holes[j] >> i) & 1U)) continue;
      if (!first) out += ",";
      out += letter_text(false, i + 1, style);
      first = false;
    }
    out += "}";
  }
  return out;
}

namespace {

class HoleWordParser {
 public:
  explicit HoleWordParser(std::string_view text) : text_(text) {}

  HoleWord parse() {
    HoleWord w;
    std::vector<std::pair<unsigned, char>> open;
    while (true) {
      skip();
      if (done() || peek() == ';') break;
      const char c = peek();
      if (c == '(' || c == '[') {
        ++pos_;
        open.emplace_back(static_cast<unsigned>(w.letters.size()), c);
      } else if (c == ')' || c == ']') {
        ++pos_;
        if (open.empty() || open.back().second != (c == ')' ? '(' : '[')) fail("unbalanced brackets");
        const unsigned first = open.back().first;
        open.pop_back();
        if (w.letters.size() < first + 2) fail("a group must hold at least two letters");
        const unsigned last = static_cast<unsigned>(w.letters.size() - 1);
        for (const auto& g : w.groups) {
          if (g.first == first && g.last == last) fail("repeated group");
        }
        w.groups.push_back({first, last, c == ']'});
      } else {
        auto [hole, index] = letter();
        w.letters.push_back({hole, index});
      }
    }
    if (!open.empty()) fail("unclosed bracket");
    while (!done()) {
      skip();
      if (done()) break;
      if (peek() != ';') fail("expected ';'");
      ++pos_;
      skip();
      auto [hole, index] = letter();
      if (!hole) fail("expected a hole before its letter set");
      skip();
      if (accept("=") || accept("\xE2\x86\xA6")) {
      } else {
        fail("expected '=' after a hole");
      }
      skip();
      if (!accept("{")) fail("expected '{'");
      LetterSet set = 0;
      while (true) {
        skip();
        if (accept("}")) break;
        auto [h, i] = letter();
        if (h) fail("a hole cannot hold a hole");
        if (i < 1 || i > 31) fail("letter index out of range");
        set |= LetterSet{1} << (i - 1);
        skip();
        accept(",");
      }
      if (w.holes.size() < index) w.holes.resize(index, 0);
      if (w.holes[index - 1] != 0) fail("hole given two letter sets");
      w.holes[index - 1] = set;
    }
    w.normalize();
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("word syntax error at offset " + std::to_string(pos_) + ": " + why);
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  unsigned number() {
    unsigned v = 0;
    bool any = false;
    while (!done()) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + static_cast<unsigned>(peek() - '0');
        ++pos_;
      } else if (text_.substr(pos_, 2) == "\xE2\x82" && pos_ + 2 < text_.size() &&
                 static_cast<unsigned char>(text_[pos_ + 2]) >= 0x80 && static_cast<unsigned char>(text_[pos_ + 2]) <= 0x89) {
        v = v * 10 + static_cast<unsigned>(static_cast<unsigned char>(text_[pos_ + 2]) - 0x80);
        pos_ += 3;
      } else {
        break;
      }
      any = true;
      if (v > 1000) fail("index too large");
    }
    if (!any || v == 0) fail("expected a positive index");
    return v;
  }
  std::pair<bool, unsigned> letter() {
    if (accept("x")) return {false, number()};
    if (accept(".") || accept("\xC2\xB7")) return {true, number()};
    fail("expected a letter or a hole");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HoleWord parse_hole_word(std::string_view text) { return HoleWordParser(text).parse(); }

HoleWord standardize(std::size_t n, const std::vector<LetterSet>& chain) {
  return detail::skeleton_word(detail::make_layout(detail::blocks_of_chain(n, chain)));
}

}  // namespace hyperpoly
