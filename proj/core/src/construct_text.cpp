#include <cctype>

#include "hyperpoly/construct.hpp"
#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

class TreeParser {
 public:
  TreeParser(const Hypergraph& h, std::string_view text) : h_(h), text_(text) {}

  Tree parse() {
    Tree t = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("construct syntax error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool label_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' && c != '(' && c != ')' && c != ',';
  }

  unsigned label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an atom label");
    return h_.atom(text_.substr(start, pos_ - start));
  }

  AtomSet decoration() {
    if (accept('{')) {
      AtomSet s;
      if (accept('}')) return s;
      do {
        const unsigned a = label();
        if (s.contains(a)) fail("repeated atom in decoration");
        s |= AtomSet::single(a);
      } while (accept(','));
      if (!accept('}')) fail("expected '}'");
      return s;
    }
    return AtomSet::single(label());
  }

  Tree node() {
    Tree t{decoration(), {}};
    if (accept('(')) {
      do {
        t.children.push_back(node());
      } while (accept(','));
      if (!accept(')')) fail("expected ')'");
    }
    if (t.label.empty()) {
      if (t.children.size() != 1) fail("empty decoration must wrap exactly one subtree");
      Tree inner = std::move(t.children.front());
      return inner;
    }
    return t;
  }

  const Hypergraph& h_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Hypergraph& h, const Tree& t, std::string& out) {
  out += format_set(h, t.label, true);
  if (t.children.empty()) return;
  out += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    print(h, t.children[i], out);
  }
  out += ")";
}

void print(const Hypergraph& h, const PartialConstruct& p, std::string& out) {
  if (p.omega) {
    out += "Ω" + format_set(h, p.label, false);
    return;
  }
  out += format_set(h, p.label, true);
  if (p.children.empty()) return;
  out += "(";
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    if (i) out += ",";
    print(h, p.children[i], out);
  }
  out += ")";
}

}  // namespace

Tree parse_tree(const Hypergraph& h, std::string_view text) { return TreeParser(h, text).parse(); }

Construct parse_construct(const Hypergraph& h, std::string_view text) {
  return validate_construct(h, parse_tree(h, text));
}

std::string to_string(const Hypergraph& h, const Tree& t) {
  std::string out;
  print(h, t, out);
  return out;
}

std::string to_string(const Hypergraph& h, const Construct& c) { return to_string(h, c.tree()); }

std::string to_string(const Hypergraph& h, const PartialConstruct& p) {
  std::string out;
  print(h, p, out);
  return out;
}

}  // namespace hyperpoly
