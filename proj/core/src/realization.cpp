#include "hyperpoly/realization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "hyperpoly/enumerate.hpp"
#include "hyperpoly/nested_sets.hpp"
#include "hyperpoly/order.hpp"

namespace hyperpoly {

namespace {

// Position of each atom within the carrier.
std::vector<int> positions(const Hypergraph& h) {
  std::vector<int> pos(h.universe().size(), -1);
  int k = 0;
  for (unsigned i : h.carrier()) pos[i] = k++;
  return pos;
}

Rational sum_over(const RationalPoint& p, const std::vector<int>& pos, AtomSet s) {
  Rational total = 0;
  for (unsigned i : s) total += p[static_cast<std::size_t>(pos[i])];
  return total;
}

std::vector<AtomSet> proper_saturated(const Hypergraph& h) {
  auto sat = saturated_sets(h);
  sat.erase(std::remove(sat.begin(), sat.end(), h.carrier()), sat.end());
  std::stable_sort(sat.begin(), sat.end(), [](AtomSet a, AtomSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return sat;
}

void fill_point(const Tree& t, const std::vector<int>& pos, RationalPoint& p) {
  BigInt value = pow3(t.span().size());
  for (const auto& c : t.children) {
    value -= pow3(c.span().size());
    fill_point(c, pos, p);
  }
  p[static_cast<std::size_t>(pos[t.label.least()])] = Rational(value);
}

class Bits {
 public:
  explicit Bits(std::size_t n = 0, bool value = false)
      : n_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool operator==(const Bits&) const = default;
  bool operator<(const Bits& o) const { return words_ < o.words_; }

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

void note(IsomorphismReport& r, const std::string& kind, const std::string& witness) {
  auto& list = r.failures[kind];
  if (list.size() < 10) list.push_back(witness);
}

}  // namespace

HalfSpaceSystem hrep(const Hypergraph& h) {
  if (!is_connected(h)) throw InputError("hypergraph is not connected");
  HalfSpaceSystem s;
  for (AtomSet y : proper_saturated(h)) {
    s.inequalities.push_back({y, ConstraintKind::greater_equal, pow3(y.size())});
  }
  s.equality = {h.carrier(), ConstraintKind::equal, pow3(h.carrier().size())};
  return s;
}

RationalPoint vertex_of_construction(const Hypergraph& h, const Construct& v) {
  if (v.span() != h.carrier()) throw InputError("construction does not belong to this hypergraph");
  if (!v.is_construction()) throw InputError("not a construction: some decoration has more than one atom");
  const auto pos = positions(h);
  RationalPoint p(h.size());
  fill_point(v.tree(), pos, p);
  const NestedSet tight = psi(v);
  for (AtomSet y : saturated_sets(h)) {
    const Rational lhs = sum_over(p, pos, y);
    const Rational rhs(pow3(y.size()));
    if (tight.contains(y) ? lhs != rhs : lhs <= rhs) {
      throw VerificationError("vertex of " + to_string(h, v) + " is not strict on " + format_set(h, y));
    }
  }
  return p;
}

std::vector<RationalPoint> face_vertex_set(const Hypergraph& h, const Construct& t) {
  std::vector<RationalPoint> out;
  for (const auto& v : vertices_below(h, t)) out.push_back(vertex_of_construction(h, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> f_vector(const Hypergraph& h, const Limits& limits) {
  std::vector<std::size_t> f(h.size(), 0);
  for (const auto& c : enumerate_constructs(h, limits)) ++f[h.size() - c.node_count()];
  return f;
}

IsomorphismReport verify_isomorphism(const Hypergraph& h, const Limits& limits) {
  IsomorphismReport r;
  const auto constructs = enumerate_constructs(h, limits);
  const std::size_t n = h.size();
  const auto pos = positions(h);
  r.constructs = constructs.size();

  std::vector<Construct> vertices;
  std::vector<RationalPoint> points;
  for (const auto& c : constructs) {
    if (!c.is_construction()) continue;
    try {
      points.push_back(vertex_of_construction(h, c));
      vertices.push_back(c);
    } catch (const VerificationError& e) {
      note(r, "strictness", e.what());
    }
  }
  r.vertices = vertices.size();
  std::map<Construct, std::size_t> vertex_index;
  for (std::size_t i = 0; i < vertices.size(); ++i) vertex_index[vertices[i]] = i;
  {
    std::map<RationalPoint, std::size_t> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [it, fresh] = seen.emplace(points[i], i);
      if (!fresh) note(r, "distinct vertices", to_string(h, vertices[i]) + " = " + to_string(h, vertices[it->second]));
    }
  }

  const auto facets = proper_saturated(h);
  r.facets = facets.size();
  std::vector<Bits> on_facet(facets.size(), Bits(vertices.size()));
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Rational rhs(pow3(facets[f].size()));
    for (std::size_t v = 0; v < points.size(); ++v) {
      if (sum_over(points[v], pos, facets[f]) == rhs) on_facet[f].set(v);
    }
  }

  // Each vertex is tight exactly on its own nested set.
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const NestedSet own = psi(vertices[v]);
    std::size_t tight = 0;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!on_facet[f].test(v)) continue;
      ++tight;
      if (!own.contains(facets[f])) note(r, "simplicity", to_string(h, vertices[v]) + " tight on " + format_set(h, facets[f]));
    }
    if (tight != n - 1) note(r, "simplicity", to_string(h, vertices[v]) + " lies on " + std::to_string(tight) + " facets");
  }

  {
    std::vector<std::vector<Rational>> diffs;
    for (std::size_t v = 1; v < points.size(); ++v) {
      std::vector<Rational> row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = points[v][k] - points[0][k];
      diffs.push_back(std::move(row));
    }
    r.dimension = exact_rank(std::move(diffs));
    if (r.dimension + 1 != n) note(r, "dimension", "affine hull has dimension " + std::to_string(r.dimension));
  }

  // Geometric faces against the combinatorial ones.
  std::vector<Bits> faces;
  faces.reserve(constructs.size());
  for (const auto& t : constructs) {
    Bits g(vertices.size(), true);
    for (AtomSet y : psi(t).members) {
      if (y == h.carrier()) continue;
      const auto it = std::lower_bound(facets.begin(), facets.end(), y, [](AtomSet a, AtomSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      g &= on_facet[static_cast<std::size_t>(it - facets.begin())];
    }
    Bits combinatorial(vertices.size());
    for (const auto& v : vertices_below(h, t)) {
      auto it = vertex_index.find(v);
      if (it != vertex_index.end()) combinatorial.set(it->second);
    }
    if (!(g == combinatorial)) note(r, "face vertex set", to_string(h, t));
    if (g.none()) note(r, "empty face", to_string(h, t));
    faces.push_back(std::move(g));
  }
  {
    std::map<Bits, std::size_t> seen;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      auto [it, fresh] = seen.emplace(faces[i], i);
      if (!fresh) note(r, "injectivity", to_string(h, constructs[i]) + " ~ " + to_string(h, constructs[it->second]));
    }
  }
  for (std::size_t i = 0; i < constructs.size(); ++i) {
    for (std::size_t j = 0; j < constructs.size(); ++j) {
      const bool ordered = leq(h, constructs[i], constructs[j], OrderVariant::recursive);
      if (ordered != faces[i].subset_of(faces[j])) {
        note(r, "order", to_string(h, constructs[i]) + (ordered ? " <= " : " !<= ") + to_string(h, constructs[j]));
      }
    }
  }

  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t g = 0; g < facets.size(); ++g) {
      if (f != g && on_facet[f].subset_of(on_facet[g])) {
        note(r, "facets", format_set(h, facets[f]) + " within " + format_set(h, facets[g]));
      }
    }
  }

  // Walk every edge out of every vertex; each must end at a known vertex.
  std::set<RationalPoint> known(points.begin(), points.end());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::vector<AtomSet> tight;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (on_facet[f].test(v)) tight.push_back(facets[f]);
    }
    if (tight.size() != n - 1) continue;
    for (std::size_t leave = 0; leave < tight.size(); ++leave) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      auto row_of = [&](AtomSet s) {
        std::vector<Rational> row(n, Rational(0));
        for (unsigned i : s) row[static_cast<std::size_t>(pos[i])] = 1;
        return row;
      };
      for (std::size_t k = 0; k < tight.size(); ++k) {
        a.push_back(row_of(tight[k]));
        b.emplace_back(k == leave ? 1 : 0);
      }
      a.push_back(row_of(h.carrier()));
      b.emplace_back(0);
      std::vector<Rational> dir;
      if (!exact_solve(a, b, dir)) {
        note(r, "edge walk", to_string(h, vertices[v]) + " has dependent tight facets");
        continue;
      }
      bool bounded = false;
      Rational step;
      for (AtomSet y : facets) {
        const Rational rate = sum_over(dir, pos, y);
        if (rate >= 0) continue;
        const Rational room = (sum_over(points[v], pos, y) - Rational(pow3(y.size()))) / -rate;
        if (!bounded || room < step) {
          step = room;
          bounded = true;
        }
      }
      if (!bounded) {
        note(r, "edge walk", to_string(h, vertices[v]) + " has an unbounded edge");
        continue;
      }
      RationalPoint end = points[v];
      for (std::size_t k = 0; k < n; ++k) end[k] += step * dir[k];
      if (!known.contains(end)) note(r, "edge walk", "edge from " + to_string(h, vertices[v]) + " ends off the vertex list");
    }
  }
  return r;
}

std::string format_constraint(const Hypergraph& h, const LinearConstraint& c) {
  std::string out;
  for (unsigned i : c.support) {
    if (!out.empty()) out += " + ";
    out += h.label(i);
  }
  out += c.kind == ConstraintKind::equal ? " == " : " >= ";
  return out + c.rhs.str();
}

std::string hrep_text(const Hypergraph& h, const HalfSpaceSystem& s) {
  std::string out;
  for (const auto& c : s.inequalities) out += format_constraint(h, c) + "\n";
  return out + format_constraint(h, s.equality) + "\n";
}

std::string hrep_json(const Hypergraph& h, const HalfSpaceSystem& s) {
  nlohmann::json j;
  j["format"] = 1;
  j["carrier"] = h.labels(h.carrier());
  auto& rows = j["constraints"] = nlohmann::json::array();
  auto add = [&](const LinearConstraint& c) {
    rows.push_back({{"support", h.labels(c.support)},
                    {"kind", c.kind == ConstraintKind::equal ? "==" : ">="},
                    {"rhs", c.rhs.str()}});
  };
  for (const auto& c : s.inequalities) add(c);
  add(s.equality);
  return j.dump(2);
}

std::string vertices_json(const Hypergraph& h, const std::vector<Construct>& constructions) {
  nlohmann::json j;
  j["format"] = 1;
  j["carrier"] = h.labels(h.carrier());
  auto& map = j["vertices"] = nlohmann::json::object();
  for (const auto& v : constructions) {
    std::vector<std::string> coords;
    for (const auto& x : vertex_of_construction(h, v)) coords.push_back(to_fraction_string(x));
    map[to_string(h, v)] = coords;
  }
  return j.dump(2);
}

}  // namespace hyperpoly
