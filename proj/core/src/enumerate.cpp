#include "hyperpoly/enumerate.hpp"

namespace hyperpoly {

namespace {

// Appends every choice of one tree per component to `out`, each rooted at `root`.
void product(const std::vector<const std::vector<Tree>*>& options, AtomSet root, std::vector<Tree>& out) {
  std::vector<std::size_t> pick(options.size(), 0);
  for (const auto* o : options) {
    if (o->empty()) return;
  }
  while (true) {
    Tree t{root, {}};
    t.children.reserve(options.size());
    for (std::size_t i = 0; i < options.size(); ++i) t.children.push_back((*options[i])[pick[i]]);
    out.push_back(std::move(t));
    std::size_t i = options.size();
    while (i > 0) {
      --i;
      if (++pick[i] < options[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (options.empty()) return;
  }
}

}  // namespace

const std::vector<Tree>& ConstructEnumerator::constructs_of(AtomSet x) { return build(x, false); }
const std::vector<Tree>& ConstructEnumerator::constructions_of(AtomSet x) { return build(x, true); }

const std::vector<Tree>& ConstructEnumerator::build(AtomSet x, bool singletons_only) {
  auto& memo = singletons_only ? constructions_ : constructs_;
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  std::vector<Tree> out;
  auto visit_root = [&](AtomSet root) {
    const auto comps = h_.components_of(x - root);
    std::vector<const std::vector<Tree>*> options;
    options.reserve(comps.size());
    for (AtomSet k : comps) options.push_back(&build(k, singletons_only));
    product(options, root, out);
  };
  if (singletons_only) {
    for (unsigned i : x) visit_root(AtomSet::single(i));
  } else {
    for_each_nonempty_subset(x, visit_root);
  }
  return memo.emplace(x, std::move(out)).first->second;
}

void check_carrier_guard(const Hypergraph& h, const Limits& limits) {
  if (h.size() > limits.max_carrier) {
    throw GuardError("carrier has " + std::to_string(h.size()) + " atoms; the limit is " +
                     std::to_string(limits.max_carrier) + " (raise it with --max-carrier)");
  }
}

std::vector<Construct> enumerate_constructs(const Hypergraph& h, const Limits& limits) {
  check_carrier_guard(h, limits);
  if (!is_connected(h)) throw InputError("hypergraph is not connected");
  ConstructEnumerator e(h);
  std::vector<Construct> out;
  for (const auto& t : e.constructs_of(h.carrier())) out.push_back(Construct::assume_valid(t));
  return out;
}

std::vector<Construct> enumerate_constructions(const Hypergraph& h, const Limits& limits) {
  check_carrier_guard(h, limits);
  if (!is_connected(h)) throw InputError("hypergraph is not connected");
  ConstructEnumerator e(h);
  std::vector<Construct> out;
  for (const auto& t : e.constructions_of(h.carrier())) out.push_back(Construct::assume_valid(t));
  return out;
}

}  // namespace hyperpoly
