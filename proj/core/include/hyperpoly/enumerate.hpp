#pragma once

#include <unordered_map>
#include <vector>

#include "hyperpoly/construct.hpp"
#include "hyperpoly/errors.hpp"

namespace hyperpoly {

// Memoized enumeration of constructs over the connected subsets of a
// hypergraph. Results are in a fixed order: by root bitmask, then by the
// children in component order.
class ConstructEnumerator {
 public:
  explicit ConstructEnumerator(const Hypergraph& h) : h_(h) {}

  const std::vector<Tree>& constructs_of(AtomSet x);
  const std::vector<Tree>& constructions_of(AtomSet x);

 private:
  const std::vector<Tree>& build(AtomSet x, bool singletons_only);

  const Hypergraph& h_;
  std::unordered_map<AtomSet, std::vector<Tree>> constructs_;
  std::unordered_map<AtomSet, std::vector<Tree>> constructions_;
};

void check_carrier_guard(const Hypergraph& h, const Limits& limits);

std::vector<Construct> enumerate_constructs(const Hypergraph& h, const Limits& limits = {});
std::vector<Construct> enumerate_constructions(const Hypergraph& h, const Limits& limits = {});

}  // namespace hyperpoly
