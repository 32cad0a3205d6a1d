#include "hyperpoly/atom_set.hpp"

namespace hyperpoly {

std::vector<AtomSet> nonempty_subsets(AtomSet s) {
  std::vector<AtomSet> out;
  out.reserve((std::size_t{1} << s.size()) - 1);
  for_each_nonempty_subset(s, [&](AtomSet sub) { out.push_back(sub); });
  return out;
}

}  // namespace hyperpoly
