#pragma once

#include <set>
#include <vector>

#include "spincover/errors.hpp"

namespace spincover {

template <class G>
struct ClosureResult {
  std::vector<G> elements;  // sorted canonical forms
  bool cap_hit = false;
  size_t frontier = 0;      // frontier size when the cap was hit

  size_t order() const { return elements.size(); }
};

// Deterministic breadth-first closure of a generating set under the group
// product. The generator list must contain valid group elements; inverses
// are reached automatically because the group is finite.
template <class G>
ClosureResult<G> closure(const std::vector<G>& generators, size_t cap) {
  if (cap == 0) throw Error(ErrorCode::InputError, "closure cap must be positive");
  std::set<G> seen;
  std::vector<G> frontier;
  for (const G& g : generators)
    if (seen.insert(g).second) frontier.push_back(g);
  if (frontier.empty()) throw Error(ErrorCode::InputError, "closure needs a generator");
  while (!frontier.empty()) {
    if (seen.size() > cap) {
      ClosureResult<G> r;
      r.cap_hit = true;
      r.frontier = frontier.size();
      r.elements.assign(seen.begin(), seen.end());
      return r;
    }
    std::vector<G> next;
    for (const G& x : frontier)
      for (const G& g : generators) {
        G y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  ClosureResult<G> r;
  r.elements.assign(seen.begin(), seen.end());
  return r;
}

// Throwing variant for callers that treat the cap as an error.
template <class G>
std::vector<G> closure_or_throw(const std::vector<G>& generators, size_t cap) {
  ClosureResult<G> r = closure(generators, cap);
  if (r.cap_hit)
    throw Error(ErrorCode::CapExceeded,
                "closure exceeded cap " + std::to_string(cap) + " (frontier " +
                    std::to_string(r.frontier) + ")");
  return std::move(r.elements);
}

}  // namespace spincover
