#pragma once

#include "spincover/cartan.hpp"
#include "spincover/colouring.hpp"

namespace spincover {

// Doubly-laced reduction Pi^{dl kappa}: drops even/even infinity edges, turns
// odd/even infinity edges with kappa = 2 on the odd side into double edges,
// keeps qualifying double edges, and flattens everything else to simple
// edges. The colouring is unchanged and stays admissible.
CartanMatrix dl_reduce(const CartanMatrix& cm, const Colouring& k);

struct UnfoldResult {
  CartanMatrix cm;
  Colouring colouring;
  // For each unfolded vertex, the original vertex index; negative entries are
  // the primed copies (label "i'").
  std::vector<int> origin;
};

// Simply-laced unfolding of a doubly laced diagram. Requires kappa(i) = 2 on
// the source of every double edge; reducible diagrams are handled
// componentwise (simply laced components are retained with their colouring).
UnfoldResult unfold(const CartanMatrix& cm, const Colouring& k);

bool check_c_preserved(const CartanMatrix& cm, const Colouring& k);

}  // namespace spincover
