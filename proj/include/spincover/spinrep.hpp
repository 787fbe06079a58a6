#pragma once

#include <vector>

#include "spincover/cartan.hpp"
#include "spincover/closure.hpp"
#include "spincover/exact_matrix.hpp"

namespace spincover {

// Generalized spin representation of a simply laced diagram: matrices X_i
// over Q(zeta_8) with X_i^2 = -I, anticommuting exactly across edges, and
// X_j outside the real span of {I, X_i} for i != j. Built from one 2x2
// tensor factor per edge and per isolated vertex, with a global scalar i.
class SpinRep {
 public:
  static SpinRep build(const CartanMatrix& cm);

  const CartanMatrix& diagram() const { return cm_; }
  int dimension() const { return dim_; }
  const ZetaMatrix& X(int i) const { return x_[i - 1]; }

  // R_i = (I + X_i) * sqrt(2)/2; R_i^2 = X_i and R_i^8 = I.
  ZetaMatrix R(int i) const;

  // Evaluate a word in the generators r_i (signed 1-based indices, negative
  // means inverse) under r_i -> R_i.
  ZetaMatrix evaluate_word(const std::vector<int>& word) const;

  // BFS closure of <R_1, ..., R_n>.
  ClosureResult<ZetaMatrix> xi_image(size_t cap) const;

  // The three defining invariants, re-checked on demand.
  bool invariants_hold() const;

 private:
  SpinRep(CartanMatrix cm, int dim, std::vector<ZetaMatrix> x)
      : cm_(std::move(cm)), dim_(dim), x_(std::move(x)) {}

  CartanMatrix cm_;
  int dim_;
  std::vector<ZetaMatrix> x_;
};

}  // namespace spincover
