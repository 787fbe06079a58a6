#pragma once

#include <vector>

#include "spincover/cartan.hpp"

namespace spincover {

// Vertex map into {1,2}, stored densely over 1..n.
struct Colouring {
  std::vector<int> values;  // values[i-1] in {1,2}

  int operator()(int i) const { return values[i - 1]; }
  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const Colouring& o) const { return values == o.values; }
  bool operator<(const Colouring& o) const { return values < o.values; }

  static Colouring constant(int n, int v) { return Colouring{std::vector<int>(n, v)}; }
};

// Graph on the diagram's vertex set whose edges are the both-odd pairs
// n(i,j) = n(j,i) = 1.
struct AdmGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;                // i < j
  std::vector<std::vector<int>> comps;                   // sorted components
  std::vector<int> comp_of;                              // comp index per vertex (1-based access -1)

  int component_of(int v) const { return comp_of[v - 1]; }
};

AdmGraph adm_graph(const CartanMatrix& cm);

// Vertices that admissibility condition (a) forces to colour 1, closed under
// Pi^adm components.
std::vector<int> forced_ones(const CartanMatrix& cm);

bool is_admissible(const CartanMatrix& cm, const Colouring& k);

// Throws NotAdmissible with the reason when the colouring is not admissible.
void require_admissible(const CartanMatrix& cm, const Colouring& k);

Colouring kappa_max(const CartanMatrix& cm);

Colouring colouring_sum(const CartanMatrix& cm, const Colouring& k1, const Colouring& k2);

// Number of Pi^adm components on which kappa takes the value 2.
int c_value(const CartanMatrix& cm, const Colouring& k);

std::vector<Colouring> elementary_list(const CartanMatrix& cm);

// All admissible colourings, ordered lexicographically.
std::vector<Colouring> enumerate_admissible(const CartanMatrix& cm);

// Every connected component of the diagram contains a vertex coloured 2.
bool is_proper(const CartanMatrix& cm, const Colouring& k);

// kappa(i)+kappa(j) in half-units: 2 -> 1, 3 -> 1.5 (encoded 3), 4 -> 2.
// Returned as twice the value to stay integral: 2, 3 or 4.
int kappa_pair_twice(const Colouring& k, int i, int j);

// Orientation induced by the colouring and the labelling: intrinsically
// directed edges keep their direction, then the larger colour points to the
// smaller, then the larger label to the smaller. Total and antisymmetric.
// Returns true iff i -> j.
bool direction_from_i(const CartanMatrix& cm, const Colouring& k, int i, int j);

}  // namespace spincover
