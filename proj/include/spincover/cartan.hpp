#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincover/errors.hpp"

namespace spincover {

// Validated generalized Cartan matrix. Vertices are 1-based throughout the
// public surface; the matrix is the single source of truth, the diagram view
// below is derived from it without loss.
class CartanMatrix {
 public:
  // Validates the GCM axioms; throws Error with the violated axiom and the
  // offending (row, column), 1-based.
  static CartanMatrix validate(const std::vector<std::vector<long>>& m,
                               std::vector<std::string> labels = {});

  int size() const { return n_; }
  long a(int i, int j) const { return a_[idx(i, j)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i - 1]; }

  bool operator==(const CartanMatrix& o) const { return a_ == o.a_ && n_ == o.n_; }

  std::vector<std::vector<long>> rows() const;

  bool is_simply_laced() const;
  bool is_doubly_laced() const;
  bool is_two_spherical() const;

 private:
  CartanMatrix(int n, std::vector<long> a, std::vector<std::string> labels)
      : n_(n), a_(std::move(a)), labels_(std::move(labels)) {}
  int idx(int i, int j) const { return (i - 1) * n_ + (j - 1); }

  int n_ = 0;
  std::vector<long> a_;
  std::vector<std::string> labels_;
};

enum class EdgeKind { None, A2, C2, G2, Infinity };

const char* edge_kind_name(EdgeKind k);

struct EdgeClass {
  EdgeKind kind = EdgeKind::None;
  long qij = 0;  // a(i,j) * a(j,i)
  // (-a(i,j), -a(j,i)), retained so an Infinity edge reconstructs the matrix.
  long ann_ij = 0;
  long ann_ji = 0;
};

// Classify the unordered pair {i,j} by q_ij = a(i,j)a(j,i).
EdgeClass edge_class(const CartanMatrix& cm, int i, int j);

// n(i,j): parity of a(i,j).
int parity_n(const CartanMatrix& cm, int i, int j);

// Coxeter exponent m_ij: q in {0,1,2,3} -> {2,3,4,6}; q >= 4 -> 0 (no braid
// relation).
int braid_order_m(const CartanMatrix& cm, int i, int j);

// True when the pair carries an intrinsically directed edge (valency 2 or 3,
// or an Infinity edge with mixed parities).
bool has_intrinsic_direction(const CartanMatrix& cm, int i, int j);

// Intrinsic direction only; precondition has_intrinsic_direction.
// Returns true iff i -> j.
bool intrinsic_points_from_i(const CartanMatrix& cm, int i, int j);

// Connected components of the underlying graph, each sorted, listed by
// smallest member.
std::vector<std::vector<int>> components(const CartanMatrix& cm);

// Derived, loss-free diagram view of a GCM.
struct AugmentedDiagram {
  int n = 0;
  // Entry per unordered pair i<j in row-major order of (i,j).
  struct Edge {
    int i, j;
    EdgeClass cls;
    bool directed;         // intrinsic direction present
    bool from_i;           // valid when directed
    int n_ij, n_ji;        // parities
    int m;                 // braid order (0 for infinity)
  };
  std::vector<Edge> edges;  // only pairs with qij > 0
  std::vector<std::string> labels;

  // Rebuild the Cartan matrix; exact for every input (Infinity edges carry
  // their annotations).
  CartanMatrix to_matrix() const;
};

AugmentedDiagram augmented_diagram(const CartanMatrix& cm);

}  // namespace spincover
