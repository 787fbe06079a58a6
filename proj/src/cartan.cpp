#include "spincover/cartan.hpp"

#include <algorithm>
#include <numeric>

namespace spincover {

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<long>>& m,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw Error(ErrorCode::InputError, "empty matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw Error(ErrorCode::InputError, "matrix is not square at row " + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 2)
      throw Error(ErrorCode::DiagonalNotTwo,
                  "a(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") = " +
                      std::to_string(m[i][i]));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0)
        throw Error(ErrorCode::PositiveOffDiagonal,
                    "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                        std::to_string(m[i][j]));
      if (m[i][j] == 0 && m[j][i] != 0)
        throw Error(ErrorCode::ZeroNotSymmetric,
                    "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") = 0 but a(" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        ") = " + std::to_string(m[j][i]));
    }
  }
  std::vector<long> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  if (labels.empty()) {
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::InputError, "label count does not match matrix size");
  return CartanMatrix(n, std::move(flat), std::move(labels));
}

std::vector<std::vector<long>> CartanMatrix::rows() const {
  std::vector<std::vector<long>> out(n_);
  for (int i = 1; i <= n_; ++i) {
    out[i - 1].resize(n_);
    for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = a(i, j);
  }
  return out;
}

bool CartanMatrix::is_simply_laced() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j && a(i, j) < -1) return false;
  return true;
}

bool CartanMatrix::is_doubly_laced() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      long q = a(i, j) * a(j, i);
      if (q > 2) return false;
    }
  return true;
}

bool CartanMatrix::is_two_spherical() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (a(i, j) * a(j, i) > 3) return false;
  return true;
}

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::None: return "none";
    case EdgeKind::A2: return "A2";
    case EdgeKind::C2: return "C2";
    case EdgeKind::G2: return "G2";
    case EdgeKind::Infinity: return "infinity";
  }
  return "?";
}

static void require_distinct(int i, int j) {
  if (i == j)
    throw Error(ErrorCode::SameVertex, "vertex pair (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
}

EdgeClass edge_class(const CartanMatrix& cm, int i, int j) {
  require_distinct(i, j);
  EdgeClass e;
  e.qij = cm.a(i, j) * cm.a(j, i);
  e.ann_ij = -cm.a(i, j);
  e.ann_ji = -cm.a(j, i);
  if (e.qij == 0) e.kind = EdgeKind::None;
  else if (e.qij == 1) e.kind = EdgeKind::A2;
  else if (e.qij == 2) e.kind = EdgeKind::C2;
  else if (e.qij == 3) e.kind = EdgeKind::G2;
  else e.kind = EdgeKind::Infinity;
  return e;
}

int parity_n(const CartanMatrix& cm, int i, int j) {
  require_distinct(i, j);
  return static_cast<int>(((cm.a(i, j) % 2) + 2) % 2);
}

int braid_order_m(const CartanMatrix& cm, int i, int j) {
  require_distinct(i, j);
  switch (cm.a(i, j) * cm.a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

bool has_intrinsic_direction(const CartanMatrix& cm, int i, int j) {
  EdgeClass e = edge_class(cm, i, j);
  if (e.kind == EdgeKind::C2 || e.kind == EdgeKind::G2) return true;
  if (e.kind == EdgeKind::Infinity)
    return parity_n(cm, i, j) != parity_n(cm, j, i);
  return false;
}

bool intrinsic_points_from_i(const CartanMatrix& cm, int i, int j) {
  EdgeClass e = edge_class(cm, i, j);
  if (e.kind == EdgeKind::C2 || e.kind == EdgeKind::G2) {
    // i <- j iff a(i,j) = -q, i.e. the arrow leaves the vertex whose row
    // entry is -1.
    return cm.a(i, j) == -1;
  }
  // Infinity with mixed parity: i -> j iff a(i,j) odd.
  return parity_n(cm, i, j) == 1;
}

std::vector<std::vector<int>> components(const CartanMatrix& cm) {
  const int n = cm.size();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (cm.a(i, j) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<int>> byroot(n + 1);
  for (int i = 1; i <= n; ++i) byroot[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& v : byroot)
    if (!v.empty()) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

AugmentedDiagram augmented_diagram(const CartanMatrix& cm) {
  AugmentedDiagram d;
  d.n = cm.size();
  d.labels = cm.labels();
  for (int i = 1; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j) {
      EdgeClass e = edge_class(cm, i, j);
      if (e.kind == EdgeKind::None) continue;
      AugmentedDiagram::Edge edge;
      edge.i = i;
      edge.j = j;
      edge.cls = e;
      edge.n_ij = parity_n(cm, i, j);
      edge.n_ji = parity_n(cm, j, i);
      edge.m = braid_order_m(cm, i, j);
      edge.directed = has_intrinsic_direction(cm, i, j);
      edge.from_i = edge.directed ? intrinsic_points_from_i(cm, i, j) : false;
      d.edges.push_back(edge);
    }
  return d;
}

CartanMatrix AugmentedDiagram::to_matrix() const {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (const auto& e : edges) {
    // Annotations reconstruct every class; for q <= 3 they coincide with the
    // valency/direction reading of the two-spherical Remark.
    m[e.i - 1][e.j - 1] = -e.cls.ann_ij;
    m[e.j - 1][e.i - 1] = -e.cls.ann_ji;
  }
  return CartanMatrix::validate(m, labels);
}

}  // namespace spincover
