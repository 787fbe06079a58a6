#include "spincover/colouring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spincover {

AdmGraph adm_graph(const CartanMatrix& cm) {
  AdmGraph g;
  g.n = cm.size();
  std::vector<int> parent(g.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (parity_n(cm, i, j) == 1 && parity_n(cm, j, i) == 1) {
        g.edges.emplace_back(i, j);
        parent[find(i)] = find(j);
      }
  std::vector<std::vector<int>> byroot(g.n + 1);
  for (int i = 1; i <= g.n; ++i) byroot[find(i)].push_back(i);
  for (auto& v : byroot)
    if (!v.empty()) g.comps.push_back(std::move(v));
  std::sort(g.comps.begin(), g.comps.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  g.comp_of.assign(g.n, -1);
  for (int c = 0; c < static_cast<int>(g.comps.size()); ++c)
    for (int v : g.comps[c]) g.comp_of[v - 1] = c;
  return g;
}

std::vector<int> forced_ones(const CartanMatrix& cm) {
  AdmGraph g = adm_graph(cm);
  std::set<int> forced_comps;
  for (int i = 1; i <= cm.size(); ++i)
    for (int j = 1; j <= cm.size(); ++j)
      if (i != j && parity_n(cm, i, j) == 0 && parity_n(cm, j, i) == 1)
        forced_comps.insert(g.component_of(i));
  std::vector<int> out;
  for (int i = 1; i <= cm.size(); ++i)
    if (forced_comps.count(g.component_of(i))) out.push_back(i);
  return out;
}

bool is_admissible(const CartanMatrix& cm, const Colouring& k) {
  if (k.size() != cm.size()) return false;
  for (int v : k.values)
    if (v != 1 && v != 2) return false;
  for (int i : forced_ones(cm))
    if (k(i) != 1) return false;
  AdmGraph g = adm_graph(cm);
  for (const auto& comp : g.comps)
    for (int v : comp)
      if (k(v) != k(comp.front())) return false;
  return true;
}

void require_admissible(const CartanMatrix& cm, const Colouring& k) {
  if (!is_admissible(cm, k))
    throw Error(ErrorCode::NotAdmissible, "colouring violates admissibility");
}

Colouring kappa_max(const CartanMatrix& cm) {
  Colouring k = Colouring::constant(cm.size(), 2);
  for (int i : forced_ones(cm)) k.values[i - 1] = 1;
  return k;
}

Colouring colouring_sum(const CartanMatrix& cm, const Colouring& k1, const Colouring& k2) {
  require_admissible(cm, k1);
  require_admissible(cm, k2);
  Colouring out = k1;
  for (int i = 0; i < out.size(); ++i) out.values[i] = std::max(k1.values[i], k2.values[i]);
  return out;
}

int c_value(const CartanMatrix& cm, const Colouring& k) {
  require_admissible(cm, k);
  AdmGraph g = adm_graph(cm);
  int c = 0;
  for (const auto& comp : g.comps)
    if (k(comp.front()) == 2) ++c;
  return c;
}

std::vector<Colouring> elementary_list(const CartanMatrix& cm) {
  AdmGraph g = adm_graph(cm);
  std::set<int> forced_comps;
  for (int i : forced_ones(cm)) forced_comps.insert(g.component_of(i));
  std::vector<Colouring> out;
  for (int c = 0; c < static_cast<int>(g.comps.size()); ++c) {
    if (forced_comps.count(c)) continue;
    Colouring k = Colouring::constant(cm.size(), 1);
    for (int v : g.comps[c]) k.values[v - 1] = 2;
    out.push_back(k);
  }
  return out;
}

std::vector<Colouring> enumerate_admissible(const CartanMatrix& cm) {
  AdmGraph g = adm_graph(cm);
  std::set<int> forced_comps;
  for (int i : forced_ones(cm)) forced_comps.insert(g.component_of(i));
  std::vector<int> free_comps;
  for (int c = 0; c < static_cast<int>(g.comps.size()); ++c)
    if (!forced_comps.count(c)) free_comps.push_back(c);
  std::vector<Colouring> out;
  const size_t total = size_t{1} << free_comps.size();
  for (size_t mask = 0; mask < total; ++mask) {
    Colouring k = Colouring::constant(cm.size(), 1);
    for (size_t b = 0; b < free_comps.size(); ++b)
      if (mask & (size_t{1} << b))
        for (int v : g.comps[free_comps[b]]) k.values[v - 1] = 2;
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_proper(const CartanMatrix& cm, const Colouring& k) {
  require_admissible(cm, k);
  for (const auto& comp : components(cm)) {
    bool has2 = false;
    for (int v : comp)
      if (k(v) == 2) has2 = true;
    if (!has2) return false;
  }
  return true;
}

int kappa_pair_twice(const Colouring& k, int i, int j) { return k(i) + k(j); }

bool direction_from_i(const CartanMatrix& cm, const Colouring& k, int i, int j) {
  if (i == j) throw Error(ErrorCode::SameVertex, "vertex " + std::to_string(i));
  require_admissible(cm, k);
  if (has_intrinsic_direction(cm, i, j)) return intrinsic_points_from_i(cm, i, j);
  if (k(i) != k(j)) return k(i) > k(j);
  return i > j;
}

}  // namespace spincover
