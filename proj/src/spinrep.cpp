#include "spincover/spinrep.hpp"

#include <utility>

namespace spincover {

namespace {

// 2x2 factor kinds: A = [[0,1],[1,0]] and B = [[1,0],[0,-1]] square to the
// identity and anticommute; vertices meet in exactly the factor of their
// shared edge.
enum class Factor { Id, Sym, Diag };

ZetaMatrix kron(const ZetaMatrix& a, const ZetaMatrix& b) {
  int n = a.dim(), m = b.dim();
  ZetaMatrix r(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          r.at(i * m + k, j * m + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

ZetaMatrix factor_matrix(Factor f) {
  ZetaMatrix m(2);
  switch (f) {
    case Factor::Id:
      m.at(0, 0) = QZeta8(1);
      m.at(1, 1) = QZeta8(1);
      break;
    case Factor::Sym:
      m.at(0, 1) = QZeta8(1);
      m.at(1, 0) = QZeta8(1);
      break;
    case Factor::Diag:
      m.at(0, 0) = QZeta8(1);
      m.at(1, 1) = QZeta8(-1);
      break;
  }
  return m;
}

// X_j lies in the real span of {I, X_i} iff X_j = a I + b X_i for real
// scalars. With exact entries in Q(zeta8), any real solution is forced into
// Q(sqrt2): solve the 2x2 system on one independent entry pair, demand real
// coefficients, verify globally.
bool in_span(const ZetaMatrix& id, const ZetaMatrix& xi, const ZetaMatrix& xj) {
  const int n = id.dim();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      QZeta8 d = id.at(p, q) * xi.at(0, 0) - xi.at(p, q) * id.at(0, 0);
      if (d.is_zero()) continue;
      QZeta8 b = (xj.at(p, q) * id.at(0, 0) - xj.at(0, 0) * id.at(p, q)) / d;
      QZeta8 a;
      if (!id.at(0, 0).is_zero())
        a = (xj.at(0, 0) - b * xi.at(0, 0)) / id.at(0, 0);
      else
        a = (xj.at(p, q) - b * xi.at(p, q)) / id.at(p, q);
      if (!a.is_real() || !b.is_real()) return false;
      return id.scaled(a) + xi.scaled(b) == xj;
    }
  return false;  // {id, xi} dependent: cannot span a third direction
}

}  // namespace

SpinRep SpinRep::build(const CartanMatrix& cm) {
  if (!cm.is_simply_laced())
    throw Error(ErrorCode::NotSimplyLaced, "spin representation needs a simply laced diagram");
  const int n = cm.size();

  // factors: one per edge {i,j}, i<j, then one per isolated vertex
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> isolated(n + 1, true);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (cm.a(i, j) != 0) {
        edges.emplace_back(i, j);
        isolated[i] = isolated[j] = false;
      }
  std::vector<int> iso;
  for (int i = 1; i <= n; ++i)
    if (isolated[i]) iso.push_back(i);

  const size_t nfac = edges.size() + iso.size();
  std::vector<ZetaMatrix> xs;
  for (int v = 1; v <= n; ++v) {
    ZetaMatrix acc(1);
    acc.at(0, 0) = QZeta8(1);
    for (size_t f = 0; f < nfac; ++f) {
      Factor kind = Factor::Id;
      if (f < edges.size()) {
        if (edges[f].first == v) kind = Factor::Sym;
        else if (edges[f].second == v) kind = Factor::Diag;
      } else if (iso[f - edges.size()] == v) {
        kind = Factor::Sym;
      }
      acc = kron(acc, factor_matrix(kind));
    }
    xs.push_back(acc.scaled(QZeta8::i()));
  }

  const int dim = 1 << nfac;
  SpinRep rep(cm, dim, std::move(xs));
  if (!rep.invariants_hold())
    throw Error(ErrorCode::ConstructionInvariantFailed, "spin representation invariants");
  return rep;
}

bool SpinRep::invariants_hold() const {
  const int n = cm_.size();
  ZetaMatrix id = ZetaMatrix::identity(dim_);
  for (int i = 1; i <= n; ++i) {
    if (X(i) * X(i) != -id) return false;
    for (int j = i + 1; j <= n; ++j) {
      ZetaMatrix xy = X(i) * X(j);
      ZetaMatrix yx = X(j) * X(i);
      if (cm_.a(i, j) != 0) {
        if (xy != -yx) return false;
      } else {
        if (xy != yx) return false;
      }
    }
    for (int j = 1; j <= n; ++j)
      if (j != i && in_span(id, X(i), X(j))) return false;
  }
  return true;
}

ZetaMatrix SpinRep::R(int i) const {
  ZetaMatrix m = ZetaMatrix::identity(dim_) + X(i);
  return m.scaled(QZeta8::half_sqrt2());
}

ZetaMatrix SpinRep::evaluate_word(const std::vector<int>& word) const {
  ZetaMatrix acc = ZetaMatrix::identity(dim_);
  for (int g : word) {
    if (g == 0 || std::abs(g) > cm_.size())
      throw Error(ErrorCode::InputError, "generator index out of range");
    ZetaMatrix r = R(std::abs(g));
    if (g < 0) {
      // R_i has order 8: inverse = R_i^7
      ZetaMatrix p = r;
      for (int t = 0; t < 6; ++t) p = p * r;
      r = p;
    }
    acc = acc * r;
  }
  return acc;
}

ClosureResult<ZetaMatrix> SpinRep::xi_image(size_t cap) const {
  std::vector<ZetaMatrix> gens;
  for (int i = 1; i <= cm_.size(); ++i) gens.push_back(R(i));
  return closure(gens, cap);
}

}  // namespace spincover
