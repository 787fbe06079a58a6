#include "spincover/weyl.hpp"

#include <algorithm>
#include <map>

#include "spincover/closure.hpp"
#include "spincover/transform.hpp"

namespace spincover {

const char* family_name(Family f) {
  switch (f) {
    case Family::W: return "w";
    case Family::Wext: return "wext";
    case Family::Wspin: return "wspin";
    case Family::WspinColoured: return "wspin-coloured";
  }
  return "?";
}

std::string Presentation::generator_prefix() const {
  switch (family) {
    case Family::W: return "s";
    case Family::Wext: return "t";
    default: return "r";
  }
}

namespace {

std::vector<int> braid_relator(int i, int j, int m) {
  std::vector<int> w;
  for (int t = 0; t < m; ++t) w.push_back(t % 2 == 0 ? i : j);
  for (int t = 0; t < m; ++t) {
    int last = (m - 1 - t) % 2 == 0 ? j : i;
    w.push_back(-last);
  }
  return w;
}

std::vector<int> conj_relator(int i, int j, int nij, R2Variant variant) {
  std::vector<int> w;
  auto rep = [&](int g, int count) {
    for (int t = 0; t < count; ++t) w.push_back(g);
  };
  switch (variant) {
    case R2Variant::Standard:
      // r_j^-1 r_i^2 r_j = r_i^2 r_j^{2 n(i,j)}
      w = {-j, i, i, j};
      rep(-j, 2 * nij);
      rep(-i, 2);
      break;
    case R2Variant::PrimeLeft:
      // r_j r_i^2 r_j^-1 = r_i^2 r_j^{-2 n(i,j)}
      w = {j, i, i, -j};
      rep(j, 2 * nij);
      rep(-i, 2);
      break;
    case R2Variant::PrimeRight:
      // r_j r_i^2 r_j^-1 = r_j^{2 n(i,j)} r_i^2
      w = {j, i, i, -j};
      rep(-i, 2);
      rep(-j, 2 * nij);
      break;
  }
  return w;
}

}  // namespace

Presentation presentation(const CartanMatrix& cm, Family family, const Colouring* colouring,
                          R2Variant variant) {
  Presentation p;
  p.n = cm.size();
  p.family = family;
  const int n = cm.size();
  int power = family == Family::W ? 2 : (family == Family::Wext ? 4 : 8);
  for (int i = 1; i <= n; ++i)
    p.relators.push_back(std::vector<int>(power, i));
  if (family != Family::W) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) p.relators.push_back(conj_relator(i, j, parity_n(cm, i, j), variant));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int m = braid_order_m(cm, i, j);
      if (m != 0) p.relators.push_back(braid_relator(i, j, m));
    }
  if (family == Family::WspinColoured) {
    if (!colouring) throw Error(ErrorCode::NotAdmissible, "coloured family needs a colouring");
    require_admissible(cm, *colouring);
    for (int i = 1; i <= n; ++i)
      if ((*colouring)(i) == 1) p.relators.push_back(std::vector<int>(4, i));
  }
  return p;
}

// ---------------------------------------------------------------------------

GElt GElt::operator*(const GElt& o) const {
  if (v_.index() != o.v_.index())
    throw Error(ErrorCode::DimensionMismatch, "mixed group element kinds");
  return std::visit(
      [&](const auto& x) -> GElt {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Pair>) {
          const Pair& y = std::get<Pair>(o.v_);
          return GElt(Var(Pair{x.first * y.first, x.second * y.second}));
        } else {
          return GElt(Var(x * std::get<T>(o.v_)));
        }
      },
      v_);
}

GElt GElt::inverse() const {
  return std::visit(
      [](const auto& x) -> GElt {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Pair>) {
          return GElt(Var(Pair{x.first.inverse(), x.second.inverse()}));
        } else {
          return GElt(Var(x.inverse()));
        }
      },
      v_);
}

bool GElt::is_identity() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CliffordElement>) {
          return x == CliffordElement::one(x.dim());
        } else if constexpr (std::is_same_v<T, ExactMatrix>) {
          return x.is_identity();
        } else if constexpr (std::is_same_v<T, SO2xSU2Element>) {
          return x.is_identity();
        } else if constexpr (std::is_same_v<T, Pair>) {
          return x.first == CliffordElement::one(x.first.dim()) &&
                 x.second == CliffordElement::one(x.second.dim());
        } else {
          return x.is_identity();
        }
      },
      v_);
}

bool GElt::operator==(const GElt& o) const { return v_ == o.v_; }

bool GElt::operator<(const GElt& o) const {
  if (v_.index() != o.v_.index()) return v_.index() < o.v_.index();
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        return x < std::get<T>(o.v_);
      },
      v_);
}

std::string GElt::str() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GElt::Pair>) {
          return "(" + x.first.str() + ", " + x.second.str() + ")";
        } else {
          return x.str();
        }
      },
      v_);
}

namespace {

GElt pair_elt(const CliffordElement& a, const CliffordElement& b) {
  return GElt(GElt::Var(GElt::Pair{a, b}));
}

CliffordElement eta_tilde_p(long k) { return spin_generator_S(k).embed(4, {3, 4}); }
CliffordElement eta_tilde_l(long k) {
  return spin_generator_S(2 * k).embed(4, {1, 4}) * spin_generator_S(-k).embed(4, {2, 3});
}

// The triple-edge line generator (e1e4 + e1e2e3e4)/sqrt2 = eta~_l(S(3pi/4)),
// an eighth-turn on the same circle as eta~_l(S(pi/4)).
CliffordElement g2_line_generator() { return eta_tilde_l(3); }

}  // namespace

Rank2Model rank2_table(const CartanMatrix& cm, const Colouring& k, int i, int j) {
  if (i == j) throw Error(ErrorCode::SameVertex, "rank-2 model needs distinct vertices");
  require_admissible(cm, k);
  const long q = cm.a(i, j) * cm.a(j, i);
  const int ki = k(i), kj = k(j);
  Rank2Model m;
  // the epsilon_1 role belongs to the orientation source
  bool i_first = q == 0 ? true : direction_from_i(cm, k, i, j);
  int first = i_first ? i : j;

  auto assign = [&](GElt xf, GElt xs) {
    if (i_first) {
      m.xi = std::move(xf);
      m.xj = std::move(xs);
    } else {
      m.xi = std::move(xs);
      m.xj = std::move(xf);
    }
  };

  if (q == 0) {
    if (ki == 1 && kj == 1) {
      m.tag = "SO(2)xSO(2)";
      assign(GElt(GElt::Var(iota_so2(1, rot_D(2)))), GElt(GElt::Var(iota_so2(2, rot_D(2)))));
    } else {
      m.tag = "Spin(2)xSpin(2)";
      CliffordElement one2 = CliffordElement::one(2);
      assign(pair_elt(spin_generator_S(ki == 2 ? 1 : 2), one2),
             pair_elt(one2, spin_generator_S(kj == 2 ? 1 : 2)));
    }
    return m;
  }
  if (q == 1) {
    if (ki != kj)
      throw Error(ErrorCode::InconsistentColour, "colour 1.5 on a simple edge");
    if (ki == 2) {
      m.tag = "Spin(3)";
      assign(GElt(GElt::Var(spin_generator_S(1).embed(3, {1, 2}))),
             GElt(GElt::Var(spin_generator_S(1).embed(3, {2, 3}))));
    } else {
      m.tag = "SO(3)";
      assign(GElt(GElt::Var(eps_ij(3, 1, 2, rot_D(2)))), GElt(GElt::Var(eps_ij(3, 2, 3, rot_D(2)))));
    }
    return m;
  }
  if (q == 2) {
    // the source is the long root; the target is parity-forced to colour 1
    int second = first == i ? j : i;
    if (k(second) != 1)
      throw Error(ErrorCode::InconsistentColour, "double-edge target must be coloured 1");
    if (k(first) == 2) {
      m.tag = "SO(2)xSU(2)";
      assign(GElt(GElt::Var(zeta_tilde_p(1))), GElt(GElt::Var(zeta_tilde_l(2))));
    } else {
      m.tag = "U(2)";
      assign(GElt(GElt::Var(zeta_p(2))), GElt(GElt::Var(zeta_l(2))));
    }
    return m;
  }
  if (q == 3) {
    if (ki != kj)
      throw Error(ErrorCode::InconsistentColour, "colour 1.5 on a triple edge");
    if (ki == 2) {
      m.tag = "Spin(4)";
      assign(GElt(GElt::Var(eta_tilde_p(1))), GElt(GElt::Var(g2_line_generator())));
    } else {
      m.tag = "SO(4)";
      assign(GElt(GElt::Var(eta_p(2))), GElt(GElt::Var(eta_l(2))));
    }
    return m;
  }
  // q >= 4: the free amalgamated product, spin when a colour 2 is present
  long r = -cm.a(i, j), s = -cm.a(j, i);
  bool spin = ki == 2 || kj == 2;
  Colouring pairk{{ki, kj}};
  AmalgamGroupPtr g = AmalgamGroup::build(r, s, spin, &pairk);
  m.tag = (spin ? "K~{" : "K{") + std::to_string(r) + "," + std::to_string(s) + "}";
  if (spin) {
    auto [x1, x2] = g->wspin_generators();
    m.xi = GElt(GElt::Var(x1));
    m.xj = GElt(GElt::Var(x2));
  } else {
    m.xi = GElt(GElt::Var(g->k(1, Rat(1, 2))));
    m.xj = GElt(GElt::Var(g->k(2, Rat(1, 2))));
  }
  return m;
}

GElt evaluate_in_model(const std::vector<GElt>& gens, const std::vector<int>& word) {
  if (gens.empty()) throw Error(ErrorCode::InputError, "no generators");
  GElt acc;
  bool first = true;
  for (int g : word) {
    if (g == 0 || static_cast<size_t>(std::abs(g)) > gens.size())
      throw Error(ErrorCode::InputError, "generator index out of range");
    GElt x = gens[std::abs(g) - 1];
    if (g < 0) x = x.inverse();
    acc = first ? x : acc * x;
    first = false;
  }
  if (first) {
    // empty word: identity of the first generator's group
    return gens[0] * gens[0].inverse();
  }
  return acc;
}

namespace {

std::string word_str(const std::string& prefix, const std::vector<int>& w) {
  std::string out;
  for (int g : w) {
    if (!out.empty()) out += " ";
    out += prefix + std::to_string(std::abs(g));
    if (g < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

}  // namespace

RelationReport verify_relations(const CartanMatrix& cm, const Colouring& k, Family family) {
  require_admissible(cm, k);
  RelationReport rep;
  const int n = cm.size();
  const Colouring triv = Colouring::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // The generator images depend on the family: reflections for W, the
      // SO-level circles for Wext, the table of S(pi/4)-generators for the
      // spin families.
      Rank2Model model;
      if (family == Family::W) {
        ExactMatrix si(2), sj(2);
        si.at(0, 0) = QSqrt2(-1);
        si.at(0, 1) = QSqrt2(-cm.a(i, j));
        si.at(1, 1) = QSqrt2(1);
        sj.at(1, 1) = QSqrt2(-1);
        sj.at(1, 0) = QSqrt2(-cm.a(j, i));
        sj.at(0, 0) = QSqrt2(1);
        model.tag = "reflection";
        model.xi = GElt(GElt::Var(si));
        model.xj = GElt(GElt::Var(sj));
      } else if (family == Family::Wext) {
        model = rank2_table(cm, triv, i, j);
      } else {
        model = rank2_table(cm, k, i, j);
      }
      std::string ctx = "{" + std::to_string(i) + "," + std::to_string(j) + "} " + model.tag;
      // rank-2 sub-diagram and its presentation, generators (i, j) -> (1, 2)
      CartanMatrix sub = CartanMatrix::validate({{2, cm.a(i, j)}, {cm.a(j, i), 2}});
      Colouring subk{{k(i), k(j)}};
      Presentation pres = presentation(sub, family,
                                       family == Family::WspinColoured ? &subk : nullptr);
      std::vector<GElt> gens = {model.xi, model.xj};
      for (const auto& rel : pres.relators) {
        bool ok = evaluate_in_model(gens, rel).is_identity();
        rep.lines.push_back({ctx, word_str(pres.generator_prefix(), rel) + " = 1", ok});
      }
      if (family == Family::Wspin || family == Family::WspinColoured) {
        // derived consequences of the conjugation relation
        const GElt &xi = model.xi, &xj = model.xj;
        int nij = parity_n(sub, 1, 2), nji = parity_n(sub, 2, 1);
        GElt xi2 = xi * xi, xj2 = xj * xj;
        GElt xi4 = xi2 * xi2, xj4 = xj2 * xj2;
        GElt comm = xi2.inverse() * xj2.inverse() * xi2 * xj2;
        bool comm_ok = nij == 1 ? comm == xj4 : comm.is_identity();
        rep.lines.push_back({ctx, "[r1^2, r2^2] = r2^{4 n(1,2)}", comm_ok});
        if (nij == 1 && nji == 1)
          rep.lines.push_back({ctx, "r1^4 = r2^4", xi4 == xj4});
        if (nij == 0 && nji == 1)
          rep.lines.push_back({ctx, "r1^4 = 1", xi4.is_identity()});
        if (nji == 0 && nij == 1)
          rep.lines.push_back({ctx, "r2^4 = 1", xj4.is_identity()});
        rep.lines.push_back({ctx, "[r2, r1^4] = 1",
                             (xj.inverse() * xi4.inverse() * xj * xi4).is_identity()});
        rep.lines.push_back({ctx, "[r1, r2^4] = 1",
                             (xi.inverse() * xj4.inverse() * xi * xj4).is_identity()});
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct ComponentModel {
  std::string type;        // "A", "C2", "G2"
  std::vector<int> order;  // vertices in path order (A) or (source, target)
};

ComponentModel detect_component(const CartanMatrix& cm, const std::vector<int>& comp) {
  ComponentModel m;
  if (comp.size() == 1) {
    m.type = "A";
    m.order = comp;
    return m;
  }
  if (comp.size() == 2) {
    int i = comp[0], j = comp[1];
    long q = cm.a(i, j) * cm.a(j, i);
    if (q == 2 || q == 3) {
      m.type = q == 2 ? "C2" : "G2";
      bool ifirst = intrinsic_points_from_i(cm, i, j);
      m.order = ifirst ? std::vector<int>{i, j} : std::vector<int>{j, i};
      return m;
    }
  }
  // A-type path: every edge simple, degrees <= 2, no cycle
  std::map<int, std::vector<int>> adj;
  for (int u : comp)
    for (int v : comp)
      if (u != v && cm.a(u, v) != 0) {
        if (cm.a(u, v) * cm.a(v, u) != 1)
          throw Error(ErrorCode::UnsupportedGlobalModel,
                      "no faithful global model for this component type");
        adj[u].push_back(v);
      }
  std::vector<int> ends;
  for (int u : comp) {
    if (adj[u].size() > 2)
      throw Error(ErrorCode::UnsupportedGlobalModel, "branching simply laced component");
    if (adj[u].size() == 1) ends.push_back(u);
  }
  if (ends.size() != 2)
    throw Error(ErrorCode::UnsupportedGlobalModel, "component is not a path");
  int cur = std::min(ends[0], ends[1]);
  std::vector<int> order = {cur};
  int prev = -1;
  while (order.size() < comp.size()) {
    int next = -1;
    for (int v : adj[cur])
      if (v != prev) next = v;
    if (next < 0) throw Error(ErrorCode::UnsupportedGlobalModel, "component is not a path");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  m.type = "A";
  m.order = order;
  return m;
}

// Generator per vertex of one component, in the component's global model.
std::map<int, GElt> component_generators(const CartanMatrix& /*cm*/, const Colouring& k,
                                         const ComponentModel& comp, Level level) {
  std::map<int, GElt> out;
  if (comp.type == "A") {
    const int kk = static_cast<int>(comp.order.size());
    bool spin_level = level == Level::What && k(comp.order.front()) == 2;
    if (level == Level::Wtilde || (level == Level::What && !spin_level)) {
      // SO(k+1), s~ = eps_{p,p+1}(D(pi/2))
      for (int p = 0; p < kk; ++p)
        out.emplace(comp.order[p], GElt(GElt::Var(eps_ij(kk + 1, p + 1, p + 2, rot_D(2)))));
    } else {
      // Spin(k+1), s^ = eps~_{p,p+1}(S(pi/4))
      for (int p = 0; p < kk; ++p) {
        std::vector<int> idx = {p + 1, p + 2};
        out.emplace(comp.order[p], GElt(GElt::Var(spin_generator_S(1).embed(kk + 1, idx))));
      }
    }
    return out;
  }
  int src = comp.order[0], tgt = comp.order[1];
  if (comp.type == "C2") {
    if (level == Level::What && k(src) == 2) {
      out.emplace(src, GElt(GElt::Var(zeta_tilde_p(1))));
      out.emplace(tgt, GElt(GElt::Var(zeta_tilde_l(2))));
    } else {
      out.emplace(src, GElt(GElt::Var(zeta_p(2))));
      out.emplace(tgt, GElt(GElt::Var(zeta_l(2))));
    }
    return out;
  }
  // G2
  if (level == Level::What && k(src) == 2) {
    out.emplace(src, GElt(GElt::Var(eta_tilde_p(1))));
    out.emplace(tgt, GElt(GElt::Var(g2_line_generator())));
  } else {
    out.emplace(src, GElt(GElt::Var(eta_p(2))));
    out.emplace(tgt, GElt(GElt::Var(eta_l(2))));
  }
  return out;
}

size_t reflection_order(const CartanMatrix& cm, size_t cap) {
  const int n = cm.size();
  std::vector<Matrix<Rat>> gens;
  for (int i = 1; i <= n; ++i) {
    // s_i(e_j) = e_j - a(i,j) e_i: column j picks up -a(i,j) in row i.
    Matrix<Rat> s = Matrix<Rat>::identity(n);
    for (int j = 1; j <= n; ++j) {
      if (j == i)
        s.at(i - 1, i - 1) = Rat(-1);
      else
        s.at(i - 1, j - 1) = Rat(-cm.a(i, j));
    }
    gens.push_back(s);
  }
  return closure_or_throw(gens, cap).size();
}

}  // namespace

size_t enumerate_order(const CartanMatrix& cm, const Colouring& k, Level level, size_t cap) {
  require_admissible(cm, k);
  // Supported spherical types only; rejecting early keeps the reflection BFS
  // from grinding towards the cap on infinite Weyl groups.
  std::vector<ComponentModel> models;
  for (const auto& comp : components(cm)) models.push_back(detect_component(cm, comp));
  if (level == Level::W) return reflection_order(cm, cap);
  size_t total = 1;
  for (const auto& model : models) {
    auto gens_map = component_generators(cm, k, model, level);
    std::vector<GElt> gens;
    for (const auto& [v, g] : gens_map) gens.push_back(g);
    total *= closure_or_throw(gens, cap).size();
  }
  return total;
}

OrderFormulaReport order_formula_check(const CartanMatrix& cm, const Colouring& k, size_t cap) {
  OrderFormulaReport rep;
  rep.rank = cm.size();
  rep.c = c_value(cm, k);
  rep.w = enumerate_order(cm, k, Level::W, cap);
  rep.wtilde = enumerate_order(cm, k, Level::Wtilde, cap);
  rep.what = enumerate_order(cm, k, Level::What, cap);
  rep.dext_factor_ok = rep.wtilde == (size_t{1} << rep.rank) * rep.w;
  rep.centre_factor_ok = rep.what == (size_t{1} << rep.c) * rep.wtilde;
  return rep;
}

RelationReport unfold_generator_check(const CartanMatrix& cm, const Colouring& k) {
  UnfoldResult un = unfold(cm, k);

  // generator table of the unfolded (simply laced) diagram, per component
  std::map<int, GElt> table;
  for (const auto& comp : components(un.cm)) {
    ComponentModel model = detect_component(un.cm, comp);
    auto gens = component_generators(un.cm, un.colouring, model, Level::What);
    table.insert(gens.begin(), gens.end());
  }
  // position of each unfolded vertex by its origin
  std::map<int, int> pos_of_origin;
  for (size_t p = 0; p < un.origin.size(); ++p) pos_of_origin[un.origin[p]] = static_cast<int>(p) + 1;

  // component index per unfolded vertex, to pad cross-component products
  auto comps = components(un.cm);
  std::vector<int> comp_of(un.cm.size() + 1, -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

  // image of each folded generator as a product element over all components
  auto identity_of = [&](int comp_idx) {
    int v = comps[comp_idx].front();
    const GElt& g = table.at(v);
    return g * g.inverse();
  };
  auto lift = [&](int folded_vertex) {
    std::vector<GElt> out;
    int p1 = pos_of_origin.at(folded_vertex);
    int c1 = comp_of[p1];
    for (size_t c = 0; c < comps.size(); ++c) out.push_back(identity_of(static_cast<int>(c)));
    out[c1] = table.at(p1);
    if (k(folded_vertex) == 1 && pos_of_origin.count(-folded_vertex)) {
      int p2 = pos_of_origin.at(-folded_vertex);
      out[comp_of[p2]] = out[comp_of[p2]] * table.at(p2);
    }
    return out;
  };

  std::vector<std::vector<GElt>> gens;
  for (int v = 1; v <= cm.size(); ++v) gens.push_back(lift(v));

  Presentation pres = presentation(cm, Family::WspinColoured, &k);
  RelationReport rep;
  for (const auto& rel : pres.relators) {
    bool ok = true;
    for (size_t c = 0; c < comps.size(); ++c) {
      std::vector<GElt> slice;
      for (int v = 0; v < cm.size(); ++v) slice.push_back(gens[v][c]);
      if (!evaluate_in_model(slice, rel).is_identity()) ok = false;
    }
    rep.lines.push_back({"unfold", word_str("r", rel) + " = 1", ok});
  }
  return rep;
}

}  // namespace spincover
