#include "spincover/amalgam.hpp"

#include <algorithm>
#include <map>

#include "spincover/clifford.hpp"
#include "spincover/matgroups.hpp"

namespace spincover {

const char* utilde_kind_name(UTildeKind k) {
  switch (k) {
    case UTildeKind::KleinFour: return "Z2xZ2";
    case UTildeKind::Q8: return "Q8";
    case UTildeKind::Z4xZ4: return "Z4xZ4";
    case UTildeKind::Z4xZ2: return "Z4xZ2";
  }
  return "?";
}

namespace {

using CliffordPair = std::pair<CliffordElement, CliffordElement>;
CliffordPair operator*(const CliffordPair& x, const CliffordPair& y) {
  return {x.first * y.first, x.second * y.second};
}

// Validates the abstract tail group against a concrete model: the map
// (a,b) -> T1^a T2^b must be injective and carry tail_mul to the model
// product. Catches sign-convention errors once, at build time.
template <class G>
void validate_tails(const AmalgamGroup& grp, const G& t1, const G& t2, const G& id) {
  std::vector<TailElt> tails = grp.tail_elements();
  std::map<TailElt, G> img;
  std::vector<G> seen;
  for (const TailElt& t : tails) {
    G g = id;
    for (int x = 0; x < t.a; ++x) g = g * t1;
    for (int x = 0; x < t.b; ++x) g = g * t2;
    for (const G& h : seen)
      if (h == g)
        throw Error(ErrorCode::ConstructionInvariantFailed,
                    "tail embedding is not injective");
    seen.push_back(g);
    img.emplace(t, g);
  }
  for (const TailElt& x : tails)
    for (const TailElt& y : tails) {
      if (!(img.at(grp.tail_mul(x, y)) == img.at(x) * img.at(y)))
        throw Error(ErrorCode::ConstructionInvariantFailed,
                    "tail multiplication disagrees with the concrete model");
    }
}

}  // namespace

AmalgamGroupPtr AmalgamGroup::build(long r, long s, bool spin, const Colouring* colouring) {
  if (r < 1 || s < 1 || r * s < 4)
    throw Error(ErrorCode::RankTwoOnly,
                "K^{r,s} needs positive r, s with rs >= 4; got r=" + std::to_string(r) +
                    ", s=" + std::to_string(s));
  auto g = std::shared_ptr<AmalgamGroup>(new AmalgamGroup());
  g->r_ = r;
  g->s_ = s;
  g->spin_ = spin;
  g->n12_ = static_cast<int>(r % 2);  // a(1,2) = -r
  g->n21_ = static_cast<int>(s % 2);
  g->single1_ = g->n12_ == 0 && g->n21_ == 1;
  g->single2_ = g->n21_ == 0 && g->n12_ == 1;
  if (!spin) {
    g->kind_ = UTildeKind::KleinFour;
    g->order1_ = g->order2_ = 2;
  } else if (g->n12_ == 1 && g->n21_ == 1) {
    g->kind_ = UTildeKind::Q8;
    g->order1_ = g->order2_ = 4;
    g->q8_ = true;
  } else if (g->n12_ == 0 && g->n21_ == 0) {
    g->kind_ = UTildeKind::Z4xZ4;
    g->order1_ = g->order2_ = 4;
  } else {
    g->kind_ = UTildeKind::Z4xZ2;
    g->order1_ = g->single1_ ? 2 : 4;
    g->order2_ = g->single2_ ? 2 : 4;
  }

  CartanMatrix cm = CartanMatrix::validate({{2, -r}, {-s, 2}});
  if (colouring) {
    if (!is_admissible(cm, *colouring))
      throw Error(ErrorCode::BadParityColouring,
                  "colouring is not admissible for [[2,-" + std::to_string(r) + "],[-" +
                      std::to_string(s) + ",2]]");
    g->colouring_ = *colouring;
  } else {
    g->colouring_ = kappa_max(cm);
  }

  if (spin) {
    switch (g->kind_) {
      case UTildeKind::Q8: {
        CliffordElement t1 = spin_generator_S(2).embed(3, {1, 2});
        CliffordElement t2 = spin_generator_S(2).embed(3, {2, 3});
        validate_tails(*g, t1, t2, CliffordElement::one(3));
        break;
      }
      case UTildeKind::Z4xZ4: {
        CliffordPair t1{spin_generator_S(2), CliffordElement::one(2)};
        CliffordPair t2{CliffordElement::one(2), spin_generator_S(2)};
        CliffordPair id{CliffordElement::one(2), CliffordElement::one(2)};
        validate_tails(*g, t1, t2, id);
        break;
      }
      default: {
        SO2xSU2Element tl = zeta_tilde_l(4);  // (id, -I), order 2
        SO2xSU2Element tp = zeta_tilde_p(2);  // order 4
        if (g->single1_)
          validate_tails(*g, tl, tp, SO2xSU2Element());
        else
          validate_tails(*g, tp, tl, SO2xSU2Element());
        break;
      }
    }
  }
  return g;
}

Rat AmalgamGroup::period(int i) const {
  if (spin_ && !singly_covered(i)) return Rat(1, 2);
  return Rat(1);
}

int AmalgamGroup::tail_order(int i) const { return i == 1 ? order1_ : order2_; }

TailElt AmalgamGroup::tail_canon(long a, long b) const {
  a = ((a % order1_) + order1_) % order1_;
  b = ((b % order2_) + order2_) % order2_;
  if (q8_ && a >= 2) {
    a -= 2;
    b = (b + 2) % 4;
  }
  return TailElt{static_cast<int>(a), static_cast<int>(b)};
}

TailElt AmalgamGroup::tail_mul(const TailElt& x, const TailElt& y) const {
  long bx = x.b;
  if (q8_ && (y.a & 1)) bx = -bx;  // t1^-1 t2 t1 = t2^-1
  return tail_canon(x.a + y.a, bx + y.b);
}

TailElt AmalgamGroup::tail_inverse(const TailElt& x) const {
  long b = -x.b;
  if (q8_ && (x.a & 1)) b = -b;
  return tail_canon(-x.a, b);
}

int AmalgamGroup::tail_action_sign(const TailElt& u, int side) const {
  // u^-1 k_i u = k_i^sign; each crossing generator t_j (j != i) contributes
  // (1 - 2 n(j,i)).
  int exponent = side == 1 ? u.b * n21_ : u.a * n12_;
  return (exponent & 1) ? -1 : 1;
}

std::vector<TailElt> AmalgamGroup::tail_elements() const {
  int ra = q8_ ? 2 : order1_;
  int rb = order2_;
  std::vector<TailElt> out;
  for (int a = 0; a < ra; ++a)
    for (int b = 0; b < rb; ++b) out.push_back(TailElt{a, b});
  return out;
}

AmalgamWord AmalgamGroup::identity() const {
  AmalgamWord w;
  w.group_ = shared_from_this();
  return w;
}

AmalgamWord AmalgamGroup::tail_word(const TailElt& t) const {
  AmalgamWord w = identity();
  w.tail_ = tail_canon(t.a, t.b);
  return w;
}

AmalgamWord AmalgamGroup::t(int side) const {
  return tail_word(side == 1 ? TailElt{1, 0} : TailElt{0, 1});
}

AmalgamWord AmalgamGroup::k(int side, const Rat& theta) const {
  if (side != 1 && side != 2) throw Error(ErrorCode::InputError, "side must be 1 or 2");
  Rat p = period(side);
  Rat th = theta.mod(Rat(2));
  // theta = m*p + th_hat with th_hat in [0, p); k_i(p) = t_i.
  Rat q = th / p;
  long m = q.floor().get_si();
  Rat th_hat = th - p * Rat(mpq_class(m));
  AmalgamWord w = identity();
  w.tail_ = tail_canon(side == 1 ? m : 0, side == 2 ? m : 0);
  if (!th_hat.is_zero()) w.sylls_.push_back(Syllable{side, th_hat});
  return w;
}

void AmalgamGroup::mul_atom_tail(TailElt& tail, std::vector<Syllable>& sylls,
                                 const TailElt& u) const {
  // word * u: push u left across every syllable, collecting t-corrections.
  TailElt cur = u;
  for (auto it = sylls.rbegin(); it != sylls.rend(); ++it) {
    if (cur.is_identity()) break;
    int sign = tail_action_sign(cur, it->side);
    if (sign < 0) {
      // s * cur = cur * k_i(-theta) = (cur * t_i^{-1}) * k_i(p - theta)
      it->theta = period(it->side) - it->theta;
      TailElt corr = tail_canon(it->side == 1 ? -1 : 0, it->side == 2 ? -1 : 0);
      cur = tail_mul(cur, corr);
    }
  }
  tail = tail_mul(tail, cur);
}

void AmalgamGroup::mul_atom_syllable(TailElt& tail, std::vector<Syllable>& sylls, int side,
                                     const Rat& theta) const {
  if (sylls.empty() || sylls.back().side != side) {
    sylls.push_back(Syllable{side, theta});
    return;
  }
  Rat p = period(side);
  Rat sum = sylls.back().theta + theta;  // in (0, 2p)
  long m = 0;
  if (sum >= p) {
    m = 1;
    sum -= p;
  }
  sylls.pop_back();
  if (m != 0) {
    TailElt corr = tail_canon(side == 1 ? m : 0, side == 2 ? m : 0);
    mul_atom_tail(tail, sylls, corr);  // correction crosses the prefix only
  }
  if (!sum.is_zero()) sylls.push_back(Syllable{side, sum});
}

AmalgamWord AmalgamWord::operator*(const AmalgamWord& o) const {
  if (!group_ || !o.group_ || group_.get() != o.group_.get())
    throw Error(ErrorCode::InputError, "words from different amalgam groups");
  const AmalgamGroup& g = *group_;
  AmalgamWord res = *this;
  g.mul_atom_tail(res.tail_, res.sylls_, o.tail_);
  for (const Syllable& s : o.sylls_) g.mul_atom_syllable(res.tail_, res.sylls_, s.side, s.theta);
  return res;
}

AmalgamWord AmalgamWord::inverse() const {
  const AmalgamGroup& g = *group_;
  AmalgamWord res = g.identity();
  for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
    res = res * g.k(it->side, -it->theta);
  return res * g.tail_word(g.tail_inverse(tail_));
}

AmalgamWord AmalgamWord::pow(long e) const {
  const AmalgamGroup& g = *group_;
  AmalgamWord base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  AmalgamWord res = g.identity();
  for (long i = 0; i < n; ++i) res = res * base;
  return res;
}

std::string AmalgamWord::str() const {
  std::string out;
  if (tail_.is_identity()) {
    out = "1";
  } else {
    if (tail_.a) out += "t1^" + std::to_string(tail_.a);
    if (tail_.b) out += std::string(tail_.a ? " " : "") + "t2^" + std::to_string(tail_.b);
  }
  for (const Syllable& s : sylls_)
    out += " \xC2\xB7 [" + std::to_string(s.side) + ":" + s.theta.str() + "]";
  return out;
}

AmalgamWord AmalgamGroup::parse(const std::string& s) const {
  AmalgamWord w = identity();
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
  skip_ws();
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
  } else {
    TailElt t{0, 0};
    while (pos < s.size() && s[pos] == 't') {
      if (pos + 2 >= s.size() || s[pos + 2] != '^')
        throw Error(ErrorCode::InputError, "bad tail in word: " + s);
      int gen = s[pos + 1] - '0';
      pos += 3;
      int e = 0;
      while (pos < s.size() && isdigit(s[pos])) e = e * 10 + (s[pos++] - '0');
      (gen == 1 ? t.a : t.b) = e;
      skip_ws();
    }
    w.tail_ = tail_canon(t.a, t.b);
  }
  skip_ws();
  while (pos < s.size()) {
    if (s.compare(pos, 2, "\xC2\xB7") == 0) {
      pos += 2;
      skip_ws();
      continue;
    }
    if (s[pos] != '[') throw Error(ErrorCode::InputError, "bad syllable in word: " + s);
    size_t colon = s.find(':', pos);
    size_t close = s.find(']', pos);
    if (colon == std::string::npos || close == std::string::npos)
      throw Error(ErrorCode::InputError, "bad syllable in word: " + s);
    int side = std::stoi(s.substr(pos + 1, colon - pos - 1));
    Rat theta = Rat::from_string(s.substr(colon + 1, close - colon - 1));
    w = w * k(side, theta);
    pos = close + 1;
    skip_ws();
  }
  return w;
}

std::pair<AmalgamWord, AmalgamWord> AmalgamGroup::wspin_generators() const {
  if (!spin_)
    throw Error(ErrorCode::BadParityColouring, "wspin generators need a spin handle");
  auto gen = [&](int i) { return k(i, colouring_(i) == 2 ? Rat(1, 4) : Rat(1, 2)); };
  return {gen(1), gen(2)};
}

AmalgamGroup::UTildeStructure AmalgamGroup::utilde_structure() const {
  UTildeStructure st;
  std::vector<TailElt> tails = tail_elements();
  st.order = tails.size();
  st.abelian = true;
  for (const TailElt& x : tails)
    for (const TailElt& y : tails)
      if (!(tail_mul(x, y) == tail_mul(y, x))) st.abelian = false;
  std::map<int, int> orders;
  for (const TailElt& x : tails) {
    TailElt p = x;
    int o = 1;
    while (!p.is_identity()) {
      p = tail_mul(p, x);
      ++o;
    }
    ++orders[o];
  }
  st.element_orders.assign(orders.begin(), orders.end());
  if (!spin_) {
    st.iso_tag = UTildeKind::KleinFour;
  } else if (st.order == 16) {
    st.iso_tag = UTildeKind::Z4xZ4;
  } else if (!st.abelian) {
    st.iso_tag = UTildeKind::Q8;
  } else {
    st.iso_tag = UTildeKind::Z4xZ2;
  }
  if (st.iso_tag != kind_)
    throw Error(ErrorCode::ConstructionInvariantFailed, "tail census disagrees with the case tag");
  return st;
}

}  // namespace spincover
