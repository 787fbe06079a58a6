#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spincover/colouring.hpp"
#include "spincover/rational.hpp"

namespace spincover {

// Rank-2 free amalgamated products K^{r,s} = K1 T *_T K2 T and their spin
// extensions K~^{r,s} = K~1 U~ *_{U~} K~2 U~, with rs >= 4. Angles are
// rationals in units of pi; the circle parametrisations have period 2.
//
// Elements are Britton-style normal forms: a tail in the amalgamated
// subgroup (T or U~) on the left, then strictly alternating syllables of
// nontrivial coset representatives.

enum class UTildeKind { KleinFour, Q8, Z4xZ4, Z4xZ2 };

const char* utilde_kind_name(UTildeKind k);

// Canonical word t1^a t2^b in the amalgamated subgroup. The exponent ranges
// and the commutation rule depend on the group kind.
struct TailElt {
  int a = 0;
  int b = 0;

  bool is_identity() const { return a == 0 && b == 0; }
  bool operator==(const TailElt& o) const { return a == o.a && b == o.b; }
  bool operator<(const TailElt& o) const { return a != o.a ? a < o.a : b < o.b; }
};

class AmalgamGroup;
using AmalgamGroupPtr = std::shared_ptr<const AmalgamGroup>;

struct Syllable {
  int side;   // 1 or 2
  Rat theta;  // in (0, period(side)), units of pi

  bool operator==(const Syllable& o) const { return side == o.side && theta == o.theta; }
  bool operator<(const Syllable& o) const {
    if (side != o.side) return side < o.side;
    return theta < o.theta;
  }
};

class AmalgamWord {
 public:
  AmalgamWord() = default;

  const TailElt& tail() const { return tail_; }
  const std::vector<Syllable>& syllables() const { return sylls_; }
  const AmalgamGroupPtr& group() const { return group_; }

  bool is_identity() const { return tail_.is_identity() && sylls_.empty(); }
  size_t length() const { return sylls_.size(); }

  AmalgamWord operator*(const AmalgamWord& o) const;
  AmalgamWord inverse() const;
  AmalgamWord pow(long e) const;

  // Normal forms are canonical: equality of words is equality of elements.
  bool operator==(const AmalgamWord& o) const {
    return tail_ == o.tail_ && sylls_ == o.sylls_;
  }
  bool operator!=(const AmalgamWord& o) const { return !(*this == o); }
  bool operator<(const AmalgamWord& o) const {
    if (!(tail_ == o.tail_)) return tail_ < o.tail_;
    return sylls_ < o.sylls_;
  }

  // "u · [side:theta] [side:theta] ...", theta a reduced fraction of pi.
  std::string str() const;

 private:
  friend class AmalgamGroup;
  AmalgamGroupPtr group_;
  TailElt tail_;
  std::vector<Syllable> sylls_;
};

class AmalgamGroup : public std::enable_shared_from_this<AmalgamGroup> {
 public:
  // r, s positive with rs >= 4; the Cartan matrix is [[2,-r],[-s,2]]. For
  // spin groups, an optional colouring (values for vertices 1, 2) is checked
  // against the parity-forced sides.
  static AmalgamGroupPtr build(long r, long s, bool spin,
                               const Colouring* colouring = nullptr);

  long r() const { return r_; }
  long s() const { return s_; }
  bool spin() const { return spin_; }
  UTildeKind utilde_kind() const { return kind_; }

  // parity of the Cartan entry a(i,j) for i != j in {1,2}
  int n_par(int i, int /*j*/) const { return i == 1 ? n12_ : n21_; }
  // true when side i is the singly covered {+-1} x SO(2) factor
  bool singly_covered(int i) const { return spin_ && (i == 1 ? single1_ : single2_); }
  // coset period of side i: doubly covered spin circle 1/2, else 1
  Rat period(int i) const;
  // order of the tail generator on side i
  int tail_order(int i) const;

  AmalgamWord identity() const;
  AmalgamWord tail_word(const TailElt& t) const;
  // Circle generator k_i(theta) resp. k~_i(theta), theta in units of pi
  // modulo 2.
  AmalgamWord k(int side, const Rat& theta) const;
  // Torus generator t_i resp. t~_i.
  AmalgamWord t(int side) const;

  // Multiply two canonical tails.
  TailElt tail_mul(const TailElt& x, const TailElt& y) const;
  TailElt tail_inverse(const TailElt& x) const;
  // Conjugation sign of the tail acting on side i: u^-1 k_i(theta) u =
  // k_i(sign * theta).
  int tail_action_sign(const TailElt& u, int side) const;
  std::vector<TailElt> tail_elements() const;

  AmalgamWord parse(const std::string& s) const;

  // Spin-extended Weyl generators: k~_i(1/4) when kappa(i) = 2, k~_i(1/2)
  // when kappa(i) = 1.
  std::pair<AmalgamWord, AmalgamWord> wspin_generators() const;

  struct UTildeStructure {
    size_t order;
    bool abelian;
    std::vector<std::pair<int, int>> element_orders;  // (order, count)
    UTildeKind iso_tag;
  };
  UTildeStructure utilde_structure() const;

 private:
  friend class AmalgamWord;
  AmalgamGroup() = default;
  TailElt tail_canon(long a, long b) const;
  void mul_atom_tail(TailElt& tail, std::vector<Syllable>& sylls, const TailElt& u) const;
  void mul_atom_syllable(TailElt& tail, std::vector<Syllable>& sylls, int side,
                         const Rat& theta) const;

  long r_ = 0, s_ = 0;
  bool spin_ = false;
  int n12_ = 0, n21_ = 0;
  bool single1_ = false, single2_ = false;
  UTildeKind kind_ = UTildeKind::KleinFour;
  int order1_ = 2, order2_ = 2;  // tail generator orders
  bool q8_ = false;              // t1 t2 = t2^-1 t1 and t1^2 = t2^2
  Colouring colouring_;
};

}  // namespace spincover
