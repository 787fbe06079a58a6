#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spincover/amalgam.hpp"
#include "spincover/cartan.hpp"
#include "spincover/clifford.hpp"
#include "spincover/colouring.hpp"
#include "spincover/matgroups.hpp"

namespace spincover {

enum class Family { W, Wext, Wspin, WspinColoured };
enum class R2Variant { Standard, PrimeLeft, PrimeRight };

const char* family_name(Family f);

// Finitely presented group data. Relator words are signed 1-based generator
// indices; a negative index is the inverse generator.
struct Presentation {
  int n = 0;
  Family family = Family::W;
  std::vector<std::vector<int>> relators;

  // "s", "t" or "r" depending on the family.
  std::string generator_prefix() const;
};

Presentation presentation(const CartanMatrix& cm, Family family,
                          const Colouring* colouring = nullptr,
                          R2Variant variant = R2Variant::Standard);

// One concrete group element: Clifford, exact matrix, SO(2) x SU(2), a pair
// of Clifford elements (Spin(2) x Spin(2)), or an amalgam word.
class GElt {
 public:
  using Pair = std::pair<CliffordElement, CliffordElement>;
  using Var = std::variant<CliffordElement, ExactMatrix, SO2xSU2Element, Pair, AmalgamWord>;

  GElt() = default;
  explicit GElt(Var v) : v_(std::move(v)) {}

  const Var& value() const { return v_; }

  GElt operator*(const GElt& o) const;
  GElt inverse() const;
  bool is_identity() const;
  bool operator==(const GElt& o) const;
  bool operator!=(const GElt& o) const { return !(*this == o); }
  bool operator<(const GElt& o) const;
  std::string str() const;

 private:
  Var v_;
};

// Concrete rank-2 model for a vertex pair, per edge valency and colours.
struct Rank2Model {
  std::string tag;  // e.g. "Spin(3)", "SO(2)xSU(2)", "K~{5,5}"
  GElt xi, xj;      // images of the generators attached to i and j
};

Rank2Model rank2_table(const CartanMatrix& cm, const Colouring& k, int i, int j);

// Evaluate a relator word under gen[v-1] as the image of generator v.
GElt evaluate_in_model(const std::vector<GElt>& gens, const std::vector<int>& word);

struct RelationReport {
  struct Line {
    std::string context;  // pair + model tag
    std::string relation;
    bool pass;
  };
  std::vector<Line> lines;
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// Re-executes the rank-2 case analysis: every family relator involving the
// pair {i,j} is evaluated in the rank2_table model, for every pair; for the
// spin families the derived relations are checked as well.
RelationReport verify_relations(const CartanMatrix& cm, const Colouring& k, Family family);

enum class Level { W, Wtilde, What };

// BFS order of W / W-tilde / W-hat for spherical diagrams of supported
// global-model type (A_k paths, C2, G2 and disjoint unions thereof).
size_t enumerate_order(const CartanMatrix& cm, const Colouring& k, Level level,
                       size_t cap = 1000000);

struct OrderFormulaReport {
  size_t w = 0, wtilde = 0, what = 0;
  int rank = 0;
  int c = 0;
  bool dext_factor_ok = false;   // |W~| = 2^{|I|} |W|
  bool centre_factor_ok = false;  // |W^| = 2^{c} |W~|
  bool pass() const { return dext_factor_ok && centre_factor_ok; }
};

OrderFormulaReport order_formula_check(const CartanMatrix& cm, const Colouring& k,
                                       size_t cap = 1000000);

// Maps each folded generator to its unfolded counterpart (single generator
// for kappa = 2, product with the primed copy for kappa = 1) and verifies
// that every folded coloured-Wspin relator dies in the unfolded model.
RelationReport unfold_generator_check(const CartanMatrix& cm, const Colouring& k);

}  // namespace spincover
