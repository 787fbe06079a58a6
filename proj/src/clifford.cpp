#include "spincover/clifford.hpp"

#include <bit>
#include <sstream>

namespace spincover {

namespace {

// Sign from reordering the concatenation of ascending blades a, b into
// ascending order: counts pairs (i in a, j in b) with i > j.
int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// Product of two basis blades; e_i^2 = -1 contributes one sign per shared
// index.
std::pair<unsigned, int> blade_mul(unsigned a, unsigned b) {
  int s = reorder_sign(a, b);
  if (std::popcount(a & b) & 1) s = -s;
  return {a ^ b, s};
}

int grade(unsigned mask) { return std::popcount(mask); }

}  // namespace

CliffordElement CliffordElement::scalar(int n, const QSqrt2& c) {
  CliffordElement x(n);
  x.set_coeff(0, c);
  return x;
}

CliffordElement CliffordElement::e(int n, int i) {
  CliffordElement x(n);
  x.set_coeff(1u << (i - 1), QSqrt2(1));
  return x;
}

CliffordElement CliffordElement::blade(int n, const std::vector<int>& idx, const QSqrt2& c) {
  unsigned mask = 0;
  for (size_t t = 0; t < idx.size(); ++t) {
    if (t > 0 && idx[t] <= idx[t - 1])
      throw Error(ErrorCode::InputError, "blade indices must ascend");
    mask |= 1u << (idx[t] - 1);
  }
  CliffordElement x(n);
  x.set_coeff(mask, c);
  return x;
}

QSqrt2 CliffordElement::coeff(unsigned mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? QSqrt2(0) : it->second;
}

void CliffordElement::set_coeff(unsigned mask, const QSqrt2& c) {
  if (c.is_zero())
    terms_.erase(mask);
  else
    terms_[mask] = c;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::DimensionMismatch, "Clifford sum");
  CliffordElement r = *this;
  for (const auto& [m, c] : o.terms_) r.set_coeff(m, r.coeff(m) + c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  return *this + (-o);
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r(n_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::DimensionMismatch, "Clifford product");
  CliffordElement r(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      auto [m, s] = blade_mul(ma, mb);
      QSqrt2 c = ca * cb;
      r.set_coeff(m, r.coeff(m) + (s < 0 ? -c : c));
    }
  return r;
}

CliffordElement CliffordElement::scaled(const QSqrt2& c) const {
  CliffordElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
  return r;
}

bool CliffordElement::operator<(const CliffordElement& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return jt != o.terms_.end();
}

bool CliffordElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool CliffordElement::has_even_support() const {
  for (const auto& [m, c] : terms_)
    if (grade(m) & 1) return false;
  return true;
}

CliffordElement CliffordElement::reverse() const {
  CliffordElement r(n_);
  for (const auto& [m, c] : terms_) {
    int k = grade(m);
    r.terms_[m] = ((k * (k - 1) / 2) & 1) ? -c : c;
  }
  return r;
}

CliffordElement CliffordElement::grade_involution() const {
  CliffordElement r(n_);
  for (const auto& [m, c] : terms_) r.terms_[m] = (grade(m) & 1) ? -c : c;
  return r;
}

CliffordElement CliffordElement::clifford_conj() const {
  return reverse().grade_involution();
}

CliffordElement CliffordElement::spinor_norm() const { return *this * clifford_conj(); }

bool CliffordElement::is_pin() const {
  if (spinor_norm() != one(n_)) return false;
  CliffordElement inv = clifford_conj();
  CliffordElement gx = grade_involution();
  for (int i = 1; i <= n_; ++i) {
    CliffordElement img = gx * e(n_, i) * inv;
    for (const auto& [m, c] : img.terms())
      if (grade(m) != 1) return false;
  }
  return true;
}

bool CliffordElement::is_spin() const { return has_even_support() && is_pin(); }

CliffordElement CliffordElement::inverse() const {
  CliffordElement conj = clifford_conj();
  if (*this * conj != one(n_))
    throw Error(ErrorCode::NotInvertible, "spinor norm is not 1");
  return conj;
}

ExactMatrix CliffordElement::twisted_adjoint() const {
  if (!is_spin()) throw Error(ErrorCode::NotSpin, "twisted adjoint needs a Spin element");
  CliffordElement inv = clifford_conj();
  CliffordElement gx = grade_involution();
  ExactMatrix m(n_);
  for (int i = 1; i <= n_; ++i) {
    CliffordElement img = gx * e(n_, i) * inv;
    for (int j = 1; j <= n_; ++j) m.at(i - 1, j - 1) = img.coeff(1u << (j - 1));
  }
  return m;
}

CliffordElement CliffordElement::embed(int m, const std::vector<int>& index_map) const {
  if (static_cast<int>(index_map.size()) != n_)
    throw Error(ErrorCode::DimensionMismatch, "index map must cover the source dimension");
  for (size_t t = 0; t < index_map.size(); ++t) {
    if (index_map[t] < 1 || index_map[t] > m)
      throw Error(ErrorCode::InputError, "index map exceeds target dimension");
    if (t > 0 && index_map[t] <= index_map[t - 1])
      throw Error(ErrorCode::InputError, "index map must be strictly increasing");
  }
  CliffordElement r(m);
  for (const auto& [mask, c] : terms_) {
    unsigned nm = 0;
    for (int b = 0; b < n_; ++b)
      if (mask & (1u << b)) nm |= 1u << (index_map[b] - 1);
    r.terms_[nm] = c;
  }
  return r;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += "  +  ";
    first = false;
    out += "(" + c.str() + ")";
    if (m != 0) {
      out += " * ";
      for (int b = 0; b < n_; ++b)
        if (m & (1u << b)) out += "e" + std::to_string(b + 1);
    }
  }
  return out;
}

CliffordElement CliffordElement::parse(int n, const std::string& s) {
  CliffordElement r(n);
  if (s == "0") return r;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find("  +  ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 5;
    size_t close = term.find(')');
    if (term.empty() || term[0] != '(' || close == std::string::npos)
      throw Error(ErrorCode::InputError, "bad Clifford term: " + term);
    QSqrt2 c = QSqrt2::parse(term.substr(1, close - 1));
    unsigned mask = 0;
    size_t t = close + 1;
    while (t < term.size()) {
      if (term[t] == ' ' || term[t] == '*') { ++t; continue; }
      if (term[t] != 'e') throw Error(ErrorCode::InputError, "bad blade in: " + term);
      ++t;
      int idx = 0;
      while (t < term.size() && isdigit(term[t])) idx = idx * 10 + (term[t++] - '0');
      mask |= 1u << (idx - 1);
    }
    r.set_coeff(mask, r.coeff(mask) + c);
  }
  return r;
}

CliffordElement spin_generator_S(long k) {
  CliffordElement x(2);
  x.set_coeff(0, cos_pi4(k));
  x.set_coeff(0b11, sin_pi4(k));
  return x;
}

CliffordElement embed_spin(const CliffordElement& x, int n, const std::vector<int>& idx) {
  return x.embed(n, idx);
}

QuatPairSplit spin4_split(const CliffordElement& x) {
  if (x.dim() != 4 || !x.is_spin())
    throw Error(ErrorCode::NotSpin4, "expected an element of Spin(4)");
  // Basis 1, i=e1e2, j=e2e3, k=e3e1, I=e1e2e3e4, Ii=e4e3, Ij=e4e1, Ik=e4e2;
  // canonical storage is ascending, so e3e1 = -e1e3 etc.
  QuatPairSplit s;
  s.u[0] = x.coeff(0b0000);
  s.u[1] = x.coeff(0b0011);   // e1e2
  s.u[2] = x.coeff(0b0110);   // e2e3
  s.u[3] = -x.coeff(0b0101);  // e3e1 = -e1e3
  s.v[0] = x.coeff(0b1111);   // e1e2e3e4
  s.v[1] = -x.coeff(0b1100);  // e4e3 = -e3e4
  s.v[2] = -x.coeff(0b1001);  // e4e1 = -e1e4
  s.v[3] = -x.coeff(0b1010);  // e4e2 = -e2e4
  return s;
}

CliffordElement spin4_project(const CliffordElement& x, Spin4Side side) {
  QuatPairSplit s = spin4_split(x);
  CliffordElement r(3);
  for (int t = 0; t < 4; ++t) {
    QSqrt2 c = (side == Spin4Side::Left) ? s.u[t] + s.v[t] : s.u[t] - s.v[t];
    unsigned mask = t == 0 ? 0u : (t == 1 ? 0b011u : (t == 2 ? 0b110u : 0b101u));
    // k = e3e1 = -e1e3
    if (t == 3) c = -c;
    r.set_coeff(mask, c);
  }
  return r;
}

}  // namespace spincover
