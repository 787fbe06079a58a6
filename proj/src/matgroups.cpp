#include "spincover/matgroups.hpp"

namespace spincover {

Quat Quat::inverse() const {
  QSqrt2 n = norm();
  if (n.is_zero()) throw Error(ErrorCode::NotInvertible, "zero quaternion");
  QSqrt2 ni = n.inverse();
  Quat c = conj();
  return {c.a * ni, c.b * ni, c.c * ni, c.d * ni};
}

std::string Quat::str() const {
  return "(" + a.str() + ") + (" + b.str() + ")i + (" + c.str() + ")j + (" + d.str() + ")k";
}

ExactMatrix left_mul_matrix(const Quat& x) {
  ExactMatrix m(4);
  const QSqrt2 &a = x.a, &b = x.b, &c = x.c, &d = x.d;
  QSqrt2 rows[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
  return m;
}

ExactMatrix right_mul_matrix(const Quat& x) {
  ExactMatrix m(4);
  const QSqrt2 &a = x.a, &b = x.b, &c = x.c, &d = x.d;
  QSqrt2 rows[4][4] = {{a, b, c, d}, {-b, a, -d, c}, {-c, d, a, -b}, {-d, -c, b, a}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
  return m;
}

ExactMatrix rot_D(long k) {
  ExactMatrix m(2);
  m.at(0, 0) = cos_pi4(k);
  m.at(0, 1) = sin_pi4(k);
  m.at(1, 0) = -sin_pi4(k);
  m.at(1, 1) = cos_pi4(k);
  return m;
}

ExactMatrix eps_ij(int n, int i, int j, const ExactMatrix& d2) {
  if (d2.dim() != 2 || i == j || i < 1 || j < 1 || i > n || j > n)
    throw Error(ErrorCode::InputError, "eps_ij placement");
  ExactMatrix m = ExactMatrix::identity(n);
  m.at(i - 1, i - 1) = d2.at(0, 0);
  m.at(i - 1, j - 1) = d2.at(0, 1);
  m.at(j - 1, i - 1) = d2.at(1, 0);
  m.at(j - 1, j - 1) = d2.at(1, 1);
  return m;
}

ExactMatrix iota_so2(int slot, const ExactMatrix& d2) {
  if (slot == 1) return eps_ij(4, 1, 2, d2);
  return eps_ij(4, 3, 4, d2);
}

ExactMatrix zeta_p(long k) { return eps_ij(4, 3, 4, rot_D(k)); }

ExactMatrix zeta_l(long k) {
  // [[x,0,y,0],[0,x,0,y],[-y,0,x,0],[0,-y,0,x]]
  ExactMatrix m(4);
  QSqrt2 x = cos_pi4(k), y = sin_pi4(k);
  m.at(0, 0) = x; m.at(0, 2) = y;
  m.at(1, 1) = x; m.at(1, 3) = y;
  m.at(2, 0) = -y; m.at(2, 2) = x;
  m.at(3, 1) = -y; m.at(3, 3) = x;
  return m;
}

ExactMatrix eta_p(long k) { return eps_ij(4, 3, 4, rot_D(k)); }

ExactMatrix eta_l(long k) { return eps_ij(4, 1, 4, rot_D(2 * k)) * eps_ij(4, 2, 3, rot_D(-k)); }

SO2xSU2Element::SO2xSU2Element(long kk, Quat qq) : k(((kk % 8) + 8) % 8), q(qq) {
  if (!q.is_unit()) throw Error(ErrorCode::InputError, "SU(2) part must be a unit quaternion");
}

std::string SO2xSU2Element::str() const {
  return "(D(" + std::to_string(k) + "pi/4), " + q.str() + ")";
}

SO2xSU2Element zeta_tilde_p(long k) {
  // S(alpha) -> (D(alpha), blockdiag(D(-alpha), D(alpha))) = R_{cos - sin i}.
  return {k, Quat(cos_pi4(k), -sin_pi4(k), QSqrt2(0), QSqrt2(0))};
}

SO2xSU2Element zeta_tilde_l(long k) {
  // S(alpha) -> (id, D~(alpha)) = R_{cos + sin j}.
  return {0, Quat(cos_pi4(k), QSqrt2(0), sin_pi4(k), QSqrt2(0))};
}

ExactMatrix rho_hat(const SO2xSU2Element& e) {
  ExactMatrix z(4);
  QSqrt2 c = cos_pi4(e.k), s = sin_pi4(e.k);
  z.at(0, 0) = c; z.at(0, 1) = s; z.at(1, 0) = -s; z.at(1, 1) = c;
  z.at(2, 2) = c; z.at(2, 3) = s; z.at(3, 2) = -s; z.at(3, 3) = c;
  return z * right_mul_matrix(e.q);
}

Quat spin3_to_quat(const CliffordElement& x) {
  if (x.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "expected Cl(3)");
  // a + b e1e2 + c e2e3 + d e3e1 -> a + bi + cj + dk (e3e1 = -e1e3).
  return {x.coeff(0), x.coeff(0b011), x.coeff(0b110), -x.coeff(0b101)};
}

CliffordElement quat_to_spin3(const Quat& q) {
  CliffordElement x(3);
  x.set_coeff(0, q.a);
  x.set_coeff(0b011, q.b);
  x.set_coeff(0b110, q.c);
  x.set_coeff(0b101, -q.d);
  return x;
}

CliffordElement zeta_tilde(const SO2xSU2Element& e) { return quat_to_spin3(e.q); }

CliffordElement so2xsu2_to_spin4(const SO2xSU2Element& e) {
  // (z, q) corresponds to the pair (a, b) in U1(H) x U1(H), a = cos - sin*i
  // for the circle factor and b = j q j^{-1}; then x = u + I v with
  // u = (a+b)/2, v = (a-b)/2. The inner twist by j is forced by requiring
  // both zeta~_p = eps~_34 and zeta~_l . sq = eps~_23 . eps~_14 to hold for
  // one injective homomorphism.
  Quat a(cos_pi4(e.k), -sin_pi4(e.k), QSqrt2(0), QSqrt2(0));
  Quat jq(QSqrt2(0), QSqrt2(0), QSqrt2(1), QSqrt2(0));
  Quat b = jq * e.q * jq.conj();
  QSqrt2 half(Rat(1, 2));
  Quat u{(a.a + b.a) * half, (a.b + b.b) * half, (a.c + b.c) * half, (a.d + b.d) * half};
  Quat v{(a.a - b.a) * half, (a.b - b.b) * half, (a.c - b.c) * half, (a.d - b.d) * half};
  CliffordElement x(4);
  x.set_coeff(0, u.a);
  x.set_coeff(0b0011, u.b);
  x.set_coeff(0b0110, u.c);
  x.set_coeff(0b0101, -u.d);   // k = -e1e3
  x.set_coeff(0b1111, v.a);
  x.set_coeff(0b1100, -v.b);   // Ii = e4e3 = -e3e4
  x.set_coeff(0b1001, -v.c);   // Ij = e4e1 = -e1e4
  x.set_coeff(0b1010, -v.d);   // Ik = e4e2 = -e2e4
  return x;
}

ExactMatrix eta_so4_to_so3(const Quat& a, const Quat& b) {
  (void)b;  // the right factor is dropped
  if (!a.is_unit()) throw Error(ErrorCode::InputError, "eta needs unit quaternions");
  // Conjugation action x -> a x a^{-1} restricted to <i, j, k>, row i =
  // image coordinates of the i-th basis vector.
  Quat basis[3] = {Quat(QSqrt2(0), QSqrt2(1), QSqrt2(0), QSqrt2(0)),
                   Quat(QSqrt2(0), QSqrt2(0), QSqrt2(1), QSqrt2(0)),
                   Quat(QSqrt2(0), QSqrt2(0), QSqrt2(0), QSqrt2(1))};
  ExactMatrix m(3);
  for (int i = 0; i < 3; ++i) {
    Quat img = a * basis[i] * a.conj();
    m.at(i, 0) = img.b;
    m.at(i, 1) = img.c;
    m.at(i, 2) = img.d;
  }
  return m;
}

namespace {

ExactMatrix diag4(int a, int b, int c, int d) {
  ExactMatrix m(4);
  m.at(0, 0) = QSqrt2(a);
  m.at(1, 1) = QSqrt2(b);
  m.at(2, 2) = QSqrt2(c);
  m.at(3, 3) = QSqrt2(d);
  return m;
}

}  // namespace

IdentityReport conjugation_identity_suite() {
  IdentityReport rep;
  auto check = [&](const std::string& name, bool ok) { rep.lines.push_back({name, ok}); };

  // A2 level in SO(3).
  ExactMatrix D3(3);
  D3.at(0, 2) = QSqrt2(1);
  D3.at(1, 1) = QSqrt2(-1);
  D3.at(2, 0) = QSqrt2(1);
  ExactMatrix B3 = ExactMatrix::identity(3);
  B3.at(1, 1) = QSqrt2(-1);
  B3.at(2, 2) = QSqrt2(-1);
  ExactMatrix C3 = ExactMatrix::identity(3);
  C3.at(0, 0) = QSqrt2(-1);
  C3.at(1, 1) = QSqrt2(-1);
  for (long k = 0; k < 8; ++k) {
    ExactMatrix e12 = eps_ij(3, 1, 2, rot_D(k));
    ExactMatrix e23 = eps_ij(3, 2, 3, rot_D(k));
    ExactMatrix e12i = eps_ij(3, 1, 2, rot_D(-k));
    ExactMatrix e23i = eps_ij(3, 2, 3, rot_D(-k));
    check("A2 gammaD.eps12 = eps23 (k=" + std::to_string(k) + ")", D3 * e12 * D3 == e23);
    check("A2 gammaD.eps23 = eps12 (k=" + std::to_string(k) + ")", D3 * e23 * D3 == e12);
    check("A2 gammaB.eps12 = eps12.inv (k=" + std::to_string(k) + ")", B3 * e12 * B3 == e12i);
    check("A2 gammaB.eps23 = eps23 (k=" + std::to_string(k) + ")", B3 * e23 * B3 == e23);
    check("A2 gammaC.eps12 = eps12 (k=" + std::to_string(k) + ")", C3 * e12 * C3 == e12);
    check("A2 gammaC.eps23 = eps23.inv (k=" + std::to_string(k) + ")", C3 * e23 * C3 == e23i);
  }

  // C2 level in U(2).
  ExactMatrix B2 = diag4(-1, 1, -1, 1);
  ExactMatrix C2 = diag4(-1, -1, 1, 1);
  for (long k = 0; k < 8; ++k) {
    check("C2 gammaB.zeta_p = zeta_p.inv (k=" + std::to_string(k) + ")",
          B2 * zeta_p(k) * B2 == zeta_p(-k));
    check("C2 gammaB.zeta_l = zeta_l (k=" + std::to_string(k) + ")",
          B2 * zeta_l(k) * B2 == zeta_l(k));
    check("C2 gammaC.zeta_p = zeta_p (k=" + std::to_string(k) + ")",
          C2 * zeta_p(k) * C2 == zeta_p(k));
    check("C2 gammaC.zeta_l = zeta_l.inv (k=" + std::to_string(k) + ")",
          C2 * zeta_l(k) * C2 == zeta_l(-k));
  }

  // G2 level in SO(4).
  ExactMatrix BG = diag4(-1, 1, 1, -1);
  ExactMatrix CG = diag4(-1, -1, 1, 1);
  for (long k = 0; k < 8; ++k) {
    check("G2 gammaB.eta_p = eta_p.inv (k=" + std::to_string(k) + ")",
          BG * eta_p(k) * BG == eta_p(-k));
    check("G2 gammaB.eta_l = eta_l (k=" + std::to_string(k) + ")",
          BG * eta_l(k) * BG == eta_l(k));
    check("G2 gammaC.eta_p = eta_p (k=" + std::to_string(k) + ")",
          CG * eta_p(k) * CG == eta_p(k));
    check("G2 gammaC.eta_l = eta_l.inv (k=" + std::to_string(k) + ")",
          CG * eta_l(k) * CG == eta_l(-k));
  }
  return rep;
}

}  // namespace spincover
