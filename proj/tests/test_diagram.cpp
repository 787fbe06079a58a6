#include <doctest.h>

#include "spincover/cartan.hpp"
#include "spincover/colouring.hpp"
#include "spincover/diagram_json.hpp"

using namespace spincover;

namespace {

CartanMatrix rank4() {
  return CartanMatrix::validate(
      {{2, -2, 0, 0}, {-2, 2, -1, 0}, {0, -4, 2, -1}, {0, 0, -1, 2}});
}

}  // namespace

TEST_CASE("validate_gcm accepts the running example and rank 1") {
  CHECK(rank4().size() == 4);
  CHECK(CartanMatrix::validate({{2}}).size() == 1);
}

TEST_CASE("validate_gcm rejects each axiom violation with located errors") {
  CHECK_THROWS_WITH_AS(CartanMatrix::validate({{2, -1}, {0, 2}}),
                       "ZeroNotSymmetric: a(2,1) = 0 but a(1,2) = -1",
                       Error);
  try {
    CartanMatrix::validate({{3}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DiagonalNotTwo);
  }
  try {
    CartanMatrix::validate({{2, 1}, {-1, 2}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PositiveOffDiagonal);
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("edge classes of the running example") {
  CartanMatrix cm = rank4();
  EdgeClass e12 = edge_class(cm, 1, 2);
  CHECK(e12.kind == EdgeKind::Infinity);
  CHECK(e12.qij == 4);
  CHECK(e12.ann_ij == 2);
  CHECK(e12.ann_ji == 2);
  CHECK(edge_class(cm, 3, 4).kind == EdgeKind::A2);
  CHECK(edge_class(cm, 1, 3).kind == EdgeKind::None);
  CHECK_THROWS_AS(edge_class(cm, 2, 2), Error);
}

TEST_CASE("braid order is symmetric, parity need not be") {
  for (const auto& rows : {std::vector<std::vector<long>>{{2, -2}, {-1, 2}},
                           std::vector<std::vector<long>>{{2, -3}, {-1, 2}},
                           std::vector<std::vector<long>>{{2, -4}, {-1, 2}},
                           std::vector<std::vector<long>>{{2, -5, -1}, {-2, 2, 0}, {-1, 0, 2}}}) {
    CartanMatrix cm = CartanMatrix::validate(rows);
    for (int i = 1; i <= cm.size(); ++i)
      for (int j = 1; j <= cm.size(); ++j) {
        if (i == j) continue;
        CHECK(braid_order_m(cm, i, j) == braid_order_m(cm, j, i));
        CHECK((parity_n(cm, i, j) == 0 || parity_n(cm, i, j) == 1));
      }
  }
}

TEST_CASE("parities and braid orders") {
  CartanMatrix cm = rank4();
  CHECK(parity_n(cm, 2, 3) == 1);
  CHECK(parity_n(cm, 3, 2) == 0);
  CHECK(braid_order_m(cm, 1, 2) == 0);
  CHECK(braid_order_m(cm, 3, 4) == 3);
  CartanMatrix g2 = CartanMatrix::validate({{2, -1}, {-3, 2}});
  CHECK(braid_order_m(g2, 1, 2) == 6);
  CHECK(braid_order_m(g2, 2, 1) == 6);
  CartanMatrix c2 = CartanMatrix::validate({{2, -2}, {-1, 2}});
  CHECK(braid_order_m(c2, 1, 2) == 4);
  CartanMatrix a1a1 = CartanMatrix::validate({{2, 0}, {0, 2}});
  CHECK(braid_order_m(a1a1, 1, 2) == 2);
}

TEST_CASE("orientation: intrinsic, colour, label rules") {
  CartanMatrix cm = rank4();
  Colouring kmax = kappa_max(cm);
  // a(2,3) odd: 2 -> 3.
  CHECK(direction_from_i(cm, kmax, 2, 3));
  CHECK(!direction_from_i(cm, kmax, 3, 2));
  // (1,2) has even/even annotations: label tie-break.
  CHECK(direction_from_i(cm, kmax, 2, 1));

  CartanMatrix a2 = CartanMatrix::validate({{2, -1}, {-1, 2}});
  Colouring k2 = Colouring::constant(2, 2);
  CHECK(direction_from_i(a2, k2, 2, 1));
  CHECK(!direction_from_i(a2, k2, 1, 2));

  // C2 with kappa = (1 on short, 2 on long): long -> short, intrinsically.
  CartanMatrix c2 = CartanMatrix::validate({{2, -2}, {-1, 2}});
  Colouring kc{{1, 2}};
  CHECK(direction_from_i(c2, kc, 2, 1));

  // Antisymmetry and totality on every pair.
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j)
        CHECK(direction_from_i(cm, kmax, i, j) == !direction_from_i(cm, kmax, j, i));
}

TEST_CASE("components") {
  CHECK(components(CartanMatrix::validate({{2, 0}, {0, 2}})).size() == 2);
  CHECK(components(rank4()) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CartanMatrix m = CartanMatrix::validate({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
  CHECK(components(m) == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("diagram reconstructs the matrix exactly") {
  for (const auto& rows : {std::vector<std::vector<long>>{{2, -2, 0, 0},
                                                          {-2, 2, -1, 0},
                                                          {0, -4, 2, -1},
                                                          {0, 0, -1, 2}},
                           std::vector<std::vector<long>>{{2, -1}, {-3, 2}},
                           std::vector<std::vector<long>>{{2, -2}, {-1, 2}},
                           std::vector<std::vector<long>>{{2}}}) {
    CartanMatrix cm = CartanMatrix::validate(rows);
    CHECK(augmented_diagram(cm).to_matrix() == cm);
  }
}

TEST_CASE("json round trip is bit-exact") {
  CartanMatrix cm = rank4();
  auto j = diagram_to_json(cm, kappa_max(cm));
  DiagramDocument doc = parse_diagram_json(j);
  CHECK(doc.cm == cm);
  CHECK(doc.colouring.has_value());
  CHECK(*doc.colouring == kappa_max(cm));
  CHECK(diagram_to_json(doc.cm, doc.colouring) == j);
}

TEST_CASE("json rejects malformed input with located messages") {
  CHECK_THROWS_AS(parse_diagram_json(nlohmann::json::parse("{}")), Error);
  auto j = nlohmann::json::parse(R"({"cartan": [[2, -1.5], [-1, 2]]})");
  try {
    parse_diagram_json(j);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}
