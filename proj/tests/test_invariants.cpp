#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "tpn/invariants.hpp"

using namespace tpn;
using namespace tpn::testing;

TEST_CASE("cycle2 conserves the token count") {
  auto inv = p_invariants(make_cycle2());
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].y == std::vector<Rational>{rat(1), rat(1)});
}

TEST_CASE("token-multiplying loop has no nonnegative invariant") {
  // p1 -> q (consume 1), q -> p2 (produce 2), p2 -> q2, q2 -> p1 (produce 1)
  NetBuilder b;
  b.add_place("p1", rat(1), rat(1));
  b.add_place("p2", rat(1));
  b.add_transition("q");
  b.add_transition("q2");
  b.add_arc("p1", "q");
  b.add_arc("q", "p2", 2);
  b.add_arc("p2", "q2");
  b.add_arc("q2", "p1");
  auto inv = p_invariants(b.build());
  CHECK(inv.empty());
}

TEST_CASE("call-center has one invariant per operator pool") {
  PetriNet net = make_callcenter_at_ratio(rat(1));
  auto inv = p_invariants(net);
  auto p = [&](const char* n) { return *net.place_index(n); };

  // level-1 cycle: p1, p3, p4, p5, p6; level-2 cycle: p2, p7, p9, p10
  std::vector<Rational> level1(net.place_count()), level2(net.place_count());
  for (auto n : {"p1", "p3", "p4", "p5", "p6"}) level1[p(n)] = 1;
  for (auto n : {"p2", "p7", "p9", "p10"}) level2[p(n)] = 1;

  bool has1 = false, has2 = false;
  for (const auto& i : inv) {
    has1 = has1 || i.y == level1;
    has2 = has2 || i.y == level2;
  }
  CHECK(has1);
  CHECK(has2);
}

TEST_CASE("every generated invariant satisfies yT C = 0 exactly") {
  for (const PetriNet& net : {make_cycle2(), make_prio3(), make_callcenter_at_ratio(rat(2, 5))}) {
    RatMatrix c = matrices(net).c;
    for (const auto& i : p_invariants(net)) {
      REQUIRE(i.y.size() == net.place_count());
      auto yc = c.transposed().apply(i.y);
      for (const auto& v : yc) CHECK(v == 0);
      bool nonzero = false, nonneg = true;
      for (const auto& v : i.y) {
        nonzero = nonzero || v != 0;
        nonneg = nonneg && v >= 0;
      }
      CHECK(nonzero);
      CHECK(nonneg);
    }
  }
}
