#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "tpn/policy.hpp"

using namespace tpn;
using namespace tpn::testing;

TEST_CASE("single-choice nets have exactly one policy") {
  auto policies = enumerate_policies(make_cycle2());
  REQUIRE(policies.size() == 1);
  const Policy& pi = policies[0];
  CHECK(pi.selection == RatMatrix::identity(2));
  CHECK(pi.cminus_pi == RatMatrix::identity(2));
  CHECK(pi.dpi.at(0, 0) == rat(1));
  CHECK(pi.dpi.at(1, 1) == rat(2));
}

TEST_CASE("policy count is the product of in-degrees") {
  // two transitions with 2 and 3 upstream places -> 6 policies
  NetBuilder b;
  for (auto p : {"a", "b", "c", "d", "e"}) b.add_place(p, rat(1));
  b.add_transition("q1");
  b.add_transition("q2");
  b.add_arc("a", "q1");
  b.add_arc("b", "q1");
  b.add_arc("c", "q2");
  b.add_arc("d", "q2");
  b.add_arc("e", "q2");
  b.add_arc("q1", "c");
  b.add_arc("q2", "a");
  auto policies = enumerate_policies(b.build());
  CHECK(policies.size() == 6);
}

TEST_CASE("policy cap throws") {
  PetriNet net = make_prio3();  // 4 policies
  CHECK_THROWS_AS(enumerate_policies(net, 3), PolicyExplosion);
}

TEST_CASE("prio3 policy matrices follow the row rules") {
  PetriNet net = make_prio3();
  auto policies = enumerate_policies(net);
  REQUIRE(policies.size() == 4);

  std::size_t p = *net.place_index("p");
  const Policy* both_p = nullptr;
  for (const auto& pi : policies)
    if (pi.choice[0] == p && pi.choice[1] == p) both_p = &pi;
  REQUIRE(both_p != nullptr);

  // order (qp, qm): lower triangular with the residual coupling on the low row
  CHECK(both_p->cminus_pi.at(0, 0) == 1);
  CHECK(both_p->cminus_pi.at(0, 1) == 0);
  CHECK(both_p->cminus_pi.at(1, 0) == 1);
  CHECK(both_p->cminus_pi.at(1, 1) == 1);
}

TEST_CASE("conflict choices divide by the routing weight") {
  NetBuilder b;
  b.add_place("p", rat(2));
  b.add_transition("q1");
  b.add_transition("q2");
  b.add_arc("p", "q1");
  b.add_arc("p", "q2");
  b.add_arc("q1", "p", 1);
  b.set_conflict("p", {{"q1", rat(1, 4)}, {"q2", rat(3, 4)}});
  PetriNet net = b.build();
  auto policies = enumerate_policies(net);
  REQUIRE(policies.size() == 1);
  CHECK(policies[0].cminus_pi.at(0, 0) == rat(4));       // 1 / (1/4)
  CHECK(policies[0].cminus_pi.at(1, 1) == rat(4, 3));    // 1 / (3/4)
}

TEST_CASE("every policy selects a consumed place and is invertible") {
  for (const PetriNet& net : {make_cycle2(), make_prio3(), make_callcenter_at_ratio(rat(1))}) {
    auto policies = enumerate_policies(net);
    std::size_t expected = 1;
    for (std::size_t q = 0; q < net.transition_count(); ++q) expected *= net.transition_inputs(q).size();
    CHECK(policies.size() == expected);
    for (const auto& pi : policies) {
      for (std::size_t q = 0; q < net.transition_count(); ++q) {
        CHECK(pi.selection.at(q, pi.choice[q]) == 1);
        CHECK(net.upstream_weight(q, pi.choice[q]) > 0);
      }
      CHECK(rank(pi.cminus_pi) == net.transition_count());
    }
  }
}
