#pragma once

// Shared example nets used across test suites.

#include "tpn/net.hpp"

namespace tpn::testing {

// Two-place cycle: p1 -> q1 -> p2 -> q2 -> p1, tau = (1, 2), M0 = (2, 0).
inline PetriNet make_cycle2() {
  NetBuilder b("cycle2");
  b.add_place("p1", rat(1), rat(2));
  b.add_place("p2", rat(2), rat(0));
  b.add_transition("q1");
  b.add_transition("q2");
  b.add_arc("p1", "q1");
  b.add_arc("q1", "p2");
  b.add_arc("p2", "q2");
  b.add_arc("q2", "p1");
  return b.build();
}

// Priority gadget: place p feeds q+ (high) and q- (low); r+ and r- are extra
// upstream places of q+ and q-. Unit weights, unit holding times.
inline PetriNet make_prio3() {
  NetBuilder b("prio3");
  b.add_place("p", rat(1), rat(3));
  b.add_place("rp", rat(1), rat(1));
  b.add_place("rm", rat(1), rat(4));
  b.add_transition("qp");
  b.add_transition("qm");
  b.add_arc("p", "qp");
  b.add_arc("p", "qm");
  b.add_arc("rp", "qp");
  b.add_arc("rm", "qm");
  b.set_priority("p", "qp", "qm");
  return b.build();
}

// Two-level call handling net. Pools p1 (level 1) and p2 (level 2) carry the
// only initial tokens; p3 dispatches calls into three categories; p2 serves
// the extremely-urgent path (q5) with priority over the urgent path (q6).
inline PetriNet make_callcenter(const Rational& level1, const Rational& level2) {
  NetBuilder b("callcenter");
  b.add_place("p1", rat(1, 100), level1);   // level-1 operators
  b.add_place("p2", rat(1, 100), level2);   // level-2 operators
  b.add_place("p3", rat(1, 100));           // call classification
  b.add_place("p4", rat(4));                // level 1 handles extremely urgent, waits for level 2
  b.add_place("p5", rat(3));                // level 1 handles urgent
  b.add_place("p6", rat(3));                // level 1 handles non-urgent
  b.add_place("p7", rat(1));                // level-2 wrap-up after extremely urgent
  b.add_place("p8", rat(1, 100));           // urgent calls waiting for level 2
  b.add_place("p9", rat(6));                // level 2 treats extremely urgent
  b.add_place("p10", rat(7));               // level 2 treats urgent
  for (int i = 1; i <= 11; ++i) b.add_transition("q" + std::to_string(i));
  b.add_arc("p1", "q1");
  b.add_arc("q1", "p3");
  b.add_arc("p3", "q2");
  b.add_arc("p3", "q3");
  b.add_arc("p3", "q4");
  b.add_arc("q2", "p4");
  b.add_arc("q3", "p5");
  b.add_arc("q4", "p6");
  b.add_arc("p4", "q5");
  b.add_arc("p2", "q5");
  b.add_arc("q5", "p1");
  b.add_arc("q5", "p9");
  b.add_arc("p8", "q6");
  b.add_arc("p2", "q6");
  b.add_arc("q6", "p10");
  b.add_arc("p9", "q7");
  b.add_arc("q7", "p7");
  b.add_arc("p7", "q8");
  b.add_arc("q8", "p2");
  b.add_arc("p5", "q9");
  b.add_arc("q9", "p1");
  b.add_arc("q9", "p8");
  b.add_arc("p6", "q10");
  b.add_arc("q10", "p1");
  b.add_arc("p10", "q11");
  b.add_arc("q11", "p2");
  b.set_conflict("p3", {{"q2", rat(1057, 3856)}, {"q3", rat(1057, 3856)}, {"q4", rat(871, 1928)}});
  b.set_priority("p2", "q5", "q6");
  return b.build();
}

// Calibrated staffing: level-1 pool used by the tabulated experiments.
inline Rational callcenter_level1() { return rat(701, 7); }

inline PetriNet make_callcenter_at_ratio(const Rational& ratio) {
  return make_callcenter(callcenter_level1(), ratio * callcenter_level1());
}

}  // namespace tpn::testing
