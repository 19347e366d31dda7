#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpn/net.hpp"
#include "tpn/rat_matrix.hpp"

namespace tpn {

struct PolicyExplosion : std::runtime_error {
  explicit PolicyExplosion(std::size_t cap)
      : std::runtime_error("policy count exceeds the cap of " + std::to_string(cap)) {}
};

// A policy maps each transition to one of its upstream places: the candidate
// bottleneck. The derived matrices specialize the dynamics to the policy.
//   selection:  (Q x P) 0/1, row q has a single 1 at the chosen place
//   cminus_pi:  (Q x Q) policy-specific downstream consumption
//   dpi:        (Q x Q) diagonal of chosen holding times
struct Policy {
  std::vector<std::size_t> choice;  // per transition: chosen upstream place
  RatMatrix selection;
  RatMatrix cminus_pi;
  RatMatrix dpi;

  bool operator==(const Policy& o) const { return choice == o.choice; }
};

inline Policy make_policy(const PetriNet& net, std::vector<std::size_t> choice) {
  const std::size_t np = net.place_count(), nq = net.transition_count();
  if (choice.size() != nq) throw std::invalid_argument("policy choice size mismatch");
  Policy pi;
  pi.selection = RatMatrix(nq, np);
  pi.cminus_pi = RatMatrix(nq, nq);
  pi.dpi = RatMatrix(nq, nq);
  for (std::size_t q = 0; q < nq; ++q) {
    std::size_t p = choice[q];
    long w = net.upstream_weight(q, p);
    if (w <= 0) throw std::invalid_argument("policy chooses a non-upstream place for " + net.transition_name(q));
    pi.selection.at(q, p) = 1;
    pi.dpi.at(q, q) = net.holding_time(p);
    const RoutingSpec& r = net.routing(p);
    if (r.kind == RoutingKind::Conflict) {
      pi.cminus_pi.at(q, q) = Rational(w) / *r.weight_for(q);
    } else if (r.kind == RoutingKind::Priority && q == r.low) {
      pi.cminus_pi.at(q, q) = w;
      pi.cminus_pi.at(q, r.high) += net.upstream_weight(r.high, p);
    } else {
      pi.cminus_pi.at(q, q) = w;
    }
  }
  pi.choice = std::move(choice);
  return pi;
}

inline constexpr std::size_t kDefaultPolicyCap = 1000000;

// All policies in lexicographic order of upstream-place choices
// (transitions in declaration order, places in declaration order).
inline std::vector<Policy> enumerate_policies(const PetriNet& net, std::size_t cap = kDefaultPolicyCap) {
  const std::size_t nq = net.transition_count();
  std::size_t count = 1;
  for (std::size_t q = 0; q < nq; ++q) {
    const auto& ins = net.transition_inputs(q);
    if (ins.empty()) throw std::invalid_argument("transition without upstream place");
    if (count > cap / ins.size()) throw PolicyExplosion(cap);
    count *= ins.size();
  }
  std::vector<Policy> out;
  out.reserve(count);
  std::vector<std::size_t> idx(nq, 0);
  for (;;) {
    std::vector<std::size_t> choice(nq);
    for (std::size_t q = 0; q < nq; ++q) choice[q] = net.transition_inputs(q)[idx[q]];
    out.push_back(make_policy(net, std::move(choice)));
    std::size_t q = nq;
    while (q > 0) {
      --q;
      if (++idx[q] < net.transition_inputs(q).size()) break;
      idx[q] = 0;
      if (q == 0) return out;
    }
    if (nq == 0) return out;
  }
}

}  // namespace tpn
