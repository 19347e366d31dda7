#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tpn/rat_matrix.hpp"
#include "tpn/rational.hpp"

namespace tpn {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RoutingKind { Plain, Conflict, Priority };

// Routing of a place's processed flow to its output transitions.
//  - Plain: free choice with at most one output transition.
//  - Conflict: stationary split with weights mu summing to 1.
//  - Priority: `high` consumes first, `low` gets the residual.
struct RoutingSpec {
  RoutingKind kind = RoutingKind::Plain;
  std::vector<std::pair<std::size_t, Rational>> weights;  // conflict: (transition, mu)
  std::size_t high = npos, low = npos;                    // priority

  std::optional<Rational> weight_for(std::size_t q) const {
    for (const auto& [t, mu] : weights)
      if (t == q) return mu;
    return std::nullopt;
  }
};

struct Arc {
  std::size_t place = npos, transition = npos;
  long weight = 1;
  bool place_to_transition = true;
};

// Immutable place-timed Petri net with free-choice and priority routing.
// Matrix orderings follow declaration order of places and transitions.
class PetriNet {
 public:
  std::size_t place_count() const { return place_names_.size(); }
  std::size_t transition_count() const { return transition_names_.size(); }

  const std::string& place_name(std::size_t p) const { return place_names_[p]; }
  const std::string& transition_name(std::size_t q) const { return transition_names_[q]; }

  std::optional<std::size_t> place_index(std::string_view name) const {
    auto it = place_index_.find(std::string(name));
    return it == place_index_.end() ? std::nullopt : std::optional(it->second);
  }
  std::optional<std::size_t> transition_index(std::string_view name) const {
    auto it = transition_index_.find(std::string(name));
    return it == transition_index_.end() ? std::nullopt : std::optional(it->second);
  }

  const Rational& holding_time(std::size_t p) const { return tau_[p]; }
  const std::vector<Rational>& holding_times() const { return tau_; }
  const Rational& initial_marking(std::size_t p) const { return m0_[p]; }
  const std::vector<Rational>& initial_markings() const { return m0_; }
  const Rational& initial_waiting(std::size_t p) const { return w0_[p]; }

  long upstream_weight(std::size_t q, std::size_t p) const { return weight_in(aminus_, q, p); }    // a-_{qp}
  long downstream_weight(std::size_t q, std::size_t p) const { return weight_in(aplus_, q, p); }   // a+_{qp}

  // q^in / q^out as place indices, p^in / p^out as transition indices.
  const std::vector<std::size_t>& transition_inputs(std::size_t q) const { return q_in_[q]; }
  const std::vector<std::size_t>& transition_outputs(std::size_t q) const { return q_out_[q]; }
  const std::vector<std::size_t>& place_inputs(std::size_t p) const { return p_in_[p]; }
  const std::vector<std::size_t>& place_outputs(std::size_t p) const { return p_out_[p]; }

  const RoutingSpec& routing(std::size_t p) const { return routing_[p]; }

  bool is_conflict_place(std::size_t p) const {
    return routing_[p].kind == RoutingKind::Conflict;
  }
  bool is_priority_place(std::size_t p) const {
    return routing_[p].kind == RoutingKind::Priority;
  }

  // For a transition fed by a priority place: that place, else npos.
  std::size_t upstream_priority_place(std::size_t q) const { return priority_in_[q]; }

  const std::string& name() const { return name_; }

  PetriNet with_initial_marking(std::size_t p, Rational value) const {
    PetriNet copy = *this;
    copy.m0_[p] = std::move(value);
    return copy;
  }

  PetriNet with_holding_time(std::size_t p, Rational value) const {
    PetriNet copy = *this;
    copy.tau_[p] = std::move(value);
    return copy;
  }

 private:
  friend class NetBuilder;

  static long weight_in(const std::vector<std::map<std::size_t, long>>& w, std::size_t q, std::size_t p) {
    auto it = w[q].find(p);
    return it == w[q].end() ? 0 : it->second;
  }

  std::string name_;
  std::vector<std::string> place_names_, transition_names_;
  std::map<std::string, std::size_t> place_index_, transition_index_;
  std::vector<Rational> tau_, m0_, w0_;
  std::vector<std::map<std::size_t, long>> aminus_, aplus_;  // per transition
  std::vector<std::vector<std::size_t>> q_in_, q_out_, p_in_, p_out_;
  std::vector<RoutingSpec> routing_;
  std::vector<std::size_t> priority_in_;
};

class NetBuilder {
 public:
  explicit NetBuilder(std::string name = "net") { net_.name_ = std::move(name); }

  NetBuilder& add_place(const std::string& name, Rational tau, Rational m0 = 0, Rational w0 = 0) {
    if (net_.place_index_.count(name) || net_.transition_index_.count(name))
      throw BuildError("duplicate identifier: " + name);
    if (tau <= 0) throw BuildError("holding time of " + name + " must be positive");
    if (m0 < 0 || w0 < 0) throw BuildError("initial marking of " + name + " must be nonnegative");
    net_.place_index_[name] = net_.place_names_.size();
    net_.place_names_.push_back(name);
    net_.tau_.push_back(std::move(tau));
    net_.m0_.push_back(std::move(m0));
    net_.w0_.push_back(std::move(w0));
    net_.routing_.emplace_back();
    return *this;
  }

  NetBuilder& add_transition(const std::string& name) {
    if (net_.place_index_.count(name) || net_.transition_index_.count(name))
      throw BuildError("duplicate identifier: " + name);
    net_.transition_index_[name] = net_.transition_names_.size();
    net_.transition_names_.push_back(name);
    return *this;
  }

  // Direction is inferred from which side names a place.
  NetBuilder& add_arc(const std::string& from, const std::string& to, long weight = 1) {
    if (weight <= 0) throw BuildError("arc weight must be positive");
    auto fp = find_place(from), tp = find_place(to);
    auto ft = find_transition(from), tt = find_transition(to);
    Arc arc;
    if (fp && tt) {
      arc = {*fp, *tt, weight, true};
    } else if (ft && tp) {
      arc = {*tp, *ft, weight, false};
    } else {
      throw BuildError("arc must connect a place and a transition: " + from + " -> " + to);
    }
    arcs_.push_back(arc);
    return *this;
  }

  NetBuilder& set_conflict(const std::string& place, std::vector<std::pair<std::string, Rational>> weights) {
    auto p = require_place(place);
    RoutingSpec spec;
    spec.kind = RoutingKind::Conflict;
    for (auto& [tn, mu] : weights) spec.weights.emplace_back(require_transition(tn), std::move(mu));
    net_.routing_[p] = std::move(spec);
    return *this;
  }

  NetBuilder& set_priority(const std::string& place, const std::string& high, const std::string& low) {
    auto p = require_place(place);
    RoutingSpec spec;
    spec.kind = RoutingKind::Priority;
    spec.high = require_transition(high);
    spec.low = require_transition(low);
    net_.routing_[p] = std::move(spec);
    return *this;
  }

  PetriNet build() {
    const std::size_t np = net_.place_names_.size(), nq = net_.transition_names_.size();
    net_.aminus_.assign(nq, {});
    net_.aplus_.assign(nq, {});
    for (const Arc& a : arcs_) {
      auto& side = a.place_to_transition ? net_.aminus_ : net_.aplus_;
      side[a.transition][a.place] += a.weight;
    }
    net_.q_in_.assign(nq, {});
    net_.q_out_.assign(nq, {});
    net_.p_in_.assign(np, {});
    net_.p_out_.assign(np, {});
    for (std::size_t q = 0; q < nq; ++q) {
      for (std::size_t p = 0; p < np; ++p) {
        if (net_.weight_in(net_.aminus_, q, p) > 0) {
          net_.q_in_[q].push_back(p);
          net_.p_out_[p].push_back(q);
        }
        if (net_.weight_in(net_.aplus_, q, p) > 0) {
          net_.q_out_[q].push_back(p);
          net_.p_in_[p].push_back(q);
        }
      }
    }
    net_.priority_in_.assign(nq, npos);
    for (std::size_t p = 0; p < np; ++p)
      if (net_.routing_[p].kind == RoutingKind::Priority)
        for (std::size_t q : net_.p_out_[p])
          if (net_.priority_in_[q] == npos) net_.priority_in_[q] = p;
    return std::move(net_);
  }

 private:
  std::optional<std::size_t> find_place(const std::string& n) const {
    auto it = net_.place_index_.find(n);
    return it == net_.place_index_.end() ? std::nullopt : std::optional(it->second);
  }
  std::optional<std::size_t> find_transition(const std::string& n) const {
    auto it = net_.transition_index_.find(n);
    return it == net_.transition_index_.end() ? std::nullopt : std::optional(it->second);
  }
  std::size_t require_place(const std::string& n) const {
    auto p = find_place(n);
    if (!p) throw BuildError("unknown place: " + n);
    return *p;
  }
  std::size_t require_transition(const std::string& n) const {
    auto q = find_transition(n);
    if (!q) throw BuildError("unknown transition: " + n);
    return *q;
  }

  PetriNet net_;
  std::vector<Arc> arcs_;
};

struct NetMatrices {
  RatMatrix cplus, cminus, c;  // place x transition
  RatMatrix a;                 // incidence, transition x place
};

inline NetMatrices matrices(const PetriNet& net) {
  const std::size_t np = net.place_count(), nq = net.transition_count();
  NetMatrices m{RatMatrix(np, nq), RatMatrix(np, nq), RatMatrix(np, nq), RatMatrix(nq, np)};
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t q = 0; q < nq; ++q) {
      m.cplus.at(p, q) = net.downstream_weight(q, p);
      m.cminus.at(p, q) = net.upstream_weight(q, p);
      m.c.at(p, q) = m.cplus.at(p, q) - m.cminus.at(p, q);
      m.a.at(q, p) = m.c.at(p, q);
    }
  return m;
}

// Partition of the transitions by the pattern of their upstream places.
struct TransitionClassification {
  std::set<std::size_t> sync, conflict_out, priority_out;
};

inline TransitionClassification classify_transitions(const PetriNet& net) {
  TransitionClassification c;
  for (std::size_t q = 0; q < net.transition_count(); ++q) {
    bool prio = false, confl = false;
    for (std::size_t p : net.transition_inputs(q)) {
      if (net.is_priority_place(p)) prio = true;
      if (net.is_conflict_place(p)) confl = true;
    }
    if (prio)
      c.priority_out.insert(q);
    else if (confl)
      c.conflict_out.insert(q);
    else
      c.sync.insert(q);
  }
  return c;
}

struct Violation {
  std::string rule;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> errors;
  std::vector<Violation> warnings;
  bool ok() const { return errors.empty(); }
};

inline bool is_strongly_connected(const PetriNet& net) {
  const std::size_t np = net.place_count(), nq = net.transition_count(), n = np + nq;
  if (n == 0) return true;
  // nodes: places [0, np), transitions [np, np+nq)
  auto neighbors = [&](std::size_t v, bool forward) {
    std::vector<std::size_t> out;
    if (v < np) {
      for (std::size_t q = 0; q < nq; ++q)
        if ((forward ? net.upstream_weight(q, v) : net.downstream_weight(q, v)) > 0) out.push_back(np + q);
    } else {
      std::size_t q = v - np;
      const auto& ps = forward ? net.transition_outputs(q) : net.transition_inputs(q);
      for (std::size_t p : ps) out.push_back(p);
    }
    return out;
  };
  for (bool forward : {true, false}) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : neighbors(v, forward))
        if (!seen[u]) {
          seen[u] = true;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n) return false;
  }
  return true;
}

inline ValidationReport validate(const PetriNet& net) {
  ValidationReport report;
  auto error = [&](std::string rule, std::string subject, std::string message) {
    report.errors.push_back({std::move(rule), std::move(subject), std::move(message)});
  };

  // purity: no place-transition pair connected in both directions
  for (std::size_t q = 0; q < net.transition_count(); ++q)
    for (std::size_t p : net.transition_inputs(q))
      if (net.downstream_weight(q, p) > 0)
        error("not pure", net.place_name(p),
              "place " + net.place_name(p) + " and transition " + net.transition_name(q) +
                  " are connected in both directions");

  for (std::size_t q = 0; q < net.transition_count(); ++q) {
    if (net.transition_inputs(q).empty())
      error("no upstream place", net.transition_name(q),
            "transition " + net.transition_name(q) + " has no upstream place");
    std::size_t prio_count = 0;
    for (std::size_t p : net.transition_inputs(q))
      if (net.is_priority_place(p)) ++prio_count;
    if (prio_count > 1)
      error("multiple priority inputs", net.transition_name(q),
            "transition " + net.transition_name(q) + " has more than one upstream priority place");
  }

  for (std::size_t p = 0; p < net.place_count(); ++p) {
    const RoutingSpec& r = net.routing(p);
    const auto& outs = net.place_outputs(p);
    switch (r.kind) {
      case RoutingKind::Plain:
        if (outs.size() >= 2)
          error("unrouted branching place", net.place_name(p),
                "place " + net.place_name(p) + " has " + std::to_string(outs.size()) +
                    " output transitions but no routing");
        break;
      case RoutingKind::Conflict: {
        if (outs.size() < 2)
          error("conflict fan-out < 2", net.place_name(p),
                "conflict routing on place " + net.place_name(p) + " needs at least two output transitions");
        Rational total = 0;
        std::set<std::size_t> covered;
        for (const auto& [q, mu] : r.weights) {
          if (mu <= 0)
            error("conflict weight not positive", net.place_name(p),
                  "weight of " + net.transition_name(q) + " out of " + net.place_name(p) + " must be positive");
          if (std::find(outs.begin(), outs.end(), q) == outs.end())
            error("conflict weight on non-output", net.place_name(p),
                  net.transition_name(q) + " is not an output transition of " + net.place_name(p));
          covered.insert(q);
          total += mu;
        }
        if (total != 1)
          error("conflict weights must sum to 1", net.place_name(p),
                "weights out of " + net.place_name(p) + " sum to " + to_fraction_string(total));
        for (std::size_t q : outs)
          if (!covered.count(q))
            error("missing conflict weight", net.place_name(p),
                  "no routing weight for output transition " + net.transition_name(q));
        // free choice: each routed transition is fed by this place alone
        for (std::size_t q : outs)
          if (net.transition_inputs(q).size() != 1)
            error("not free choice", net.place_name(p),
                  "output " + net.transition_name(q) + " of conflict place " + net.place_name(p) +
                      " has other upstream places");
        break;
      }
      case RoutingKind::Priority: {
        if (outs.size() != 2)
          error("priority fan-out != 2", net.place_name(p),
                "priority place " + net.place_name(p) + " has " + std::to_string(outs.size()) +
                    " output transitions");
        if (r.high == r.low)
          error("priority high = low", net.place_name(p),
                "priority place " + net.place_name(p) + " routes both levels to the same transition");
        for (std::size_t q : {r.high, r.low})
          if (q == npos || std::find(outs.begin(), outs.end(), q) == outs.end())
            error("priority output mismatch", net.place_name(p),
                  "priority routing of " + net.place_name(p) + " names a non-output transition");
        break;
      }
    }
  }

  if (!is_strongly_connected(net))
    report.warnings.push_back({"not strongly connected", net.name(),
                               "the net is not strongly connected; simulation is defined but the "
                               "stationary analysis requires strong connectivity"});
  return report;
}

}  // namespace tpn
