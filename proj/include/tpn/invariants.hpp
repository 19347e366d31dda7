#pragma once

#include <vector>

#include "tpn/cone.hpp"
#include "tpn/net.hpp"

namespace tpn {

// Nonnegative weighting of places conserved by every firing: y^T C = 0.
struct PInvariant {
  std::vector<Rational> y;
};

// Minimal generating set (extreme rays) of {y >= 0 : y^T C = 0}, scaled to
// coprime integers. Empty when only y = 0 solves the system.
inline std::vector<PInvariant> p_invariants(const PetriNet& net, std::size_t ray_cap = kDefaultRayCap) {
  RatMatrix ct = matrices(net).c.transposed();  // rows: transitions
  ConeGenerators gen = nonneg_solutions(ct, nullptr, ray_cap);
  std::vector<PInvariant> out;
  out.reserve(gen.rays.size());
  for (auto& ray : gen.rays) out.push_back(PInvariant{std::move(ray)});
  return out;
}

}  // namespace tpn
