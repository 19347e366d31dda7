#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tpn/rat_matrix.hpp"
#include "tpn/rational.hpp"

namespace tpn {

struct RayCapExceeded : std::runtime_error {
  explicit RayCapExceeded(std::size_t cap)
      : std::runtime_error("cone enumeration exceeded the ray cap of " + std::to_string(cap)) {}
};

// Generating set of a polyhedral cone contained in the nonnegative orthant.
// Rays are integer-scaled with gcd 1, pairwise non-proportional, in
// lexicographic order.
struct ConeGenerators {
  std::vector<std::vector<Rational>> rays;
};

namespace detail {

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// Double description step state: current generators plus the inequality rows
// accepted so far (coordinate nonnegativity is implicit). Equalities are tight
// for every generator, so they never discriminate in the adjacency test and
// are not recorded.
struct DoubleDescription {
  std::size_t dim;
  std::vector<std::vector<Rational>> rays;
  std::vector<std::vector<Rational>> tight_rows;

  explicit DoubleDescription(std::size_t n) : dim(n) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> e(n);
      e[i] = 1;
      rays.push_back(std::move(e));
    }
  }

  // Tight-constraint index set of a ray: coordinates first, accepted rows after.
  std::vector<std::size_t> zero_set(const std::vector<Rational>& r) const {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < dim; ++i)
      if (r[i] == 0) z.push_back(i);
    for (std::size_t j = 0; j < tight_rows.size(); ++j)
      if (dot(tight_rows[j], r) == 0) z.push_back(dim + j);
    return z;
  }

  bool tight_on(const std::vector<Rational>& r, std::size_t idx) const {
    if (idx < dim) return r[idx] == 0;
    return dot(tight_rows[idx - dim], r) == 0;
  }

  // Combinatorial adjacency: u, v are adjacent iff no third generator is tight
  // on every constraint tight for both. Valid because the cone stays pointed
  // (it lives inside the nonnegative orthant).
  bool adjacent(std::size_t iu, std::size_t iv) const {
    std::vector<std::size_t> common;
    for (std::size_t idx : zero_set(rays[iu]))
      if (tight_on(rays[iv], idx)) common.push_back(idx);
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (k == iu || k == iv) continue;
      bool covers = true;
      for (std::size_t idx : common)
        if (!tight_on(rays[k], idx)) {
          covers = false;
          break;
        }
      if (covers) return false;
    }
    return true;
  }

  void cut(const std::vector<Rational>& row, bool equality, std::size_t ray_cap) {
    std::vector<Rational> d(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) d[i] = dot(row, rays[i]);

    std::vector<std::vector<Rational>> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (d[i] == 0 || (!equality && d[i] > 0)) next.push_back(rays[i]);
    for (std::size_t iu = 0; iu < rays.size(); ++iu) {
      if (d[iu] <= 0) continue;
      for (std::size_t iv = 0; iv < rays.size(); ++iv) {
        if (d[iv] >= 0) continue;
        if (!adjacent(iu, iv)) continue;
        std::vector<Rational> w(dim);
        for (std::size_t c = 0; c < dim; ++c) w[c] = d[iu] * rays[iv][c] - d[iv] * rays[iu][c];
        next.push_back(normalize_to_coprime_integers(std::move(w)));
        if (next.size() > ray_cap) throw RayCapExceeded(ray_cap);
      }
    }

    for (auto& r : next) r = normalize_to_coprime_integers(std::move(r));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    // drop the zero vector if present (possible only when the cone is trivial)
    next.erase(std::remove_if(next.begin(), next.end(),
                              [](const std::vector<Rational>& r) {
                                return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
                              }),
               next.end());
    rays = std::move(next);
    if (rays.size() > ray_cap) throw RayCapExceeded(ray_cap);
    if (!equality) tight_rows.push_back(row);
  }
};

}  // namespace detail

inline constexpr std::size_t kDefaultRayCap = 100000;

// Extreme rays of {x >= 0 : eq. rows x = 0, ineq. rows x >= 0}.
inline ConeGenerators extreme_rays_nonneg(std::size_t dim,
                                          const std::vector<std::vector<Rational>>& equalities,
                                          const std::vector<std::vector<Rational>>& inequalities,
                                          std::size_t ray_cap = kDefaultRayCap) {
  detail::DoubleDescription dd(dim);
  if (dd.rays.size() > ray_cap) throw RayCapExceeded(ray_cap);
  for (const auto& row : equalities) dd.cut(row, /*equality=*/true, ray_cap);
  for (const auto& row : inequalities) dd.cut(row, /*equality=*/false, ray_cap);
  std::sort(dd.rays.begin(), dd.rays.end());
  return ConeGenerators{std::move(dd.rays)};
}

// Extreme rays of {x >= 0 : Mx = 0, ineq x >= 0}.
inline ConeGenerators nonneg_solutions(const RatMatrix& m, const RatMatrix* ineq = nullptr,
                                       std::size_t ray_cap = kDefaultRayCap) {
  if (ineq && ineq->cols() != m.cols()) throw std::invalid_argument("nonneg_solutions: column counts disagree");
  std::vector<std::vector<Rational>> eqs, ineqs;
  for (std::size_t r = 0; r < m.rows(); ++r) eqs.push_back(m.row(r));
  if (ineq)
    for (std::size_t r = 0; r < ineq->rows(); ++r) ineqs.push_back(ineq->row(r));
  return extreme_rays_nonneg(m.cols(), eqs, ineqs, ray_cap);
}

}  // namespace tpn
