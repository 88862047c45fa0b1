#pragma once

// Test helpers: literals, small polygon builders, random generators, and
// oracles that recompute things by a route independent of the library's.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toric/toric.hpp"

namespace toric::test {

inline Rational R(const char* s) { return parse_rational(s); }
template <std::integral N>
Rational R(N n, std::int64_t d = 1) {
  return Rational(static_cast<std::int64_t>(n), d);
}

inline PlanePoint P(const Rational& x, const Rational& y) { return {x, y}; }

inline DelzantPolygon square(const Rational& side) {
  return polygon_from_vertices({P(0, 0), P(side, 0), P(side, side), P(0, side)});
}

inline DelzantPolygon simplex(const Rational& size) {
  return polygon_from_vertices({P(0, 0), P(size, 0), P(0, size)});
}

inline EdgeProfile profile(std::initializer_list<std::pair<std::int64_t, const char*>> entries) {
  EdgeProfile p;
  for (const auto& [k, a] : entries) p.entries.push_back({k, R(a)});
  return p;
}

// --- oracles ---------------------------------------------------------------

/// k_j from the determinant identity det(u_{j-1}, u_{j+1}) = -k_j, computed
/// straight from the vertex list (no use of the polygon's cached normals).
inline std::vector<std::int64_t> self_intersections_by_determinant(const std::vector<PlanePoint>& ccw) {
  const std::size_t n = ccw.size();
  std::vector<LatticeVector> dirs;
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(primitive_decompose(ccw[(i + 1) % n] - ccw[i]).direction);
  std::vector<std::int64_t> k(n);
  for (std::size_t j = 0; j < n; ++j) k[j] = -det(dirs[(j + n - 1) % n], dirs[(j + 1) % n]);
  return k;
}

/// Every rotation of the profile and of its reversal, as plain sequences.
inline std::set<std::vector<ProfileEntry>> dihedral_images(const EdgeProfile& p) {
  std::set<std::vector<ProfileEntry>> out;
  std::vector<ProfileEntry> seq = p.entries;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < seq.size(); ++r) {
      out.insert(seq);
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    }
    std::reverse(seq.begin(), seq.end());
  }
  return out;
}

inline std::vector<ProfileEntry> canonical_by_enumeration(const EdgeProfile& p) { return *dihedral_images(p).begin(); }

/// Unmemoized census: every distinct ordering of the chop sizes, every
/// feasible vertex at every step, dedup only at the end.
inline std::set<std::vector<ProfileEntry>> brute_force_census(const BlowupVector& v) {
  const DerivedParams params = derived_params(v);
  std::vector<Rational> sizes = chop_sizes(v);
  std::sort(sizes.begin(), sizes.end());
  std::set<std::vector<ProfileEntry>> out;
  std::function<void(const DelzantPolygon&, const std::vector<Rational>&, std::size_t)> dfs =
      [&](const DelzantPolygon& p, const std::vector<Rational>& order, std::size_t step) {
        if (step == order.size()) {
          out.insert(canonical_by_enumeration(edge_profile(p)));
          return;
        }
        for (std::size_t vtx : feasible_vertices(p, order[step])) dfs(chop_corner(p, vtx, order[step]), order, step + 1);
      };
  for (const TrapezoidSeed& seed : trapezoid_seeds(params)) {
    std::vector<Rational> order = sizes;
    do {
      dfs(seed.polygon, order, 0);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

/// The CP^2 picture: chop the size-lambda triangle by delta_1, ..., delta_k
/// in every order.
inline std::set<std::vector<ProfileEntry>> triangle_route(const BlowupVector& v) {
  std::vector<Rational> sizes = v.deltas();
  std::sort(sizes.begin(), sizes.end());
  std::set<std::vector<ProfileEntry>> out;
  std::function<void(const DelzantPolygon&, const std::vector<Rational>&, std::size_t)> dfs =
      [&](const DelzantPolygon& p, const std::vector<Rational>& order, std::size_t step) {
        if (step == order.size()) {
          out.insert(canonical_by_enumeration(edge_profile(p)));
          return;
        }
        for (std::size_t vtx : feasible_vertices(p, order[step])) dfs(chop_corner(p, vtx, order[step]), order, step + 1);
      };
  std::vector<Rational> order = sizes;
  do {
    dfs(simplex(v.lambda()), order, 0);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// --- generators ------------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_num, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(1, max_num), den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// A random Delzant polygon: a trapezoid or triangle followed by up to
/// `max_chops` random feasible chops.
inline DelzantPolygon random_polygon(std::mt19937_64& rng, int max_chops = 4) {
  std::uniform_int_distribution<int> kind(0, 1);
  DelzantPolygon p = simplex(random_rational(rng, 12, 4));
  if (kind(rng) == 0) {
    const Rational b = random_rational(rng, 6, 4);
    const Rational a = b + random_rational(rng, 12, 6);
    std::int64_t max_ell = 0;
    while (Rational(max_ell + 1) * b < a) ++max_ell;
    std::uniform_int_distribution<std::int64_t> ell(0, max_ell);
    p = hirzebruch_trapezoid(a, b, ell(rng));
  }
  std::uniform_int_distribution<int> chops(0, max_chops);
  const int n = chops(rng);
  for (int i = 0; i < n; ++i) {
    Rational shortest = p.edge(0).size;
    for (const Edge& e : p.edges()) shortest = std::min(shortest, e.size);
    std::uniform_int_distribution<int> frac(1, 9);
    const Rational eps = shortest * Rational(frac(rng), 10);
    const auto feasible = feasible_vertices(p, eps);
    std::uniform_int_distribution<std::size_t> pick(0, feasible.size() - 1);
    p = chop_corner(p, feasible[pick(rng)], eps);
  }
  return p;
}

/// Random reduced vector with k entries, every denominator <= max_den.
inline BlowupVector random_reduced_vector(std::mt19937_64& rng, std::size_t k, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  while (true) {
    const std::int64_t ld = den(rng);
    std::uniform_int_distribution<std::int64_t> lnum(ld, 3 * ld);
    const Rational lambda(lnum(rng), ld);
    std::vector<Rational> d;
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t q = den(rng);
      // numerator so that the entry lies in (0, lambda/2]
      const Integer top = floor(lambda * q / 2);
      if (top < 1) break;
      std::uniform_int_distribution<std::int64_t> num(1, top.convert_to<std::int64_t>());
      d.emplace_back(num(rng), q);
    }
    if (d.size() != k) continue;
    std::sort(d.begin(), d.end(), std::greater<>());
    BlowupVector v(lambda, d);
    if (is_reduced(v)) return v;
  }
}

/// Random reduced vector with bound_report(v).attained, every denominator
/// <= max_den.
inline BlowupVector random_attained_vector(std::mt19937_64& rng, std::size_t k, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  auto below = [&](const Rational& cap) -> std::optional<Rational> {
    const std::int64_t q = den(rng);
    const Integer top = ceil(cap * q) - 1;
    if (top < 1) return std::nullopt;
    std::uniform_int_distribution<std::int64_t> num(1, top.convert_to<std::int64_t>());
    return Rational(num(rng), q);
  };
  while (true) {
    const std::int64_t ld = den(rng);
    std::uniform_int_distribution<std::int64_t> lnum(ld, 3 * ld);
    const Rational lambda(lnum(rng), ld);
    const auto d1 = below(lambda);
    if (!d1) continue;
    auto d2 = below(*d1 + Rational(1, max_den * max_den));
    if (!d2 || *d2 > *d1) continue;
    std::vector<Rational> d{*d1, *d2};
    Rational cap = lambda - *d1 - *d2;
    while (d.size() < k) {
      const auto next = below(cap);
      if (!next) break;
      d.push_back(*next);
      cap = *next;
    }
    if (d.size() != k) continue;
    std::sort(d.begin(), d.end(), std::greater<>());
    BlowupVector v(lambda, d);
    if (is_reduced(v) && bound_report(v).attained) return v;
  }
}

}  // namespace toric::test
