#pragma once

// Census of toric actions on a k-fold blowup of CP^2.
//
// Seeds are the Hirzebruch trapezoids H_{a,b,2l}, 0 <= l < a/b. Each seed is
// chopped k-1 times with the sizes {delta, delta_3, ..., delta_k} in every
// distinct order and at every feasible vertex; the surviving (k+3)-gons are
// deduplicated by canonical profile.
//
// The search runs level by level. A search state is identified by its
// CensusStateKey (canonical profile plus the sorted multiset of sizes still
// to be chopped), and each key is expanded once. Within a level, states are
// ordered by (parent order, chop size ascending, vertex index ascending) and
// the first state with a given key is kept. Results are identical for any
// number of jobs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "toric/blowup_vector.hpp"
#include "toric/canonical.hpp"
#include "toric/chop.hpp"
#include "toric/polygon.hpp"

namespace toric {

struct TrapezoidSeed {
  std::int64_t ell = 0;
  DelzantPolygon polygon;
};

/// H_{a,b,2l}: vertices (0,0), (a+lb, 0), (a-lb, b), (0, b).
inline DelzantPolygon hirzebruch_trapezoid(const Rational& a, const Rational& b, std::int64_t ell) {
  if (ell < 0 || !(Rational(ell) * b < a)) {
    throw DomainError("trapezoid needs 0 <= l < a/b, got l = " + std::to_string(ell));
  }
  const Rational shift = Rational(ell) * b;
  return polygon_from_vertices({{Rational(0), Rational(0)}, {a + shift, Rational(0)}, {a - shift, b}, {Rational(0), b}});
}

/// One seed per integer 0 <= l < a/b, in increasing l.
inline std::vector<TrapezoidSeed> trapezoid_seeds(const DerivedParams& p) {
  std::vector<TrapezoidSeed> seeds;
  for (std::int64_t ell = 0; Rational(ell) * p.b < p.a; ++ell) seeds.push_back({ell, hirzebruch_trapezoid(p.a, p.b, ell)});
  return seeds;
}

struct CensusStateKey {
  CanonicalProfile polygon;
  std::vector<Rational> remaining;  // ascending

  friend bool operator==(const CensusStateKey&, const CensusStateKey&) = default;
  friend bool operator<(const CensusStateKey& l, const CensusStateKey& r) {
    if (l.polygon < r.polygon) return true;
    if (r.polygon < l.polygon) return false;
    return l.remaining < r.remaining;
  }
};

inline CensusStateKey census_state_key(const DelzantPolygon& p, std::vector<Rational> remaining) {
  std::sort(remaining.begin(), remaining.end());
  return {canonical_form(p), std::move(remaining)};
}

struct Provenance {
  std::int64_t ell = 0;
  std::vector<ChopRecord> chops;
};

struct ActionClass {
  CanonicalProfile canonical;
  DelzantPolygon representative;
  Provenance provenance;
};

struct CensusOptions {
  unsigned jobs = 1;
  /// Chop in the fixed order delta, delta_3, ..., delta_k only.
  bool single_order = false;
  /// Run chop_result_properties on every chop.
  bool check_chops = true;
};

struct CensusResult {
  BlowupVector vector;
  DerivedParams params;
  std::vector<ActionClass> classes;  // sorted by canonical profile
  std::size_t count = 0;
  BoundReport bound;
  NonexistenceVerdict nonexistence;
  std::size_t states_expanded = 0;
};

/// The multiset {delta, delta_3, ..., delta_k} in that written order.
inline std::vector<Rational> chop_sizes(const BlowupVector& v) {
  std::vector<Rational> sizes{v.lambda() - v.delta(1) - v.delta(2)};
  for (std::size_t i = 3; i <= v.k(); ++i) sizes.push_back(v.delta(i));
  return sizes;
}

/// Re-applies recorded chops (located by vertex coordinates) to the seed l.
inline DelzantPolygon replay(const DerivedParams& params, const Provenance& prov) {
  DelzantPolygon p = hirzebruch_trapezoid(params.a, params.b, prov.ell);
  for (const ChopRecord& c : prov.chops) {
    const auto& vs = p.vertices();
    const auto it = std::find(vs.begin(), vs.end(), c.vertex);
    if (it == vs.end()) throw DomainError("provenance names a vertex not on the polygon");
    p = chop_corner(p, static_cast<std::size_t>(it - vs.begin()), c.size);
  }
  return p;
}

namespace detail {

struct SearchState {
  DelzantPolygon polygon;
  std::vector<Rational> remaining;  // written order in single-order mode, ascending otherwise
  Provenance provenance;
  CensusStateKey key;
};

inline std::vector<SearchState> expand(const SearchState& s, const CensusOptions& opt) {
  std::vector<Rational> next_sizes;
  if (opt.single_order) {
    next_sizes.push_back(s.remaining.front());
  } else {
    std::unique_copy(s.remaining.begin(), s.remaining.end(), std::back_inserter(next_sizes));
  }

  std::vector<SearchState> children;
  for (const Rational& eps : next_sizes) {
    std::vector<Rational> rest = s.remaining;
    rest.erase(std::find(rest.begin(), rest.end(), eps));
    for (std::size_t v : feasible_vertices(s.polygon, eps)) {
      const ChopRecord record{v, s.polygon.vertex(v), eps};
      DelzantPolygon child = chop_corner(s.polygon, v, eps);
      if (opt.check_chops) chop_result_properties(s.polygon, record, child);
      Provenance prov = s.provenance;
      prov.chops.push_back(record);
      CensusStateKey key = census_state_key(child, rest);
      children.push_back({std::move(child), rest, std::move(prov), std::move(key)});
    }
  }
  return children;
}

inline std::vector<std::vector<SearchState>> expand_level(const std::vector<SearchState>& frontier,
                                                          const CensusOptions& opt) {
  std::vector<std::vector<SearchState>> out(frontier.size());
  const std::size_t workers = std::min<std::size_t>(std::max(1u, opt.jobs), frontier.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i) out[i] = expand(frontier[i], opt);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < frontier.size(); i += workers) out[i] = expand(frontier[i], opt);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

inline void check_final_polygon(const DelzantPolygon& p, const BlowupVector& v) {
  if (p.size() != v.k() + 3) throw InternalError("census produced a polygon with the wrong edge count");
  Rational expected = v.lambda() * v.lambda();
  for (const Rational& d : v.deltas()) expected -= d * d;
  expected /= 2;
  if (polygon_area(p) != expected) throw InternalError("census produced a polygon with the wrong area");
}

}  // namespace detail

inline CensusResult run_census(const BlowupVector& v, const CensusOptions& opt = {}) {
  if (!is_reduced(v)) throw PreconditionError("run_census needs a reduced vector, got " + to_string(v));

  CensusResult result{v, derived_params(v), {}, 0, bound_report(v), nonexistence_check(v), 0};

  std::vector<Rational> sizes = chop_sizes(v);
  if (!opt.single_order) std::sort(sizes.begin(), sizes.end());

  std::set<CensusStateKey> seen;
  std::vector<detail::SearchState> frontier;
  for (TrapezoidSeed& seed : trapezoid_seeds(result.params)) {
    CensusStateKey key = census_state_key(seed.polygon, sizes);
    if (!seen.insert(key).second) continue;
    frontier.push_back({std::move(seed.polygon), sizes, {seed.ell, {}}, std::move(key)});
  }

  for (std::size_t depth = 0; depth < sizes.size(); ++depth) {
    result.states_expanded += frontier.size();
    std::vector<detail::SearchState> next;
    for (auto& children : detail::expand_level(frontier, opt)) {
      for (auto& child : children) {
        if (seen.insert(child.key).second) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  for (auto& s : frontier) {
    detail::check_final_polygon(s.polygon, v);
    result.classes.push_back({std::move(s.key.polygon), std::move(s.polygon), std::move(s.provenance)});
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const ActionClass& l, const ActionClass& r) { return l.canonical < r.canonical; });
  result.count = result.classes.size();
  return result;
}

/// Compares the all-orders search with the fixed written-order search.
struct OrderAudit {
  bool agree = true;
  std::vector<CanonicalProfile> only_all_orders;
  std::vector<CanonicalProfile> only_single_order;
};

inline OrderAudit order_audit(const CensusResult& all_orders, const CensusResult& single_order) {
  std::vector<CanonicalProfile> a, s;
  for (const auto& c : all_orders.classes) a.push_back(c.canonical);
  for (const auto& c : single_order.classes) s.push_back(c.canonical);
  OrderAudit audit;
  std::set_difference(a.begin(), a.end(), s.begin(), s.end(), std::back_inserter(audit.only_all_orders));
  std::set_difference(s.begin(), s.end(), a.begin(), a.end(), std::back_inserter(audit.only_single_order));
  audit.agree = audit.only_all_orders.empty() && audit.only_single_order.empty();
  return audit;
}

inline OrderAudit order_audit(const BlowupVector& v, CensusOptions opt = {}) {
  opt.single_order = false;
  const CensusResult all = run_census(v, opt);
  opt.single_order = true;
  return order_audit(all, run_census(v, opt));
}

}  // namespace toric
