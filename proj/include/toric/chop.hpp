#pragma once

// Corner chopping: the effect of an equivariant blowup of size epsilon on a
// Delzant polygon. A corner may be chopped only when both edges leaving it
// are strictly longer than epsilon.

#include <cstddef>
#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/polygon.hpp"

namespace toric {

struct ChopRecord {
  std::size_t vertex_index = 0;  // in the pre-chop polygon
  PlanePoint vertex;             // pre-chop coordinates, survives re-indexing
  Rational size;

  friend bool operator==(const ChopRecord& l, const ChopRecord& r) {
    return l.vertex_index == r.vertex_index && l.vertex == r.vertex && l.size == r.size;
  }
};

inline std::vector<std::size_t> feasible_vertices(const DelzantPolygon& p, const Rational& epsilon) {
  if (epsilon <= 0) throw DomainError("chop size must be positive, got " + to_string(epsilon));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.incoming_edge(i).size > epsilon && p.outgoing_edge(i).size > epsilon) out.push_back(i);
  }
  return out;
}

/// Replaces vertex v by v + eps*d1 and v + eps*d2, where d1, d2 are the
/// primitive directions of the edges leaving v (d1 toward the previous
/// vertex). The new vertices occupy positions v and v+1 of the result.
inline DelzantPolygon chop_corner(const DelzantPolygon& p, std::size_t v, const Rational& epsilon) {
  if (epsilon <= 0) throw DomainError("chop size must be positive, got " + to_string(epsilon));
  const std::size_t n = p.size();
  if (v >= n) throw DomainError("vertex index " + std::to_string(v) + " out of range");
  const Edge& in = p.incoming_edge(v);
  const Edge& out = p.outgoing_edge(v);
  if (!(in.size > epsilon)) {
    throw FeasibilityError("cannot chop vertex " + std::to_string(v) + " by " + to_string(epsilon) + ": edge " +
                               std::to_string((v + n - 1) % n) + " has size " + to_string(in.size),
                           (v + n - 1) % n);
  }
  if (!(out.size > epsilon)) {
    throw FeasibilityError("cannot chop vertex " + std::to_string(v) + " by " + to_string(epsilon) + ": edge " +
                               std::to_string(v) + " has size " + to_string(out.size),
                           v);
  }

  const PlanePoint& corner = p.vertex(v);
  std::vector<PlanePoint> points;
  points.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == v) {
      points.push_back(corner + epsilon * (-in.direction));
      points.push_back(corner + epsilon * out.direction);
    } else {
      points.push_back(p.vertex(i));
    }
  }
  return polygon_from_vertices(std::move(points));
}

inline DelzantPolygon chop_corner(const DelzantPolygon& p, const ChopRecord& record) {
  return chop_corner(p, record.vertex_index, record.size);
}

/// Bookkeeping facts that every chop must satisfy.
struct ChopDiagnostics {
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  Rational area_before;
  Rational area_after;
  std::int64_t new_edge_k = 0;
  Rational new_edge_size;
};

/// Checks `after` against `before` chopped per `record`: one more edge, area
/// down by eps^2/2, a new edge with k = -1 and size eps, its two neighbours
/// shortened by eps with k lowered by one, every other (k, a) unchanged.
/// Throws InternalError on the first violation.
inline ChopDiagnostics chop_result_properties(const DelzantPolygon& before, const ChopRecord& record,
                                              const DelzantPolygon& after) {
  const std::size_t n = before.size();
  const std::size_t v = record.vertex_index;
  const Rational& eps = record.size;
  auto fail = [](const std::string& what) { throw InternalError("chop post-condition: " + what); };

  ChopDiagnostics d;
  d.edges_before = n;
  d.edges_after = after.size();
  d.area_before = polygon_area(before);
  d.area_after = polygon_area(after);
  if (d.edges_after != n + 1) fail("edge count did not grow by one");
  if (d.area_before - d.area_after != eps * eps / 2) fail("area did not drop by eps^2/2");

  const EdgeProfile pre = edge_profile(before);
  const EdgeProfile post = edge_profile(after);
  // after's edges: [0, v) unchanged except v-1 shortened, v new, v+1 shortened, rest shifted by one.
  d.new_edge_k = post.entries[v].k;
  d.new_edge_size = post.entries[v].size;
  if (d.new_edge_k != -1) fail("new edge has k = " + std::to_string(d.new_edge_k));
  if (d.new_edge_size != eps) fail("new edge has size " + to_string(d.new_edge_size));

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t j_after = j < v ? j : j + 1;
    const ProfileEntry& old_entry = pre.entries[j];
    const ProfileEntry& new_entry = post.entries[j_after];
    const bool adjacent = j == (v + n - 1) % n || j == v;
    if (adjacent) {
      if (new_entry.k != old_entry.k - 1 || new_entry.size != old_entry.size - eps) {
        fail("edge adjacent to the chop did not lose one from k and eps from its size");
      }
    } else if (!(new_entry == old_entry)) {
      fail("edge away from the chop changed");
    }
  }
  return d;
}

}  // namespace toric
