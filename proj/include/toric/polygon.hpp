#pragma once

// Delzant polygons and their (k_j, a_j) edge profiles.
//
// Conventions: vertices are stored counterclockwise, edge j runs from vertex j
// to vertex j+1, and its inward normal is the direction rotated by +90
// degrees. With these conventions a convex rational polygon is Delzant iff
// det(e_{j-1}, e_j) = 1 at every vertex j.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"
#include "toric/rational.hpp"

namespace toric {

struct Edge {
  Rational size;
  LatticeVector direction;
  LatticeVector normal;  // inward, primitive
};

/// One (k_j, a_j) pair: self-intersection number and lattice length of an edge.
struct ProfileEntry {
  std::int64_t k = 0;
  Rational size;

  friend bool operator==(const ProfileEntry& l, const ProfileEntry& r) { return l.k == r.k && l.size == r.size; }
  friend bool operator<(const ProfileEntry& l, const ProfileEntry& r) {
    return l.k < r.k || (l.k == r.k && l.size < r.size);
  }
  friend std::ostream& operator<<(std::ostream& os, const ProfileEntry& e) {
    return os << '(' << e.k << ", " << to_string(e.size) << ')';
  }
};

/// Cyclic sequence of (k_j, a_j). The starting edge carries no meaning.
struct EdgeProfile {
  std::vector<ProfileEntry> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const EdgeProfile&, const EdgeProfile&) = default;
  friend bool operator<(const EdgeProfile& l, const EdgeProfile& r) { return l.entries < r.entries; }
  friend std::ostream& operator<<(std::ostream& os, const EdgeProfile& p) {
    os << '[';
    for (std::size_t i = 0; i < p.entries.size(); ++i) os << (i ? ", " : "") << p.entries[i];
    return os << ']';
  }
};

class DelzantPolygon;
DelzantPolygon polygon_from_vertices(std::vector<PlanePoint> points);

class DelzantPolygon {
 public:
  std::size_t size() const { return vertices_.size(); }
  const std::vector<PlanePoint>& vertices() const { return vertices_; }
  const PlanePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t j) const { return edges_[j % edges_.size()]; }
  /// Edge ending at vertex i.
  const Edge& incoming_edge(std::size_t i) const { return edges_[(i + edges_.size() - 1) % edges_.size()]; }
  const Edge& outgoing_edge(std::size_t i) const { return edge(i); }
  const std::vector<std::int64_t>& self_intersections() const { return k_; }

  friend bool operator==(const DelzantPolygon& l, const DelzantPolygon& r) { return l.vertices_ == r.vertices_; }

 private:
  DelzantPolygon() = default;
  friend DelzantPolygon polygon_from_vertices(std::vector<PlanePoint> points);

  std::vector<PlanePoint> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> k_;
};

namespace detail {

// 0 for directions in the half-open upper half plane, 1 otherwise.
inline int half_plane(LatticeVector v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

}  // namespace detail

/// Validates and builds a Delzant polygon. Clockwise input is reversed.
/// Vertex indices in errors refer to the input order.
inline DelzantPolygon polygon_from_vertices(std::vector<PlanePoint> points) {
  const std::size_t n = points.size();
  if (n < 3) throw ValidationError("a polygon needs at least 3 vertices", n);

  for (std::size_t i = 0; i < n; ++i) {
    if (points[i] == points[(i + 1) % n]) throw ValidationError("repeated vertex gives a zero-length edge", (i + 1) % n);
  }

  Rational twice_area = 0;
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(points[i], points[(i + 1) % n]);
  if (twice_area == 0) throw ValidationError("polygon has zero area", 0);
  const bool reversed = twice_area < 0;
  if (reversed) std::reverse(points.begin(), points.end());
  auto input_index = [&](std::size_t i) { return reversed ? n - 1 - i : i; };

  DelzantPolygon p;
  p.edges_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [size, direction] = primitive_decompose(points[(i + 1) % n] - points[i]);
    p.edges_.push_back({std::move(size), direction, rotate_ccw(direction)});
  }

  int windings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const LatticeVector in = p.edges_[(i + n - 1) % n].direction;
    const LatticeVector out = p.edges_[i].direction;
    const std::int64_t turn = det(in, out);
    if (turn == 0) throw ValidationError("consecutive edges are collinear", input_index(i));
    if (turn < 0) throw ValidationError("polygon is not convex", input_index(i));
    if (turn != 1) {
      throw ValidationError("edge directions at vertex have determinant " + std::to_string(turn) +
                                ", polygon is not unimodular",
                            input_index(i));
    }
    if (detail::half_plane(in) == 1 && detail::half_plane(out) == 0) ++windings;
  }
  if (windings != 1) throw ValidationError("boundary winds " + std::to_string(windings) + " times", 0);

  PlanePoint closure{Rational(0), Rational(0)};
  for (const Edge& e : p.edges_) closure = closure + e.size * e.direction;
  if (!(closure == PlanePoint{Rational(0), Rational(0)})) throw InternalError("edge vectors do not close up");

  p.k_.resize(n);
  std::int64_t k_sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const LatticeVector u = p.edges_[j].normal;
    const LatticeVector neighbours = p.edges_[(j + 1) % n].normal + p.edges_[(j + n - 1) % n].normal;
    if (det(u, neighbours) != 0) throw InternalError("normal recursion has no integer solution");
    const std::int64_t k = -dot(neighbours, u) / dot(u, u);
    if (neighbours != (-k) * u) throw InternalError("normal recursion has no integer solution");
    p.k_[j] = k;
    k_sum += k;
  }
  if (k_sum != 12 - 3 * static_cast<std::int64_t>(n)) {
    throw InternalError("self-intersection sum " + std::to_string(k_sum) + " != 12 - 3N");
  }

  p.vertices_ = std::move(points);
  return p;
}

/// (k_j, a_j) for every edge, with u_{j+1} + u_{j-1} = -k_j u_j.
inline EdgeProfile edge_profile(const DelzantPolygon& p) {
  EdgeProfile prof;
  prof.entries.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) prof.entries.push_back({p.self_intersections()[j], p.edge(j).size});
  return prof;
}

/// Rebuilds a polygon from a profile, starting with normals (0,1), (-1,0) and
/// the vertex at the origin.
inline DelzantPolygon polygon_from_profile(const EdgeProfile& prof) {
  const std::size_t n = prof.size();
  if (n < 3) throw InvalidProfile("profile has fewer than 3 entries");
  for (const ProfileEntry& e : prof.entries) {
    if (e.size <= 0) throw InvalidProfile("profile has a non-positive edge size " + to_string(e.size));
  }

  std::vector<LatticeVector> normals{{0, 1}, {-1, 0}};
  normals.reserve(n + 2);
  for (std::size_t j = 1; j <= n; ++j) {
    const LatticeVector u = normals[j];
    const LatticeVector prev = normals[j - 1];
    const std::int64_t k = prof.entries[j % n].k;
    normals.push_back(-(k * u) - prev);
  }
  if (normals[n] != normals[0] || normals[n + 1] != normals[1]) {
    throw InvalidProfile("profile fails the monodromy condition");
  }

  std::vector<PlanePoint> points;
  points.reserve(n);
  PlanePoint v{Rational(0), Rational(0)};
  for (std::size_t j = 0; j < n; ++j) {
    points.push_back(v);
    v = v + prof.entries[j].size * rotate_cw(normals[j]);
  }
  if (!(v == PlanePoint{Rational(0), Rational(0)})) throw InvalidProfile("profile edges do not close up");

  try {
    return polygon_from_vertices(std::move(points));
  } catch (const ValidationError& e) {
    throw InvalidProfile(std::string("profile does not describe a convex polygon: ") + e.what());
  }
}

/// Exact area by the shoelace formula.
inline Rational polygon_area(const DelzantPolygon& p) {
  Rational twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) twice += cross(p.vertex(i), p.vertex(i + 1));
  return twice / 2;
}

inline DelzantPolygon apply_map(const AffineUnimodularMap& map, const DelzantPolygon& p) {
  std::vector<PlanePoint> image;
  image.reserve(p.size());
  for (const PlanePoint& v : p.vertices()) image.push_back(map(v));
  return polygon_from_vertices(std::move(image));
}

inline std::ostream& operator<<(std::ostream& os, const DelzantPolygon& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p.vertex(i);
  return os << ']';
}

}  // namespace toric
