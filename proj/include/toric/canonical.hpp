#pragma once

// Canonical form of an edge profile under the dihedral group (rotations and
// reversal), which is the complete AGL(2,Z)-congruence invariant of a
// Delzant polygon.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "toric/polygon.hpp"

namespace toric {

/// Lexicographically least dihedral image of a profile. Two of these compare
/// equal exactly when their source polygons are AGL(2,Z)-congruent.
struct CanonicalProfile {
  std::vector<ProfileEntry> entries;

  std::size_t size() const { return entries.size(); }
  EdgeProfile as_profile() const { return {entries}; }

  friend bool operator==(const CanonicalProfile&, const CanonicalProfile&) = default;
  friend bool operator<(const CanonicalProfile& l, const CanonicalProfile& r) {
    if (l.entries.size() != r.entries.size()) return l.entries.size() < r.entries.size();
    return l.entries < r.entries;
  }
  friend std::ostream& operator<<(std::ostream& os, const CanonicalProfile& c) { return os << c.as_profile(); }
};

namespace detail {

// Is the rotation of `seq` starting at `a` lexicographically smaller than
// the rotation starting at `b`?
inline bool rotation_less(const std::vector<ProfileEntry>& seq, std::size_t a, const std::vector<ProfileEntry>& other,
                          std::size_t b) {
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ProfileEntry& x = seq[(a + i) % n];
    const ProfileEntry& y = other[(b + i) % n];
    if (x < y) return true;
    if (y < x) return false;
  }
  return false;
}

}  // namespace detail

/// O(N^2) scan over all 2N rotations of the profile and of its reversal.
inline CanonicalProfile canonicalize(const EdgeProfile& prof) {
  const std::size_t n = prof.size();
  if (n == 0) return {};
  const std::vector<ProfileEntry>& forward = prof.entries;
  const std::vector<ProfileEntry> backward(forward.rbegin(), forward.rend());

  const std::vector<ProfileEntry>* best_seq = &forward;
  std::size_t best_start = 0;
  for (const auto* seq : {&forward, &backward}) {
    for (std::size_t s = 0; s < n; ++s) {
      if (detail::rotation_less(*seq, s, *best_seq, best_start)) {
        best_seq = seq;
        best_start = s;
      }
    }
  }

  CanonicalProfile out;
  out.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.entries.push_back((*best_seq)[(best_start + i) % n]);
  return out;
}

inline CanonicalProfile canonical_form(const DelzantPolygon& p) { return canonicalize(edge_profile(p)); }

/// AGL(2,Z)-congruence of two Delzant polygons.
inline bool congruent(const DelzantPolygon& p, const DelzantPolygon& q) {
  if (p.size() != q.size()) return false;
  return canonical_form(p) == canonical_form(q);
}

}  // namespace toric
