#pragma once

// Plane lattice geometry: integer vectors, rational points, primitive
// decomposition of rational-slope vectors, and AGL(2,Z) maps.

#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <utility>

#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric {

struct LatticeVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  LatticeVector operator-() const { return {-x, -y}; }
  friend LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticeVector operator*(std::int64_t c, LatticeVector v) { return {c * v.x, c * v.y}; }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << '(' << v.x << ", " << v.y << ')';
  }
};

inline std::int64_t det(LatticeVector a, LatticeVector b) { return a.x * b.y - a.y * b.x; }
inline std::int64_t dot(LatticeVector a, LatticeVector b) { return a.x * b.x + a.y * b.y; }

/// Rotation by +90 degrees. Applied to a CCW edge direction this gives the
/// inward normal.
inline LatticeVector rotate_ccw(LatticeVector v) { return {-v.y, v.x}; }
/// Rotation by -90 degrees; inverse of rotate_ccw.
inline LatticeVector rotate_cw(LatticeVector v) { return {v.y, -v.x}; }

inline bool is_primitive(LatticeVector v) {
  return std::gcd(v.x, v.y) == 1;
}

struct PlanePoint {
  Rational x;
  Rational y;

  PlanePoint() = default;
  PlanePoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  explicit PlanePoint(LatticeVector v) : x(v.x), y(v.y) {}

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const PlanePoint& a, const PlanePoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }

  friend PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend PlanePoint operator*(const Rational& c, const PlanePoint& p) { return {c * p.x, c * p.y}; }
  friend PlanePoint operator+(const PlanePoint& p, LatticeVector v) { return {p.x + v.x, p.y + v.y}; }

  friend std::ostream& operator<<(std::ostream& os, const PlanePoint& p) {
    return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
  }
};

inline PlanePoint operator*(const Rational& c, LatticeVector v) { return {c * v.x, c * v.y}; }

inline Rational cross(const PlanePoint& a, const PlanePoint& b) { return a.x * b.y - a.y * b.x; }

namespace detail {

inline std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw DomainError("lattice coordinate " + n.str() + " exceeds 64-bit range");
  return n.convert_to<std::int64_t>();
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("lattice arithmetic overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("lattice arithmetic overflow");
  return r;
}

}  // namespace detail

struct PrimitiveDecomposition {
  Rational size;
  LatticeVector direction;
};

/// Writes a nonzero rational vector as size * direction with direction
/// primitive in Z^2 and size > 0.
inline PrimitiveDecomposition primitive_decompose(const PlanePoint& v) {
  if (v.x == 0 && v.y == 0) throw DomainError("primitive_decompose: zero vector");
  const Integer common = boost::multiprecision::lcm(denominator(v.x), denominator(v.y));
  const Integer ix = numerator(v.x) * (common / denominator(v.x));
  const Integer iy = numerator(v.y) * (common / denominator(v.y));
  const Integer g = boost::multiprecision::gcd(ix, iy);  // > 0 since v != 0
  return {Rational(g, common), {detail::to_int64(ix / g), detail::to_int64(iy / g)}};
}

/// 2x2 integer matrix, row-major: [[a, b], [c, d]].
struct IntMatrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

  std::int64_t det() const { return a * d - b * c; }

  LatticeVector operator*(LatticeVector v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  PlanePoint operator*(const PlanePoint& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }

  friend IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n) {
    using detail::checked_add;
    using detail::checked_mul;
    return {checked_add(checked_mul(m.a, n.a), checked_mul(m.b, n.c)),
            checked_add(checked_mul(m.a, n.b), checked_mul(m.b, n.d)),
            checked_add(checked_mul(m.c, n.a), checked_mul(m.d, n.c)),
            checked_add(checked_mul(m.c, n.b), checked_mul(m.d, n.d))};
  }

  static IntMatrix2 identity() { return {}; }
};

/// x -> A x + b with det A = +-1.
class AffineUnimodularMap {
 public:
  AffineUnimodularMap() = default;

  AffineUnimodularMap(IntMatrix2 matrix, PlanePoint translation)
      : matrix_(matrix), translation_(std::move(translation)) {
    const std::int64_t d = matrix_.det();
    if (d != 1 && d != -1) throw DomainError("AffineUnimodularMap: det(A) = " + std::to_string(d) + ", expected +-1");
  }

  const IntMatrix2& matrix() const { return matrix_; }
  const PlanePoint& translation() const { return translation_; }
  std::int64_t det() const { return matrix_.det(); }

  PlanePoint operator()(const PlanePoint& p) const { return matrix_ * p + translation_; }
  /// Linear part only; maps directions and normals' duals.
  LatticeVector linear(LatticeVector v) const { return matrix_ * v; }

  AffineUnimodularMap inverse() const {
    const std::int64_t s = matrix_.det();  // A^{-1} = s * adj(A) since s = +-1
    const IntMatrix2 inv{s * matrix_.d, -s * matrix_.b, -s * matrix_.c, s * matrix_.a};
    const PlanePoint t = inv * translation_;
    return {inv, {-t.x, -t.y}};
  }

  /// (this o other)(p) = this(other(p)).
  AffineUnimodularMap compose(const AffineUnimodularMap& other) const {
    return {matrix_ * other.matrix_, matrix_ * other.translation_ + translation_};
  }

 private:
  IntMatrix2 matrix_{};
  PlanePoint translation_{Rational(0), Rational(0)};
};

inline PlanePoint apply_map(const AffineUnimodularMap& map, const PlanePoint& p) { return map(p); }

/// Deterministic pseudo-random element of AGL(2,Z): a word of the given length
/// in the shear [[1,1],[0,1]], the rotation [[0,-1],[1,0]] and the reflection
/// [[1,0],[0,-1]], followed by a translation with numerator in [-20, 20] and
/// denominator in [1, 12].
inline AffineUnimodularMap random_unimodular_map(std::uint64_t seed, int word_length) {
  static constexpr std::array<IntMatrix2, 3> generators{{
      {1, 1, 0, 1},
      {0, -1, 1, 0},
      {1, 0, 0, -1},
  }};
  if (word_length < 0) throw DomainError("word length must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  IntMatrix2 m = IntMatrix2::identity();
  for (int i = 0; i < word_length; ++i) m = m * generators[pick(rng)];
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  const int nx = num(rng), dx = den(rng), ny = num(rng), dy = den(rng);
  return {m, {Rational(nx, dx), Rational(ny, dy)}};
}

}  // namespace toric
