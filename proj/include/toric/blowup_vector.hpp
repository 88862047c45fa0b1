#pragma once

// Blowup vectors (lambda; delta_1, ..., delta_k): reducedness, Cremona
// reduction, the trapezoid parameters (delta, a, b), the two nonexistence
// criteria and the upper bound on the number of toric actions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric {

class BlowupVector {
 public:
  /// Requires k >= 3 and every entry strictly positive.
  BlowupVector(Rational lambda, std::vector<Rational> deltas) : lambda_(std::move(lambda)), deltas_(std::move(deltas)) {
    if (deltas_.size() < 3) {
      throw DomainError("a blowup vector needs k >= 3 blowup sizes, got " + std::to_string(deltas_.size()));
    }
    if (lambda_ <= 0) throw DomainError("lambda must be positive, got " + to_string(lambda_));
    for (std::size_t i = 0; i < deltas_.size(); ++i) {
      if (deltas_[i] <= 0) {
        throw DomainError("delta_" + std::to_string(i + 1) + " must be positive, got " + to_string(deltas_[i]));
      }
    }
  }

  const Rational& lambda() const { return lambda_; }
  const std::vector<Rational>& deltas() const { return deltas_; }
  /// 1-based, matching delta_1 ... delta_k.
  const Rational& delta(std::size_t i) const { return deltas_.at(i - 1); }
  std::size_t k() const { return deltas_.size(); }

  friend bool operator==(const BlowupVector&, const BlowupVector&) = default;

 private:
  Rational lambda_;
  std::vector<Rational> deltas_;
};

/// "lambda; d1, d2, ..., dk" with each token printed as "p/q" or "p".
inline std::string to_string(const BlowupVector& v) {
  std::string s = to_string(v.lambda()) + ";";
  for (std::size_t i = 0; i < v.k(); ++i) s += (i ? ", " : " ") + to_string(v.deltas()[i]);
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const BlowupVector& v) { return os << to_string(v); }

/// Parses "lambda; d1, d2, ..., dk". Tokens are rationals ("p/q" or "p");
/// with `allow_decimals` exact decimals like "0.3" are accepted as well.
/// Errors carry the character offset of the offending token.
inline BlowupVector parse_blowup_vector(std::string_view text, bool allow_decimals = false) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  // Parses text[begin, end) after trimming; `start` receives the trimmed offset.
  auto token = [&](std::size_t begin, std::size_t end, std::size_t& start) -> Rational {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    start = begin;
    if (begin == end) throw ParseError("empty entry", begin);
    const std::string_view tok = text.substr(begin, end - begin);
    return allow_decimals ? parse_rational_or_decimal(tok, begin) : parse_rational(tok, begin);
  };

  const std::size_t semicolon = text.find(';');
  if (semicolon == std::string_view::npos) throw ParseError("expected ';' after lambda", text.size());
  std::size_t lambda_start = 0;
  Rational lambda = token(0, semicolon, lambda_start);

  std::vector<Rational> deltas;
  std::vector<std::size_t> starts;
  std::size_t begin = semicolon + 1;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t start = 0;
    deltas.push_back(token(begin, end, start));
    starts.push_back(start);
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  if (deltas.size() < 3) {
    throw ParseError("need at least 3 blowup sizes (k >= 3), got " + std::to_string(deltas.size()), text.size());
  }
  if (lambda <= 0) throw ParseError("lambda must be positive", lambda_start);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i] <= 0) throw ParseError("delta_" + std::to_string(i + 1) + " must be positive", starts[i]);
  }
  return {std::move(lambda), std::move(deltas)};
}

inline bool is_reduced(const BlowupVector& v) {
  const auto& d = v.deltas();
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>())) return false;
  return d[0] + d[1] + d[2] <= v.lambda();
}

/// Applies the Cremona move on the entries at 0-based positions i, j, l:
/// lambda' = 2 lambda - di - dj - dl, di' = lambda - dj - dl, and so on.
/// Returns nullopt if an entry of the result is not positive.
inline std::optional<BlowupVector> cremona_move(const BlowupVector& v, std::size_t i, std::size_t j, std::size_t l) {
  std::vector<Rational> d = v.deltas();
  const Rational& lam = v.lambda();
  const Rational di = d.at(i), dj = d.at(j), dl = d.at(l);
  const Rational new_lambda = 2 * lam - di - dj - dl;
  d[i] = lam - dj - dl;
  d[j] = lam - di - dl;
  d[l] = lam - di - dj;
  if (new_lambda <= 0 || d[i] <= 0 || d[j] <= 0 || d[l] <= 0) return std::nullopt;
  return BlowupVector(new_lambda, std::move(d));
}

/// The unique reduced vector with the same k: sort the deltas descending and
/// apply the Cremona move to the three largest while their sum exceeds
/// lambda.
inline BlowupVector reduce(const BlowupVector& v) {
  Rational lam = v.lambda();
  std::vector<Rational> d = v.deltas();
  while (true) {
    std::sort(d.begin(), d.end(), std::greater<>());
    const Rational top = d[0] + d[1] + d[2];
    if (top <= lam) break;
    const Rational d1 = d[0], d2 = d[1], d3 = d[2];
    const Rational new_lambda = 2 * lam - top;
    d[0] = lam - d2 - d3;
    d[1] = lam - d1 - d3;
    d[2] = lam - d1 - d2;
    lam = new_lambda;
    if (lam <= 0 || d[0] <= 0 || d[1] <= 0 || d[2] <= 0) {
      throw NotBlowupClass("not a blowup class: Cremona reduction of (" + to_string(v) +
                           ") reaches a non-positive entry");
    }
  }
  return {std::move(lam), std::move(d)};
}

/// delta = lambda - d1 - d2, a = lambda - d2, b = lambda - d1.
struct DerivedParams {
  Rational delta;
  Rational a;
  Rational b;
};

inline DerivedParams derived_params(const BlowupVector& v) {
  if (!is_reduced(v)) throw PreconditionError("derived_params needs a reduced vector, got " + to_string(v));
  DerivedParams p{v.lambda() - v.delta(1) - v.delta(2), v.lambda() - v.delta(2), v.lambda() - v.delta(1)};
  if (!(p.delta > 0 && p.b > 0 && p.a >= p.b)) throw InternalError("reduced vector gave delta <= 0 or b > a");
  return p;
}

enum class Existence { none_exist, inconclusive };

struct NonexistenceVerdict {
  Existence verdict = Existence::inconclusive;
  char criterion = 0;       // 'a' or 'b' when verdict is none_exist
  std::size_t index = 0;    // i for criterion (b)
  std::string reason;
};

inline std::string to_string(Existence e) { return e == Existence::none_exist ? "none-exist" : "inconclusive"; }

/// Sufficient conditions for the absence of toric actions:
///   (a) lambda - d1 - d2 = d3 = d4 = d5 = d6 (k >= 6), or
///   (b) d_i = d_{i+1} = ... = d_{2i+2} for some i >= 1 (2i+2 <= k).
inline NonexistenceVerdict nonexistence_check(const BlowupVector& v) {
  if (!is_reduced(v)) throw PreconditionError("nonexistence_check needs a reduced vector, got " + to_string(v));
  const std::size_t k = v.k();
  if (k >= 6) {
    const Rational delta = v.lambda() - v.delta(1) - v.delta(2);
    if (delta == v.delta(3) && delta == v.delta(4) && delta == v.delta(5) && delta == v.delta(6)) {
      return {Existence::none_exist, 'a', 0,
              "criterion (a): lambda - delta_1 - delta_2 = delta_3 = delta_4 = delta_5 = delta_6 = " +
                  to_string(delta)};
    }
  }
  for (std::size_t i = 1; 2 * i + 2 <= k; ++i) {
    bool equal = true;
    for (std::size_t j = i + 1; j <= 2 * i + 2 && equal; ++j) equal = v.delta(j) == v.delta(i);
    if (equal) {
      return {Existence::none_exist, 'b', i,
              "criterion (b) with i = " + std::to_string(i) + ": delta_" + std::to_string(i) + " = ... = delta_" +
                  std::to_string(2 * i + 2) + " = " + to_string(v.delta(i))};
    }
  }
  return {Existence::inconclusive, 0, 0, "no nonexistence criterion applies"};
}

struct BoundReport {
  Integer bound;
  std::array<bool, 4> conditions{};  // (i) .. (iv)
  bool attained = false;
};

inline Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Upper bound (ceil((l-d2)/(l-d1)) + ceil((d1-d2)/(l-d1))) * (k+2)!/24 and
/// the four conditions under which it is attained.
inline BoundReport bound_report(const BlowupVector& v) {
  if (!is_reduced(v)) throw PreconditionError("bound_report needs a reduced vector, got " + to_string(v));
  const Rational& lam = v.lambda();
  const Rational& d1 = v.delta(1);
  const Rational& d2 = v.delta(2);
  const std::size_t k = v.k();
  const Rational b = lam - d1;
  const Integer seeds = ceil(Rational(lam - d2) / b);
  const Integer extra = ceil(Rational(d1 - d2) / b);

  BoundReport r;
  r.bound = (seeds + extra) * factorial(k + 2) / 24;

  // tail[j] = d_{j+1} + ... + d_k for 1-based j
  std::vector<Rational> tail(k + 1, Rational(0));
  for (std::size_t j = k; j-- > 1;) tail[j] = tail[j + 1] + v.delta(j + 1);
  const Rational rest = tail[2];  // d3 + ... + dk
  const Rational slack = lam - Rational(seeds) * b;

  r.conditions[0] = Rational(seeds) * b < lam;
  r.conditions[1] = true;
  for (std::size_t j = 3; j < k; ++j) r.conditions[1] = r.conditions[1] && tail[j] < v.delta(j);
  r.conditions[2] = rest < lam - d1 - d2;
  r.conditions[3] = rest < slack;
  r.attained = r.conditions[0] && r.conditions[1] && r.conditions[2] && r.conditions[3];
  return r;
}

}  // namespace toric
