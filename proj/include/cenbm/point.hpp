#pragma once

#include <compare>
#include <string>

#include "cenbm/json.hpp"
#include "cenbm/rational.hpp"

namespace cenbm {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  // Lexicographic (x, then y); used for deterministic tie-breaking.
  friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
  friend Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

  [[nodiscard]] Json to_json() const { return Json::array({x.str(), y.str()}); }
  static Point2 from_json(const Json& j);
  [[nodiscard]] std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
/// Twice the signed area of (a, b, c); positive for a left turn.
inline Rational orient(const Point2& a, const Point2& b, const Point2& c) { return cross(b - a, c - a); }

inline Point2 Point2::from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point: expected [\"x\", \"y\"]");
  return {Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>())};
}

}  // namespace cenbm
