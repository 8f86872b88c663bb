#pragma once

// Exact rational scalar backed by GMP.
//
// Values are always canonical: gcd(|num|, den) = 1 and den > 0. Division by
// zero throws instead of trapping.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cenbm {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Exact conversion of a finite double (every double is a dyadic rational).
  static Rational from_double(double v);

  // Parses "n", "n/d" or "-n/d". Throws std::invalid_argument on bad input or
  // a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class num() const { return q_.get_num(); }
  [[nodiscard]] mpz_class den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  // "num/den"; integers are still written with "/1" so the wire format is
  // uniform.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_{0};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Rational literal helper: Q(5, 2) == 5/2.
inline Rational Q(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace cenbm
