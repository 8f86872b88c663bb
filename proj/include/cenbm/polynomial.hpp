#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cenbm/json.hpp"
#include "cenbm/rational.hpp"

namespace cenbm {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The coefficient vector is kept trimmed so the leading coefficient is
/// nonzero; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// The identity polynomial x.
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] Rational coeff(std::size_t i) const;

  [[nodiscard]] Rational operator()(const Rational& at) const;
  [[nodiscard]] Polynomial derivative() const;

  /// Positive rescaling to coprime integer coefficients. Signs are preserved,
  /// so sign queries on the result agree with the original.
  [[nodiscard]] Polynomial primitive() const;
  [[nodiscard]] Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; throws std::domain_error when dividing by zero.
  [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  [[nodiscard]] Json to_json() const;
  static Polynomial from_json(const Json& j);
  [[nodiscard]] std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Product of the square-free factors of p that occur with odd multiplicity.
/// Its real roots are exactly the points where p changes sign. Positive
/// leading coefficient.
Polynomial odd_multiplicity_part(const Polynomial& p);

/// Real interval with independently open or closed ends.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_open = false;
  bool hi_open = false;

  Interval(Rational lo, Rational hi, bool lo_open = false, bool hi_open = false);

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval left_open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, false}; }
  static Interval right_open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, true}; }

  [[nodiscard]] bool contains(const Rational& v) const;
  [[nodiscard]] bool is_point() const { return lo == hi; }
  [[nodiscard]] Json to_json() const;
  static Interval from_json(const Json& j);
  [[nodiscard]] std::string str() const;
};

/// Sturm chain of the square-free part of p: s0, s1 = s0', s_{k+1} = -rem.
/// Each member is scaled by a positive constant to its integer primitive part.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots of p in iv, honoring open/closed ends.
/// Throws std::domain_error("indeterminate root count") for the zero
/// polynomial.
int sturm_root_count(const Polynomial& p, const Interval& iv);

}  // namespace cenbm
