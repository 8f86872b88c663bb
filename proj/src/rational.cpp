#include "cenbm/rational.hpp"

#include <cmath>
#include <ostream>

namespace cenbm {

namespace {

mpz_class from_ll(long long v) {
  // mpz_class has no long long constructor on LP64 glibc builds of gmpxx;
  // route through the decimal string to stay portable.
  return mpz_class(std::to_string(v));
}

}  // namespace

Rational::Rational(long long v) : q_(from_ll(v)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  q_ = mpq_class(from_ll(num), from_ll(den));
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("rational: non-finite double");
  return Rational(mpq_class(v));
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  const auto slash = s.find('/');
  const std::string ns = s.substr(0, slash);
  const std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid_int = [](const std::string& v, bool allow_sign) {
    if (v.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (v[0] == '-' || v[0] == '+')) i = 1;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  if (!valid_int(ns, true) || !valid_int(ds, false))
    throw std::invalid_argument("rational: malformed '" + s + "'");
  mpz_class n(ns[0] == '+' ? ns.substr(1) : ns);
  mpz_class d(ds);
  if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace cenbm
