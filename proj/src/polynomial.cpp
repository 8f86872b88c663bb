#include "cenbm/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cenbm {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_class n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  const Rational scale(l, g);
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * scale);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational inv = Rational(1) / leading();
  return inv * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(s * c);
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial: division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dd = d.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational lead = d.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Json Polynomial::to_json() const {
  Json arr = Json::array();
  for (const auto& c : coeffs_) arr.push_back(c.str());
  return arr;
}

Polynomial Polynomial::from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected coefficient array");
  std::vector<Rational> out;
  for (const auto& c : j) out.push_back(Rational::parse(c.get<std::string>()));
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    const bool unit = a == Rational(1);
    if (!unit || i == 0) os << (a.den() == 1 ? a.num().get_str() : "(" + a.str() + ")");
    if (i >= 1) os << (unit ? "" : "*") << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

Polynomial odd_multiplicity_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  // Yun's square-free decomposition: p = c * prod a_i^i.
  Polynomial result = Polynomial::constant(1);
  Polynomial g = gcd(p, p.derivative());
  Polynomial w = p.divmod(g).first.monic();
  Polynomial c = g;
  for (int i = 1; w.degree() > 0; ++i) {
    Polynomial y = gcd(w, c);
    Polynomial factor = w.divmod(y).first;
    if (i % 2 == 1) result = result * factor;
    w = y;
    c = c.divmod(y).first;
  }
  result = result.primitive();
  if (result.leading().sign() < 0) result = -result;
  return result;
}

Interval::Interval(Rational lo_, Rational hi_, bool lo_open_, bool hi_open_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_open(lo_open_), hi_open(hi_open_) {
  if (hi < lo) throw std::invalid_argument("interval: lo > hi");
  if (lo == hi && (lo_open || hi_open)) throw std::invalid_argument("interval: degenerate interval with an open end");
}

bool Interval::contains(const Rational& v) const {
  const bool above = lo_open ? lo < v : lo <= v;
  const bool below = hi_open ? v < hi : v <= hi;
  return above && below;
}

Json Interval::to_json() const {
  return Json{{"lo", lo.str()}, {"hi", hi.str()}, {"lo_open", lo_open}, {"hi_open", hi_open}};
}

Interval Interval::from_json(const Json& j) {
  return {Rational::parse(j.at("lo").get<std::string>()), Rational::parse(j.at("hi").get<std::string>()),
          j.at("lo_open").get<bool>(), j.at("hi_open").get<bool>()};
}

std::string Interval::str() const {
  return std::string(lo_open ? "(" : "[") + lo.str() + ", " + hi.str() + (hi_open ? ")" : "]");
}

namespace {

// Pseudo-remainder with the scaling factor's sign folded back in, so the
// result is a positive multiple of the true remainder a mod b.
Polynomial signed_pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  const int delta = a.degree() - b.degree();
  if (delta < 0) return a;
  const Rational lc = b.leading();
  Rational scale(1);
  for (int i = 0; i <= delta; ++i) scale *= lc;
  Polynomial r = (scale * a).divmod(b).second;
  if (scale.sign() < 0) r = -r;
  return r.primitive();
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& at) {
  int variations = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const int sg = s(at).sign();
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++variations;
    prev = sg;
  }
  return variations;
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("indeterminate root count");
  Polynomial sq = p.divmod(gcd(p, p.derivative())).first.primitive();
  if (sq.leading().sign() < 0) sq = -sq;
  std::vector<Polynomial> chain{sq};
  if (sq.degree() == 0) return chain;
  chain.push_back(sq.derivative().primitive());
  while (true) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = signed_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sturm_root_count(const Polynomial& p, const Interval& iv) {
  const auto chain = sturm_chain(p);
  const bool lo_root = p(iv.lo).is_zero();
  if (iv.is_point()) return lo_root ? 1 : 0;
  const bool hi_root = p(iv.hi).is_zero();
  // For a square-free chain head, V(lo) - V(hi) counts roots in (lo, hi].
  int count = sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
  if (!iv.lo_open && lo_root) ++count;
  if (iv.hi_open && hi_root) --count;
  return count;
}

}  // namespace cenbm
