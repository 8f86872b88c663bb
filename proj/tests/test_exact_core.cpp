#include <doctest.h>

#include <algorithm>
#include <set>

#include "cenbm/certificate.hpp"
#include "cenbm/polynomial.hpp"
#include "test_support.hpp"

using namespace cenbm;
using cenbm::testing::random_rational;
using cenbm::testing::rng;

namespace {

bool canonical(const Rational& r) {
  mpz_class g;
  mpz_class n = r.num();
  mpz_class d = r.den();
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return d > 0 && g == 1;
}

Polynomial linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Q(6, -4) == Q(-3, 2));
  CHECK(Q(6, -4).den() == 2);
  CHECK((Q(1, 3) + Q(1, 6)) == Q(1, 2));
  CHECK(Q(5, 2).str() == "5/2");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational::parse("-10/4") == Q(-5, 2));
  CHECK(Rational::parse("7") == Q(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Q(1) / Q(0), std::domain_error);
  CHECK(Rational::from_double(0.375) == Q(3, 8));

  // Coefficients that overflow 64 bits stay exact.
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Q(1000003, 999983);
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Q(1000003, 999983);
  CHECK(back == Rational(1));
}

TEST_CASE("results stay canonical under random operations") {
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(-50, 50, 97);
    Rational b = random_rational(-50, 50, 36);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (!b.is_zero()) CHECK(canonical(a / b));
  }
}

TEST_CASE("polynomial algebra") {
  const Polynomial a = Polynomial::x();
  // (2a - 1)(5a - 2) - (1 - 4a)(2 + 5a) = 6a(5a - 1)
  const Polynomial lhs = Polynomial({-1, 2}) * Polynomial({-2, 5}) - Polynomial({1, -4}) * Polynomial({2, 5});
  CHECK(lhs == Rational(6) * a * Polynomial({-1, 5}));
  CHECK(lhs == Polynomial({0, -6, 30}));
  auto [q, r] = Polynomial({-1, 0, 1}).divmod(Polynomial({-1, 1}));
  CHECK(q == Polynomial({1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(Polynomial({-1, 0, 1}), Polynomial({1, 2, 1})) == Polynomial({1, 1}));
  CHECK(Polynomial({Q(1, 2), Q(-3, 4)}).primitive() == Polynomial({2, -3}));
  CHECK(Polynomial({0, 0, 0}).is_zero());
  CHECK(Polynomial({-1, 0, 1}).str() == "x^2 - 1");
}

TEST_CASE("odd multiplicity part keeps only sign-changing factors") {
  // (x - 1)^2 (x + 2)^3 (x - 3)
  Polynomial p = linear_factor(1) * linear_factor(1) * linear_factor(-2) * linear_factor(-2) * linear_factor(-2) *
                 linear_factor(3);
  CHECK(odd_multiplicity_part(Rational(-7) * p) == linear_factor(-2) * linear_factor(3));
}

TEST_CASE("sturm_root_count examples") {
  CHECK(sturm_root_count(Polynomial({-1, 0, 1}), Interval::closed(0, 2)) == 1);
  CHECK(sturm_root_count(Polynomial({0, -6, 30}), Interval::open(0, Q(1, 5))) == 0);
  CHECK(sturm_root_count(Polynomial::constant(1), Interval::closed(-10, 10)) == 0);
  CHECK_THROWS_WITH_AS(sturm_root_count(Polynomial{}, Interval::closed(0, 1)), "indeterminate root count",
                       std::domain_error);

  // Open and closed ends at roots.
  const Polynomial p({0, -6, 30});  // roots 0 and 1/5
  CHECK(sturm_root_count(p, Interval::closed(0, Q(1, 5))) == 2);
  CHECK(sturm_root_count(p, Interval::left_open(0, Q(1, 5))) == 1);
  CHECK(sturm_root_count(p, Interval::right_open(0, Q(1, 5))) == 1);
  CHECK(sturm_root_count(p, Interval::closed(Q(1, 5), Q(1, 5))) == 1);
}

TEST_CASE("sturm_root_count matches planted roots on random intervals") {
  std::uniform_int_distribution<int> deg(0, 4), lattice(-12, 12), coin(0, 1), scale(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = deg(rng());
    std::vector<Rational> roots;
    Polynomial p = Polynomial::constant(Rational(scale(rng())) * (coin(rng()) ? 1 : -1));
    for (int i = 0; i < d; ++i) {
      roots.emplace_back(lattice(rng()), 4);
      p = p * linear_factor(roots.back());
    }
    if (coin(rng())) p = p * Polynomial({1, 0, 1});  // no real roots
    Rational lo(lattice(rng()), 4), hi(lattice(rng()), 4);
    if (hi < lo) std::swap(lo, hi);
    const bool lo_open = lo != hi && coin(rng());
    const bool hi_open = lo != hi && coin(rng());
    const Interval iv(lo, hi, lo_open, hi_open);
    std::set<Rational> distinct;
    for (const auto& r : roots)
      if (iv.contains(r)) distinct.insert(r);
    CAPTURE(p.str());
    CAPTURE(iv.str());
    CHECK(sturm_root_count(p, iv) == static_cast<int>(distinct.size()));
  }
}

TEST_CASE("certify_sign_on_interval examples") {
  const auto c1 = certify_sign_on_interval(Polynomial({0, -6, 30}), Interval::closed(0, Q(1, 5)),
                                           SignRequirement::NonPositive);
  CHECK(c1.ok());
  CHECK(c1.kind == "sign_on_interval");

  // 2(5a - 1)(2a - 1)
  const Polynomial p2 = Rational(2) * Polynomial({-1, 5}) * Polynomial({-1, 2});
  CHECK(p2 == Polynomial({2, -14, 20}));
  CHECK(certify_sign_on_interval(p2, Interval::closed(Q(1, 5), Q(1, 2)), SignRequirement::NonPositive).ok());

  const auto bad = certify_sign_on_interval(Polynomial::x(), Interval::closed(Q(1, 2), 1), SignRequirement::Negative);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.reason.empty());

  // Strict requirement fails at a closed endpoint root but holds when open.
  CHECK_FALSE(certify_sign_on_interval(Polynomial({0, -6, 30}), Interval::closed(0, Q(1, 5)),
                                       SignRequirement::Negative)
                  .ok());
  CHECK(certify_sign_on_interval(Polynomial({0, -6, 30}), Interval::open(0, Q(1, 5)), SignRequirement::Negative)
            .ok());

  // Even-multiplicity interior root does not break a non-strict sign.
  const Polynomial touch = -(linear_factor(Q(1, 2)) * linear_factor(Q(1, 2)));
  CHECK(certify_sign_on_interval(touch, Interval::closed(0, 1), SignRequirement::NonPositive).ok());
  CHECK_FALSE(certify_sign_on_interval(touch, Interval::closed(0, 1), SignRequirement::Negative).ok());

  CHECK(certify_sign_on_interval(Polynomial{}, Interval::closed(0, 1), SignRequirement::NonNegative).ok());
  CHECK_THROWS_AS(certify_sign_on_interval(Polynomial{}, Interval::closed(0, 1), SignRequirement::Positive),
                  std::domain_error);
}

TEST_CASE("sign certificate symmetry: p >= 0 iff -p <= 0") {
  std::uniform_int_distribution<int> deg(1, 4), lattice(-8, 8), coin(0, 1);
  int passes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p = Polynomial::constant(coin(rng()) ? 1 : -1);
    for (int i = 0, d = deg(rng()); i < d; ++i) p = p * linear_factor(Rational(lattice(rng()), 4));
    Rational lo(lattice(rng()), 4), hi(lattice(rng()), 4);
    if (hi < lo) std::swap(lo, hi);
    const Interval iv = lo == hi ? Interval::closed(lo, hi) : Interval(lo, hi, coin(rng()), coin(rng()));
    const bool pos = certify_sign_on_interval(p, iv, SignRequirement::NonNegative).ok();
    const bool neg = certify_sign_on_interval(-p, iv, SignRequirement::NonPositive).ok();
    CHECK(pos == neg);
    passes += pos;
  }
  CHECK(passes > 0);
}

TEST_CASE("region_empty examples") {
  using C = LinearConstraint2;
  // Uncovered part of the Case 1 parameter region.
  const std::vector<C> v_uncovered{
      C::gt(1, 0, 0),                // alpha > 0
      C::le(1, 0, 1),                // alpha <= 1
      C::ge(1, 1, 0),                // beta >= -alpha
      C::le(1, 1, 1),                // beta <= 1 - alpha
      C::gt(1, 3, 2),                // beta > (2 - alpha)/3
      C::gt(3, 1, 2),                // beta > 2 - 3 alpha
  };
  const auto r = region_empty(v_uncovered);
  CHECK(r.empty());
  CHECK_FALSE(r.witness.has_value());

  CHECK(region_empty({C::le(1, 0, 0), C::gt(1, 0, 1)}).empty());

  const auto nonempty = region_empty({C::ge(1, 0, 0), C::le(1, 0, 1)});
  CHECK_FALSE(nonempty.empty());
  REQUIRE(nonempty.witness.has_value());
  CHECK(nonempty.witness->x >= Rational(0));
  CHECK(nonempty.witness->x <= Rational(1));

  CHECK_THROWS_WITH_AS(region_empty({}), "vacuous query", std::invalid_argument);
  CHECK_THROWS_AS(C(0, 0, 1), std::invalid_argument);

  // The bounding box is part of the statement.
  const auto j = r.certificate.to_json();
  CHECK(j["inputs"]["bounding_box"]["x"]["lo"] == "-10/1");
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("region_empty witnesses replay against every constraint") {
  std::uniform_int_distribution<int> coef(-4, 4), rhs(-6, 6), count(1, 5), coin(0, 1);
  int nonempty = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<LinearConstraint2> cs;
    for (int i = 0, n = count(rng()); i < n; ++i) {
      int a = coef(rng()), b = coef(rng());
      if (a == 0 && b == 0) a = 1;
      cs.emplace_back(a, b, Rational(rhs(rng()), 2), coin(rng()) ? Relation::Less : Relation::LessEqual);
    }
    const auto r = region_empty(cs);
    if (r.witness) {
      ++nonempty;
      for (const auto& c : cs) CHECK(c.satisfied(*r.witness));
    } else {
      // An empty verdict must not be contradicted by a lattice probe.
      for (int x = -20; x <= 20; ++x)
        for (int y = -20; y <= 20; ++y) {
          const Point2 p{Rational(x, 2), Rational(y, 2)};
          CHECK_FALSE(std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return c.satisfied(p); }));
        }
    }
  }
  CHECK(nonempty > 0);
}

TEST_CASE("certificates round-trip through JSON") {
  const auto c = certify_sign_on_interval(Polynomial({0, -6, 30}), Interval::left_open(0, Q(1, 5)),
                                          SignRequirement::NonPositive);
  const Certificate back = Certificate::from_json(c.to_json());
  CHECK(back.to_json() == c.to_json());
}
