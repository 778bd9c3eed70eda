#include <random>

#include "doctest.h"
#include "tlab/rings.hpp"

using namespace tlab;

namespace {

RingValue random_value(const Ring& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  switch (r.kind()) {
    case RingKind::Rationals:
      return r.from_rational(mpq_class(coef(rng), 1 + (rng() % 3)));
    case RingKind::PrimeField: return r.from_int(coef(rng));
    case RingKind::Cyclotomic:
    case RingKind::FractionField: {
      RingValue g = r.generator();
      RingValue v = r.zero();
      int deg = static_cast<int>(rng() % 4);
      for (int i = 0; i <= deg; ++i) v = v * g + r.from_int(coef(rng));
      if (r.kind() == RingKind::FractionField && rng() % 2) {
        RingValue d = g + r.from_int(coef(rng));
        if (r.base().kind() == RingKind::FractionField) d = d + r.embed(random_value(r.base(), rng));
        if (!d.is_zero()) v = v / d;
      }
      if (r.kind() == RingKind::FractionField && r.base().kind() != RingKind::Rationals &&
          r.base().kind() != RingKind::PrimeField)
        v = v + r.embed(random_value(r.base(), rng));
      return v;
    }
  }
  return r.zero();
}

const char* kAxiomRings[] = {"Q", "Fp:2", "Fp:5", "Fp:101", "cyclo:1", "cyclo:2", "cyclo:10",
                             "cyclo:12", "ratfun:Q", "ratfun:Fp:3", "ratfun:cyclo:5",
                             "ratfun:ratfun:Q"};

}  // namespace

TEST_CASE("cyclotomic moduli") {
  // Independent oracle: Phi_m(x) = prod_{d | m} (x^d - 1)^{mu(m/d)}, checked by
  // multiplying Phi_d over all divisors back to x^m - 1.
  for (unsigned m = 1; m <= 30; ++m) {
    std::vector<mpq_class> prod{1};
    for (unsigned d = 1; d <= m; ++d) {
      if (m % d) continue;
      const auto& phi = Ring::construct("cyclo:" + std::to_string(d)).cyclotomic_modulus();
      std::vector<mpq_class> next(prod.size() + phi.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = next;
    }
    std::vector<mpq_class> expect(m + 1, 0);
    expect[0] = -1;
    expect[m] = 1;
    CHECK(prod == expect);
  }
  const auto& phi10 = Ring::construct("cyclo:10").cyclotomic_modulus();
  CHECK(phi10 == std::vector<mpq_class>{1, -1, 1, -1, 1});
}

TEST_CASE("ring specs") {
  CHECK(Ring::construct("Fp:5").prime() == 5);
  CHECK(Ring::construct("Fp:5").characteristic() == 5);
  CHECK(&Ring::construct("Q") == &Ring::construct(" Q "));
  CHECK(Ring::construct("ratfun:Q").kind() == RingKind::FractionField);
  CHECK(Ring::construct("ratfun:ratfun:Q").base().variable() == "u");
  CHECK_THROWS_AS(Ring::construct("Fp:4"), ParseError);
  CHECK_THROWS_AS(Ring::construct("Fp:1"), ParseError);
  CHECK_THROWS_AS(Ring::construct("cyclo:0"), ParseError);
  CHECK_THROWS_AS(Ring::construct("Z"), ParseError);
  CHECK_THROWS_AS(Ring::construct("Fp:"), ParseError);
  CHECK_THROWS_AS(Ring::construct("ratfun:"), ParseError);
  CHECK_THROWS_AS(Ring::construct("cyclo:x"), ParseError);
}

TEST_CASE("inversion examples") {
  const Ring& f5 = Ring::construct("Fp:5");
  CHECK(*f5.from_int(2).inverse() == f5.from_int(3));

  const Ring& c10 = Ring::construct("cyclo:10");
  RingValue q = c10.generator();
  // q^4 - q^3 + q^2 - q + 1 = 0  =>  q^-1 = -q^3 + q^2 - q + 1
  RingValue expect = -q.pow(3) + q.pow(2) - q + c10.one();
  CHECK(*q.inverse() == expect);
  CHECK(q * expect == c10.one());
  CHECK(q.pow(10) == c10.one());
  CHECK(q.pow(5) == -c10.one());

  const Ring& Q = Ring::construct("Q");
  CHECK_FALSE(Q.zero().inverse().has_value());
  CHECK_THROWS_AS(Q.one() / Q.zero(), NotInvertible);
}

TEST_CASE("parse examples") {
  const Ring& c10 = Ring::construct("cyclo:10");
  RingValue q = c10.generator();
  RingValue v = c10.parse_element("q+q^-1");
  CHECK(v == q + (-q.pow(3) + q.pow(2) - q + c10.one()));
  CHECK(v == -q.pow(3) + q.pow(2) + c10.one());

  CHECK(Ring::construct("Fp:5").parse_element("7") == Ring::construct("Fp:5").from_int(2));

  const Ring& rt = Ring::construct("ratfun:Q");
  RingValue t = rt.generator();
  CHECK(rt.parse_element("(t^2-1)/(t-1)") == t + rt.one());
  CHECK(rt.parse_element("2t - 3/4") == rt.from_int(2) * t - rt.from_rational(mpq_class(3, 4)));
  CHECK(rt.parse_element("-t^2") == -(t * t));
  CHECK(rt.parse_element("t^(-1)") == *t.inverse());

  const Ring& tower = Ring::construct("ratfun:ratfun:Q");
  RingValue tu = tower.parse_element("tu - 1");
  CHECK(tu == tower.parse_element("t*u") - tower.one());
  CHECK(tu != tower.parse_element("t*t - 1"));

  CHECK_THROWS_AS(rt.parse_element("t +"), ParseError);
  CHECK_THROWS_AS(rt.parse_element("q"), ParseError);
  CHECK_THROWS_AS(rt.parse_element("(t"), ParseError);
  CHECK_THROWS_AS(rt.parse_element("1/(t-t)"), NotInvertible);
  CHECK_THROWS_AS(Ring::construct("Q").parse_element("0^-1"), NotInvertible);
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937 rng(7);
  for (const char* spec : kAxiomRings) {
    const Ring& r = Ring::construct(spec);
    for (int k = 0; k < 25; ++k) {
      RingValue v = random_value(r, rng);
      std::string name = spec;
      CAPTURE(name);
      CAPTURE(v.str());
      CHECK(r.parse_element(v.str()) == v);
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (const char* spec : kAxiomRings) {
    const Ring& r = Ring::construct(spec);
    std::string name = spec;
    CAPTURE(name);
    for (int k = 0; k < 30; ++k) {
      RingValue a = random_value(r, rng), b = random_value(r, rng), c = random_value(r, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + r.zero() == a);
      CHECK(a * r.one() == a);
      CHECK((a - a).is_zero());
      auto inv = a.inverse();
      CHECK(inv.has_value() == !a.is_zero());
      if (inv) CHECK(a * *inv == r.one());
      // canonical payload is a fixed point of canonicalization
      CHECK(r.make(a.payload()) == a);
    }
  }
}

TEST_CASE("mixing rings is rejected") {
  const Ring& a = Ring::construct("Q");
  const Ring& b = Ring::construct("Fp:7");
  CHECK_THROWS_AS(a.one() + b.one(), RingMismatch);
  const Ring& tower = Ring::construct("ratfun:ratfun:Q");
  CHECK(tower.embed(a.from_int(3)) == tower.from_int(3));
  CHECK_THROWS_AS(b.embed(a.one()), RingMismatch);
}

TEST_CASE("triples") {
  Triple t = make_triple("ratfun:ratfun:Q", "t", "u");
  CHECK(t.swapped().swapped() == t);
  CHECK(t.swapped().delta1 == t.delta2);
  CHECK_FALSE(t.balanced());
  CHECK(make_triple("Q", "3", "3").balanced());
}
