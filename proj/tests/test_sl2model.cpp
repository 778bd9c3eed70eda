#include <random>

#include "doctest.h"
#include "tlab/sl2model.hpp"

using namespace tlab;

namespace {

Word random_word(unsigned len, std::mt19937& rng) {
  Word w;
  for (unsigned i = 0; i < len; ++i) w.push_back(rng() % 2 ? Letter::Up : Letter::Down);
  return w;
}

TLMorphism random_diagram(const Triple& t, const Word& s, const Word& w, std::mt19937& rng) {
  auto basis = enumerate_basis(s, w);
  TLMorphism f(t, s, w);
  if (!basis.empty()) f.add(basis[rng() % basis.size()].partner(), t.ring->from_int(1 + rng() % 3));
  return f;
}

TLMorphism cap(const Triple& t, Letter a) {
  return TLMorphism::diagram(t, Diagram({a, dual(a)}, {}, Partner{1, 0}));
}
TLMorphism cup(const Triple& t, Letter a) {
  return TLMorphism::diagram(t, Diagram({}, {a, dual(a)}, Partner{1, 0}));
}

}  // namespace

TEST_CASE("realization of elementary morphisms") {
  FiberParams P = make_fiber("ratfun:Q", "t");
  Triple t = P.triple();
  const Ring& F = *P.field;
  CHECK(realize(TLMorphism::identity(t, alt(1)), P) == ExactMatrix::identity(F, 2));

  for (Letter a : {Letter::Up, Letter::Down}) {
    ExactMatrix loop = realize(compose(cap(t, a), cup(t, a)), P);
    REQUIRE(loop.rows() == 1);
    CHECK(loop.at(0, 0) == P.delta);
    // the two snakes
    Word x{a};
    TLMorphism id = TLMorphism::identity(t, x);
    TLMorphism s1 = compose(tensor(id, cap(t, dual(a))), tensor(cup(t, a), id));
    TLMorphism s2 = compose(tensor(cap(t, a), id), tensor(id, cup(t, dual(a))));
    CHECK(s1 == id);
    CHECK(realize(s1, P) == ExactMatrix::identity(F, 2));
    CHECK(realize(s2, P) == ExactMatrix::identity(F, 2));
  }

  ExactMatrix ev = realize(cap(t, Letter::Down), P);
  CHECK(ev.rows() == 1);
  CHECK(ev.cols() == 4);
  CHECK(ev.at(0, 0) == F.one());
  CHECK(ev.at(0, 3) == F.one());
  CHECK(ev.at(0, 1).is_zero());
  ExactMatrix ev2 = realize(cap(t, Letter::Up), P);
  CHECK(ev2.at(0, 0) == P.q);
  CHECK(ev2.at(0, 3) == P.q.pow(-1));

  FiberParams other = make_fiber("ratfun:Q", "2");
  CHECK_THROWS_AS(realize(TLMorphism::identity(t, alt(1)), other), std::invalid_argument);
  CHECK_THROWS_AS(make_fiber("Q", "0"), NotInvertible);
}

TEST_CASE("realization is a monoidal functor") {
  std::mt19937 rng(2024);
  FiberParams P = make_fiber("ratfun:Q", "t");
  Triple t = P.triple();
  int pairs = 0;
  while (pairs < 100) {
    Word a = random_word(rng() % 5, rng), b = random_word(rng() % 5, rng), c = random_word(rng() % 5, rng);
    if ((a.size() + b.size()) % 2 || (b.size() + c.size()) % 2) continue;
    TLMorphism g = random_diagram(t, a, b, rng), f = random_diagram(t, b, c, rng);
    CHECK(realize(compose(f, g), P) == realize(f, P) * realize(g, P));
    CHECK(realize(tensor(f, g), P) == realize(f, P).kron(realize(g, P)));
    ++pairs;
  }
}

TEST_CASE("homology at generic q") {
  FiberParams P = make_fiber("ratfun:Q", "t");
  Triple t = P.triple();
  auto h1 = homology(build_continuant(1, Variant::Lower, t).complex, P);
  CHECK(h1.h(0) == 2);
  CHECK(h1.support() == std::vector<int>{0});

  auto h3 = homology(build_continuant(3, Variant::Lower, t).complex, P);
  CHECK(h3.h(0) == 4);
  CHECK(h3.h(-1) == 0);
  CHECK(h3.h(-2) == 0);

  for (unsigned n = 0; n <= 6; ++n) {
    CAPTURE(n);
    auto E = build_continuant(n, Variant::Lower, t).complex;
    auto h = homology(E, P);
    CHECK(h.support() == std::vector<int>{0});
    CHECK(h.h(0) == n + 1);
    if (n == 0) continue;
    auto j = jw(t, n);
    REQUIRE(j.exists());
    CHECK(realize(*j.jw, P).rank() == h.h(0));
  }
}

TEST_CASE("homology at roots of unity") {
  FiberParams z10 = make_fiber("cyclo:10", "q");
  auto h4 = homology(build_continuant(4, Variant::Lower, z10.triple()).complex, z10);
  CHECK(h4.h(0) == 5);
  CHECK(h4.support() == std::vector<int>{0});
  auto j4 = jw(z10.triple(), 4);
  REQUIRE(j4.exists());
  CHECK(realize(*j4.jw, z10).rank() == 5);
  CHECK(is_negligible(*j4.jw));

  int compared = 0;
  for (const char* spec : {"cyclo:10", "cyclo:12"}) {
    FiberParams P = make_fiber(spec, "q");
    for (unsigned n = 1; n <= 6; ++n) {
      auto j = jw(P.triple(), n);
      if (!j.exists()) continue;
      auto h = homology(build_continuant(n, Variant::Lower, P.triple()).complex, P);
      CAPTURE(spec);
      CAPTURE(n);
      CHECK(realize(*j.jw, P).rank() == h.h(0));
      CHECK(h.support() == std::vector<int>{0});
      ++compared;
    }
  }
  CHECK(compared == 9);

  // at q = zeta_{2N} nothing vanishes before semisimplification
  for (unsigned N = 3; N <= 6; ++N) {
    FiberParams P = make_fiber("cyclo:" + std::to_string(2 * N), "q");
    CAPTURE(N);
    CHECK(qnum(P.triple(), N).first.is_zero());
    auto h = homology(build_continuant(N - 1, Variant::Lower, P.triple()).complex, P);
    CHECK(h.h(0) > 0);
    auto j = jw(P.triple(), N - 1);
    REQUIRE(j.exists());
    CHECK(is_negligible(*j.jw));
  }
}

TEST_CASE("Euler characteristic") {
  FiberParams P = make_fiber("Fp:101", "2");
  for (unsigned n = 0; n <= 8; ++n) {
    CAPTURE(n);
    auto h = homology(build_continuant(n, Variant::Lower, P.triple()).complex, P);
    long k = kappa(n).evaluate(mpz_class(2), mpz_class(2)).get_si();
    CHECK(h.euler_terms == k);
    CHECK(h.euler_homology == k);
  }
}

TEST_CASE("homology rejects a broken complex") {
  FiberParams P = make_fiber("Q", "2");
  auto E = build_continuant(4, Variant::Lower, P.triple()).complex;
  FormalMorphism d = E.d(-1);
  d.at(0, 0) = -d.at(0, 0);
  E.set_d(-1, d);
  CHECK_THROWS_AS(homology(E, P), std::logic_error);
  auto j = to_json(homology(build_continuant(2, Variant::Lower, P.triple()).complex, P));
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(j["rows"][0]["homology"] == 3);
}
