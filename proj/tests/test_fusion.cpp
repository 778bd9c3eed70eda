#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tlab/fusion.hpp"
#include "tlab/rings.hpp"

using namespace tlab;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kGaloisNextGap = 0.0034966584150510;

K0Vector cls(const FusionRing& r, std::initializer_list<std::pair<const char*, long>> terms) {
  K0Vector v(r.rank(), 0);
  for (auto [label, c] : terms) v[r.index_of(label)] += c;
  return v;
}

nlohmann::json ising_doc() {
  // 1, ε, σ with σσ = 1 + ε, σε = εσ = σ, εε = 1
  nlohmann::json N = nlohmann::json::array();
  long t[3][3][3] = {};
  for (int j = 0; j < 3; ++j) t[0][j][j] = t[j][0][j] = 1;
  t[1][1][0] = 1;
  t[1][2][2] = t[2][1][2] = 1;
  t[2][2][0] = t[2][2][1] = 1;
  for (auto& a : t) {
    nlohmann::json row = nlohmann::json::array();
    for (auto& b : a) row.push_back(std::vector<long>(b, b + 3));
    N.push_back(row);
  }
  return {{"name", "ising"}, {"basis", {"1", "ε", "σ"}}, {"unit", 0}, {"dual", {0, 1, 2}}, {"N", N}};
}

// Largest eigenvalue of the tridiagonal path matrix with n vertices, by bisection on
// the Sturm sequence. Independent of the power iteration in fpdim.
double path_eigenvalue(unsigned n) {
  auto count_below = [&](double x) {
    int c = 0;
    double p = 1;
    for (unsigned i = 0; i < n; ++i) {
      double q = -x - (i ? 1.0 / p : 0.0);
      if (q < 0) ++c;
      p = q == 0 ? 1e-300 : q;
    }
    return c;
  };
  double lo = 0, hi = 2;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    (count_below(mid) < static_cast<int>(n) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("loading and validation") {
  FusionRing r = load_fusion_ring(ising_doc());
  CHECK(r.rank() == 3);
  CHECK(r.basis[2] == "σ");
  CHECK(load_fusion_ring(to_json(r)).N == r.N);

  nlohmann::json trivial = {{"name", "trivial"}, {"basis", {"1"}}, {"unit", 0}, {"dual", {0}}, {"N", {{{1}}}}};
  CHECK(load_fusion_ring(trivial).rank() == 1);

  auto message = [](const nlohmann::json& doc) {
    try {
      load_fusion_ring(doc);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  // σσ = 1 + ε + σ is still associative: it is the Grothendieck ring of Rep(S3)
  auto bad = ising_doc();
  bad["N"][2][2][2] = 1;
  CHECK(message(bad) == "accepted");
  bad = ising_doc();
  bad["N"][1][1][2] = 1;
  CHECK(message(bad).starts_with("associativity:"));
  bad = ising_doc();
  bad["N"][0][1][1] = 0;
  CHECK(message(bad).starts_with("unit:"));
  bad = ising_doc();
  bad["dual"] = {0, 2, 1};
  CHECK(message(bad).starts_with("duality:"));
  bad = ising_doc();
  bad["N"][1][1][0] = -1;
  CHECK(message(bad).starts_with("schema:"));
  bad = ising_doc();
  bad.erase("unit");
  CHECK(message(bad).starts_with("schema:"));
  bad = ising_doc();
  bad["N"][1].erase(0);
  CHECK(message(bad).starts_with("schema:"));
}

TEST_CASE("built-in rings") {
  FusionRing v5 = builtin_ring("verp:5");
  CHECK(v5.rank() == 4);
  CHECK(multiply(v5, basis_vector(v5, 1), basis_vector(v5, 1)) == cls(v5, {{"L0", 1}, {"L2", 1}}));
  CHECK(builtin_ring("ising").rank() == 3);
  CHECK(builtin_ring("pointed:1").rank() == 1);
  CHECK(builtin_ring("verp:2").rank() == 1);
  CHECK(builtin_ring("slq:7").N == builtin_ring("verp:7").N);

  FusionRing ty = builtin_ring("ty_z3");
  K0Vector X = cls(ty, {{"X", 1}});
  CHECK(multiply(ty, X, X) == cls(ty, {{"1", 1}, {"g", 1}, {"g^2", 1}}));
  CHECK(multiply(ty, cls(ty, {{"g", 1}}), X) == X);
  CHECK(multiply(ty, X, cls(ty, {{"g", 1}})) == X);
  CHECK(ty.dual[ty.index_of("g")] == ty.index_of("g^2"));

  // Chebyshev rule L1 L_i = L_{i-1} + L_{i+1}, truncated
  for (unsigned N = 3; N <= 9; ++N) {
    FusionRing r = builtin_ring("slq:" + std::to_string(N));
    for (std::size_t i = 0; i < r.rank(); ++i) {
      K0Vector expect(r.rank(), 0);
      if (i > 0) expect[i - 1] += 1;
      if (i + 1 < r.rank()) expect[i + 1] += 1;
      CHECK(multiply(r, basis_vector(r, 1 % r.rank()), basis_vector(r, i)) == (r.rank() == 1 ? basis_vector(r, 0) : expect));
    }
  }

  for (const char* bad : {"verp:4", "verp:1", "slq:2", "slq:x", "pointed:0", "fibonacci", "slq:"})
    CHECK_THROWS_AS(builtin_ring(bad), std::invalid_argument);
  for (const auto& name : builtin_names()) CHECK_NOTHROW(validate(builtin_ring(name)));
}

TEST_CASE("class arithmetic and parsing") {
  FusionRing r = builtin_ring("ising");
  CHECK(str(r, cls(r, {{"1", 2}, {"ε", 1}})) == "2*1 + ε");
  CHECK(str(r, cls(r, {{"ε", -1}})) == "-ε");
  CHECK(str(r, K0Vector(3, 0)) == "0");
  CHECK(parse_class(r, "2*1 + ε") == cls(r, {{"1", 2}, {"ε", 1}}));
  CHECK(parse_class(r, "3") == cls(r, {{"1", 3}}));
  CHECK(parse_class(r, "σ - 2σ") == cls(r, {{"σ", -1}}));
  CHECK(parse_class(r, "12") == cls(r, {{"1", 12}}));
  CHECK_THROWS_AS(parse_class(r, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(r, "σ σ"), std::invalid_argument);
  CHECK_THROWS_AS(parse_class(r, "2*τ"), std::invalid_argument);

  FusionRing p = builtin_ring("pointed:12");
  for (std::size_t i = 0; i < p.rank(); ++i) {
    K0Vector v = basis_vector(p, i);
    v[0] = -3;
    CHECK(parse_class(p, str(p, v)) == v);
  }
  CHECK(dual(p, cls(p, {{"g", 2}})) == cls(p, {{"g^11", 2}}));
}

TEST_CASE("Frobenius-Perron dimensions") {
  FusionRing ising = builtin_ring("ising");
  CHECK(fpdim(ising, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(fpdim(ising, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fpdim(builtin_ring("verp:7"), 1) == doctest::Approx(2 * std::cos(pi / 7)).epsilon(1e-12));
  CHECK(fpdim(builtin_ring("ty_z3"), 3) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  for (unsigned N = 3; N <= 12; ++N) {
    FusionRing r = builtin_ring("slq:" + std::to_string(N));
    CHECK(std::abs(fpdim(r, r.unit) - 1.0) < 1e-12);
    if (N > 3) CHECK(std::abs(fpdim(r, 1) - path_eigenvalue(N - 1)) < 1e-12);
    for (std::size_t i = 0; i < r.rank(); ++i) {
      double expect = std::sin((i + 1) * pi / N) / std::sin(pi / N);
      CHECK(std::abs(fpdim(r, i) - expect) < 1e-12);
      CHECK(fpdim(r, i) >= 1 - 1e-12);
    }
  }
  // FPdim is a ring homomorphism on nonnegative classes
  FusionRing r = builtin_ring("slq:9");
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j) {
      K0Vector ij = multiply(r, basis_vector(r, i), basis_vector(r, j));
      CHECK(std::abs(fpdim(r, ij) - fpdim(r, i) * fpdim(r, j)) < 1e-9);
    }
}

TEST_CASE("continuant sequences") {
  FusionRing ising = builtin_ring("ising");
  auto s = continuant_sequence(ising, basis_vector(ising, 2), 5);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == cls(ising, {{"1", 1}}));
  CHECK(s[1] == cls(ising, {{"σ", 1}}));
  CHECK(s[2] == cls(ising, {{"ε", 1}}));
  CHECK(is_zero(s[3]));
  CHECK(s[4] == cls(ising, {{"ε", -1}}));

  auto u = continuant_sequence(ising, basis_vector(ising, 0), 2);
  CHECK(u[1] == u[0]);
  CHECK(is_zero(u[2]));

  FusionRing ty = builtin_ring("ty_z3");
  auto t = continuant_sequence(ty, cls(ty, {{"X", 1}}), 5);
  CHECK(t[2] == cls(ty, {{"g", 1}, {"g^2", 1}}));
  CHECK(t[3] == cls(ty, {{"X", 1}}));
  CHECK(t[4] == cls(ty, {{"1", 1}}));
  CHECK(is_zero(t[5]));

  // the alternating factor matters for a non-self-dual object
  FusionRing p = builtin_ring("pointed:5");
  auto g = continuant_sequence(p, cls(p, {{"g", 1}}), 3);
  CHECK(g[2] == K0Vector(5, 0));
  CHECK(g[3] == cls(p, {{"g", -1}}));

  // slq:N, L1: E_m = L_m until it vanishes at m = N-1
  for (unsigned N = 4; N <= 10; ++N) {
    FusionRing r = builtin_ring("slq:" + std::to_string(N));
    auto e = continuant_sequence(r, basis_vector(r, 1), N - 1);
    for (unsigned m = 0; m + 1 < N; ++m) CHECK(e[m] == basis_vector(r, m));
    CHECK(is_zero(e[N - 1]));
  }
}

TEST_CASE("minimal bounds of named objects") {
  FusionRing ising = builtin_ring("ising");
  BoundReport b = minimal_bound(ising, std::size_t{2});
  CHECK(b.verdict == Verdict::StrictlyBounded);
  CHECK(b.N == 4);
  CHECK(b.summary() == "strictly 4-bounded; FPdim=1.414214");
  CHECK(b.divisibility);
  CHECK(b.invertible_certificate);
  CHECK(b.certificate == "[E_2] = ε");
  CHECK_FALSE(b.conjecture_relevant);

  BoundReport x = minimal_bound(builtin_ring("ty_z3"), std::size_t{3});
  CHECK(x.N == 6);
  CHECK(x.conjecture_relevant);
  CHECK(x.certificate == "[E_4] = 1");

  for (unsigned p : {3u, 5u, 7u}) CHECK(minimal_bound(builtin_ring("verp:" + std::to_string(p)), std::size_t{1}).N == p);
  for (unsigned N = 4; N <= 10; ++N) CHECK(minimal_bound(builtin_ring("slq:" + std::to_string(N)), std::size_t{1}).N == N);
  for (const auto& name : builtin_names()) {
    FusionRing r = builtin_ring(name);
    CHECK(minimal_bound(r, r.unit).N == 3);
  }

  FusionRing s4 = builtin_ring("slq:4");
  BoundReport two = minimal_bound(s4, cls(s4, {{"L0", 2}}));
  CHECK(two.verdict == Verdict::Unbounded);
  CHECK(two.fpdim == doctest::Approx(2.0));
  CHECK(minimal_bound(s4, K0Vector(3, 0)).N == 2);
  CHECK(minimal_bound(s4, cls(s4, {{"L1", 1}, {"L2", 1}})).verdict == Verdict::Unbounded);

  // small max_n leaves slq:12's generator undecided
  BoundReport inc = minimal_bound(builtin_ring("slq:12"), std::size_t{1}, 8);
  CHECK(inc.verdict == Verdict::Inconclusive);
  CHECK(inc.verdict_str() == "inconclusive up to n=8");
  CHECK_THROWS_AS(minimal_bound(s4, std::size_t{7}), std::out_of_range);
  CHECK_THROWS_AS(minimal_bound(s4, std::size_t{1}, 2), std::invalid_argument);

  auto j = to_json(ising, b);
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(j["N"] == 4);
  CHECK(j["sequence"][3] == "0");
}

TEST_CASE("classification tables") {
  auto Ns = [](const std::vector<BoundReport>& rs) {
    std::vector<unsigned> out;
    for (const auto& r : rs) out.push_back(r.verdict == Verdict::StrictlyBounded ? r.N : 0);
    return out;
  };
  CHECK(Ns(classify_all(builtin_ring("verp:5"))) == std::vector<unsigned>{3, 5, 5, 3});
  CHECK(Ns(classify_all(builtin_ring("ising"))) == std::vector<unsigned>{3, 3, 4});
  for (unsigned m = 1; m <= 6; ++m)
    CHECK(Ns(classify_all(builtin_ring("pointed:" + std::to_string(m)))) == std::vector<unsigned>(m, 3));
  // verp:7: L1 and L4 = L1 ⊗ L5 are 7-bounded, L2 and L3 unbounded
  CHECK(Ns(classify_all(builtin_ring("verp:7"))) == std::vector<unsigned>{3, 7, 0, 0, 7, 3});

  FusionRing ising = builtin_ring("ising");
  std::string table = classification_table(ising, classify_all(ising));
  CHECK(table.find("σ") != std::string::npos);
  CHECK(table.find("strictly 4-bounded; FPdim=1.414214") != std::string::npos);
}

TEST_CASE("classifier invariants over built-in rings") {
  int bounded = 0, unbounded = 0, products = 0;
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    FusionRing r = builtin_ring(name);
    auto reports = classify_all(r);
    for (std::size_t i = 0; i < r.rank(); ++i) {
      const BoundReport& b = reports[i];
      CHECK(b.verdict != Verdict::Inconclusive);
      if (b.verdict == Verdict::StrictlyBounded) {
        ++bounded;
        CHECK(b.divisibility);
        CHECK(b.invertible_certificate);
        CHECK(std::abs(b.fpdim - 2 * std::cos(pi / b.N)) < 1e-6);
        CHECK(b.zeros.front() == b.N - 1);
      } else {
        ++unbounded;
        CHECK(b.fpdim >= 2 - 1e-6);
      }
    }
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j) {
        if (reports[i].verdict != Verdict::StrictlyBounded || reports[j].verdict != Verdict::StrictlyBounded) continue;
        long total = 0;
        for (std::size_t k = 0; k < r.rank(); ++k) total += r.N[i][j][k];
        CHECK(total <= 3);
        ++products;
      }
    // composite nonnegative classes are never bounded
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = i; j < r.rank(); ++j) {
        K0Vector v = basis_vector(r, i);
        v[j] += 1;
        CHECK(minimal_bound(r, v).verdict == Verdict::Unbounded);
      }
  }
  CHECK(bounded > 0);
  CHECK(unbounded > 0);
  CHECK(products > 0);
}

TEST_CASE("Verlinde dimension formula") {
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned n : {1u, 2u}) {
      for (unsigned i = 0; i < n; ++i) {
        double m = std::pow(p, n - i);
        CHECK(std::abs(ver_fpdim(p, n, 1, i) - 2 * std::cos(pi / m)) < 1e-12);
        unsigned top = i + 1 < n ? p - 1 : p - 2;
        for (unsigned a = 2; a <= top; ++a) {
          if (i + 1 == n && a + 3 >= p) continue;
          CAPTURE(p);
          CAPTURE(a);
          CHECK(ver_fpdim(p, n, a, i) >= 2 - 1e-12);
        }
      }
      // the odd line has dimension 1
      CHECK(std::abs(ver_fpdim(p, n, p - 2, n - 1) - 1) < 1e-12);
    }
  // at n = 1 the formula is the FPdim of verp:p
  FusionRing r = builtin_ring("verp:7");
  for (unsigned a = 0; a < 6; ++a) CHECK(std::abs(ver_fpdim(7, 1, a, 0) - fpdim(r, a)) < 1e-12);
}

TEST_CASE("Galois sweep") {
  // independent brute force in long double
  using std::numbers::pi_v;
  std::vector<std::array<int, 3>> solutions;
  long double next = 1e9L;
  for (int M = 4; M <= 12; ++M)
    for (int N = 2; N <= 12; ++N)
      for (int j = 0; j <= 2 * N; ++j) {
        long double c = std::cos(pi_v<long double> / N);
        long double g = std::fabs(4 * c * c - 4 * std::cos(pi_v<long double> / M) - 2 * std::cos(j * pi_v<long double> / N));
        if (g < 1e-12L) solutions.push_back({M, N, j});
        else next = std::min(next, g);
      }
  GaloisGap g = min_galois_gap(4, 12, 2, 12);
  CHECK(g.gap < 1e-12);
  CHECK(g.M == 5);
  CHECK(g.N == 5);
  CHECK(g.j == 3);
  // the sweep is not empty: M = N = 5, j = 3 and its mirror j = 7 solve the equation
  CHECK(solutions == std::vector<std::array<int, 3>>{{5, 5, 3}, {5, 5, 7}});
  CHECK(static_cast<double>(next) == doctest::Approx(kGaloisNextGap).epsilon(1e-9));
  CHECK(min_galois_gap(6, 12, 2, 12).gap == doctest::Approx(kGaloisNextGap).epsilon(1e-9));

  // exactly, in Q(ζ10) with 2cos(kπ/5) = q^k + q^-k
  const Ring& F = construct_ring("cyclo:10");
  RingValue q = F.parse_element("q");
  auto two_cos = [&](long k) { return q.pow(k) + q.pow(-k); };
  CHECK((two_cos(1) * two_cos(1) - F.from_int(2) * two_cos(1) - two_cos(3)).is_zero());
}
