#pragma once

// Continuant (Chebyshev) polynomials kappa_n(x), mu_n(x, y), nu_n(x, y) and the
// quantum numbers / binomials they induce on a triple.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlab/rings.hpp"

namespace tlab {

/// Polynomial in x, y with integer coefficients; univariate ones have no y.
class IntPolynomial {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (deg x, deg y)

  IntPolynomial() = default;
  static IntPolynomial constant(long c);
  static IntPolynomial x();
  static IntPolynomial y();
  static IntPolynomial monomial(unsigned dx, unsigned dy, const mpz_class& c);

  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(unsigned dx, unsigned dy = 0) const;
  /// Total degree in x (max over terms); -1 for zero.
  long degree_x() const;
  bool univariate() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial pow(unsigned e) const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  /// Exact quotient a / b (lex order, x before y); throws std::logic_error
  /// when b does not divide a.
  static IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

  /// p(x, x).
  IntPolynomial specialize_diagonal() const;
  /// p(y, x).
  IntPolynomial swap_xy() const;
  /// Coefficients reduced into [0, p), zero terms dropped.
  IntPolynomial mod(unsigned long p) const;

  RingValue evaluate(const RingValue& x, const RingValue& y) const;
  RingValue evaluate(const RingValue& x) const { return evaluate(x, x); }
  double evaluate(double x, double y) const;
  double evaluate(double x) const { return evaluate(x, x); }
  mpz_class evaluate(const mpz_class& x, const mpz_class& y) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  std::map<Monomial, mpz_class> terms_;
};

/// kappa_0 = 1, kappa_1 = x, kappa_{n+1} = x kappa_n - kappa_{n-1}.
const IntPolynomial& kappa(unsigned n);
/// Two-variable continuant: mu_{n+1} = z mu_n - mu_{n-1}, z = x for even n, y for odd n.
const IntPolynomial& mu(unsigned n);
/// Cyclotomic parts: mu_{m-1} = prod_{i | m} nu_{i-1}.
const IntPolynomial& nu(unsigned n);

/// ([n], [[n]]) on the triple; both zero for n = 0.
std::pair<RingValue, RingValue> qnum(const Triple& t, unsigned n);

struct QuantumTable {
  Triple triple;
  std::vector<RingValue> qnum;   // [0]..[n]
  std::vector<RingValue> qqnum;  // [[0]]..[[n]]
};
QuantumTable quantum_table(const Triple& t, unsigned n);

/// e_d = floor(n/d) - floor(i/d) - floor((n-i)/d) for d = 1..n (index d-1).
std::vector<int> qbinom_exponents(unsigned n, unsigned i);

/// Quantum binomial as prod_d [[d]]^{e_d}; requires 1 <= i <= n.
RingValue qbinom(const Triple& t, unsigned n, unsigned i);

/// [n][n-1]...[n-i+1] / ([i]...[1]) when every denominator is invertible.
std::optional<RingValue> qbinom_by_quotient(const Triple& t, unsigned n, unsigned i);

}  // namespace tlab
