#include "tlab/contpoly.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace tlab {

IntPolynomial IntPolynomial::constant(long c) { return monomial(0, 0, c); }
IntPolynomial IntPolynomial::x() { return monomial(1, 0, 1); }
IntPolynomial IntPolynomial::y() { return monomial(0, 1, 1); }

IntPolynomial IntPolynomial::monomial(unsigned dx, unsigned dy, const mpz_class& c) {
  IntPolynomial p;
  p.add_term({dx, dy}, c);
  return p;
}

void IntPolynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class IntPolynomial::coeff(unsigned dx, unsigned dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

long IntPolynomial::degree_x() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m.first);
  return d;
}

bool IntPolynomial::univariate() const {
  for (const auto& [m, c] : terms_)
    if (m.second) return false;
  return true;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r = constant(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::logic_error("polynomial division by zero");
  // std::map orders (dx, dy) lexicographically, so rbegin() is the lex leading term.
  const auto& [lm, lc] = *b.terms_.rbegin();
  IntPolynomial q, r = a;
  while (!r.is_zero()) {
    const auto [rm, rc] = *r.terms_.rbegin();
    if (rm.first < lm.first || rm.second < lm.second || rc % lc != 0)
      throw std::logic_error("inexact polynomial division");
    IntPolynomial t = monomial(rm.first - lm.first, rm.second - lm.second, rc / lc);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

IntPolynomial IntPolynomial::specialize_diagonal() const {
  IntPolynomial r;
  for (const auto& [m, c] : terms_) r.add_term({m.first + m.second, 0}, c);
  return r;
}

IntPolynomial IntPolynomial::swap_xy() const {
  IntPolynomial r;
  for (const auto& [m, c] : terms_) r.add_term({m.second, m.first}, c);
  return r;
}

IntPolynomial IntPolynomial::mod(unsigned long p) const {
  IntPolynomial r;
  mpz_class pp(p);
  for (const auto& [m, c] : terms_) {
    mpz_class v;
    mpz_fdiv_r(v.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    r.add_term(m, v);
  }
  return r;
}

RingValue IntPolynomial::evaluate(const RingValue& x, const RingValue& y) const {
  const Ring& r = x.ring();
  RingValue acc = r.zero();
  std::map<unsigned, RingValue> xp, yp;
  auto power = [](std::map<unsigned, RingValue>& cache, const RingValue& v, unsigned e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    RingValue p = v.pow(e);
    cache.emplace(e, p);
    return p;
  };
  for (const auto& [m, c] : terms_)
    acc = acc + r.from_integer(c) * power(xp, x, m.first) * power(yp, y, m.second);
  return acc;
}

double IntPolynomial::evaluate(double x, double y) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) acc += c.get_d() * std::pow(x, m.first) * std::pow(y, m.second);
  return acc;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x, const mpz_class& y) const {
  mpz_class acc = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class px, py;
    mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), m.first);
    mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), m.second);
    acc += c * px * py;
  }
  return acc;
}

std::string IntPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    auto var = [&](const char* v, unsigned e) {
      if (!e) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("x", m.first);
    var("y", m.second);
    mpz_class a = abs(c);
    std::string term = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

namespace {

// Sequences grow on demand; deque keeps references stable.
struct Tables {
  std::mutex mu;
  std::deque<IntPolynomial> kappa, mu_, nu;
};

Tables& tables() {
  static Tables t;
  return t;
}

}  // namespace

const IntPolynomial& kappa(unsigned n) {
  auto& t = tables();
  std::lock_guard lock(t.mu);
  if (t.kappa.empty()) {
    t.kappa.push_back(IntPolynomial::constant(1));
    t.kappa.push_back(IntPolynomial::x());
  }
  while (t.kappa.size() <= n) {
    std::size_t k = t.kappa.size();
    t.kappa.push_back(IntPolynomial::x() * t.kappa[k - 1] - t.kappa[k - 2]);
  }
  return t.kappa[n];
}

namespace {

const IntPolynomial& mu_locked(Tables& t, unsigned n) {
  if (t.mu_.empty()) {
    t.mu_.push_back(IntPolynomial::constant(1));
    t.mu_.push_back(IntPolynomial::x());
  }
  while (t.mu_.size() <= n) {
    std::size_t k = t.mu_.size();  // computing mu_k from mu_{k-1}, mu_{k-2}
    IntPolynomial z = (k - 1) % 2 == 0 ? IntPolynomial::x() : IntPolynomial::y();
    t.mu_.push_back(z * t.mu_[k - 1] - t.mu_[k - 2]);
  }
  return t.mu_[n];
}

}  // namespace

const IntPolynomial& mu(unsigned n) {
  auto& t = tables();
  std::lock_guard lock(t.mu);
  return mu_locked(t, n);
}

const IntPolynomial& nu(unsigned n) {
  auto& t = tables();
  std::lock_guard lock(t.mu);
  while (t.nu.size() <= n) {
    unsigned m = static_cast<unsigned>(t.nu.size()) + 1;  // nu_{m-1}
    IntPolynomial rest = mu_locked(t, m - 1);
    for (unsigned i = 1; i < m; ++i)
      if (m % i == 0) rest = IntPolynomial::exact_div(rest, t.nu[i - 1]);
    t.nu.push_back(std::move(rest));
  }
  return t.nu[n];
}

std::pair<RingValue, RingValue> qnum(const Triple& t, unsigned n) {
  if (n == 0) return {t.ring->zero(), t.ring->zero()};
  return {mu(n - 1).evaluate(t.delta1, t.delta2), nu(n - 1).evaluate(t.delta1, t.delta2)};
}

QuantumTable quantum_table(const Triple& t, unsigned n) {
  QuantumTable tab{t, {}, {}};
  for (unsigned k = 0; k <= n; ++k) {
    auto [a, b] = qnum(t, k);
    tab.qnum.push_back(a);
    tab.qqnum.push_back(b);
  }
  return tab;
}

std::vector<int> qbinom_exponents(unsigned n, unsigned i) {
  if (i > n) throw std::out_of_range("qbinom: i > n");
  std::vector<int> e;
  for (unsigned d = 1; d <= n; ++d) e.push_back(static_cast<int>(n / d - i / d - (n - i) / d));
  return e;
}

RingValue qbinom(const Triple& t, unsigned n, unsigned i) {
  if (i < 1 || i > n) throw std::out_of_range("qbinom needs 1 <= i <= n");
  auto e = qbinom_exponents(n, i);
  RingValue r = t.ring->one();
  for (unsigned d = 1; d <= n; ++d)
    if (e[d - 1]) r = r * qnum(t, d).second.pow(e[d - 1]);
  return r;
}

std::optional<RingValue> qbinom_by_quotient(const Triple& t, unsigned n, unsigned i) {
  if (i < 1 || i > n) throw std::out_of_range("qbinom needs 1 <= i <= n");
  RingValue num = t.ring->one(), den = t.ring->one();
  for (unsigned k = 0; k < i; ++k) {
    num = num * qnum(t, n - k).first;
    den = den * qnum(t, k + 1).first;
  }
  auto inv = den.inverse();
  if (!inv) return std::nullopt;
  return num * *inv;
}

}  // namespace tlab
