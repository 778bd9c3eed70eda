#pragma once

// Dense univariate polynomial helpers over an exact field. Coefficients are
// stored low-to-high with no trailing zeros; the zero polynomial is empty.
//
// The field policy F supplies:
//   T zero() const;  T one() const;  bool is_zero(const T&) const;  T inv(const T&) const;

#include <stdexcept>
#include <utility>
#include <vector>

namespace tlab::upoly {

template <class T, class F>
void trim(std::vector<T>& a, const F& f) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class T>
long degree(const std::vector<T>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class T, class F>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b, const F& f) {
  std::vector<T> r = a.size() >= b.size() ? a : b;
  const auto& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r, f);
  return r;
}

template <class T, class F>
std::vector<T> neg(const std::vector<T>& a, const F&) {
  std::vector<T> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(-c);
  return r;
}

template <class T, class F>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b, const F& f) {
  std::vector<T> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r, f);
  return r;
}

template <class T, class F>
std::vector<T> scale(const std::vector<T>& a, const T& c, const F& f) {
  if (f.is_zero(c)) return {};
  std::vector<T> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  trim(r, f);
  return r;
}

template <class T, class F>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, const F& f) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r, f);
  return r;
}

/// (quotient, remainder) of a by nonzero b.
template <class T, class F>
std::pair<std::vector<T>, std::vector<T>> divmod(std::vector<T> a, const std::vector<T>& b,
                                                 const F& f) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  const T lead_inv = f.inv(b.back());
  std::vector<T> q(a.size() - b.size() + 1, f.zero());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (f.is_zero(a[k])) continue;
    T c = a[k] * lead_inv;
    const std::size_t shift = k + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - c * b[j];
    if (k == 0) break;
  }
  a.resize(b.size() - 1, f.zero());
  trim(a, f);
  trim(q, f);
  return {std::move(q), std::move(a)};
}

template <class T, class F>
std::vector<T> monic(const std::vector<T>& a, const F& f) {
  if (a.empty()) return a;
  return scale(a, f.inv(a.back()), f);
}

/// Monic gcd; gcd(0, 0) = 0.
template <class T, class F>
std::vector<T> gcd(std::vector<T> a, std::vector<T> b, const F& f) {
  while (!b.empty()) {
    auto r = divmod(std::move(a), b, f).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, f);
}

/// s with s*a = 1 mod m, assuming gcd(a, m) = 1; throws otherwise.
template <class T, class F>
std::vector<T> inverse_mod(const std::vector<T>& a, const std::vector<T>& m, const F& f) {
  std::vector<T> r0 = m, r1 = divmod(a, m, f).second;
  std::vector<T> s0, s1{f.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, f);
    auto s = sub(s0, mul(q, s1, f), f);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::domain_error("not invertible modulo polynomial");
  return scale(s0, f.inv(r0[0]), f);
}

}  // namespace tlab::upoly
