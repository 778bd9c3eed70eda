#pragma once

// Exact coefficient rings: Q, F_p, cyclotomic fields Q(zeta_m) and fraction
// fields K(t) over any of these. Ring descriptors are interned and live for
// the whole program; values are immutable and cheap to copy.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tlab {

class Ring;
class RingValue;

/// Malformed ring specification or element expression.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values from different rings were combined.
class RingMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation needed the inverse of a non-unit.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RingKind { Rationals, PrimeField, Cyclotomic, FractionField };

/// Dense polynomial q^0..q^{phi(m)-1} with rational coefficients.
using CycloPoly = std::vector<mpq_class>;

/// num/den over the base field; den is monic and gcd(num, den) = 1.
struct RatFun {
  std::vector<RingValue> num;
  std::vector<RingValue> den;
};

class RingValue {
 public:
  using Payload = std::variant<mpq_class, std::uint64_t,
                               std::shared_ptr<const CycloPoly>,
                               std::shared_ptr<const RatFun>>;

  /// Detached placeholder; only valid as an assignment target.
  RingValue() = default;

  const Ring& ring() const;
  bool attached() const { return ring_ != nullptr; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;

  RingValue operator-() const;
  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue& operator+=(const RingValue& b) { return *this = *this + b; }
  RingValue& operator-=(const RingValue& b) { return *this = *this - b; }
  RingValue& operator*=(const RingValue& b) { return *this = *this * b; }

  /// Multiplicative inverse, or nullopt when none exists.
  std::optional<RingValue> inverse() const;
  /// a / b; throws NotInvertible when b has no inverse.
  friend RingValue operator/(const RingValue& a, const RingValue& b);
  /// Integer power; negative exponents need an inverse.
  RingValue pow(long e) const;

  friend bool operator==(const RingValue& a, const RingValue& b);
  friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

  /// Renders in the element grammar accepted by Ring::parse_element.
  std::string str() const;

 private:
  friend class Ring;
  RingValue(const Ring* r, Payload p) : ring_(r), payload_(std::move(p)) {}

  const Ring* ring_ = nullptr;
  Payload payload_;
};

class Ring {
 public:
  /// Builds (or fetches) the ring for a descriptor such as "Q", "Fp:5",
  /// "cyclo:10", "ratfun:Q" or "ratfun:ratfun:Q".
  static const Ring& construct(std::string_view spec);

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  RingKind kind() const { return kind_; }
  const std::string& spec() const { return spec_; }
  /// Prime of a prime field.
  std::uint64_t prime() const { return prime_; }
  /// m of Q(zeta_m).
  unsigned cyclotomic_order() const { return order_; }
  /// Phi_m, monic, low-to-high coefficients.
  const std::vector<mpq_class>& cyclotomic_modulus() const { return modulus_; }
  /// Base field of a fraction field.
  const Ring& base() const;
  /// Name of the distinguished generator ("q", "t", "u", ...); empty for Q/F_p.
  const std::string& variable() const { return variable_; }
  std::uint64_t characteristic() const;
  /// Every supported ring is a field.
  bool is_field() const { return true; }

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(long v) const;
  RingValue from_integer(const mpz_class& v) const;
  /// Throws NotInvertible when the denominator vanishes in the ring.
  RingValue from_rational(const mpq_class& v) const;
  /// q for cyclotomic fields, the adjoined variable for fraction fields.
  RingValue generator() const;
  /// Looks a generator name up anywhere in the tower and embeds it here.
  std::optional<RingValue> generator_named(std::string_view name) const;
  /// Embeds a value of this ring or of any ring below it in the tower.
  RingValue embed(const RingValue& v) const;
  /// Whether `other` is this ring or lies below it in the tower.
  bool contains(const Ring& other) const;

  /// Canonicalizes an arbitrary payload of the right alternative.
  RingValue make(RingValue::Payload p) const;

  /// Parses an expression in the element grammar.
  RingValue parse_element(std::string_view text) const;

 private:
  friend class RingValue;
  Ring() = default;
  static const Ring& build(std::string_view spec, int ratfun_depth);

  RingKind kind_ = RingKind::Rationals;
  std::string spec_;
  std::uint64_t prime_ = 0;
  unsigned order_ = 0;
  std::vector<mpq_class> modulus_;
  const Ring* base_ = nullptr;
  std::string variable_;
};

inline const Ring& construct_ring(std::string_view spec) { return Ring::construct(spec); }

/// (R, delta1, delta2): loop values for the two orientations.
struct Triple {
  const Ring* ring = nullptr;
  RingValue delta1;
  RingValue delta2;

  Triple() = default;
  Triple(const Ring& r, RingValue d1, RingValue d2);
  /// (R, delta2, delta1).
  Triple swapped() const { return Triple(*ring, delta2, delta1); }
  /// delta1 = delta2.
  bool balanced() const { return delta1 == delta2; }
  std::string str() const;

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.ring == b.ring && a.delta1 == b.delta1 && a.delta2 == b.delta2;
  }
};

/// Triple from element expressions, e.g. ("cyclo:10", "q+q^-1", "q+q^-1").
Triple make_triple(std::string_view ring_spec, std::string_view d1, std::string_view d2);

}  // namespace tlab
