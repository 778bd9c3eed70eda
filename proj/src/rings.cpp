#include "tlab/rings.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "tlab/upoly.hpp"

namespace tlab {

namespace {

struct MpqField {
  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
  mpq_class inv(const mpq_class& a) const { return 1 / a; }
};

struct ValueField {
  const Ring* r;
  RingValue zero() const { return r->zero(); }
  RingValue one() const { return r->one(); }
  bool is_zero(const RingValue& a) const { return a.is_zero(); }
  RingValue inv(const RingValue& a) const {
    auto v = a.inverse();
    if (!v) throw NotInvertible("division by zero in " + r->spec());
    return *v;
  }
};

using Poly = std::vector<RingValue>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t p) {
  mpz_class m(std::to_string(p)), r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return std::stoull(r.get_str());
}

std::string variable_name(int depth) {
  static const char* names[] = {"t", "u", "v", "w", "s"};
  if (depth < 5) return names[depth];
  throw ParseError("fraction-field tower too deep");
}

std::vector<mpq_class> cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, std::vector<mpq_class>> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  MpqField f;
  std::vector<mpq_class> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    auto [q, r] = upoly::divmod(p, cyclotomic_polynomial(d), f);
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::lock_guard lock(mu);
  cache.emplace(m, p);
  return p;
}

bool is_atomic(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '^' || c == '*' || c == '/'))
      return false;
  }
  return true;
}

// Renders sum c_i var^i from high to low degree; coeffs are already rendered.
std::string render_poly(const std::vector<std::string>& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const std::string& c = coeffs[k];
    if (c.empty() || c == "0") continue;
    std::string term;
    if (k == 0) {
      term = is_atomic(c) ? c : "(" + c + ")";
    } else {
      std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (c == "1") term = mono;
      else if (c == "-1") term = "-" + mono;
      else if (is_atomic(c)) term = c + "*" + mono;
      else term = "(" + c + ")*" + mono;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// ---------------------------------------------------------------- Ring

const Ring& Ring::construct(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return build(s, 0);
}

const Ring& Ring::build(std::string_view spec, int depth) {
  static std::map<std::pair<std::string, int>, std::unique_ptr<Ring>> registry;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  std::string key(spec);
  if (auto it = registry.find({key, depth}); it != registry.end()) return *it->second;

  auto parse_uint = [&](std::string_view digits) -> mpz_class {
    if (digits.empty()) throw ParseError("missing integer in ring spec '" + key + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad integer in ring spec '" + key + "'");
    return mpz_class(std::string(digits));
  };

  std::unique_ptr<Ring> r(new Ring());
  r->spec_ = key;
  if (key == "Q") {
    r->kind_ = RingKind::Rationals;
  } else if (key.rfind("Fp:", 0) == 0) {
    mpz_class p = parse_uint(std::string_view(key).substr(3));
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
      throw ParseError("Fp modulus " + p.get_str() + " is not prime");
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62) throw ParseError("Fp modulus too large");
    r->kind_ = RingKind::PrimeField;
    r->prime_ = std::stoull(p.get_str());
  } else if (key.rfind("cyclo:", 0) == 0) {
    mpz_class m = parse_uint(std::string_view(key).substr(6));
    if (m == 0) throw ParseError("cyclotomic order must be positive");
    if (m > 10000) throw ParseError("cyclotomic order too large");
    r->kind_ = RingKind::Cyclotomic;
    r->order_ = static_cast<unsigned>(m.get_ui());
    r->modulus_ = cyclotomic_polynomial(r->order_);
    r->variable_ = "q";
  } else if (key.rfind("ratfun:", 0) == 0) {
    r->kind_ = RingKind::FractionField;
    r->base_ = &build(std::string_view(key).substr(7), depth + 1);
    r->variable_ = variable_name(depth);
  } else {
    throw ParseError("unknown ring spec '" + key + "'");
  }
  auto& slot = registry[{key, depth}];
  slot = std::move(r);
  return *slot;
}

const Ring& Ring::base() const {
  if (!base_) throw std::logic_error(spec_ + " has no base field");
  return *base_;
}

std::uint64_t Ring::characteristic() const {
  switch (kind_) {
    case RingKind::PrimeField: return prime_;
    case RingKind::FractionField: return base_->characteristic();
    default: return 0;
  }
}

RingValue Ring::zero() const { return from_int(0); }
RingValue Ring::one() const { return from_int(1); }
RingValue Ring::from_int(long v) const { return from_integer(mpz_class(v)); }
RingValue Ring::from_integer(const mpz_class& v) const { return from_rational(mpq_class(v)); }

RingValue Ring::from_rational(const mpq_class& v) const {
  switch (kind_) {
    case RingKind::Rationals: {
      mpq_class c = v;
      c.canonicalize();
      return RingValue(this, std::move(c));
    }
    case RingKind::PrimeField: {
      std::uint64_t den = mpz_mod_u64(v.get_den(), prime_);
      if (den == 0) throw NotInvertible("denominator vanishes in " + spec_);
      std::uint64_t num = mpz_mod_u64(v.get_num(), prime_);
      return RingValue(this, mulmod(num, powmod(den, prime_ - 2, prime_), prime_));
    }
    case RingKind::Cyclotomic: {
      auto p = std::make_shared<CycloPoly>();
      if (sgn(v) != 0) p->push_back(v);
      if (!p->empty()) p->back().canonicalize();
      return RingValue(this, std::shared_ptr<const CycloPoly>(std::move(p)));
    }
    case RingKind::FractionField: {
      auto rf = std::make_shared<RatFun>();
      RingValue c = base_->from_rational(v);
      if (!c.is_zero()) rf->num.push_back(c);
      rf->den.push_back(base_->one());
      return RingValue(this, std::shared_ptr<const RatFun>(std::move(rf)));
    }
  }
  throw std::logic_error("unreachable");
}

RingValue Ring::generator() const {
  switch (kind_) {
    case RingKind::Cyclotomic: {
      CycloPoly p{0, 1};
      return make(std::make_shared<const CycloPoly>(std::move(p)));
    }
    case RingKind::FractionField: {
      auto rf = std::make_shared<RatFun>();
      rf->num = {base_->zero(), base_->one()};
      rf->den = {base_->one()};
      return RingValue(this, std::shared_ptr<const RatFun>(std::move(rf)));
    }
    default: throw std::logic_error(spec_ + " has no generator");
  }
}

std::optional<RingValue> Ring::generator_named(std::string_view name) const {
  if (!variable_.empty() && name == variable_) return generator();
  if (kind_ == RingKind::FractionField) {
    if (auto v = base_->generator_named(name)) return embed(*v);
  }
  return std::nullopt;
}

bool Ring::contains(const Ring& other) const {
  if (&other == this) return true;
  if (other.kind_ == RingKind::Rationals && characteristic() == 0) return true;
  return kind_ == RingKind::FractionField && base_->contains(other);
}

RingValue Ring::embed(const RingValue& v) const {
  const Ring& src = v.ring();
  if (&src == this) return v;
  if (src.kind_ == RingKind::Rationals && characteristic() == 0)
    return from_rational(std::get<mpq_class>(v.payload()));
  if (kind_ == RingKind::FractionField && base_->contains(src)) {
    RingValue c = base_->embed(v);
    auto rf = std::make_shared<RatFun>();
    if (!c.is_zero()) rf->num.push_back(c);
    rf->den.push_back(base_->one());
    return RingValue(this, std::shared_ptr<const RatFun>(std::move(rf)));
  }
  throw RingMismatch("cannot embed " + src.spec() + " into " + spec_);
}

RingValue Ring::make(RingValue::Payload p) const {
  switch (kind_) {
    case RingKind::Rationals:
      if (!std::holds_alternative<mpq_class>(p)) throw RingMismatch("payload kind");
      std::get<mpq_class>(p).canonicalize();
      return RingValue(this, std::move(p));
    case RingKind::PrimeField:
      if (!std::holds_alternative<std::uint64_t>(p)) throw RingMismatch("payload kind");
      return RingValue(this, std::get<std::uint64_t>(p) % prime_);
    case RingKind::Cyclotomic: {
      if (!std::holds_alternative<std::shared_ptr<const CycloPoly>>(p))
        throw RingMismatch("payload kind");
      MpqField f;
      CycloPoly a = *std::get<std::shared_ptr<const CycloPoly>>(p);
      for (auto& c : a) c.canonicalize();
      upoly::trim(a, f);
      if (a.size() >= modulus_.size()) a = upoly::divmod(std::move(a), modulus_, f).second;
      return RingValue(this, std::make_shared<const CycloPoly>(std::move(a)));
    }
    case RingKind::FractionField: {
      if (!std::holds_alternative<std::shared_ptr<const RatFun>>(p))
        throw RingMismatch("payload kind");
      const RatFun& in = *std::get<std::shared_ptr<const RatFun>>(p);
      ValueField f{base_};
      Poly num = in.num, den = in.den;
      for (const auto& c : num)
        if (&c.ring() != base_) throw RingMismatch("ratfun coefficient ring");
      for (const auto& c : den)
        if (&c.ring() != base_) throw RingMismatch("ratfun coefficient ring");
      upoly::trim(num, f);
      upoly::trim(den, f);
      if (den.empty()) throw NotInvertible("zero denominator in " + spec_);
      auto rf = std::make_shared<RatFun>();
      if (num.empty()) {
        rf->den = {base_->one()};
      } else {
        if (den.size() > 1) {
          Poly g = upoly::gcd(num, den, f);
          if (g.size() > 1) {
            num = upoly::divmod(std::move(num), g, f).first;
            den = upoly::divmod(std::move(den), g, f).first;
          }
        }
        if (!den.back().is_one()) {
          RingValue li = f.inv(den.back());
          num = upoly::scale(num, li, f);
          den = upoly::scale(den, li, f);
        }
        rf->num = std::move(num);
        rf->den = std::move(den);
      }
      return RingValue(this, std::shared_ptr<const RatFun>(std::move(rf)));
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------- parsing

namespace {

class ElementParser {
 public:
  ElementParser(const Ring& r, std::string_view s) : r_(r), s_(s) {}

  RingValue run() {
    RingValue v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' in " + r_.spec() + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  RingValue expr() {
    RingValue v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  RingValue term() {
    RingValue v = unary();
    for (;;) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) v = v / unary();
      else if (starts_atom()) v = v * power();  // implicit product, e.g. "2q" or "tu"
      else return v;
    }
  }
  RingValue unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RingValue power() {
    RingValue base = atom();
    if (!eat('^')) return base;
    bool paren = eat('(');
    bool negative = eat('-');
    if (!negative) eat('+');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return base.pow(negative ? -e : e);
  }
  RingValue atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RingValue v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return r_.from_integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      auto g = r_.generator_named(std::string_view(&c, 1));
      if (!g) fail("unknown generator '" + std::string(1, c) + "'");
      return *g;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& r_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingValue Ring::parse_element(std::string_view text) const {
  return ElementParser(*this, text).run();
}

// ---------------------------------------------------------------- RingValue

const Ring& RingValue::ring() const {
  if (!ring_) throw std::logic_error("detached ring value");
  return *ring_;
}

bool RingValue::is_zero() const {
  switch (ring().kind()) {
    case RingKind::Rationals: return sgn(std::get<mpq_class>(payload_)) == 0;
    case RingKind::PrimeField: return std::get<std::uint64_t>(payload_) == 0;
    case RingKind::Cyclotomic: return std::get<std::shared_ptr<const CycloPoly>>(payload_)->empty();
    case RingKind::FractionField: return std::get<std::shared_ptr<const RatFun>>(payload_)->num.empty();
  }
  return false;
}

bool RingValue::is_one() const {
  switch (ring().kind()) {
    case RingKind::Rationals: return std::get<mpq_class>(payload_) == 1;
    case RingKind::PrimeField: return std::get<std::uint64_t>(payload_) == 1;
    case RingKind::Cyclotomic: {
      const auto& p = *std::get<std::shared_ptr<const CycloPoly>>(payload_);
      return p.size() == 1 && p[0] == 1;
    }
    case RingKind::FractionField: {
      const auto& rf = *std::get<std::shared_ptr<const RatFun>>(payload_);
      return rf.num.size() == 1 && rf.den.size() == 1 && rf.num[0].is_one();
    }
  }
  return false;
}

namespace {

void check_same(const RingValue& a, const RingValue& b) {
  if (&a.ring() != &b.ring())
    throw RingMismatch("mixing " + a.ring().spec() + " and " + b.ring().spec());
}

const RatFun& rf_of(const RingValue& v) { return *std::get<std::shared_ptr<const RatFun>>(v.payload()); }
const CycloPoly& cp_of(const RingValue& v) { return *std::get<std::shared_ptr<const CycloPoly>>(v.payload()); }

bool is_unit_poly(const Poly& p) { return p.size() == 1 && p[0].is_one(); }

}  // namespace

RingValue RingValue::operator-() const {
  const Ring& r = ring();
  switch (r.kind()) {
    case RingKind::Rationals: return RingValue(ring_, mpq_class(-std::get<mpq_class>(payload_)));
    case RingKind::PrimeField: {
      std::uint64_t v = std::get<std::uint64_t>(payload_);
      return RingValue(ring_, v == 0 ? v : r.prime() - v);
    }
    case RingKind::Cyclotomic: {
      MpqField f;
      return RingValue(ring_, std::make_shared<const CycloPoly>(upoly::neg(cp_of(*this), f)));
    }
    case RingKind::FractionField: {
      const RatFun& a = rf_of(*this);
      auto rf = std::make_shared<RatFun>();
      rf->num = upoly::neg(a.num, ValueField{&r.base()});
      rf->den = a.den;
      return RingValue(ring_, std::shared_ptr<const RatFun>(std::move(rf)));
    }
  }
  throw std::logic_error("unreachable");
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  check_same(a, b);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Rationals:
      return RingValue(&r, mpq_class(std::get<mpq_class>(a.payload_) + std::get<mpq_class>(b.payload_)));
    case RingKind::PrimeField: {
      std::uint64_t s = std::get<std::uint64_t>(a.payload_) + std::get<std::uint64_t>(b.payload_);
      if (s >= r.prime()) s -= r.prime();
      return RingValue(&r, s);
    }
    case RingKind::Cyclotomic: {
      MpqField f;
      return RingValue(&r, std::make_shared<const CycloPoly>(upoly::add(cp_of(a), cp_of(b), f)));
    }
    case RingKind::FractionField: {
      if (a.is_zero()) return b;
      if (b.is_zero()) return a;
      const RatFun& x = rf_of(a);
      const RatFun& y = rf_of(b);
      ValueField f{&r.base()};
      auto rf = std::make_shared<RatFun>();
      if (x.den == y.den) {
        rf->num = upoly::add(x.num, y.num, f);
        rf->den = x.den;
        if (is_unit_poly(x.den)) return RingValue(&r, std::shared_ptr<const RatFun>(std::move(rf)));
      } else {
        rf->num = upoly::add(upoly::mul(x.num, y.den, f), upoly::mul(y.num, x.den, f), f);
        rf->den = upoly::mul(x.den, y.den, f);
      }
      return r.make(std::shared_ptr<const RatFun>(std::move(rf)));
    }
  }
  throw std::logic_error("unreachable");
}

RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

RingValue operator*(const RingValue& a, const RingValue& b) {
  check_same(a, b);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Rationals:
      return RingValue(&r, mpq_class(std::get<mpq_class>(a.payload_) * std::get<mpq_class>(b.payload_)));
    case RingKind::PrimeField:
      return RingValue(&r, mulmod(std::get<std::uint64_t>(a.payload_), std::get<std::uint64_t>(b.payload_),
                                  r.prime()));
    case RingKind::Cyclotomic: {
      MpqField f;
      auto p = upoly::mul(cp_of(a), cp_of(b), f);
      if (p.size() >= r.cyclotomic_modulus().size())
        p = upoly::divmod(std::move(p), r.cyclotomic_modulus(), f).second;
      return RingValue(&r, std::make_shared<const CycloPoly>(std::move(p)));
    }
    case RingKind::FractionField: {
      if (a.is_zero()) return a;
      if (b.is_zero()) return b;
      if (a.is_one()) return b;
      if (b.is_one()) return a;
      const RatFun& x = rf_of(a);
      const RatFun& y = rf_of(b);
      ValueField f{&r.base()};
      // cross-cancel: gcd(x.num, y.den) and gcd(y.num, x.den)
      Poly xn = x.num, yn = y.num, xd = x.den, yd = y.den;
      if (yd.size() > 1 && xn.size() > 1) {
        Poly g = upoly::gcd(xn, yd, f);
        if (g.size() > 1) {
          xn = upoly::divmod(std::move(xn), g, f).first;
          yd = upoly::divmod(std::move(yd), g, f).first;
        }
      }
      if (xd.size() > 1 && yn.size() > 1) {
        Poly g = upoly::gcd(yn, xd, f);
        if (g.size() > 1) {
          yn = upoly::divmod(std::move(yn), g, f).first;
          xd = upoly::divmod(std::move(xd), g, f).first;
        }
      }
      auto rf = std::make_shared<RatFun>();
      rf->num = upoly::mul(xn, yn, f);
      rf->den = upoly::mul(xd, yd, f);
      if (!rf->den.back().is_one()) {
        RingValue li = f.inv(rf->den.back());
        rf->num = upoly::scale(rf->num, li, f);
        rf->den = upoly::scale(rf->den, li, f);
      }
      return RingValue(&r, std::shared_ptr<const RatFun>(std::move(rf)));
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<RingValue> RingValue::inverse() const {
  if (is_zero()) return std::nullopt;
  const Ring& r = ring();
  switch (r.kind()) {
    case RingKind::Rationals: return RingValue(ring_, mpq_class(1 / std::get<mpq_class>(payload_)));
    case RingKind::PrimeField:
      return RingValue(ring_, powmod(std::get<std::uint64_t>(payload_), r.prime() - 2, r.prime()));
    case RingKind::Cyclotomic: {
      MpqField f;
      return RingValue(ring_, std::make_shared<const CycloPoly>(
                                  upoly::inverse_mod(cp_of(*this), r.cyclotomic_modulus(), f)));
    }
    case RingKind::FractionField: {
      const RatFun& x = rf_of(*this);
      ValueField f{&r.base()};
      auto rf = std::make_shared<RatFun>();
      RingValue li = f.inv(x.num.back());
      rf->num = upoly::scale(x.den, li, f);
      rf->den = upoly::scale(x.num, li, f);
      return RingValue(ring_, std::shared_ptr<const RatFun>(std::move(rf)));
    }
  }
  return std::nullopt;
}

RingValue operator/(const RingValue& a, const RingValue& b) {
  check_same(a, b);
  auto inv = b.inverse();
  if (!inv) throw NotInvertible("division by zero in " + a.ring().spec());
  return a * *inv;
}

RingValue RingValue::pow(long e) const {
  RingValue base = *this;
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw NotInvertible("negative power of zero in " + ring().spec());
    base = *inv;
    e = -e;
  }
  RingValue r = ring().one();
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const RingValue& a, const RingValue& b) {
  if (a.ring_ != b.ring_) return false;
  if (!a.ring_) return true;
  switch (a.ring_->kind()) {
    case RingKind::Rationals: return std::get<mpq_class>(a.payload_) == std::get<mpq_class>(b.payload_);
    case RingKind::PrimeField: return std::get<std::uint64_t>(a.payload_) == std::get<std::uint64_t>(b.payload_);
    case RingKind::Cyclotomic: return cp_of(a) == cp_of(b);
    case RingKind::FractionField: {
      const RatFun& x = rf_of(a);
      const RatFun& y = rf_of(b);
      return x.num == y.num && x.den == y.den;
    }
  }
  return false;
}

std::string RingValue::str() const {
  const Ring& r = ring();
  switch (r.kind()) {
    case RingKind::Rationals: return std::get<mpq_class>(payload_).get_str();
    case RingKind::PrimeField: return std::to_string(std::get<std::uint64_t>(payload_));
    case RingKind::Cyclotomic: {
      std::vector<std::string> cs;
      for (const auto& c : cp_of(*this)) cs.push_back(c.get_str());
      return render_poly(cs, r.variable());
    }
    case RingKind::FractionField: {
      const RatFun& x = rf_of(*this);
      std::vector<std::string> ns, ds;
      for (const auto& c : x.num) ns.push_back(c.is_zero() ? "0" : c.str());
      for (const auto& c : x.den) ds.push_back(c.is_zero() ? "0" : c.str());
      std::string n = render_poly(ns, r.variable());
      if (is_unit_poly(x.den)) return n;
      std::string d = render_poly(ds, r.variable());
      if (!is_atomic(n)) n = "(" + n + ")";
      if (!is_atomic(d) || d.find_first_of("*/") != std::string::npos) d = "(" + d + ")";
      return n + "/" + d;
    }
  }
  return "?";
}

// ---------------------------------------------------------------- Triple

Triple::Triple(const Ring& r, RingValue d1, RingValue d2)
    : ring(&r), delta1(r.embed(d1)), delta2(r.embed(d2)) {}

std::string Triple::str() const {
  return "(" + ring->spec() + ", " + delta1.str() + ", " + delta2.str() + ")";
}

Triple make_triple(std::string_view ring_spec, std::string_view d1, std::string_view d2) {
  const Ring& r = Ring::construct(ring_spec);
  return Triple(r, r.parse_element(d1), r.parse_element(d2));
}

}  // namespace tlab
