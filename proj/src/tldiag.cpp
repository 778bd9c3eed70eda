#include "tlab/tldiag.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tlab/contpoly.hpp"
#include "tlab/linalg.hpp"

namespace tlab {

// ---------------------------------------------------------------- words

Word dual(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& a : r) a = dual(a);
  return r;
}

Word alt(unsigned n) {
  Word w(n);
  for (unsigned k = 0; k < n; ++k) w[k] = (n - k) % 2 ? Letter::Up : Letter::Down;
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "∅";
  std::string s;
  for (Letter a : w) s += a == Letter::Up ? "∧" : "∨";
  return s;
}

Word parse_word(std::string_view s) {
  Word w;
  if (s == "∅" || s == "1") return w;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.substr(i, 3) == "∧") {
      w.push_back(Letter::Up);
      i += 3;
    } else if (s.substr(i, 3) == "∨") {
      w.push_back(Letter::Down);
      i += 3;
    } else if (s[i] == '^' || s[i] == 'u' || s[i] == 'U') {
      w.push_back(Letter::Up);
      ++i;
    } else if (s[i] == 'v' || s[i] == 'd' || s[i] == 'D') {
      w.push_back(Letter::Down);
      ++i;
    } else {
      throw std::invalid_argument("bad letter in word '" + std::string(s) + "'");
    }
  }
  return w;
}

// ---------------------------------------------------------------- diagrams

namespace {

Letter letter_at(const Word& src, const Word& tgt, std::size_t i) {
  return i < src.size() ? src[i] : tgt[i - src.size()];
}

bool legal_pair(const Word& src, const Word& tgt, std::size_t i, std::size_t j) {
  bool same_side = (i < src.size()) == (j < src.size());
  bool same_letter = letter_at(src, tgt, i) == letter_at(src, tgt, j);
  return same_side != same_letter;
}

// Position on the boundary circle: source left to right, then target right to left.
std::size_t circle_pos(std::size_t s, std::size_t t, std::size_t i) {
  return i < s ? i : s + (t - 1 - (i - s));
}

}  // namespace

Diagram::Diagram(Word source, Word target, Partner partner)
    : source_(std::move(source)), target_(std::move(target)), partner_(std::move(partner)) {
  const std::size_t s = source_.size(), t = target_.size(), n = s + t;
  if (partner_.size() != n) throw std::invalid_argument("diagram: partner array has wrong length");
  if (n > 250) throw std::invalid_argument("diagram too large");
  std::vector<std::size_t> at_circle(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = partner_[i];
    if (j >= n || j == i || partner_[j] != i) throw std::invalid_argument("diagram: not a perfect matching");
    if (!legal_pair(source_, target_, i, j))
      throw std::invalid_argument("diagram: pair joins incompatible letters");
    at_circle[circle_pos(s, t, i)] = i;
  }
  std::vector<std::size_t> open;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t i = at_circle[c];
    std::size_t pc = circle_pos(s, t, partner_[i]);
    if (pc > c) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != partner_[i]) throw std::invalid_argument("diagram: strands cross");
      open.pop_back();
    }
  }
}

Diagram Diagram::from_pairs(Word source, Word target, const std::vector<std::pair<End, End>>& pairs) {
  const std::size_t s = source.size();
  Partner p(s + target.size(), 0xff);
  auto g = [&](End e) { return e.top ? s + e.index : e.index; };
  for (const auto& [a, b] : pairs) {
    std::size_t i = g(a), j = g(b);
    if (i >= p.size() || j >= p.size()) throw std::invalid_argument("diagram: endpoint out of range");
    p[i] = static_cast<std::uint8_t>(j);
    p[j] = static_cast<std::uint8_t>(i);
  }
  return Diagram(std::move(source), std::move(target), std::move(p));
}

Diagram Diagram::identity(const Word& w) {
  const std::size_t n = w.size();
  Partner p(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = static_cast<std::uint8_t>(n + i);
    p[n + i] = static_cast<std::uint8_t>(i);
  }
  return Diagram(w, w, std::move(p));
}

Diagram Diagram::generator(unsigned n, unsigned i) {
  if (i < 1 || i >= n) throw std::out_of_range("e_i needs 1 <= i < n");
  Word w = alt(n);
  const unsigned l = n - i - 1;
  Partner p(2 * n);
  for (unsigned k = 0; k < n; ++k) {
    if (k == l || k == l + 1) continue;
    p[k] = static_cast<std::uint8_t>(n + k);
    p[n + k] = static_cast<std::uint8_t>(k);
  }
  p[l] = static_cast<std::uint8_t>(l + 1);
  p[l + 1] = static_cast<std::uint8_t>(l);
  p[n + l] = static_cast<std::uint8_t>(n + l + 1);
  p[n + l + 1] = static_cast<std::uint8_t>(n + l);
  return Diagram(w, w, std::move(p));
}

bool Diagram::is_identity() const {
  if (source_ != target_) return false;
  const std::size_t n = source_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (partner_[i] != n + i) return false;
  return true;
}

std::pair<unsigned, unsigned> Diagram::source_caps() const {
  unsigned ccw = 0, cw = 0;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    std::size_t j = partner_[i];
    if (j > i && j < source_.size()) (source_[i] == Letter::Down ? ccw : cw)++;
  }
  return {ccw, cw};
}

std::pair<unsigned, unsigned> Diagram::turning_arcs() const {
  const std::size_t s = source_.size();
  unsigned ccw = 0, cw = 0;
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    std::size_t j = partner_[i];
    if (j <= i || (i < s) != (j < s)) continue;
    (letter_at(source_, target_, i) == Letter::Down ? ccw : cw)++;
  }
  return {ccw, cw};
}

unsigned Diagram::through_strands() const {
  unsigned k = 0;
  for (std::size_t i = 0; i < source_.size(); ++i)
    if (partner_[i] >= source_.size()) ++k;
  return k;
}

std::string Diagram::str() const {
  const std::size_t s = source_.size();
  auto end = [&](std::size_t i) {
    return i < s ? "b:" + std::to_string(i) : "t:" + std::to_string(i - s);
  };
  std::string out = "[";
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    if (partner_[i] < i) continue;
    if (out.size() > 1) out += ", ";
    out += "(" + end(i) + ", " + end(partner_[i]) + ")";
  }
  return out + "]";
}

std::vector<Diagram> enumerate_basis(const Word& source, const Word& target) {
  const std::size_t s = source.size(), t = target.size(), n = s + t;
  std::vector<Diagram> out;
  if (n % 2) return out;
  std::vector<std::size_t> at_circle(n);
  for (std::size_t i = 0; i < n; ++i) at_circle[circle_pos(s, t, i)] = i;

  std::vector<Partner> found;
  Partner cur(n, 0);
  // Pairs the circle interval [lo, hi) and then continues with the pending intervals.
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  std::function<void()> rec = [&]() {
    while (!pending.empty() && pending.back().first >= pending.back().second) pending.pop_back();
    if (pending.empty()) {
      found.push_back(cur);
      return;
    }
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const std::size_t a = at_circle[lo];
    for (std::size_t k = lo + 1; k < hi; k += 2) {
      const std::size_t b = at_circle[k];
      if (!legal_pair(source, target, a, b)) continue;
      cur[a] = static_cast<std::uint8_t>(b);
      cur[b] = static_cast<std::uint8_t>(a);
      auto saved = pending;
      pending.push_back({k + 1, hi});
      pending.push_back({lo + 1, k});
      rec();
      pending = std::move(saved);
    }
    pending.push_back({lo, hi});
  };
  pending.push_back({0, n});
  rec();
  std::sort(found.begin(), found.end());
  out.reserve(found.size());
  for (auto& p : found) out.emplace_back(source, target, std::move(p));
  return out;
}

// ---------------------------------------------------------------- stacking

StackResult stack(const Word& A, const Word& B, const Word& C, const Partner& g, const Partner& f) {
  const std::size_t a = A.size(), b = B.size(), c = C.size();
  StackResult r;
  r.partner.assign(a + c, 0);
  std::vector<char> seen(b, 0);

  // Follows a strand that entered the middle line at m coming from diagram g
  // (from_g) or f; returns the outer endpoint in result numbering.
  auto follow = [&](std::size_t m, bool from_g) -> std::size_t {
    for (;;) {
      seen[m] = 1;
      if (from_g) {
        std::size_t y = f[m];
        if (y >= b) return a + (y - b);
        m = y;
        from_g = false;
      } else {
        std::size_t x = g[a + m];
        if (x < a) return x;
        m = x - a;
        from_g = true;
      }
    }
  };

  for (std::size_t i = 0; i < a; ++i) {
    std::size_t x = g[i];
    std::size_t end = x < a ? x : follow(x - a, true);
    r.partner[i] = static_cast<std::uint8_t>(end);
  }
  for (std::size_t j = 0; j < c; ++j) {
    std::size_t y = f[b + j];
    std::size_t end = y >= b ? a + (y - b) : follow(y, false);
    r.partner[a + j] = static_cast<std::uint8_t>(end);
  }
  for (std::size_t m = 0; m < b; ++m) {
    if (seen[m]) continue;
    // m is the leftmost middle point of a closed loop
    (B[m] == Letter::Down ? r.ccw : r.cw)++;
    std::size_t cur = m;
    bool from_g = true;
    do {
      seen[cur] = 1;
      if (from_g) {
        cur = f[cur];
        from_g = false;
      } else {
        cur = g[a + cur] - a;
        from_g = true;
      }
    } while (cur != m || !from_g);
  }
  return r;
}

// ---------------------------------------------------------------- morphisms

TLMorphism::TLMorphism(Triple triple, Word source, Word target)
    : triple_(std::move(triple)), source_(std::move(source)), target_(std::move(target)) {}

TLMorphism TLMorphism::diagram(const Triple& t, const Diagram& d, RingValue coeff) {
  TLMorphism f(t, d.source(), d.target());
  f.add(d.partner(), t.ring->embed(coeff));
  return f;
}

TLMorphism TLMorphism::diagram(const Triple& t, const Diagram& d) { return diagram(t, d, t.ring->one()); }

TLMorphism TLMorphism::identity(const Triple& t, const Word& w) { return diagram(t, Diagram::identity(w)); }

TLMorphism TLMorphism::generator(const Triple& t, unsigned n, unsigned i) {
  return diagram(t, Diagram::generator(n, i));
}

RingValue TLMorphism::coefficient(const Partner& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? triple_.ring->zero() : it->second;
}

void TLMorphism::add(const Partner& p, const RingValue& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void check_compatible(const TLMorphism& a, const TLMorphism& b) {
  if (!(a.triple() == b.triple())) throw RingMismatch("morphisms over different triples");
}

void check_same_shape(const TLMorphism& a, const TLMorphism& b) {
  check_compatible(a, b);
  if (a.source() != b.source() || a.target() != b.target())
    throw std::invalid_argument("morphisms with different source/target");
}

// delta1^i * delta2^j with cached powers
class LoopWeights {
 public:
  explicit LoopWeights(const Triple& t) : t_(t), p1_{t.ring->one()}, p2_{t.ring->one()} {}
  RingValue operator()(unsigned i, unsigned j) {
    while (p1_.size() <= i) p1_.push_back(p1_.back() * t_.delta1);
    while (p2_.size() <= j) p2_.push_back(p2_.back() * t_.delta2);
    return p1_[i] * p2_[j];
  }

 private:
  const Triple& t_;
  std::vector<RingValue> p1_, p2_;
};

}  // namespace

TLMorphism TLMorphism::operator-() const {
  TLMorphism r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

TLMorphism operator+(const TLMorphism& a, const TLMorphism& b) {
  check_same_shape(a, b);
  TLMorphism r = a;
  for (const auto& [p, c] : b.terms_) r.add(p, c);
  return r;
}

TLMorphism operator-(const TLMorphism& a, const TLMorphism& b) { return a + (-b); }

TLMorphism operator*(const RingValue& c, const TLMorphism& f) {
  TLMorphism r(f.triple_, f.source_, f.target_);
  RingValue k = f.triple_.ring->embed(c);
  if (k.is_zero()) return r;
  for (const auto& [p, v] : f.terms_) r.add(p, k * v);
  return r;
}

bool operator==(const TLMorphism& a, const TLMorphism& b) {
  return a.triple_ == b.triple_ && a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
}

std::string TLMorphism::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    std::string cs = c.str();
    bool neg = cs[0] == '-';
    std::string body = neg ? cs.substr(1) : cs;
    if (body.find_first_of("+- ") != std::string::npos) {
      body = "(" + cs + ")";
      neg = false;
    }
    std::string term = body + " * " + diagram_of(p).str();
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  check_compatible(f, g);
  if (g.target() != f.source())
    throw std::invalid_argument("compose: " + word_str(g.target()) + " != " + word_str(f.source()));
  TLMorphism r(f.triple(), g.source(), f.target());
  LoopWeights w(f.triple());
  for (const auto& [pg, cg] : g.terms())
    for (const auto& [pf, cf] : f.terms()) {
      StackResult s = stack(g.source(), g.target(), f.target(), pg, pf);
      RingValue c = cf * cg;
      if (s.ccw || s.cw) c = c * w(s.ccw, s.cw);
      r.add(s.partner, c);
    }
  return r;
}

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
  check_compatible(f, g);
  const std::size_t a1 = f.source().size(), a2 = g.source().size();
  const std::size_t c1 = f.target().size();
  TLMorphism r(f.triple(), concat(f.source(), g.source()), concat(f.target(), g.target()));
  const std::size_t n = a1 + a2 + c1 + g.target().size();
  auto mf = [&](std::size_t x) { return x < a1 ? x : a1 + a2 + (x - a1); };
  auto mg = [&](std::size_t x) { return x < a2 ? a1 + x : a1 + a2 + c1 + (x - a2); };
  for (const auto& [pf, cf] : f.terms())
    for (const auto& [pg, cg] : g.terms()) {
      Partner p(n);
      for (std::size_t x = 0; x < pf.size(); ++x) p[mf(x)] = static_cast<std::uint8_t>(mf(pf[x]));
      for (std::size_t x = 0; x < pg.size(); ++x) p[mg(x)] = static_cast<std::uint8_t>(mg(pg[x]));
      r.add(p, cf * cg);
    }
  return r;
}

TLMorphism rotate(const TLMorphism& f) {
  const std::size_t s = f.source().size(), t = f.target().size();
  TLMorphism r(f.triple(), dual(f.target()), dual(f.source()));
  auto m = [&](std::size_t x) { return x < s ? t + (s - 1 - x) : t - 1 - (x - s); };
  for (const auto& [pf, c] : f.terms()) {
    Partner p(s + t);
    for (std::size_t x = 0; x < pf.size(); ++x) p[m(x)] = static_cast<std::uint8_t>(m(pf[x]));
    r.add(p, c);
  }
  return r;
}

// ---------------------------------------------------------------- Jones-Wenzl

std::string to_string(JWStrategy s) {
  switch (s) {
    case JWStrategy::Solve: return "solve";
    case JWStrategy::Recursion: return "recursion";
    case JWStrategy::Lift: return "lift";
    case JWStrategy::Auto: return "auto";
  }
  return "?";
}

JWStrategy parse_strategy(std::string_view s) {
  if (s == "solve") return JWStrategy::Solve;
  if (s == "recursion") return JWStrategy::Recursion;
  if (s == "lift") return JWStrategy::Lift;
  if (s == "auto") return JWStrategy::Auto;
  throw std::invalid_argument("unknown JW strategy '" + std::string(s) + "'");
}

std::optional<unsigned> hazi_obstruction(const Triple& t, unsigned n) {
  for (unsigned i = 1; i < n; ++i)
    if (qbinom(t, n, i).is_zero()) return i;
  return std::nullopt;
}

bool satisfies_jw_axioms(const TLMorphism& f, unsigned n) {
  const Triple& t = f.triple();
  if (f.source() != alt(n) || f.target() != alt(n)) return false;
  if (!f.coefficient(Diagram::identity(alt(n))).is_one()) return false;
  for (unsigned i = 1; i < n; ++i) {
    TLMorphism e = TLMorphism::generator(t, n, i);
    if (!compose(e, f).is_zero() || !compose(f, e).is_zero()) return false;
  }
  return true;
}

namespace {

std::optional<TLMorphism> jw_solve(const Triple& t, unsigned n) {
  const Word w = alt(n);
  const auto basis = enumerate_basis(w, w);
  std::map<Partner, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k].partner(), k);
  LoopWeights lw(t);

  SparseSolver solver(*t.ring, basis.size());
  SparseRow id_row;
  id_row[index.at(Diagram::identity(w).partner())] = t.ring->one();
  solver.add_equation(id_row, t.ring->one());

  for (unsigned i = 1; i < n && solver.consistent(); ++i) {
    const Partner e = Diagram::generator(n, i).partner();
    for (int side = 0; side < 2; ++side) {
      std::map<std::size_t, SparseRow> rows;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const Partner& d = basis[k].partner();
        StackResult s = side == 0 ? stack(w, w, w, d, e) : stack(w, w, w, e, d);
        RingValue c = lw(s.ccw, s.cw);
        if (c.is_zero()) continue;
        auto& row = rows[index.at(s.partner)];
        auto [it, inserted] = row.emplace(k, c);
        if (!inserted) {
          it->second = it->second + c;
          if (it->second.is_zero()) row.erase(it);
        }
      }
      for (auto& [target, row] : rows)
        if (!solver.add_equation(std::move(row), t.ring->zero())) break;
    }
  }
  if (!solver.consistent()) return std::nullopt;
  auto x = solver.unique_solution();
  if (!x) throw std::logic_error("JW linear system is consistent but not of full rank");
  TLMorphism r(t, w, w);
  for (std::size_t k = 0; k < basis.size(); ++k) r.add(basis[k].partner(), (*x)[k]);
  return r;
}

bool recursion_legal(const Triple& t, unsigned n) {
  for (unsigned k = 2; k <= n; ++k)
    if (qnum(t, k).first.is_zero()) return false;
  return true;
}

TLMorphism jw_recursion(const Triple& t, unsigned n) {
  TLMorphism cur = TLMorphism::identity(t, alt(1));
  for (unsigned k = 1; k < n; ++k) {
    Word w = alt(k + 1);
    TLMorphism I = tensor(TLMorphism::identity(t, Word{w[0]}), cur);
    TLMorphism e = TLMorphism::generator(t, k + 1, k);
    RingValue c = qnum(t, k).first / qnum(t, k + 1).first;
    cur = I - c * compose(I, compose(e, I));
  }
  return cur;
}

// Lifts the loop values of a prime field to integers where [2..n] are nonzero,
// runs the recursion over Q and reduces back. Empty when no lift is p-integral.
std::optional<TLMorphism> jw_lift(const Triple& t, unsigned n) {
  const Ring& fp = *t.ring;
  if (fp.kind() != RingKind::PrimeField) throw std::domain_error("lift strategy needs a prime field");
  const long p = static_cast<long>(fp.prime());
  auto sym = [&](const RingValue& v) {
    long r = static_cast<long>(std::get<std::uint64_t>(v.payload()));
    return r > p / 2 ? r - p : r;
  };
  const long a = sym(t.delta1), b = sym(t.delta2);
  const Ring& Q = Ring::construct("Q");
  const long shifts[] = {0, 1, -1, 2, -2, 3, -3};
  int tried = 0;
  for (long sa : shifts)
    for (long sb : shifts) {
      const long A = a + sa * p, B = b + sb * p;
      bool ok = true;
      for (unsigned k = 2; k <= n && ok; ++k)
        ok = mu(k - 1).evaluate(mpz_class(A), mpz_class(B)) != 0;
      if (!ok) continue;
      Triple tq(Q, Q.from_int(A), Q.from_int(B));
      TLMorphism jq = jw_recursion(tq, n);
      TLMorphism r(t, jq.source(), jq.target());
      bool integral = true;
      for (const auto& [d, c] : jq.terms()) {
        const mpq_class& v = std::get<mpq_class>(c.payload());
        if (mpz_divisible_ui_p(v.get_den_mpz_t(), static_cast<unsigned long>(p))) {
          integral = false;
          break;
        }
        r.add(d, fp.from_rational(v));
      }
      if (integral && satisfies_jw_axioms(r, n)) return r;
      if (++tried >= 3) return std::nullopt;
    }
  return std::nullopt;
}

}  // namespace

JWResult jw(const Triple& t, unsigned n, JWStrategy strategy) {
  if (n == 0) throw std::out_of_range("JW_n needs n >= 1");
  JWResult res;
  res.used = strategy;
  auto not_exists = [&](std::string why) {
    res.jw.reset();
    res.reason = std::move(why);
    return res;
  };
  switch (strategy) {
    case JWStrategy::Solve: {
      res.jw = jw_solve(t, n);
      if (!res.jw) return not_exists("kill equations are inconsistent");
      return res;
    }
    case JWStrategy::Recursion:
      if (!recursion_legal(t, n)) throw std::domain_error("recursion needs [2],...,[n] invertible");
      res.jw = jw_recursion(t, n);
      return res;
    case JWStrategy::Lift:
      res.jw = jw_lift(t, n);
      if (!res.jw) throw std::domain_error("no p-integral lift found");
      return res;
    case JWStrategy::Auto: break;
  }
  if (auto i = hazi_obstruction(t, n))
    return not_exists("Hazi: binom(" + std::to_string(n) + "," + std::to_string(*i) + ")=0");
  if (recursion_legal(t, n)) {
    res.used = JWStrategy::Recursion;
    res.jw = jw_recursion(t, n);
    return res;
  }
  if (t.ring->kind() == RingKind::PrimeField) {
    if (auto j = jw_lift(t, n)) {
      res.used = JWStrategy::Lift;
      res.jw = std::move(j);
      return res;
    }
  }
  res.used = JWStrategy::Solve;
  res.jw = jw_solve(t, n);
  if (!res.jw) return not_exists("kill equations are inconsistent");
  return res;
}

// ---------------------------------------------------------------- traces

TLMorphism partial_trace(const TLMorphism& f) {
  const Word& w = f.source();
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("partial trace of an empty word");
  if (f.target() != w || w != alt(static_cast<unsigned>(n)))
    throw std::invalid_argument("partial trace needs an endomorphism of alt(n)");
  const Triple& t = f.triple();
  const Letter a = w[0];
  const Word rest(w.begin() + 1, w.end());
  const Word big = concat(Word{dual(a)}, w);
  using E = Diagram::End;
  std::vector<std::pair<E, E>> cup_pairs{{E{true, 0}, E{true, 1}}};
  std::vector<std::pair<E, E>> cap_pairs{{E{false, 0}, E{false, 1}}};
  for (unsigned k = 0; k < rest.size(); ++k) {
    cup_pairs.push_back({E{false, k}, E{true, k + 2}});
    cap_pairs.push_back({E{false, k + 2}, E{true, k}});
  }
  TLMorphism cup = TLMorphism::diagram(t, Diagram::from_pairs(rest, big, cup_pairs));
  TLMorphism cap = TLMorphism::diagram(t, Diagram::from_pairs(big, rest, cap_pairs));
  TLMorphism mid = tensor(TLMorphism::identity(t, Word{dual(a)}), f);
  return compose(cap, compose(mid, cup));
}

RingValue markov_trace(const TLMorphism& f) {
  const Word& w = f.source();
  if (f.target() != w) throw std::invalid_argument("markov trace needs an endomorphism");
  const Triple& t = f.triple();
  const std::size_t n = w.size();
  if (n == 0) return f.coefficient(Partner{});
  const Word wb = dual(w);
  const Word big = concat(w, wb);
  using E = Diagram::End;
  std::vector<std::pair<E, E>> cup_pairs, cap_pairs;
  for (unsigned i = 0; i < n; ++i) {
    unsigned j = static_cast<unsigned>(2 * n - 1 - i);
    cup_pairs.push_back({E{true, i}, E{true, j}});
    cap_pairs.push_back({E{false, i}, E{false, j}});
  }
  TLMorphism cup = TLMorphism::diagram(t, Diagram::from_pairs({}, big, cup_pairs));
  TLMorphism cap = TLMorphism::diagram(t, Diagram::from_pairs(big, {}, cap_pairs));
  TLMorphism closed = compose(cap, compose(tensor(f, TLMorphism::identity(t, wb)), cup));
  return closed.coefficient(Partner{});
}

bool is_negligible(const TLMorphism& f) {
  if (f.source() != f.target()) throw std::invalid_argument("negligibility needs an endomorphism");
  for (const Diagram& d : enumerate_basis(f.source(), f.source()))
    if (!markov_trace(compose(f, TLMorphism::diagram(f.triple(), d))).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- rotatability

std::string to_string(Rotatability r) {
  switch (r) {
    case Rotatability::Rotatable: return "Rotatable";
    case Rotatability::NotRotatable: return "NotRotatable";
    case Rotatability::NoJW: return "NoJW";
  }
  return "?";
}

RotatabilityReport rotatability(const Triple& t, unsigned n) {
  if (n == 0) throw std::out_of_range("rotatability needs n >= 1");
  RotatabilityReport rep;
  const Triple ts = t.swapped();

  bool all = true;
  for (const Triple* x : {&t, &ts})
    for (unsigned i = 1; i <= n; ++i)
      if (!qbinom(*x, n + 1, i).is_zero()) all = false;
  rep.binomials_vanish = all;
  rep.cyclotomic_vanish = qnum(t, n + 1).second.is_zero() && qnum(ts, n + 1).second.is_zero();
  rep.criteria_agree = rep.binomials_vanish == rep.cyclotomic_vanish;

  if (n == 1) {
    rep.verdict = Rotatability::Rotatable;
    rep.evidence = "JW_1 is the identity, which always rotates";
    return rep;
  }
  auto h1 = hazi_obstruction(t, n), h2 = hazi_obstruction(ts, n);
  if (h1 || h2) {
    rep.verdict = Rotatability::NoJW;
    unsigned i = h1 ? *h1 : *h2;
    rep.evidence = std::string(h1 ? "" : "swapped triple: ") + "Hazi: binom(" + std::to_string(n) + "," +
                   std::to_string(i) + ")=0";
    return rep;
  }
  rep.verdict = rep.binomials_vanish ? Rotatability::Rotatable : Rotatability::NotRotatable;
  rep.evidence = rep.binomials_vanish
                     ? "binom(" + std::to_string(n + 1) + ",i)=0 for all 1<=i<=" + std::to_string(n) + " in both triples"
                     : "some binom(" + std::to_string(n + 1) + ",i) is nonzero";
  return rep;
}

// ---------------------------------------------------------------- rescaling

TLMorphism rescale(const TLMorphism& f, const RingValue& lambda) {
  const Triple& t = f.triple();
  const RingValue lam = t.ring->embed(lambda);
  const RingValue lam_inv = lam.inverse().value_or(t.ring->zero());
  if (lam_inv.is_zero()) throw NotInvertible("rescaling needs an invertible lambda");
  Triple out(*t.ring, lam * t.delta1, lam_inv * t.delta2);
  TLMorphism r(out, f.source(), f.target());
  for (const auto& [p, c] : f.terms()) {
    auto [ccw, cw] = f.diagram_of(p).turning_arcs();
    long e = static_cast<long>(cw) - static_cast<long>(ccw);
    if (e % 2) throw std::invalid_argument("rescale: diagram with odd turning");
    r.add(p, c * lam.pow(e / 2));
  }
  return r;
}

}  // namespace tlab
