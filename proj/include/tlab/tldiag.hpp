#pragma once

// Two-colored Temperley-Lieb diagram calculus over a triple (R, delta1, delta2).
//
// A diagram between words `source` (drawn below) and `target` (drawn above) is a
// perfect non-crossing matching of their letters. Points are numbered globally:
// source letters 0..s-1 left to right, then target letters s..s+t-1 left to right.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlab/rings.hpp"

namespace tlab {

enum class Letter : std::uint8_t { Up, Down };  // ∧, ∨
using Word = std::vector<Letter>;

inline Letter dual(Letter a) { return a == Letter::Up ? Letter::Down : Letter::Up; }
/// Reversed word with every letter flipped.
Word dual(const Word& w);
/// Alternating word of length n whose rightmost letter is ∧.
Word alt(unsigned n);
Word concat(const Word& a, const Word& b);
/// "∧∨∧"; the empty word renders as "∅".
std::string word_str(const Word& w);
/// Accepts ∧/∨ as well as ^/v (or u/d); "∅", "" and "1" denote the empty word.
Word parse_word(std::string_view s);

using Partner = std::vector<std::uint8_t>;

class Diagram {
 public:
  /// Validates letters, perfectness and planarity; throws std::invalid_argument.
  Diagram(Word source, Word target, Partner partner);

  struct End {
    bool top;
    unsigned index;
  };
  static Diagram from_pairs(Word source, Word target, const std::vector<std::pair<End, End>>& pairs);
  static Diagram identity(const Word& w);
  /// e_i on alt(n): joins positions i and i+1 counted from the right.
  static Diagram generator(unsigned n, unsigned i);

  const Word& source() const { return source_; }
  const Word& target() const { return target_; }
  const Partner& partner() const { return partner_; }
  std::size_t size() const { return partner_.size(); }
  bool is_identity() const;

  /// Caps on the source side whose left letter is ∨ (counter-clockwise) and ∧ (clockwise).
  std::pair<unsigned, unsigned> source_caps() const;
  /// Same count over all caps and cups: (counter-clockwise, clockwise).
  std::pair<unsigned, unsigned> turning_arcs() const;
  /// Number of strands joining source to target.
  unsigned through_strands() const;

  /// "[(b:0, t:1), (b:1, b:2), ...]" ordered by the smaller endpoint.
  std::string str() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.partner_ == b.partner_;
  }
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.partner_ < b.partner_; }

 private:
  Word source_, target_;
  Partner partner_;
};

/// All legal diagrams source -> target, sorted by partner array.
std::vector<Diagram> enumerate_basis(const Word& source, const Word& target);

class TLMorphism {
 public:
  using Terms = std::map<Partner, RingValue>;

  TLMorphism(Triple triple, Word source, Word target);
  static TLMorphism diagram(const Triple& t, const Diagram& d, RingValue coeff);
  static TLMorphism diagram(const Triple& t, const Diagram& d);
  static TLMorphism identity(const Triple& t, const Word& w);
  static TLMorphism generator(const Triple& t, unsigned n, unsigned i);

  const Triple& triple() const { return triple_; }
  const Word& source() const { return source_; }
  const Word& target() const { return target_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingValue coefficient(const Partner& p) const;
  RingValue coefficient(const Diagram& d) const { return coefficient(d.partner()); }
  Diagram diagram_of(const Partner& p) const { return Diagram(source_, target_, p); }

  /// Adds c * d (d must match source/target).
  void add(const Partner& p, const RingValue& c);

  TLMorphism operator-() const;
  friend TLMorphism operator+(const TLMorphism& a, const TLMorphism& b);
  friend TLMorphism operator-(const TLMorphism& a, const TLMorphism& b);
  friend TLMorphism operator*(const RingValue& c, const TLMorphism& f);
  friend bool operator==(const TLMorphism& a, const TLMorphism& b);
  friend bool operator!=(const TLMorphism& a, const TLMorphism& b) { return !(a == b); }

  /// "c1 * (b:0, t:0) + ..." with coefficients in the element grammar.
  std::string str() const;

 private:
  Triple triple_;
  Word source_, target_;
  Terms terms_;
};

/// f after g: g is drawn below f.
TLMorphism compose(const TLMorphism& f, const TLMorphism& g);
/// f to the left of g.
TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);
/// Rotation by a half turn: the dual morphism dual(target) -> dual(source).
TLMorphism rotate(const TLMorphism& f);

/// Closed loops formed when stacking diagram g (below) under f (above).
struct StackResult {
  Partner partner;
  unsigned ccw = 0;  // loops evaluated at delta1
  unsigned cw = 0;   // loops evaluated at delta2
};
StackResult stack(const Word& a, const Word& b, const Word& c, const Partner& g, const Partner& f);

// ---------------------------------------------------------------- Jones-Wenzl

enum class JWStrategy { Solve, Recursion, Lift, Auto };
std::string to_string(JWStrategy s);
JWStrategy parse_strategy(std::string_view s);

struct JWResult {
  std::optional<TLMorphism> jw;
  JWStrategy used = JWStrategy::Auto;
  /// Why it does not exist, e.g. "Hazi: binom(5,2)=0".
  std::string reason;
  bool exists() const { return jw.has_value(); }
};

/// Smallest i with binom(n, i) not invertible, if any.
std::optional<unsigned> hazi_obstruction(const Triple& t, unsigned n);

/// JW_n in TL_n(t) = End(alt(n)). Throws std::domain_error when the requested
/// strategy is not applicable (recursion with a vanishing [k], lift outside F_p).
JWResult jw(const Triple& t, unsigned n, JWStrategy strategy = JWStrategy::Auto);

/// Identity coefficient 1, e_i∘f = 0 = f∘e_i for all i.
bool satisfies_jw_axioms(const TLMorphism& f, unsigned n);

// ---------------------------------------------------------------- traces

/// Closes the leftmost strand of an endomorphism of alt(n); lands in End(alt(n-1)).
TLMorphism partial_trace(const TLMorphism& f);
/// Closes all strands around the right side.
RingValue markov_trace(const TLMorphism& f);
/// tr(f∘d) = 0 for every basis diagram d.
bool is_negligible(const TLMorphism& f);

// ---------------------------------------------------------------- rotatability

enum class Rotatability { Rotatable, NotRotatable, NoJW };
std::string to_string(Rotatability r);

struct RotatabilityReport {
  Rotatability verdict = Rotatability::NoJW;
  /// Condition "every binom(n+1, i) vanishes for both triples".
  bool binomials_vanish = false;
  /// Condition "[[n+1]] vanishes for both triples".
  bool cyclotomic_vanish = false;
  /// Whether the two conditions agree (they must over a domain).
  bool criteria_agree = false;
  std::string evidence;
};

RotatabilityReport rotatability(const Triple& t, unsigned n);

// ---------------------------------------------------------------- rescaling

/// d -> lambda^((a-b)/2) d with a clockwise and b counter-clockwise arcs (caps
/// and cups together), moving from (R, d1, d2) to (R, lambda d1, lambda^-1 d2).
/// Throws std::invalid_argument if some diagram has odd a-b.
TLMorphism rescale(const TLMorphism& f, const RingValue& lambda);

}  // namespace tlab
