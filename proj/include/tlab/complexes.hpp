#pragma once

// Bounded chain complexes over formal direct sums of words in 2TL, with
// homological indexing: d_i goes from degree i to degree i-1.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tlab/contpoly.hpp"
#include "tlab/tldiag.hpp"

namespace tlab {

struct FormalObject {
  std::vector<Word> summands;

  std::size_t size() const { return summands.size(); }
  bool empty() const { return summands.empty(); }
  friend bool operator==(const FormalObject&, const FormalObject&) = default;
};

/// Matrix of TLMorphisms; entry (i, j) maps source summand j to target summand i.
class FormalMorphism {
 public:
  /// The zero morphism.
  FormalMorphism(Triple triple, FormalObject source, FormalObject target);
  static FormalMorphism identity(const Triple& t, const FormalObject& x);

  const Triple& triple() const { return triple_; }
  const FormalObject& source() const { return source_; }
  const FormalObject& target() const { return target_; }
  TLMorphism& at(std::size_t i, std::size_t j) { return entries_[i * source_.size() + j]; }
  const TLMorphism& at(std::size_t i, std::size_t j) const { return entries_[i * source_.size() + j]; }
  /// Checked entry assignment.
  void set(std::size_t i, std::size_t j, TLMorphism f);
  bool is_zero() const;

  FormalMorphism operator-() const;
  friend FormalMorphism operator+(const FormalMorphism& a, const FormalMorphism& b);
  friend FormalMorphism operator-(const FormalMorphism& a, const FormalMorphism& b) { return a + (-b); }
  friend bool operator==(const FormalMorphism& a, const FormalMorphism& b);

 private:
  Triple triple_;
  FormalObject source_, target_;
  std::vector<TLMorphism> entries_;
};

/// f after g.
FormalMorphism compose(const FormalMorphism& f, const FormalMorphism& g);
/// id_w ⊗ f.
FormalMorphism whisker_left(const Word& w, const FormalMorphism& f);

class FormalComplex {
 public:
  explicit FormalComplex(Triple triple) : triple_(std::move(triple)) {}
  /// x placed in degree k.
  static FormalComplex concentrated(const Triple& t, const FormalObject& x, int k = 0);

  const Triple& triple() const { return triple_; }
  /// Empty object outside the support.
  FormalObject term(int i) const;
  /// d_i : C_i -> C_{i-1}; zero of the right shape when not stored.
  FormalMorphism d(int i) const;
  void set_term(int i, FormalObject x);
  void set_d(int i, FormalMorphism f);

  /// Degrees with nonzero terms, ascending.
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const FormalComplex& a, const FormalComplex& b);

 private:
  Triple triple_;
  std::map<int, FormalObject> terms_;
  std::map<int, FormalMorphism> d_;
};

/// Degreewise components f_i : C_i -> D_i.
struct ChainMap {
  std::map<int, FormalMorphism> components;
  /// Component in degree i, or zero C_i -> D_i.
  FormalMorphism at(int i, const FormalComplex& C, const FormalComplex& D) const;
};

bool is_chain_map(const ChainMap& f, const FormalComplex& C, const FormalComplex& D);

/// C[k]: C[k]_i = C_{i-k} with differential (-1)^k d.
FormalComplex shift(const FormalComplex& C, int k = 1);
/// Cone(f)_i = C_{i-1} ⊕ D_i with d = (-d^C, 0; -f, d^D). Throws
/// std::invalid_argument if f is not a chain map.
FormalComplex cone(const ChainMap& f, const FormalComplex& C, const FormalComplex& D);
/// w ⊗ C with differential id_w ⊗ d.
FormalComplex whisker_left(const Word& w, const FormalComplex& C);
/// (C*)_i = (C_{-i})* with transposed, half-turn rotated differentials.
FormalComplex dual(const FormalComplex& C);
/// Reorders the summands of degree i by perm (new position k holds old perm[k]).
FormalComplex permute(const FormalComplex& C, int i, const std::vector<std::size_t>& perm);

// ---------------------------------------------------------------- continuants

enum class Variant { Lower, Upper };

/// Subset of {0..n-1} (positions counted from the right), sorted.
using Twinned = std::vector<unsigned>;

struct Continuant {
  unsigned n = 0;
  Variant variant = Variant::Lower;
  Letter letter = Letter::Up;
  FormalComplex complex;
  /// labels[i][k] is the twinned subset removed from the degree-0 word to get
  /// summand k of degree i (lower variant) or of degree -i (upper variant).
  std::map<int, std::vector<Twinned>> labels;
  /// phi[k]: E_k -> X^(k-1) ⊗ E_{k-1} and f[k]: X^(k) ⊗ E_k -> E_{k-1}, for
  /// 1 <= k <= n (lower variant only; index 0 unused).
  std::vector<ChainMap> phi, f;
};

/// X^(i) for X = letter: the letter itself for even i, its dual for odd i.
Letter adjoint_letter(Letter x, unsigned i);
/// X^(n-1) ... X^(1) X^(0).
Word continuant_word(Letter x, unsigned n);
/// Twinned subsets of {0..n-1} of size 2k in lexicographic order.
std::vector<Twinned> twinned_subsets(unsigned n, unsigned k);
/// The word with the positions (from the right) in I removed.
Word remove_positions(const Word& w, const Twinned& I);

/// E_n(X) built by iterated cones, or the upper E^n(X) as the dual of
/// E_n(dual X). Summands in each degree are sorted by twinned subset.
Continuant build_continuant(unsigned n, Variant variant, const Triple& t, Letter x = Letter::Up);

/// Sum over degrees of (-1)^i x^{#∧} y^{#∨} over the summands.
IntPolynomial k0_class(const FormalComplex& C);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t checks = 0;
};
ValidationReport validate(const FormalComplex& C);
/// Also checks the twinned-subset census and summand words.
ValidationReport validate(const Continuant& E);

/// Per degree: summand words and the matrix of term counts of d.
std::string summary(const FormalComplex& C);
nlohmann::json to_json(const FormalComplex& C);

}  // namespace tlab
