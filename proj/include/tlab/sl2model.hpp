#pragma once

// Matrix realization of 2TL at delta1 = delta2 = q + q^-1. A letter goes to a
// two-dimensional space; a word of length k to 2^k with the leftmost letter as
// the most significant bit.
//
// Weights, for an arc in state a (w_0 = q, w_1 = q^-1):
//   cap on ∨∧ and cup on ∧∨        1
//   cap on ∧∨ (clockwise)          w_a
//   cup on ∨∧ (counter-clockwise)  w_a^-1
// so both loop orientations close to q + q^-1 and the snake relations hold.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tlab/complexes.hpp"
#include "tlab/linalg.hpp"

namespace tlab {

struct FiberParams {
  const Ring* field = nullptr;
  RingValue q;
  RingValue delta;  // q + q^-1

  /// The balanced triple (field, delta, delta) the realization is defined on.
  Triple triple() const { return Triple(*field, delta, delta); }
};

/// Throws NotInvertible if q = 0.
FiberParams make_fiber(const Ring& field, const RingValue& q);
FiberParams make_fiber(std::string_view ring_spec, std::string_view q);

/// Throws std::invalid_argument when f's triple is not params.triple().
ExactMatrix realize(const TLMorphism& f, const FiberParams& params);
/// Block matrix of the realized entries.
ExactMatrix realize(const FormalMorphism& f, const FiberParams& params);

struct HomologyRow {
  int degree = 0;
  std::size_t dim = 0;       // dimension of the term
  std::size_t rank_out = 0;  // rank of d_i leaving this degree
  std::size_t kernel = 0;
  std::size_t image = 0;     // rank of d_{i+1} arriving here
  std::size_t homology = 0;
};

struct HomologyReport {
  std::vector<HomologyRow> rows;  // descending degree
  long euler_terms = 0;
  long euler_homology = 0;

  /// dim H_i, zero outside the support.
  std::size_t h(int degree) const;
  /// Degrees with nonzero homology.
  std::vector<int> support() const;
};

/// Throws std::logic_error if the realized differentials do not square to zero.
HomologyReport homology(const FormalComplex& C, const FiberParams& params);

std::string to_string(const HomologyReport& r);
nlohmann::json to_json(const HomologyReport& r);

}  // namespace tlab
