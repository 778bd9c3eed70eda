#pragma once

// Fusion rings (unital based rings) and the N-boundedness classifier: the exact
// continuant recursion in K0, screened by Frobenius-Perron dimension.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace tlab {

struct FusionRing {
  std::string name;
  std::vector<std::string> basis;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  /// N[i][j][k]: multiplicity of basis k in i ⊗ j.
  std::vector<std::vector<std::vector<long>>> N;

  std::size_t rank() const { return basis.size(); }
  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(std::string_view label) const;
};

/// Checks shapes, unit laws, duality and associativity; throws
/// std::invalid_argument naming the first failing identity.
void validate(const FusionRing& r);
/// {"name", "basis", "unit", "dual", "N"}; validated.
FusionRing load_fusion_ring(const nlohmann::json& doc);
FusionRing load_fusion_ring_file(const std::string& path);
nlohmann::json to_json(const FusionRing& r);

/// slq:N (N >= 3), verp:p (p prime), ising, ty_z3, pointed:m.
FusionRing builtin_ring(std::string_view name);
/// Names used by sweeps over all built-in rings.
std::vector<std::string> builtin_names();

using K0Vector = std::vector<mpz_class>;

K0Vector basis_vector(const FusionRing& r, std::size_t i);
K0Vector multiply(const FusionRing& r, const K0Vector& a, const K0Vector& b);
K0Vector dual(const FusionRing& r, const K0Vector& a);
bool is_zero(const K0Vector& a);
/// "σ", "2*1 + ε", "-ε", "0".
std::string str(const FusionRing& r, const K0Vector& a);
/// Inverse of str: sums of [integer[*]]label terms; a bare integer n means n*unit.
K0Vector parse_class(const FusionRing& r, std::string_view text);

/// Perron-Frobenius eigenvalue of left multiplication by basis element i.
double fpdim(const FusionRing& r, std::size_t i);
/// Extended linearly.
double fpdim(const FusionRing& r, const K0Vector& a);

/// [E_0] .. [E_max_m]: unit, x, then [E_m] = x^(m-1) [E_{m-1}] - [E_{m-2}]
/// with x^(i) = x for even i and dual(x) for odd i.
std::vector<K0Vector> continuant_sequence(const FusionRing& r, const K0Vector& x, std::size_t max_m);

enum class Verdict { StrictlyBounded, Unbounded, Inconclusive };

struct BoundReport {
  K0Vector object;
  std::string label;
  double fpdim = 0;
  Verdict verdict = Verdict::Inconclusive;
  unsigned N = 0;             // for StrictlyBounded
  std::string reason;         // for Unbounded
  unsigned max_n = 0;
  std::vector<K0Vector> sequence;
  /// Indices m <= 3N with [E_m] = 0, and whether they are exactly N-1, 2N-1, 3N-1.
  std::vector<unsigned> zeros;
  bool divisibility = false;
  /// [E_{N-2}] is plus or minus a basis element of FPdim 1.
  bool invertible_certificate = false;
  std::string certificate;
  /// N > 3 and not a prime power.
  bool conjecture_relevant = false;

  /// "strictly 4-bounded", "unbounded (FPdim >= 2)", "inconclusive up to n=64".
  std::string verdict_str() const;
  /// verdict_str() + "; FPdim=1.414214".
  std::string summary() const;
};

constexpr unsigned kDefaultMaxN = 64;
constexpr double kFpdimScreen = 1e-9;

BoundReport minimal_bound(const FusionRing& r, const K0Vector& x, unsigned max_n = kDefaultMaxN);
/// Throws std::out_of_range for a bad index.
BoundReport minimal_bound(const FusionRing& r, std::size_t i, unsigned max_n = kDefaultMaxN);
std::vector<BoundReport> classify_all(const FusionRing& r, unsigned max_n = kDefaultMaxN);

nlohmann::json to_json(const FusionRing& r, const BoundReport& b);
std::string classification_table(const FusionRing& r, const std::vector<BoundReport>& reports);

/// sin((a+1)π/p^(n-i)) / sin(π/p^(n-i)).
double ver_fpdim(unsigned p, unsigned n, unsigned a, unsigned i);

struct GaloisGap {
  double gap = 0;
  int M = 0, N = 0, j = 0;
};
/// Minimum of |4cos²(π/N) - 4cos(π/M) - 2cos(jπ/N)| over the given box.
GaloisGap min_galois_gap(int M_lo, int M_hi, int N_lo, int N_hi);

}  // namespace tlab
