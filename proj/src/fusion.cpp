#include "tlab/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tlab {

std::size_t FusionRing::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw std::out_of_range("no basis element '" + std::string(label) + "' in " + name);
}

// ---------------------------------------------------------------- validation

void validate(const FusionRing& r) {
  const std::size_t n = r.rank();
  if (n == 0) throw std::invalid_argument("schema: empty basis");
  if (r.unit >= n) throw std::invalid_argument("schema: unit index out of range");
  if (r.dual.size() != n) throw std::invalid_argument("schema: dual has wrong length");
  if (r.N.size() != n) throw std::invalid_argument("schema: N has wrong shape");
  for (const auto& a : r.N) {
    if (a.size() != n) throw std::invalid_argument("schema: N has wrong shape");
    for (const auto& b : a) {
      if (b.size() != n) throw std::invalid_argument("schema: N has wrong shape");
      for (long c : b)
        if (c < 0) throw std::invalid_argument("schema: negative structure constant");
    }
  }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return r.N[i][j][k]; };
  auto name = [&](std::size_t i) { return r.basis[i]; };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      long e = j == k;
      if (at(r.unit, j, k) != e || at(j, r.unit, k) != e)
        throw std::invalid_argument("unit: 1*" + name(j) + " or " + name(j) + "*1 has wrong coefficient of " + name(k));
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (r.dual[i] >= n || r.dual[r.dual[i]] != i) throw std::invalid_argument("duality: dual is not an involution at " + name(i));
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j, r.unit) != (j == r.dual[i] ? 1 : 0))
        throw std::invalid_argument("duality: coefficient of unit in " + name(i) + "*" + name(j));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          long lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += at(i, j, m) * at(m, k, l);
            rhs += at(j, k, m) * at(i, m, l);
          }
          if (lhs != rhs)
            throw std::invalid_argument("associativity: (" + name(i) + "*" + name(j) + ")*" + name(k) + " != " + name(i) +
                                        "*(" + name(j) + "*" + name(k) + ") at " + name(l));
        }
}

FusionRing load_fusion_ring(const nlohmann::json& doc) {
  FusionRing r;
  try {
    r.name = doc.at("name").get<std::string>();
    r.basis = doc.at("basis").get<std::vector<std::string>>();
    r.unit = doc.at("unit").get<std::size_t>();
    r.dual = doc.at("dual").get<std::vector<std::size_t>>();
    r.N = doc.at("N").get<std::vector<std::vector<std::vector<long>>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("schema: ") + e.what());
  }
  validate(r);
  return r;
}

FusionRing load_fusion_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("schema: ") + e.what());
  }
  return load_fusion_ring(doc);
}

nlohmann::json to_json(const FusionRing& r) {
  return {{"name", r.name}, {"basis", r.basis}, {"unit", r.unit}, {"dual", r.dual}, {"N", r.N}};
}

// ---------------------------------------------------------------- built-ins

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned parse_param(std::string_view name, std::string_view prefix) {
  std::string s(name.substr(prefix.size()));
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
    throw std::invalid_argument("bad parameter in built-in ring name '" + std::string(name) + "'");
  return static_cast<unsigned>(std::stoul(s));
}

FusionRing empty_ring(std::string name, std::vector<std::string> basis) {
  FusionRing r;
  const std::size_t n = basis.size();
  r.name = std::move(name);
  r.basis = std::move(basis);
  r.dual.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.dual[i] = i;
  r.N.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  return r;
}

// Truncated Clebsch-Gordan rule at level N-2.
FusionRing verlinde_sl2(unsigned N, std::string name) {
  std::vector<std::string> basis;
  for (unsigned i = 0; i + 1 < N; ++i) basis.push_back("L" + std::to_string(i));
  FusionRing r = empty_ring(std::move(name), std::move(basis));
  const int top = 2 * static_cast<int>(N) - 4;
  for (int i = 0; i + 1 < static_cast<int>(N); ++i)
    for (int j = 0; j + 1 < static_cast<int>(N); ++j)
      for (int k = std::abs(i - j); k <= std::min(i + j, top - i - j); k += 2) r.N[i][j][k] = 1;
  return r;
}

FusionRing cyclic(unsigned m, std::string name) {
  std::vector<std::string> basis{"1"};
  for (unsigned k = 1; k < m; ++k) basis.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
  FusionRing r = empty_ring(std::move(name), std::move(basis));
  for (unsigned a = 0; a < m; ++a) {
    r.dual[a] = (m - a) % m;
    for (unsigned b = 0; b < m; ++b) r.N[a][b][(a + b) % m] = 1;
  }
  return r;
}

}  // namespace

FusionRing builtin_ring(std::string_view name) {
  FusionRing r;
  if (name.starts_with("slq:")) {
    unsigned N = parse_param(name, "slq:");
    if (N < 3) throw std::invalid_argument("slq:N needs N >= 3");
    r = verlinde_sl2(N, std::string(name));
  } else if (name.starts_with("verp:")) {
    unsigned p = parse_param(name, "verp:");
    if (!is_prime(p)) throw std::invalid_argument("verp:p needs a prime p");
    r = verlinde_sl2(p, std::string(name));
  } else if (name.starts_with("pointed:")) {
    unsigned m = parse_param(name, "pointed:");
    if (m < 1) throw std::invalid_argument("pointed:m needs m >= 1");
    r = cyclic(m, std::string(name));
  } else if (name == "ising") {
    r = empty_ring("ising", {"1", "ε", "σ"});
    auto& N = r.N;
    N[0][0][0] = N[0][1][1] = N[1][0][1] = N[0][2][2] = N[2][0][2] = 1;
    N[1][1][0] = 1;
    N[1][2][2] = N[2][1][2] = 1;
    N[2][2][0] = N[2][2][1] = 1;
  } else if (name == "ty_z3") {
    r = cyclic(3, "ty_z3");
    r.basis.push_back("X");
    r.dual.push_back(3);
    for (auto& a : r.N) {
      for (auto& b : a) b.push_back(0);
      a.emplace_back(4, 0);
    }
    r.N.emplace_back(4, std::vector<long>(4, 0));
    for (std::size_t g = 0; g < 3; ++g) {
      r.N[g][3][3] = r.N[3][g][3] = 1;
      r.N[3][3][g] = 1;
    }
  } else {
    throw std::invalid_argument("unknown built-in ring '" + std::string(name) + "'");
  }
  validate(r);
  return r;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (unsigned N = 3; N <= 10; ++N) out.push_back("slq:" + std::to_string(N));
  for (unsigned p : {2u, 3u, 5u, 7u, 11u}) out.push_back("verp:" + std::to_string(p));
  out.push_back("ising");
  out.push_back("ty_z3");
  for (unsigned m = 1; m <= 6; ++m) out.push_back("pointed:" + std::to_string(m));
  return out;
}

// ---------------------------------------------------------------- K0

K0Vector basis_vector(const FusionRing& r, std::size_t i) {
  if (i >= r.rank()) throw std::out_of_range("basis index out of range");
  K0Vector v(r.rank(), 0);
  v[i] = 1;
  return v;
}

K0Vector multiply(const FusionRing& r, const K0Vector& a, const K0Vector& b) {
  const std::size_t n = r.rank();
  K0Vector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_class ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (r.N[i][j][k]) out[k] += ab * r.N[i][j][k];
    }
  }
  return out;
}

K0Vector dual(const FusionRing& r, const K0Vector& a) {
  K0Vector out(r.rank(), 0);
  for (std::size_t i = 0; i < r.rank(); ++i) out[r.dual[i]] = a[i];
  return out;
}

bool is_zero(const K0Vector& a) {
  return std::all_of(a.begin(), a.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

std::string str(const FusionRing& r, const K0Vector& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_class c = abs(a[i]);
    std::string term = (c == 1 ? "" : c.get_str() + "*") + r.basis[i];
    if (out.empty()) out = (sgn(a[i]) < 0 ? "-" : "") + term;
    else out += (sgn(a[i]) < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

K0Vector parse_class(const FusionRing& r, std::string_view text) {
  K0Vector out(r.rank(), 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  // longest basis label at pos, consumed on success
  auto take_label = [&]() -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < r.rank(); ++i)
      if (text.substr(pos).starts_with(r.basis[i]) && (!best || r.basis[i].size() > r.basis[*best].size())) best = i;
    if (best) pos += r.basis[*best].size();
    return best;
  };
  auto fail = [&] { throw std::invalid_argument("cannot parse class '" + std::string(text) + "' in " + r.name); };
  bool first = true;
  for (;;) {
    skip();
    if (pos == text.size()) {
      if (first) fail();
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail();
    }
    first = false;
    mpz_class coeff = 1;
    std::size_t digits = 0;
    while (pos + digits < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + digits]))) ++digits;
    const std::size_t save = pos;
    std::optional<std::size_t> label = take_label();
    if (label && pos - save < digits) {  // "12" is an integer even if "1" is a label
      pos = save;
      label.reset();
    }
    if (!label) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail();
      coeff = mpz_class(std::string(text.substr(start, pos - start)));
      label = take_label();  // "2σ"
      skip();
      if (!label && pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        label = take_label();
        if (!label) fail();
      }
      if (!label) label = r.unit;  // bare integer
    }
    out[*label] += sign * coeff;
  }
  return out;
}

// ---------------------------------------------------------------- FPdim

double fpdim(const FusionRing& r, std::size_t i) {
  if (i >= r.rank()) throw std::out_of_range("basis index out of range");
  const std::size_t n = r.rank();
  // power iteration on L_i + I with Collatz-Wielandt bounds
  std::vector<double> v(n, 1.0), w(n);
  double est = 0;
  for (int it = 0; it < 400000; ++it) {
    for (std::size_t k = 0; k < n; ++k) {
      double s = v[k];
      for (std::size_t j = 0; j < n; ++j)
        if (r.N[i][j][k]) s += static_cast<double>(r.N[i][j][k]) * v[j];
      w[k] = s;
    }
    double lo = INFINITY, hi = 0, norm = 0;
    for (std::size_t k = 0; k < n; ++k) {
      double q = w[k] / v[k];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      norm = std::max(norm, w[k]);
    }
    est = hi - 1;
    for (std::size_t k = 0; k < n; ++k) v[k] = std::max(w[k] / norm, 1e-300);
    if (hi - lo < 1e-13) break;
  }
  return est;
}

double fpdim(const FusionRing& r, const K0Vector& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i])) s += a[i].get_d() * fpdim(r, i);
  return s;
}

std::vector<K0Vector> continuant_sequence(const FusionRing& r, const K0Vector& x, std::size_t max_m) {
  std::vector<K0Vector> seq{basis_vector(r, r.unit)};
  if (max_m >= 1) seq.push_back(x);
  const K0Vector xd = dual(r, x);
  for (std::size_t m = 2; m <= max_m; ++m) {
    K0Vector e = multiply(r, (m - 1) % 2 ? xd : x, seq[m - 1]);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] -= seq[m - 2][k];
    seq.push_back(std::move(e));
  }
  return seq;
}

// ---------------------------------------------------------------- classifier

namespace {

bool prime_power(unsigned n) {
  for (unsigned p = 2; p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  return false;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

std::string BoundReport::verdict_str() const {
  switch (verdict) {
    case Verdict::StrictlyBounded: return "strictly " + std::to_string(N) + "-bounded";
    case Verdict::Unbounded: return "unbounded (" + reason + ")";
    case Verdict::Inconclusive: return "inconclusive up to n=" + std::to_string(max_n);
  }
  return "";
}

std::string BoundReport::summary() const { return verdict_str() + "; FPdim=" + fixed6(fpdim); }

BoundReport minimal_bound(const FusionRing& r, const K0Vector& x, unsigned max_n) {
  if (max_n < 3) throw std::invalid_argument("max_n must be at least 3");
  if (x.size() != r.rank()) throw std::invalid_argument("class has the wrong length");
  BoundReport b;
  b.object = x;
  b.label = str(r, x);
  b.max_n = max_n;
  b.fpdim = fpdim(r, x);

  auto seq = continuant_sequence(r, x, max_n - 1);
  std::optional<unsigned> first;
  for (unsigned m = 1; m < seq.size() && !first; ++m)
    if (is_zero(seq[m])) first = m;

  if (first) {
    const unsigned N = *first + 1;
    b.verdict = Verdict::StrictlyBounded;
    b.N = N;
    if (seq.size() < 3 * N) seq = continuant_sequence(r, x, 3 * N);
    for (unsigned m = 0; m <= 3 * N; ++m)
      if (is_zero(seq[m])) b.zeros.push_back(m);
    b.divisibility = b.zeros == std::vector<unsigned>{N - 1, 2 * N - 1, 3 * N - 1};
    const K0Vector& c = seq[N - 2];
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i])) ++nz, at = i;
    b.invertible_certificate = nz == 1 && abs(c[at]) == 1 && std::abs(fpdim(r, at) - 1.0) < 1e-9;
    b.certificate = "[E_" + std::to_string(N - 2) + "] = " + str(r, c);
    b.conjecture_relevant = N > 3 && !prime_power(N);
    seq.resize(3 * N + 1);
  } else {
    bool nonneg = std::all_of(x.begin(), x.end(), [](const mpz_class& c) { return sgn(c) >= 0; });
    mpz_class total = 0;
    for (const auto& c : x) total += c;
    if (nonneg && total >= 2 && b.fpdim >= 2 - kFpdimScreen) {
      b.verdict = Verdict::Unbounded;
      b.reason = "composite class, FPdim >= 2";
    } else if (b.fpdim >= 2 - kFpdimScreen) {
      b.verdict = Verdict::Unbounded;
      b.reason = "FPdim >= 2";
    } else {
      b.verdict = Verdict::Inconclusive;
    }
  }
  b.sequence = std::move(seq);
  return b;
}

BoundReport minimal_bound(const FusionRing& r, std::size_t i, unsigned max_n) {
  BoundReport b = minimal_bound(r, basis_vector(r, i), max_n);
  b.label = r.basis[i];
  return b;
}

std::vector<BoundReport> classify_all(const FusionRing& r, unsigned max_n) {
  std::vector<BoundReport> out;
  for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(minimal_bound(r, i, max_n));
  return out;
}

nlohmann::json to_json(const FusionRing& r, const BoundReport& b) {
  nlohmann::json j;
  j["object"] = b.label;
  j["fpdim"] = b.fpdim;
  j["verdict"] = b.verdict == Verdict::StrictlyBounded ? "StrictlyBounded"
                 : b.verdict == Verdict::Unbounded    ? "Unbounded"
                                                      : "Inconclusive";
  if (b.verdict == Verdict::StrictlyBounded) {
    j["N"] = b.N;
    j["zeros"] = b.zeros;
    j["divisibility"] = b.divisibility;
    j["invertible_certificate"] = b.invertible_certificate;
    j["certificate"] = b.certificate;
    j["conjecture_relevant"] = b.conjecture_relevant;
  }
  if (b.verdict == Verdict::Unbounded) j["reason"] = b.reason;
  j["max_n"] = b.max_n;
  auto& seq = j["sequence"] = nlohmann::json::array();
  for (std::size_t m = 0; m < b.sequence.size() && m < 16; ++m) seq.push_back(str(r, b.sequence[m]));
  return j;
}

std::string classification_table(const FusionRing& r, const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  std::size_t w = 6;
  for (const auto& s : r.basis) w = std::max(w, s.size() + 2);
  for (const auto& b : reports) {
    std::string label = b.label;
    os << label << std::string(w > label.size() ? w - label.size() : 1, ' ') << b.summary();
    if (b.conjecture_relevant) os << " [conjecture-relevant]";
    os << "\n";
  }
  return os.str();
}

double ver_fpdim(unsigned p, unsigned n, unsigned a, unsigned i) {
  const double m = std::pow(static_cast<double>(p), static_cast<double>(n - i));
  return std::sin((a + 1) * std::numbers::pi / m) / std::sin(std::numbers::pi / m);
}

GaloisGap min_galois_gap(int M_lo, int M_hi, int N_lo, int N_hi) {
  GaloisGap best{INFINITY, 0, 0, 0};
  const double pi = std::numbers::pi;
  for (int M = M_lo; M <= M_hi; ++M)
    for (int N = N_lo; N <= N_hi; ++N)
      for (int j = 0; j <= 2 * N; ++j) {
        double c = std::cos(pi / N);
        double g = std::abs(4 * c * c - 4 * std::cos(pi / M) - 2 * std::cos(j * pi / N));
        if (g < best.gap) best = {g, M, N, j};
      }
  return best;
}

}  // namespace tlab
