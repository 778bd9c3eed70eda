#include "tlab/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tlab {

// ---------------------------------------------------------------- morphisms

FormalMorphism::FormalMorphism(Triple triple, FormalObject source, FormalObject target)
    : triple_(std::move(triple)), source_(std::move(source)), target_(std::move(target)) {
  entries_.reserve(source_.size() * target_.size());
  for (std::size_t i = 0; i < target_.size(); ++i)
    for (std::size_t j = 0; j < source_.size(); ++j)
      entries_.emplace_back(triple_, source_.summands[j], target_.summands[i]);
}

FormalMorphism FormalMorphism::identity(const Triple& t, const FormalObject& x) {
  FormalMorphism m(t, x, x);
  for (std::size_t i = 0; i < x.size(); ++i) m.at(i, i) = TLMorphism::identity(t, x.summands[i]);
  return m;
}

void FormalMorphism::set(std::size_t i, std::size_t j, TLMorphism f) {
  if (i >= target_.size() || j >= source_.size()) throw std::out_of_range("formal morphism entry out of range");
  if (f.source() != source_.summands[j] || f.target() != target_.summands[i])
    throw std::invalid_argument("formal morphism entry has the wrong shape");
  if (!(f.triple() == triple_)) throw RingMismatch("formal morphism entry over another triple");
  at(i, j) = std::move(f);
}

bool FormalMorphism::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const TLMorphism& f) { return f.is_zero(); });
}

FormalMorphism FormalMorphism::operator-() const {
  FormalMorphism r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

FormalMorphism operator+(const FormalMorphism& a, const FormalMorphism& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_))
    throw std::invalid_argument("formal morphisms with different shapes");
  FormalMorphism r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] = r.entries_[k] + b.entries_[k];
  return r;
}

bool operator==(const FormalMorphism& a, const FormalMorphism& b) {
  return a.triple_ == b.triple_ && a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
}

FormalMorphism compose(const FormalMorphism& f, const FormalMorphism& g) {
  if (!(g.target() == f.source())) throw std::invalid_argument("compose: formal objects do not match");
  FormalMorphism r(f.triple(), g.source(), f.target());
  for (std::size_t i = 0; i < f.target().size(); ++i)
    for (std::size_t j = 0; j < g.source().size(); ++j) {
      TLMorphism acc = r.at(i, j);
      for (std::size_t k = 0; k < f.source().size(); ++k) {
        if (f.at(i, k).is_zero() || g.at(k, j).is_zero()) continue;
        acc = acc + compose(f.at(i, k), g.at(k, j));
      }
      r.at(i, j) = std::move(acc);
    }
  return r;
}

namespace {

FormalObject prefix(const Word& w, const FormalObject& x) {
  FormalObject r;
  for (const auto& s : x.summands) r.summands.push_back(concat(w, s));
  return r;
}

}  // namespace

FormalMorphism whisker_left(const Word& w, const FormalMorphism& f) {
  FormalMorphism r(f.triple(), prefix(w, f.source()), prefix(w, f.target()));
  const TLMorphism id = TLMorphism::identity(f.triple(), w);
  for (std::size_t i = 0; i < f.target().size(); ++i)
    for (std::size_t j = 0; j < f.source().size(); ++j)
      if (!f.at(i, j).is_zero()) r.at(i, j) = tensor(id, f.at(i, j));
  return r;
}

// ---------------------------------------------------------------- complexes

FormalComplex FormalComplex::concentrated(const Triple& t, const FormalObject& x, int k) {
  FormalComplex c(t);
  c.set_term(k, x);
  return c;
}

FormalObject FormalComplex::term(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? FormalObject{} : it->second;
}

FormalMorphism FormalComplex::d(int i) const {
  auto it = d_.find(i);
  if (it != d_.end()) return it->second;
  return FormalMorphism(triple_, term(i), term(i - 1));
}

void FormalComplex::set_term(int i, FormalObject x) {
  d_.erase(i);
  d_.erase(i + 1);
  if (x.empty()) terms_.erase(i);
  else terms_[i] = std::move(x);
}

void FormalComplex::set_d(int i, FormalMorphism f) {
  if (!(f.source() == term(i)) || !(f.target() == term(i - 1)))
    throw std::invalid_argument("differential d_" + std::to_string(i) + " has the wrong shape");
  if (f.source().empty() || f.target().empty()) return;
  d_.insert_or_assign(i, std::move(f));
}

std::vector<int> FormalComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [i, x] : terms_) out.push_back(i);
  return out;
}

int FormalComplex::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int FormalComplex::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

bool operator==(const FormalComplex& a, const FormalComplex& b) {
  if (!(a.triple_ == b.triple_) || a.terms_ != b.terms_) return false;
  for (const auto& [i, x] : a.terms_)
    if (!(a.d(i) == b.d(i))) return false;
  return true;
}

FormalMorphism ChainMap::at(int i, const FormalComplex& C, const FormalComplex& D) const {
  auto it = components.find(i);
  if (it != components.end()) return it->second;
  return FormalMorphism(C.triple(), C.term(i), D.term(i));
}

bool is_chain_map(const ChainMap& f, const FormalComplex& C, const FormalComplex& D) {
  for (const auto& [i, fi] : f.components)
    if (!(fi.source() == C.term(i)) || !(fi.target() == D.term(i))) return false;
  int lo = std::min(C.min_degree(), D.min_degree());
  int hi = std::max(C.max_degree(), D.max_degree()) + 1;
  for (int i = lo; i <= hi; ++i) {
    FormalMorphism lhs = compose(D.d(i), f.at(i, C, D));
    FormalMorphism rhs = compose(f.at(i - 1, C, D), C.d(i));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

FormalComplex shift(const FormalComplex& C, int k) {
  FormalComplex r(C.triple());
  for (int i : C.degrees()) r.set_term(i + k, C.term(i));
  for (int i : C.degrees()) {
    FormalMorphism d = C.d(i);
    r.set_d(i + k, k % 2 ? -d : d);
  }
  return r;
}

FormalComplex cone(const ChainMap& f, const FormalComplex& C, const FormalComplex& D) {
  if (!is_chain_map(f, C, D)) throw std::invalid_argument("cone: not a chain map");
  const Triple& t = C.triple();
  FormalComplex r(t);
  int lo = std::min(C.min_degree() + 1, D.min_degree());
  int hi = std::max(C.max_degree() + 1, D.max_degree());
  auto obj = [&](int i) {
    FormalObject x = C.term(i - 1);
    for (const auto& w : D.term(i).summands) x.summands.push_back(w);
    return x;
  };
  for (int i = lo; i <= hi; ++i) r.set_term(i, obj(i));
  for (int i = lo; i <= hi; ++i) {
    FormalMorphism d(t, obj(i), obj(i - 1));
    const std::size_t c_src = C.term(i - 1).size(), c_tgt = C.term(i - 2).size();
    FormalMorphism dc = C.d(i - 1), dd = D.d(i), fi = f.at(i - 1, C, D);
    for (std::size_t a = 0; a < c_tgt; ++a)
      for (std::size_t b = 0; b < c_src; ++b) d.at(a, b) = -dc.at(a, b);
    for (std::size_t a = 0; a < D.term(i - 1).size(); ++a) {
      for (std::size_t b = 0; b < c_src; ++b) d.at(c_tgt + a, b) = -fi.at(a, b);
      for (std::size_t b = 0; b < D.term(i).size(); ++b) d.at(c_tgt + a, c_src + b) = dd.at(a, b);
    }
    r.set_d(i, std::move(d));
  }
  return r;
}

FormalComplex whisker_left(const Word& w, const FormalComplex& C) {
  FormalComplex r(C.triple());
  for (int i : C.degrees()) r.set_term(i, prefix(w, C.term(i)));
  for (int i : C.degrees()) r.set_d(i, whisker_left(w, C.d(i)));
  return r;
}

FormalComplex dual(const FormalComplex& C) {
  FormalComplex r(C.triple());
  for (int i : C.degrees()) {
    FormalObject x;
    for (const auto& w : C.term(i).summands) x.summands.push_back(dual(w));
    r.set_term(-i, std::move(x));
  }
  for (int i : r.degrees()) {
    FormalMorphism d = C.d(-i + 1);  // C_{-i+1} -> C_{-i}
    FormalMorphism dd(C.triple(), r.term(i), r.term(i - 1));
    for (std::size_t a = 0; a < dd.target().size(); ++a)
      for (std::size_t b = 0; b < dd.source().size(); ++b) dd.at(a, b) = rotate(d.at(b, a));
    r.set_d(i, std::move(dd));
  }
  return r;
}

namespace {

FormalMorphism permute_source(const FormalMorphism& f, const std::vector<std::size_t>& perm) {
  FormalObject src;
  for (auto p : perm) src.summands.push_back(f.source().summands.at(p));
  FormalMorphism r(f.triple(), src, f.target());
  for (std::size_t a = 0; a < f.target().size(); ++a)
    for (std::size_t b = 0; b < perm.size(); ++b) r.at(a, b) = f.at(a, perm[b]);
  return r;
}

FormalMorphism permute_target(const FormalMorphism& f, const std::vector<std::size_t>& perm) {
  FormalObject tgt;
  for (auto p : perm) tgt.summands.push_back(f.target().summands.at(p));
  FormalMorphism r(f.triple(), f.source(), tgt);
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = 0; b < f.source().size(); ++b) r.at(a, b) = f.at(perm[a], b);
  return r;
}

}  // namespace

FormalComplex permute(const FormalComplex& C, int i, const std::vector<std::size_t>& perm) {
  if (perm.size() != C.term(i).size()) throw std::invalid_argument("permute: wrong permutation size");
  FormalMorphism out = permute_source(C.d(i), perm);
  FormalMorphism in = permute_target(C.d(i + 1), perm);
  FormalComplex r = C;
  r.set_term(i, out.source());
  r.set_d(i, std::move(out));
  r.set_d(i + 1, std::move(in));
  return r;
}

// ---------------------------------------------------------------- continuants

Letter adjoint_letter(Letter x, unsigned i) { return i % 2 ? dual(x) : x; }

Word continuant_word(Letter x, unsigned n) {
  Word w;
  for (unsigned i = n; i-- > 0;) w.push_back(adjoint_letter(x, i));
  return w;
}

std::vector<Twinned> twinned_subsets(unsigned n, unsigned k) {
  std::vector<Twinned> out;
  Twinned cur;
  auto rec = [&](auto&& self, unsigned from, unsigned left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned i = from; i + 2 * left <= n; ++i) {
      cur.push_back(i);
      cur.push_back(i + 1);
      self(self, i + 2, left - 1);
      cur.resize(cur.size() - 2);
    }
  };
  rec(rec, 0, k);
  return out;
}

Word remove_positions(const Word& w, const Twinned& I) {
  Word r;
  for (std::size_t idx = 0; idx < w.size(); ++idx) {
    unsigned pos = static_cast<unsigned>(w.size() - 1 - idx);
    if (!std::binary_search(I.begin(), I.end(), pos)) r.push_back(w[idx]);
  }
  return r;
}

namespace {

// ev_Y ⊗ id_w on the word Y* Y w, with Y* = y_dual.
TLMorphism evaluation_on(const Triple& t, Letter y_dual, Letter y, const Word& w) {
  Diagram cap({y_dual, y}, {}, Partner{1, 0});
  return tensor(TLMorphism::diagram(t, cap), TLMorphism::identity(t, w));
}

struct Stage {
  FormalComplex E;
  std::map<int, std::vector<Twinned>> labels;
};

// Sorts every degree of s by label; returns the permutation applied per degree.
std::map<int, std::vector<std::size_t>> sort_by_labels(Stage& s) {
  std::map<int, std::vector<std::size_t>> perms;
  for (auto& [i, labs] : s.labels) {
    std::vector<std::size_t> perm(labs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return labs[a] < labs[b]; });
    std::vector<Twinned> sorted;
    for (auto p : perm) sorted.push_back(labs[p]);
    labs = std::move(sorted);
    s.E = permute(s.E, i, perm);
    perms[i] = std::move(perm);
  }
  return perms;
}

Continuant build_lower(unsigned n, const Triple& t, Letter x) {
  std::vector<Stage> st;
  Continuant out{n, Variant::Lower, x, FormalComplex(t), {}, {}, {}};
  out.phi.resize(n + 1);
  out.f.resize(n + 1);

  st.push_back({FormalComplex::concentrated(t, FormalObject{{Word{}}}), {{0, {Twinned{}}}}});
  if (n >= 1) {
    st.push_back({FormalComplex::concentrated(t, FormalObject{{Word{x}}}), {{0, {Twinned{}}}}});
    out.phi[1].components.emplace(0, FormalMorphism::identity(t, FormalObject{{Word{x}}}));
    FormalMorphism ev(t, FormalObject{{Word{dual(x), x}}}, FormalObject{{Word{}}});
    ev.at(0, 0) = evaluation_on(t, dual(x), x, {});
    out.f[1].components.emplace(0, std::move(ev));
  }
  for (unsigned k = 2; k <= n; ++k) {
    const Letter yk = adjoint_letter(x, k - 1);  // X^(k-1)
    const Stage& prev = st[k - 1];
    const Stage& prev2 = st[k - 2];
    const FormalComplex C = whisker_left(Word{yk}, prev.E);
    Stage s{shift(cone(out.f[k - 1], C, prev2.E), -1), {}};

    // E_k in degree i is C_i ⊕ (E_{k-2})_{i+1}.
    for (int i : s.E.degrees()) {
      auto& labs = s.labels[i];
      if (auto it = prev.labels.find(i); it != prev.labels.end()) labs = it->second;
      if (auto it = prev2.labels.find(i + 1); it != prev2.labels.end())
        for (Twinned J : it->second) {
          J.push_back(k - 2);
          J.push_back(k - 1);
          labs.push_back(std::move(J));
        }
    }
    // phi_k projects onto the C part.
    ChainMap phi;
    for (int i : s.E.degrees()) {
      FormalMorphism p(t, s.E.term(i), C.term(i));
      for (std::size_t a = 0; a < C.term(i).size(); ++a) p.at(a, a) = TLMorphism::identity(t, C.term(i).summands[a]);
      if (!C.term(i).empty()) phi.components.emplace(i, std::move(p));
    }
    auto perms = sort_by_labels(s);
    for (auto& [i, p] : phi.components) p = permute_source(p, perms.at(i));

    // f_k = (ev_{X^(k-1)} ⊗ id) ∘ (X^(k) ⊗ phi_k)
    const Letter yk1 = adjoint_letter(x, k);
    ChainMap f;
    for (const auto& [i, p] : phi.components) {
      FormalMorphism lifted = whisker_left(Word{yk1}, p);
      FormalObject tgt = prev.E.term(i);
      FormalMorphism ev(t, lifted.target(), tgt);
      for (std::size_t a = 0; a < tgt.size(); ++a) ev.at(a, a) = evaluation_on(t, yk1, yk, tgt.summands[a]);
      f.components.emplace(i, compose(ev, lifted));
    }
    out.phi[k] = std::move(phi);
    out.f[k] = std::move(f);
    st.push_back(std::move(s));
  }
  out.complex = st[n].E;
  out.labels = st[n].labels;
  return out;
}

}  // namespace

Continuant build_continuant(unsigned n, Variant variant, const Triple& t, Letter x) {
  if (variant == Variant::Lower) return build_lower(n, t, x);
  Continuant low = build_lower(n, t, dual(x));
  return Continuant{n, Variant::Upper, x, dual(low.complex), std::move(low.labels), {}, {}};
}

IntPolynomial k0_class(const FormalComplex& C) {
  IntPolynomial r;
  for (int i : C.degrees())
    for (const auto& w : C.term(i).summands) {
      unsigned up = static_cast<unsigned>(std::count(w.begin(), w.end(), Letter::Up));
      unsigned down = static_cast<unsigned>(w.size()) - up;
      r = r + IntPolynomial::monomial(up, down, i % 2 ? -1 : 1);
    }
  return r;
}

// ---------------------------------------------------------------- validation

namespace {

void check(ValidationReport& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) {
    r.ok = false;
    r.failures.push_back(what);
  }
}

}  // namespace

ValidationReport validate(const FormalComplex& C) {
  ValidationReport r;
  if (C.degrees().empty()) return r;
  for (int i = C.min_degree(); i <= C.max_degree() + 1; ++i) {
    FormalMorphism d = C.d(i);
    bool shapes = d.source() == C.term(i) && d.target() == C.term(i - 1);
    for (std::size_t a = 0; shapes && a < d.target().size(); ++a)
      for (std::size_t b = 0; b < d.source().size(); ++b)
        shapes = shapes && d.at(a, b).source() == d.source().summands[b] &&
                 d.at(a, b).target() == d.target().summands[a];
    check(r, shapes, "d_" + std::to_string(i) + " shape");
    check(r, compose(C.d(i - 1), d).is_zero(), "d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " != 0");
  }
  return r;
}

ValidationReport validate(const Continuant& E) {
  ValidationReport r = validate(E.complex);
  const bool lower = E.variant == Variant::Lower;
  const Letter base = lower ? E.letter : dual(E.letter);
  const Word A = continuant_word(base, E.n);
  for (unsigned k = 0; 2 * k <= E.n; ++k) {
    const int deg = lower ? -static_cast<int>(k) : static_cast<int>(k);
    auto expected = twinned_subsets(E.n, k);
    auto it = E.labels.find(-static_cast<int>(k));
    check(r, it != E.labels.end() && it->second == expected, "census in degree " + std::to_string(deg));
    FormalObject words;
    for (const auto& I : expected) {
      Word w = remove_positions(A, I);
      words.summands.push_back(lower ? w : dual(w));
    }
    check(r, E.complex.term(deg) == words, "summand words in degree " + std::to_string(deg));
  }
  std::size_t total = 0;
  for (int i : E.complex.degrees()) total += E.complex.term(i).size();
  std::size_t expected_total = 0;
  for (unsigned k = 0; 2 * k <= E.n; ++k) expected_total += twinned_subsets(E.n, k).size();
  check(r, total == expected_total, "no stray terms");
  return r;
}

// ---------------------------------------------------------------- output

std::string summary(const FormalComplex& C) {
  std::ostringstream os;
  auto degs = C.degrees();
  for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
    int i = *it;
    os << "degree " << i << ":";
    for (const auto& w : C.term(i).summands) os << " " << word_str(w);
    os << "\n";
    if (C.term(i - 1).empty()) continue;
    FormalMorphism d = C.d(i);
    os << "  d_" << i << " terms:";
    for (std::size_t a = 0; a < d.target().size(); ++a) {
      os << (a ? " |" : "");
      for (std::size_t b = 0; b < d.source().size(); ++b) os << " " << d.at(a, b).terms().size();
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const FormalComplex& C) {
  nlohmann::json j;
  j["triple"] = C.triple().str();
  j["terms"] = nlohmann::json::object();
  j["differentials"] = nlohmann::json::object();
  for (int i : C.degrees()) {
    auto& words = j["terms"][std::to_string(i)] = nlohmann::json::array();
    for (const auto& w : C.term(i).summands) words.push_back(word_str(w));
    if (C.term(i - 1).empty()) continue;
    FormalMorphism d = C.d(i);
    auto& rows = j["differentials"][std::to_string(i)] = nlohmann::json::array();
    for (std::size_t a = 0; a < d.target().size(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t b = 0; b < d.source().size(); ++b) {
        nlohmann::json entry = nlohmann::json::array();
        for (const auto& [p, c] : d.at(a, b).terms())
          entry.push_back({{"coeff", c.str()}, {"diagram", d.at(a, b).diagram_of(p).str()}});
        row.push_back(std::move(entry));
      }
      rows.push_back(std::move(row));
    }
  }
  return j;
}

}  // namespace tlab
