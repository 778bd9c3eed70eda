#include "tlab/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "tlab/complexes.hpp"
#include "tlab/contpoly.hpp"
#include "tlab/fusion.hpp"
#include "tlab/sl2model.hpp"
#include "tlab/tldiag.hpp"

namespace tlab {

namespace {

// A check returns the observed value; the item passes when it equals `expect`.
struct Check {
  std::string name;
  std::string expect;
  std::function<std::string()> observe;
};

Triple generic() { return make_triple("ratfun:ratfun:Q", "t", "u"); }
Triple f2() { return make_triple("Fp:2", "0", "0"); }

std::string bound_of(const std::string& ring, const std::string& object) {
  FusionRing r = builtin_ring(ring);
  return minimal_bound(r, r.index_of(object)).verdict_str();
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::vector<Check> checks() {
  std::vector<Check> c;
  c.push_back({"kappa_2", "x^2 - 1", [] { return kappa(2).str(); }});
  c.push_back({"mu_1", "x", [] { return mu(1).str(); }});
  c.push_back({"mu_3", "true", [] {
                 IntPolynomial x = IntPolynomial::x(), y = IntPolynomial::y();
                 return mu(3) == x * (x * y - IntPolynomial::constant(2)) ? "true" : mu(3).str();
               }});
  c.push_back({"[2] in the generic tower", "t", [] { return qnum(generic(), 2).first.str(); }});
  c.push_back({"[3] in the generic tower", "true", [] {
                 Triple t = generic();
                 return qnum(t, 3).first == t.ring->parse_element("t*u - 1") ? "true" : qnum(t, 3).first.str();
               }});
  c.push_back({"[4] in the generic tower", "true", [] {
                 Triple t = generic();
                 return qnum(t, 4).first == t.ring->parse_element("t*(t*u - 2)") ? "true" : qnum(t, 4).first.str();
               }});
  c.push_back({"binom(4,2) in the generic tower", "true", [] {
                 Triple t = generic();
                 RingValue b = qbinom(t, 4, 2);
                 return b == t.ring->parse_element("(t*u - 2)*(t*u - 1)") ? "true" : b.str();
               }});
  c.push_back({"binom(5,2) over (F_2, 0, 0)", "0", [] { return qbinom(f2(), 5, 2).str(); }});
  c.push_back({"diagram basis of TL_3", "5", [] { return std::to_string(enumerate_basis(alt(3), alt(3)).size()); }});
  c.push_back({"JW_1 is the identity", "true", [] {
                 Triple t = generic();
                 return *jw(t, 1).jw == TLMorphism::identity(t, alt(1)) ? "true" : "false";
               }});
  c.push_back({"JW_5 over (F_2, 0, 0)", "does not exist (Hazi: binom(5,2)=0)", [] {
                 auto r = jw(f2(), 5);
                 return r.exists() ? std::string("exists") : "does not exist (" + r.reason + ")";
               }});
  c.push_back({"p_2(JW_2) = ([3]/[2]) JW_1", "true", [] {
                 Triple t = generic();
                 TLMorphism lhs = partial_trace(*jw(t, 2).jw);
                 TLMorphism rhs = t.ring->parse_element("(t*u - 1)/t") * TLMorphism::identity(t, alt(1));
                 return lhs == rhs ? "true" : lhs.str();
               }});
  c.push_back({"rotatability of JW_5 over (F_2, 0, 0)", "NoJW", [] { return to_string(rotatability(f2(), 5).verdict); }});
  c.push_back({"JW_1 is always rotatable", "Rotatable", [] {
                 std::string out = to_string(rotatability(generic(), 1).verdict);
                 for (const char* s : {"Fp:2", "Fp:3", "Q"})
                   if (to_string(rotatability(make_triple(s, "0", "0"), 1).verdict) != out) return std::string(s);
                 return out;
               }});
  c.push_back({"E_2 is the shifted cone of ev", "true", [] {
                 Triple t = generic();
                 FormalObject unit{{Word{}}}, vu{{parse_word("v^")}};
                 FormalComplex one = FormalComplex::concentrated(t, unit);
                 FormalMorphism e(t, vu, unit);
                 e.at(0, 0) = build_continuant(2, Variant::Lower, t).complex.d(0).at(0, 0);
                 ChainMap ev;
                 ev.components.emplace(0, e);
                 bool ok = shift(cone(ev, FormalComplex::concentrated(t, vu), one), -1) ==
                           build_continuant(2, Variant::Lower, t).complex;
                 return ok ? "true" : "false";
               }});
  c.push_back({"E_2 terms", "0: ∨∧; -1: ∅", [] {
                 auto E = build_continuant(2, Variant::Lower, generic()).complex;
                 return "0: " + word_str(E.term(0).summands.at(0)) + "; -1: " + word_str(E.term(-1).summands.at(0));
               }});
  c.push_back({"E_4 term multiplicities", "1,3,1", [] {
                 auto E = build_continuant(4, Variant::Lower, generic()).complex;
                 std::string out;
                 for (int i = 0; i >= -2; --i) out += (i ? "," : "") + std::to_string(E.term(i).size());
                 return out;
               }});
  c.push_back({"E_4 middle summands", "∨∧,∨∧,∨∧", [] {
                 auto E = build_continuant(4, Variant::Lower, generic()).complex;
                 std::string out;
                 for (const auto& w : E.term(-1).summands) out += (out.empty() ? "" : ",") + word_str(w);
                 return out;
               }});
  c.push_back({"class of E_2", "x*y - 1", [] { return k0_class(build_continuant(2, Variant::Lower, generic()).complex).str(); }});
  c.push_back({"Ising ring loads", "3", [] {
                 FusionRing r = builtin_ring("ising");
                 return std::to_string(load_fusion_ring(to_json(r)).rank());
               }});
  c.push_back({"verp:5 rank and L1*L1", "4; L0 + L2", [] {
                 FusionRing r = builtin_ring("verp:5");
                 return std::to_string(r.rank()) + "; " + str(r, multiply(r, basis_vector(r, 1), basis_vector(r, 1)));
               }});
  c.push_back({"FPdim of σ", "1.414213562", [] {
                 FusionRing r = builtin_ring("ising");
                 return fixed(fpdim(r, r.index_of("σ")), 9);
               }});
  c.push_back({"FPdim of bounded objects for N = 2..6", "0.000000 1.000000 1.414214 1.618034 1.732051", [] {
                 FusionRing s5 = builtin_ring("slq:5"), ising = builtin_ring("ising"), ty = builtin_ring("ty_z3");
                 std::vector<double> d{fpdim(ising, K0Vector(3, 0)), fpdim(ising, ising.unit), fpdim(ising, 2), fpdim(s5, 1),
                                       fpdim(ty, 3)};
                 std::string out;
                 for (double x : d) out += (out.empty() ? "" : " ") + fixed(x, 6);
                 return out;
               }});
  c.push_back({"σ in Ising", "strictly 4-bounded", [] { return bound_of("ising", "σ"); }});
  c.push_back({"X in ty_z3", "strictly 6-bounded", [] { return bound_of("ty_z3", "X"); }});
  c.push_back({"L1 in verp:5", "strictly 5-bounded", [] { return bound_of("verp:5", "L1"); }});
  c.push_back({"unit objects are 3-bounded", "true", [] {
                 for (const auto& name : builtin_names()) {
                   FusionRing r = builtin_ring(name);
                   if (minimal_bound(r, r.unit).N != 3) return name;
                 }
                 return std::string("true");
               }});
  c.push_back({"Ising classification", "3,3,4", [] {
                 std::string out;
                 for (const auto& b : classify_all(builtin_ring("ising"))) out += (out.empty() ? "" : ",") + std::to_string(b.N);
                 return out;
               }});
  c.push_back({"Ising sequence for σ", "1, σ, ε, 0", [] {
                 FusionRing r = builtin_ring("ising");
                 std::string out;
                 for (const auto& e : continuant_sequence(r, basis_vector(r, 2), 3)) out += (out.empty() ? "" : ", ") + str(r, e);
                 return out;
               }});
  c.push_back({"ty_z3 sequence for X", "1, X, g + g^2, X, 1, 0", [] {
                 FusionRing r = builtin_ring("ty_z3");
                 std::string out;
                 for (const auto& e : continuant_sequence(r, basis_vector(r, 3), 5)) out += (out.empty() ? "" : ", ") + str(r, e);
                 return out;
               }});
  return c;
}

}  // namespace

std::vector<VerifyItem> run_verification() {
  std::vector<VerifyItem> out;
  for (const auto& c : checks()) {
    VerifyItem item{c.name, false, ""};
    try {
      item.detail = c.observe();
      item.passed = item.detail == c.expect;
      if (!item.passed) item.detail = "expected " + c.expect + ", got " + item.detail;
    } catch (const std::exception& e) {
      item.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace tlab
