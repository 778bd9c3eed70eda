// tlab: command-line front end.
//
// Exit status: 0 on success (including "does not exist" / "unbounded" style
// verdicts), 1 on domain errors, 2 on usage errors.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "tlab/complexes.hpp"
#include "tlab/contpoly.hpp"
#include "tlab/fusion.hpp"
#include "tlab/sl2model.hpp"
#include "tlab/tldiag.hpp"
#include "tlab/verify.hpp"

using namespace tlab;
using nlohmann::json;

namespace {

struct Options {
  std::string ring = "ratfun:ratfun:Q";
  std::string d1 = "t", d2 = "u";
  unsigned n = 4;
  unsigned upto = 6;
  std::string builtin, fusion, object;
  unsigned max_n = kDefaultMaxN;
  std::string format = "text";
  std::string model = "sl2";
  std::string q = "q";
  std::string strategy = "auto";
  std::string variant = "lower";
  std::string letter = "^";
  bool cyclotomic = false;
};

// Usage errors detected after CLI11 has finished parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Triple triple(const Options& o) { return make_triple(o.ring, o.d1, o.d2); }

FusionRing fusion_ring(const Options& o) {
  if (o.builtin.empty() == o.fusion.empty()) throw UsageError("give exactly one of --builtin and --fusion");
  return o.builtin.empty() ? load_fusion_ring_file(o.fusion) : builtin_ring(o.builtin);
}

int cmd_qnum(const Options& o) {
  QuantumTable t = quantum_table(triple(o), o.upto);
  if (json_out(o)) {
    json j{{"triple", t.triple.str()}, {"qnum", json::array()}, {"qqnum", json::array()}};
    for (unsigned k = 0; k <= o.upto; ++k) {
      j["qnum"].push_back(t.qnum[k].str());
      j["qqnum"].push_back(t.qqnum[k].str());
    }
    emit(j);
    return 0;
  }
  std::cout << t.triple.str() << "\n";
  for (unsigned k = 1; k <= o.upto; ++k) {
    if (o.cyclotomic) std::cout << "[[" << k << "]] = " << t.qqnum[k].str() << "\n";
    else std::cout << "[" << k << "] = " << t.qnum[k].str() << "\n";
  }
  return 0;
}

int cmd_jw(const Options& o) {
  JWResult r = jw(triple(o), o.n, parse_strategy(o.strategy));
  if (json_out(o)) {
    json j{{"n", o.n}, {"exists", r.exists()}};
    if (r.exists()) {
      j["strategy"] = to_string(r.used);
      j["morphism"] = r.jw->str();
    } else {
      j["reason"] = r.reason;
    }
    emit(j);
    return 0;
  }
  if (r.exists()) std::cout << "JW_" << o.n << " (" << to_string(r.used) << "): " << r.jw->str() << "\n";
  else std::cout << "JW_" << o.n << ": does not exist (" << r.reason << ")\n";
  return 0;
}

int cmd_rotatable(const Options& o) {
  RotatabilityReport r = rotatability(triple(o), o.n);
  if (json_out(o)) {
    emit({{"n", o.n},
          {"verdict", to_string(r.verdict)},
          {"binomials_vanish", r.binomials_vanish},
          {"cyclotomic_vanish", r.cyclotomic_vanish},
          {"criteria_agree", r.criteria_agree},
          {"evidence", r.evidence}});
    return 0;
  }
  std::cout << "JW_" << o.n << ": " << to_string(r.verdict) << "\n" << r.evidence << "\n";
  return 0;
}

Continuant continuant(const Triple& t, const Options& o) {
  if (o.variant != "lower" && o.variant != "upper") throw UsageError("--variant must be lower or upper");
  Word w = parse_word(o.letter);
  if (w.size() != 1) throw UsageError("--letter must be a single letter");
  return build_continuant(o.n, o.variant == "lower" ? Variant::Lower : Variant::Upper, t, w[0]);
}

int cmd_continuant(const Options& o) {
  Continuant E = continuant(triple(o), o);
  ValidationReport v = validate(E);
  if (json_out(o)) {
    json j = to_json(E.complex);
    j["n"] = o.n;
    j["k0_class"] = k0_class(E.complex).str();
    j["valid"] = v.ok;
    j["failures"] = v.failures;
    emit(j);
  } else {
    std::cout << summary(E.complex);
    std::cout << "class in K0: " << k0_class(E.complex).str() << "\n";
    std::cout << (v.ok ? "d^2 = 0 and census verified (" + std::to_string(v.checks) + " checks)" : "INVALID") << "\n";
    for (const auto& f : v.failures) std::cout << "  " << f << "\n";
  }
  return v.ok ? 0 : 1;
}

int cmd_homology(const Options& o) {
  if (o.model == "2tl") {
    // nothing to compute beyond the formal complex itself
    return cmd_continuant(o);
  }
  if (o.model != "sl2") throw UsageError("--model must be 2tl or sl2");
  FiberParams P = make_fiber(o.ring, o.q);
  Continuant E = continuant(P.triple(), o);
  HomologyReport h = homology(E.complex, P);
  if (json_out(o)) {
    json j = to_json(h);
    j["n"] = o.n;
    j["q"] = P.q.str();
    emit(j);
  } else {
    std::cout << "E_" << o.n << " at q = " << P.q.str() << " over " << P.field->spec() << "\n" << to_string(h);
  }
  return 0;
}

K0Vector object_class(const FusionRing& r, const std::string& object) {
  for (std::size_t i = 0; i < r.rank(); ++i)
    if (r.basis[i] == object) return basis_vector(r, i);
  return parse_class(r, object);
}

int cmd_bound(const Options& o) {
  FusionRing r = fusion_ring(o);
  if (o.object.empty()) throw UsageError("--object is required");
  BoundReport b = minimal_bound(r, object_class(r, o.object), o.max_n);
  if (json_out(o)) emit(to_json(r, b));
  else std::cout << b.summary() << "\n";
  return 0;
}

int cmd_classify(const Options& o) {
  FusionRing r = fusion_ring(o);
  auto reports = classify_all(r, o.max_n);
  if (json_out(o)) {
    json j{{"ring", r.name}, {"objects", json::array()}};
    for (const auto& b : reports) j["objects"].push_back(to_json(r, b));
    emit(j);
  } else {
    std::cout << classification_table(r, reports);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  auto items = run_verification();
  std::size_t failed = 0;
  json j = json::array();
  for (const auto& it : items) {
    failed += !it.passed;
    if (json_out(o)) j.push_back({{"name", it.name}, {"passed", it.passed}, {"detail", it.detail}});
    else std::cout << (it.passed ? "PASS  " : "FAIL  ") << it.name << (it.passed ? "" : ": " + it.detail) << "\n";
  }
  if (json_out(o)) emit({{"items", j}, {"failed", failed}});
  else std::cout << items.size() - failed << "/" << items.size() << " passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-colour Temperley-Lieb and continuant complex toolkit"};
  app.require_subcommand(1);
  Options o;

  auto triple_flags = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "coefficient ring, e.g. Q, Fp:5, cyclo:10, ratfun:Q");
    s->add_option("--d1", o.d1, "counter-clockwise loop value");
    s->add_option("--d2", o.d2, "clockwise loop value");
  };
  auto format_flag = [&](CLI::App* s) {
    s->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  };
  auto fusion_flags = [&](CLI::App* s) {
    s->add_option("--builtin", o.builtin, "slq:N, verp:p, ising, ty_z3, pointed:m");
    s->add_option("--fusion", o.fusion, "JSON file with a fusion ring");
    s->add_option("--max-n", o.max_n)->check(CLI::Range(3u, 100000u));
    format_flag(s);
  };

  auto* qn = app.add_subcommand("qnum", "quantum numbers [1]..[upto]");
  triple_flags(qn);
  qn->add_option("--upto", o.upto)->check(CLI::Range(0u, 500u));
  qn->add_flag("--cyclotomic", o.cyclotomic, "print [[k]] instead");
  format_flag(qn);

  auto* j = app.add_subcommand("jw", "Jones-Wenzl projector");
  triple_flags(j);
  j->add_option("--n", o.n)->check(CLI::Range(1u, 12u));
  j->add_option("--strategy", o.strategy)->check(CLI::IsMember({"auto", "solve", "recursion", "lift"}));
  format_flag(j);

  auto* rot = app.add_subcommand("rotatable", "rotatability of JW_n");
  triple_flags(rot);
  rot->add_option("--n", o.n)->check(CLI::Range(1u, 12u));
  format_flag(rot);

  auto complex_flags = [&](CLI::App* s) {
    s->add_option("--n", o.n)->check(CLI::Range(0u, 14u));
    s->add_option("--variant", o.variant)->check(CLI::IsMember({"lower", "upper"}));
    s->add_option("--letter", o.letter, "^ or v");
    format_flag(s);
  };
  auto* con = app.add_subcommand("continuant", "the continuant complex E_n");
  triple_flags(con);
  complex_flags(con);

  auto* hom = app.add_subcommand("homology", "homology of E_n in a matrix model");
  hom->add_option("--ring", o.ring, "field for the sl2 model");
  hom->add_option("--q", o.q, "q; loops evaluate to q + q^-1");
  hom->add_option("--d1", o.d1);
  hom->add_option("--d2", o.d2);
  hom->add_option("--model", o.model)->check(CLI::IsMember({"2tl", "sl2"}));
  complex_flags(hom);

  auto* bd = app.add_subcommand("bound", "minimal N with the object strictly N-bounded");
  fusion_flags(bd);
  bd->add_option("--object", o.object, "basis label or class such as 2*1 + ε");

  auto* cl = app.add_subcommand("classify", "bound every basis element");
  fusion_flags(cl);

  auto* ver = app.add_subcommand("verify", "replay the anchored examples");
  format_flag(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "homology" && o.model == "sl2" && o.ring == "ratfun:ratfun:Q") o.ring = "ratfun:Q";
    if (name == "homology" && o.model == "sl2" && o.q == "q" && o.ring.starts_with("ratfun")) o.q = "t";
    if (name == "qnum") return cmd_qnum(o);
    if (name == "jw") return cmd_jw(o);
    if (name == "rotatable") return cmd_rotatable(o);
    if (name == "continuant") return cmd_continuant(o);
    if (name == "homology") return cmd_homology(o);
    if (name == "bound") return cmd_bound(o);
    if (name == "classify") return cmd_classify(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
