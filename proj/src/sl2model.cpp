#include "tlab/sl2model.hpp"

#include <sstream>
#include <stdexcept>

namespace tlab {

FiberParams make_fiber(const Ring& field, const RingValue& q) {
  RingValue qq = field.embed(q);
  auto inv = qq.inverse();
  if (!inv) throw NotInvertible("q must be invertible");
  return FiberParams{&field, qq, qq + *inv};
}

FiberParams make_fiber(std::string_view ring_spec, std::string_view q) {
  const Ring& r = construct_ring(ring_spec);
  return make_fiber(r, r.parse_element(q));
}

namespace {

std::size_t word_dim(const Word& w) { return std::size_t{1} << w.size(); }

// Adds the state sum of one diagram, scaled by c, into m at offset (r0, c0).
void add_diagram(ExactMatrix& m, std::size_t r0, std::size_t c0, const Diagram& d, const RingValue& c,
                 const RingValue (&w)[2], const RingValue (&winv)[2]) {
  const std::size_t s = d.source().size(), t = d.target().size();
  const Partner& p = d.partner();
  std::vector<std::size_t> arcs;  // left/lower endpoint of every arc
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > i) arcs.push_back(i);
  auto letter = [&](std::size_t i) { return i < s ? d.source()[i] : d.target()[i - s]; };
  auto bit = [&](std::size_t i) -> std::size_t {  // bit weight of a global point
    return i < s ? std::size_t{1} << (s - 1 - i) : std::size_t{1} << (t - 1 - (i - s));
  };
  for (std::size_t state = 0; state < (std::size_t{1} << arcs.size()); ++state) {
    std::size_t row = 0, col = 0;
    RingValue weight = c;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const std::size_t i = arcs[k], j = p[i];
      const unsigned a = state >> k & 1;
      for (std::size_t e : {i, j})
        if (a) (e < s ? col : row) |= bit(e);
      const bool cap = j < s, cup = i >= s;
      if (cap && letter(i) == Letter::Up) weight = weight * w[a];
      if (cup && letter(i) == Letter::Down) weight = weight * winv[a];
    }
    m.at(r0 + row, c0 + col) = m.at(r0 + row, c0 + col) + weight;
  }
}

void check_params(const Triple& t, const FiberParams& params) {
  if (!(t == params.triple()))
    throw std::invalid_argument("realize: morphism over " + t.str() + ", realization over " + params.triple().str());
}

void add_morphism(ExactMatrix& m, std::size_t r0, std::size_t c0, const TLMorphism& f, const FiberParams& params) {
  const RingValue qinv = *params.q.inverse();
  const RingValue w[2] = {params.q, qinv};
  const RingValue winv[2] = {qinv, params.q};
  for (const auto& [p, c] : f.terms()) add_diagram(m, r0, c0, f.diagram_of(p), c, w, winv);
}

std::size_t object_dim(const FormalObject& x) {
  std::size_t n = 0;
  for (const auto& w : x.summands) n += word_dim(w);
  return n;
}

}  // namespace

ExactMatrix realize(const TLMorphism& f, const FiberParams& params) {
  check_params(f.triple(), params);
  ExactMatrix m(*params.field, word_dim(f.target()), word_dim(f.source()));
  add_morphism(m, 0, 0, f, params);
  return m;
}

ExactMatrix realize(const FormalMorphism& f, const FiberParams& params) {
  check_params(f.triple(), params);
  ExactMatrix m(*params.field, object_dim(f.target()), object_dim(f.source()));
  std::size_t r0 = 0;
  for (std::size_t a = 0; a < f.target().size(); ++a) {
    std::size_t c0 = 0;
    for (std::size_t b = 0; b < f.source().size(); ++b) {
      add_morphism(m, r0, c0, f.at(a, b), params);
      c0 += word_dim(f.source().summands[b]);
    }
    r0 += word_dim(f.target().summands[a]);
  }
  return m;
}

std::size_t HomologyReport::h(int degree) const {
  for (const auto& r : rows)
    if (r.degree == degree) return r.homology;
  return 0;
}

std::vector<int> HomologyReport::support() const {
  std::vector<int> out;
  for (const auto& r : rows)
    if (r.homology) out.push_back(r.degree);
  return out;
}

HomologyReport homology(const FormalComplex& C, const FiberParams& params) {
  HomologyReport rep;
  if (C.degrees().empty()) return rep;
  const int lo = C.min_degree(), hi = C.max_degree();
  std::map<int, ExactMatrix> d;
  std::map<int, std::size_t> rank;
  for (int i = lo + 1; i <= hi; ++i) {
    d[i] = realize(C.d(i), params);
    rank[i] = d[i].rows() && d[i].cols() ? d[i].rank() : 0;
  }
  for (int i = lo + 2; i <= hi; ++i)
    if (d[i - 1].rows() && d[i].cols() && !(d[i - 1] * d[i]).is_zero())
      throw std::logic_error("realized differentials do not square to zero at degree " + std::to_string(i));
  for (int i = hi; i >= lo; --i) {
    HomologyRow r;
    r.degree = i;
    r.dim = object_dim(C.term(i));
    r.rank_out = rank.count(i) ? rank[i] : 0;
    r.image = rank.count(i + 1) ? rank[i + 1] : 0;
    r.kernel = r.dim - r.rank_out;
    r.homology = r.kernel - r.image;
    const long sign = i % 2 ? -1 : 1;
    rep.euler_terms += sign * static_cast<long>(r.dim);
    rep.euler_homology += sign * static_cast<long>(r.homology);
    rep.rows.push_back(r);
  }
  return rep;
}

std::string to_string(const HomologyReport& r) {
  std::ostringstream os;
  os << "degree  dim  rank d  dim H\n";
  for (const auto& row : r.rows) {
    os.width(6);
    os << row.degree;
    os.width(5);
    os << row.dim;
    os.width(8);
    os << row.rank_out;
    os.width(7);
    os << row.homology << "\n";
  }
  os << "Euler characteristic: " << r.euler_homology << "\n";
  return os.str();
}

nlohmann::json to_json(const HomologyReport& r) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"degree", row.degree},
                         {"dim", row.dim},
                         {"rank_d", row.rank_out},
                         {"kernel", row.kernel},
                         {"image", row.image},
                         {"homology", row.homology}});
  j["euler_terms"] = r.euler_terms;
  j["euler_homology"] = r.euler_homology;
  return j;
}

}  // namespace tlab
