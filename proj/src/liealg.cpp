#include "jpair/liealg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "jpair/chart.hpp"
#include "jpair/error.hpp"
#include "jpair/svar.hpp"

namespace jpair {

namespace {

RatVec unit_vec(int d, int i) {
  RatVec v(d);
  v[i] = Rat(1);
  return v;
}

void axpy(const Rat& c, const RatVec& x, RatVec& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

RatVec scaled(const Rat& c, const RatVec& x) {
  RatVec v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = c * x[i];
  return v;
}

std::string at_triple(int i, int j, int k) {
  std::ostringstream os;
  os << " at basis triple (" << i << ", " << j << ", " << k << ")";
  return os.str();
}

}  // namespace

RatVec LieAlgebraTensor::bracket(const RatVec& x, const RatVec& y) const {
  RatVec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      axpy(x[i] * y[j], bracket(i, j), out);
    }
  }
  return out;
}

LieAlgebraTensor make_lie_algebra(int dim, const std::function<RatVec(int, int)>& slot,
                                  std::string name) {
  require(dim >= 0, "lie algebra dimension must be nonnegative");
  LieAlgebraTensor g;
  g.dim_ = dim;
  g.name_ = name.empty() ? "lie:" + std::to_string(dim) : std::move(name);
  g.table_.reserve(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      RatVec v = slot(i, j);
      require(static_cast<int>(v.size()) == dim, g.name_ + ": bracket slot has wrong dimension");
      g.table_.push_back(std::move(v));
    }
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      RatVec s = g.bracket(i, j);
      axpy(Rat(1), g.bracket(j, i), s);
      require(is_zero(s), g.name_ + ": bracket is not antisymmetric at basis pair (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  // Ordered triples suffice: once the bracket is antisymmetric the Jacobi sum
  // is alternating in its three arguments.
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        RatVec s = g.bracket(g.bracket(i, j), unit_vec(dim, k));
        axpy(Rat(1), g.bracket(g.bracket(j, k), unit_vec(dim, i)), s);
        axpy(Rat(1), g.bracket(g.bracket(k, i), unit_vec(dim, j)), s);
        require(is_zero(s), g.name_ + ": Jacobi identity fails" + at_triple(i, j, k));
      }
  return g;
}

bool lie_homomorphism(const LieAlgebraTensor& dom, const LieAlgebraTensor& cod,
                      const RatMatrix& map) {
  require(map.rows() == cod.dim() && map.cols() == dom.dim(),
          "lie_homomorphism: map shape does not match the algebras");
  for (int i = 0; i < dom.dim(); ++i)
    for (int j = i + 1; j < dom.dim(); ++j)
      if (cod.bracket(map.col(i), map.col(j)) != map * dom.bracket(i, j)) return false;
  return true;
}

RatMatrix killing_form(const LieAlgebraTensor& g) {
  const int d = g.dim();
  std::vector<RatMatrix> ad;
  ad.reserve(d);
  for (int i = 0; i < d; ++i) {
    RatMatrix m(d, d);
    for (int k = 0; k < d; ++k) {
      const RatVec& v = g.bracket(i, k);
      for (int r = 0; r < d; ++r) m.at(r, k) = v[r];
    }
    ad.push_back(std::move(m));
  }
  RatMatrix kf(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat t = (ad[i] * ad[j]).trace();
      kf.at(i, j) = t;
      kf.at(j, i) = t;
    }
  return kf;
}

LieAlgebraTensor a_orth_algebra(const ExactMatrix& a) {
  require(a.field() != Field::quaternion,
          "a_orth_algebra: alternating matrix models exist over R and C only");
  require(a.rows() == a.cols() && a.rows() >= 2,
          "a_orth_algebra: parameter must be square of size at least 2");
  require(a.transpose() == a, "a_orth_algebra: parameter must be symmetric");
  const Chart chart = make_chart(ModelKind::asym, a.field(), a.rows(), a.rows());
  std::string name =
      std::string("aorth:") + field_name(a.field()) + ":" + std::to_string(a.rows());
  return make_lie_algebra(
      chart.dim(),
      [&](int i, int j) {
        const ExactMatrix& x = chart.basis_at(i);
        const ExactMatrix& y = chart.basis_at(j);
        return chart.to_coords(x * a * y - y * a * x);
      },
      std::move(name));
}

LieAlgebraTensor a_gl_algebra(const ExactMatrix& a) {
  require(a.rows() >= 1 && a.cols() >= 1, "a_gl_algebra: parameter must be nonempty");
  const int p = a.cols(), q = a.rows();
  const Chart chart = make_chart(ModelKind::rect, a.field(), p, q);
  std::string name = std::string("agl:") + field_name(a.field()) + ":" + std::to_string(p) +
                     "x" + std::to_string(q);
  return make_lie_algebra(
      chart.dim(),
      [&](int i, int j) {
        const ExactMatrix& x = chart.basis_at(i);
        const ExactMatrix& y = chart.basis_at(j);
        return chart.to_coords(x * a * y - y * a * x);
      },
      std::move(name));
}

GradedImbedding standard_imbedding(const TripleTensor& r, std::string name) {
  const int d = r.dim();
  TripleAxiomReport ax = check_triple_axioms(r, TripleKind::lts);
  require(ax.pass, "standard_imbedding: input is not a Lie triple system");

  auto flatten = [d](const RatMatrix& m) {
    RatVec v(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v[static_cast<std::size_t>(i) * d + j] = m.at(i, j);
    return v;
  };

  std::vector<RatVec> rows;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      rows.push_back(flatten(left_multiplication(r, unit_vec(d, i), unit_vec(d, j))));
  Subspace h = Subspace::span(rows, d * d);
  const int hd = h.dim();

  std::vector<RatMatrix> hb;
  hb.reserve(hd);
  RatMatrix bt(d * d, hd);  // columns: flattened h basis, for coordinate solves
  for (int a = 0; a < hd; ++a) {
    RatMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = h.basis_rows().at(a, i * d + j);
    for (int s = 0; s < d * d; ++s) bt.at(s, a) = h.basis_rows().at(a, s);
    hb.push_back(std::move(m));
  }
  auto h_coords = [&](const RatMatrix& m) {
    std::optional<RatVec> s = solve(bt, flatten(m));
    require(s.has_value(), "standard_imbedding: derivation span is not closed");
    return *s;
  };

  const int n = d + hd;
  auto embed_q = [&](const RatVec& v) {
    RatVec out(n);
    for (int i = 0; i < d; ++i) out[i] = v[i];
    return out;
  };
  auto embed_h = [&](const RatVec& v) {
    RatVec out(n);
    for (int a = 0; a < hd; ++a) out[d + a] = v[a];
    return out;
  };

  std::string nm = name.empty()
                       ? "imbedding:" + std::to_string(d) + "+" + std::to_string(hd)
                       : std::move(name);
  LieAlgebraTensor g = make_lie_algebra(
      n,
      [&](int i, int j) -> RatVec {
        const bool iq = i < d, jq = j < d;
        if (iq && jq)
          return embed_h(h_coords(left_multiplication(r, unit_vec(d, i), unit_vec(d, j))));
        if (!iq && jq) return embed_q(hb[i - d].col(j));
        if (iq && !jq) return embed_q(scaled(Rat(-1), hb[j - d].col(i)));
        const RatMatrix& da = hb[i - d];
        const RatMatrix& db = hb[j - d];
        return embed_h(h_coords(da * db - db * da));
      },
      std::move(nm));

  RatVec sig(n, Rat(1));
  for (int i = 0; i < d; ++i) sig[i] = Rat(-1);
  return GradedImbedding{std::move(g), d, hd, RatMatrix::diagonal(sig), std::move(hb)};
}

// ---- low-dimensional identifications --------------------------------------------

namespace {

// hat(x) v = x cross v on column vectors, entry convention hat(e1) = E32 - E23.
ExactMatrix hat_map(const ExactMatrix& x) {
  ExactMatrix m(x.field(), 3, 3);
  const Scalar &x1 = x.at(0, 0), &x2 = x.at(0, 1), &x3 = x.at(0, 2);
  m.at(0, 1) = -x3;
  m.at(0, 2) = x2;
  m.at(1, 0) = x3;
  m.at(1, 2) = -x1;
  m.at(2, 0) = -x2;
  m.at(2, 1) = x1;
  return m;
}

Rat real_part(const Scalar& s, const char* what) {
  require(s.is_real(), std::string(what) + " takes a non-real value");
  return s.comp(0);
}

Scalar det2(const ExactMatrix& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

Scalar pf4(const ExactMatrix& m) {
  return m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) + m.at(0, 3) * m.at(1, 2);
}

// adj(Y) Y = det(Y) I for any 2x2 Y.
ExactMatrix adj2(const ExactMatrix& m) {
  ExactMatrix out(m.field(), 2, 2);
  out.at(0, 0) = m.at(1, 1);
  out.at(1, 1) = m.at(0, 0);
  out.at(0, 1) = -m.at(0, 1);
  out.at(1, 0) = -m.at(1, 0);
  return out;
}

// star(X) X = pf(X) I for alternating 4x4 X; an involution.
ExactMatrix star4(const ExactMatrix& m) {
  ExactMatrix out(m.field(), 4, 4);
  auto set = [&](int i, int j, Scalar v) {
    out.at(j, i) = -v;
    out.at(i, j) = std::move(v);
  };
  set(0, 1, -m.at(2, 3));
  set(0, 2, m.at(1, 3));
  set(0, 3, -m.at(1, 2));
  set(1, 2, -m.at(0, 3));
  set(1, 3, m.at(0, 2));
  set(2, 3, -m.at(0, 1));
  return out;
}

IsomorphismCertificate hat_identification(const std::string& which, Field f) {
  IsomorphismCertificate cert;
  cert.which = which;
  PairPtr v = make_rect(f, 1, 3);
  PairPtr w = make_asym(f, 3);
  const Chart& cv = v->chart(Side::plus);
  const Chart& cw = w->chart(Side::plus);
  const int d = cv.dim();
  RatMatrix j = coordinate_matrix(cv, cw, hat_map);
  cert.space_match = cw.dim() == d && rank_kernel_image(j).rank == d;
  const TripleTensor& tv = v->cartan_jts();
  const TripleTensor& tw = w->cartan_jts();
  for (const Rat& s : {Rat(1), Rat(-1)}) {
    bool ok = true;
    for (int a = 0; a < d && ok; ++a)
      for (int b = 0; b < d && ok; ++b)
        for (int c = 0; c < d && ok; ++c) {
          RatVec lhs = triple_eval(tw, j.col(a), j.col(b), j.col(c));
          RatVec rhs =
              j * triple_eval(tv, unit_vec(d, a), unit_vec(d, b), unit_vec(d, c));
          ok = lhs == scaled(s, rhs);
        }
    if (ok) {
      cert.intertwined = true;
      cert.scalar = s;
      cert.twist = "cross-product";
      cert.identity = "T_asym(jx, jy, jz) = s j T_rect(x, y, z) for j the hat map";
      return cert;
    }
  }
  cert.detail = "no global sign intertwines the Cartan triple systems";
  return cert;
}

using ModelMap = std::function<ExactMatrix(const ExactMatrix&)>;

IsomorphismCertificate spin_identification(const std::string& which, const PairPtr& p,
                                           const std::function<Scalar(const ExactMatrix&)>& q,
                                           const char* qname,
                                           const std::vector<std::pair<std::string, ModelMap>>& twists,
                                           std::pair<int, int> expected) {
  IsomorphismCertificate cert;
  cert.which = which;
  const Chart& cp = p->chart(Side::plus);
  const Chart& cm = p->chart(Side::minus);
  const int d = cp.dim();

  // Polarized Gram of q on the plus chart.
  RatMatrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat b = (real_part(q(cp.basis_at(i) + cp.basis_at(j)), qname) -
               real_part(q(cp.basis_at(i)), qname) - real_part(q(cp.basis_at(j)), qname)) /
              Rat(2);
      gram.at(i, j) = b;
      gram.at(j, i) = b;
    }
  Congruence cg = congruent_diagonalize(gram);
  int pos = 0, neg = 0;
  for (int i = 0; i < d; ++i) {
    int s = cg.diag.at(i, i).sign();
    pos += s > 0;
    neg += s < 0;
  }
  cert.signature = std::make_pair(pos, neg);
  cert.space_match =
      pos + neg == d && std::minmax(pos, neg) == std::minmax(expected.first, expected.second);
  if (pos + neg != d) {
    cert.detail = std::string("the polarized ") + qname + " form is degenerate";
    return cert;
  }

  PairPtr spin = make_spin(gram);
  std::ostringstream misses;
  for (const auto& [tname, tfun] : twists) {
    RatMatrix psi = coordinate_matrix(cm, cm, tfun);
    std::optional<Rat> c;
    bool ok = true;
    for (int a = 0; a < d && ok; ++a)
      for (int b = 0; b < d && ok; ++b)
        for (int e = 0; e < d && ok; ++e) {
          RatVec lhs = triple_coords(*p, Side::plus, unit_vec(d, a), unit_vec(d, b),
                                     unit_vec(d, e));
          RatVec rhs = triple_coords(*spin, Side::plus, unit_vec(d, a), psi.col(b),
                                     unit_vec(d, e));
          if (!c)
            for (int m = 0; m < d; ++m)
              if (!rhs[m].is_zero()) {
                c = lhs[m] / rhs[m];
                break;
              }
          ok = c ? lhs == scaled(*c, rhs) : is_zero(lhs);
          if (!ok) misses << tname << ": plus identity fails" << at_triple(a, b, e) << "; ";
        }
    if (ok && (!c || c->is_zero())) {
      ok = false;
      misses << tname << ": no invertible scalar; ";
    }
    for (int a = 0; a < d && ok; ++a)
      for (int b = 0; b < d && ok; ++b)
        for (int e = 0; e < d && ok; ++e) {
          RatVec lhs = psi * triple_coords(*p, Side::minus, unit_vec(d, a), unit_vec(d, b),
                                           unit_vec(d, e));
          RatVec rhs =
              triple_coords(*spin, Side::minus, psi.col(a), unit_vec(d, b), psi.col(e));
          ok = lhs == scaled(*c, rhs);
          if (!ok) misses << tname << ": minus identity fails" << at_triple(a, b, e) << "; ";
        }
    if (ok) {
      cert.intertwined = true;
      cert.twist = tname;
      cert.scalar = *c;
      cert.identity = std::string("T+(x, y, z) = c T_") + qname +
                      "(x, twist y, z) and twist T-(a, b, e) = c T_" + qname +
                      "(twist a, b, twist e)";
      return cert;
    }
  }
  cert.detail = misses.str();
  return cert;
}

ModelMap identity_map() {
  return [](const ExactMatrix& m) { return m; };
}

}  // namespace

IsomorphismCertificate verify_isomorphism(const std::string& which) {
  if (which == "m13r-asym3r") return hat_identification(which, Field::real);
  if (which == "m13c-asym3c") return hat_identification(which, Field::complex);
  const std::vector<std::pair<std::string, ModelMap>> two_by_two = {
      {"identity", identity_map()}, {"adjugate", adj2}};
  if (which == "sym2r-spin21")
    return spin_identification(which, make_sym(Field::real, 2), det2, "det", two_by_two,
                               {2, 1});
  if (which == "herm2c-spin31")
    return spin_identification(which, make_hermC(2), det2, "det", two_by_two, {3, 1});
  if (which == "m22r-spin22")
    return spin_identification(which, make_rect(Field::real, 2, 2), det2, "det", two_by_two,
                               {2, 2});
  if (which == "asym4r-spin33")
    return spin_identification(which, make_asym(Field::real, 4), pf4, "pf",
                               {{"identity", identity_map()}, {"pfaffian-star", star4}},
                               {3, 3});
  fail("verify_isomorphism: unknown identifier '" + which + "'");
}

}  // namespace jpair
