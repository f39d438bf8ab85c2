#include "jpair/families.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jpair/chart.hpp"
#include "jpair/error.hpp"
#include "jpair/linalg.hpp"

namespace jpair {

namespace {

// U+2032 (prime) folds to the ASCII apostrophe the registry uses.
std::string canonical_label(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x80 &&
        static_cast<unsigned char>(s[i + 2]) == 0xB2) {
      out.push_back('\'');
      i += 3;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

const char* param_kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::none: return "absent";
    case ParamKind::full: return "unconstrained";
    case ParamKind::sym: return "symmetric";
    case ParamKind::skew: return "skew-symmetric";
    case ParamKind::herm: return "hermitian";
    case ParamKind::skew_herm: return "skew-hermitian";
  }
  fail("unknown parameter kind");
}

void check_param(const std::string& label, const char* which, const ExactMatrix& m,
                 Field f, int rows, int cols, ParamKind kind) {
  require(m.field() == f, "row " + label + ": parameter " + which + " must have entries in " +
                              field_name(f));
  require(m.rows() == rows && m.cols() == cols,
          "row " + label + ": parameter " + which + " must be " + std::to_string(rows) + "-by-" +
              std::to_string(cols));
  bool ok = true;
  switch (kind) {
    case ParamKind::none:
    case ParamKind::full: break;
    case ParamKind::sym: ok = m.is_symmetric(); break;
    case ParamKind::skew: ok = m.is_skew(); break;
    case ParamKind::herm: ok = m.is_hermitian(); break;
    case ParamKind::skew_herm: ok = m.conj_transpose() == -m; break;
  }
  require(ok, "row " + label + " needs a " + std::string(param_kind_name(kind)) + " " + which);
}

// The row's map on model matrices; membership is verified downstream by
// make_homotopy, so a registry mistake cannot slip through silently.
ExactMatrix apply_row(const FamilyRow& row, const FamilyParams& p, const ExactMatrix& x) {
  const ExactMatrix xin = row.conj_x ? x.conj() : x;
  ExactMatrix out = [&]() -> ExactMatrix {
    switch (row.form) {
      case RowForm::sandwich: {
        const ExactMatrix& a = *p.a;
        if (row.adjoint_second) return a * xin * a.conj_transpose();
        if (row.conj_second) return a * xin * a.conj();
        return a * xin * a;
      }
      case RowForm::transpose_sandwich: return *p.a * xin.transpose() * *p.b;
      case RowForm::border: {
        const ExactMatrix& a = *p.a;
        const ExactMatrix& u = *p.u;
        if (!row.conj_x) {
          // P = u u^t; u^t X u = 0 for alternating X makes this close up.
          ExactMatrix pr = u * u.transpose();
          return pr * xin * a + a * xin * pr;
        }
        // Antilinear border: P = u u^H, second summand conjugated wholesale.
        ExactMatrix pr = u * u.conj_transpose();
        return pr * xin * a + a.conj() * xin * pr.conj();
      }
    }
    fail("unknown row form");
  }();
  return row.negated ? -out : out;
}

}  // namespace

const std::vector<FamilyRow>& family_rows() {
  static const std::vector<FamilyRow> rows = [] {
    std::vector<FamilyRow> v;
    using PK = ParamKind;
    using RF = RowForm;
    // primed=true also registers the negated twin (label + apostrophe); rows
    // whose sign folds into a parameter have no primed twin in the table.
    auto add = [&v](const char* label, PairType pt, RF form, const char* fields, PK a, PK b,
                    bool uses_u, bool conj_x, bool conj2, bool adj2, bool primed) {
      FamilyRow r;
      r.label = label;
      r.pair = pt;
      r.form = form;
      for (const char* f = fields; *f; ++f) {
        if (*f == 'R') r.real_ok = true;
        if (*f == 'C') r.complex_ok = true;
        if (*f == 'H') r.quat_ok = true;
      }
      r.a_kind = a;
      r.b_kind = b;
      r.uses_u = uses_u;
      r.conj_x = conj_x;
      r.conj_second = conj2;
      r.adjoint_second = adj2;
      v.push_back(r);
      if (primed) {
        r.label += '\'';
        r.negated = true;
        v.push_back(std::move(r));
      }
    };
    // rectangular, linear
    add("1.a", PairType::rect, RF::sandwich, "RC", PK::full, PK::none, false, false, false, false, true);
    add("1.b", PairType::rect, RF::transpose_sandwich, "RC", PK::sym, PK::sym, false, false, false, false, false);
    add("1.c", PairType::rect, RF::transpose_sandwich, "RC", PK::skew, PK::skew, false, false, false, false, false);
    // rectangular, antilinear
    add("1.A", PairType::rect, RF::sandwich, "C", PK::full, PK::none, false, true, true, false, true);
    add("1.B", PairType::rect, RF::transpose_sandwich, "C", PK::herm, PK::herm, false, true, false, false, false);
    // rectangular, quaternion
    add("1.3.a", PairType::rect, RF::sandwich, "H", PK::full, PK::none, false, false, false, false, true);
    add("1.3.b", PairType::rect, RF::transpose_sandwich, "H", PK::herm, PK::herm, false, true, false, false, false);
    // symmetric
    add("2.a", PairType::sym, RF::sandwich, "RC", PK::sym, PK::none, false, false, false, false, true);
    add("2.b", PairType::sym, RF::sandwich, "RC", PK::skew, PK::none, false, false, false, false, true);
    add("2.A", PairType::sym, RF::sandwich, "C", PK::herm, PK::none, false, true, true, false, true);
    // alternating
    add("3.a", PairType::asym, RF::sandwich, "RC", PK::skew, PK::none, false, false, false, false, true);
    add("3.b", PairType::asym, RF::sandwich, "RC", PK::sym, PK::none, false, false, false, false, true);
    add("3.c", PairType::asym, RF::border, "RC", PK::sym, PK::none, true, false, false, false, true);
    add("3.A", PairType::asym, RF::sandwich, "C", PK::skew_herm, PK::none, false, true, true, false, true);
    add("3.B", PairType::asym, RF::border, "C", PK::herm, PK::none, true, true, false, false, true);
    // hermitian, complex entries
    add("4.1.a", PairType::hermC, RF::sandwich, "C", PK::herm, PK::none, false, false, false, false, true);
    add("4.1.b", PairType::hermC, RF::sandwich, "C", PK::sym, PK::none, false, true, false, true, true);
    add("4.1.c", PairType::hermC, RF::sandwich, "C", PK::skew, PK::none, false, true, false, true, true);
    // hermitian, quaternion entries
    add("4.2.a", PairType::hermH, RF::sandwich, "H", PK::herm, PK::none, false, false, false, false, true);
    add("4.2.b", PairType::hermH, RF::sandwich, "H", PK::skew_herm, PK::none, false, false, false, false, true);
    return v;
  }();
  return rows;
}

const FamilyRow& family_row(const std::string& label) {
  const std::string key = canonical_label(label);
  for (const auto& r : family_rows())
    if (r.label == key) return r;
  for (const char* s : {"1.3.c", "4.3.a", "4.3.a'", "4.3.b", "4.3.b'"})
    if (key == s) fail("out-of-scope scalar: row " + key + " needs split quaternions");
  fail("unknown classification row '" + label + "'");
}

FamilyMember family_alpha(const PairPtr& p, const std::string& label, const FamilyParams& params) {
  require(p != nullptr, "classification row over a null pair");
  const FamilyRow& row = family_row(label);
  require(p->has_charts() && p->type() == row.pair,
          "row " + row.label + " does not apply to " + p->name());
  const Field f = p->field();
  const bool field_ok = (f == Field::real && row.real_ok) ||
                        (f == Field::complex && row.complex_ok) ||
                        (f == Field::quaternion && row.quat_ok);
  require(field_ok, "row " + row.label + " is not defined over " + std::string(field_name(f)));

  const Chart& cp = p->chart(Side::plus);
  const int mr = cp.model_rows(), mc = cp.model_cols();
  require(params.a.has_value(), "row " + row.label + " needs parameter A");
  switch (row.form) {
    case RowForm::sandwich:
      check_param(row.label, "A", *params.a, f, row.a_kind == ParamKind::full ? mc : mr,
                  row.a_kind == ParamKind::full ? mr : mc, row.a_kind);
      break;
    case RowForm::transpose_sandwich:
      require(params.b.has_value(), "row " + row.label + " needs parameter B");
      check_param(row.label, "A", *params.a, f, mc, mc, row.a_kind);
      check_param(row.label, "B", *params.b, f, mr, mr, row.b_kind);
      break;
    case RowForm::border:
      require(params.u.has_value(), "row " + row.label + " needs parameter u");
      check_param(row.label, "A", *params.a, f, mr, mc, row.a_kind);
      check_param(row.label, "u", *params.u, f, mr, 1, ParamKind::full);
      break;
  }
  if (row.form != RowForm::transpose_sandwich)
    require(!params.b.has_value(), "row " + row.label + " takes no parameter B");
  if (!row.uses_u)
    require(!params.u.has_value(), "row " + row.label + " takes no parameter u");

  RatMatrix m = coordinate_matrix(cp, p->chart(Side::minus),
                                  [&](const ExactMatrix& e) { return apply_row(row, params, e); });
  RankKernelImage rki = rank_kernel_image(m);
  Subspace img = Subspace::span(rki.image, m.rows());
  Subspace ker = Subspace::span(rki.kernel, m.cols());
  Homotopy h = make_homotopy(p, Side::plus, std::move(m), row.conj_x && f == Field::complex);
  return FamilyMember{std::move(h), row, rki.rank, std::move(img), std::move(ker)};
}

FamilyParams random_family_params(const FamilyRow& row, const JordanPair& p, SeededRng& rng) {
  const Field f = p.field();
  auto draw = [&](int r, int c) {
    ExactMatrix m(f, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        for (int k = 0; k < field_components(f); ++k) m.at(i, j).comp(k) = Rat(rng.range(-3, 3));
    return m;
  };
  auto shaped = [&](ParamKind kind, int n) {
    ExactMatrix m = draw(n, n);
    switch (kind) {
      case ParamKind::sym: return m + m.transpose();
      case ParamKind::skew: return m - m.transpose();
      case ParamKind::herm: return m + m.conj_transpose();
      case ParamKind::skew_herm: return m - m.conj_transpose();
      default: return m;
    }
  };
  const int mr = p.chart(Side::plus).model_rows();
  const int mc = p.chart(Side::plus).model_cols();
  FamilyParams out;
  switch (row.form) {
    case RowForm::sandwich:
      out.a = row.a_kind == ParamKind::full ? draw(mc, mr) : shaped(row.a_kind, mr);
      break;
    case RowForm::transpose_sandwich:
      out.a = shaped(row.a_kind, mc);
      out.b = shaped(row.b_kind, mr);
      break;
    case RowForm::border:
      out.a = shaped(row.a_kind, mr);
      out.u = draw(mr, 1);
      break;
  }
  return out;
}

// ---- spin members ----------------------------------------------------------

Homotopy spin_family_alpha(const PairPtr& p, const SpinDescriptor& d) {
  require(p != nullptr, "spin member over a null pair");
  require(p->type() == PairType::spin && p->field() == Field::real,
          "spin members need a real spin pair, got " + p->name());
  const int n = p->dim();
  const RatMatrix& g = p->spin_form();
  auto stack = [&](const std::vector<RatVec>& vs) {
    RatMatrix w(static_cast<int>(vs.size()), n);
    for (int i = 0; i < w.rows(); ++i) {
      require(static_cast<int>(vs[i].size()) == n, "spin vector dimension mismatch");
      for (int j = 0; j < n; ++j) w.at(i, j) = vs[i][j];
    }
    return w;
  };
  RatMatrix alpha(n, n);
  switch (d.lambda_sign) {
    case 1: {
      require(!d.scale.is_zero(), "reflection members need a nonzero scale");
      if (d.space.empty()) {
        alpha = (-d.scale) * RatMatrix::identity(n);
        break;
      }
      RatMatrix w = stack(d.space);
      RatMatrix gram = w * g * w.transpose();
      require(rank_kernel_image(gram).rank == gram.rows(),
              "reflection subspace is degenerate for the form");
      // P projects onto the row space of W along its form-orthogonal complement.
      RatMatrix proj = w.transpose() * inverse(gram) * w * g;
      alpha = d.scale * (Rat(2) * proj - RatMatrix::identity(n));
      break;
    }
    case 0: {
      require(!d.space.empty(), "nilpotent members need at least one spanning vector");
      RatMatrix w = stack(d.space);
      require((w * g * w.transpose()).is_zero(),
              "isotropic data required: the form does not vanish on the given space");
      alpha = d.scale * ((w.transpose() * w) * g);
      break;
    }
    case -1: {
      require(!d.scale.is_zero(), "split members need a nonzero scale");
      require(d.space.empty(), "the split member takes no spanning vectors");
      const int m = n / 2;
      require(2 * m == n && p->param_p() == m && p->param_q() == m &&
                  g == make_spin_signature(m, m)->spin_form(),
              "a square root of -1 needs the standard split form");
      for (int i = 0; i < m; ++i) {
        alpha.at(i, m + i) = d.scale;
        alpha.at(m + i, i) = -d.scale;
      }
      break;
    }
    default: fail("lambda sign must be -1, 0 or 1");
  }
  require(rivillis_predicate(*p, alpha), "constructed spin map misses the characterization");
  return make_homotopy(p, Side::plus, std::move(alpha), false);
}

bool rivillis_predicate(const JordanPair& p, const RatMatrix& alpha) {
  require(p.type() == PairType::spin && p.field() == Field::real,
          "the spin characterization needs a real spin pair, got " + p.name());
  const int n = p.dim();
  require(alpha.rows() == n && alpha.cols() == n, "map shape mismatch on " + p.name());
  const RatMatrix ga = p.spin_form() * alpha;
  if (ga != ga.transpose()) return false;
  const RatMatrix sq = alpha * alpha;
  const Rat lambda = sq.at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sq.at(i, j) != (i == j ? lambda : Rat(0))) return false;
  return true;
}

namespace {

void compare_one(const JordanPair& p, const RatMatrix& alpha, bool predicted,
                 EquivalenceReport& rep) {
  const bool member = svar_membership(p, Side::plus, alpha).member;
  ++rep.checked;
  if (member) ++rep.members;
  if (predicted != member && rep.agree) {
    rep.agree = false;
    rep.witness = alpha;
  }
}

}  // namespace

EquivalenceReport rivillis_equivalence(const PairPtr& p, int grid_radius, int samples,
                                       std::uint64_t seed) {
  require(p != nullptr, "equivalence sweep over a null pair");
  require(p->type() == PairType::spin && p->field() == Field::real,
          "the spin characterization needs a real spin pair, got " + p->name());
  require(p->dim() >= 3, "the characterization is an equivalence only in dimension >= 3");
  const int n = p->dim();
  const int cells = n * n;
  EquivalenceReport rep;

  // Exhaustive pass, skipped when the grid would blow past ~10^5 candidates.
  long double grid = grid_radius >= 0 ? 1 : 2e5L;
  for (int i = 0; i < cells && grid <= 1e5L; ++i) grid *= 2 * grid_radius + 1;
  if (grid <= 1e5L) {
    std::vector<int> odo(cells, -grid_radius);
    for (;;) {
      RatMatrix alpha(n, n);
      for (int i = 0; i < cells; ++i) alpha.at(i / n, i % n) = Rat(odo[i]);
      compare_one(*p, alpha, rivillis_predicate(*p, alpha), rep);
      int k = 0;
      while (k < cells) {
        if (++odo[k] <= grid_radius) break;
        odo[k] = -grid_radius;
        ++k;
      }
      if (k == cells) break;
    }
  }

  SeededRng rng(seed);
  for (int s = 0; s < samples; ++s) {
    RatMatrix alpha(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) alpha.at(i, j) = Rat(rng.range(-3, 3));
    compare_one(*p, alpha, rivillis_predicate(*p, alpha), rep);
  }
  return rep;
}

// ---- the two-by-two exchange example ---------------------------------------

PairPtr ktwo_pair() {
  static const PairPtr p = direct_sum(make_rect(Field::real, 1, 1), make_rect(Field::real, 1, 1),
                                      "ktwo");
  return p;
}

bool ktwo_predicate(const RatMatrix& alpha) {
  require(alpha.rows() == 2 && alpha.cols() == 2, "the exchange example lives in dimension two");
  const bool diagonal = alpha.at(0, 1).is_zero() && alpha.at(1, 0).is_zero();
  const bool exchange = alpha.at(0, 0).is_zero() && alpha.at(1, 1).is_zero() &&
                        alpha.at(0, 1) == alpha.at(1, 0);
  return diagonal || exchange;
}

EquivalenceReport ktwo_equivalence() {
  const PairPtr p = ktwo_pair();
  EquivalenceReport rep;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          RatMatrix alpha(2, 2);
          alpha.at(0, 0) = Rat(a);
          alpha.at(0, 1) = Rat(b);
          alpha.at(1, 0) = Rat(c);
          alpha.at(1, 1) = Rat(d);
          compare_one(*p, alpha, ktwo_predicate(alpha), rep);
        }
  return rep;
}

// ---- structural endomorphisms -----------------------------------------------

StructuralPair structural_endo_family(const PairPtr& p, const std::string& label,
                                      const FamilyParams& params) {
  require(p != nullptr, "endomorphism row over a null pair");
  require(p->has_charts(), "endomorphism rows need a matrix-model pair, got " + p->name());
  std::string key = canonical_label(label);
  const bool twisted = !key.empty() && key.back() == '~';
  if (twisted) key.pop_back();
  const Field f = p->field();
  require(!twisted || f == Field::complex,
          "the '~' variant conjugates entries and needs a complex pair");

  const Chart& cp = p->chart(Side::plus);
  const Chart& cm = p->chart(Side::minus);
  const int mr = cp.model_rows(), mc = cp.model_cols();
  auto need = [&](const std::optional<ExactMatrix>& m, const char* which, int r, int c) {
    require(m.has_value(), "endomorphism row " + key + " needs parameter " + which);
    check_param(key, which, *m, f, r, c, ParamKind::full);
    return *m;
  };
  auto reject_u = [&] {
    require(!params.u.has_value(), "endomorphism row " + key + " takes no parameter u");
  };

  // Model-level action; membership-grade checking happens in make_structural.
  std::function<ExactMatrix(const ExactMatrix&)> gm, hm;
  if (key == "1.a") {
    require(p->type() == PairType::rect, "row 1.a needs a rectangular pair, got " + p->name());
    reject_u();
    const ExactMatrix a = need(params.a, "A", mr, mc);
    const ExactMatrix b = need(params.b, "B", mr, mc);
    gm = [a, b](const ExactMatrix& x) { return a * x.transpose() * b; };
    hm = [at = a.transpose(), bt = b.transpose()](const ExactMatrix& x) {
      return at * x.transpose() * bt;
    };
  } else if (key == "1.b") {
    require(p->type() == PairType::rect, "row 1.b needs a rectangular pair, got " + p->name());
    reject_u();
    const ExactMatrix a = need(params.a, "A", mr, mr);
    const ExactMatrix b = need(params.b, "B", mc, mc);
    gm = [a, b](const ExactMatrix& x) { return a * x * b; };
    hm = [a, b](const ExactMatrix& x) { return b * x * a; };
  } else if (key == "2" || key == "3.a") {
    const PairType want = key == "2" ? PairType::sym : PairType::asym;
    require(p->type() == want, "row " + key + " does not apply to " + p->name());
    reject_u();
    require(!params.b.has_value(), "endomorphism row " + key + " takes no parameter B");
    const ExactMatrix a = need(params.a, "A", mr, mr);
    gm = [a, at = a.transpose()](const ExactMatrix& x) { return a * x * at; };
    hm = [a, at = a.transpose()](const ExactMatrix& x) { return at * x * a; };
  } else if (key == "3.b") {
    require(p->type() == PairType::asym, "row 3.b needs an alternating pair, got " + p->name());
    require(!params.b.has_value(), "endomorphism row 3.b takes no parameter B");
    const ExactMatrix a = need(params.a, "A", mr, mr);
    const ExactMatrix u = need(params.u, "u", mr, 1);
    // P = u u^t: u^t X u = 0 on alternating X keeps both summands composable.
    const ExactMatrix pr = u * u.transpose();
    gm = [a, pr](const ExactMatrix& x) { return a * x * pr + pr * x * a.transpose(); };
    hm = [a, pr](const ExactMatrix& x) { return a.transpose() * x * pr + pr * x * a; };
  } else if (key == "4") {
    require(p->type() == PairType::hermC || p->type() == PairType::hermH,
            "row 4 needs a hermitian pair, got " + p->name());
    reject_u();
    require(!params.b.has_value(), "endomorphism row 4 takes no parameter B");
    const ExactMatrix a = need(params.a, "A", mr, mr);
    gm = [a, ah = a.conj_transpose()](const ExactMatrix& x) { return a * x * ah; };
    hm = [a, ah = a.conj_transpose()](const ExactMatrix& x) { return ah * x * a; };
  } else {
    fail("unknown endomorphism row '" + label + "'");
  }

  // The twist composes with entrywise conjugation: (g, h) -> (g o conj, conj o h).
  auto gfun = [&gm, twisted](const ExactMatrix& x) { return gm(twisted ? x.conj() : x); };
  auto hfun = [&hm, twisted](const ExactMatrix& x) { return twisted ? hm(x).conj() : hm(x); };
  RatMatrix gmat = coordinate_matrix(cp, cp, gfun);
  RatMatrix hmat = coordinate_matrix(cm, cm, hfun);
  return make_structural(p, p, std::move(gmat), std::move(hmat));
}

}  // namespace jpair
