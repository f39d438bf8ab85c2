#include <doctest.h>

#include <functional>
#include <set>
#include <string>

#include "helpers.hpp"
#include "jpair/chart.hpp"
#include "jpair/families.hpp"
#include "jpair/ideals.hpp"
#include "jpair/linalg.hpp"
#include "jpair/regularity.hpp"
#include "jpair/rng.hpp"

using namespace jpair;
using namespace jpair::testing;

namespace {

RatVec coords(const JordanPair& p, Side s, const ExactMatrix& m) {
  return p.chart(s).to_coords(m);
}

Scalar quat(long long re, long long i, long long j, long long k) {
  return Scalar(Field::quaternion, {Rat(re), Rat(i), Rat(j), Rat(k)});
}

// Small pair roster a row can run on, keyed by its pair type and field.
std::vector<PairPtr> row_pairs(const FamilyRow& row) {
  std::vector<PairPtr> out;
  std::vector<Field> active;
  if (row.real_ok) active.push_back(Field::real);
  if (row.complex_ok) active.push_back(Field::complex);
  if (row.quat_ok) active.push_back(Field::quaternion);
  for (Field f : active) {
    switch (row.pair) {
      case PairType::rect:
        if (f == Field::quaternion) {
          out.push_back(make_rect(f, 1, 2));
        } else {
          out.push_back(make_rect(f, 2, 3));
          out.push_back(make_rect(f, 1, 2));
        }
        break;
      case PairType::sym:
        out.push_back(make_sym(f, 2));
        out.push_back(make_sym(f, 3));
        break;
      case PairType::asym:
        out.push_back(make_asym(f, 3));
        out.push_back(make_asym(f, 4));
        break;
      case PairType::hermC: out.push_back(make_hermC(2)); break;
      case PairType::hermH: out.push_back(make_hermH(2)); break;
      default: break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the registry lists every in-scope row exactly once") {
  const auto& rows = family_rows();
  CHECK(rows.size() == 36);
  std::set<std::string> labels;
  for (const auto& r : rows) {
    CHECK(labels.insert(r.label).second);
    CHECK((r.real_ok || r.complex_ok || r.quat_ok));
    // primed labels negate their base row
    if (r.label.back() == '\'') {
      CHECK(r.negated);
      const FamilyRow& base = family_row(r.label.substr(0, r.label.size() - 1));
      CHECK(!base.negated);
      CHECK(base.form == r.form);
    }
  }
  // Unicode primes canonicalize onto the apostrophe labels.
  CHECK(family_row("1.a′").label == "1.a'");
  CHECK(family_row("4.2.b′").negated);

  CHECK_THROWS_WITH_AS(family_row("1.3.c"),
                       "out-of-scope scalar: row 1.3.c needs split quaternions", error);
  CHECK_THROWS_AS(family_row("4.3.a"), error);
  CHECK_THROWS_AS(family_row("4.3.b'"), error);
  CHECK_THROWS_AS(family_row("5.x"), error);
}

TEST_CASE("every row produces verified members across seeds and sizes") {
  // Membership itself is hard-checked inside family_alpha; this sweep asserts
  // the registry formulas survive random parameters, and that the attached
  // rank data is coherent.
  for (const auto& row : family_rows()) {
    for (const PairPtr& p : row_pairs(row)) {
      SeededRng rng(0x9eu * std::hash<std::string>{}(row.label + p->name()));
      const int seeds = p->dim() > 8 ? 12 : 50;
      for (int s = 0; s < seeds; ++s) {
        FamilyParams params = random_family_params(row, *p, rng);
        FamilyMember fm = family_alpha(p, row.label, params);
        CHECK(fm.rank == fm.image.dim());
        CHECK(fm.kernel.dim() == p->dim() - fm.rank);
        CHECK(fm.member.side == Side::plus);
        CHECK(fm.member.antilinear == (row.conj_x && p->field() == Field::complex));
      }
    }
  }
}

TEST_CASE("transpose-sandwich rows follow the two-sided parameter rescaling") {
  auto r23 = make_rect(Field::real, 2, 3);
  SeededRng rng(77);
  const FamilyRow& row = family_row("1.b");
  for (int s = 0; s < 10; ++s) {
    FamilyParams params = random_family_params(row, *r23, rng);
    FamilyParams scaled_a = params, scaled_b = params;
    scaled_a.a = Rat(5) * *params.a;
    scaled_b.b = Rat(5) * *params.b;
    CHECK(family_alpha(r23, "1.b", scaled_a).member.matrix ==
          family_alpha(r23, "1.b", scaled_b).member.matrix);
  }
}

TEST_CASE("row one-by-q collapses: the sandwich row is a transpose-sandwich instance") {
  auto r13 = make_rect(Field::real, 1, 3);
  ExactMatrix a(Field::real, 3, 1);
  a.at(0, 0) = Scalar(Field::real, Rat(2));
  a.at(1, 0) = Scalar(Field::real, Rat(-1));
  a.at(2, 0) = Scalar(Field::real, Rat(3));
  FamilyParams sandwich;
  sandwich.a = a;
  FamilyParams folded;
  folded.a = a * a.transpose();  // symmetric rank one
  folded.b = rmat({{1}});
  CHECK(family_alpha(r13, "1.a", sandwich).member.matrix ==
        family_alpha(r13, "1.b", folded).member.matrix);

  // Skew one-by-one second parameter kills the alternating row entirely.
  FamilyParams dead;
  dead.a = rmat({{0, 1, 0}, {-1, 0, 2}, {0, -2, 0}});
  dead.b = rmat({{0}});
  FamilyMember zero = family_alpha(r13, "1.c", dead);
  CHECK(zero.rank == 0);
  CHECK(zero.member.matrix == RatMatrix(3, 3));
}

TEST_CASE("zero parameters give the zero member") {
  auto r22 = make_rect(Field::real, 2, 2);
  FamilyParams params;
  params.a = ExactMatrix(Field::real, 2, 2);
  FamilyMember fm = family_alpha(r22, "1.a", params);
  CHECK(fm.rank == 0);
  CHECK(fm.kernel.dim() == 4);
}

TEST_CASE("parameter schema violations are named errors") {
  auto r23 = make_rect(Field::real, 2, 3);
  auto a3 = make_asym(Field::real, 3);
  FamilyParams p;

  CHECK_THROWS_AS(family_alpha(r23, "2.a", p), error);   // wrong pair type
  CHECK_THROWS_AS(family_alpha(r23, "1.A", p), error);   // antilinear row over R
  CHECK_THROWS_AS(family_alpha(r23, "1.b", p), error);   // missing A entirely

  p.a = rmat({{1, 2}, {2, 1}});  // wrong shape for 1.b (needs 3x3 and 2x2)
  CHECK_THROWS_AS(family_alpha(r23, "1.b", p), error);

  p.a = rmat({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
  p.b = rmat({{1, 2}, {-2, 1}});  // not symmetric
  CHECK_THROWS_AS(family_alpha(r23, "1.b", p), error);

  FamilyParams q;
  q.a = rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(family_alpha(a3, "3.c", q), error);  // missing u
  q.u = ExactMatrix(Field::real, 3, 1);
  q.b = rmat({{1}});
  CHECK_THROWS_AS(family_alpha(a3, "3.c", q), error);  // stray B
}

TEST_CASE("rank-one symmetric borders annihilate alternating middles") {
  SeededRng rng(5);
  for (int s = 0; s < 20; ++s) {
    ExactMatrix u(Field::real, 4, 1);
    for (int i = 0; i < 4; ++i) u.at(i, 0) = Scalar(Field::real, Rat(rng.range(-3, 3)));
    ExactMatrix x(Field::real, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) x.at(i, j) = Scalar(Field::real, Rat(rng.range(-3, 3)));
    x = x - x.transpose();
    ExactMatrix b = u * u.transpose();
    CHECK((b * x * b).is_zero());
  }
}

TEST_CASE("the border row at a full corner is the point-space projection") {
  auto a3 = make_asym(Field::real, 3);
  FamilyParams p;
  p.a = rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  ExactMatrix u(Field::real, 3, 1);
  u.at(2, 0) = Scalar::one(Field::real);
  p.u = u;
  FamilyMember fm = family_alpha(a3, "3.c", p);

  // P X A + A X P = X - A X A on alternating X for this corner choice.
  const Chart& chart = a3->chart(Side::plus);
  RatMatrix expect = coordinate_matrix(chart, chart, [&](const ExactMatrix& x) {
    return x - *p.a * x * *p.a;
  });
  CHECK(fm.member.matrix == expect);

  IdealDescriptor point;
  point.kind = "point";
  point.side = Side::minus;
  point.u = qvec({0, 0, 1});
  InnerIdeal ku = make_inner_ideal(a3, point);
  CHECK(fm.image == ku.space);
  CHECK(fm.rank == 2);

  // A short corner keeps the image inside the same point space.
  FamilyParams small;
  small.a = rmat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  small.u = u;
  FamilyMember thin = family_alpha(a3, "3.c", small);
  CHECK(thin.rank == 1);
  CHECK(ku.space.contains(thin.image));
}

TEST_CASE("images of sandwich rows are the classified inner ideals") {
  // Rectangular two-parameter row: the image is the rectangular ideal pinned
  // by ker B and Im A.
  auto r23 = make_rect(Field::real, 2, 3);
  FamilyParams p;
  p.a = rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  p.b = rmat({{1, 0}, {0, 0}});
  FamilyMember fm = family_alpha(r23, "1.b", p);
  CHECK(fm.rank == 2);
  IdealDescriptor rect;
  rect.kind = "rect";
  rect.side = Side::minus;
  rect.a = {qvec({0, 1})};        // ker B
  rect.b = {qvec({1, 0, 0}), qvec({0, 1, 0})};  // Im A
  CHECK(fm.image == make_inner_ideal(r23, rect).space);

  // Symmetric sandwich: self-adjoint maps with image inside Im A.
  auto s3 = make_sym(Field::real, 3);
  FamilyParams ps;
  ps.a = rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  FamilyMember sm = family_alpha(s3, "2.a", ps);
  IdealDescriptor principal;
  principal.kind = "principal";
  principal.side = Side::minus;
  principal.b = {qvec({1, 0, 0}), qvec({0, 1, 0})};
  CHECK(sm.image == make_inner_ideal(s3, principal).space);
  CHECK(sm.rank == 3);

  // Alternating sandwich, same principal shape.
  auto a3 = make_asym(Field::real, 3);
  FamilyParams pa;
  pa.a = rmat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  FamilyMember am = family_alpha(a3, "3.a", pa);
  principal.b = {qvec({1, 0, 0}), qvec({0, 1, 0})};
  CHECK(am.image == make_inner_ideal(a3, principal).space);
  CHECK(am.rank == 1);

  // Hermitian sandwich with hermitian A is the quadratic operator of A.
  auto hc2 = make_hermC(2);
  FamilyParams ph;
  ph.a = rmat({{1, 0}, {0, 0}}, Field::complex);
  FamilyMember hm = family_alpha(hc2, "4.1.a", ph);
  RatVec ac = coords(*hc2, Side::minus, *ph.a);
  CHECK(hm.member.matrix == quadratic_operator(*hc2, Side::minus, ac));
  CHECK(hm.image == image_ideal(hc2, Side::minus, hm.member.matrix).space);

  auto hh2 = make_hermH(2);
  FamilyParams pq;
  ExactMatrix aq(Field::quaternion, 2, 2);
  aq.at(0, 0) = quat(1, 0, 0, 0);
  pq.a = aq;
  FamilyMember qm = family_alpha(hh2, "4.2.a", pq);
  CHECK(qm.member.matrix == quadratic_operator(*hh2, Side::minus, coords(*hh2, Side::minus, aq)));
  CHECK(qm.rank == 1);
}

TEST_CASE("the conjugated border row lands in the expected point space") {
  auto a3 = make_asym(Field::complex, 3);
  FamilyParams p;
  p.a = rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, Field::complex);
  ExactMatrix u(Field::complex, 3, 1);
  u.at(2, 0) = Scalar::one(Field::complex);
  p.u = u;
  FamilyMember fm = family_alpha(a3, "3.B", p);
  CHECK(fm.member.antilinear);
  CHECK(fm.rank == 4);

  const Chart& c = a3->chart(Side::minus);
  auto skew_unit = [&](int i, int j, const Scalar& s) {
    ExactMatrix m(Field::complex, 3, 3);
    m.at(i, j) = s;
    m.at(j, i) = -s;
    return c.to_coords(m);
  };
  Subspace expect = Subspace::span({skew_unit(2, 0, cplx(1, 0)), skew_unit(2, 0, cplx(0, 1)),
                                    skew_unit(2, 1, cplx(1, 0)), skew_unit(2, 1, cplx(0, 1))},
                                   a3->dim());
  CHECK(fm.image == expect);

  // Real parameters reduce the conjugated border to border-after-conjugation.
  FamilyMember plain = family_alpha(a3, "3.c", p);
  RatMatrix conj_map = coordinate_matrix(c, c, [](const ExactMatrix& x) { return x.conj(); });
  CHECK(fm.member.matrix == plain.member.matrix * conj_map);
}

TEST_CASE("family members feed the associative translation with the right mode") {
  SeededRng rng(13);
  auto r22c = make_rect(Field::complex, 2, 2);
  for (const char* label : {"1.a", "1.a'", "1.A", "1.A'"}) {
    FamilyParams p = random_family_params(family_row(label), *r22c, rng);
    FamilyMember fm = family_alpha(r22c, label, p);
    CHECK(assoc_svar_membership(*r22c, fm.member.matrix, AssocMode::standard).member);
  }
  for (const char* label : {"1.b", "1.c", "1.B"}) {
    FamilyParams p = random_family_params(family_row(label), *r22c, rng);
    FamilyMember fm = family_alpha(r22c, label, p);
    CHECK(assoc_svar_membership(*r22c, fm.member.matrix, AssocMode::opposite).member);
  }
  auto r12h = make_rect(Field::quaternion, 1, 2);
  FamilyParams ph = random_family_params(family_row("1.3.a"), *r12h, rng);
  CHECK(assoc_svar_membership(*r12h, family_alpha(r12h, "1.3.a", ph).member.matrix,
                              AssocMode::standard)
            .member);
  FamilyParams pb = random_family_params(family_row("1.3.b"), *r12h, rng);
  CHECK(assoc_svar_membership(*r12h, family_alpha(r12h, "1.3.b", pb).member.matrix,
                              AssocMode::opposite)
            .member);
}

TEST_CASE("idempotent table members split their homotope fibration") {
  auto s3 = make_sym(Field::real, 3);
  FamilyParams p;
  p.a = rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  FamilyMember fm = family_alpha(s3, "2.a", p);
  FibrationReport rep = fibration_report(s3, fm.member.matrix);
  CHECK(rep.pass());
  CHECK(rep.base_space.dim() == 3);

  auto a4 = make_asym(Field::real, 4);
  FamilyParams pb;
  pb.a = rmat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
  ExactMatrix u(Field::real, 4, 1);
  u.at(3, 0) = Scalar::one(Field::real);
  pb.u = u;
  FamilyMember border = family_alpha(a4, "3.c", pb);
  FibrationReport brep = fibration_report(a4, border.member.matrix);
  CHECK(brep.pass());
  CHECK(brep.base_space.dim() == 3);  // the point space K_u
}

TEST_CASE("projection members pass through the ideal frame unchanged") {
  auto s3 = make_sym(Field::real, 3);
  FamilyParams p;
  p.a = rmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  FamilyMember fm = family_alpha(s3, "2.a", p);
  InnerIdeal ideal = image_ideal(s3, Side::minus, fm.member.matrix);
  IdealFrame frame(s3, ideal);
  RatMatrix jts = frame.jts_from_pair(fm.member.matrix);
  CHECK(frame.in_phi_image(jts));
  CHECK(frame.phi(frame.psi(jts)) == jts);
}

// ---- spin members ----------------------------------------------------------

TEST_CASE("spin members cover reflections, nilpotents, and complex structures") {
  auto sp = make_spin_signature(2, 1);

  SpinDescriptor id_like;
  id_like.space = {qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({0, 0, 1})};
  CHECK(spin_family_alpha(sp, id_like).matrix == RatMatrix::identity(3));

  SpinDescriptor refl;
  refl.space = {qvec({1, 0, 0}), qvec({0, 1, 0})};
  CHECK(spin_family_alpha(sp, refl).matrix == qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));

  SpinDescriptor minus_id;
  minus_id.scale = Rat(3);
  CHECK(spin_family_alpha(sp, minus_id).matrix == Rat(-3) * RatMatrix::identity(3));

  SpinDescriptor degenerate;
  degenerate.space = {qvec({1, 0, 1})};  // isotropic line: not reflectable
  CHECK_THROWS_AS(spin_family_alpha(sp, degenerate), error);

  SpinDescriptor nil;
  nil.lambda_sign = 0;
  nil.scale = Rat(2);
  nil.space = {qvec({1, 0, 1})};
  Homotopy h = spin_family_alpha(sp, nil);
  CHECK((h.matrix * h.matrix) == RatMatrix(3, 3));
  CHECK(rank_kernel_image(h.matrix).rank == 1);

  SpinDescriptor bad_nil = nil;
  bad_nil.space = {qvec({1, 0, 0})};
  CHECK_THROWS_AS(spin_family_alpha(sp, bad_nil), error);

  SpinDescriptor split;
  split.lambda_sign = -1;
  CHECK_THROWS_AS(spin_family_alpha(sp, split), error);  // (2,1) is not split

  auto sp22 = make_spin_signature(2, 2);
  Homotopy j = spin_family_alpha(sp22, split);
  CHECK((j.matrix * j.matrix) == Rat(-1) * RatMatrix::identity(4));
  CHECK(j.matrix == qmat({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
}

TEST_CASE("the spin characterization matches raw membership") {
  auto sp = make_spin_signature(2, 1);
  CHECK(rivillis_predicate(*sp, RatMatrix(3, 3)));
  CHECK(svar_membership(*sp, Side::plus, RatMatrix(3, 3)).member);

  // A rotation is form-symmetric only at the fixed points: both sides reject.
  auto e3 = make_spin_signature(3, 0);
  RatMatrix rot = qmat({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(!rivillis_predicate(*e3, rot));
  CHECK(!svar_membership(*e3, Side::plus, rot).member);

  // Form-symmetric but without scalar square: reject for a different reason.
  RatMatrix diag = qmat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(!rivillis_predicate(*e3, diag));
  CHECK(!svar_membership(*e3, Side::plus, diag).member);

  EquivalenceReport rep = rivillis_equivalence(sp, 1, 250, 42);
  CHECK(rep.agree);
  CHECK(rep.checked == 19683 + 250);
  CHECK(rep.members > 0);
  CHECK(!rep.witness.has_value());

  EquivalenceReport indef = rivillis_equivalence(e3, -1, 400, 7);
  CHECK(indef.agree);
  CHECK(indef.checked == 400);

  auto thin = make_spin_signature(1, 1);
  CHECK_THROWS_AS(rivillis_equivalence(thin, 1, 10, 1), error);
}

// ---- the exchange example ---------------------------------------------------

TEST_CASE("the two-line exchange example separates diagonals and swaps") {
  const PairPtr p = ktwo_pair();
  CHECK(p->dim() == 2);

  CHECK(ktwo_predicate(qmat({{3, 0}, {0, -1}})));
  CHECK(svar_membership(*p, Side::plus, qmat({{3, 0}, {0, -1}})).member);
  CHECK(ktwo_predicate(qmat({{0, 2}, {2, 0}})));
  CHECK(svar_membership(*p, Side::plus, qmat({{0, 2}, {2, 0}})).member);
  CHECK(!ktwo_predicate(qmat({{0, 1}, {2, 0}})));
  CHECK(!svar_membership(*p, Side::plus, qmat({{0, 1}, {2, 0}})).member);

  EquivalenceReport rep = ktwo_equivalence();
  CHECK(rep.agree);
  CHECK(rep.checked == 625);
  CHECK(rep.members == 29);  // 25 diagonals + 5 equal swaps - shared zero
}

// ---- structural endomorphisms ------------------------------------------------

TEST_CASE("endomorphism rows produce verified structural pairs") {
  auto r23 = make_rect(Field::real, 2, 3);
  FamilyParams p1;
  p1.a = rmat({{1, 2, 0}, {0, 1, -1}});
  p1.b = rmat({{2, 0, 1}, {1, 1, 0}});
  StructuralPair tw = structural_endo_family(r23, "1.a", p1);
  CHECK(tw.g.rows() == 6);

  FamilyParams p2;
  p2.a = rmat({{1, 1}, {0, 1}});
  p2.b = rmat({{2, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  StructuralPair two_sided = structural_endo_family(r23, "1.b", p2);
  // Invertible parameters give a structure transformation: the inverse pair
  // is structural as well, and transfer preserves membership.
  StructuralPair inv = make_structural(r23, r23, inverse(two_sided.g), inverse(two_sided.h));
  SeededRng rng(3);
  FamilyParams fp = random_family_params(family_row("1.b"), *r23, rng);
  FamilyMember fm = family_alpha(r23, "1.b", fp);
  TransferResult moved = transfer(fm.member, two_sided);
  CHECK(moved.homomorphism_certified);
  TransferResult back = transfer(moved.pulled, inv);
  CHECK(back.pulled.matrix == fm.member.matrix);

  auto s2 = make_sym(Field::real, 2);
  FamilyParams ps;
  ps.a = rmat({{1, 2}, {3, -1}});
  StructuralPair cong = structural_endo_family(s2, "2", ps);
  // Invertible A puts the congruence in the structure group.
  StructuralPair cong_inv = make_structural(s2, s2, inverse(cong.g), inverse(cong.h));
  CHECK(compose(cong, cong_inv).g == RatMatrix::identity(3));

  auto a3 = make_asym(Field::real, 3);
  FamilyParams pb;
  pb.a = rmat({{1, 2, 0}, {0, 1, 1}, {-1, 0, 1}});
  ExactMatrix u(Field::real, 3, 1);
  u.at(1, 0) = Scalar::one(Field::real);
  pb.u = u;
  StructuralPair border = structural_endo_family(a3, "3.b", pb);
  CHECK(rank_kernel_image(border.g).rank <= 3);  // border images stay thin

  auto hh2 = make_hermH(2);
  FamilyParams pq;
  ExactMatrix aq(Field::quaternion, 2, 2);
  aq.at(0, 0) = quat(1, 1, 0, 0);
  aq.at(0, 1) = quat(0, 0, 1, 0);
  aq.at(1, 0) = quat(2, 0, 0, -1);
  aq.at(1, 1) = quat(1, 0, 0, 0);
  pq.a = aq;
  StructuralPair herm = structural_endo_family(hh2, "4", pq);
  CHECK(herm.g.rows() == 6);
}

TEST_CASE("twisted endomorphism rows conjugate through the structural identities") {
  auto s2c = make_sym(Field::complex, 2);
  FamilyParams p;
  ExactMatrix a(Field::complex, 2, 2);
  a.at(0, 0) = cplx(1, 1);
  a.at(0, 1) = cplx(0, 2);
  a.at(1, 0) = cplx(1, 0);
  a.at(1, 1) = cplx(-1, 1);
  p.a = a;
  StructuralPair twisted = structural_endo_family(s2c, "2~", p);
  StructuralPair straight = structural_endo_family(s2c, "2", p);
  const Chart& c = s2c->chart(Side::plus);
  RatMatrix conj_map = coordinate_matrix(c, c, [](const ExactMatrix& x) { return x.conj(); });
  CHECK(twisted.g == straight.g * conj_map);
  CHECK(twisted.h == conj_map * straight.h);

  auto hc2 = make_hermC(2);
  FamilyParams ph;
  ph.a = a;
  StructuralPair th = structural_endo_family(hc2, "4~", ph);
  CHECK(th.g.rows() == 4);

  auto hh2 = make_hermH(2);
  FamilyParams pq;
  ExactMatrix aq(Field::quaternion, 2, 2);
  aq.at(0, 0) = quat(1, 0, 0, 0);
  pq.a = aq;
  CHECK_THROWS_AS(structural_endo_family(hh2, "4~", pq), error);  // twist needs C

  auto s2 = make_sym(Field::real, 2);
  FamilyParams pr;
  pr.a = rmat({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(structural_endo_family(s2, "2~", pr), error);
  CHECK_THROWS_AS(structural_endo_family(s2, "9", pr), error);
}

TEST_CASE("structural endomorphisms embed into the polarized double") {
  auto s2 = make_sym(Field::real, 2);
  FamilyParams p;
  p.a = rmat({{2, 1}, {1, 1}});
  StructuralPair gh = structural_endo_family(s2, "2", p);
  Homotopy emb = embed_structural(s2, gh.g, gh.h);
  CHECK(emb.pair->dim() == 2 * s2->dim());
  CHECK(svar_membership(*emb.pair, Side::plus, emb.matrix).member);
}
