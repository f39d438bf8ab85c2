#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "jpair/chart.hpp"
#include "jpair/error.hpp"
#include "jpair/families.hpp"
#include "jpair/liealg.hpp"
#include "jpair/linalg.hpp"
#include "jpair/rng.hpp"
#include "jpair/svar.hpp"

using namespace jpair;
using namespace jpair::testing;

namespace {

ExactMatrix dia3(long long a, long long b, long long c, Field f = Field::real) {
  return rmat({{a, 0, 0}, {0, b, 0}, {0, 0, c}}, f);
}

RatVec unit(int d, int i) {
  RatVec v(d);
  v[i] = Rat(1);
  return v;
}

RatVec times(long long c, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(c) * v[i];
  return out;
}

ExactMatrix random_entries(Field f, int rows, int cols, SeededRng& rng) {
  ExactMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Scalar s(f);
      for (int k = 0; k < field_components(f); ++k) s.comp(k) = Rat(rng.range(-3, 3));
      m.at(i, j) = s;
    }
  return m;
}

// Grading pattern of an imbedding: q-q brackets land in h, mixed in q, h-h in
// h, and the restricted double bracket reproduces the input triple system.
void check_graded(const GradedImbedding& g, const TripleTensor& r) {
  const int d = g.q_dim, n = g.algebra.dim();
  REQUIRE(n == d + g.h_dim);
  for (int i = 0; i < n; ++i) {
    CHECK(g.sigma.at(i, i) == (i < d ? Rat(-1) : Rat(1)));
    for (int j = 0; j < n; ++j) {
      const RatVec& br = g.algebra.bracket(i, j);
      const bool to_q = (i < d) != (j < d);
      for (int m = 0; m < n; ++m)
        if ((m < d) != to_q) CHECK(br[m].is_zero());
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        RatVec got = g.algebra.bracket(g.algebra.bracket(i, j), unit(n, k));
        RatVec want = triple_eval(r, unit(d, i), unit(d, j), unit(d, k));
        want.resize(n);
        CHECK(got == want);
      }
}

}  // namespace

TEST_CASE("a bracket table is validated on construction") {
  // Heisenberg from a raw table.
  LieAlgebraTensor h = make_lie_algebra(3, [](int i, int j) {
    RatVec v(3);
    if (i == 0 && j == 1) v[2] = Rat(1);
    if (i == 1 && j == 0) v[2] = Rat(-1);
    return v;
  });
  CHECK(h.dim() == 3);
  CHECK(h.bracket(qvec({1, 0, 0}), qvec({0, 1, 0})) == qvec({0, 0, 1}));
  CHECK(h.name() == "lie:3");

  // Not antisymmetric: [x,x] != 0.
  CHECK_THROWS_AS(make_lie_algebra(2,
                                   [](int, int) {
                                     RatVec v(2);
                                     v[0] = Rat(1);
                                     return v;
                                   }),
                  error);
  // Antisymmetric but Jacobi fails: [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=0.
  CHECK_THROWS_AS(make_lie_algebra(3,
                                   [](int i, int j) {
                                     RatVec v(3);
                                     if (i == 0 && j == 1) v[2] = Rat(1);
                                     if (i == 1 && j == 0) v[2] = Rat(-1);
                                     if (i == 0 && j == 2) v[0] = Rat(1);
                                     if (i == 2 && j == 0) v[0] = Rat(-1);
                                     return v;
                                   }),
                  error);
  CHECK_THROWS_AS(make_lie_algebra(2, [](int, int) { return RatVec(3); }), error);
}

TEST_CASE("the twisted orthogonal bracket obeys the corrected diagonal relations") {
  // Chart order is b12, b13, b23; e = b23, f = b13, k = b12 gives
  // [e,f] = ck, [e,k] = -bf, [f,k] = ae.
  const long long grid[][3] = {{2, 3, 5}, {1, 1, 1}, {0, 0, 1}, {-1, 2, 0}, {7, -3, -5}};
  for (const auto& abc : grid) {
    const long long a = abc[0], b = abc[1], c = abc[2];
    LieAlgebraTensor g = a_orth_algebra(dia3(a, b, c));
    REQUIRE(g.dim() == 3);
    CHECK(g.bracket(0, 1) == times(-a, unit(3, 2)));
    CHECK(g.bracket(0, 2) == times(b, unit(3, 1)));
    CHECK(g.bracket(1, 2) == times(-c, unit(3, 0)));
    CHECK(g.bracket(2, 1) == times(c, unit(3, 0)));   // [e,f] = ck
    CHECK(g.bracket(2, 0) == times(-b, unit(3, 1)));  // [e,k] = -bf
    CHECK(g.bracket(1, 0) == times(a, unit(3, 2)));   // [f,k] = ae
  }
  CHECK(a_orth_algebra(dia3(2, 3, 5)).name() == "aorth:R:3");
  CHECK_THROWS_AS(a_orth_algebra(rmat({{1, 2}, {0, 1}})), error);
  CHECK_THROWS_AS(a_orth_algebra(rmat({{1}})), error);
  CHECK_THROWS_AS(a_orth_algebra(ExactMatrix::identity(Field::quaternion, 3)), error);
}

TEST_CASE("special diagonals give the rotation and Heisenberg algebras") {
  LieAlgebraTensor rot = a_orth_algebra(dia3(1, 1, 1));
  // Cyclic rotation constants in the (e, f, k) = (b23, b13, b12) basis.
  CHECK(rot.bracket(2, 1) == unit(3, 0));  // [e,f] = k
  CHECK(rot.bracket(1, 0) == unit(3, 2));  // [f,k] = e
  CHECK(rot.bracket(0, 2) == unit(3, 1));  // [k,e] = f

  LieAlgebraTensor heis = a_orth_algebra(dia3(0, 0, 1));
  CHECK(heis.bracket(2, 1) == unit(3, 0));  // [e,f] = k
  for (int i = 0; i < 3; ++i) CHECK(is_zero(heis.bracket(0, i)));  // k central

  // Realified complex rotation algebra: dimension doubles, i b12 commutes
  // with b12.
  LieAlgebraTensor rotc = a_orth_algebra(dia3(1, 1, 1, Field::complex));
  CHECK(rotc.dim() == 6);
  CHECK(is_zero(rotc.bracket(0, 1)));  // chart pairs real/imaginary parts
}

TEST_CASE("conjugation by a signature matrix is an automorphism") {
  LieAlgebraTensor g = a_orth_algebra(dia3(2, -3, 5));
  const Chart chart = make_chart(ModelKind::asym, Field::real, 3, 3);
  ExactMatrix j = dia3(1, 1, -1);
  RatMatrix conj = coordinate_matrix(chart, chart, [&](const ExactMatrix& x) {
    return j * x * j;
  });
  CHECK(lie_homomorphism(g, g, conj));
  CHECK(rank_kernel_image(conj).rank == 3);

  // A non-involutive diagonal rescales the parameter and breaks the bracket.
  ExactMatrix j2 = dia3(1, 1, 2);
  RatMatrix squash = coordinate_matrix(chart, chart, [&](const ExactMatrix& x) {
    return j2 * x * j2;
  });
  CHECK_FALSE(lie_homomorphism(g, g, squash));
  CHECK_THROWS_AS(lie_homomorphism(g, g, RatMatrix::identity(4)), error);
}

TEST_CASE("the affine relations come out of the rectangular bracket") {
  LieAlgebraTensor axb = a_gl_algebra(rmat({{1}, {0}}));
  REQUIRE(axb.dim() == 2);
  CHECK(axb.bracket(0, 1) == unit(2, 1));  // [e1,e2] = e2
  CHECK(axb.name() == "agl:R:1x2");

  LieAlgebraTensor kef = a_gl_algebra(rmat({{1}, {0}, {0}}));
  REQUIRE(kef.dim() == 3);
  CHECK(kef.bracket(0, 1) == unit(3, 1));   // [k,e] = e
  CHECK(kef.bracket(0, 2) == unit(3, 2));   // [k,f] = f
  CHECK(is_zero(kef.bracket(1, 2)));        // [e,f] = 0

  LieAlgebraTensor flat = a_gl_algebra(rmat({{0, 0}, {0, 0}}));
  CHECK(flat.dim() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(is_zero(flat.bracket(i, j)));
}

TEST_CASE("jacobi holds across fields and sizes") {
  SeededRng rng(2024);
  for (int n : {3, 4, 5, 6}) {
    ExactMatrix m = random_entries(Field::real, n, n, rng);
    CHECK(a_orth_algebra(m + m.transpose()).dim() == n * (n - 1) / 2);
  }
  ExactMatrix mc = random_entries(Field::complex, 3, 3, rng);
  CHECK(a_orth_algebra(mc + mc.transpose()).dim() == 6);

  CHECK(a_gl_algebra(random_entries(Field::real, 2, 2, rng)).dim() == 4);
  CHECK(a_gl_algebra(random_entries(Field::real, 3, 1, rng)).dim() == 3);
  CHECK(a_gl_algebra(random_entries(Field::real, 3, 2, rng)).dim() == 6);
  CHECK(a_gl_algebra(random_entries(Field::complex, 2, 2, rng)).dim() == 8);
  CHECK(a_gl_algebra(random_entries(Field::quaternion, 2, 1, rng)).dim() == 8);
}

TEST_CASE("killing forms separate the small algebras") {
  CHECK(killing_form(a_orth_algebra(dia3(1, 1, 1))) ==
        Rat(-2) * RatMatrix::identity(3));
  CHECK(killing_form(a_gl_algebra(rmat({{1}, {0}}))) == qmat({{1, 0}, {0, 0}}));
  CHECK(killing_form(a_orth_algebra(dia3(0, 0, 1))) == RatMatrix(3, 3));
}

TEST_CASE("a zero triple system imbeds without derivations") {
  GradedImbedding g = standard_imbedding(TripleTensor::zero(4));
  CHECK(g.q_dim == 4);
  CHECK(g.h_dim == 0);
  CHECK(g.algebra.dim() == 4);
  CHECK(g.algebra.name() == "imbedding:4+0");
  CHECK(g.sigma == Rat(-1) * RatMatrix::identity(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(is_zero(g.algebra.bracket(i, j)));

  // Not a Lie triple system: [x,y,z] = x misses antisymmetry in (x,y).
  TripleTensor bad = TripleTensor::materialized(2, [](int i, int, int) {
    return SparseVec{{i, Rat(1)}};
  });
  CHECK_THROWS_AS(standard_imbedding(bad), error);
}

TEST_CASE("the rank-one affine homotope imbeds as a degenerate orthogonal algebra") {
  PairPtr v = make_rect(Field::real, 1, 2);
  Homotopy alpha = make_homotopy(v, Side::plus, qmat({{1, 0}, {0, 0}}));
  TripleTensor r = homotope_lts(alpha);
  GradedImbedding g = standard_imbedding(r);
  CHECK(g.q_dim == 2);
  CHECK(g.h_dim == 1);
  CHECK(g.algebra.dim() == 3);
  check_graded(g, r);

  // Exact constant match with the degenerate orthogonal algebra of signature
  // pattern (+, 0, -): q-basis to (f, e), derivation to -k.
  LieAlgebraTensor o3 = a_orth_algebra(dia3(1, 0, -1));
  RatMatrix change = qmat({{0, 0, -1}, {1, 0, 0}, {0, 1, 0}});
  CHECK(lie_homomorphism(g.algebra, o3, change));
  CHECK(rank_kernel_image(change).rank == 3);
  // The derivation part lands on the k axis.
  CHECK(Subspace::span({change.col(2)}, 3) == Subspace::span({unit(3, 0)}, 3));
}

TEST_CASE("imbedding dimensions survive invertible transfer") {
  PairPtr s2 = make_sym(Field::real, 2);
  Homotopy alpha = make_homotopy(s2, Side::plus, RatMatrix::identity(3));
  TripleTensor r = homotope_lts(alpha);
  GradedImbedding g = standard_imbedding(r);
  CHECK(g.q_dim == 3);
  CHECK(g.h_dim == 1);
  CHECK(g.algebra.dim() == 4);
  check_graded(g, r);

  FamilyParams ps;
  ps.a = rmat({{1, 2}, {0, 1}});
  StructuralPair gh = structural_endo_family(s2, "2", ps);
  TransferResult tr = transfer(alpha, gh);
  CHECK(tr.homomorphism_certified);
  GradedImbedding g2 = standard_imbedding(homotope_lts(tr.pulled));
  CHECK(g2.q_dim == g.q_dim);
  CHECK(g2.h_dim == g.h_dim);
  CHECK(g2.algebra.dim() == g.algebra.dim());
}

TEST_CASE("only the symmetric border rows give invertible skew homotopies") {
  PairPtr a3 = make_asym(Field::real, 3);
  bool saw_full = false;
  for (const std::string label : {"3.a", "3.a'", "3.b", "3.b'", "3.c", "3.c'"}) {
    const FamilyRow& row = family_row(label);
    SeededRng rng(0xabc + label.size());
    for (int t = 0; t < 25; ++t) {
      FamilyParams ps = random_family_params(row, *a3, rng);
      FamilyMember fm = family_alpha(a3, label, ps);
      if (fm.rank == 3) {
        CHECK(label.substr(0, 3) == "3.b");
        saw_full = true;
      }
    }
  }
  CHECK(saw_full);
  FamilyParams id3;
  id3.a = ExactMatrix::identity(Field::real, 3);
  CHECK(family_alpha(a3, "3.b", id3).rank == 3);
}

TEST_CASE("the hat map intertwines the projective and alternating triples") {
  IsomorphismCertificate real = verify_isomorphism("m13r-asym3r");
  CHECK(real.space_match);
  CHECK(real.intertwined);
  CHECK(real.twist == "cross-product");
  CHECK(real.scalar == Rat(1));
  CHECK_FALSE(real.signature.has_value());
  CHECK(real.identity.find("hat") != std::string::npos);

  IsomorphismCertificate cplx = verify_isomorphism("m13c-asym3c");
  CHECK(cplx.space_match);
  CHECK(cplx.intertwined);
  CHECK(cplx.scalar == Rat(1));
}

TEST_CASE("determinant and pfaffian polarizations identify the spin pairs") {
  auto sorted = [](std::pair<int, int> s) {
    if (s.first > s.second) std::swap(s.first, s.second);
    return s;
  };
  IsomorphismCertificate sym = verify_isomorphism("sym2r-spin21");
  CHECK(sym.space_match);
  CHECK(sym.intertwined);
  CHECK(sym.twist == "adjugate");
  CHECK(sym.scalar == Rat(2));
  REQUIRE(sym.signature.has_value());
  CHECK(sorted(*sym.signature) == std::pair(1, 2));

  IsomorphismCertificate herm = verify_isomorphism("herm2c-spin31");
  CHECK(herm.space_match);
  CHECK(herm.intertwined);
  CHECK(herm.twist == "adjugate");
  CHECK(herm.scalar == Rat(2));
  REQUIRE(herm.signature.has_value());
  CHECK(sorted(*herm.signature) == std::pair(1, 3));

  IsomorphismCertificate sq = verify_isomorphism("m22r-spin22");
  CHECK(sq.space_match);
  CHECK(sq.intertwined);
  CHECK(sq.twist == "adjugate");
  CHECK(sq.scalar == Rat(2));
  REQUIRE(sq.signature.has_value());
  CHECK(*sq.signature == std::pair(2, 2));

  IsomorphismCertificate pf = verify_isomorphism("asym4r-spin33");
  CHECK(pf.space_match);
  CHECK(pf.intertwined);
  CHECK(pf.twist == "pfaffian-star");
  CHECK(pf.scalar == Rat(2));
  REQUIRE(pf.signature.has_value());
  CHECK(*pf.signature == std::pair(3, 3));

  CHECK_THROWS_AS(verify_isomorphism("m13r"), error);
}
