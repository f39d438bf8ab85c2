#include <doctest.h>

#include "helpers.hpp"
#include "jpair/chart.hpp"
#include "jpair/linalg.hpp"
#include "jpair/rng.hpp"

using namespace jpair;
using namespace jpair::testing;

TEST_CASE("rationals are canonical and serialize as p/q") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(6, 4).str() == "3/2");
  CHECK(Rat(3).str() == "3/1");
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(1, -2).str() == "-1/2");
  CHECK(Rat(0, 7).str() == "0/1");
  CHECK(Rat::from_string("-6/4") == Rat(-3, 2));
  CHECK(Rat::from_string("7") == Rat(7));
  CHECK(Rat::from_string("+9/3") == Rat(3));
  CHECK_THROWS_AS(Rat::from_string("1/0"), error);
  CHECK_THROWS_AS(Rat::from_string("a/2"), error);
  CHECK_THROWS_AS(Rat::from_string(""), error);
  CHECK_THROWS_AS(Rat(1, 0), error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), error);
}

TEST_CASE("rational field laws hold on seeded samples") {
  SeededRng rng(7);
  for (int it = 0; it < 300; ++it) {
    Rat a = rng.rat(-20, 20, 9), b = rng.rat(-20, 20, 9), c = rng.rat(-20, 20, 9);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (a < b) CHECK(a + c < b + c);
    CHECK(a - b == -(b - a));
  }
}

TEST_CASE("rational overflow promotes to bignum and demotes when it fits") {
  Rat m(INT64_MAX);
  Rat two_m = m + m;
  CHECK(two_m.is_big());
  CHECK(two_m.str() == "18446744073709551614/1");
  Rat back = two_m - m;
  CHECK_FALSE(back.is_big());
  CHECK(back == m);

  Rat sq = m * m;
  CHECK(sq.is_big());
  CHECK(sq / m == m);

  Rat u(1, INT64_MAX), v(1, INT64_MAX - 1);
  Rat expected(BigInt(INT64_MAX) + BigInt(INT64_MAX) - 1,
               BigInt(INT64_MAX) * (BigInt(INT64_MAX) - 1));
  CHECK(u + v == expected);
  CHECK((u + v) - v == u);

  // Fraction fast path with cross-reduction.
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) + Rat(5, 6) == Rat(3, 2));
  CHECK(Rat(7, 12).pow(3) == Rat(343, 1728));
  CHECK(Rat(-2, 5).pow(-2) == Rat(25, 4));
}

TEST_CASE("quaternion scalar arithmetic follows Hamilton's rule") {
  Field H = Field::quaternion;
  Scalar i = Scalar::unit(H, 1), j = Scalar::unit(H, 2), k = Scalar::unit(H, 3);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == -Scalar::one(H));
  Scalar q(H, {Rat(1), Rat(-2), Rat(3), Rat(1, 2)});
  CHECK(q.conj() * q == Scalar(H, q.norm2()));
  CHECK(q * q.inv() == Scalar::one(H));
  CHECK_THROWS_AS(Scalar::zero(H).inv(), error);
  CHECK_THROWS_AS(Scalar(Field::real, {Rat(1), Rat(1), Rat(0), Rat(0)}), error);
}

TEST_CASE("exact matrices: conjugate transpose is an anti-homomorphism") {
  SeededRng rng(11);
  Field H = Field::quaternion;
  auto rand_mat = [&](int r, int c) {
    ExactMatrix m(H, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        std::array<Rat, 4> comps;
        for (auto& x : comps) x = rng.rat(-3, 3);
        m.at(i, j) = Scalar(H, comps);
      }
    return m;
  };
  for (int it = 0; it < 20; ++it) {
    ExactMatrix a = rand_mat(2, 3), b = rand_mat(3, 2);
    CHECK((a * b).conj_transpose() == b.conj_transpose() * a.conj_transpose());
  }
}

TEST_CASE("rank, kernel and image of [[1,2],[2,4]]") {
  RatMatrix m = qmat({{1, 2}, {2, 4}});
  RankKernelImage rki = rank_kernel_image(m);
  CHECK(rki.rank == 1);
  REQUIRE(rki.kernel.size() == 1);
  // Kernel as a subspace equals span{(2,-1)}.
  Subspace got = Subspace::span(rki.kernel, 2);
  Subspace want = Subspace::span({qvec({2, -1})}, 2);
  CHECK(got == want);
  CHECK(rki.image.size() == 1);
  CHECK(Subspace::span(rki.image, 2) == Subspace::span({qvec({1, 2})}, 2));
}

TEST_CASE("coordinate matrix of X -> A X^t B has rank 1 for A = B = diag(1,0)") {
  Chart ch = make_chart(ModelKind::rect, Field::real, 2, 2);
  ExactMatrix a = rmat({{1, 0}, {0, 0}});
  RatMatrix coord = coordinate_matrix(
      ch, ch, [&](const ExactMatrix& x) { return a * x.transpose() * a; });
  CHECK(rank_kernel_image(coord).rank == 1);
}

TEST_CASE("solve and inverse") {
  RatMatrix m = qmat({{1, 2}, {2, 4}});
  auto x = solve(m, qvec({1, 2}));
  REQUIRE(x.has_value());
  CHECK(m * *x == RatVec{Rat(1), Rat(2)});
  CHECK_FALSE(solve(m, qvec({1, 1})).has_value());

  CHECK(determinant(qmat({{1, 2}, {3, 4}})) == Rat(-2));
  CHECK_THROWS_AS(inverse(m), error);

  SeededRng rng(23);
  for (int it = 0; it < 10; ++it) {
    RatMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = rng.rat(-5, 5);
    if (determinant(a).is_zero()) continue;
    CHECK(a * inverse(a) == RatMatrix::identity(3));
  }
}

TEST_CASE("congruent diagonalization signatures") {
  Congruence c1 = congruent_diagonalize(qmat({{1, 0}, {0, -1}}));
  CHECK(c1.pos == 1);
  CHECK(c1.neg == 1);
  CHECK(c1.zero == 0);

  Congruence c0 = congruent_diagonalize(RatMatrix(2, 2));
  CHECK(c0.pos == 0);
  CHECK(c0.neg == 0);
  CHECK(c0.zero == 2);

  CHECK_THROWS_AS(congruent_diagonalize(qmat({{0, 1}, {0, 0}})), error);

  // Off-diagonal (hyperbolic) form needs the polarization step.
  Congruence hyp = congruent_diagonalize(qmat({{0, 1}, {1, 0}}));
  CHECK(hyp.pos == 1);
  CHECK(hyp.neg == 1);
}

TEST_CASE("Gram of the Pfaffian polarization on 6 coordinates has signature (3,3)") {
  // q(x) = x12 x34 - x13 x24 + x14 x23 in the lex pair coordinates
  // (12, 13, 14, 23, 24, 34).
  auto q = [](const RatVec& x) { return x[0] * x[5] - x[1] * x[4] + x[2] * x[3]; };
  RatMatrix g(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      RatVec ei(6), ej(6), eij(6);
      ei[i] = Rat(1);
      ej[j] = Rat(1);
      eij[i] += Rat(1);
      eij[j] += Rat(1);
      g.at(i, j) = Rat(1, 2) * (q(eij) - q(ei) - q(ej));
    }
  Congruence c = congruent_diagonalize(g);
  CHECK(c.pos == 3);
  CHECK(c.neg == 3);
  CHECK(c.zero == 0);
}

TEST_CASE("realified charts read off the documented coordinates") {
  Chart sym2 = make_chart(ModelKind::sym, Field::real, 2, 2);
  CHECK(sym2.dim() == 3);
  CHECK(sym2.to_coords(rmat({{1, 0}, {0, 2}})) == qvec({1, 2, 0}));

  Chart c11 = make_chart(ModelKind::rect, Field::complex, 1, 1);
  CHECK(c11.to_coords(scalar_matrix(cplx(2, 3))) == qvec({2, 3}));

  Chart asym3 = make_chart(ModelKind::asym, Field::real, 3, 3);
  // Cross-product matrix of e1: nonzero slots (2,3) = -1, (3,2) = +1.
  CHECK(asym3.to_coords(rmat({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}})) == qvec({0, 0, -1}));

  Chart hermC2 = make_chart(ModelKind::hermC, Field::complex, 2, 2);
  CHECK(hermC2.dim() == 4);
  ExactMatrix h(Field::complex, 2, 2);
  h.at(0, 0) = cplx(5, 0);
  h.at(0, 1) = cplx(1, -2);
  h.at(1, 0) = cplx(1, 2);
  h.at(1, 1) = cplx(7, 0);
  CHECK(hermC2.to_coords(h) == qvec({5, 7, 1, -2}));

  Chart hermH1 = make_chart(ModelKind::hermH, Field::quaternion, 1, 1);
  CHECK(hermH1.dim() == 1);
  Chart hermH2 = make_chart(ModelKind::hermH, Field::quaternion, 2, 2);
  CHECK(hermH2.dim() == 6);
}

TEST_CASE("charts reject elements outside their model") {
  Chart sym2 = make_chart(ModelKind::sym, Field::real, 2, 2);
  CHECK_THROWS_AS(sym2.to_coords(rmat({{1, 2}, {3, 4}})), error);
  Chart asym2 = make_chart(ModelKind::asym, Field::real, 2, 2);
  CHECK_THROWS_AS(asym2.to_coords(rmat({{1, 0}, {0, 1}})), error);
  Chart hermC2 = make_chart(ModelKind::hermC, Field::complex, 2, 2);
  ExactMatrix notherm(Field::complex, 2, 2);
  notherm.at(0, 0) = cplx(0, 1);  // imaginary diagonal
  CHECK_THROWS_AS(hermC2.to_coords(notherm), error);
  Chart r22 = make_chart(ModelKind::rect, Field::real, 2, 2);
  CHECK_THROWS_AS(r22.to_coords(rmat({{1}, {2}})), error);
}

TEST_CASE("chart round trips on seeded coordinates") {
  SeededRng rng(31);
  std::vector<Chart> charts;
  charts.push_back(make_chart(ModelKind::rect, Field::quaternion, 2, 3));
  charts.push_back(make_chart(ModelKind::sym, Field::complex, 3, 3));
  charts.push_back(make_chart(ModelKind::asym, Field::real, 4, 4));
  charts.push_back(make_chart(ModelKind::hermC, Field::complex, 3, 3));
  charts.push_back(make_chart(ModelKind::hermH, Field::quaternion, 2, 2));
  charts.push_back(make_chart(ModelKind::spin, Field::real, 4, 1));
  for (const Chart& ch : charts)
    for (int it = 0; it < 10; ++it) {
      RatVec v(ch.dim());
      for (auto& x : v) x = rng.rat(-4, 4, 3);
      CHECK(ch.to_coords(ch.from_coords(v)) == v);
    }
}

TEST_CASE("subspaces are canonical and obey the dimension formula") {
  CHECK(Subspace::span({qvec({2, -1})}, 2) == Subspace::span({qvec({-4, 2})}, 2));

  Subspace x = Subspace::span({qvec({1, 0, 0, 0}), qvec({0, 1, 0, 0})}, 4);
  Subspace y = Subspace::span({qvec({0, 1, 0, 0}), qvec({0, 0, 1, 0})}, 4);
  CHECK(x.intersect(y) == Subspace::span({qvec({0, 1, 0, 0})}, 4));
  CHECK(x.sum(y).dim() == 3);
  CHECK(Subspace::span({qvec({1, 0, 0, 0})}, 4).perp() ==
        Subspace::span({qvec({0, 1, 0, 0}), qvec({0, 0, 1, 0}), qvec({0, 0, 0, 1})}, 4));

  SeededRng rng(41);
  for (int it = 0; it < 20; ++it) {
    auto rnd = [&](int k) {
      std::vector<RatVec> vs;
      for (int i = 0; i < k; ++i) {
        RatVec v(5);
        for (auto& c : v) c = Rat(rng.range(-3, 3));
        vs.push_back(std::move(v));
      }
      return Subspace::span(vs, 5);
    };
    Subspace a = rnd(rng.index(4) + 1), b = rnd(rng.index(4) + 1);
    CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersect(b).dim());
    CHECK(a.sum(b).contains(a));
    CHECK(a.contains(a.intersect(b)));
    CHECK(a.perp().perp() == a);
  }
}
