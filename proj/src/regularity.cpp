#include "jpair/regularity.hpp"

#include <utility>

#include "jpair/linalg.hpp"

namespace jpair {

namespace {

Subspace image_space(const RatMatrix& m) {
  return Subspace::span(rank_kernel_image(m).image, m.rows());
}

Subspace kernel_space(const RatMatrix& m) {
  return Subspace::span(rank_kernel_image(m).kernel, m.cols());
}

// T(b_i, b_j, b_k) as a dense column.
RatVec dense_slot(const TripleTensor& t, int i, int j, int k) {
  RatVec out(static_cast<std::size_t>(t.dim()));
  t.accumulate(i, j, k, Rat(1), out);
  return out;
}

}  // namespace

IdempotentPair make_idempotent_pair(PairPtr p, RatMatrix alpha, RatMatrix beta) {
  require(p != nullptr, "idempotent pair needs a pair");
  const int d = p->dim();
  require(alpha.rows() == d && alpha.cols() == d && beta.rows() == d && beta.cols() == d,
          "idempotent pair maps have the wrong shape");
  require(alpha * beta * alpha == alpha, "alpha beta alpha differs from alpha");
  require(beta * alpha * beta == beta, "beta alpha beta differs from beta");
  Homotopy a = make_homotopy(p, Side::plus, std::move(alpha));
  Homotopy b = make_homotopy(std::move(p), Side::minus, std::move(beta));
  return {std::move(a), std::move(b)};
}

IdempotentPair pseudo_inverse(const PairPtr& p, const RatMatrix& alpha) {
  require(p != nullptr, "pseudo-inverse needs a pair");
  const int d = p->dim();
  require(alpha.rows() == d && alpha.cols() == d, "alpha has the wrong shape");
  require(svar_membership(*p, Side::plus, alpha).member,
          "alpha is not a structure-variety member");
  if (alpha.is_zero()) return make_idempotent_pair(p, alpha, RatMatrix(d, d));

  InnerIdeal image = image_ideal(p, Side::minus, alpha);
  require(kernel_space(alpha) == kern(*p, image),
          "degenerate member: ker alpha differs from Kern(Im alpha)");
  IdealFrame frame(p, image);
  RatMatrix gamma = frame.psi(frame.jts_from_pair(alpha));
  // Singular gamma cannot happen once the kernel condition holds; kept as an
  // independent guard on the same regularity condition.
  require(!determinant(gamma).is_zero(),
          "degenerate member: the ideal compression of alpha is singular");
  RatMatrix beta = frame.phi(inverse(gamma)) * p->tau_inv();
  return make_idempotent_pair(p, alpha, std::move(beta));
}

IdempotentPair pseudo_inverse(const Homotopy& alpha) {
  require(alpha.side == Side::plus, "pseudo_inverse expects a plus-side member");
  return pseudo_inverse(alpha.pair, alpha.matrix);
}

Homotopy improve(const Homotopy& beta, const Homotopy& alpha) {
  require(beta.pair == alpha.pair, "improve needs members of a single pair");
  require(alpha.side == Side::plus && beta.side == Side::minus,
          "improve takes beta: V- -> V+ against alpha: V+ -> V-");
  const RatMatrix& a = alpha.matrix;
  const RatMatrix& b = beta.matrix;
  require(a * b * a == a, "beta is not a pseudo-inverse of alpha");
  RatMatrix improved = b * a * b;
  require(a * improved * a == a, "improved map lost the pseudo-inverse identity");
  require(improved * a * improved == improved, "improved map is not an idempotent partner");
  return make_homotopy(beta.pair, Side::minus, std::move(improved), beta.antilinear);
}

DecompositionWitness decomposition(const IdempotentPair& pr) {
  const RatMatrix& a = pr.alpha.matrix;
  const RatMatrix& b = pr.beta.matrix;
  DecompositionWitness w;
  w.im_alpha = image_space(a);
  w.ker_alpha = kernel_space(a);
  w.im_beta = image_space(b);
  w.ker_beta = kernel_space(b);
  w.plus_splits = w.im_beta.sum(w.ker_alpha).dim() == a.cols() &&
                  w.im_beta.intersect(w.ker_alpha).dim() == 0;
  w.minus_splits = w.im_alpha.sum(w.ker_beta).dim() == b.cols() &&
                   w.im_alpha.intersect(w.ker_beta).dim() == 0;
  w.mutually_inverse = true;
  for (int i = 0; i < w.im_alpha.dim(); ++i) {
    RatVec v = w.im_alpha.basis_rows().row(i);
    if (!(a * (b * v) == v)) w.mutually_inverse = false;
  }
  for (int i = 0; i < w.im_beta.dim(); ++i) {
    RatVec v = w.im_beta.basis_rows().row(i);
    if (!(b * (a * v) == v)) w.mutually_inverse = false;
  }
  return w;
}

bool splitting_implies_idempotent(const RatMatrix& alpha, const RatMatrix& beta) {
  require(alpha.cols() == beta.rows() && alpha.rows() == beta.cols(),
          "maps do not form a pair of opposite directions");
  Subspace im_a = image_space(alpha), ker_a = kernel_space(alpha);
  Subspace im_b = image_space(beta), ker_b = kernel_space(beta);
  if (im_b.sum(ker_a).dim() != alpha.cols() || im_b.intersect(ker_a).dim() != 0) return false;
  if (im_a.sum(ker_b).dim() != beta.cols() || im_a.intersect(ker_b).dim() != 0) return false;
  for (int i = 0; i < im_a.dim(); ++i) {
    RatVec v = im_a.basis_rows().row(i);
    if (!(alpha * (beta * v) == v)) return false;
  }
  for (int i = 0; i < im_b.dim(); ++i) {
    RatVec v = im_b.basis_rows().row(i);
    if (!(beta * (alpha * v) == v)) return false;
  }
  require(alpha * beta * alpha == alpha && beta * alpha * beta == beta,
          "splitting held but idempotency failed");
  return true;
}

FibrationReport fibration_report(const PairPtr& p, const RatMatrix& alpha) {
  FibrationReport rep;
  rep.idem = pseudo_inverse(p, alpha);
  const RatMatrix& b = rep.idem.beta.matrix;
  const int d = p->dim();
  rep.base_space = image_space(alpha);
  rep.fiber_space = kernel_space(alpha);
  rep.witness = decomposition(rep.idem);

  // Base product in the row-echelon coordinates of I.
  const int r = rep.base_space.dim();
  const RatMatrix& irows = rep.base_space.basis_rows();
  const RatMatrix icols = irows.transpose();
  std::vector<SparseVec> slots;
  slots.reserve(static_cast<std::size_t>(r) * r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        RatVec t = triple_eval(p->tensor(Side::minus), irows.row(i), b * irows.row(j),
                               irows.row(k));
        auto c = solve(icols, t);
        require(c.has_value(), "base product left the image ideal");
        slots.push_back(sparse_from_dense(*c));
      }
  rep.base = TripleTensor::materialized(
      r, [&](int i, int j, int k) { return slots[(static_cast<std::size_t>(i) * r + j) * r + k]; });
  rep.base_axioms = check_triple_axioms(rep.base, TripleKind::jts).pass;

  // alpha as a morphism of triple systems, swept over basis triples.
  TripleTensor talpha = homotope_jts(rep.idem.alpha);
  std::vector<RatVec> acol;
  acol.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) acol.push_back(alpha.col(j));
  rep.homomorphism = true;
  for (int i = 0; i < d && rep.homomorphism; ++i)
    for (int j = 0; j < d && rep.homomorphism; ++j)
      for (int k = 0; k < d; ++k) {
        RatVec lhs = alpha * dense_slot(talpha, i, j, k);
        RatVec rhs = triple_eval(p->tensor(Side::minus), acol[i], b * acol[j], acol[k]);
        if (!(lhs == rhs)) {
          rep.homomorphism = false;
          break;
        }
      }

  rep.splits_back = true;
  for (int i = 0; i < r; ++i) {
    RatVec v = irows.row(i);
    if (!(alpha * (b * v) == v)) rep.splits_back = false;
  }

  // K = ker alpha is an ideal: products with K in the first or middle slot land
  // in K (outer symmetry covers the third slot).
  const int kd = rep.fiber_space.dim();
  const RatMatrix& krows = rep.fiber_space.basis_rows();
  rep.fiber_ideal = true;
  for (int ki = 0; ki < kd && rep.fiber_ideal; ++ki)
    for (int i = 0; i < d && rep.fiber_ideal; ++i)
      for (int j = 0; j < d; ++j) {
        RatVec kb = krows.row(ki);
        RatVec ei(static_cast<std::size_t>(d)), ej(static_cast<std::size_t>(d));
        ei[static_cast<std::size_t>(i)] = Rat(1);
        ej[static_cast<std::size_t>(j)] = Rat(1);
        if (!rep.fiber_space.contains(triple_eval(talpha, kb, ei, ej)) ||
            !rep.fiber_space.contains(triple_eval(talpha, ei, kb, ej))) {
          rep.fiber_ideal = false;
          break;
        }
      }

  TripleTensor ralpha = homotope_lts(rep.idem.alpha);
  rep.fiber_flat = true;
  for (int ki = 0; ki < kd && rep.fiber_flat; ++ki)
    for (int kj = ki + 1; kj < kd && rep.fiber_flat; ++kj)
      for (int z = 0; z < d; ++z) {
        RatVec ez(static_cast<std::size_t>(d));
        ez[static_cast<std::size_t>(z)] = Rat(1);
        if (!is_zero(triple_eval(ralpha, krows.row(ki), krows.row(kj), ez))) {
          rep.fiber_flat = false;
          break;
        }
      }

  const RatMatrix& jrows = rep.witness.im_beta.basis_rows();
  for (int ki = 0; ki < kd; ++ki)
    for (int jj = 0; jj < rep.witness.im_beta.dim(); ++jj)
      for (int kl = 0; kl < kd; ++kl) {
        RatVec v = triple_eval(ralpha, krows.row(ki), jrows.row(jj), krows.row(kl));
        if (is_zero(v)) continue;
        rep.off_diagonal_nonzero = true;
        if (rep.off_diagonal.size() < 8) rep.off_diagonal.push_back(std::move(v));
      }
  return rep;
}

}  // namespace jpair
