#pragma once

#include <vector>

#include "jpair/ideals.hpp"
#include "jpair/svar.hpp"

namespace jpair {

// (alpha, beta) with alpha beta alpha = alpha and beta alpha beta = beta;
// both maps are verified structure-variety members in opposite directions.
struct IdempotentPair {
  Homotopy alpha;  // V+ -> V-
  Homotopy beta;   // V- -> V+
};

// Certifies the two composition identities and both memberships; any failure
// is a hard error.
IdempotentPair make_idempotent_pair(PairPtr p, RatMatrix alpha, RatMatrix beta);

// Canonical pseudo-inverse through the involution chart. With I = Im alpha,
// regularity amounts to ker alpha = Kern I; the compression
// gamma = psi(tau^-1 alpha) onto the ideal coordinates is then invertible and
//   beta = phi(gamma^-1) o tau^-1
// is the unique partner with image tau^-1(I) and kernel Kern I. Degenerate
// members (ker alpha != Kern(Im alpha)) and a singular compression are hard
// errors; neither occurs over the built-in positive pairs.
IdempotentPair pseudo_inverse(const PairPtr& p, const RatMatrix& alpha);
IdempotentPair pseudo_inverse(const Homotopy& alpha);

// beta' = beta alpha beta. Input beta need only satisfy alpha beta alpha =
// alpha; the result is certified to be an idempotent partner of alpha.
Homotopy improve(const Homotopy& beta, const Homotopy& alpha);

// Exact decompositions attached to an idempotent pair:
//   W+ = Im beta (+) ker alpha,   W- = Im alpha (+) ker beta,
// with beta|_{Im alpha} and alpha|_{Im beta} mutually inverse.
struct DecompositionWitness {
  Subspace im_alpha, ker_alpha, im_beta, ker_beta;
  bool plus_splits = false;
  bool minus_splits = false;
  bool mutually_inverse = false;
  bool pass() const { return plus_splits && minus_splits && mutually_inverse; }
};

DecompositionWitness decomposition(const IdempotentPair& pr);

// Converse of the decomposition lemma, at the level of plain module maps
// alpha: W+ -> W-, beta: W- -> W+ (no Jordan structure involved): if both
// sums are direct and the restrictions invert each other, then (alpha, beta)
// is idempotent. Returns false when the hypotheses fail; when they hold the
// conclusion is certified exactly.
bool splitting_implies_idempotent(const RatMatrix& alpha, const RatMatrix& beta);

// Split-fibration certificate bundle for a regular member alpha, over the
// homotope triple system T_alpha(x, y, z) = T+(x, alpha y, z) with
// K = ker alpha, J = Im beta and base I = Im alpha.
struct FibrationReport {
  IdempotentPair idem;
  Subspace base_space;   // I, in the minus chart
  Subspace fiber_space;  // K, in the plus chart
  TripleTensor base = TripleTensor::zero(0);  // T_I(u,v,w) = T-(u, beta v, w)
  DecompositionWitness witness;
  bool base_axioms = false;    // T_I satisfies the triple axioms
  bool homomorphism = false;   // alpha: (V+, T_alpha) -> (I, T_I) on basis triples
  bool splits_back = false;    // alpha o beta = id on I
  bool fiber_ideal = false;    // K is an ideal of T_alpha
  bool fiber_flat = false;     // R_alpha(K, K) V+ = 0
  bool off_diagonal_nonzero = false;  // some R_alpha(K, J) K != 0
  std::vector<RatVec> off_diagonal;   // nonzero samples in plus coords, at most 8

  bool pass() const {
    return base_axioms && homomorphism && splits_back && fiber_ideal && fiber_flat &&
           witness.pass();
  }
};

FibrationReport fibration_report(const PairPtr& p, const RatMatrix& alpha);

}  // namespace jpair
