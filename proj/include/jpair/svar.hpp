#pragma once

#include <optional>

#include "jpair/pair.hpp"

namespace jpair {

// ---- structure-variety membership -------------------------------------------

struct SvarReport {
  bool member = false;
  // Basis triple (u, v, w) of the domain side violating the identity.
  std::optional<std::array<int, 3>> witness;
};

// alpha maps `side` coordinates to the other side's coordinates. Membership:
//   T_other(alpha u, v, alpha w) = alpha T_side(u, alpha v, w)
// for all basis triples (u, v, w) of the side space; basis triples suffice by
// trilinearity over the realified coordinates (antilinear maps included).
SvarReport svar_membership(const JordanPair& p, Side side, const RatMatrix& alpha);

// Quadratic-operator form of the same condition,
//   Q_other(alpha x) = alpha Q_side(x) alpha,
// swept over basis vectors and pairwise polarizations. Agrees with
// svar_membership; kept as an independent cross-check.
bool svar_membership_quadratic(const JordanPair& p, Side side, const RatMatrix& alpha);

// A verified element of the structure variety.
struct Homotopy {
  PairPtr pair;
  Side side = Side::plus;
  RatMatrix matrix;         // side coords -> other-side coords
  bool antilinear = false;  // informational tag; all maps are R-linear here
};

// Verifies membership and wraps; non-members are hard errors.
Homotopy make_homotopy(PairPtr p, Side side, RatMatrix alpha, bool antilinear = false);

// ---- homotope triple systems -------------------------------------------------

// T_alpha(x, y, z) = T_side(x, alpha y, z) on the side space. Materialized up
// to dimension 24, lazily evaluated beyond.
TripleTensor homotope_jts(const Homotopy& alpha);

// R_alpha(x, y) z = T_alpha(x, y, z) - T_alpha(y, x, z).
TripleTensor homotope_lts(const Homotopy& alpha);

enum class TripleKind { jts, lts };
inline const char* triple_kind_name(TripleKind k) { return k == TripleKind::jts ? "jts" : "lts"; }

struct TriplePolicy {
  int exhaustive_dim = 12;  // exhaustive five-linear sweep up to this dimension
  int samples = 200;        // seeded random 5-tuples beyond
  std::uint64_t seed = 54321;
};

struct TripleAxiomReport {
  bool pass = true;
  bool exhaustive = true;       // refers to the five-linear identity
  long long tuples_checked = 0;
  std::vector<AxiomWitness> failures;
};

// JTS: outer symmetry plus the five-linear identity. LTS: antisymmetry, the
// cyclic sum, and the derivation identity. Trilinear identities are always
// swept exhaustively; the five-linear ones follow the policy.
TripleAxiomReport check_triple_axioms(const TripleTensor& t, TripleKind kind,
                                      const TriplePolicy& policy = {});

// ---- structural transformations ----------------------------------------------

struct StructuralReport {
  bool pass = false;
  std::string identity;                       // failing identity when !pass
  std::optional<std::array<int, 3>> witness;  // basis indices of the failure
};

// (g: V+ -> W+, h: W- -> V-) with both transport identities on basis triples:
//   g T+_V(u, h v, w) = T+_W(g u, v, g w)   for u, w in V+, v in W-,
//   h T-_W(v, g w, z) = T-_V(h v, w, h z)   for v, z in W-, w in V+.
StructuralReport structural_check(const JordanPair& V, const JordanPair& W,
                                  const RatMatrix& g, const RatMatrix& h);

struct StructuralPair {
  PairPtr domain;    // V
  PairPtr codomain;  // W
  RatMatrix g, h;
};

// Verifies the transport identities; failures are hard errors.
StructuralPair make_structural(PairPtr domain, PairPtr codomain, RatMatrix g, RatMatrix h);

// Category composition (g,h)(g',h') = (g o g', h' o h): outer V->W composed
// with inner U->V yields U->W. Re-verified on construction.
StructuralPair compose(const StructuralPair& outer, const StructuralPair& inner);

// Pulls a plus-side homotopy alpha on V back along (g,h): W -> V to
// h o alpha o g on W, verifying membership and certifying that g is a
// homomorphism of the homotope triple systems:
//   g T_{h alpha g}(u, v, w) = T_alpha(g u, g v, g w) on basis triples.
struct TransferResult {
  Homotopy pulled;
  bool homomorphism_certified = false;
};
TransferResult transfer(const Homotopy& alpha, const StructuralPair& gh);

// ---- polarized pairs -----------------------------------------------------------

// The direct sum of p with its opposite: (V+ (+) V-, V- (+) V+). Carries the
// exchange involution, making the plus space a polarized triple system.
PairPtr polarized_pair(const PairPtr& p);

// Embeds a structural endomorphism (f: V+ -> V+, h: V- -> V-) of p as the
// block-exchange homotopy (u, v) |-> (h v, f u) of the polarized pair.
// Membership of the block map is verified on construction.
Homotopy embed_structural(const PairPtr& p, const RatMatrix& f, const RatMatrix& h);

// ---- associative pairs ----------------------------------------------------------

enum class AssocMode { standard, opposite };

// Structure variety of the rectangular associative pair <x,y,z> = xyz, in one
// of the two senses:
//   standard:  <alpha u, v, alpha w> = alpha <u, alpha v, w>
//   opposite:  alpha <x, alpha y, z> = <alpha z, y, alpha x>
// Either one implies membership for the symmetrized Jordan pair (verified).
SvarReport assoc_svar_membership(const JordanPair& p, const RatMatrix& alpha, AssocMode mode);

}  // namespace jpair
