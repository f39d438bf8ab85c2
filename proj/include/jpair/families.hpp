#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jpair/ideals.hpp"
#include "jpair/pair.hpp"
#include "jpair/rng.hpp"
#include "jpair/svar.hpp"

namespace jpair {

// Parametrized generators for the classification tables of structure-variety
// members on the matrix-model pairs, plus the characterization predicates
// (spin pairs, the two-by-two exchange example) and their equivalence sweeps
// against raw membership.

// Symmetry class a parameter matrix must satisfy. `full` is unconstrained
// (shape q-by-p on rectangular sandwich rows, square elsewhere).
enum class ParamKind : unsigned char { none, full, sym, skew, herm, skew_herm };

// How a row assembles its map from the parameters.
//   sandwich            X -> A Xin S        (S = A, conj A, or A^H per flags)
//   transpose_sandwich  X -> A Xin^t B      (rectangular rows with two params)
//   border              X -> P Xin A + A Xin P with P rank one from u; the
//                       conjugated variant conjugates the second term wholesale.
enum class RowForm : unsigned char { sandwich, transpose_sandwich, border };

struct FamilyRow {
  std::string label;  // table label, primes as ASCII apostrophe ("3.c'")
  PairType pair = PairType::rect;
  RowForm form = RowForm::sandwich;
  bool real_ok = false, complex_ok = false, quat_ok = false;
  ParamKind a_kind = ParamKind::none;
  ParamKind b_kind = ParamKind::none;  // transpose_sandwich only
  bool uses_u = false;                 // border rows
  bool conj_x = false;                 // conjugate the argument first
  bool conj_second = false;            // trailing sandwich factor is conj(A)
  bool adjoint_second = false;         // trailing sandwich factor is A^H
  bool negated = false;
};

struct FamilyParams {
  std::optional<ExactMatrix> a, b;
  std::optional<ExactMatrix> u;  // n-by-1 column for border rows
};

// A constructed member with its linear-algebra data attached. `image` lives
// in the minus chart, `kernel` in the plus chart.
struct FamilyMember {
  Homotopy member;
  FamilyRow row;
  int rank = 0;
  Subspace image, kernel;
};

// The registry of in-scope rows. Split-scalar rows (1.3.c, 4.3.*) are not
// listed; asking for them raises the out-of-scope error below.
const std::vector<FamilyRow>& family_rows();

// Lookup by label (Unicode prime accepted). Unknown labels and split-scalar
// rows are hard errors ("out-of-scope scalar ...").
const FamilyRow& family_row(const std::string& label);

// Builds the row's map in pair coordinates, hard-verifies membership, and
// attaches rank / image / kernel. Parameter schema violations are errors.
FamilyMember family_alpha(const PairPtr& p, const std::string& label,
                          const FamilyParams& params);

// Row-compatible random parameters: integer entries in [-3, 3], symmetrized
// to the row's class (A + A^t, A - A^t, A + A^H, A - A^H).
FamilyParams random_family_params(const FamilyRow& row, const JordanPair& p, SeededRng& rng);

// ---- spin members --------------------------------------------------------
// On a real spin pair, members are exactly the form-symmetric maps with
// alpha^2 = lambda id. The descriptor picks the sign of lambda and the
// spectral data; alpha^2 = lambda_sign * scale^2 * id.
//   +1  reflection through `space` scaled by `scale`; the form must be
//       nondegenerate on `space` (empty space gives -scale * id).
//    0  scale * sum_i v_i v_i^t G over `space`, which must be totally
//       isotropic for the form.
//   -1  scale * (standard complex structure); needs the split signature
//       form diag(1..1, -1..-1) with p = q.
struct SpinDescriptor {
  int lambda_sign = 1;
  Rat scale = Rat(1);
  std::vector<RatVec> space;
};

Homotopy spin_family_alpha(const PairPtr& p, const SpinDescriptor& d);

// Characterization predicate on a spin pair: form-symmetric and square a
// scalar. Equivalent to raw membership in dimension >= 3.
bool rivillis_predicate(const JordanPair& p, const RatMatrix& alpha);

struct EquivalenceReport {
  long long checked = 0;
  long long members = 0;
  bool agree = true;
  std::optional<RatMatrix> witness;  // first disagreement, if any
};

// Predicate vs raw membership: exhaustive integer grid with entries in
// [-grid_radius, grid_radius] (skipped when the grid would exceed ~10^5
// candidates) plus seeded random samples with entries in [-3, 3].
EquivalenceReport rivillis_equivalence(const PairPtr& p, int grid_radius, int samples,
                                       std::uint64_t seed);

// ---- the two-by-two exchange example --------------------------------------
// K x K with T(x,y,z) = 2xyz componentwise, realized as the direct sum of two
// one-by-one rectangular pairs. Members are the diagonal matrices together
// with the multiples of the exchange map.
PairPtr ktwo_pair();
bool ktwo_predicate(const RatMatrix& alpha);
EquivalenceReport ktwo_equivalence();  // exhaustive over entries in [-2, 2]

// ---- structural endomorphisms ---------------------------------------------
// Rows of the endomorphism table: "1.a", "1.b" (rectangular), "2" (sym),
// "3.a", "3.b" (alternating), "4" (hermitian, either scalar ring). A trailing
// '~' picks the antilinear variant over C: (g, h) becomes (g o conj, conj o h).
// The returned pair is verified structural; embedding it into the polarized
// double gives a structure-variety member.
StructuralPair structural_endo_family(const PairPtr& p, const std::string& label,
                                      const FamilyParams& params);

}  // namespace jpair
