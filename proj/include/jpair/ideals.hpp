#pragma once

#include <string>
#include <vector>

#include "jpair/pair.hpp"
#include "jpair/svar.hpp"

namespace jpair {

// Image of a subspace under a coordinate map: span{ m b : b basis }.
Subspace map_subspace(const RatMatrix& m, const Subspace& s);

// An inner ideal: a subspace I of one side with T(I, V_other, I) contained in
// I. Instances are produced verified; `kind` records which classified
// constructor built it ("rect", "principal", "point", "isotropic", "image",
// "custom").
struct InnerIdeal {
  PairPtr pair;
  Side side = Side::minus;
  Subspace space;
  std::string kind = "custom";
};

// T_side(b_i, e_k, b_j) lies in the span for all basis combinations.
bool inner_ideal_check(const JordanPair& p, Side side, const Subspace& s);

// Wraps an independent spanning set as a verified inner ideal. Dependent
// generators and non-invariant subspaces are hard errors.
InnerIdeal make_inner_ideal(const PairPtr& p, Side side, const std::vector<RatVec>& basis,
                            const std::string& kind = "custom");

// Column space of a coordinate map landing in V_side, verified inner. This is
// the ideal attached to a structure-variety member or to the h-component of a
// structural transformation.
InnerIdeal image_ideal(const PairPtr& p, Side side, const RatMatrix& map);

// Classified constructors. Vectors are rational coordinates in the model's
// column spaces; matrix-model descriptors require the real field.
//   rect       I_{a,b} = maps killing a with image inside b  (a in K^p, b in K^q
//              for the minus side of rect(p,q); roles transpose on plus)
//   principal  self- or skew-adjoint maps with image inside b (sym / asym)
//   point      K_u = skew maps sending the hyperplane u-perp into the line K u
//   isotropic  a beta-isotropic subspace of a spin pair
struct IdealDescriptor {
  std::string kind;  // "rect" | "principal" | "point" | "isotropic"
  Side side = Side::minus;
  std::vector<RatVec> a, b;
  RatVec u;
  std::vector<RatVec> basis;
};

InnerIdeal make_inner_ideal(const PairPtr& p, const IdealDescriptor& d);

// Kern I = { x in V_other | T(I, x, I) = 0 }, the joint kernel of the maps
// x -> T(b_i, x, b_j). The quadratic variant intersects ker Q(y) over the
// basis and its pairwise sums; the two agree identically.
Subspace kern(const JordanPair& p, const InnerIdeal& ideal);
Subspace kern_via_quadratic(const JordanPair& p, const InnerIdeal& ideal);

// Kern I against the trace-form orthocomplement of I, plus the splitting
// V = I (+) Kern I read in the associated triple system (tau transports the
// minus side). Both hold for every inner ideal of a positive pair.
struct OrthoCertificate {
  bool equal = false;
  bool splits = false;
  Subspace kern_space;  // subspace of the opposite side
  Subspace trace_perp;
};
OrthoCertificate kern_is_orthocomplement(const JordanPair& p, const InnerIdeal& ideal);

// J complements I when V_I = I (+) Kern J and V_J = J (+) Kern I.
struct ComplementCertificate {
  bool pass = false;
  bool ideal_side_splits = false;       // I (+) Kern J exhausts I's side
  bool complement_side_splits = false;  // J (+) Kern I exhausts J's side
  Subspace kern_of_ideal, kern_of_complement;
};
ComplementCertificate complement_check(const JordanPair& p, const InnerIdeal& ideal,
                                       const InnerIdeal& complement);

// The involution image J = tau(I) on the opposite side, verified to be an
// inner ideal and a complement; failure is a hard error (positive involutions
// complement every inner ideal).
InnerIdeal complement_construct(const PairPtr& p, const InnerIdeal& ideal);

// Splitting frame of a complemented inner ideal inside the associated triple
// system V = (V+, T(x,y,z) = T+(x, tau y, z)): projection pi and injection
// iota for V = I (+) Kern I, the induced triple system on I, and the mutually
// inverse maps
//   phi(gamma) = iota gamma pi   (members over I -> members over V)
//   psi(alpha) = pi alpha iota   (members over V -> members over I)
// with Im phi = { alpha : Im alpha inside I, Kern I inside ker alpha }.
class IdealFrame {
 public:
  IdealFrame(PairPtr p, const InnerIdeal& ideal);

  const PairPtr& ambient_jts() const { return ambient_; }  // (V, V), both tensors T
  const PairPtr& ideal_jts() const { return restricted_; }
  const Subspace& ideal_space() const { return ideal_; }  // inside the plus chart
  const Subspace& kern_space() const { return kern_; }
  const RatMatrix& iota() const { return iota_; }
  const RatMatrix& pi() const { return pi_; }

  // Triple-system-level members are square matrices on V+; gamma is square on
  // the ideal coordinates. phi rejects gamma outside Svar of the ideal and
  // certifies its output.
  RatMatrix phi(const RatMatrix& gamma) const;
  RatMatrix psi(const RatMatrix& alpha) const;
  bool in_phi_image(const RatMatrix& alpha) const;

  // Translation between pair members V+ -> V- and triple-system members
  // V+ -> V+ (composition with the involution).
  RatMatrix pair_from_jts(const RatMatrix& a) const;
  RatMatrix jts_from_pair(const RatMatrix& alpha) const;

 private:
  PairPtr pair_;
  PairPtr ambient_, restricted_;
  Subspace ideal_, kern_;
  RatMatrix iota_, pi_;
};

// Point spaces K_u inside the alternating pairs: the induced triple system is
// the rank-one rectangular one twisted by `pairing`, the Gram of the border
// frame scaled by <u,u>. For u = e_n the pairing is the identity and the match
// is on the nose.
struct PointSpaceReport {
  InnerIdeal ideal;        // K_u, dimension n-1
  RatMatrix frame;         // columns: coordinates of the border frame f_1..f_{n-1}
  RatMatrix pairing;       // <u,u> * Gram(w_i) for the chosen basis w_i of u-perp
  bool product_law = false;     // T(f_i, tau f_j, f_k) = pairing[j][k] f_i + pairing[i][j] f_k
  bool proportional = false;    // f g f proportional to f for every f in K_u, g in V
  bool half_trace_law = false;  // f g f = (tr(f g)/2) f inside K_u, checked polarized
  bool kern_flat = false;       // f g f = 0 for g in Kern K_u
  bool lines_inner = false;     // every line K f_i is itself an inner ideal
  bool projective_form = false; // pairing == identity
};
PointSpaceReport point_space_structure(const PairPtr& p, const RatVec& u);

}  // namespace jpair
