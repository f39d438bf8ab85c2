#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpair/linalg.hpp"
#include "jpair/matrix.hpp"
#include "jpair/pair.hpp"
#include "jpair/tensor.hpp"

namespace jpair {

// ---- Lie algebras on coordinates ----------------------------------------------

// Structure-constant table on Q^dim: bracket(i, j) holds the coordinates of
// [b_i, b_j]. Construction checks antisymmetry on all basis pairs and the
// Jacobi identity on all basis triples; violations are hard errors.
class LieAlgebraTensor {
 public:
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  const RatVec& bracket(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim_ + j];
  }
  RatVec bracket(const RatVec& x, const RatVec& y) const;

  friend LieAlgebraTensor make_lie_algebra(int dim,
                                           const std::function<RatVec(int, int)>& slot,
                                           std::string name);

 private:
  int dim_ = 0;
  std::string name_;
  std::vector<RatVec> table_;
};

LieAlgebraTensor make_lie_algebra(int dim, const std::function<RatVec(int, int)>& slot,
                                  std::string name = "");

// map [x,y]_dom = [map x, map y]_cod on all basis pairs.
bool lie_homomorphism(const LieAlgebraTensor& dom, const LieAlgebraTensor& cod,
                      const RatMatrix& map);

// Trace form tr(ad x ad y) on basis pairs.
RatMatrix killing_form(const LieAlgebraTensor& g);

// ---- twisted classical algebras -------------------------------------------------

// Asym(n; K) with the bracket [X,Y]_A = X A Y - Y A X for a symmetric
// parameter A, on the alternating chart (realified over C). For A = dia(a,b,c)
// the basis e = E23-E32, f = E13-E31, k = E12-E21 obeys
//   [e,f] = c k,   [e,k] = -b f,   [f,k] = a e,
// so dia(1,1,1) is the rotation algebra and dia(0,0,1) the Heisenberg algebra.
// Non-symmetric or quaternionic parameters are errors.
LieAlgebraTensor a_orth_algebra(const ExactMatrix& a);

// M(p,q; K) with [X,Y]_A = X A Y - Y A X for a q-by-p parameter A (so
// p = a.cols(), q = a.rows()). A = (1,0)^t on M(1,2) is the affine line:
// [e1,e2] = e2.
LieAlgebraTensor a_gl_algebra(const ExactMatrix& a);

// ---- graded imbedding -----------------------------------------------------------

// q (+) [q,q] for a Lie triple system R (slot (i,j,k) = R(b_i,b_j) b_k).
// Coordinates: the q part first (q_dim of them), then h = span{R(b_i,b_j)} in
// RREF order; sigma = -id on q, +id on h.
struct GradedImbedding {
  LieAlgebraTensor algebra;
  int q_dim = 0;
  int h_dim = 0;
  RatMatrix sigma;
  std::vector<RatMatrix> h_basis;  // h as operators on the q coordinates
};

// Validates the Lie-triple axioms of r (hard error), assembles
//   [x,y] = R(x,y),   [D,x] = D x,   [D,D'] = D D' - D' D,
// and re-verifies Jacobi on the result. The bracket restricted to the q block
// reproduces r exactly.
GradedImbedding standard_imbedding(const TripleTensor& r, std::string name = "");

// ---- low-dimensional identifications --------------------------------------------

struct IsomorphismCertificate {
  std::string which;
  bool space_match = false;  // dimensions, and form signature when one applies
  bool intertwined = false;  // explicit map verified on all basis triples
  std::string twist;         // "cross-product", "identity", "adjugate", "pfaffian-star"
  Rat scalar;                // global factor of the verified identity
  std::optional<std::pair<int, int>> signature;  // (pos, neg) of the polarized form
  std::string identity;      // the verified identity, echoed symbolically
  std::string detail;        // diagnosis when a search fails
};

// which in {m13r-asym3r, m13c-asym3c, sym2r-spin21, herm2c-spin31,
// m22r-spin22, asym4r-spin33}. The first two verify the cross-product map
// between the Cartan triple systems with a global sign found by search. The
// spin ones polarize det / Pfaffian on the matrix chart, certify the
// signature, and search for an intertwiner whose plus component is the
// identity on coordinates and whose minus component is a scalar multiple of a
// declared twist. Unknown identifiers are hard errors; a failed search
// reports intertwined = false with the reason in detail.
IsomorphismCertificate verify_isomorphism(const std::string& which);

}  // namespace jpair
