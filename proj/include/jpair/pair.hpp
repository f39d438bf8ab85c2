#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "jpair/chart.hpp"
#include "jpair/linalg.hpp"
#include "jpair/tensor.hpp"

namespace jpair {

enum class Side : unsigned char { plus = 0, minus = 1 };
inline Side other(Side s) { return s == Side::plus ? Side::minus : Side::plus; }
inline const char* side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

enum class PairType { rect, sym, asym, hermC, hermH, spin, direct_sum, opposite, custom };

class JordanPair;
using PairPtr = std::shared_ptr<const JordanPair>;

// A Jordan pair in realified coordinates: two spaces of equal dimension with
// trilinear products T+ and T-. Matrix-model pairs carry charts back to the
// untranslated objects; synthetic pairs (direct sums, opposites, polarized
// doubles) are tensor-only. Instances are immutable after construction; the
// lazily built members are guarded so concurrent reads are safe.
class JordanPair {
 public:
  PairType type() const { return type_; }
  Field field() const { return field_; }
  const std::string& name() const { return name_; }
  int dim() const { return cplus_.dim(); }
  int param_p() const { return p_; }
  int param_q() const { return q_; }

  bool has_charts() const { return chart_plus_.has_value(); }
  const Chart& chart(Side s) const;
  const TripleTensor& tensor(Side s) const { return s == Side::plus ? cplus_ : cminus_; }
  const RatMatrix& spin_form() const;
  bool has_tau() const;

  // Cartan involution as a coordinate matrix V+ -> V- (and its inverse).
  // Built on demand; the positivity certificate lives in cartan_involution().
  const RatMatrix& tau() const;
  const RatMatrix& tau_inv() const;

  // Trace-form Grams: gram(plus) pairs V+ rows with V- columns via T+, and
  // gram(minus) the mirror. Non-degeneracy makes them mutual transposes.
  const RatMatrix& gram(Side s) const;

  // The associated triple system on V+ with T(x,y,z) = T+(x, tau(y), z), plus
  // its (symmetric) trace Gram.
  const TripleTensor& cartan_jts() const;
  const RatMatrix& jts_gram() const;

  const std::vector<PairPtr>& parts() const { return parts_; }  // direct sums
  PairPtr base() const { return base_; }                        // opposite views

  struct Init {
    PairType type = PairType::custom;
    Field field = Field::real;
    std::string name;
    int p = 0, q = 0;
    std::optional<Chart> chart_plus, chart_minus;
    TripleTensor cplus, cminus;
    std::optional<RatMatrix> spin_form;
    std::optional<RatMatrix> tau;  // preset for synthetic pairs
    std::vector<PairPtr> parts;
    PairPtr base;
  };
  explicit JordanPair(Init init);

 private:
  void build_tau() const;
  void build_gram() const;
  void build_jts() const;
  void build_jts_gram() const;

  PairType type_;
  Field field_;
  std::string name_;
  int p_, q_;
  std::optional<Chart> chart_plus_, chart_minus_;
  TripleTensor cplus_, cminus_;
  std::optional<RatMatrix> spin_form_;
  std::vector<PairPtr> parts_;
  PairPtr base_;

  mutable std::once_flag tau_once_, gram_once_, jts_once_, jts_gram_once_;
  mutable std::optional<RatMatrix> tau_, tau_inv_;
  mutable std::optional<RatMatrix> gram_plus_, gram_minus_;
  mutable std::optional<TripleTensor> jts_;
  mutable std::optional<RatMatrix> jts_gram_;
  mutable std::optional<RatMatrix> preset_tau_;
};

// ---- construction -----------------------------------------------------------

// Accepts "rect:F:PxQ", "sym:F:N", "asym:F:N", "hermC:N", "hermH:N",
// "spin:P,Q" with F in {R, C, H}. Degenerate sizes are rejected.
PairPtr make_pair(const std::string& spec);

PairPtr make_rect(Field f, int p, int q);
PairPtr make_sym(Field f, int n);
PairPtr make_asym(Field f, int n);
PairPtr make_hermC(int n);
PairPtr make_hermH(int n);
PairPtr make_spin_signature(int p, int q);
PairPtr make_spin(const RatMatrix& form);  // any invertible symmetric rational form

PairPtr direct_sum(const PairPtr& a, const PairPtr& b, const std::string& name = "");
PairPtr zero_pair(int dim);  // T = 0; degenerate by construction
PairPtr opposite(const PairPtr& p);

// A triple system (V, T) viewed as the pair (V, V) with T on both sides and
// the identity as preset involution. The caller owns the triple axioms.
PairPtr jts_pair(TripleTensor t, const std::string& name);

// ---- products ---------------------------------------------------------------

// Model-level triple product T_side(x, y, z); x, z from the side's model,
// y from the other side's model. Charted pairs only.
ExactMatrix triple_product(const JordanPair& p, Side side, const ExactMatrix& x,
                           const ExactMatrix& y, const ExactMatrix& z);

RatVec triple_coords(const JordanPair& p, Side side, const RatVec& x, const RatVec& y,
                     const RatVec& z);

// Coordinate matrix of Q_side(x): V_{-side} -> V_side, Q(x)y = T(x,y,x)/2.
RatMatrix quadratic_operator(const JordanPair& p, Side side, const RatVec& x);
ExactMatrix quadratic_apply(const JordanPair& p, Side side, const ExactMatrix& x,
                            const ExactMatrix& y);

// ---- checks -----------------------------------------------------------------

struct AxiomPolicy {
  int exhaustive_total = 20;  // exhaustive J2 when dim V+ + dim V- <= this
  int samples = 200;          // seeded random basis 5-tuples otherwise
  std::uint64_t seed = 12345;
};

struct AxiomWitness {
  std::string identity;
  std::array<int, 5> idx{-1, -1, -1, -1, -1};
};

struct PairAxiomReport {
  bool pass = true;
  bool exhaustive = true;
  long long tuples_checked = 0;
  std::vector<AxiomWitness> failures;
};

PairAxiomReport check_pair_axioms(const JordanPair& p, const AxiomPolicy& policy = {});

struct TraceForm {
  RatMatrix gram_plus, gram_minus;
};
TraceForm trace_form(const JordanPair& p);

// Cartan involution with certificates: the involution identity
// tau T+(u,v,w) = T-(tau u, tau^{-1} v, tau w) verified on all basis triples,
// and the trace Gram of the associated triple system congruently diagonalized
// with all-positive signature. Pairs without a positive involution get a hard
// error, not a report.
struct CartanData {
  RatMatrix tau, tau_inv;
  RatMatrix jts_gram;
  Congruence positivity;
};
CartanData cartan_involution(const JordanPair& p);

struct PositivityReport {
  bool pass = false;
  bool gram_pos_def = false;
  bool backes_pass = false;
  long long pairs_checked = 0;
  long long equality_cases = 0;  // pairs with S(u,v) = 0, value exactly 0
  std::array<int, 2> witness{-1, -1};
};
// Positivity of the associated triple system: positive-definite trace Gram and
// Tr S(S(u,v)u, v) >= 0 on all basis pairs with equality iff S(u,v) = 0.
PositivityReport check_positive_and_backes(const JordanPair& p);

struct NondegReport {
  bool nondegenerate = false;
  int gram_rank = 0;
  int dim = 0;
  bool has_basis_azd = false;  // basis element with Q(x) = 0
  Side azd_side = Side::plus;
  int azd_index = -1;
};
NondegReport check_nondegenerate(const JordanPair& p);

}  // namespace jpair
