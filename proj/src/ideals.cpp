#include "jpair/ideals.hpp"

#include <functional>
#include <utility>

#include "jpair/error.hpp"

namespace jpair {

namespace {

std::vector<SparseVec> sparse_rows(const Subspace& s) {
  std::vector<SparseVec> out;
  out.reserve(static_cast<std::size_t>(s.dim()));
  for (int i = 0; i < s.dim(); ++i) out.push_back(sparse_from_dense(s.basis_rows().row(i)));
  return out;
}

// Coordinates of T_side(b, e_k, c) for sparse outer slots.
RatVec middle_column(const TripleTensor& t, const SparseVec& b, const SparseVec& c, int k) {
  RatVec out(t.dim());
  for (const auto& [p, bp] : b)
    for (const auto& [q, cq] : c) t.accumulate(p, k, q, bp * cq, out);
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatMatrix real_model(const ExactMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      require(m.at(i, j).is_real(), "model matrix has non-real entries");
      out.at(i, j) = m.at(i, j).re();
    }
  return out;
}

Subspace kernel_of_rows(const std::vector<RatVec>& rows, int ambient) {
  if (rows.empty()) return Subspace::full(ambient);
  return Subspace::span(rank_kernel_image(RatMatrix::from_rows(rows)).kernel, ambient);
}

// Cuts out the coordinate subspace { y : constraints(model(y)) = 0 } of one
// side; `constraints` must be linear in its argument.
Subspace solve_model_constraints(const JordanPair& p, Side side,
                                 const std::function<RatVec(const RatMatrix&)>& constraints) {
  const Chart& ch = p.chart(side);
  std::vector<RatVec> cols;
  cols.reserve(static_cast<std::size_t>(ch.dim()));
  for (int k = 0; k < ch.dim(); ++k) cols.push_back(constraints(real_model(ch.basis_at(k))));
  std::vector<RatVec> rows(cols[0].size(), RatVec(ch.dim()));
  for (int k = 0; k < ch.dim(); ++k)
    for (std::size_t t = 0; t < rows.size(); ++t) rows[t][k] = cols[k][t];
  return kernel_of_rows(rows, ch.dim());
}

bool proportional(const ExactMatrix& m, const ExactMatrix& f) {
  if (m.is_zero()) return true;
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (!f.at(i, j).is_zero()) {
        Rat lam = m.at(i, j).re() / f.at(i, j).re();
        return m == lam * f;
      }
  return false;  // f = 0 but m != 0
}

}  // namespace

Subspace map_subspace(const RatMatrix& m, const Subspace& s) {
  std::vector<RatVec> rows;
  rows.reserve(static_cast<std::size_t>(s.dim()));
  for (int i = 0; i < s.dim(); ++i) rows.push_back(m * s.basis_rows().row(i));
  return Subspace::span(rows, m.rows());
}

bool inner_ideal_check(const JordanPair& p, Side side, const Subspace& s) {
  const TripleTensor& t = p.tensor(side);
  auto rows = sparse_rows(s);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      for (int k = 0; k < p.dim(); ++k)
        if (!s.contains(middle_column(t, rows[i], rows[j], k))) return false;
  return true;
}

InnerIdeal make_inner_ideal(const PairPtr& p, Side side, const std::vector<RatVec>& basis,
                            const std::string& kind) {
  require(p != nullptr, "inner ideal needs a pair");
  for (const auto& b : basis)
    require(static_cast<int>(b.size()) == p->dim(), "inner ideal generator has wrong length");
  Subspace s = Subspace::span(basis, p->dim());
  require(s.dim() == static_cast<int>(basis.size()), "inner ideal generators are dependent");
  require(inner_ideal_check(*p, side, s), "subspace is not an inner ideal");
  return InnerIdeal{p, side, std::move(s), kind};
}

InnerIdeal image_ideal(const PairPtr& p, Side side, const RatMatrix& map) {
  require(p != nullptr, "inner ideal needs a pair");
  require(map.rows() == p->dim(), "image map does not land in the pair");
  Subspace s = Subspace::span(rank_kernel_image(map).image, p->dim());
  require(inner_ideal_check(*p, side, s), "image is not an inner ideal");
  return InnerIdeal{p, side, std::move(s), "image"};
}

InnerIdeal make_inner_ideal(const PairPtr& p, const IdealDescriptor& d) {
  require(p != nullptr, "inner ideal needs a pair");
  const PairType ty = p->type();

  if (d.kind == "rect") {
    require(ty == PairType::rect, "rect ideals need a rectangular pair");
    require(p->field() == Field::real, "classified constructors need a real matrix model");
    const Chart& ch = p->chart(d.side);
    const int in = ch.model_cols(), out = ch.model_rows();
    for (const auto& v : d.a) require(static_cast<int>(v.size()) == in, "rect ideal: 'a' length mismatch");
    for (const auto& v : d.b) require(static_cast<int>(v.size()) == out, "rect ideal: 'b' length mismatch");
    RatMatrix bperp = Subspace::span(d.b, out).perp().basis_rows();
    auto constraints = [&](const RatMatrix& y) {
      RatVec c;
      for (const auto& av : d.a)
        for (const Rat& e : y * av) c.push_back(e);
      for (int w = 0; w < bperp.rows(); ++w)
        for (const Rat& e : y.transpose() * bperp.row(w)) c.push_back(e);
      return c;
    };
    Subspace s = solve_model_constraints(*p, d.side, constraints);
    InnerIdeal ideal{p, d.side, std::move(s), "rect"};
    require(inner_ideal_check(*p, ideal.side, ideal.space), "rect ideal failed verification");
    return ideal;
  }

  if (d.kind == "principal") {
    require(ty == PairType::sym || ty == PairType::asym,
            "principal ideals need a symmetric or alternating pair");
    require(p->field() == Field::real, "classified constructors need a real matrix model");
    const int n = p->chart(d.side).model_rows();
    for (const auto& v : d.b) require(static_cast<int>(v.size()) == n, "principal ideal: 'b' length mismatch");
    RatMatrix bperp = Subspace::span(d.b, n).perp().basis_rows();
    auto constraints = [&](const RatMatrix& y) {
      RatVec c;
      for (int w = 0; w < bperp.rows(); ++w)
        for (const Rat& e : y * bperp.row(w)) c.push_back(e);
      return c;
    };
    Subspace s = solve_model_constraints(*p, d.side, constraints);
    InnerIdeal ideal{p, d.side, std::move(s), "principal"};
    require(inner_ideal_check(*p, ideal.side, ideal.space), "principal ideal failed verification");
    return ideal;
  }

  if (d.kind == "point") {
    require(ty == PairType::asym, "point spaces need an alternating pair");
    require(p->field() == Field::real, "classified constructors need a real matrix model");
    const int n = p->chart(d.side).model_rows();
    require(static_cast<int>(d.u.size()) == n, "point space: 'u' length mismatch");
    require(!is_zero(d.u), "point space needs a non-zero vector");
    RatMatrix urow(1, n);
    for (int j = 0; j < n; ++j) urow.at(0, j) = d.u[j];
    auto wbasis = rank_kernel_image(urow).kernel;  // basis of u-perp
    auto constraints = [&](const RatMatrix& y) {
      RatVec c;
      for (const auto& w : wbasis) {
        RatVec yw = y * w;  // must stay on the line K u, i.e. vanish against u-perp
        for (const auto& wd : wbasis) c.push_back(dot(wd, yw));
      }
      return c;
    };
    Subspace s = solve_model_constraints(*p, d.side, constraints);
    require(s.dim() == n - 1, "point space has unexpected dimension");
    InnerIdeal ideal{p, d.side, std::move(s), "point"};
    require(inner_ideal_check(*p, ideal.side, ideal.space), "point space failed verification");
    return ideal;
  }

  if (d.kind == "isotropic") {
    require(ty == PairType::spin, "isotropic ideals need a spin pair");
    const RatMatrix& beta = p->spin_form();
    for (const auto& v : d.basis)
      require(static_cast<int>(v.size()) == p->dim(), "isotropic ideal: generator length mismatch");
    for (std::size_t i = 0; i < d.basis.size(); ++i)
      for (std::size_t j = i; j < d.basis.size(); ++j) {
        Rat val = dot(d.basis[i], beta * d.basis[j]);
        if (!val.is_zero())
          fail("subspace is not isotropic: beta(v_" + std::to_string(i) + ", v_" +
               std::to_string(j) + ") = " + val.str());
      }
    return make_inner_ideal(p, d.side, d.basis, "isotropic");
  }

  fail("unknown ideal descriptor kind '" + d.kind + "'");
}

Subspace kern(const JordanPair& p, const InnerIdeal& ideal) {
  const int d = p.dim();
  auto rows_b = sparse_rows(ideal.space);
  if (rows_b.empty()) return Subspace::full(d);
  const TripleTensor& t = p.tensor(ideal.side);
  std::vector<RatVec> cond;
  for (std::size_t i = 0; i < rows_b.size(); ++i)
    for (std::size_t j = i; j < rows_b.size(); ++j) {
      // rows of the matrix of x -> T(b_i, x, b_j)
      RatMatrix m(d, d);
      for (int k = 0; k < d; ++k) {
        RatVec col = middle_column(t, rows_b[i], rows_b[j], k);
        for (int r = 0; r < d; ++r) m.at(r, k) = std::move(col[r]);
      }
      for (int r = 0; r < d; ++r) cond.push_back(m.row(r));
    }
  return kernel_of_rows(cond, d);
}

Subspace kern_via_quadratic(const JordanPair& p, const InnerIdeal& ideal) {
  const int d = p.dim();
  auto basis = ideal.space.basis_vectors();
  if (basis.empty()) return Subspace::full(d);
  std::vector<RatVec> cond;
  auto push = [&](const RatVec& y) {
    RatMatrix q = quadratic_operator(p, ideal.side, y);
    for (int r = 0; r < d; ++r) cond.push_back(q.row(r));
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    push(basis[i]);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      RatVec s(basis[i]);
      for (int k = 0; k < d; ++k) s[k] += basis[j][k];
      push(s);  // pairwise sums polarize Q over the whole ideal
    }
  }
  return kernel_of_rows(cond, d);
}

OrthoCertificate kern_is_orthocomplement(const JordanPair& p, const InnerIdeal& ideal) {
  const int d = p.dim();
  OrthoCertificate cert;
  cert.kern_space = kern(p, ideal);
  const RatMatrix& g = p.gram(other(ideal.side));
  std::vector<RatVec> rows;
  for (int i = 0; i < ideal.space.dim(); ++i) rows.push_back(g * ideal.space.basis_rows().row(i));
  cert.trace_perp = kernel_of_rows(rows, d);
  cert.equal = cert.kern_space == cert.trace_perp;
  Subspace ijts = ideal.side == Side::minus ? map_subspace(p.tau_inv(), ideal.space) : ideal.space;
  Subspace kjts =
      ideal.side == Side::minus ? cert.kern_space : map_subspace(p.tau_inv(), cert.kern_space);
  cert.splits = ijts.sum(kjts).dim() == d && ijts.intersect(kjts).dim() == 0;
  return cert;
}

ComplementCertificate complement_check(const JordanPair& p, const InnerIdeal& ideal,
                                       const InnerIdeal& complement) {
  require(complement.side == other(ideal.side), "a complement lives on the opposite side");
  const int d = p.dim();
  ComplementCertificate cert;
  cert.kern_of_ideal = kern(p, ideal);
  cert.kern_of_complement = kern(p, complement);
  cert.ideal_side_splits = ideal.space.sum(cert.kern_of_complement).dim() == d &&
                           ideal.space.intersect(cert.kern_of_complement).dim() == 0;
  cert.complement_side_splits = complement.space.sum(cert.kern_of_ideal).dim() == d &&
                                complement.space.intersect(cert.kern_of_ideal).dim() == 0;
  cert.pass = cert.ideal_side_splits && cert.complement_side_splits;
  return cert;
}

InnerIdeal complement_construct(const PairPtr& p, const InnerIdeal& ideal) {
  require(p != nullptr, "complement needs a pair");
  const RatMatrix& m = ideal.side == Side::minus ? p->tau_inv() : p->tau();
  InnerIdeal comp{p, other(ideal.side), map_subspace(m, ideal.space), "complement"};
  require(inner_ideal_check(*p, comp.side, comp.space),
          "involution image is not an inner ideal");
  require(complement_check(*p, ideal, comp).pass,
          "involution image fails to complement the ideal");
  return comp;
}

IdealFrame::IdealFrame(PairPtr p, const InnerIdeal& ideal) : pair_(std::move(p)) {
  require(pair_ != nullptr, "ideal frame needs a pair");
  const int d = pair_->dim();
  ideal_ = ideal.side == Side::minus ? map_subspace(pair_->tau_inv(), ideal.space) : ideal.space;
  Subspace k = kern(*pair_, ideal);
  kern_ = ideal.side == Side::minus ? k : map_subspace(pair_->tau_inv(), k);
  require(ideal_.sum(kern_).dim() == d && ideal_.intersect(kern_).dim() == 0,
          "ideal is not complemented: V != I (+) Kern I");
  const int r = ideal_.dim();

  RatMatrix m(d, d);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i) m.at(i, j) = ideal_.basis_rows().at(j, i);
  for (int j = r; j < d; ++j)
    for (int i = 0; i < d; ++i) m.at(i, j) = kern_.basis_rows().at(j - r, i);
  RatMatrix minv = inverse(m);
  iota_ = RatMatrix(d, r);
  pi_ = RatMatrix(r, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < r; ++j) {
      iota_.at(i, j) = m.at(i, j);
      pi_.at(j, i) = minv.at(j, i);
    }

  const TripleTensor& w = pair_->cartan_jts();
  std::vector<RatVec> cols;
  cols.reserve(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) cols.push_back(iota_.col(j));
  std::vector<SparseVec> slots;
  slots.reserve(static_cast<std::size_t>(r) * r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int kk = 0; kk < r; ++kk) {
        RatVec t = triple_eval(w, cols[i], cols[j], cols[kk]);
        require(ideal_.contains(t), "ideal is not closed under the restricted product");
        slots.push_back(sparse_from_dense(pi_ * t));
      }
  TripleTensor induced = TripleTensor::materialized(
      r, [&](int i, int j, int kk) { return slots[(static_cast<std::size_t>(i) * r + j) * r + kk]; });
  ambient_ = jts_pair(w, pair_->name() + "#jts");
  restricted_ = jts_pair(std::move(induced), pair_->name() + "#ideal");
}

RatMatrix IdealFrame::phi(const RatMatrix& gamma) const {
  const int r = iota_.cols();
  require(gamma.rows() == r && gamma.cols() == r, "phi input has wrong shape");
  require(svar_membership(*restricted_, Side::plus, gamma).member,
          "gamma is not in the structure variety of the ideal");
  RatMatrix alpha = iota_ * (gamma * pi_);
  require(svar_membership(*ambient_, Side::plus, alpha).member,
          "lifted member failed verification");
  return alpha;
}

RatMatrix IdealFrame::psi(const RatMatrix& alpha) const {
  require(alpha.rows() == pi_.cols() && alpha.cols() == pi_.cols(), "psi input has wrong shape");
  return pi_ * (alpha * iota_);
}

bool IdealFrame::in_phi_image(const RatMatrix& alpha) const {
  for (const auto& v : rank_kernel_image(alpha).image)
    if (!ideal_.contains(v)) return false;
  for (int i = 0; i < kern_.dim(); ++i)
    if (!is_zero(alpha * kern_.basis_rows().row(i))) return false;
  return true;
}

RatMatrix IdealFrame::pair_from_jts(const RatMatrix& a) const { return pair_->tau() * a; }
RatMatrix IdealFrame::jts_from_pair(const RatMatrix& alpha) const {
  return pair_->tau_inv() * alpha;
}

PointSpaceReport point_space_structure(const PairPtr& p, const RatVec& u) {
  require(p != nullptr && p->type() == PairType::asym && p->field() == Field::real,
          "point spaces live in the real alternating pairs");
  require(!is_zero(u), "point space needs a non-zero vector");
  const Chart& ch = p->chart(Side::minus);
  const int n = ch.model_rows();
  require(static_cast<int>(u.size()) == n, "point space: 'u' length mismatch");

  PointSpaceReport rep;
  IdealDescriptor desc;
  desc.kind = "point";
  desc.side = Side::minus;
  desc.u = u;
  rep.ideal = make_inner_ideal(p, desc);

  RatMatrix urow(1, n);
  for (int j = 0; j < n; ++j) urow.at(0, j) = u[j];
  auto wbasis = rank_kernel_image(urow).kernel;
  const int r = n - 1;

  // Border frame f_i = w_i u^t - u w_i^t spanning K_u.
  std::vector<ExactMatrix> f;
  RatMatrix frame(ch.dim(), r);
  for (int i = 0; i < r; ++i) {
    ExactMatrix fi(Field::real, n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        fi.at(a, b) = Scalar(Field::real, wbasis[i][a] * u[b] - u[a] * wbasis[i][b]);
    RatVec coords = ch.to_coords(fi);
    require(rep.ideal.space.contains(coords), "border frame escapes the point space");
    for (int t = 0; t < ch.dim(); ++t) frame.at(t, i) = coords[t];
    f.push_back(std::move(fi));
  }
  rep.frame = frame;

  Rat uu = dot(u, u);
  RatMatrix pairing(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) pairing.at(i, j) = uu * dot(wbasis[i], wbasis[j]);
  rep.pairing = pairing;

  // T(f_i, tau f_j, f_k) = pairing[j][k] f_i + pairing[i][j] f_k.
  rep.product_law = true;
  for (int i = 0; i < r && rep.product_law; ++i)
    for (int j = 0; j < r && rep.product_law; ++j)
      for (int k = 0; k < r; ++k) {
        ExactMatrix lhs = triple_product(*p, Side::plus, f[i], f[j].transpose(), f[k]);
        ExactMatrix rhs = pairing.at(j, k) * f[i] + pairing.at(i, j) * f[k];
        if (!(lhs == rhs)) {
          rep.product_law = false;
          break;
        }
      }

  rep.proportional = true;
  for (int i = 0; i < r && rep.proportional; ++i)
    for (const ExactMatrix& g : p->chart(Side::plus).basis())
      if (!proportional(f[i] * g * f[i], f[i])) {
        rep.proportional = false;
        break;
      }

  // Polarized half-trace law: f g h + h g f = (tr(h g)/2) f + (tr(f g)/2) h.
  rep.half_trace_law = true;
  for (int i = 0; i < r && rep.half_trace_law; ++i)
    for (int k = i; k < r && rep.half_trace_law; ++k)
      for (int j = 0; j < r; ++j) {
        const ExactMatrix &fi = f[i], &fk = f[k], &g = f[j];
        ExactMatrix lhs = fi * g * fk + fk * g * fi;
        Rat cik = (fk * g).trace().re() / Rat(2);
        Rat cfi = (fi * g).trace().re() / Rat(2);
        if (!(lhs == cik * fi + cfi * fk)) {
          rep.half_trace_law = false;
          break;
        }
      }

  rep.kern_flat = true;
  Subspace kspace = kern(*p, rep.ideal);
  for (int i = 0; i < r && rep.kern_flat; ++i)
    for (int kk = 0; kk < kspace.dim(); ++kk) {
      ExactMatrix g = p->chart(Side::plus).from_coords(kspace.basis_rows().row(kk));
      if (!(f[i] * g * f[i]).is_zero()) {
        rep.kern_flat = false;
        break;
      }
    }

  rep.lines_inner = true;
  for (int i = 0; i < r && rep.lines_inner; ++i) {
    Subspace line = Subspace::span({frame.col(i)}, ch.dim());
    if (!inner_ideal_check(*p, Side::minus, line)) rep.lines_inner = false;
  }

  rep.projective_form = pairing == RatMatrix::identity(r);
  return rep;
}

}  // namespace jpair
