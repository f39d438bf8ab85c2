#include "jpair/pair.hpp"

#include <algorithm>

#include "jpair/error.hpp"
#include "jpair/rng.hpp"

namespace jpair {

namespace {

bool is_matrix_model(PairType t) {
  return t == PairType::rect || t == PairType::sym || t == PairType::asym ||
         t == PairType::hermC || t == PairType::hermH;
}

// T(x,y,z) = xyz + zyx for every matrix model; on the alternating model the
// Cartan involution (-id) supplies the sign that makes the triple system positive.
ExactMatrix matrix_triple(PairType, const ExactMatrix& x, const ExactMatrix& y,
                          const ExactMatrix& z) {
  return x * y * z + z * y * x;
}

Rat spin_beta(const RatMatrix& b, const RatVec& u, const RatVec& v) {
  Rat out;
  for (int i = 0; i < b.rows(); ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < b.cols(); ++j)
      if (!b.at(i, j).is_zero() && !v[j].is_zero()) out += u[i] * b.at(i, j) * v[j];
  }
  return out;
}

RatVec spin_triple(const RatMatrix& b, const RatVec& x, const RatVec& y, const RatVec& z) {
  Rat byz = spin_beta(b, y, z), bxy = spin_beta(b, x, y), bxz = spin_beta(b, x, z);
  RatVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = byz * x[i] + bxy * z[i] - bxz * y[i];
  return out;
}

TripleTensor build_model_tensor(PairType t, const Chart& cs, const Chart& co) {
  return TripleTensor::materialized(cs.dim(), [&](int i, int j, int k) -> SparseVec {
    ExactMatrix prod = matrix_triple(t, cs.basis_at(i), co.basis_at(j), cs.basis_at(k));
    if (prod.is_zero()) return {};
    return sparse_from_dense(cs.to_coords(prod));
  });
}

TripleTensor build_spin_tensor(const RatMatrix& b) {
  const int n = b.rows();
  return TripleTensor::materialized(n, [&](int i, int j, int k) -> SparseVec {
    RatVec x(n), y(n), z(n);
    x[i] = Rat(1);
    y[j] = Rat(1);
    z[k] = Rat(1);
    return sparse_from_dense(spin_triple(b, x, y, z));
  });
}

}  // namespace

JordanPair::JordanPair(Init init)
    : type_(init.type),
      field_(init.field),
      name_(std::move(init.name)),
      p_(init.p),
      q_(init.q),
      chart_plus_(std::move(init.chart_plus)),
      chart_minus_(std::move(init.chart_minus)),
      cplus_(std::move(init.cplus)),
      cminus_(std::move(init.cminus)),
      spin_form_(std::move(init.spin_form)),
      parts_(std::move(init.parts)),
      base_(std::move(init.base)),
      preset_tau_(std::move(init.tau)) {
  require(cplus_.dim() == cminus_.dim(), "pair spaces must have equal realified dimension");
}

const Chart& JordanPair::chart(Side s) const {
  require(has_charts(), "pair '" + name_ + "' has no matrix model");
  return s == Side::plus ? *chart_plus_ : *chart_minus_;
}

const RatMatrix& JordanPair::spin_form() const {
  require(spin_form_.has_value(), "pair '" + name_ + "' is not a spin pair");
  return *spin_form_;
}

bool JordanPair::has_tau() const {
  if (is_matrix_model(type_) || type_ == PairType::spin) return true;
  if (type_ == PairType::opposite) return base_ && base_->has_tau();
  if (type_ == PairType::direct_sum) {
    for (const auto& p : parts_)
      if (!p->has_tau()) return false;
    return true;
  }
  return preset_tau_.has_value();
}

void JordanPair::build_tau() const {
  RatMatrix t;
  if (is_matrix_model(type_)) {
    t = coordinate_matrix(*chart_plus_, *chart_minus_,
                          [](const ExactMatrix& m) { return m.conj_transpose(); });
  } else if (type_ == PairType::spin) {
    Congruence cg = congruent_diagonalize(*spin_form_);
    RatVec signs(dim());
    for (int i = 0; i < dim(); ++i) {
      int s = cg.diag.at(i, i).sign();
      require(s != 0, "spin form is singular");
      signs[i] = Rat(s);
    }
    t = cg.transform * RatMatrix::diagonal(signs) * inverse(cg.transform);
  } else if (type_ == PairType::opposite) {
    t = base_->tau_inv();
  } else if (type_ == PairType::direct_sum) {
    t = RatMatrix(dim(), dim());
    int off = 0;
    for (const auto& part : parts_) {
      const RatMatrix& pt = part->tau();
      for (int i = 0; i < pt.rows(); ++i)
        for (int j = 0; j < pt.cols(); ++j) t.at(off + i, off + j) = pt.at(i, j);
      off += pt.rows();
    }
  } else {
    require(preset_tau_.has_value(), "pair '" + name_ + "' has no Cartan involution");
    t = *preset_tau_;
  }
  tau_inv_ = inverse(t);
  tau_ = std::move(t);
}

const RatMatrix& JordanPair::tau() const {
  std::call_once(tau_once_, [this] { build_tau(); });
  return *tau_;
}

const RatMatrix& JordanPair::tau_inv() const {
  std::call_once(tau_once_, [this] { build_tau(); });
  return *tau_inv_;
}

void JordanPair::build_gram() const {
  const int d = dim();
  RatMatrix gp(d, d), gm(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rat tp, tm;
      for (int k = 0; k < d; ++k) {
        for (const auto& [m, c] : cplus_.at(i, j, k))
          if (m == k) tp += c;
        for (const auto& [m, c] : cminus_.at(i, j, k))
          if (m == k) tm += c;
      }
      gp.at(i, j) = std::move(tp);
      gm.at(i, j) = std::move(tm);
    }
  gram_plus_ = std::move(gp);
  gram_minus_ = std::move(gm);
}

const RatMatrix& JordanPair::gram(Side s) const {
  std::call_once(gram_once_, [this] { build_gram(); });
  return s == Side::plus ? *gram_plus_ : *gram_minus_;
}

void JordanPair::build_jts() const {
  const int d = dim();
  const RatMatrix& t = tau();
  std::vector<SparseVec> tau_cols(d);
  for (int j = 0; j < d; ++j) tau_cols[j] = sparse_from_dense(t.col(j));
  RatVec accum(d);
  jts_ = TripleTensor::materialized(d, [&](int i, int j, int k) -> SparseVec {
    std::fill(accum.begin(), accum.end(), Rat());
    bool any = false;
    for (const auto& [m, tc] : tau_cols[j]) {
      for (const auto& [out, c] : cplus_.at(i, m, k)) {
        accum[out] += tc * c;
        any = true;
      }
    }
    if (!any) return {};
    return sparse_from_dense(accum);
  });
}

const TripleTensor& JordanPair::cartan_jts() const {
  std::call_once(jts_once_, [this] { build_jts(); });
  return *jts_;
}

void JordanPair::build_jts_gram() const {
  RatMatrix g = gram(Side::plus) * tau();
  require(g.is_symmetric(), "triple-system trace Gram fails symmetry");
  jts_gram_ = std::move(g);
}

const RatMatrix& JordanPair::jts_gram() const {
  std::call_once(jts_gram_once_, [this] { build_jts_gram(); });
  return *jts_gram_;
}

// ---- factories ----------------------------------------------------------

PairPtr make_rect(Field f, int p, int q) {
  require(p >= 1 && q >= 1, "rectangular pair needs p >= 1 and q >= 1");
  JordanPair::Init init;
  init.type = PairType::rect;
  init.field = f;
  init.p = p;
  init.q = q;
  init.name = std::string("rect:") + field_name(f) + ":" + std::to_string(p) + "x" +
              std::to_string(q);
  init.chart_plus = make_chart(ModelKind::rect, f, p, q);
  init.chart_minus = make_chart(ModelKind::rect, f, q, p);
  init.cplus = build_model_tensor(PairType::rect, *init.chart_plus, *init.chart_minus);
  init.cminus = build_model_tensor(PairType::rect, *init.chart_minus, *init.chart_plus);
  return std::make_shared<const JordanPair>(std::move(init));
}

namespace {

PairPtr make_square_model(PairType t, ModelKind mk, Field f, int n, std::string name) {
  require(n >= 1, "pair size must be at least 1");
  JordanPair::Init init;
  init.type = t;
  init.field = f;
  init.p = n;
  init.q = n;
  init.name = std::move(name);
  init.chart_plus = make_chart(mk, f, n, n);
  init.chart_minus = make_chart(mk, f, n, n);
  init.cplus = build_model_tensor(t, *init.chart_plus, *init.chart_minus);
  init.cminus = init.cplus;  // identical model on both sides
  return std::make_shared<const JordanPair>(std::move(init));
}

}  // namespace

PairPtr make_sym(Field f, int n) {
  require(f != Field::quaternion, "symmetric pairs are over R or C");
  return make_square_model(PairType::sym, ModelKind::sym, f, n,
                           std::string("sym:") + field_name(f) + ":" + std::to_string(n));
}

PairPtr make_asym(Field f, int n) {
  require(f != Field::quaternion, "alternating pairs are over R or C");
  return make_square_model(PairType::asym, ModelKind::asym, f, n,
                           std::string("asym:") + field_name(f) + ":" + std::to_string(n));
}

PairPtr make_hermC(int n) {
  return make_square_model(PairType::hermC, ModelKind::hermC, Field::complex, n,
                           "hermC:" + std::to_string(n));
}

PairPtr make_hermH(int n) {
  return make_square_model(PairType::hermH, ModelKind::hermH, Field::quaternion, n,
                           "hermH:" + std::to_string(n));
}

PairPtr make_spin(const RatMatrix& form) {
  require(form.is_square() && form.rows() >= 1, "spin form must be square and nonempty");
  require(form.is_symmetric(), "spin form must be symmetric");
  require(!determinant(form).is_zero(), "spin form is singular");
  const int n = form.rows();
  JordanPair::Init init;
  init.type = PairType::spin;
  init.field = Field::real;
  init.p = n;
  init.q = 1;
  init.name = "spin:G:" + std::to_string(n);
  init.chart_plus = make_chart(ModelKind::spin, Field::real, n, 1);
  init.chart_minus = init.chart_plus;
  init.cplus = build_spin_tensor(form);
  init.cminus = init.cplus;
  init.spin_form = form;
  return std::make_shared<const JordanPair>(std::move(init));
}

PairPtr make_spin_signature(int p, int q) {
  require(p >= 0 && q >= 0 && p + q >= 1, "spin signature needs p + q >= 1");
  RatVec d(p + q, Rat(1));
  for (int i = p; i < p + q; ++i) d[i] = Rat(-1);
  RatMatrix form = RatMatrix::diagonal(d);
  JordanPair::Init init;
  init.type = PairType::spin;
  init.field = Field::real;
  init.p = p;
  init.q = q;
  init.name = "spin:" + std::to_string(p) + "," + std::to_string(q);
  init.chart_plus = make_chart(ModelKind::spin, Field::real, p + q, 1);
  init.chart_minus = init.chart_plus;
  init.cplus = build_spin_tensor(form);
  init.cminus = init.cplus;
  init.spin_form = std::move(form);
  return std::make_shared<const JordanPair>(std::move(init));
}

PairPtr direct_sum(const PairPtr& a, const PairPtr& b, const std::string& name) {
  require(a && b, "direct sum of null pairs");
  require(a->field() == b->field(), "direct sum requires matching scalar fields");
  const int da = a->dim(), db = b->dim();
  auto slot = [&](const TripleTensor& ta, const TripleTensor& tb) {
    return [&ta, &tb, da](int i, int j, int k) -> SparseVec {
      if (i < da && j < da && k < da) return ta.eval(i, j, k);
      if (i >= da && j >= da && k >= da) {
        SparseVec v = tb.eval(i - da, j - da, k - da);
        for (auto& e : v) e.first += da;
        return v;
      }
      return {};
    };
  };
  JordanPair::Init init;
  init.type = PairType::direct_sum;
  init.field = a->field();
  init.name = name.empty() ? "sum(" + a->name() + "," + b->name() + ")" : name;
  init.cplus = TripleTensor::materialized(da + db, slot(a->tensor(Side::plus), b->tensor(Side::plus)));
  init.cminus =
      TripleTensor::materialized(da + db, slot(a->tensor(Side::minus), b->tensor(Side::minus)));
  init.parts = {a, b};
  return std::make_shared<const JordanPair>(std::move(init));
}

PairPtr jts_pair(TripleTensor t, const std::string& name) {
  const int d = t.dim();
  JordanPair::Init init;
  init.type = PairType::custom;
  init.field = Field::real;
  init.name = name;
  init.tau = RatMatrix::identity(d);
  init.cminus = t;
  init.cplus = std::move(t);
  return std::make_shared<const JordanPair>(std::move(init));
}

PairPtr zero_pair(int dim) {
  require(dim >= 0, "zero pair needs non-negative dimension");
  JordanPair::Init init;
  init.type = PairType::custom;
  init.field = Field::real;
  init.name = "zero:" + std::to_string(dim);
  init.cplus = TripleTensor::zero(dim);
  init.cminus = TripleTensor::zero(dim);
  return std::make_shared<const JordanPair>(std::move(init));
}

PairPtr opposite(const PairPtr& p) {
  require(p != nullptr, "opposite of null pair");
  JordanPair::Init init;
  init.type = PairType::opposite;
  init.field = p->field();
  init.name = "op(" + p->name() + ")";
  init.p = p->param_q();
  init.q = p->param_p();
  if (p->has_charts()) {
    init.chart_plus = p->chart(Side::minus);
    init.chart_minus = p->chart(Side::plus);
  }
  init.cplus = p->tensor(Side::minus);
  init.cminus = p->tensor(Side::plus);
  if (p->type() == PairType::spin) init.spin_form = p->spin_form();
  init.base = p;
  return std::make_shared<const JordanPair>(std::move(init));
}

PairPtr make_pair(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = spec.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
  auto to_int = [&](const std::string& s) -> int {
    require(!s.empty(), "pair spec '" + spec + "' has an empty size field");
    for (char c : s) require(c >= '0' && c <= '9', "pair spec '" + spec + "' has a bad size");
    return std::stoi(s);
  };
  const std::string& kind = parts[0];
  if (kind == "rect") {
    require(parts.size() == 3, "rect pair spec is rect:F:PxQ");
    Field f = field_from_name(parts[1]);
    auto x = parts[2].find('x');
    require(x != std::string::npos, "rect pair spec is rect:F:PxQ");
    return make_rect(f, to_int(parts[2].substr(0, x)), to_int(parts[2].substr(x + 1)));
  }
  if (kind == "sym" || kind == "asym") {
    require(parts.size() == 3, "pair spec is " + kind + ":F:N");
    Field f = field_from_name(parts[1]);
    return kind == "sym" ? make_sym(f, to_int(parts[2])) : make_asym(f, to_int(parts[2]));
  }
  if (kind == "hermC") {
    require(parts.size() == 2, "pair spec is hermC:N");
    return make_hermC(to_int(parts[1]));
  }
  if (kind == "hermH") {
    require(parts.size() == 2, "pair spec is hermH:N");
    return make_hermH(to_int(parts[1]));
  }
  if (kind == "spin") {
    require(parts.size() == 2, "pair spec is spin:P,Q");
    auto comma = parts[1].find(',');
    require(comma != std::string::npos, "pair spec is spin:P,Q");
    return make_spin_signature(to_int(parts[1].substr(0, comma)),
                               to_int(parts[1].substr(comma + 1)));
  }
  fail("unknown pair kind '" + kind + "'");
}

// ---- products -------------------------------------------------------------

ExactMatrix triple_product(const JordanPair& p, Side side, const ExactMatrix& x,
                           const ExactMatrix& y, const ExactMatrix& z) {
  const Chart& cs = p.chart(side);
  const Chart& co = p.chart(other(side));
  // Chart round trips validate membership of the operands in their models.
  RatVec xc = cs.to_coords(x), yc = co.to_coords(y), zc = cs.to_coords(z);
  if (p.type() == PairType::spin)
    return cs.from_coords(spin_triple(p.spin_form(), xc, yc, zc));
  return matrix_triple(p.type(), x, y, z);
}

RatVec triple_coords(const JordanPair& p, Side side, const RatVec& x, const RatVec& y,
                     const RatVec& z) {
  return triple_eval(p.tensor(side), x, y, z);
}

RatMatrix quadratic_operator(const JordanPair& p, Side side, const RatVec& x) {
  const TripleTensor& t = p.tensor(side);
  const int d = t.dim();
  require(static_cast<int>(x.size()) == d, "quadratic operator argument dimension mismatch");
  RatMatrix q(d, d);
  Rat half(1, 2);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int k = 0; k < d; ++k) {
      if (x[k].is_zero()) continue;
      Rat xik = half * x[i] * x[k];
      for (int j = 0; j < d; ++j)
        for (const auto& [m, c] : t.eval(i, j, k)) q.at(m, j) += xik * c;
    }
  }
  return q;
}

ExactMatrix quadratic_apply(const JordanPair& p, Side side, const ExactMatrix& x,
                            const ExactMatrix& y) {
  return Rat(1, 2) * triple_product(p, side, x, y, x);
}

// ---- axiom checks -----------------------------------------------------------

namespace {

// J2 obstruction at a basis 5-tuple; zero iff the identity holds there.
RatVec j2_residual(const TripleTensor& cs, const TripleTensor& co, int u, int v, int x, int y,
                   int z) {
  const int d = cs.dim();
  RatVec lhs(d), rhs(d);
  for (const auto& [m, c] : cs.at(x, y, z)) cs.accumulate(u, v, m, c, lhs);
  for (const auto& [m, c] : cs.at(u, v, x)) cs.accumulate(m, y, z, c, rhs);
  for (const auto& [m, c] : co.at(v, u, y)) cs.accumulate(x, m, z, -c, rhs);
  for (const auto& [m, c] : cs.at(u, v, z)) cs.accumulate(x, y, m, c, rhs);
  for (int i = 0; i < d; ++i) lhs[i] -= rhs[i];
  return lhs;
}

bool sparse_equal(std::span<const std::pair<int, Rat>> a, std::span<const std::pair<int, Rat>> b,
                  int dim) {
  RatVec acc(dim);
  for (const auto& [i, c] : a) acc[i] += c;
  for (const auto& [i, c] : b) acc[i] -= c;
  return is_zero(acc);
}

}  // namespace

PairAxiomReport check_pair_axioms(const JordanPair& p, const AxiomPolicy& policy) {
  PairAxiomReport rep;
  const int d = p.dim();

  for (Side s : {Side::plus, Side::minus}) {
    const TripleTensor& t = p.tensor(s);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int k = i + 1; k < d && ok; ++k)
        for (int j = 0; j < d && ok; ++j) {
          ++rep.tuples_checked;
          if (!sparse_equal(t.at(i, j, k), t.at(k, j, i), d)) {
            rep.failures.push_back(
                {std::string("outer-symmetry:") + side_name(s), {i, j, k, -1, -1}});
            ok = false;
          }
        }
  }

  rep.exhaustive = 2 * d <= policy.exhaustive_total;
  for (Side s : {Side::plus, Side::minus}) {
    const TripleTensor& cs = p.tensor(s);
    const TripleTensor& co = p.tensor(other(s));
    bool ok = true;
    auto visit = [&](int u, int v, int x, int y, int z) {
      ++rep.tuples_checked;
      if (!is_zero(j2_residual(cs, co, u, v, x, y, z))) {
        rep.failures.push_back({std::string("five-linear:") + side_name(s), {u, v, x, y, z}});
        ok = false;
      }
      return ok;
    };
    if (rep.exhaustive) {
      for (int u = 0; u < d && ok; ++u)
        for (int v = 0; v < d && ok; ++v)
          for (int x = 0; x < d && ok; ++x)
            for (int y = 0; y < d && ok; ++y)
              for (int z = 0; z < d && ok; ++z) visit(u, v, x, y, z);
    } else {
      SeededRng rng(policy.seed + (s == Side::plus ? 0 : 1));
      for (int n = 0; n < policy.samples && ok; ++n)
        visit(rng.index(d), rng.index(d), rng.index(d), rng.index(d), rng.index(d));
    }
  }

  rep.pass = rep.failures.empty();
  return rep;
}

TraceForm trace_form(const JordanPair& p) { return {p.gram(Side::plus), p.gram(Side::minus)}; }

CartanData cartan_involution(const JordanPair& p) {
  const int d = p.dim();
  const RatMatrix& t = p.tau();
  const RatMatrix& ti = p.tau_inv();
  std::vector<RatVec> tcols(d), ticols(d);
  for (int j = 0; j < d; ++j) {
    tcols[j] = t.col(j);
    ticols[j] = ti.col(j);
  }

  const TripleTensor& cp = p.tensor(Side::plus);
  const TripleTensor& cm = p.tensor(Side::minus);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v)
      for (int w = 0; w < d; ++w) {
        RatVec lhs(d);
        for (const auto& [m, c] : cp.at(u, v, w))
          for (int i = 0; i < d; ++i)
            if (!t.at(i, m).is_zero()) lhs[i] += c * t.at(i, m);
        RatVec rhs = triple_eval(cm, tcols[u], ticols[v], tcols[w]);
        for (int i = 0; i < d; ++i)
          require(lhs[i] == rhs[i],
                  "Cartan involution identity fails on pair '" + p.name() + "'");
      }

  Congruence cert = congruent_diagonalize(p.jts_gram());
  require(cert.pos == d, "Cartan trace form on pair '" + p.name() +
                             "' is not positive definite");
  return {t, ti, p.jts_gram(), std::move(cert)};
}

PositivityReport check_positive_and_backes(const JordanPair& p) {
  PositivityReport rep;
  const int d = p.dim();
  const TripleTensor& tw = p.cartan_jts();
  const RatMatrix& g = p.jts_gram();
  rep.gram_pos_def = congruent_diagonalize(g).pos == d;

  rep.backes_pass = true;
  for (int u = 0; u < d && rep.backes_pass; ++u)
    for (int v = 0; v < d && rep.backes_pass; ++v) {
      ++rep.pairs_checked;
      bool s_zero = true;
      for (int k = 0; k < d && s_zero; ++k) {
        RatVec acc(d);
        for (const auto& [m, c] : tw.at(u, v, k)) acc[m] += c;
        for (const auto& [m, c] : tw.at(v, u, k)) acc[m] += c;
        if (!is_zero(acc)) s_zero = false;
      }
      RatVec w(d);
      for (const auto& [m, c] : tw.at(u, v, u)) w[m] += c;
      for (const auto& [m, c] : tw.at(v, u, u)) w[m] += c;
      Rat val;
      for (int m = 0; m < d; ++m)
        if (!w[m].is_zero()) val += w[m] * g.at(m, v);
      val *= Rat(1, 4);  // two halves: one from each S
      if (s_zero) {
        ++rep.equality_cases;
        if (!val.is_zero()) {
          rep.backes_pass = false;
          rep.witness = {u, v};
        }
      } else if (!(val > Rat(0))) {
        rep.backes_pass = false;
        rep.witness = {u, v};
      }
    }

  rep.pass = rep.gram_pos_def && rep.backes_pass;
  return rep;
}

NondegReport check_nondegenerate(const JordanPair& p) {
  NondegReport rep;
  rep.dim = p.dim();
  rep.gram_rank = rref(p.gram(Side::plus)).rank;
  const int d = p.dim();
  for (Side s : {Side::plus, Side::minus}) {
    const TripleTensor& t = p.tensor(s);
    for (int i = 0; i < d && !rep.has_basis_azd; ++i) {
      bool azd = true;
      for (int j = 0; j < d && azd; ++j)
        if (!t.at(i, j, i).empty()) azd = false;
      if (azd) {
        rep.has_basis_azd = true;
        rep.azd_side = s;
        rep.azd_index = i;
      }
    }
  }
  rep.nondegenerate = rep.gram_rank == rep.dim && !rep.has_basis_azd;
  return rep;
}

}  // namespace jpair
