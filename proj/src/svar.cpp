#include "jpair/svar.hpp"

#include <algorithm>

#include "jpair/error.hpp"
#include "jpair/rng.hpp"

namespace jpair {

namespace {

std::vector<SparseVec> sparse_columns(const RatMatrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero()) cols[j].emplace_back(i, m.at(i, j));
  return cols;
}

void clear(RatVec& v) { std::fill(v.begin(), v.end(), Rat()); }

}  // namespace

SvarReport svar_membership(const JordanPair& p, Side side, const RatMatrix& alpha) {
  const int d = p.dim();
  require(alpha.rows() == d && alpha.cols() == d, "structure variety: map shape mismatch");
  const TripleTensor& cd = p.tensor(side);         // T on the domain side
  const TripleTensor& co = p.tensor(other(side));  // T on the image side
  const std::vector<SparseVec> col = sparse_columns(alpha);

  RatVec lhs(d), mid(d), rhs(d);
  for (int u = 0; u < d; ++u)
    for (int w = u; w < d; ++w)  // outer symmetry on both sides of the identity
      for (int v = 0; v < d; ++v) {
        clear(lhs);
        for (const auto& [i, ai] : col[u])
          for (const auto& [k, ak] : col[w]) co.accumulate(i, v, k, ai * ak, lhs);
        clear(mid);
        for (const auto& [j, aj] : col[v]) cd.accumulate(u, j, w, aj, mid);
        clear(rhs);
        for (int m = 0; m < d; ++m)
          if (!mid[m].is_zero())
            for (const auto& [i, ai] : col[m]) rhs[i] += ai * mid[m];
        if (lhs != rhs) return {false, std::array<int, 3>{u, v, w}};
      }
  return {true, std::nullopt};
}

bool svar_membership_quadratic(const JordanPair& p, Side side, const RatMatrix& alpha) {
  const int d = p.dim();
  require(alpha.rows() == d && alpha.cols() == d, "structure variety: map shape mismatch");
  auto holds_at = [&](const RatVec& x) {
    RatVec ax(d);
    for (int j = 0; j < d; ++j)
      if (!x[j].is_zero())
        for (int i = 0; i < d; ++i) ax[i] += alpha.at(i, j) * x[j];
    RatMatrix left = quadratic_operator(p, other(side), ax);
    RatMatrix right = alpha * quadratic_operator(p, side, x) * alpha;
    return left == right;
  };
  RatVec x(d);
  for (int u = 0; u < d; ++u) {
    clear(x);
    x[u] = Rat(1);
    if (!holds_at(x)) return false;
  }
  for (int u = 0; u < d; ++u)
    for (int w = u + 1; w < d; ++w) {
      clear(x);
      x[u] = Rat(1);
      x[w] = Rat(1);
      if (!holds_at(x)) return false;
    }
  return true;
}

Homotopy make_homotopy(PairPtr p, Side side, RatMatrix alpha, bool antilinear) {
  require(p != nullptr, "homotopy over a null pair");
  SvarReport rep = svar_membership(*p, side, alpha);
  require(rep.member, "map is not in the structure variety of " + p->name());
  return Homotopy{std::move(p), side, std::move(alpha), antilinear};
}

// ---- homotope triple systems -------------------------------------------------

TripleTensor homotope_jts(const Homotopy& alpha) {
  require(alpha.pair != nullptr, "homotope of a null pair");
  const int d = alpha.pair->dim();
  auto slot = [pair = alpha.pair, side = alpha.side,
               col = sparse_columns(alpha.matrix)](int i, int j, int k) -> SparseVec {
    const TripleTensor& t = pair->tensor(side);
    RatVec acc(pair->dim());
    for (const auto& [m, c] : col[j]) t.accumulate(i, m, k, c, acc);
    return sparse_from_dense(acc);
  };
  return d <= 24 ? TripleTensor::materialized(d, slot) : TripleTensor::lazy(d, slot);
}

TripleTensor homotope_lts(const Homotopy& alpha) {
  TripleTensor jts = homotope_jts(alpha);
  const int d = jts.dim();
  auto slot = [jts](int i, int j, int k) -> SparseVec {
    RatVec acc(jts.dim());
    jts.accumulate(i, j, k, Rat(1), acc);
    jts.accumulate(j, i, k, Rat(-1), acc);
    return sparse_from_dense(acc);
  };
  return d <= 24 ? TripleTensor::materialized(d, slot) : TripleTensor::lazy(d, slot);
}

// ---- triple-system axioms -----------------------------------------------------

namespace {

// Residual of the five-linear identity; `lts` flips the two signs that differ
// between the derivation rule and the Jordan form.
bool five_linear_zero(const TripleTensor& t, bool lts, int u, int v, int x, int y, int z,
                      RatVec& inner, RatVec& acc) {
  const int d = t.dim();
  clear(acc);
  clear(inner);
  t.accumulate(x, y, z, Rat(1), inner);
  for (int m = 0; m < d; ++m)
    if (!inner[m].is_zero()) t.accumulate(u, v, m, inner[m], acc);

  clear(inner);
  t.accumulate(u, v, x, Rat(1), inner);
  for (int m = 0; m < d; ++m)
    if (!inner[m].is_zero()) t.accumulate(m, y, z, -inner[m], acc);

  clear(inner);
  if (lts)
    t.accumulate(u, v, y, Rat(1), inner);
  else
    t.accumulate(v, u, y, Rat(1), inner);
  const Rat mid_sign = lts ? Rat(-1) : Rat(1);
  for (int m = 0; m < d; ++m)
    if (!inner[m].is_zero()) t.accumulate(x, m, z, mid_sign * inner[m], acc);

  clear(inner);
  t.accumulate(u, v, z, Rat(1), inner);
  for (int m = 0; m < d; ++m)
    if (!inner[m].is_zero()) t.accumulate(x, y, m, -inner[m], acc);

  return is_zero(acc);
}

}  // namespace

TripleAxiomReport check_triple_axioms(const TripleTensor& t, TripleKind kind,
                                      const TriplePolicy& policy) {
  TripleAxiomReport rep;
  const int d = t.dim();
  auto fail = [&](const char* identity, std::array<int, 5> idx) {
    rep.pass = false;
    rep.failures.push_back({identity, idx});
  };

  if (kind == TripleKind::jts) {
    for (int i = 0; i < d && rep.pass; ++i)
      for (int j = 0; j < d && rep.pass; ++j)
        for (int k = i; k < d; ++k) {
          ++rep.tuples_checked;
          if (t.eval(i, j, k) != t.eval(k, j, i)) {
            fail("outer-symmetry", {i, j, k, -1, -1});
            break;
          }
        }
  } else {
    RatVec acc(d);
    for (int i = 0; i < d && rep.pass; ++i)
      for (int j = i; j < d && rep.pass; ++j)
        for (int k = 0; k < d; ++k) {
          ++rep.tuples_checked;
          SparseVec a = t.eval(i, j, k);
          SparseVec b = t.eval(j, i, k);
          bool neg = a.size() == b.size();
          for (std::size_t m = 0; neg && m < a.size(); ++m)
            neg = a[m].first == b[m].first && a[m].second == -b[m].second;
          if (!neg) {
            fail("antisymmetry", {i, j, k, -1, -1});
            break;
          }
        }
    for (int i = 0; i < d && rep.pass; ++i)
      for (int j = 0; j < d && rep.pass; ++j)
        for (int k = 0; k < d; ++k) {
          ++rep.tuples_checked;
          clear(acc);
          t.accumulate(i, j, k, Rat(1), acc);
          t.accumulate(j, k, i, Rat(1), acc);
          t.accumulate(k, i, j, Rat(1), acc);
          if (!is_zero(acc)) {
            fail("cyclic-sum", {i, j, k, -1, -1});
            break;
          }
        }
  }
  if (!rep.pass) return rep;

  const bool lts = kind == TripleKind::lts;
  const char* id5 = lts ? "derivation" : "five-linear";
  RatVec inner(d), acc(d);
  rep.exhaustive = d <= policy.exhaustive_dim;
  if (rep.exhaustive) {
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v)
        for (int x = 0; x < d; ++x)
          for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
              ++rep.tuples_checked;
              if (!five_linear_zero(t, lts, u, v, x, y, z, inner, acc)) {
                fail(id5, {u, v, x, y, z});
                return rep;
              }
            }
  } else {
    SeededRng rng(policy.seed);
    for (int s = 0; s < policy.samples; ++s) {
      int u = rng.index(d), v = rng.index(d), x = rng.index(d), y = rng.index(d),
          z = rng.index(d);
      ++rep.tuples_checked;
      if (!five_linear_zero(t, lts, u, v, x, y, z, inner, acc)) {
        fail(id5, {u, v, x, y, z});
        return rep;
      }
    }
  }
  return rep;
}

// ---- structural transformations ----------------------------------------------

StructuralReport structural_check(const JordanPair& V, const JordanPair& W, const RatMatrix& g,
                                  const RatMatrix& h) {
  const int dv = V.dim(), dw = W.dim();
  require(g.rows() == dw && g.cols() == dv, "structural map g: shape mismatch");
  require(h.rows() == dv && h.cols() == dw, "structural map h: shape mismatch");
  const std::vector<SparseVec> gcol = sparse_columns(g);
  const std::vector<SparseVec> hcol = sparse_columns(h);
  const TripleTensor& vp = V.tensor(Side::plus);
  const TripleTensor& vm = V.tensor(Side::minus);
  const TripleTensor& wp = W.tensor(Side::plus);
  const TripleTensor& wm = W.tensor(Side::minus);

  RatVec mid_v(dv), mid_w(dw), lhs_v(dv), lhs_w(dw), rhs_v(dv), rhs_w(dw);
  // g T+_V(u, h v, w) = T+_W(g u, v, g w)
  for (int u = 0; u < dv; ++u)
    for (int w = u; w < dv; ++w)
      for (int v = 0; v < dw; ++v) {
        clear(mid_v);
        for (const auto& [m, hm] : hcol[v]) vp.accumulate(u, m, w, hm, mid_v);
        clear(lhs_w);
        for (int m = 0; m < dv; ++m)
          if (!mid_v[m].is_zero())
            for (const auto& [i, gi] : gcol[m]) lhs_w[i] += gi * mid_v[m];
        clear(rhs_w);
        for (const auto& [i, gi] : gcol[u])
          for (const auto& [k, gk] : gcol[w]) wp.accumulate(i, v, k, gi * gk, rhs_w);
        if (lhs_w != rhs_w) return {false, "plus-transport", std::array<int, 3>{u, v, w}};
      }
  // h T-_W(v, g w, z) = T-_V(h v, w, h z)
  for (int v = 0; v < dw; ++v)
    for (int z = v; z < dw; ++z)
      for (int w = 0; w < dv; ++w) {
        clear(mid_w);
        for (const auto& [m, gm] : gcol[w]) wm.accumulate(v, m, z, gm, mid_w);
        clear(lhs_v);
        for (int m = 0; m < dw; ++m)
          if (!mid_w[m].is_zero())
            for (const auto& [i, hi] : hcol[m]) lhs_v[i] += hi * mid_w[m];
        clear(rhs_v);
        for (const auto& [i, hi] : hcol[v])
          for (const auto& [k, hk] : hcol[z]) vm.accumulate(i, w, k, hi * hk, rhs_v);
        if (lhs_v != rhs_v) return {false, "minus-transport", std::array<int, 3>{v, w, z}};
      }
  return {true, "", std::nullopt};
}

StructuralPair make_structural(PairPtr domain, PairPtr codomain, RatMatrix g, RatMatrix h) {
  require(domain && codomain, "structural pair over null pairs");
  StructuralReport rep = structural_check(*domain, *codomain, g, h);
  require(rep.pass, "maps do not form a structural transformation (" + rep.identity + ")");
  return StructuralPair{std::move(domain), std::move(codomain), std::move(g), std::move(h)};
}

StructuralPair compose(const StructuralPair& outer, const StructuralPair& inner) {
  require(outer.domain && inner.codomain && outer.domain->dim() == inner.codomain->dim() &&
              outer.domain->name() == inner.codomain->name(),
          "structural composition: middle pairs differ");
  return make_structural(inner.domain, outer.codomain, outer.g * inner.g, inner.h * outer.h);
}

TransferResult transfer(const Homotopy& alpha, const StructuralPair& gh) {
  require(alpha.pair != nullptr, "transfer of a null homotopy");
  require(alpha.side == Side::plus, "transfer expects a plus-side homotopy");
  require(gh.codomain->dim() == alpha.pair->dim() && gh.codomain->name() == alpha.pair->name(),
          "transfer: homotopy does not live on the target pair");

  TransferResult out{make_homotopy(gh.domain, Side::plus, gh.h * (alpha.matrix * gh.g),
                                   alpha.antilinear),
                     false};

  // g T_{h alpha g}(u, v, w) = T_alpha(g u, g v, g w) on basis triples.
  const TripleTensor pulled_jts = homotope_jts(out.pulled);
  const JordanPair& V = *alpha.pair;
  const int dw = gh.domain->dim(), dv = V.dim();
  RatVec slot(dw), lhs(dv);
  std::vector<RatVec> gcols(dw, RatVec(dv));
  for (int j = 0; j < dw; ++j)
    for (int i = 0; i < dv; ++i) gcols[j][i] = gh.g.at(i, j);
  for (int u = 0; u < dw; ++u)
    for (int v = 0; v < dw; ++v) {
      const RatVec agv = alpha.matrix * gcols[v];
      for (int w = 0; w < dw; ++w) {
        clear(slot);
        pulled_jts.accumulate(u, v, w, Rat(1), slot);
        clear(lhs);
        for (int m = 0; m < dw; ++m)
          if (!slot[m].is_zero())
            for (int i = 0; i < dv; ++i) lhs[i] += gh.g.at(i, m) * slot[m];
        if (lhs != triple_eval(V.tensor(Side::plus), gcols[u], agv, gcols[w]))
          return out;  // homomorphism_certified stays false
      }
    }
  out.homomorphism_certified = true;
  return out;
}

// ---- polarized pairs -----------------------------------------------------------

PairPtr polarized_pair(const PairPtr& p) {
  require(p != nullptr, "polarized double of a null pair");
  return direct_sum(p, opposite(p), "polarized(" + p->name() + ")");
}

Homotopy embed_structural(const PairPtr& p, const RatMatrix& f, const RatMatrix& h) {
  require(p != nullptr, "structural embedding over a null pair");
  const int d = p->dim();
  StructuralReport endo = structural_check(*p, *p, f, h);
  require(endo.pass, "maps do not form a structural endomorphism (" + endo.identity + ")");
  // Double coordinates: plus side is (V+ | V-), minus side is (V- | V+); the
  // embedded map sends (u, v) to (h v, f u).
  RatMatrix block(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      block.at(i, d + j) = h.at(i, j);
      block.at(d + i, j) = f.at(i, j);
    }
  return make_homotopy(polarized_pair(p), Side::plus, std::move(block));
}

// ---- associative pairs ----------------------------------------------------------

SvarReport assoc_svar_membership(const JordanPair& p, const RatMatrix& alpha, AssocMode mode) {
  require(p.type() == PairType::rect,
          "associative structure variety is defined on rectangular pairs");
  const int d = p.dim();
  require(alpha.rows() == d && alpha.cols() == d, "associative variety: map shape mismatch");
  const Chart& cp = p.chart(Side::plus);
  const Chart& cm = p.chart(Side::minus);

  std::vector<ExactMatrix> image(d);  // alpha(b_u) in the minus model
  for (int u = 0; u < d; ++u) {
    RatVec col(d);
    for (int i = 0; i < d; ++i) col[i] = alpha.at(i, u);
    image[u] = cm.from_coords(col);
  }
  auto apply = [&](const ExactMatrix& x) { return cm.from_coords(alpha * cp.to_coords(x)); };

  std::optional<std::array<int, 3>> witness;
  for (int u = 0; u < d && !witness; ++u)
    for (int v = 0; v < d && !witness; ++v)
      for (int w = 0; w < d; ++w) {
        const ExactMatrix& bu = cp.basis_at(u);
        const ExactMatrix& bv = cp.basis_at(v);
        const ExactMatrix& bw = cp.basis_at(w);
        bool ok;
        if (mode == AssocMode::standard)
          ok = image[u] * bv * image[w] == apply(bu * image[v] * bw);
        else
          ok = apply(bu * image[v] * bw) == image[w] * bv * image[u];
        if (!ok) {
          witness = std::array<int, 3>{u, v, w};
          break;
        }
      }
  if (witness) return {false, witness};
  // Either associative identity puts the map in the structure variety of the
  // symmetrized Jordan pair.
  require(svar_membership(p, Side::plus, alpha).member,
          "associative member failed the Jordan identity");
  return {true, std::nullopt};
}

}  // namespace jpair
