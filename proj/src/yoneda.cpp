// yoneda.cpp

#include "strat/yoneda.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace strat {

std::vector<int> GradedAlgebra::graded_dims() const {
  std::vector<int> out(maxdeg + 1, 0);
  for (const auto& b : basis) ++out[b.deg];
  return out;
}

int GradedAlgebra::find(int from, int to, int deg, int idx) const {
  for (int i = 0; i < dim(); ++i) {
    const GradedElt& b = basis[i];
    if (b.from == from && b.to == to && b.deg == deg && b.idx == idx) return i;
  }
  return -1;
}

std::vector<int> GradedAlgebra::block(int from, int to, int deg) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis[i].from == from && basis[i].to == to && basis[i].deg == deg) out.push_back(i);
  return out;
}

bool GradedAlgebra::product_known(int i, int j) const {
  return complete || basis[i].deg + basis[j].deg <= maxdeg;
}

SparseVec GradedAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
  std::vector<Scalar> acc(dim(), Scalar(0));
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      if (basis[j].to != basis[i].from) continue;
      if (!product_known(i, j)) throw YonedaError("product beyond the computed degree bound");
      Scalar cc = field.mul(ci, cj);
      for (const auto& [k, ck] : table[i][j]) acc[k] = field.add(acc[k], field.mul(cc, ck));
    }
  SparseVec out;
  for (int k = 0; k < dim(); ++k)
    if (!Field::is_zero(acc[k])) out.push_back({k, acc[k]});
  return out;
}

namespace {

// recover the plain hom behind a degree zero cocycle: h aug = phi
RepMap hom_from_cocycle(const Resolution& r, const Rep& target, const RepMap& phi) {
  RepMap h = zero_map(r.m, target);
  for (int v = 0; v < int(h.f.size()); ++v) {
    auto x = solve(r.aug.f[v].transpose(), phi.f[v].transpose());
    if (!x) throw YonedaError("internal: degree zero cocycle misses the augmentation");
    h.f[v] = x->transpose();
  }
  return h;
}

Mat dense_of(const GradedAlgebra& g, const SparseVec& x) {
  Mat m(g.dim(), 1, g.field);
  for (const auto& [i, c] : x) m.at(i, 0) = c;
  return m;
}

SparseVec sparse_of(const GradedAlgebra& g, const Mat& col) {
  SparseVec out;
  for (int i = 0; i < g.dim(); ++i)
    if (!Field::is_zero(col.at(i, 0))) out.push_back({i, col.at(i, 0)});
  return out;
}

}  // namespace

// Shared construction behind ext_algebra and ext_self_algebra: the module
// family, its minimal resolutions and the pairwise ext data are already in
// hand, this assembles the basis, the lifts and the product table.
static GradedAlgebra ext_algebra_core(const Field& fld, const std::vector<std::string>& labels,
                                      const std::vector<const Rep*>& mods,
                                      const std::vector<Resolution>& res,
                                      const std::vector<std::vector<ExtData>>& table,
                                      bool all_terminated, int smax, int maxdeg) {
  const int n = int(labels.size());
  GradedAlgebra g;
  g.field = fld;
  g.labels = labels;

  auto ext_dim = [&](int from, int to, int s) {
    const ExtData& e = table[from][to];
    if (s <= e.computed_to) return e.dims[s];
    return e.proven_tail ? 0 : -1;
  };

  int bound = std::min(maxdeg, smax);
  int maxlen = 0;
  for (const auto& r : res) maxlen = std::max(maxlen, r.length());
  g.complete = all_terminated && maxlen <= bound;
  g.maxdeg = g.complete ? std::min(bound, maxlen) : bound;

  for (int deg = 0; deg <= g.maxdeg; ++deg)
    for (int from = 0; from < n; ++from)
      for (int to = 0; to < n; ++to) {
        int d = ext_dim(from, to, deg);
        if (d < 0) throw YonedaError("internal: ext dimensions missing below the degree bound");
        for (int idx = 0; idx < d; ++idx) {
          GradedElt e{from, to, deg, idx, ""};
          if (deg == 0 && from == to && idx == 0) {
            e.name = "1_" + g.labels[from];
          } else {
            std::ostringstream os;
            os << "e" << deg << "_" << g.labels[from] << "_" << g.labels[to];
            if (idx > 0) os << "_" << idx;
            e.name = os.str();
          }
          g.basis.push_back(std::move(e));
        }
      }

  g.idem.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    g.idem[v] = g.find(v, v, 0, 0);
    if (g.idem[v] < 0) throw YonedaError("internal: missing identity class at " + g.labels[v]);
  }

  const int N = g.dim();
  std::vector<RepMap> phi;
  std::vector<std::vector<RepMap>> lift(N);
  phi.reserve(N);
  for (int i = 0; i < N; ++i) {
    const GradedElt& b = g.basis[i];
    const ExtData& e = table[b.from][b.to];
    RepMap f = homp_eval(res[b.from].p[b.deg], *mods[b.to], e.cocycles[b.deg].col(b.idx));
    lift[i] = chain_lift(res[b.from], b.deg, f, res[b.to], g.maxdeg - b.deg);
    phi.push_back(std::move(f));
  }

  g.table.assign(N, std::vector<SparseVec>(N));
  for (int i = 0; i < N; ++i) {
    const GradedElt& bi = g.basis[i];
    for (int j = 0; j < N; ++j) {
      const GradedElt& bj = g.basis[j];
      if (bj.to != bi.from) continue;
      int total = bi.deg + bj.deg;
      if (total > g.maxdeg) continue;               // zero when complete, unknown otherwise
      if (bi.deg >= int(lift[j].size())) continue;  // source resolution already ended: zero
      RepMap comp = compose(phi[i], lift[j][bi.deg]);
      Mat coords = homp_coords_of(res[bj.from].p[total], *mods[bi.to], comp);
      Mat cls = ext_class_coords(table[bj.from][bi.to], g.field, total, coords);
      SparseVec sv;
      for (int r = 0; r < cls.rows; ++r)
        if (!Field::is_zero(cls.at(r, 0)))
          sv.push_back({g.find(bj.from, bi.to, total, r), cls.at(r, 0)});
      g.table[i][j] = std::move(sv);
    }
  }

  // the degree zero corner must agree with plain hom composition
  std::vector<RepMap> hom0(N);
  for (int i = 0; i < N; ++i)
    if (g.basis[i].deg == 0)
      hom0[i] = hom_from_cocycle(res[g.basis[i].from], *mods[g.basis[i].to], phi[i]);
  for (int i = 0; i < N; ++i) {
    if (g.basis[i].deg != 0) continue;
    for (int j = 0; j < N; ++j) {
      if (g.basis[j].deg != 0 || g.basis[j].to != g.basis[i].from) continue;
      RepMap coc = compose(compose(hom0[i], hom0[j]), res[g.basis[j].from].aug);
      Mat coords = homp_coords_of(res[g.basis[j].from].p[0], *mods[g.basis[i].to], coc);
      Mat cls = ext_class_coords(table[g.basis[j].from][g.basis[i].to], g.field, 0, coords);
      SparseVec want;
      for (int r = 0; r < cls.rows; ++r)
        if (!Field::is_zero(cls.at(r, 0)))
          want.push_back({g.find(g.basis[j].from, g.basis[i].to, 0, r), cls.at(r, 0)});
      if (want != g.table[i][j])
        throw YonedaError("internal: degree zero product disagrees with hom composition");
    }
  }

  std::string why;
  if (!graded_associative(g, &why)) throw YonedaError("internal: " + why);
  return g;
}

GradedAlgebra ext_algebra(const StandardSystem& sys, const DeltaExt& de, int maxdeg) {
  std::vector<const Rep*> mods;
  for (const Rep& d : sys.delta) mods.push_back(&d);
  return ext_algebra_core(sys.A->field, sys.order.labels, mods, de.res, de.table,
                          de.all_terminated, de.smax, maxdeg);
}

GradedAlgebra ext_self_algebra(const Algebra& a, const std::vector<const Rep*>& mods,
                               const std::vector<std::string>& labels, int maxdeg, int rescap) {
  if (mods.size() != labels.size())
    throw YonedaError("module family and label list disagree in length");
  const int n = int(mods.size());
  std::vector<Resolution> res;
  bool all_terminated = true;
  for (int v = 0; v < n; ++v) {
    res.push_back(min_resolution(*mods[v], rescap));
    if (!res.back().terminated) all_terminated = false;
  }
  std::vector<std::vector<ExtData>> table(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      std::vector<Mat> seeds;
      if (v == w) seeds.push_back(homp_coords_of(res[v].p[0], *mods[v], res[v].aug));
      table[v].push_back(ext_data(res[v], *mods[w], maxdeg, seeds));
    }
  return ext_algebra_core(a.field, labels, mods, res, table, all_terminated, maxdeg, maxdeg);
}

bool graded_associative(const GradedAlgebra& g, std::string* why) {
  const int N = g.dim();
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  // table entries must stay inside the right block
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (const auto& [k, c] : g.table[i][j]) {
        if (Field::is_zero(c)) return fail("stored zero coefficient");
        const GradedElt &bi = g.basis[i], &bj = g.basis[j], &bk = g.basis[k];
        if (bj.to != bi.from || bk.from != bj.from || bk.to != bi.to || bk.deg != bi.deg + bj.deg)
          return fail("product of " + bi.name + " and " + bj.name + " leaves its block");
      }
  // identities act as identities
  for (size_t v = 0; v < g.idem.size(); ++v) {
    int id = g.idem[v];
    for (int j = 0; j < N; ++j) {
      SparseVec unit{{j, Scalar(1)}};
      if (g.basis[j].to == int(v) && g.table[id][j] != unit)
        return fail("left identity fails at " + g.basis[j].name);
      if (g.basis[j].from == int(v) && g.table[j][id] != unit)
        return fail("right identity fails at " + g.basis[j].name);
    }
  }
  // associativity on all composable triples within the known range
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (g.basis[j].to != g.basis[i].from) continue;
      for (int k = 0; k < N; ++k) {
        if (g.basis[k].to != g.basis[j].from) continue;
        int total = g.basis[i].deg + g.basis[j].deg + g.basis[k].deg;
        if (!g.complete && total > g.maxdeg) continue;
        SparseVec a = g.mul(g.mul({{i, Scalar(1)}}, {{j, Scalar(1)}}), {{k, Scalar(1)}});
        SparseVec b = g.mul({{i, Scalar(1)}}, g.mul({{j, Scalar(1)}}, {{k, Scalar(1)}}));
        if (a != b)
          return fail("associativity fails on " + g.basis[i].name + ", " + g.basis[j].name + ", " +
                      g.basis[k].name);
      }
    }
  return true;
}

Mat left_mult(const GradedAlgebra& g, int i) {
  Mat m(g.dim(), g.dim(), g.field);
  for (int j = 0; j < g.dim(); ++j) {
    if (g.basis[j].to != g.basis[i].from) continue;
    if (!g.product_known(i, j)) throw YonedaError("left multiplication beyond the degree bound");
    for (const auto& [k, c] : g.table[i][j]) m.at(k, j) = c;
  }
  return m;
}

Mat graded_radical(const GradedAlgebra& g) {
  if (g.field.prime_mode())
    throw FieldError("radical of the ext algebra needs characteristic zero scalars");
  const int N = g.dim();
  Mat cols(N, 0, g.field);
  for (int i = 0; i < N; ++i) {
    const GradedElt& b = g.basis[i];
    if (b.deg >= 1 || b.from != b.to) {
      Mat u(N, 1, g.field);
      u.at(i, 0) = Scalar(1);
      cols = hstack(cols, u);
    }
  }
  // diagonal degree zero blocks are local; peel the scalar off each
  // non-identity element by averaging the left multiplication trace
  for (size_t v = 0; v < g.idem.size(); ++v) {
    std::vector<int> blk = g.block(int(v), int(v), 0);
    const int bd = int(blk.size());
    for (int pos = 0; pos < bd; ++pos) {
      int i = blk[pos];
      if (i == g.idem[v]) continue;
      Scalar tr(0);
      for (int c = 0; c < bd; ++c)
        for (const auto& [k, ck] : g.table[i][blk[c]])
          if (k == blk[c]) tr = g.field.add(tr, ck);
      Mat u(N, 1, g.field);
      u.at(i, 0) = Scalar(1);
      u.at(g.idem[v], 0) = g.field.neg(tr / Scalar(bd));
      cols = hstack(cols, u);
    }
  }
  return cols;
}

// ----- quiver presentation -----

namespace {

std::string path_text(const std::vector<PresArrow>& arrows, const std::vector<int>& seq) {
  std::string out;
  for (int i = int(seq.size()) - 1; i >= 0; --i) {
    if (!out.empty()) out += "*";
    out += arrows[seq[i]].name;
  }
  return out;
}

std::string relation_text(const Field& f, const std::vector<PresArrow>& arrows,
                          const std::vector<PresTerm>& terms) {
  std::string out;
  for (size_t t = 0; t < terms.size(); ++t) {
    Scalar c = terms[t].coeff;
    bool neg = sgn(c) < 0;
    Scalar a = neg ? Scalar(-c) : c;
    if (t == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != Scalar(1)) out += f.str(a) + "*";
    out += path_text(arrows, terms[t].arrows);
  }
  return out;
}

// one level of the relation search: the candidate paths of a fixed length
struct Level {
  std::vector<std::vector<int>> seq;  // arrow indices, application order
  std::vector<SparseVec> val;         // evaluation in the algebra
  std::map<std::vector<int>, int> live;  // nonzero paths only
  Mat kernel;                         // kernel of evaluation, candidate coords
  Mat ideal;                          // span reachable from earlier kernels
};

}  // namespace

Presentation quiver_presentation(const GradedAlgebra& g) {
  if (!g.complete)
    throw CapExhausted("quiver presentation needs the ext algebra complete within its degree bound");
  const Field& f = g.field;
  const int N = g.dim();
  Presentation pres;
  pres.vertices = g.labels;

  // group the radical columns by (src, tgt, deg); every column is pure
  Mat rad = graded_radical(g);
  std::map<std::tuple<int, int, int>, std::vector<int>> rad_blocks;
  for (int j = 0; j < rad.cols; ++j) {
    SparseVec s = sparse_of(g, rad.col(j));
    const GradedElt& b = g.basis[s.front().first];
    rad_blocks[{b.from, b.to, b.deg}].push_back(j);
  }
  std::vector<SparseVec> rad_sparse;
  for (int j = 0; j < rad.cols; ++j) rad_sparse.push_back(sparse_of(g, rad.col(j)));

  // arrows: a complement of rad^2 inside each block of rad
  for (auto& [key, idxs] : rad_blocks) {
    auto [src, tgt, deg] = key;
    Mat rblock(N, 0, f);
    for (int j : idxs) rblock = hstack(rblock, rad.col(j));
    Mat r2(N, 0, f);
    for (size_t u = 0; u < rad_sparse.size(); ++u)
      for (size_t w = 0; w < rad_sparse.size(); ++w) {
        SparseVec p = g.mul(rad_sparse[u], rad_sparse[w]);
        if (p.empty()) continue;
        const GradedElt& b = g.basis[p.front().first];
        if (b.from == src && b.to == tgt && b.deg == deg) r2 = hstack(r2, dense_of(g, p));
      }
    if (r2.cols > 0) r2 = colspace(r2);
    for (int j : independent_cols(r2, rblock)) {
      PresArrow ar{src, tgt, deg, "", rblock.col(j)};
      std::ostringstream os;
      os << "g" << deg << "_" << g.labels[src] << "_" << g.labels[tgt];
      ar.name = os.str();
      pres.arrows.push_back(std::move(ar));
    }
  }
  {
    std::map<std::string, int> seen;
    for (auto& a : pres.arrows) {
      int k = seen[a.name]++;
      if (k > 0) a.name += "_" + std::to_string(k + 1);
    }
  }

  const int na = int(pres.arrows.size());
  std::vector<SparseVec> arrow_val;
  for (const auto& a : pres.arrows) arrow_val.push_back(sparse_of(g, a.elem));

  // relation search by path length; a path enters a level only when both
  // of its long proper subpaths evaluated nonzero on the previous one
  Level prev;
  for (int a = 0; a < na; ++a) {
    prev.live[{a}] = int(prev.seq.size());
    prev.seq.push_back({a});
    prev.val.push_back(arrow_val[a]);
  }
  prev.kernel = Mat(na, 0, f);
  prev.ideal = Mat(na, 0, f);

  for (int L = 2; L <= N + 2; ++L) {
    Level cur;
    std::map<std::vector<int>, int> index;
    for (const auto& [qseq, qi] : prev.live) {
      const GradedElt& qtop = g.basis[prev.val[qi].front().first];
      for (int a = 0; a < na; ++a) {
        if (pres.arrows[a].src != qtop.to) continue;
        std::vector<int> seq = qseq;
        seq.push_back(a);
        std::vector<int> tail(seq.begin() + 1, seq.end());
        if (!prev.live.count(tail)) continue;  // contains a dead subpath
        index[seq] = int(cur.seq.size());
        cur.seq.push_back(seq);
        cur.val.push_back(g.mul(arrow_val[a], prev.val[qi]));
      }
    }
    const int nc = int(cur.seq.size());
    if (nc == 0) break;

    // kernel of evaluation, blockwise by endpoints and graded degree
    auto block_key = [&](int c) {
      int src = pres.arrows[cur.seq[c].front()].src;
      int tgt = pres.arrows[cur.seq[c].back()].tgt;
      int gd = 0;
      for (int a : cur.seq[c]) gd += pres.arrows[a].deg;
      return std::tuple<int, int, int>{src, tgt, gd};
    };
    std::map<std::tuple<int, int, int>, std::vector<int>> blocks;
    for (int c = 0; c < nc; ++c) blocks[block_key(c)].push_back(c);
    cur.kernel = Mat(nc, 0, f);
    for (auto& [key, cs] : blocks) {
      Mat ev(N, 0, f);
      for (int c : cs) ev = hstack(ev, dense_of(g, cur.val[c]));
      Mat kb = kernel_basis(ev);
      for (int j = 0; j < kb.cols; ++j) {
        Mat col(nc, 1, f);
        for (int r = 0; r < kb.rows; ++r) col.at(cs[r], 0) = kb.at(r, j);
        cur.kernel = hstack(cur.kernel, col);
      }
    }

    // ideal vectors: one-arrow extensions of the previous kernel and
    // ideal; components leaving the candidate set have dead subpaths and
    // are already accounted for, so they are dropped
    Mat ideal(nc, 0, f);
    Mat srcs = hstack(prev.kernel, prev.ideal);
    for (int j = 0; j < srcs.cols; ++j) {
      for (int a = 0; a < na; ++a) {
        Mat after(nc, 1, f), before(nc, 1, f);
        bool any_after = false, any_before = false;
        for (int r = 0; r < srcs.rows; ++r) {
          if (Field::is_zero(srcs.at(r, j))) continue;
          std::vector<int> ext = prev.seq[r];
          ext.push_back(a);
          if (auto it = index.find(ext); it != index.end()) {
            after.at(it->second, 0) = srcs.at(r, j);
            any_after = true;
          }
          ext = prev.seq[r];
          ext.insert(ext.begin(), a);
          if (auto it = index.find(ext); it != index.end()) {
            before.at(it->second, 0) = srcs.at(r, j);
            any_before = true;
          }
        }
        if (any_after) ideal = hstack(ideal, after);
        if (any_before) ideal = hstack(ideal, before);
      }
    }
    if (ideal.cols > 0) ideal = colspace(ideal);
    cur.ideal = ideal;

    // minimal new generators: kernel columns independent of the ideal
    for (int j : independent_cols(cur.ideal, cur.kernel)) {
      PresRelation rel;
      for (int r = 0; r < nc; ++r)
        if (!Field::is_zero(cur.kernel.at(r, j))) rel.terms.push_back({cur.kernel.at(r, j), cur.seq[r]});
      rel.text = relation_text(f, pres.arrows, rel.terms);
      pres.relations.push_back(std::move(rel));
    }

    for (int c = 0; c < nc; ++c)
      if (!cur.val[c].empty()) cur.live[cur.seq[c]] = c;
    if (cur.live.empty()) break;
    prev = std::move(cur);
  }

  // certificate: rebuild the bound quiver algebra and match it
  AlgebraInput in = presentation_input(pres);
  try {
    Algebra b = build_algebra(in, N + 2, f);
    if (b.dim() != N) {
      pres.note = "reconstruction has dimension " + std::to_string(b.dim()) + ", expected " +
                  std::to_string(N);
      return pres;
    }
    Mat ev(N, 0, f);
    for (const auto& bp : b.basis) {
      SparseVec val;
      if (bp.arrows.empty()) {
        val = {{g.idem[bp.src], Scalar(1)}};
      } else {
        val = arrow_val[bp.arrows.front()];
        for (size_t k = 1; k < bp.arrows.size(); ++k) val = g.mul(arrow_val[bp.arrows[k]], val);
      }
      ev = hstack(ev, dense_of(g, val));
    }
    if (rank(ev) != N) {
      pres.note = "reconstruction does not span the algebra";
      return pres;
    }
    pres.certified = true;
  } catch (const CapExhausted&) {
    pres.note = "reconstruction exceeded the path length bound";
  }
  return pres;
}

AlgebraInput presentation_input(const Presentation& p) {
  AlgebraInput in;
  in.quiver.vertices = p.vertices;
  for (const auto& a : p.arrows) in.quiver.arrows.push_back({a.name, a.src, a.tgt});
  for (const auto& r : p.relations) {
    PathExpr e;
    e.terms.reserve(r.terms.size());
    for (const auto& t : r.terms) e.terms.push_back({t.coeff, t.arrows});
    e.src = p.arrows[r.terms[0].arrows.front()].src;
    e.tgt = p.arrows[r.terms[0].arrows.back()].tgt;
    e.len = int(r.terms[0].arrows.size());
    e.text = r.text;
    in.relations.push_back(std::move(e));
  }
  return in;
}

}  // namespace strat
