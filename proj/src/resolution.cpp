// resolution.cpp

#include "strat/resolution.hpp"

namespace strat {

ProjSum proj_sum(const Algebra& a, const std::vector<int>& labels) {
  ProjSum ps;
  ps.A = &a;
  ps.labels = labels;
  std::vector<Rep> parts;
  for (int v : labels) parts.push_back(projective_module(a, v));
  std::vector<const Rep*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  if (labels.empty()) {
    ps.rep = Rep::zero(a);
    return ps;
  }
  SumRep s = direct_sum(a, ptrs);
  ps.rep = std::move(s.rep);
  ps.block_off.assign(labels.size(), std::vector<int>(a.nvert(), 0));
  std::vector<int> run(a.nvert(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (int v = 0; v < a.nvert(); ++v) {
      ps.block_off[i][v] = run[v];
      run[v] += parts[i].dims[v];
    }
    // the trivial path is first in by_st[v][v], so the generator sits at
    // the start of the summand's block at its own vertex
    ps.gen_off.push_back(ps.block_off[i][labels[i]]);
  }
  return ps;
}

Cover projective_cover(const Rep& m) {
  const Algebra& a = *m.A;
  Cover c;
  if (m.is_zero_rep()) {
    c.p = proj_sum(a, {});
    c.map = zero_map(c.p.rep, m);
    return c;
  }
  QuotRep t = top(m);
  std::vector<int> labels;
  std::vector<Mat> lifts;  // one column per summand, in its vertex space
  for (int v = 0; v < a.nvert(); ++v) {
    int mult = t.rep.dims[v];
    if (mult == 0) continue;
    auto lift = solve(t.proj.f[v], Mat::identity(mult, a.field));
    if (!lift) throw RepError("internal: top lift failed");
    for (int j = 0; j < mult; ++j) {
      labels.push_back(v);
      lifts.push_back(lift->col(j));
    }
  }
  c.p = proj_sum(a, labels);
  // column of the cover at vertex u for basis path p of summand i: p acting
  // on the lifted generator
  c.map.f.resize(a.nvert());
  for (int u = 0; u < a.nvert(); ++u) c.map.f[u] = Mat(m.dims[u], c.p.rep.dims[u], a.field);
  for (int i = 0; i < c.p.count(); ++i) {
    int v = c.p.labels[i];
    for (int u = 0; u < a.nvert(); ++u) {
      const auto& paths = a.by_st[v][u];
      for (int k = 0; k < int(paths.size()); ++k) {
        Mat img = act_path(m, a.basis[paths[k]].arrows, v) * lifts[i];
        for (int r = 0; r < m.dims[u]; ++r)
          c.map.f[u].at(r, c.p.block_off[i][u] + k) = img.at(r, 0);
      }
    }
  }
  if (!is_surjective_onto(c.map, m)) throw RepError("internal: cover is not surjective");
  return c;
}

Resolution min_resolution(const Rep& m, int cap) {
  Resolution r;
  r.m = m;
  Cover c0 = projective_cover(m);
  r.p.push_back(std::move(c0.p));
  r.aug = std::move(c0.map);
  r.d.emplace_back();
  r.syz.emplace_back();
  r.syz_incl.emplace_back();
  RepMap* last = &r.aug;
  const Rep* last_target = &r.m;
  for (int s = 1; s <= cap; ++s) {
    SubRep k = kernel(*last, r.p.back().rep, *last_target);
    (void)last_target;
    if (k.rep.is_zero_rep()) {
      r.terminated = true;
      return r;
    }
    Cover c = projective_cover(k.rep);
    r.syz.push_back(k.rep);
    r.syz_incl.push_back(k.incl);
    r.d.push_back(compose(k.incl, c.map));
    r.p.push_back(std::move(c.p));
    last = &r.d.back();
    last_target = &r.p[r.p.size() - 2].rep;
  }
  // one more kernel decides whether the cap was exactly enough
  SubRep k = kernel(*last, r.p.back().rep, *last_target);
  r.terminated = k.rep.is_zero_rep();
  return r;
}

std::vector<std::vector<int>> Resolution::multiplicities() const {
  std::vector<std::vector<int>> out;
  for (const auto& ps : p) {
    std::vector<int> mult(m.A->nvert(), 0);
    for (int v : ps.labels) ++mult[v];
    out.push_back(std::move(mult));
  }
  return out;
}

int homp_dim(const ProjSum& p, const Rep& n) {
  int d = 0;
  for (int v : p.labels) d += n.dims[v];
  return d;
}

std::vector<int> homp_off(const ProjSum& p, const Rep& n) {
  std::vector<int> off;
  int run = 0;
  for (int v : p.labels) {
    off.push_back(run);
    run += n.dims[v];
  }
  off.push_back(run);
  return off;
}

RepMap homp_eval(const ProjSum& p, const Rep& n, const Mat& coords) {
  const Algebra& a = *p.A;
  auto off = homp_off(p, n);
  RepMap f;
  f.f.resize(a.nvert());
  for (int u = 0; u < a.nvert(); ++u) f.f[u] = Mat(n.dims[u], p.rep.dims[u], a.field);
  for (int i = 0; i < p.count(); ++i) {
    int v = p.labels[i];
    Mat w(n.dims[v], 1, a.field);
    for (int r = 0; r < n.dims[v]; ++r) w.at(r, 0) = coords.at(off[i] + r, 0);
    for (int u = 0; u < a.nvert(); ++u) {
      const auto& paths = a.by_st[v][u];
      for (int k = 0; k < int(paths.size()); ++k) {
        Mat img = act_path(n, a.basis[paths[k]].arrows, v) * w;
        for (int r = 0; r < n.dims[u]; ++r) f.f[u].at(r, p.block_off[i][u] + k) = img.at(r, 0);
      }
    }
  }
  return f;
}

Mat homp_coords_of(const ProjSum& p, const Rep& n, const RepMap& f) {
  auto off = homp_off(p, n);
  Mat coords(off.back(), 1, p.A->field);
  for (int i = 0; i < p.count(); ++i) {
    int v = p.labels[i];
    for (int r = 0; r < n.dims[v]; ++r) coords.at(off[i] + r, 0) = f.f[v].at(r, p.gen_off[i]);
  }
  return coords;
}

Mat homp_precompose(const ProjSum& pp, const ProjSum& p, const RepMap& d, const Rep& n) {
  const Algebra& a = *p.A;
  auto off_in = homp_off(p, n);
  auto off_out = homp_off(pp, n);
  Mat out(off_out.back(), off_in.back(), a.field);
  // generator j of pp maps to d(gen_j) in p.rep; its image under f depends
  // linearly on f's generator coordinates, one block per summand of p
  for (int j = 0; j < pp.count(); ++j) {
    int u = pp.labels[j];
    Mat dg = d.f[u].col(pp.gen_off[j]);  // element of p.rep at vertex u
    for (int i = 0; i < p.count(); ++i) {
      int v = p.labels[i];
      const auto& paths = a.by_st[v][u];
      Mat c(n.dims[u], n.dims[v], a.field);
      for (int k = 0; k < int(paths.size()); ++k) {
        const Scalar& coef = dg.at(p.block_off[i][u] + k, 0);
        if (Field::is_zero(coef)) continue;
        c = c + act_path(n, a.basis[paths[k]].arrows, v).scaled(coef);
      }
      for (int r = 0; r < n.dims[u]; ++r)
        for (int s = 0; s < n.dims[v]; ++s) out.at(off_out[j] + r, off_in[i] + s) = c.at(r, s);
    }
  }
  return out;
}

Mat homp_postcompose(const ProjSum& p, const Rep& n1, const Rep& n2, const RepMap& g) {
  auto off_in = homp_off(p, n1);
  auto off_out = homp_off(p, n2);
  Mat out(off_out.back(), off_in.back(), p.A->field);
  for (int i = 0; i < p.count(); ++i) {
    int v = p.labels[i];
    for (int r = 0; r < n2.dims[v]; ++r)
      for (int c = 0; c < n1.dims[v]; ++c) out.at(off_out[i] + r, off_in[i] + c) = g.f[v].at(r, c);
  }
  return out;
}

ExtData ext_data(const Resolution& r, const Rep& n, int smax, const std::vector<Mat>& degree0_seeds) {
  const Field& f = r.m.A->field;
  ExtData e;
  e.proven_tail = r.terminated;
  const int len = r.length();
  // cochain spaces exist through len; the differential out of degree len is
  // zero once the resolution has terminated
  int usable = r.terminated ? smax : len - 1;
  e.computed_to = std::min(smax, usable);
  for (int s = 0; s <= e.computed_to; ++s) {
    if (s > len) {
      // resolution terminated below this degree: everything is zero
      e.dims.push_back(0);
      e.cocycles.emplace_back(0, 0, f);
      e.bounds.emplace_back(0, 0, f);
      e.zspace.emplace_back(0, 0, f);
      continue;
    }
    const int cdim = homp_dim(r.p[s], n);
    Mat z;
    if (s < len) {
      Mat dmat = homp_precompose(r.p[s + 1], r.p[s], r.d[s + 1], n);
      z = kernel_basis(dmat);
    } else {
      z = Mat::identity(cdim, f);  // terminated: next differential is zero
    }
    Mat b(cdim, 0, f);
    if (s >= 1 && cdim > 0) {
      Mat dprev = homp_precompose(r.p[s], r.p[s - 1], r.d[s], n);
      b = colspace(dprev);
    }
    // representatives: extend the coboundaries inside the cocycle space,
    // preferring any seeds given for degree zero
    Mat span = b;
    Mat reps(cdim, 0, f);
    auto try_add = [&](const Mat& v) {
      if (!in_colspan(z, v)) return;  // seeds must be cocycles
      Mat cand = hstack(span, v);
      if (rank(cand) > rank(span)) {
        span = cand;
        reps = hstack(reps, v);
      }
    };
    if (s == 0)
      for (const auto& seed : degree0_seeds) try_add(seed);
    for (int j = 0; j < z.cols; ++j) try_add(z.col(j));
    e.dims.push_back(reps.cols);
    e.cocycles.push_back(std::move(reps));
    e.bounds.push_back(std::move(b));
    e.zspace.push_back(std::move(z));
  }
  return e;
}

Mat ext_class_coords(const ExtData& e, const Field& f, int s, const Mat& cocycle) {
  const Mat& reps = e.cocycles[s];
  const Mat& b = e.bounds[s];
  if (reps.cols == 0) {
    if (b.cols == 0 ? !cocycle.is_zero() : !in_colspan(b, cocycle))
      throw RepError("internal: nonzero class in a zero ext group");
    return Mat(0, 1, f);
  }
  auto x = solve(hstack(reps, b), cocycle);
  if (!x) throw RepError("internal: cocycle escapes its ext group");
  Mat out(reps.cols, 1, f);
  for (int i = 0; i < reps.cols; ++i) out.at(i, 0) = x->at(i, 0);
  return out;
}

ExtDims ext_dims(const Rep& m, const Rep& n, int smax, int cap) {
  Resolution r = min_resolution(m, std::max(smax + 1, cap));
  ExtData e = ext_data(r, n, smax);
  ExtDims out;
  out.proven_tail = e.proven_tail;
  out.computed_to = e.computed_to;
  out.dims = e.dims;
  return out;
}

std::vector<RepMap> chain_lift(const Resolution& rm, int s, const RepMap& f,
                               const Resolution& rn, int height) {
  const Field& fld = rm.m.A->field;
  std::vector<RepMap> lifts;
  for (int i = 0; i <= height; ++i) {
    if (s + i > rm.length()) {
      if (!rm.terminated) throw CapExhausted("chain lift ran past an unterminated resolution");
      // source resolution is zero from here on; nothing left to lift
      break;
    }
    if (i > rn.length()) {
      if (!rn.terminated) throw CapExhausted("chain lift ran past an unterminated resolution");
      break;
    }
    // right hand side: f for the base step, else previous lift after d
    Mat rhs;
    if (i == 0) {
      rhs = homp_coords_of(rm.p[s], rn.m, f);
      Mat post = homp_postcompose(rm.p[s], rn.p[0].rep, rn.m, rn.aug);
      auto x = solve(post, rhs);
      if (!x) throw RepError("internal: lift through the augmentation failed");
      lifts.push_back(homp_eval(rm.p[s], rn.p[0].rep, *x));
    } else {
      RepMap prev_after_d = compose(lifts[i - 1], rm.d[s + i]);
      rhs = homp_coords_of(rm.p[s + i], rn.p[i - 1].rep, prev_after_d);
      Mat post = homp_postcompose(rm.p[s + i], rn.p[i].rep, rn.p[i - 1].rep, rn.d[i]);
      auto x = solve(post, rhs);
      if (!x) throw RepError("internal: chain lift step failed");
      lifts.push_back(homp_eval(rm.p[s + i], rn.p[i].rep, *x));
    }
    (void)fld;
  }
  return lifts;
}

}  // namespace strat
