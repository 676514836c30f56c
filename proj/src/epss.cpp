// epss.cpp

#include "strat/epss.hpp"

#include <algorithm>
#include <numeric>

namespace strat {

namespace {

// flatten a module map into one coordinate column, vertex blocks in order
Mat flat_map(const RepMap& f, const Field& fld) {
  int total = 0;
  for (const auto& m : f.f) total += m.rows * m.cols;
  Mat out(total, 1, fld);
  int at = 0;
  for (const auto& m : f.f)
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) out.at(at++, 0) = m.at(i, j);
  return out;
}

Mat flat_basis(const std::vector<RepMap>& h, const Field& fld) {
  if (h.empty()) return Mat(0, 0, fld);
  Mat out = flat_map(h[0], fld);
  for (std::size_t j = 1; j < h.size(); ++j) out = hstack(out, flat_map(h[j], fld));
  return out;
}

// x in the span of h with g after x equal to target, solved on coordinates
std::optional<RepMap> solve_through(const std::vector<RepMap>& h, const RepMap& g,
                                    const Rep& src, const Rep& mid, const RepMap& target,
                                    const Field& fld) {
  Mat cols(flat_map(target, fld).rows, 0, fld);
  for (const auto& x : h) cols = hstack(cols, flat_map(compose(g, x), fld));
  auto sol = solve(cols, flat_map(target, fld));
  if (!sol) return std::nullopt;
  RepMap out = zero_map(src, mid);
  for (std::size_t j = 0; j < h.size(); ++j)
    out = map_add(out, map_scale(sol->at(int(j), 0), h[j], fld));
  return out;
}

int top_vertex(const Rep& m) {
  std::vector<int> td = top_dims(m);
  int v = -1;
  for (std::size_t i = 0; i < td.size(); ++i)
    if (td[i] > 0) {
      if (v >= 0 || td[i] != 1) return -1;
      v = int(i);
    }
  return v;
}

ThetaFiltCert annotate(FiltrationCert cert, const EPSSData& data) {
  ThetaFiltCert out;
  out.cert = std::move(cert);
  int mh = 0;
  for (std::size_t l = 0; l < out.cert.mult.size(); ++l)
    if (out.cert.mult[l] > 0) {
      out.supp.push_back(int(l));
      if (mh == 0 || data.h[l] < mh) mh = data.h[l];
    }
  out.min_height = mh;
  return out;
}

struct Part {
  int label;
  RepMap into;  // q[label] -> m
};

// assemble a sum of q's with the given maps into m
struct Assembled {
  SumRep cover;
  RepMap onto;
};

Assembled assemble(const std::vector<Part>& parts, const Rep& m, const EPSSData& data) {
  std::vector<const Rep*> reps;
  for (const auto& p : parts) reps.push_back(&data.q[p.label]);
  Assembled out{direct_sum(*data.A, reps), RepMap{}};
  out.onto = zero_map(out.cover.rep, m);
  for (std::size_t c = 0; c < parts.size(); ++c)
    out.onto = map_add(out.onto, compose(parts[c].into, out.cover.proj[c]));
  return out;
}

}  // namespace

std::vector<int> heights(const Poset& order) {
  const int n = order.n();
  std::vector<int> h(n, 0);
  int placed = 0;
  for (int layer = 1; placed < n; ++layer) {
    std::vector<int> now;
    for (int v = 0; v < n; ++v) {
      if (h[v]) continue;
      bool minimal = true;
      for (int w = 0; w < n && minimal; ++w)
        if (!h[w] && w != v && order.le(w, v)) minimal = false;
      if (minimal) now.push_back(v);
    }
    if (now.empty()) throw EPSSError("order is not a partial order: no minimal element remains");
    for (int v : now) h[v] = layer;
    placed += int(now.size());
  }
  return h;
}

EPSSData classical_epss(const Algebra& a, const Poset& order) {
  EPSSData d;
  d.h = heights(order);
  StandardSystem sys = standard_modules(a, order);
  StratVerdict v = is_standardly_stratified(sys);
  if (!v.stratified) throw EPSSError("algebra is not standardly stratified for this order");
  d.A = &a;
  d.order = order;
  d.theta = std::move(sys.delta);
  d.q = std::move(sys.proj);
  d.onto = std::move(sys.onto);
  d.kernel = std::move(sys.kmod);
  d.kincl = std::move(sys.kincl);
  for (auto& c : v.kernel_certs) d.kcert.push_back(std::move(*c));
  return d;
}

AxiomReport verify_epss_axioms(const EPSSData& data) {
  AxiomReport r;
  const int n = int(data.theta.size());
  std::vector<int> tv(n, -1);
  for (int l = 0; l < n; ++l) {
    tv[l] = top_vertex(data.theta[l]);
    if (tv[l] < 0) r.top_failures.push_back(l);
    for (int m = 0; m < l; ++m)
      if (tv[l] >= 0 && tv[l] == tv[m]) r.top_failures.push_back(l);
  }
  r.simple_tops = r.top_failures.empty();

  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      if (!data.order.le(l, m) && !hom_basis(data.theta[l], data.theta[m]).empty())
        r.hom_failures.push_back({l, m});
  r.hom_vanishing = r.hom_failures.empty();

  for (int l = 0; l < n; ++l) {
    if (!verify_filtration(data.kernel[l], data.theta, data.kcert[l])) {
      r.kernel_failures.push_back({l, -1});
      continue;
    }
    for (int m = 0; m < n; ++m)
      if (data.kcert[l].mult[m] > 0 && !(data.order.le(l, m) && l != m))
        r.kernel_failures.push_back({l, m});
  }
  r.kernel_layers = r.kernel_failures.empty();

  for (int l = 0; l < n; ++l) {
    Resolution res = min_resolution(data.q[l], 2);
    for (int m = 0; m < n; ++m) {
      ExtData e = ext_data(res, data.theta[m], 1);
      if (e.computed_to >= 1 && e.dims[1] != 0) r.ext_failures.push_back({l, m});
    }
  }
  r.ext_vanishing = r.ext_failures.empty();

  r.ok = r.simple_tops && r.hom_vanishing && r.kernel_layers && r.ext_vanishing;
  return r;
}

std::optional<ThetaFiltCert> theta_filtration(const Rep& m, const EPSSData& data) {
  // high factors sit at the bottom, so peel them first
  std::vector<int> order(data.theta.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return data.h[a] > data.h[b]; });
  auto cert = module_filtration(m, data.theta, order);
  if (!cert) return std::nullopt;
  return annotate(std::move(*cert), data);
}

SliceSeq slice_sequence(const Rep& m, const ThetaFiltCert& cert, const EPSSData& data) {
  const Field& fld = data.A->field;
  if (m.is_zero_rep()) throw EPSSError("the zero module has no slice");
  SliceSeq out;
  out.height = cert.min_height;
  out.mult.assign(data.theta.size(), 0);

  QuotRep tm = top(m);
  std::vector<const Rep*> parts;
  std::vector<RepMap> chosen;
  for (std::size_t l = 0; l < data.theta.size(); ++l) {
    if (data.h[l] != cert.min_height) continue;
    const int want = cert.cert.mult[l];
    if (want == 0) continue;
    const int v = top_vertex(data.theta[l]);
    if (v < 0) throw EPSSError("family member without a simple top");
    Mat pi = top(data.theta[l]).proj.f[v];  // 1 x dim row onto the top
    std::vector<RepMap> h = hom_basis(m, data.theta[l]);
    // symbols of the homs on top(m): columns of t
    Mat t(tm.rep.dims[v], 0, fld);
    for (const auto& f : h) {
      Mat c = pi * f.f[v];
      auto bar = solve(tm.proj.f[v].transpose(), c.transpose());
      if (!bar) throw EPSSError("hom does not factor through the top");
      t = hstack(t, *bar);
    }
    std::vector<int> pick = independent_cols(Mat(t.rows, 0, fld), t);
    if (int(pick.size()) != want)
      throw EPSSError("slice at height " + std::to_string(cert.min_height) + " reaches " +
                      std::to_string(pick.size()) + " copies of factor " + std::to_string(l) +
                      " but the certificate demands " + std::to_string(want));
    out.mult[l] = want;
    for (int j : pick) {
      parts.push_back(&data.theta[l]);
      chosen.push_back(h[j]);
    }
  }
  if (parts.empty()) throw EPSSError("no factor at the minimal height admits a surjection");

  out.slice = direct_sum(*data.A, parts);
  out.onto = zero_map(m, out.slice.rep);
  for (std::size_t c = 0; c < chosen.size(); ++c)
    out.onto = map_add(out.onto, compose(out.slice.incl[c], chosen[c]));
  if (!is_surjective_onto(out.onto, out.slice.rep))
    throw EPSSError("independent top symbols did not give a surjection onto the slice");

  SubRep k = kernel(out.onto, m, out.slice.rep);
  out.sub = std::move(k.rep);
  out.incl = std::move(k.incl);
  auto sc = theta_filtration(out.sub, data);
  if (!sc) throw EPSSError("kernel of the slice map is not filtered by the family");
  for (std::size_t l = 0; l < data.theta.size(); ++l)
    if (sc->cert.mult[l] != cert.cert.mult[l] - out.mult[l])
      throw EPSSError("kernel multiplicities disagree with the certificate minus the slice");
  if (!out.sub.is_zero_rep() && sc->min_height <= out.height)
    throw EPSSError("kernel of the slice map does not sit strictly higher");
  out.subcert = std::move(*sc);
  return out;
}

bool generated_in_height(const Rep& m, const ThetaFiltCert& cert, const EPSSData& data) {
  if (m.is_zero_rep()) return true;
  int want = 0;
  for (std::size_t l = 0; l < data.theta.size(); ++l)
    if (data.h[l] == cert.min_height) want += cert.cert.mult[l];
  std::vector<int> td = top_dims(m);
  // the slice quotient always surjects on tops, so equality of totals is iso
  return std::accumulate(td.begin(), td.end(), 0) == want;
}

RelCover relative_cover(const Rep& m, const ThetaFiltCert& cert, const EPSSData& data) {
  const Field& fld = data.A->field;
  if (m.is_zero_rep()) throw EPSSError("the zero module has no cover");
  SliceSeq s = slice_sequence(m, cert, data);

  // one q summand per slice component, lifted through the slice surjection
  std::vector<Part> parts;
  {
    int c = 0;
    for (std::size_t l = 0; l < data.theta.size(); ++l)
      for (int r = 0; r < s.mult[l]; ++r, ++c) {
        RepMap target = compose(s.slice.incl[c], data.onto[l]);
        auto lift = solve_through(hom_basis(data.q[l], m), s.onto, data.q[l], m, target, fld);
        if (!lift)
          throw EPSSError("cover lift through the slice failed for factor " + std::to_string(l));
        parts.push_back({int(l), std::move(*lift)});
      }
  }

  RelCover out;
  out.height_generated = generated_in_height(m, cert, data);
  if (!out.height_generated) {
    // cover the kernel recursively, then drop whatever became redundant
    RelCover rest = relative_cover(s.sub, s.subcert, data);
    {
      int c = 0;
      for (std::size_t l = 0; l < data.theta.size(); ++l)
        for (int r = 0; r < rest.mult[l]; ++r, ++c)
          parts.push_back(
              {int(l), compose(s.incl, compose(rest.onto, rest.cover.incl[c]))});
    }
    for (std::size_t i = 0; i < parts.size();) {
      if (parts.size() == 1) break;
      std::vector<Part> without = parts;
      without.erase(without.begin() + long(i));
      Assembled trial = assemble(without, m, data);
      if (is_surjective_onto(trial.onto, m) &&
          theta_filtration(kernel(trial.onto, trial.cover.rep, m).rep, data)) {
        parts = std::move(without);
      } else {
        ++i;
      }
    }
  }

  // rebuild in label order so the sum is canonical
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.label < b.label; });
  Assembled fin = assemble(parts, m, data);
  out.mult.assign(data.theta.size(), 0);
  for (const auto& p : parts) ++out.mult[p.label];
  out.cover = std::move(fin.cover);
  out.onto = std::move(fin.onto);
  if (!is_surjective_onto(out.onto, m)) throw EPSSError("relative cover is not surjective");

  SubRep k = kernel(out.onto, out.cover.rep, m);
  out.syz = std::move(k.rep);
  out.incl = std::move(k.incl);
  auto sc = theta_filtration(out.syz, data);
  if (!sc) throw EPSSError("relative syzygy is not filtered by the family");
  out.syzcert = std::move(*sc);
  return out;
}

RelResolution relative_resolution(const Rep& m, const EPSSData& data) {
  if (m.is_zero_rep()) throw EPSSError("the zero module has no resolution");
  auto cert = theta_filtration(m, data);
  if (!cert) throw EPSSError("module is not filtered by the family");
  const int bound = *std::max_element(data.h.begin(), data.h.end()) + 1;
  RelResolution out;
  Rep cur = m;
  ThetaFiltCert cc = std::move(*cert);
  for (int s = 0; s <= bound; ++s) {
    RelCover rc = relative_cover(cur, cc, data);
    cur = rc.syz;
    cc = rc.syzcert;
    out.steps.push_back(std::move(rc));
    if (cur.is_zero_rep()) {
      out.pd = int(out.steps.size()) - 1;
      return out;
    }
  }
  throw EPSSError("relative resolution did not terminate within the height bound");
}

LinFiltReport is_linearly_filtered(const Rep& m, const EPSSData& data) {
  auto cert = theta_filtration(m, data);
  if (!cert) throw EPSSError("module is not filtered by the family");
  LinFiltReport out;
  out.base_height = cert->min_height;
  if (m.is_zero_rep()) {
    out.linearly_filtered = true;
    return out;
  }
  const int bound = *std::max_element(data.h.begin(), data.h.end()) + 1;
  Rep cur = m;
  ThetaFiltCert cc = std::move(*cert);
  for (int s = 0; s <= bound; ++s) {
    bool gen = generated_in_height(cur, cc, data);
    out.steps.push_back({cc.min_height, gen});
    if (!gen || cc.min_height != out.base_height + s) return out;
    RelCover rc = relative_cover(cur, cc, data);
    cur = std::move(rc.syz);
    cc = std::move(rc.syzcert);
    if (cur.is_zero_rep()) {
      out.linearly_filtered = true;
      return out;
    }
  }
  throw EPSSError("linear filtration walk did not terminate within the height bound");
}

Thm212Report theorem212_hypotheses(const EPSSData& data, int cap) {
  Thm212Report r;
  const int n = int(data.theta.size());
  r.ext_proven = true;
  for (int l = 0; l < n; ++l) {
    Resolution res = min_resolution(data.q[l], cap + 1);
    for (int m = 0; m < n; ++m) {
      ExtData e = ext_data(res, data.theta[m], cap);
      r.ext_proven = r.ext_proven && e.proven_tail;
      for (int s = 1; s <= e.computed_to; ++s)
        if (e.dims[s] != 0) r.ext_failures.push_back({l, m, s});
    }
  }
  r.ext_vanishing = r.ext_failures.empty();

  for (int l = 0; l < n; ++l) {
    int dt = 0, dq = 0;
    for (int m = 0; m < n; ++m) {
      dt += int(hom_basis(data.theta[l], data.theta[m]).size());
      dq += int(hom_basis(data.q[l], data.theta[m]).size());
    }
    r.hom_dims.push_back({dt, dq});
    // precomposing with the surjection q -> theta is injective, so equal
    // dimensions make the restriction onto
    if (dt != dq) r.hom_failures.push_back(l);
  }
  r.hom_condition = r.hom_failures.empty();

  for (int l = 0; l < n; ++l) {
    r.lin.push_back(is_linearly_filtered(data.theta[l], data));
    if (!r.lin.back().linearly_filtered) r.linear_failures.push_back(l);
  }
  r.all_linear = r.linear_failures.empty();

  r.ok = r.ext_vanishing && r.hom_condition && r.all_linear;
  return r;
}

Prop211Report prop211_check(const EPSSData& data, const Rep& m, const StandardSystem& sys,
                            const DeltaExt& de, const GradedAlgebra& g) {
  Prop211Report r;
  r.filt = is_linearly_filtered(m, data);
  r.precondition = r.filt.linearly_filtered;
  if (!r.precondition) return r;
  GradedModule em = ext_module(sys, de, g, m);
  GradedCover c = graded_cover(em);
  r.generated_deg0 = true;
  for (const auto& [v, d] : c.gens) {
    r.gen_degrees.push_back(d);
    if (d != 0) r.generated_deg0 = false;
  }
  return r;
}

Cor215Report cor215_check(const EPSSData& data, const GammaAlgebra& ga) {
  const Field& fld = data.A->field;
  Cor215Report r;
  const int n = int(data.theta.size());
  for (int mu = 0; mu < n; ++mu) {
    EndAlgebra e = end_algebra(data.theta[mu]);
    for (int la = 0; la < n; ++la) {
      std::vector<RepMap> h = hom_basis(data.theta[la], data.theta[mu]);
      const int dim = int(h.size());
      if (dim == 0) continue;
      Mat basis = flat_basis(h, fld);
      std::vector<Mat> action;
      for (const auto& end : e.basis) {
        Mat moved(basis.rows, 0, fld);
        for (const auto& f : h) moved = hstack(moved, flat_map(compose(end, f), fld));
        auto act = solve(basis, moved);
        if (!act) throw EPSSError("postcomposition left the hom space");
        action.push_back(std::move(*act));
      }
      std::string why;
      if (!free_over_local(action, e.rad_basis, dim, fld, &why))
        r.failures.push_back({la, mu, 0, why});
    }
  }
  r.end_projective = r.failures.empty();
  r.leq_stratified = gamma_stratification(ga, data.order).leq_verdict.stratified;
  r.agree = r.end_projective == r.leq_stratified;
  return r;
}

}  // namespace strat
