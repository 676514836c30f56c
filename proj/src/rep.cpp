// rep.cpp

#include "strat/rep.hpp"

#include <algorithm>
#include <numeric>

namespace strat {

Rep Rep::zero(const Algebra& a) {
  Rep m;
  m.A = &a;
  m.dims.assign(a.nvert(), 0);
  for (int i = 0; i < a.narr(); ++i)
    m.arr.emplace_back(0, 0, a.field);
  return m;
}

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

bool Rep::relations_ok(std::string* why) const {
  for (int ai = 0; ai < A->narr(); ++ai) {
    const auto& ar = A->quiver.arrows[ai];
    if (arr[ai].rows != dims[ar.tgt] || arr[ai].cols != dims[ar.src]) {
      if (why) *why = "arrow '" + ar.name + "' has the wrong shape";
      return false;
    }
  }
  for (const auto& r : A->relations) {
    Mat acc(dims[r.tgt], dims[r.src], A->field);
    for (const auto& t : r.terms)
      acc = acc + act_path(*this, t.arrows, r.src).scaled(A->field.canon(t.coeff));
    if (!acc.is_zero()) {
      if (why) *why = "relation '" + r.text + "' does not vanish";
      return false;
    }
  }
  return true;
}

Mat act_path(const Rep& m, const std::vector<int>& arrows, int src) {
  Mat acc = Mat::identity(m.dims[src], m.A->field);
  for (int ai : arrows) acc = m.arr[ai] * acc;
  return acc;
}

Mat act_elem(const Rep& m, const SparseVec& x, int s, int t) {
  Mat acc(m.dims[t], m.dims[s], m.A->field);
  for (const auto& [id, c] : x) {
    const auto& p = m.A->basis[id];
    if (p.src != s || p.tgt != t) continue;
    acc = acc + act_path(m, p.arrows, s).scaled(c);
  }
  return acc;
}

bool RepMap::is_zero_map() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

RepMap zero_map(const Rep& from, const Rep& to) {
  RepMap h;
  for (int v = 0; v < int(from.dims.size()); ++v)
    h.f.emplace_back(to.dims[v], from.dims[v], from.A->field);
  return h;
}

RepMap identity_map(const Rep& m) {
  RepMap h;
  for (int v = 0; v < int(m.dims.size()); ++v) h.f.push_back(Mat::identity(m.dims[v], m.A->field));
  return h;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  RepMap h;
  for (std::size_t v = 0; v < f.f.size(); ++v) h.f.push_back(g.f[v] * f.f[v]);
  return h;
}

RepMap map_add(const RepMap& a, const RepMap& b) {
  RepMap h;
  for (std::size_t v = 0; v < a.f.size(); ++v) h.f.push_back(a.f[v] + b.f[v]);
  return h;
}

RepMap map_scale(const Scalar& c, const RepMap& a, const Field& f) {
  RepMap h;
  for (const auto& m : a.f) h.f.push_back(m.scaled(f.canon(c)));
  return h;
}

bool is_module_map(const Rep& m, const Rep& n, const RepMap& f, std::string* why) {
  for (int ai = 0; ai < m.A->narr(); ++ai) {
    const auto& ar = m.A->quiver.arrows[ai];
    if (!(n.arr[ai] * f.f[ar.src] == f.f[ar.tgt] * m.arr[ai])) {
      if (why) *why = "square for arrow '" + ar.name + "' does not commute";
      return false;
    }
  }
  return true;
}

bool is_injective(const RepMap& f) {
  for (const auto& m : f.f)
    if (rank(m) < m.cols) return false;
  return true;
}

bool is_surjective_onto(const RepMap& f, const Rep& to) {
  for (int v = 0; v < int(to.dims.size()); ++v)
    if (rank(f.f[v]) < to.dims[v]) return false;
  return true;
}

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) {
  const Algebra& a = *m.A;
  const Field& f = a.field;
  const int nv = a.nvert();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  const int nvars = off[nv];
  if (nvars == 0) return {};

  // one equation block per arrow: n.arr[a] f_src - f_tgt m.arr[a] = 0
  int neq = 0;
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    neq += n.dims[ar.tgt] * m.dims[ar.src];
  }
  Mat sys(neq, nvars, f);
  int row = 0;
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    const int u = ar.src, w = ar.tgt;
    for (int r = 0; r < n.dims[w]; ++r)
      for (int c = 0; c < m.dims[u]; ++c) {
        // sum_k n.arr(r,k) f_u(k,c) - sum_l f_w(r,l) m.arr(l,c)
        for (int k = 0; k < n.dims[u]; ++k) {
          const Scalar& x = n.arr[ai].at(r, k);
          if (!Field::is_zero(x)) {
            int var = off[u] + k * m.dims[u] + c;
            sys.at(row, var) = f.add(sys.at(row, var), x);
          }
        }
        for (int l = 0; l < m.dims[w]; ++l) {
          const Scalar& x = m.arr[ai].at(l, c);
          if (!Field::is_zero(x)) {
            int var = off[w] + r * m.dims[w] + l;
            sys.at(row, var) = f.sub(sys.at(row, var), x);
          }
        }
        ++row;
      }
  }
  Mat k = kernel_basis(sys);
  std::vector<RepMap> out;
  for (int j = 0; j < k.cols; ++j) {
    RepMap h;
    for (int v = 0; v < nv; ++v) {
      Mat fv(n.dims[v], m.dims[v], f);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) fv.at(r, c) = k.at(off[v] + r * m.dims[v] + c, j);
      h.f.push_back(std::move(fv));
    }
    out.push_back(std::move(h));
  }
  return out;
}

// subrepresentation on given per-vertex bases; bases must already be
// arrow stable
static SubRep sub_on_bases(const Rep& m, std::vector<Mat> bases) {
  const Algebra& a = *m.A;
  SubRep s;
  s.rep.A = &a;
  s.rep.dims.resize(a.nvert());
  for (int v = 0; v < a.nvert(); ++v) s.rep.dims[v] = bases[v].cols;
  s.rep.arr.resize(a.narr());
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    auto x = solve(bases[ar.tgt], m.arr[ai] * bases[ar.src]);
    if (!x) throw RepError("internal: subspace not arrow stable");
    s.rep.arr[ai] = *x;
  }
  s.incl.f = std::move(bases);
  return s;
}

SubRep kernel(const RepMap& f, const Rep& m, const Rep& n) {
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < f.f.size(); ++v) bases.push_back(kernel_basis(f.f[v]));
  (void)n;
  return sub_on_bases(m, std::move(bases));
}

ImageRep image(const RepMap& f, const Rep& m, const Rep& n) {
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < f.f.size(); ++v) bases.push_back(colspace(f.f[v]));
  SubRep s = sub_on_bases(n, std::move(bases));
  ImageRep out;
  out.rep = std::move(s.rep);
  out.incl = std::move(s.incl);
  for (std::size_t v = 0; v < f.f.size(); ++v) {
    auto x = solve(out.incl.f[v], f.f[v]);
    if (!x) throw RepError("internal: image coordinates failed");
    out.onto.f.push_back(std::move(*x));
  }
  return out;
}

QuotRep quotient(const Rep& m, const RepMap& incl, const Rep& sub) {
  const Algebra& a = *m.A;
  const Field& fld = a.field;
  QuotRep q;
  q.rep.A = &a;
  q.rep.dims.resize(a.nvert());
  std::vector<Mat> section(a.nvert());  // chosen complement columns
  for (int v = 0; v < a.nvert(); ++v) {
    Mat sb = colspace(incl.f[v]);
    Mat id = Mat::identity(m.dims[v], fld);
    Mat comp = id.cols_selected(independent_cols(sb, id));
    q.rep.dims[v] = comp.cols;
    // rows of inverse([sub | comp]) below the sub block give the projection
    Mat change = hstack(sb, comp);
    auto inv = solve(change, id);
    if (!inv) throw RepError("internal: quotient change of basis failed");
    Mat proj(comp.cols, m.dims[v], fld);
    for (int r = 0; r < comp.cols; ++r)
      for (int c = 0; c < m.dims[v]; ++c) proj.at(r, c) = inv->at(sb.cols + r, c);
    q.proj.f.push_back(std::move(proj));
    section[v] = std::move(comp);
  }
  q.rep.arr.resize(a.narr());
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    q.rep.arr[ai] = q.proj.f[ar.tgt] * (m.arr[ai] * section[ar.src]);
  }
  (void)sub;
  return q;
}

QuotRep cokernel(const RepMap& f, const Rep& m, const Rep& n) {
  ImageRep im = image(f, m, n);
  return quotient(n, im.incl, im.rep);
}

SumRep direct_sum(const Algebra& a, const std::vector<const Rep*>& parts) {
  SumRep s;
  s.rep.A = &a;
  s.rep.dims.assign(a.nvert(), 0);
  std::vector<std::vector<int>> off(parts.size(), std::vector<int>(a.nvert(), 0));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v = 0; v < a.nvert(); ++v) {
      off[i][v] = s.rep.dims[v];
      s.rep.dims[v] += parts[i]->dims[v];
    }
  s.rep.arr.resize(a.narr());
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    Mat blk(s.rep.dims[ar.tgt], s.rep.dims[ar.src], a.field);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Mat& pm = parts[i]->arr[ai];
      for (int r = 0; r < pm.rows; ++r)
        for (int c = 0; c < pm.cols; ++c) blk.at(off[i][ar.tgt] + r, off[i][ar.src] + c) = pm.at(r, c);
    }
    s.rep.arr[ai] = std::move(blk);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    RepMap inc, prj;
    for (int v = 0; v < a.nvert(); ++v) {
      Mat iv(s.rep.dims[v], parts[i]->dims[v], a.field);
      Mat pv(parts[i]->dims[v], s.rep.dims[v], a.field);
      for (int r = 0; r < parts[i]->dims[v]; ++r) {
        iv.at(off[i][v] + r, r) = 1;
        pv.at(r, off[i][v] + r) = 1;
      }
      inc.f.push_back(std::move(iv));
      prj.f.push_back(std::move(pv));
    }
    s.incl.push_back(std::move(inc));
    s.proj.push_back(std::move(prj));
  }
  return s;
}

SubRep submodule_closure(const Rep& m, const std::vector<Mat>& spans) {
  const Algebra& a = *m.A;
  std::vector<Mat> cur(a.nvert());
  for (int v = 0; v < a.nvert(); ++v) cur[v] = colspace(spans[v]);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int ai = 0; ai < a.narr(); ++ai) {
      const auto& ar = a.quiver.arrows[ai];
      if (cur[ar.src].cols == 0) continue;
      Mat pushed = m.arr[ai] * cur[ar.src];
      Mat joined = colspace(hstack(cur[ar.tgt], pushed));
      if (joined.cols > cur[ar.tgt].cols) {
        cur[ar.tgt] = std::move(joined);
        grew = true;
      }
    }
  }
  return sub_on_bases(m, std::move(cur));
}

SubRep radical(const Rep& m) {
  const Algebra& a = *m.A;
  std::vector<Mat> spans(a.nvert());
  for (int v = 0; v < a.nvert(); ++v) spans[v] = Mat(m.dims[v], 0, a.field);
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    spans[ar.tgt] = hstack(spans[ar.tgt], m.arr[ai]);
  }
  // images of arrows are already arrow stable as a family
  std::vector<Mat> bases(a.nvert());
  for (int v = 0; v < a.nvert(); ++v) bases[v] = colspace(spans[v]);
  return sub_on_bases(m, std::move(bases));
}

QuotRep top(const Rep& m) {
  SubRep r = radical(m);
  QuotRep t = quotient(m, r.incl, r.rep);
  for (int ai = 0; ai < int(t.rep.arr.size()); ++ai)
    if (!t.rep.arr[ai].is_zero()) throw RepError("internal: top is not semisimple");
  return t;
}

std::vector<int> top_dims(const Rep& m) {
  SubRep r = radical(m);
  std::vector<int> d(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) d[v] = m.dims[v] - r.rep.dims[v];
  return d;
}

SubRep trace_submodule(const Rep& m, const Rep& s) {
  std::vector<RepMap> homs = hom_basis(s, m);
  std::vector<Mat> spans(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    spans[v] = Mat(m.dims[v], 0, m.A->field);
    for (const auto& h : homs) spans[v] = hstack(spans[v], h.f[v]);
  }
  // images of module maps form a submodule; closure is a no-op but cheap
  return submodule_closure(m, spans);
}

Rep simple_module(const Algebra& a, int v) {
  Rep m;
  m.A = &a;
  m.dims.assign(a.nvert(), 0);
  m.dims[v] = 1;
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    m.arr.emplace_back(m.dims[ar.tgt], m.dims[ar.src], a.field);
  }
  return m;
}

Rep projective_module(const Algebra& a, int v) {
  Rep m;
  m.A = &a;
  m.dims.resize(a.nvert());
  for (int u = 0; u < a.nvert(); ++u) m.dims[u] = int(a.by_st[v][u].size());
  m.arr.resize(a.narr());
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    Mat blk(m.dims[ar.tgt], m.dims[ar.src], a.field);
    const auto& src_paths = a.by_st[v][ar.src];
    const auto& tgt_paths = a.by_st[v][ar.tgt];
    for (int c = 0; c < int(src_paths.size()); ++c) {
      const SparseVec& prod = a.table[a.arrow_path[ai]][src_paths[c]];
      for (const auto& [id, coef] : prod) {
        auto it = std::find(tgt_paths.begin(), tgt_paths.end(), id);
        if (it == tgt_paths.end()) throw RepError("internal: projective table mismatch");
        blk.at(int(it - tgt_paths.begin()), c) = coef;
      }
    }
    m.arr[ai] = std::move(blk);
  }
  return m;
}

Rep regular_module(const Algebra& a) {
  std::vector<Rep> ps;
  for (int v = 0; v < a.nvert(); ++v) ps.push_back(projective_module(a, v));
  std::vector<const Rep*> ptrs;
  for (const auto& p : ps) ptrs.push_back(&p);
  return direct_sum(a, ptrs).rep;
}

std::optional<RepMap> is_isomorphic(const Rep& m, const Rep& n) {
  if (m.A != n.A) return std::nullopt;
  if (m.dims != n.dims) return std::nullopt;
  if (m.total_dim() == 0) return RepMap{};
  // cheap invariants before any search
  for (std::size_t ai = 0; ai < m.arr.size(); ++ai)
    if (rank(m.arr[ai]) != rank(n.arr[ai])) return std::nullopt;
  if (top_dims(m) != top_dims(n)) return std::nullopt;

  auto invertible = [&](const RepMap& h) {
    for (std::size_t v = 0; v < h.f.size(); ++v)
      if (rank(h.f[v]) < m.dims[v]) return false;
    return true;
  };

  std::vector<RepMap> homs = hom_basis(m, n);
  const int k = int(homs.size());
  if (k == 0) return std::nullopt;
  // single basis maps first; they witness most isomorphisms immediately
  for (const auto& h : homs)
    if (invertible(h)) return h;

  const long d = m.total_dim();
  double volume = 1;
  for (int i = 0; i < k; ++i) {
    volume *= double(d + 1);
    if (volume > 2e6)
      throw CapExhausted("isomorphism search grid of " + std::to_string(k) +
                         " variables is too large");
  }
  // lexicographic walk over {0..d}^k; the determinant polynomial has degree
  // at most d in total, so it cannot vanish on this whole grid
  std::vector<long> t(k, 0);
  const Field& fld = m.A->field;
  while (true) {
    int pos = k - 1;
    while (pos >= 0 && t[pos] == d) {
      t[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++t[pos];
    RepMap h = zero_map(m, n);
    for (int i = 0; i < k; ++i)
      if (t[i] != 0) h = map_add(h, map_scale(fld.canon(Scalar(t[i])), homs[i], fld));
    if (invertible(h)) return h;
  }
  return std::nullopt;
}

Rep rep_from_spec(const Algebra& a, const ModuleSpec& spec) {
  Rep m;
  m.A = &a;
  m.dims = spec.dims;
  if (int(m.dims.size()) != a.nvert()) throw RepError("module '" + spec.name + "': wrong dims count");
  m.arr.resize(a.narr());
  for (int ai = 0; ai < a.narr(); ++ai) {
    const auto& ar = a.quiver.arrows[ai];
    m.arr[ai] = Mat(m.dims[ar.tgt], m.dims[ar.src], a.field);
  }
  for (const auto& [name, rows] : spec.mats) {
    int ai = a.quiver.arrow_index(name);
    const auto& ar = a.quiver.arrows[ai];
    const int r = m.dims[ar.tgt], c = m.dims[ar.src];
    // an all-empty matrix line is fine when a side has dimension zero
    if (r == 0 || c == 0) {
      bool empty = true;
      for (const auto& row : rows)
        if (!row.empty()) empty = false;
      if (!empty) throw RepError("module '" + spec.name + "': arrow '" + name +
                                 "' should have an empty matrix");
      continue;
    }
    if (int(rows.size()) != r) throw RepError("module '" + spec.name + "': arrow '" + name +
                                              "' needs " + std::to_string(r) + " rows");
    for (int i = 0; i < r; ++i) {
      if (int(rows[i].size()) != c) throw RepError("module '" + spec.name + "': arrow '" + name +
                                                   "' row " + std::to_string(i + 1) + " needs " +
                                                   std::to_string(c) + " entries");
      for (int j = 0; j < c; ++j) m.arr[ai].at(i, j) = a.field.canon(rows[i][j]);
    }
  }
  std::string why;
  if (!m.relations_ok(&why)) throw RepError("module '" + spec.name + "': " + why);
  return m;
}

}  // namespace strat
