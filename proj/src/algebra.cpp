// algebra.cpp

#include "strat/algebra.hpp"

#include <algorithm>
#include <map>

namespace strat {

namespace {

struct RawPath {
  std::vector<int> arrows;  // application order
  int src, tgt;
};

// text order names decide ties inside a length level
std::vector<std::string> text_names(const Quiver& q, const std::vector<int>& applied) {
  std::vector<std::string> names;
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) names.push_back(q.arrows[*it].name);
  return names;
}

struct Level {
  std::vector<RawPath> raw;                // sorted
  std::map<std::vector<int>, int> index;   // arrows -> position in raw
  std::vector<int> selected;               // raw positions surviving the ideal
  std::vector<int> global_id;              // per selected position: basis id
  Mat reduce;                              // selected coords of each raw path
};

}  // namespace

SparseVec Algebra::mul(const SparseVec& x, const SparseVec& y) const {
  std::map<int, Scalar> acc;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      Scalar c = field.mul(ci, cj);
      if (Field::is_zero(c)) continue;
      for (const auto& [k, ck] : table[i][j]) {
        auto [it, fresh] = acc.emplace(k, Scalar(0));
        it->second = field.add(it->second, field.mul(c, ck));
      }
    }
  SparseVec out;
  for (auto& [k, c] : acc)
    if (!Field::is_zero(c)) out.emplace_back(k, c);
  return out;
}

Algebra build_algebra(const AlgebraInput& in, int max_path_length, Field f) {
  Algebra a;
  a.quiver = in.quiver;
  a.field = f;
  a.relations = in.relations;
  a.max_path_length = max_path_length;
  const Quiver& q = a.quiver;
  const int nv = a.nvert();

  // reduce relation coefficients into the working field; terms that die
  // mod p just drop out of the ideal generator
  for (auto& r : a.relations) {
    std::vector<PathTerm> kept;
    for (auto& t : r.terms) {
      t.coeff = f.canon(t.coeff);
      if (!Field::is_zero(t.coeff)) kept.push_back(t);
    }
    if (kept.empty())
      throw AlgebraError("relation '" + r.text + "' vanishes identically over " + f.name());
    r.terms = std::move(kept);
  }

  std::vector<Level> levels;

  // level 0: trivial paths, never touched by an admissible ideal
  {
    Level l0;
    std::vector<int> vorder(nv);
    for (int v = 0; v < nv; ++v) vorder[v] = v;
    std::sort(vorder.begin(), vorder.end(),
              [&](int x, int y) { return q.vertices[x] < q.vertices[y]; });
    for (int v : vorder) l0.raw.push_back({{}, v, v});
    // encode trivial path of v as {-1 - v} for the index map
    for (int i = 0; i < nv; ++i) l0.index[{-1 - l0.raw[i].src}] = i;
    for (int i = 0; i < nv; ++i) l0.selected.push_back(i);
    l0.reduce = Mat::identity(nv, f);
    levels.push_back(std::move(l0));
  }

  // grow levels until the arrow powers die out
  for (int len = 1;; ++len) {
    if (len > max_path_length)
      throw CapExhausted("path length cap " + std::to_string(max_path_length) +
                         " reached before the arrow ideal became nilpotent");
    Level lv;
    const Level& prev = levels[len - 1];
    for (const auto& p : prev.raw)
      for (int ai = 0; ai < a.narr(); ++ai)
        if (q.arrows[ai].src == p.tgt) {
          RawPath np;
          np.arrows = p.arrows;
          np.arrows.push_back(ai);
          np.src = p.src;
          np.tgt = q.arrows[ai].tgt;
          lv.raw.push_back(std::move(np));
        }
    std::sort(lv.raw.begin(), lv.raw.end(), [&](const RawPath& x, const RawPath& y) {
      return text_names(q, x.arrows) < text_names(q, y.arrows);
    });
    if (lv.raw.empty()) {
      a.nilpotency = len;
      break;
    }
    const int nraw = int(lv.raw.size());
    for (int i = 0; i < nraw; ++i) lv.index[lv.raw[i].arrows] = i;

    // span of u * r * w at this length, in raw coordinates
    std::vector<Mat> gens;
    for (const auto& r : a.relations) {
      if (r.len > len) continue;
      // choose w (acts first, ends at src of r) and u (starts at tgt of r)
      for (int wl = 0; wl + r.len <= len; ++wl) {
        int ul = len - r.len - wl;
        for (const auto& w : levels[wl].raw) {
          if (w.tgt != r.src) continue;
          for (const auto& u : levels[ul].raw) {
            if (u.src != r.tgt) continue;
            Mat vcol(nraw, 1, f);
            for (const auto& t : r.terms) {
              std::vector<int> arrows = w.arrows;
              arrows.insert(arrows.end(), t.arrows.begin(), t.arrows.end());
              arrows.insert(arrows.end(), u.arrows.begin(), u.arrows.end());
              auto it = lv.index.find(arrows);
              if (it == lv.index.end()) throw AlgebraError("internal: missing raw path");
              vcol.at(it->second, 0) = f.add(vcol.at(it->second, 0), t.coeff);
            }
            gens.push_back(std::move(vcol));
          }
        }
      }
    }
    Mat ideal(nraw, 0, f);
    for (const auto& g : gens) ideal = hstack(ideal, g);
    ideal = colspace(ideal);

    // greedy complement: earliest paths whose classes stay independent
    Mat span = ideal;
    int r0 = span.cols == 0 ? 0 : rank(span);
    for (int i = 0; i < nraw; ++i) {
      Mat e(nraw, 1, f);
      e.at(i, 0) = 1;
      Mat cand = hstack(span, e);
      int nr = rank(cand);
      if (nr > r0) {
        lv.selected.push_back(i);
        span = cand;
        r0 = nr;
      }
    }
    if (lv.selected.empty()) {
      a.nilpotency = len;
      break;
    }

    // normal forms: solve [survivors | ideal] x = e_p for every raw p
    Mat sel(nraw, int(lv.selected.size()), f);
    for (int k = 0; k < int(lv.selected.size()); ++k) sel.at(lv.selected[k], k) = 1;
    auto x = solve(hstack(sel, ideal), Mat::identity(nraw, f));
    if (!x) throw AlgebraError("internal: normal form solve failed");
    lv.reduce = Mat(int(lv.selected.size()), nraw, f);
    for (int i = 0; i < lv.reduce.rows; ++i)
      for (int j = 0; j < nraw; ++j) lv.reduce.at(i, j) = x->at(i, j);
    levels.push_back(std::move(lv));
  }

  // assemble the global basis
  a.unit.assign(nv, -1);
  a.arrow_path.assign(a.narr(), -1);
  a.by_st.assign(nv, std::vector<std::vector<int>>(nv));
  for (int len = 0; len < int(levels.size()); ++len) {
    Level& lv = levels[len];
    for (int k = 0; k < int(lv.selected.size()); ++k) {
      const RawPath& p = lv.raw[lv.selected[k]];
      Algebra::BasisPath bp;
      bp.arrows = p.arrows;
      bp.src = p.src;
      bp.tgt = p.tgt;
      bp.len = len;
      bp.name = len == 0 ? "e_" + q.vertices[p.src] : path_name(q, p.arrows);
      int id = int(a.basis.size());
      a.basis.push_back(std::move(bp));
      lv.global_id.push_back(id);
      a.by_st[p.src][p.tgt].push_back(id);
      if (len == 0) a.unit[p.src] = id;
      if (len == 1) a.arrow_path[p.arrows[0]] = id;
    }
  }
  if (int(levels.size()) > 1 && int(levels[1].selected.size()) != a.narr())
    throw AlgebraError("internal: an arrow fell into the ideal; relations are not admissible");

  // multiplication table via normal forms
  const int d = a.dim();
  a.table.assign(d, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto& pi = a.basis[i];
      const auto& pj = a.basis[j];
      if (pj.tgt != pi.src) continue;  // zero product
      int len = pi.len + pj.len;
      if (len >= a.nilpotency && len > 0) continue;
      if (len == 0) {
        a.table[i][j] = {{i, Scalar(1)}};
        continue;
      }
      std::vector<int> arrows = pj.arrows;
      arrows.insert(arrows.end(), pi.arrows.begin(), pi.arrows.end());
      const Level& lv = levels[len];
      auto it = lv.index.find(arrows);
      if (it == lv.index.end()) throw AlgebraError("internal: missing product path");
      SparseVec out;
      for (int k = 0; k < int(lv.selected.size()); ++k) {
        const Scalar& c = lv.reduce.at(k, it->second);
        if (!Field::is_zero(c)) out.emplace_back(lv.global_id[k], c);
      }
      a.table[i][j] = std::move(out);
    }
  return a;
}

long acyclic_path_count(const Quiver& q) {
  const int nv = int(q.vertices.size());
  // paths_from[v] computed by DFS with cycle detection
  std::vector<long> memo(nv, -2);  // -2 unvisited, -3 in progress
  std::vector<long> state(nv, 0);

  struct Walker {
    const Quiver& q;
    std::vector<long>& memo;
    bool cyclic = false;
    Walker(const Quiver& q, std::vector<long>& m) : q(q), memo(m) {}
    long go(int v) {
      if (memo[v] == -3) {
        cyclic = true;
        return 0;
      }
      if (memo[v] >= 0) return memo[v];
      memo[v] = -3;
      long total = 1;  // trivial path
      for (const auto& ar : q.arrows)
        if (ar.src == v) total += go(ar.tgt);
      memo[v] = total;
      return total;
    }
  } w(q, memo);

  long sum = 0;
  for (int v = 0; v < nv; ++v) sum += w.go(v);
  return w.cyclic ? -1 : sum;
}

bool algebra_associative(const Algebra& a, std::string* why) {
  const int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (a.basis[j].tgt != a.basis[i].src) continue;
      for (int k = 0; k < d; ++k) {
        if (a.basis[k].tgt != a.basis[j].src) continue;
        SparseVec lhs = a.mul(a.table[i][j], {{k, Scalar(1)}});
        SparseVec rhs = a.mul({{i, Scalar(1)}}, a.table[j][k]);
        if (lhs != rhs) {
          if (why)
            *why = "(" + a.basis[i].name + " * " + a.basis[j].name + ") * " + a.basis[k].name +
                   " differs from the right bracketing";
          return false;
        }
      }
    }
  return true;
}

}  // namespace strat
