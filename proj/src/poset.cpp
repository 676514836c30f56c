// poset.cpp

#include "strat/poset.hpp"

#include <algorithm>

namespace strat {

Poset Poset::from_pairs(const std::vector<std::string>& labels,
                        const std::vector<std::pair<int, int>>& below) {
  Poset p;
  p.labels = labels;
  int n = p.n();
  p.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) p.leq[i][i] = 1;
  for (auto [a, b] : below) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw PosetError("order: vertex out of range");
    p.leq[a][b] = 1;
  }
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = 1;
  p.partial = true;
  for (int i = 0; i < n && p.partial; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i]) {
        p.partial = false;
        break;
      }
  return p;
}

Poset Poset::antichain(const std::vector<std::string>& labels) {
  return from_pairs(labels, {});
}

Poset Poset::opposite() const {
  Poset p = *this;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) p.leq[i][j] = leq[j][i];
  return p;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> out;
  std::vector<bool> used(n(), false);
  for (int step = 0; step < n(); ++step) {
    int best = -1;
    for (int i = 0; i < n(); ++i) {
      if (used[i]) continue;
      bool minimal = true;
      for (int j = 0; j < n(); ++j)
        if (!used[j] && lt(j, i)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      if (best < 0 || labels[i] < labels[best]) best = i;
    }
    if (best < 0) throw PosetError("order: no minimal element, relation is cyclic");
    used[best] = true;
    out.push_back(best);
  }
  return out;
}

std::vector<int> Poset::heights() const {
  if (!partial) throw PosetError("order: heights need a partial order");
  std::vector<int> h(n(), 0);
  std::vector<bool> done(n(), false);
  int level = 0;
  int remaining = n();
  while (remaining > 0) {
    ++level;
    std::vector<int> layer;
    for (int i = 0; i < n(); ++i) {
      if (done[i]) continue;
      bool minimal = true;
      for (int j = 0; j < n(); ++j)
        if (!done[j] && lt(j, i)) {
          minimal = false;
          break;
        }
      if (minimal) layer.push_back(i);
    }
    if (layer.empty()) throw PosetError("order: cyclic relation while peeling heights");
    for (int i : layer) {
      h[i] = level;
      done[i] = true;
      --remaining;
    }
  }
  return h;
}

int Poset::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : int(it - labels.begin());
}

}  // namespace strat
