// corpus.cpp

#include "strat/corpus.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "strat/algebra.hpp"
#include "strat/stratification.hpp"

namespace strat {

namespace {

// Candidate quivers may contain oriented cycles; most of those blow past
// the path cap or the dimension bound and get discarded. A short cap keeps
// the rejection cheap.
constexpr int kPathCap = 12;

struct Arrow {
  int src, tgt;
};

// Free path count up to kPathCap, truncated at `bound`. Relations only
// shrink the algebra, so a candidate passing this is cheap to build; ones
// over the bound would spend minutes enumerating paths and filling the
// multiplication table before the dimension check could reject them.
long free_path_count(int nv, const std::vector<Arrow>& arrows, long bound) {
  std::vector<long> cur(nv, 1);  // paths ending at each vertex, by length
  long total = nv;
  for (int len = 1; len <= kPathCap && total <= bound; ++len) {
    std::vector<long> nxt(nv, 0);
    for (const Arrow& a : arrows) nxt[a.tgt] += cur[a.src];
    for (int v = 0; v < nv; ++v) total += nxt[v];
    cur = std::move(nxt);
  }
  return total;
}

std::string draw_candidate(std::mt19937& gen) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  };

  int nv = pick(2, 4);
  int na = pick(1, 6);

  std::vector<Arrow> arrows;
  for (int k = 0; k < na; ++k) arrows.push_back({pick(0, nv - 1), pick(0, nv - 1)});
  if (free_path_count(nv, arrows, 250) > 250) return {};

  // Monomial relations b*a over composable pairs (a first, then b).
  std::set<std::pair<int, int>> rels;
  int want = pick(0, 3);
  for (int t = 0; t < 4 * want; ++t) {
    if (int(rels.size()) >= want) break;
    int a = pick(0, na - 1), b = pick(0, na - 1);
    if (arrows[a].tgt == arrows[b].src) rels.insert({b, a});
  }

  // Random subrelation of a random linear order on the vertices. Taking
  // pairs only in permutation direction keeps the result a partial order.
  std::vector<int> perm(nv);
  for (int v = 0; v < nv; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), gen);
  std::vector<std::pair<int, int>> below;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (pick(0, 1)) below.push_back({perm[i], perm[j]});

  std::ostringstream out;
  out << "composition = right-to-left\n\n[quiver]\nvertices =";
  for (int v = 0; v < nv; ++v) out << " v" << v;
  out << "\n";
  for (int k = 0; k < na; ++k)
    out << "arrow a" << k << " v" << arrows[k].src << " v" << arrows[k].tgt << "\n";
  if (!rels.empty()) {
    out << "\n[relations]\n";
    for (auto [b, a] : rels) out << "a" << b << "*a" << a << "\n";
  }
  out << "\n[order]\n";
  for (auto [lo, hi] : below) out << "below v" << lo << " v" << hi << "\n";
  return out.str();
}

}  // namespace

std::vector<CorpusEntry> stratified_corpus(int count, unsigned seed, int max_dim) {
  std::mt19937 gen(seed);
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;

  for (int attempt = 0; int(out.size()) < count; ++attempt) {
    if (attempt >= 500 * count)
      throw std::runtime_error("corpus: attempt budget exhausted before enough survivors");
    std::string text = draw_candidate(gen);
    if (text.empty() || !seen.insert(text).second) continue;

    try {
      AlgebraInput in = parse_algebra(text);
      Algebra a = build_algebra(in, kPathCap);
      if (a.dim() > max_dim) continue;
      Poset order = Poset::from_pairs(in.quiver.vertices, in.order_pairs);
      StandardSystem sys = standard_modules(a, order);
      if (!is_standardly_stratified(sys).stratified) continue;
    } catch (const CapExhausted&) {
      continue;
    } catch (const AlgebraError&) {
      continue;
    } catch (const StratError&) {
      continue;
    }

    std::ostringstream name;
    name << "corpus-" << (out.size() < 9 ? "0" : "") << out.size() + 1;
    out.push_back({name.str(), text});
  }
  return out;
}

}  // namespace strat
