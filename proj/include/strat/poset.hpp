// poset.hpp
//
// Vertex orders. Input is a list of covers `a below b`; we take the
// reflexive transitive closure and remember whether the result is
// antisymmetric (a genuine partial order) or merely a preorder. Heights,
// the lexicographically smallest linear extension, and the opposite order
// are all derived here so every consumer sees the same conventions.

#ifndef STRAT_POSET_HPP
#define STRAT_POSET_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strat {

struct Poset {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> leq;  // closed relation, leq[i][j] means i <= j
  bool partial = true;                 // false when some i <= j <= i with i != j

  static Poset from_pairs(const std::vector<std::string>& labels,
                          const std::vector<std::pair<int, int>>& below);
  static Poset antichain(const std::vector<std::string>& labels);

  int n() const { return int(labels.size()); }
  bool le(int i, int j) const { return leq[i][j] != 0; }
  // strictly below; safe for preorders (equivalence classes are incomparable)
  bool lt(int i, int j) const { return le(i, j) && !le(j, i); }
  bool comparable(int i, int j) const { return le(i, j) || le(j, i); }

  Poset opposite() const;

  // Smallest linear extension in label order: repeatedly take the minimal
  // available element with the smallest label. Refines the strict relation,
  // so it also works for preorders.
  std::vector<int> linear_extension() const;

  // 1-based layer heights by peeling minimal elements. Partial orders only.
  std::vector<int> heights() const;

  int index_of(const std::string& label) const;  // -1 when absent
};

struct PosetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strat

#endif
