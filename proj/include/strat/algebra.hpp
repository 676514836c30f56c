// algebra.hpp
//
// Finite dimensional bound quiver algebra A = kQ/I. The ideal is generated
// by length homogeneous relations, so the quotient is graded by path
// length and we can close the ideal level by level: at each length the
// span of (path) * (relation) * (path) products is computed exactly, a
// complementary set of surviving paths is selected greedily in the global
// path order, and every raw path gets a normal form over the survivors.
// The construction stops at the first length with no survivors, which by
// homogeneity kills all longer paths too; that length is the nilpotency
// degree of the arrow ideal.

#ifndef STRAT_ALGEBRA_HPP
#define STRAT_ALGEBRA_HPP

#include "strat/matrix.hpp"
#include "strat/quiver.hpp"

namespace strat {

// sparse vector over basis indices, sorted by index
using SparseVec = std::vector<std::pair<int, Scalar>>;

struct Algebra {
  Quiver quiver;
  Field field;
  std::vector<PathExpr> relations;
  int max_path_length = 30;

  struct BasisPath {
    std::vector<int> arrows;  // application order, empty for trivial paths
    int src = -1;
    int tgt = -1;
    int len = 0;
    std::string name;  // text order, "e_v" for trivial paths
  };
  // sorted by (length, name); trivial paths first
  std::vector<BasisPath> basis;
  std::vector<int> unit;                             // basis id of e_v per vertex
  std::vector<int> arrow_path;                       // basis id of each arrow
  std::vector<std::vector<std::vector<int>>> by_st;  // [src][tgt] -> basis ids
  int nilpotency = 1;                                // least N with J^N = 0
  std::vector<std::vector<SparseVec>> table;         // table[i][j] = basis[i] * basis[j]

  int dim() const { return int(basis.size()); }
  int nvert() const { return int(quiver.vertices.size()); }
  int narr() const { return int(quiver.arrows.size()); }

  SparseVec mul(const SparseVec& x, const SparseVec& y) const;
  SparseVec mul_basis(int i, int j) const { return table[i][j]; }
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a cap is too small to finish a computation honestly.
struct CapExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Algebra build_algebra(const AlgebraInput& in, int max_path_length = 30,
                      Field f = Field::rationals());

// Independent count of all paths (trivial ones included) of an acyclic
// quiver by depth first search; -1 when the quiver has an oriented cycle.
long acyclic_path_count(const Quiver& q);

// Exhaustive (b_i b_j) b_k = b_i (b_j b_k) check.
bool algebra_associative(const Algebra& a, std::string* why = nullptr);

}  // namespace strat

#endif
