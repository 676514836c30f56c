// yoneda.hpp
//
// The graded extension algebra of the standard modules. Elements are the
// chosen cocycle representatives from the ext tables; the product of two
// classes lifts one cocycle to a chain map between the resolutions and
// composes. Everything is stored by structure constants so later layers
// can treat the result as a plain finite dimensional graded algebra.

#ifndef STRAT_YONEDA_HPP
#define STRAT_YONEDA_HPP

#include "strat/stratification.hpp"

namespace strat {

struct YonedaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GradedElt {
  int from, to;  // source and target label of the underlying ext group
  int deg, idx;  // cohomological degree and index inside that group
  std::string name;
};

struct GradedAlgebra {
  Field field = Field::rationals();
  std::vector<std::string> labels;
  int maxdeg = 0;        // largest degree carried
  bool complete = false;  // every resolution terminated within the bound
  std::vector<GradedElt> basis;  // sorted by (deg, from, to, idx)
  std::vector<int> idem;         // basis index of the identity at each label
  // table[i][j]: basis[i] * basis[j] with j acting first, in basis coords
  std::vector<std::vector<SparseVec>> table;

  int dim() const { return int(basis.size()); }
  std::vector<int> graded_dims() const;
  int find(int from, int to, int deg, int idx) const;  // -1 when absent
  std::vector<int> block(int from, int to, int deg) const;
  // products of total degree beyond maxdeg are only known when complete
  bool product_known(int i, int j) const;
  SparseVec mul(const SparseVec& x, const SparseVec& y) const;
};

// Builds the ext algebra up to min(maxdeg, de.smax). The degree zero part
// is cross-checked against plain hom composition.
GradedAlgebra ext_algebra(const StandardSystem& sys, const DeltaExt& de, int maxdeg);

// Same construction for an arbitrary family of modules over a common
// algebra, one label per module. Resolutions are cut at rescap steps.
GradedAlgebra ext_self_algebra(const Algebra& a, const std::vector<const Rep*>& mods,
                               const std::vector<std::string>& labels, int maxdeg, int rescap);

// Full associativity and identity audit of the structure constants.
bool graded_associative(const GradedAlgebra& g, std::string* why = nullptr);

// dim x dim matrix of left multiplication by basis element i
Mat left_mult(const GradedAlgebra& g, int i);

// Columns spanning the radical: positive degrees, off-diagonal degree zero
// maps, and the radicals of the local endomorphism blocks. The block
// scalars are read off with a trace form, so this needs characteristic
// zero and refuses prime fields.
Mat graded_radical(const GradedAlgebra& g);

// ----- quiver presentation -----

struct PresArrow {
  int src, tgt, deg;
  std::string name;
  Mat elem;  // the chosen radical element, basis coords
};
struct PresTerm {
  Scalar coeff;
  std::vector<int> arrows;  // application order, rightmost acts first in text
};
struct PresRelation {
  std::vector<PresTerm> terms;
  std::string text;
};
struct Presentation {
  std::vector<std::string> vertices;
  std::vector<PresArrow> arrows;
  std::vector<PresRelation> relations;
  bool certified = false;  // reconstruction matched dimension and products
  std::string note;
};

// Arrows are a basis of rad/rad^2 split by endpoints and degree; relations
// are minimal generators of the kernel of the induced path algebra map,
// searched by path length. The certificate rebuilds the bound quiver
// algebra from the presentation and matches it against the original.
Presentation quiver_presentation(const GradedAlgebra& g);

// The bound quiver input a presentation encodes, ready for build_algebra.
AlgebraInput presentation_input(const Presentation& p);

}  // namespace strat

#endif
