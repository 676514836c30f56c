// resolution.hpp
//
// Labeled projective sums, minimal projective resolutions, and extension
// groups computed as cohomology of Hom(P*, N). A map out of a projective
// sum is stored by its generator coordinates: one vector of N per summand,
// the image of that summand's generator. All the cochain differentials
// are then honest matrices and Ext is kernel modulo image over the exact
// field, with a deterministic choice of representing cocycles.

#ifndef STRAT_RESOLUTION_HPP
#define STRAT_RESOLUTION_HPP

#include "strat/rep.hpp"

namespace strat {

struct ProjSum {
  const Algebra* A = nullptr;
  std::vector<int> labels;                   // vertex of each summand
  Rep rep;                                   // the direct sum, blocks in order
  std::vector<std::vector<int>> block_off;   // [summand][vertex] -> offset
  std::vector<int> gen_off;                  // generator coordinate of each summand
  int count() const { return int(labels.size()); }
};

ProjSum proj_sum(const Algebra& a, const std::vector<int>& labels);

struct Cover {
  ProjSum p;
  RepMap map;  // p.rep onto m, kernel inside the radical
};

// Minimal projective cover: one summand per top composition factor,
// generators sent to lifted top basis vectors.
Cover projective_cover(const Rep& m);

struct Resolution {
  Rep m;  // the resolved module
  std::vector<ProjSum> p;
  RepMap aug;                     // p[0].rep -> m
  std::vector<RepMap> d;          // d[s]: p[s].rep -> p[s-1].rep, entry 0 unused
  std::vector<Rep> syz;           // syz[s]: kernel feeding p[s], entry 0 unused
  std::vector<RepMap> syz_incl;   // into p[s-1].rep
  bool terminated = false;        // some syzygy vanished within the cap

  int length() const { return int(p.size()) - 1; }
  std::vector<std::vector<int>> multiplicities() const;  // labels per step
};

// Iterated minimal covers; stops early when the syzygy dies. `cap` bounds
// the index of the last computed term.
Resolution min_resolution(const Rep& m, int cap);

// ----- generator coordinates for Hom(P, N) -----

int homp_dim(const ProjSum& p, const Rep& n);
std::vector<int> homp_off(const ProjSum& p, const Rep& n);
// build the actual module map with the given generator images
RepMap homp_eval(const ProjSum& p, const Rep& n, const Mat& coords);
Mat homp_coords_of(const ProjSum& p, const Rep& n, const RepMap& f);
// Hom(p, n) -> Hom(pp, n), f -> f after d, as a matrix on coordinates
Mat homp_precompose(const ProjSum& pp, const ProjSum& p, const RepMap& d, const Rep& n);
// Hom(p, n1) -> Hom(p, n2), f -> g after f
Mat homp_postcompose(const ProjSum& p, const Rep& n1, const Rep& n2, const RepMap& g);

// ----- Ext groups -----

struct ExtData {
  int computed_to = -1;       // cohomology trusted through this degree
  bool proven_tail = false;   // resolution terminated: zero beyond length
  std::vector<int> dims;      // 0..computed_to
  std::vector<Mat> cocycles;  // chosen representatives, coordinate columns
  std::vector<Mat> bounds;    // coboundary bases
  std::vector<Mat> zspace;    // cocycle space bases
};

// degree0_seeds: coordinate vectors to prefer as leading representatives
// in degree zero (used to pin the identity of an endomorphism space).
ExtData ext_data(const Resolution& r, const Rep& n, int smax,
                 const std::vector<Mat>& degree0_seeds = {});

// class of a cocycle in the chosen representative basis at degree s
Mat ext_class_coords(const ExtData& e, const Field& f, int s, const Mat& cocycle);

struct ExtDims {
  std::vector<int> dims;
  bool proven_tail = false;
  int computed_to = -1;
};
ExtDims ext_dims(const Rep& m, const Rep& n, int smax, int cap);

// Chain lift of a degree-s cocycle f over the resolutions of its source
// and target: maps f_i with target_aug f_0 = f and d f_i = f_{i-1} d.
std::vector<RepMap> chain_lift(const Resolution& rm, int s, const RepMap& f,
                               const Resolution& rn, int height);

}  // namespace strat

#endif
