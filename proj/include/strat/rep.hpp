// rep.hpp
//
// Finite dimensional left modules over a bound quiver algebra, presented
// the concrete way: one vector space per vertex and one matrix per arrow.
// A path acts by multiplying its arrow matrices in application order, and
// a module map is a tuple of vertex matrices commuting with every arrow.
//
// All constructions here return canonical bases (kernels from the rref,
// images via colspace, quotient coordinates along standard basis
// complements), so repeated runs produce identical matrices.

#ifndef STRAT_REP_HPP
#define STRAT_REP_HPP

#include "strat/algebra.hpp"

namespace strat {

struct Rep {
  const Algebra* A = nullptr;
  std::vector<int> dims;   // per vertex
  std::vector<Mat> arr;    // per arrow a: dims[tgt] x dims[src]

  static Rep zero(const Algebra& a);

  int total_dim() const;
  bool is_zero_rep() const { return total_dim() == 0; }
  bool same_shape(const Rep& o) const { return A == o.A && dims == o.dims; }

  // relations of the algebra hold on these matrices
  bool relations_ok(std::string* why = nullptr) const;
};

// Matrix of a path acting on M, from vertex src along `arrows` (application
// order). Empty path gives the identity at src.
Mat act_path(const Rep& m, const std::vector<int>& arrows, int src);

// Action of a general algebra element on the e_s slice, landing in the e_t
// slice: sum of path actions with matching endpoints.
Mat act_elem(const Rep& m, const SparseVec& x, int s, int t);

struct RepMap {
  std::vector<Mat> f;  // per vertex
  bool is_zero_map() const;
};

RepMap zero_map(const Rep& from, const Rep& to);
RepMap identity_map(const Rep& m);
RepMap compose(const RepMap& g, const RepMap& f);  // g after f
RepMap map_add(const RepMap& a, const RepMap& b);
RepMap map_scale(const Scalar& c, const RepMap& a, const Field& f);
bool is_module_map(const Rep& m, const Rep& n, const RepMap& f, std::string* why = nullptr);
bool is_injective(const RepMap& f);
bool is_surjective_onto(const RepMap& f, const Rep& to);

// Basis of Hom(M, N) in a fixed deterministic order.
std::vector<RepMap> hom_basis(const Rep& m, const Rep& n);

struct SubRep {
  Rep rep;
  RepMap incl;
};
struct QuotRep {
  Rep rep;
  RepMap proj;
};
struct ImageRep {
  Rep rep;
  RepMap incl;  // into the codomain
  RepMap onto;  // from the domain
};
struct SumRep {
  Rep rep;
  std::vector<RepMap> incl;
  std::vector<RepMap> proj;
};

SubRep kernel(const RepMap& f, const Rep& m, const Rep& n);
ImageRep image(const RepMap& f, const Rep& m, const Rep& n);
QuotRep cokernel(const RepMap& f, const Rep& m, const Rep& n);
// quotient of m by a submodule given via its inclusion
QuotRep quotient(const Rep& m, const RepMap& incl, const Rep& sub);
SumRep direct_sum(const Algebra& a, const std::vector<const Rep*>& parts);

// Smallest submodule containing the given vertex subspaces.
SubRep submodule_closure(const Rep& m, const std::vector<Mat>& spans);

SubRep radical(const Rep& m);
QuotRep top(const Rep& m);             // semisimple quotient m / rad m
std::vector<int> top_dims(const Rep& m);

// Sum of images of all maps from s into m.
SubRep trace_submodule(const Rep& m, const Rep& s);

Rep simple_module(const Algebra& a, int v);
Rep projective_module(const Algebra& a, int v);  // A e_v
Rep regular_module(const Algebra& a);            // sum of the A e_v

// Isomorphism witness or nothing. Exact and deterministic: cheap invariant
// checks first, then the hom space is searched on the integer grid
// {0..dim}^k, which is large enough that a nonzero determinant polynomial
// must show up on it.
std::optional<RepMap> is_isomorphic(const Rep& m, const Rep& n);

// Explicit module over the algebra from an input [module] block.
Rep rep_from_spec(const Algebra& a, const ModuleSpec& spec);

struct RepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace strat

#endif
