// stratification.hpp
//
// Standard modules over a vertex order and everything decided from them.
// The standard module at v is the largest quotient of P_v whose other
// composition factors come only from vertices below or equivalent to v:
// concretely P_v modulo the traces of all P_w with w not below v.
//
// Filtration certificates are explicit: a chain of embeddings, each
// placing one factor as a submodule of the current quotient, checkable by
// rewalking the chain. The search is complete, not heuristic: candidate
// embeddings are scanned on an integer grid large enough that an existing
// injective combination must appear on it, and the recursion tries every
// peel order. A missing certificate therefore really means no filtration.

#ifndef STRAT_STRATIFICATION_HPP
#define STRAT_STRATIFICATION_HPP

#include "strat/poset.hpp"
#include "strat/resolution.hpp"

namespace strat {

struct StandardSystem {
  const Algebra* A = nullptr;
  Poset order;
  std::vector<Rep> proj;      // P_v
  std::vector<Rep> delta;     // standard modules
  std::vector<RepMap> onto;   // P_v -> delta_v
  std::vector<Rep> kmod;      // kernels of those
  std::vector<RepMap> kincl;  // kernel -> P_v
};

struct StratError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws StratError when some standard module collapses to zero.
StandardSystem standard_modules(const Algebra& a, const Poset& order);

// ----- filtration certificates -----

struct FiltrationStep {
  int label;
  RepMap embed;  // factor -> current stage, injective
};
struct FiltrationCert {
  std::vector<FiltrationStep> steps;  // bottom factor first
  std::vector<int> mult;              // per label
};

// Certificate that m is filtered with layers from `factors`, or nothing.
// peel_order lists the labels to try when picking the next bottom factor;
// passing the reversed linear extension makes the common case fast.
std::optional<FiltrationCert> module_filtration(const Rep& m, const std::vector<Rep>& factors,
                                                const std::vector<int>& peel_order);

// Recheck a certificate from scratch against m.
bool verify_filtration(const Rep& m, const std::vector<Rep>& factors, const FiltrationCert& cert,
                       std::string* why = nullptr);

// Multiplicities solved from dimension vectors alone; throws StratError
// when the linear system disagrees with the certificate.
std::vector<int> filtration_multiplicities(const Rep& m, const std::vector<Rep>& factors,
                                           const FiltrationCert& cert);

// ----- verdicts -----

struct StratVerdict {
  bool stratified = false;
  bool quasi_hereditary = false;
  // composition factors of delta_v outside the allowed set: (v, w, count)
  std::vector<std::tuple<int, int, int>> factor_violations;
  std::vector<std::optional<FiltrationCert>> kernel_certs;  // per vertex
  std::vector<int> end_dims;                                // dim End(delta_v)
};

StratVerdict is_standardly_stratified(const StandardSystem& sys);
bool is_quasi_hereditary(const StratVerdict& v);

// ----- ext tables over the standard modules -----

struct DeltaExt {
  int smax = 0;
  bool all_terminated = false;
  std::vector<Resolution> res;              // per source vertex
  std::vector<std::vector<ExtData>> table;  // [from][to]
  int dim(int from, int to, int s) const;
};

DeltaExt delta_ext(const StandardSystem& sys, int smax);

struct ExtViolation {
  int from, to, degree, dim;
};
struct DirectednessReport {
  bool directed = true;
  bool proven = false;  // all resolutions terminated within the cap
  int cap = 0;
  std::vector<ExtViolation> violations;  // nonzero ext against the strict order
};

// Nonzero Ext^s(delta_a, delta_b) forces a strictly below b (a != b); a
// violation is any nonzero group where that fails.
DirectednessReport directedness_check(const StandardSystem& sys, const DeltaExt& de);

// ----- endomorphism side conditions -----

// basis of End(m) with the identity first, plus structure data
struct EndAlgebra {
  std::vector<RepMap> basis;           // identity first
  std::vector<Mat> mult;               // mult[i]: coords of basis[i] * basis[j] in column j
  Mat rad_basis;                       // columns: radical elements in basis coords
  std::vector<Scalar> top_scalar;      // induced scalar on the simple top
};
EndAlgebra end_algebra(const Rep& m);

struct FreenessFailure {
  int from, to, degree;
  std::string reason;
};
struct Theorem14Report {
  bool holds = true;
  bool proven = false;
  int cap = 0;
  std::vector<FreenessFailure> failures;
};

// Every Ext^s(delta_a, delta_b) must be free as a module over the local
// algebra End(delta_b) acting by postcomposition.
Theorem14Report theorem14_check(const StandardSystem& sys, const DeltaExt& de);

// Freeness of a space with given commuting operators over a split local
// algebra presented by its basis action matrices and radical.
bool free_over_local(const std::vector<Mat>& action, const Mat& rad_basis, int space_dim,
                     const Field& f, std::string* reason = nullptr);

}  // namespace strat

#endif
