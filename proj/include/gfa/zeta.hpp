// The limit zeta function of a phi-vector, its completed form, the
// logarithmic derivative xi, and the closed-form Brauer-Siegel quantities.
//
// Convention: number-field results use natural logarithms, function-field
// results use base-r logarithms throughout.
#pragma once

#include <cstdint>

#include "gfa/numerics.hpp"

namespace gfa {

class PhiSystem;

// Finite support makes the Euler products exact finite sums; the policy
// controls the generic evaluator's cutoff and records the bound on whatever
// it skipped.
struct TruncationPolicy {
  std::uint64_t q_max = UINT64_MAX;
  double term_tol = 1e-300;  // stop once |term| < term_tol
  double tail_bound = 0;     // set by the evaluator
};

// log zeta_phi(s) = sum_q -phi_q log(1 - q^-s); requires Re s > 1/2.
Complex log_zeta(const PhiSystem& phi, Complex s, TruncationPolicy& policy);
Complex log_zeta(const PhiSystem& phi, Complex s);

// log of the completed zeta function; adds the archimedean factors in the
// number-field case and equals s + log_zeta (base r) for function fields.
Complex log_zeta_tilde(const PhiSystem& phi, Complex s, TruncationPolicy& policy);
Complex log_zeta_tilde(const PhiSystem& phi, Complex s);

// xi_phi(s) = (log zeta~_phi)'; requires Re s >= 1/2 and s off the digamma
// poles.
Complex xi(const PhiSystem& phi, Complex s);

// Brauer-Siegel ratio: 1 + sum phi_q log(q/(q-1)) - phi_R log 2
// - phi_C log 2pi (number field); 1 + sum phi_{r^m} log_r(r^m/(r^m-1))
// (function field).
double bs_ratio(const PhiSystem& phi);

// kappa = sum phi_q log(q/(q-1)); bs_ratio - 1 for function fields.
double kappa(const PhiSystem& phi);

struct RegulatorBound {
  double value = 0;    // (log sqrt(pi e) + gamma/2) phi_R + (log 2 + gamma) phi_C
  double zimmert = 0;  // (log 2 + gamma) phi_R + 2 gamma phi_C
};

// Lower bound on lim log R / g for asymptotically good number-field
// families, with Zimmert's bound for comparison.  Number-field only.
RegulatorBound regulator_lower_bound(const PhiSystem& phi);

// Upper bound on lim log h / g.  Number-field only.
double class_number_upper_bound(const PhiSystem& phi);

}  // namespace gfa
