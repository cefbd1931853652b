// Limit density M_phi(t) of zeta zeros under the explicit formula, profile
// sampling with CSV export, and the equidistribution measure for Hecke
// eigenvalue angles.  GRH semantics throughout in the number-field case.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gfa {

class PhiSystem;

struct DensityProfile {
  bool function_field = false;
  std::vector<double> t_values;
  std::vector<double> m_values;
  std::string phi_digest;
};

// Kernel h_q(t) = (sqrt(q) cos(t log q) - 1) / (q + 1 - 2 sqrt(q) cos(t log q)).
double zero_density_kernel(double q, double t);

// M_phi(t); function-field t is reduced mod 2pi into (-pi, pi].
double density_at(const PhiSystem& phi, double t);

// n evenly spaced samples of density_at on [t_min, t_max].
DensityProfile density_profile(const PhiSystem& phi, double t_min, double t_max, int n);

// M''_phi(0) by a 5-point centered stencil, step 1e-3.
double density_curvature_at_zero(const PhiSystem& phi);

// Density of the measure mu_p on [-2, 2]; Hecke eigenvalues of T_p/sqrt(p)
// equidistribute with respect to it.
double serre_measure_density(std::uint64_t p, double x);

// CSV with header "t,M", one row per sample, 17 significant digits, LF
// endings.
std::string profile_to_csv(const DensityProfile& profile);
DensityProfile profile_from_csv(const std::string& csv);

}  // namespace gfa
