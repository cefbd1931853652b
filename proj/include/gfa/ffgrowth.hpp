// Function-field asymptotics: divisor growth, the mu_1 threshold for the
// D_m/h stabilisation, and the global class-number bounds over F_r.
// All logarithms base r.
#pragma once

#include <cstdint>
#include <utility>

namespace gfa {

class PhiSystem;

// mu_0 = sum m phi_{r^m} / (r^m - 1) = 1 - xi_phi(1).
double mu_zero(const PhiSystem& phi);

// Lambda(mu): r for mu >= mu_0, otherwise the unique Lambda > r with
// sum m phi_{r^m} / (Lambda^m - 1) = mu (bisection, 1e-12 residual).
double lambda_of_mu(const PhiSystem& phi, double mu);

// lim D_[mu g]/g = mu log_r Lambda + sum phi_{r^m} log_r(Lambda^m/(Lambda^m-1)).
double divisor_growth(const PhiSystem& phi, double mu);

// Largest root in (0, 2) of
//   mu/2 + mu log_r(mu/2) + (2 - mu) log_r(1 - mu/2) = -2 log_r zeta_phi(1).
double mu_one(const PhiSystem& phi);

// (1, 1 + (sqrt r - 1) log_r(r/(r-1))): bounds on lim log_r h / g over F_r.
std::pair<double, double> ff_global_bounds(std::uint64_t r);

}  // namespace gfa
