#include "gfa/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "gfa/phi.hpp"

namespace gfa {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

void check_domain(Complex s) {
  if (s.real() < 0.5 + 1e-9)
    throw std::domain_error("zeta evaluation requires Re s > 1/2");
}

}  // namespace

Complex log_zeta(const PhiSystem& phi, Complex s, TruncationPolicy& policy) {
  if (policy.q_max < 2 || !(policy.term_tol > 0))
    throw std::invalid_argument("TruncationPolicy: q_max >= 2, term_tol > 0");
  check_domain(s);
  policy.tail_bound = 0;
  Complex sum = 0;
  bool stopped = false;
  // entries() iterates in increasing q, so once a cutoff fires everything
  // after it belongs to the tail estimate.
  for (auto& [q, v] : phi.entries()) {
    double x = (double)q;
    if (stopped || q > policy.q_max) {
      double mag = std::pow(x, -s.real());
      policy.tail_bound += v * mag / (1 - mag);
      continue;
    }
    // |w| = q^{-Re s} < 1, so 1 - w stays in the right half plane and the
    // principal log is the branch that is real positive for real s > 1.
    Complex w = std::exp(-s * std::log(x));
    Complex term = -v * std::log(1.0 - w);
    if (std::abs(term) < policy.term_tol) {
      stopped = true;
      double mag = std::pow(x, -s.real());
      policy.tail_bound += v * mag / (1 - mag);
      continue;
    }
    sum += term;
  }
  if (phi.kind() == FieldKind::Function) {
    double lr = std::log((double)phi.r());
    sum /= lr;
    policy.tail_bound /= lr;
  }
  return sum;
}

Complex log_zeta(const PhiSystem& phi, Complex s) {
  TruncationPolicy policy;
  return log_zeta(phi, s, policy);
}

Complex log_zeta_tilde(const PhiSystem& phi, Complex s, TruncationPolicy& policy) {
  Complex lz = log_zeta(phi, s, policy);
  if (phi.kind() == FieldKind::Function) return s + lz;
  double pr = phi.phi_real(), pc = phi.phi_complex();
  Complex arch = s - pr * std::log(2.0) - s / 2.0 * pr * std::log(kPi) -
                 s * pc * std::log(2 * kPi);
  if (pr != 0) arch += pr * log_gamma(s / 2.0);
  if (pc != 0) arch += pc * log_gamma(s);
  return arch + lz;
}

Complex log_zeta_tilde(const PhiSystem& phi, Complex s) {
  TruncationPolicy policy;
  return log_zeta_tilde(phi, s, policy);
}

Complex xi(const PhiSystem& phi, Complex s) {
  if (s.real() < 0.5 - 1e-12)
    throw std::domain_error("xi requires Re s >= 1/2");
  if (phi.kind() == FieldKind::Function) {
    double r = (double)phi.r();
    Complex sum = 0;
    for (auto& [q, v] : phi.entries()) {
      int m = phi.ff_exponent(q);
      sum += (double)m * v / (std::exp((double)m * s * std::log(r)) - 1.0);
    }
    return 1.0 - sum;
  }
  double pr = phi.phi_real(), pc = phi.phi_complex();
  Complex value = 1.0 - pr / 2 * std::log(kPi) - pc * std::log(2 * kPi);
  if (pr != 0) value += pr / 2 * digamma(s / 2.0);
  if (pc != 0) value += pc * digamma(s);
  for (auto& [q, v] : phi.entries()) {
    double lq = std::log((double)q);
    value -= v * lq / (std::exp(s * lq) - 1.0);
  }
  return value;
}

double bs_ratio(const PhiSystem& phi) {
  if (phi.kind() == FieldKind::Function) return 1 + kappa(phi);
  double sum = 1 - phi.phi_real() * std::log(2.0) - phi.phi_complex() * std::log(2 * kPi);
  for (auto& [q, v] : phi.entries()) sum += v * std::log((double)q / ((double)q - 1));
  return sum;
}

double kappa(const PhiSystem& phi) {
  double sum = 0;
  for (auto& [q, v] : phi.entries()) sum += v * std::log((double)q / ((double)q - 1));
  if (phi.kind() == FieldKind::Function) sum /= std::log((double)phi.r());
  return sum;
}

RegulatorBound regulator_lower_bound(const PhiSystem& phi) {
  if (phi.kind() != FieldKind::Number)
    throw std::invalid_argument("regulator bound is a number-field quantity");
  RegulatorBound b;
  b.value = (std::log(std::sqrt(kPi * std::exp(1.0))) + euler_gamma / 2) * phi.phi_real() +
            (std::log(2.0) + euler_gamma) * phi.phi_complex();
  b.zimmert = (std::log(2.0) + euler_gamma) * phi.phi_real() +
              2 * euler_gamma * phi.phi_complex();
  return b;
}

double class_number_upper_bound(const PhiSystem& phi) {
  if (phi.kind() != FieldKind::Number)
    throw std::invalid_argument("class number bound is a number-field quantity");
  double sum = 1 -
               (std::log(2 * std::sqrt(kPi)) + (euler_gamma + 1) / 2) * phi.phi_real() -
               (std::log(4 * kPi) + euler_gamma) * phi.phi_complex();
  for (auto& [q, v] : phi.entries()) sum += v * std::log((double)q / ((double)q - 1));
  return sum;
}

}  // namespace gfa
