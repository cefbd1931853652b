#include "gfa/inequality.hpp"

#include <cmath>
#include <stdexcept>

#include "gfa/numerics.hpp"
#include "gfa/phi.hpp"

namespace gfa {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

double arch_real_coefficient(InequalityMode mode) {
  switch (mode) {
    case InequalityMode::Grh:
      return std::log(2 * std::sqrt(2 * kPi)) + kPi / 4 + euler_gamma / 2;
    case InequalityMode::Unconditional1:
      return euler_gamma / 2 + 0.5 + std::log(2 * std::sqrt(kPi));
    case InequalityMode::Unconditional2:
      return euler_gamma / 2 + std::log(2 * std::sqrt(kPi));
    case InequalityMode::FunctionField:
      break;
  }
  throw std::invalid_argument("archimedean coefficient undefined for function fields");
}

double arch_complex_coefficient(InequalityMode mode) {
  switch (mode) {
    case InequalityMode::Grh:
      return std::log(8 * kPi) + euler_gamma;
    case InequalityMode::Unconditional1:
      return euler_gamma + std::log(4 * kPi);
    case InequalityMode::Unconditional2:
      return euler_gamma + std::log(2 * kPi);
    case InequalityMode::FunctionField:
      break;
  }
  throw std::invalid_argument("archimedean coefficient undefined for function fields");
}

double place_coefficient(std::uint64_t q, InequalityMode mode) {
  double lq = std::log((double)q);
  switch (mode) {
    case InequalityMode::Grh:
      return lq / (std::sqrt((double)q) - 1);
    case InequalityMode::Unconditional1: {
      // 2 log q * sum_m 1/(q^m+1); truncated at term < 1e-15 with the
      // geometric tail added.
      double sum = 0;
      double qm = (double)q;
      while (true) {
        double term = 1.0 / (qm + 1);
        sum += term;
        if (term < 1e-15) {
          sum += 1.0 / (qm * ((double)q - 1));  // tail bound sum_{k>m} q^-k
          break;
        }
        qm *= (double)q;
      }
      return 2 * lq * sum;
    }
    case InequalityMode::Unconditional2:
      return lq / ((double)q - 1);
    case InequalityMode::FunctionField:
      break;
  }
  throw std::invalid_argument("place coefficient: mode not defined on prime powers");
}

double inequality_lhs(const PhiSystem& phi, InequalityMode mode) {
  if (mode == InequalityMode::FunctionField) {
    if (phi.kind() != FieldKind::Function)
      throw std::invalid_argument("FunctionField mode needs a function-field phi");
    double r = (double)phi.r();
    double sum = 0;
    for (auto& [q, v] : phi.entries()) {
      int m = phi.ff_exponent(q);
      sum += m * v / (std::pow(r, m / 2.0) - 1);
    }
    return sum;
  }
  if (phi.kind() != FieldKind::Number)
    throw std::invalid_argument("number-field inequality mode needs a number-field phi");
  double sum = phi.phi_real() * arch_real_coefficient(mode) +
               phi.phi_complex() * arch_complex_coefficient(mode);
  for (auto& [q, v] : phi.entries()) sum += v * place_coefficient(q, mode);
  return sum;
}

double deficiency(const PhiSystem& phi) {
  return phi.kind() == FieldKind::Number
             ? 1 - inequality_lhs(phi, InequalityMode::Grh)
             : 1 - inequality_lhs(phi, InequalityMode::FunctionField);
}

}  // namespace gfa
