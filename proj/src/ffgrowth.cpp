#include "gfa/ffgrowth.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gfa/numerics.hpp"
#include "gfa/phi.hpp"
#include "gfa/zeta.hpp"

namespace gfa {

namespace {

void require_ff(const PhiSystem& phi) {
  if (phi.kind() != FieldKind::Function)
    throw std::invalid_argument("function-field phi required");
}

std::vector<std::pair<int, double>> exponents(const PhiSystem& phi) {
  std::vector<std::pair<int, double>> out;
  for (auto& [q, v] : phi.entries()) out.emplace_back(phi.ff_exponent(q), v);
  return out;
}

}  // namespace

double mu_zero(const PhiSystem& phi) {
  require_ff(phi);
  double sum = 0;
  for (auto& [m, v] : exponents(phi)) sum += m * v / (std::pow((double)phi.r(), m) - 1);
  return sum;
}

double lambda_of_mu(const PhiSystem& phi, double mu) {
  require_ff(phi);
  if (!(mu > 0) || !std::isfinite(mu))
    throw std::invalid_argument("lambda_of_mu: mu must be positive and finite");
  double r = (double)phi.r();
  if (mu >= mu_zero(phi)) return r;
  auto exps = exponents(phi);
  auto f = [&](double lam) {
    double sum = 0;
    for (auto& [m, v] : exps) sum += m * v / (std::pow(lam, m) - 1);
    return sum - mu;
  };
  // f decreases in Lambda; f(r) = mu_0 - mu > 0, so bracket upward.
  double lo = r, hi = 2 * r;
  while (f(hi) > 0) {
    lo = hi;
    hi *= 2;
    if (hi > 1e300) throw std::runtime_error("lambda_of_mu: bracket failed");
  }
  for (int i = 0; i < 300 && hi - lo > 1e-15 * hi; ++i) {
    double mid = (lo + hi) / 2;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double divisor_growth(const PhiSystem& phi, double mu) {
  require_ff(phi);
  double r = (double)phi.r();
  double lam = lambda_of_mu(phi, mu);
  double lr = std::log(r);
  double sum = mu * std::log(lam) / lr;
  for (auto& [m, v] : exponents(phi)) {
    double lm = std::pow(lam, m);
    sum += v * std::log(lm / (lm - 1)) / lr;
  }
  return sum;
}

double mu_one(const PhiSystem& phi) {
  require_ff(phi);
  double lr = std::log((double)phi.r());
  double rhs = -2 * log_zeta(phi, 1.0).real();  // log_zeta is already base r
  auto f = [&](double mu) {
    return mu / 2 + mu * std::log(mu / 2) / lr + (2 - mu) * std::log(1 - mu / 2) / lr - rhs;
  };
  // f(0+) = 0-, dips negative, climbs to 1 at mu = 2-.  The largest root is
  // the ascending crossing; bracket it by scanning down from 2.
  double hi = 2 - 1e-12;
  if (f(hi) < 0) throw std::runtime_error("mu_one: no sign change in (0,2)");
  double lo = hi;
  bool bracketed = false;
  for (int i = 1; i <= 4000; ++i) {
    double x = 2 - 2 * i / 4001.0;
    if (f(x) < 0) {
      lo = x;
      bracketed = true;
      break;
    }
    hi = x;
  }
  if (!bracketed) throw std::runtime_error("mu_one: no sign change in (0,2)");
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

std::pair<double, double> ff_global_bounds(std::uint64_t r) {
  std::uint64_t p;
  int m;
  if (r < 2 || !factor_prime_power(r, p, m))
    throw std::invalid_argument("ff_global_bounds: r must be a prime power >= 2");
  double rd = (double)r;
  double upper = 1 + (std::sqrt(rd) - 1) * std::log(rd / (rd - 1)) / std::log(rd);
  return {1.0, upper};
}

}  // namespace gfa
