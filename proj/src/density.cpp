#include "gfa/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "gfa/numerics.hpp"
#include "gfa/phi.hpp"

namespace gfa {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

double zero_density_kernel(double q, double t) {
  double sq = std::sqrt(q);
  double c = std::cos(t * std::log(q));
  return (sq * c - 1) / (q + 1 - 2 * sq * c);
}

double density_at(const PhiSystem& phi, double t) {
  if (phi.kind() == FieldKind::Function) {
    double r = (double)phi.r();
    t = std::remainder(t, 2 * kPi);
    if (t <= -kPi) t += 2 * kPi;  // represent the circle by (-pi, pi]
    double sum = 1;
    for (auto& [q, v] : phi.entries()) {
      int m = phi.ff_exponent(q);
      double rm2 = std::pow(r, m / 2.0);
      double c = std::cos(m * t);
      sum -= m * v * (rm2 * c - 1) / (std::pow(r, (double)m) + 1 - 2 * rm2 * c);
    }
    return sum;
  }
  double sum = 1 - phi.phi_real() / 2 * std::log(kPi) -
               phi.phi_complex() * std::log(2 * kPi);
  if (phi.phi_real() != 0)
    sum += phi.phi_real() / 2 * digamma(Complex(0.25, t / 2)).real();
  if (phi.phi_complex() != 0)
    sum += phi.phi_complex() * digamma(Complex(0.5, t)).real();
  for (auto& [q, v] : phi.entries())
    sum -= v * zero_density_kernel((double)q, t) * std::log((double)q);
  return sum;
}

DensityProfile density_profile(const PhiSystem& phi, double t_min, double t_max, int n) {
  if (!(t_min < t_max)) throw std::invalid_argument("density_profile: t_min < t_max required");
  if (n < 2) throw std::invalid_argument("density_profile: need n >= 2");
  // keep digamma inside its accuracy-certified range
  if (phi.kind() == FieldKind::Number && std::max(std::abs(t_min), std::abs(t_max)) > 50)
    throw std::invalid_argument("density_profile: number-field grids are confined to |t| <= 50");
  DensityProfile profile;
  profile.function_field = phi.kind() == FieldKind::Function;
  profile.phi_digest = format_phi(phi);
  // one-line digest
  for (auto& c : profile.phi_digest)
    if (c == '\n') c = ';';
  profile.t_values.reserve(n);
  profile.m_values.reserve(n);
  for (int i = 0; i < n; ++i) {
    double t = t_min + (t_max - t_min) * i / (n - 1);
    profile.t_values.push_back(t);
    profile.m_values.push_back(density_at(phi, t));
  }
  return profile;
}

double density_curvature_at_zero(const PhiSystem& phi) {
  const double h = 1e-3;
  double m0 = density_at(phi, 0);
  double m1 = density_at(phi, h), m2 = density_at(phi, 2 * h);
  double l1 = density_at(phi, -h), l2 = density_at(phi, -2 * h);
  return (-l2 + 16 * l1 - 30 * m0 + 16 * m1 - m2) / (12 * h * h);
}

double serre_measure_density(std::uint64_t p, double x) {
  if (!is_prime(p)) throw std::invalid_argument("serre_measure_density: p must be prime");
  if (std::abs(x) > 2) throw std::domain_error("serre_measure_density: |x| <= 2 required");
  double pd = (double)p;
  return (pd + 1) / kPi * pd * std::sqrt(1 - x * x / 4) / ((pd + 1) * (pd + 1) - pd * x * x);
}

std::string profile_to_csv(const DensityProfile& profile) {
  std::ostringstream out;
  out << "t,M\n";
  char buf[128];
  for (size_t i = 0; i < profile.t_values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", profile.t_values[i],
                  profile.m_values[i]);
    out << buf;
  }
  return out.str();
}

DensityProfile profile_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || (line != "t,M" && line != "t,M\r"))
    throw std::runtime_error("profile csv: bad header");
  DensityProfile profile;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("profile csv: bad row");
    profile.t_values.push_back(std::stod(line.substr(0, comma)));
    profile.m_values.push_back(std::stod(line.substr(comma + 1)));
  }
  return profile;
}

}  // namespace gfa
