#include "gfa/phi.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gfa/inequality.hpp"
#include "gfa/numerics.hpp"

namespace gfa {

namespace {

// Slack for the Lemma-2.7-style comparisons: examples hit the bound with
// equality, so exact float comparison would flag rounding noise.
constexpr double kSlack = 1e-12;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

PhiSystem PhiSystem::number_field(double phi_real, double phi_complex,
                                  std::map<std::uint64_t, double> entries) {
  require(phi_real >= 0 && phi_complex >= 0 && std::isfinite(phi_real) &&
              std::isfinite(phi_complex),
          "PhiSystem: archimedean entries must be finite and non-negative");
  PhiSystem phi;
  phi.kind_ = FieldKind::Number;
  phi.phi_real_ = phi_real;
  phi.phi_complex_ = phi_complex;
  for (auto& [q, v] : entries) {
    require(std::isfinite(v) && v >= 0, "PhiSystem: entries must be finite and non-negative");
    std::uint64_t p;
    int m;
    require(factor_prime_power(q, p, m), "PhiSystem: keys must be prime powers");
    if (v != 0) phi.entries_[q] = v;
  }
  return phi;
}

PhiSystem PhiSystem::function_field(std::uint64_t r,
                                    std::map<std::uint64_t, double> entries) {
  std::uint64_t p;
  int m;
  require(r >= 2 && factor_prime_power(r, p, m), "PhiSystem: r must be a prime power >= 2");
  PhiSystem phi;
  phi.kind_ = FieldKind::Function;
  phi.r_ = r;
  for (auto& [q, v] : entries) {
    require(std::isfinite(v) && v >= 0, "PhiSystem: entries must be finite and non-negative");
    // q must be r^k, k >= 1
    std::uint64_t u = r;
    while (u < q && u <= q / r) u *= r;
    require(u == q, "PhiSystem: function-field keys must be powers of r");
    if (v != 0) phi.entries_[q] = v;
  }
  return phi;
}

double PhiSystem::at(std::uint64_t q) const {
  auto it = entries_.find(q);
  return it == entries_.end() ? 0.0 : it->second;
}

bool PhiSystem::zero() const {
  if (phi_real_ != 0 || phi_complex_ != 0) return false;
  for (auto& [q, v] : entries_)
    if (v != 0) return false;
  return true;
}

int PhiSystem::ff_exponent(std::uint64_t q) const {
  if (kind_ != FieldKind::Function)
    throw std::invalid_argument("ff_exponent: number-field vector");
  int m = 0;
  std::uint64_t u = 1;
  while (u < q) {
    u *= r_;
    ++m;
  }
  return m;
}

void PhiSystem::add(std::uint64_t q, double v) {
  if (kind_ == FieldKind::Number) {
    std::uint64_t p;
    int m;
    require(factor_prime_power(q, p, m), "PhiSystem: keys must be prime powers");
  }
  require(std::isfinite(v) && entries_[q] + v >= 0, "PhiSystem: entries must stay non-negative");
  entries_[q] += v;
  if (entries_[q] == 0) entries_.erase(q);
}

ValidationReport validate(const PhiSystem& phi, ValidationMode mode) {
  ValidationReport report;
  auto flag = [&](const std::string& id, double lhs, double rhs, const std::string& msg) {
    report.violations.push_back({id, lhs, rhs, msg});
  };

  if (phi.kind() == FieldKind::Number) {
    // per-prime degree bound: sum_m m*phi_{p^m} <= phi_R + 2 phi_C
    std::map<std::uint64_t, double> per_prime;
    for (auto& [q, v] : phi.entries()) {
      std::uint64_t p;
      int m;
      factor_prime_power(q, p, m);
      per_prime[p] += m * v;
    }
    double bound = phi.phi_real() + 2 * phi.phi_complex();
    for (auto& [p, s] : per_prime) {
      if (s > bound + kSlack * std::max(1.0, bound)) {
        flag("degree-bound p=" + std::to_string(p), s, bound,
             "sum of m*phi_{p^m} exceeds phi_R + 2*phi_C");
      }
    }
  }

  if (mode == ValidationMode::Grh) {
    if (phi.kind() == FieldKind::Number) {
      double lhs = inequality_lhs(phi, InequalityMode::Grh);
      if (lhs > 1 + kSlack) flag("grh-basic", lhs, 1.0, "GRH basic inequality violated");
    } else {
      double lhs = inequality_lhs(phi, InequalityMode::FunctionField);
      if (lhs > 1 + kSlack) flag("ff-basic", lhs, 1.0, "function-field basic inequality violated");
      // Drinfeld-Vladut specialisation
      double dv = phi.at(phi.r());
      double cap = std::sqrt((double)phi.r()) - 1;
      if (dv > cap + kSlack) flag("drinfeld-vladut", dv, cap, "phi_r exceeds sqrt(r)-1");
    }
  } else if (mode == ValidationMode::Unconditional) {
    if (phi.kind() == FieldKind::Number) {
      double lhs = inequality_lhs(phi, InequalityMode::Unconditional2);
      if (lhs > 1 + kSlack) flag("unconditional-basic", lhs, 1.0, "Stark-type inequality violated");
    } else {
      double lhs = inequality_lhs(phi, InequalityMode::FunctionField);
      if (lhs > 1 + kSlack) flag("ff-basic", lhs, 1.0, "function-field basic inequality violated");
    }
  }
  return report;
}

PhiSystem parse_phi(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_kind = false;
  FieldKind kind = FieldKind::Number;
  std::uint64_t r = 0;
  double phi_real = 0, phi_complex = 0;
  bool saw_real = false, saw_complex = false;
  std::map<std::uint64_t, double> entries;

  auto fail = [](const std::string& msg) -> void { throw std::runtime_error("phi file: " + msg); };

  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    auto colon = line.find(':');
    if (colon == std::string::npos) fail("missing ':' in line '" + line + "'");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    auto vb = value.find_first_not_of(" \t");
    value = vb == std::string::npos ? "" : value.substr(vb);

    if (key == "kind") {
      if (have_kind) fail("duplicate kind line");
      have_kind = true;
      if (value == "number") {
        kind = FieldKind::Number;
      } else if (value.rfind("function", 0) == 0) {
        kind = FieldKind::Function;
        auto eq = value.find("r=");
        if (eq == std::string::npos) fail("function kind needs r=<q>");
        r = std::stoull(value.substr(eq + 2));
      } else {
        fail("unknown kind '" + value + "'");
      }
    } else if (key == "phi_R") {
      if (saw_real) fail("duplicate phi_R");
      saw_real = true;
      phi_real = std::stod(value);
    } else if (key == "phi_C") {
      if (saw_complex) fail("duplicate phi_C");
      saw_complex = true;
      phi_complex = std::stod(value);
    } else if (key.rfind("phi ", 0) == 0) {
      std::uint64_t q = std::stoull(key.substr(4));
      if (entries.count(q)) fail("duplicate entry for q=" + std::to_string(q));
      entries[q] = std::stod(value);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_kind) fail("missing kind line");
  if (kind == FieldKind::Function && (saw_real || saw_complex))
    fail("phi_R/phi_C not allowed for function-field vectors");
  try {
    return kind == FieldKind::Number
               ? PhiSystem::number_field(phi_real, phi_complex, std::move(entries))
               : PhiSystem::function_field(r, std::move(entries));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return {};  // unreachable
}

PhiSystem load_phi_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open phi file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_phi(buf.str());
}

std::string format_phi(const PhiSystem& phi) {
  char buf[64];
  std::ostringstream out;
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  if (phi.kind() == FieldKind::Number) {
    out << "kind: number\n";
    if (phi.phi_real() != 0) out << "phi_R: " << num(phi.phi_real()) << "\n";
    if (phi.phi_complex() != 0) out << "phi_C: " << num(phi.phi_complex()) << "\n";
  } else {
    out << "kind: function r=" << phi.r() << "\n";
  }
  for (auto& [q, v] : phi.entries()) out << "phi " << q << ": " << num(v) << "\n";
  return out.str();
}

}  // namespace gfa
