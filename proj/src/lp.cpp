#include "gfa/lp.hpp"

#include <algorithm>
#include <cmath>

#include "gfa/inequality.hpp"
#include "gfa/numerics.hpp"

namespace gfa {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

bool grh(BoundMode mode) { return mode == BoundMode::GrhBs || mode == BoundMode::GrhKappa; }
bool kappa_mode(BoundMode mode) {
  return mode == BoundMode::GrhKappa || mode == BoundMode::UncKappa;
}

}  // namespace

double LPCoefficients::a(std::uint64_t q) const {
  if (prime_limit && q > *prime_limit) return 0;
  return place_coefficient(q, grh(mode) ? InequalityMode::Grh
                                        : InequalityMode::Unconditional1);
}

double LPCoefficients::b(std::uint64_t q) const {
  if (prime_limit && q > *prime_limit) return 0;
  return std::log((double)q / ((double)q - 1));
}

LPCoefficients coefficients(BoundMode mode, FieldClass field_class) {
  LPCoefficients c;
  c.mode = mode;
  c.field_class = field_class;
  InequalityMode ineq = grh(mode) ? InequalityMode::Grh : InequalityMode::Unconditional1;
  c.a0 = arch_real_coefficient(ineq);
  c.a1 = arch_complex_coefficient(ineq);
  if (kappa_mode(mode)) {
    c.b0 = c.b1 = 0;
  } else {
    c.b0 = std::log(2.0);
    c.b1 = std::log(2 * kPi);
  }
  if (field_class == FieldClass::TotallyReal) {
    c.x1_admissible = false;
    c.a1 = c.b1 = 0;
  } else if (field_class == FieldClass::TotallyComplex) {
    c.x0_admissible = false;
    c.a0 = c.b0 = 0;
  }
  return c;
}

void audit_coefficients(const LPCoefficients& coeffs, std::uint64_t q_limit) {
  auto fail = [](const char* msg) { throw std::logic_error(msg); };
  // non-negativity and the a=0 => b=0 convention
  if (coeffs.a0 < 0 || coeffs.a1 < 0 || coeffs.b0 < 0 || coeffs.b1 < 0)
    fail("lp coefficients must be non-negative");
  if ((coeffs.a0 == 0 && coeffs.b0 != 0) || (coeffs.a1 == 0 && coeffs.b1 != 0))
    fail("b must vanish where a does");
  // (1) m/n >= a_{p^m}/a_{p^n}
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    for (int m = 1; m <= 6; ++m) {
      for (int n = 1; n <= m; ++n) {
        std::uint64_t qm = 1, qn = 1;
        for (int i = 0; i < m; ++i) qm *= p;
        for (int i = 0; i < n; ++i) qn *= p;
        if (qm > q_limit) continue;
        if ((double)m / n + 1e-12 < coeffs.a(qm) / coeffs.a(qn))
          fail("condition (1): power monotonicity fails");
      }
    }
  }
  // (2) b_q/a_q non-increasing over prime powers
  double prev = 1e300;
  for (const auto& pp : prime_powers(q_limit)) {
    if (coeffs.prime_limit && pp.q > *coeffs.prime_limit) break;
    double ratio = coeffs.b(pp.q) / coeffs.a(pp.q);
    if (ratio > prev + 1e-12) fail("condition (2): b/a not non-increasing");
    prev = ratio;
  }
  // (3) archimedean ordering
  if (coeffs.a0 != 0 && coeffs.a1 != 0) {
    if (coeffs.a1 < coeffs.a0 || coeffs.b1 < coeffs.b0) fail("condition (3): ordering fails");
    if (coeffs.b0 / coeffs.a0 > coeffs.b1 / coeffs.a1 + 1e-12)
      fail("condition (3): ratio ordering fails");
  }
  // (4) divergence of the partial sums, checked past a fixed threshold;
  // sum b_p grows like log log so the bar is low
  double sa = 0, sb = 0;
  for (std::uint64_t p : primes_up_to(q_limit)) {
    sa += coeffs.a(p);
    sb += coeffs.b(p);
  }
  if (!coeffs.prime_limit && (sa < 3 || sb < 2)) fail("condition (4): sums look bounded");
}

LPSolution lp_min(const LPCoefficients& coeffs) {
  LPSolution s;
  if (coeffs.x1_admissible && coeffs.a1 != 0) {
    s.value = -coeffs.b1 / coeffs.a1;
    s.x1 = 1 / coeffs.a1;
  } else if (coeffs.x0_admissible && coeffs.a0 != 0) {
    s.value = -coeffs.b0 / coeffs.a0;
    s.x0 = 1 / coeffs.a0;
  } else {
    throw std::invalid_argument("lp_min: no admissible archimedean variable");
  }
  return s;
}

namespace {

struct RouteResult {
  double value = -1e300;
  std::uint64_t p0 = 0;
  bool use_complex = false;
};

// Prop-8.3 boundary scan for one archimedean choice (a, b).  C_{p'} is
// tracked across increasing primes; it must increase strictly while the
// admissibility test 0 <= C <= b_p/a_p holds, and the scan ends at the first
// failure.  With prime_power_constraint_sum the a-side accumulates every
// prime power as it is passed while b and the admissibility test stay on
// primes; the strictness assertion is skipped there (power columns between
// consecutive primes push C down before it recovers).
RouteResult scan_route(const LPCoefficients& coeffs, double a, double b,
                       bool use_complex, const ScanOptions& options) {
  RouteResult best;
  best.use_complex = use_complex;
  double sa = 0, sb = 0, last = -1e300;
  bool found = false;
  std::uint64_t cap = options.prime_cap;
  if (coeffs.prime_limit) cap = std::min(cap, *coeffs.prime_limit);
  std::vector<PrimePower> domain;
  if (options.prime_power_constraint_sum) {
    domain = prime_powers(cap);
  } else {
    for (std::uint64_t p : primes_up_to(cap)) domain.push_back({p, p, 1});
  }
  for (const auto& pp : domain) {
    sa += coeffs.a(pp.q);
    if (pp.m != 1) continue;
    std::uint64_t p = pp.q;
    sb += coeffs.b(p);
    double C = (sb - b) / (sa + a);
    if (C < 0) continue;
    double ratio = coeffs.b(p) / coeffs.a(p);
    if (C > ratio * (1 + options.turnover_tolerance)) {
      if (!found && !coeffs.prime_limit)
        throw ScanCapError("lp_max: no admissible boundary prime");
      return best;
    }
    if (!options.prime_power_constraint_sum && found && C <= last)
      throw ScanCapError("lp_max: scan lost strict monotonicity before turnover");
    found = true;
    last = C;
    best.value = C;
    best.p0 = p;
  }
  if (coeffs.prime_limit && found) return best;  // truncated family: boundary at the end
  throw ScanCapError("lp_max: no turnover below the prime cap");
}

}  // namespace

LPSolution lp_max(const LPCoefficients& coeffs, const ScanOptions& options) {
  bool route0 = coeffs.x0_admissible && coeffs.a0 != 0;
  bool route1 = coeffs.x1_admissible && coeffs.a1 != 0;
  if (!route0 && !route1)
    throw std::invalid_argument("lp_max: no admissible archimedean variable");
  RouteResult best;
  bool have = false;
  if (route0) {
    best = scan_route(coeffs, coeffs.a0, coeffs.b0, false, options);
    have = true;
  }
  if (route1) {
    RouteResult r = scan_route(coeffs, coeffs.a1 / 2, coeffs.b1 / 2, true, options);
    if (!have || r.value > best.value) best = r;
  }
  LPSolution s;
  s.value = best.value;
  s.p0 = best.p0;
  s.boundary_q = best.p0;
  s.alpha = 1;
  // The published power-inclusive value is not an LP vertex value, so no
  // witness can certify it; only the plain prime scan returns one.
  if (options.prime_power_constraint_sum) return s;
  // witness: x_p = x0 + 2 x1 for p <= p0, archimedean variable saturating (iii)
  double sum_a = 0;
  for (std::uint64_t p : primes_up_to(best.p0)) sum_a += coeffs.a(p);
  double unit;
  if (best.use_complex) {
    s.x1 = 1 / (2 * sum_a + coeffs.a1);
    unit = 2 * s.x1;
  } else {
    s.x0 = 1 / (sum_a + coeffs.a0);
    unit = s.x0;
  }
  for (std::uint64_t p : primes_up_to(best.p0)) s.xq.emplace_back(p, unit);
  return s;
}

LPSolution lp_max_fixed(const LPCoefficients& coeffs, double x0, double x1,
                        const std::set<std::uint64_t>& excluded) {
  if (x0 < 0 || x1 < 0) throw std::invalid_argument("lp_max_fixed: negative variables");
  if (!coeffs.x0_admissible && x0 != 0)
    throw std::invalid_argument("lp_max_fixed: x0 excluded by field class");
  if (!coeffs.x1_admissible && x1 != 0)
    throw std::invalid_argument("lp_max_fixed: x1 excluded by field class");
  double base = coeffs.a0 * x0 + coeffs.a1 * x1;
  if (base > 1 + 1e-15) throw std::invalid_argument("lp_max_fixed: infeasible archimedean part");
  double cap = x0 + 2 * x1;
  std::vector<GreedyItem> items;
  std::uint64_t scan_to = coeffs.prime_limit.value_or(100000);
  for (std::uint64_t p : primes_up_to(scan_to))
    if (!excluded.count(p)) items.push_back({p, cap});
  LPSolution s = greedy_fill(coeffs, base, std::move(items));
  // a fill that exhausts the scan without saturating (iii) would understate
  // the maximum
  if (cap > 0 && !coeffs.prime_limit && s.alpha == 1 && s.boundary_q != 0) {
    double used = base;
    for (auto& [q, x] : s.xq) used += coeffs.a(q) * x;
    if (used < 1 - 1e-12) throw ScanCapError("lp_max_fixed: fill ran past the prime cap");
  }
  s.x0 = x0;
  s.x1 = x1;
  s.value -= coeffs.b0 * x0 + coeffs.b1 * x1;
  return s;
}

LPSolution greedy_fill(const LPCoefficients& coeffs, double base_mass,
                       std::vector<GreedyItem> items, std::uint64_t free_from,
                       double free_cap, std::uint64_t free_limit) {
  if (free_from) {
    for (std::uint64_t p : primes_up_to(free_limit))
      if (p >= free_from) items.push_back({p, free_cap});
  }
  std::sort(items.begin(), items.end(),
            [](const GreedyItem& l, const GreedyItem& r) { return l.q < r.q; });
  LPSolution s;
  double budget = 1 - base_mass;
  // Item caps already encode constraint (ii): callers cap each column by its
  // place count or by x0 + 2 x1.
  for (const auto& item : items) {
    if (budget <= 1e-15) break;
    if (item.cap <= 0) continue;
    double a = coeffs.a(item.q);
    if (a <= 0) continue;  // truncated coefficient family
    double x = std::min(item.cap, budget / a);
    s.value += x * coeffs.b(item.q);
    budget -= x * a;
    s.xq.emplace_back(item.q, x);
    s.boundary_q = item.q;
    s.alpha = x / item.cap;
    if (x < item.cap) break;  // constraint (iii) bound the fill here
  }
  return s;
}

}  // namespace gfa
