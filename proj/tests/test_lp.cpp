#include <cmath>
#include <map>

#include "doctest.h"
#include "gfa/ffgrowth.hpp"
#include "gfa/inequality.hpp"
#include "gfa/lp.hpp"
#include "gfa/numerics.hpp"
#include "gfa/zeta.hpp"
#include "helpers.hpp"

using gfa::BoundMode;
using gfa::FieldClass;
using gfa::LPCoefficients;
using gfa::LPSolution;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// Feasibility of a solution against constraints (i)-(iv).
void check_witness(const LPCoefficients& coeffs, const LPSolution& sol) {
  CHECK(sol.x0 >= -1e-15);
  CHECK(sol.x1 >= -1e-15);
  if (!coeffs.x0_admissible) CHECK(sol.x0 == 0.0);
  if (!coeffs.x1_admissible) CHECK(sol.x1 == 0.0);
  std::map<std::uint64_t, double> per_prime;
  double mass = coeffs.a0 * sol.x0 + coeffs.a1 * sol.x1;
  double objective = -coeffs.b0 * sol.x0 - coeffs.b1 * sol.x1;
  for (auto& [q, x] : sol.xq) {
    CHECK(x >= -1e-15);
    std::uint64_t p;
    int m;
    REQUIRE(gfa::factor_prime_power(q, p, m));
    per_prime[p] += m * x;
    mass += coeffs.a(q) * x;
    objective += coeffs.b(q) * x;
  }
  for (auto& [p, s] : per_prime) CHECK(s <= sol.x0 + 2 * sol.x1 + 1e-10);
  CHECK(mass <= 1 + 1e-10);
  CHECK(objective == doctest::Approx(sol.value).epsilon(1e-10));
}

}  // namespace

TEST_CASE("coefficient families match the quoted constants") {
  LPCoefficients grh = gfa::coefficients(BoundMode::GrhBs, FieldClass::All);
  CHECK(grh.a0 == doctest::Approx(2.686).epsilon(1e-3));
  CHECK(grh.a1 == doctest::Approx(3.801).epsilon(1e-3));
  CHECK(grh.b0 == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(grh.b1 == doctest::Approx(std::log(2 * kPi)).epsilon(1e-12));
  CHECK(grh.a(2) == doctest::Approx(std::log(2.0) / (std::sqrt(2.0) - 1)).epsilon(1e-12));
  LPCoefficients unc = gfa::coefficients(BoundMode::UncBs, FieldClass::All);
  CHECK(unc.a0 == doctest::Approx(2.054).epsilon(1e-3));
  CHECK(unc.a1 == doctest::Approx(3.108).epsilon(1e-3));
  LPCoefficients kap = gfa::coefficients(BoundMode::GrhKappa, FieldClass::All);
  CHECK(kap.b0 == 0.0);
  CHECK(kap.b1 == 0.0);
  CHECK(kap.a0 == grh.a0);
  CHECK(kap.a1 == grh.a1);
}

TEST_CASE("coefficient condition audit") {
  for (BoundMode mode : {BoundMode::GrhBs, BoundMode::GrhKappa, BoundMode::UncBs,
                         BoundMode::UncKappa})
    for (FieldClass c : {FieldClass::All, FieldClass::TotallyReal, FieldClass::TotallyComplex})
      CHECK_NOTHROW(gfa::audit_coefficients(gfa::coefficients(mode, c)));
}

TEST_CASE("lp_min closed forms") {
  LPSolution all = gfa::lp_min(gfa::coefficients(BoundMode::GrhBs, FieldClass::All));
  CHECK(all.value == doctest::Approx(-0.4834).epsilon(2e-4));
  LPSolution real = gfa::lp_min(gfa::coefficients(BoundMode::GrhBs, FieldClass::TotallyReal));
  CHECK(real.value == doctest::Approx(-0.2580).epsilon(2e-4));
  for (BoundMode mode : {BoundMode::GrhKappa, BoundMode::UncKappa})
    CHECK(gfa::lp_min(gfa::coefficients(mode, FieldClass::All)).value == 0.0);
  check_witness(gfa::coefficients(BoundMode::GrhBs, FieldClass::All), all);
  // the archimedean variable saturates (iii)
  CHECK(all.x1 * gfa::coefficients(BoundMode::GrhBs, FieldClass::All).a1 ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lp_max boundary primes and values") {
  gfa::ScanOptions plain;
  auto grh_all = gfa::lp_max(gfa::coefficients(BoundMode::GrhBs, FieldClass::All), plain);
  CHECK(grh_all.p0 == 7);
  CHECK(grh_all.value == doctest::Approx(0.0938).epsilon(2e-4));
  check_witness(gfa::coefficients(BoundMode::GrhBs, FieldClass::All), grh_all);

  auto grh_complex =
      gfa::lp_max(gfa::coefficients(BoundMode::GrhBs, FieldClass::TotallyComplex), plain);
  CHECK(grh_complex.p0 == 13);
  CHECK(grh_complex.value == doctest::Approx(0.0764).epsilon(2e-4));
  check_witness(gfa::coefficients(BoundMode::GrhBs, FieldClass::TotallyComplex), grh_complex);

  auto unc_all = gfa::lp_max(gfa::coefficients(BoundMode::UncBs, FieldClass::All), plain);
  CHECK(unc_all.p0 == 23);
  CHECK(unc_all.value == doctest::Approx(0.1588).epsilon(2e-4));

  auto grh_kappa = gfa::lp_max(gfa::coefficients(BoundMode::GrhKappa, FieldClass::All), plain);
  CHECK(grh_kappa.value == doctest::Approx(0.2164).epsilon(1e-4));
  auto unc_kappa = gfa::lp_max(gfa::coefficients(BoundMode::UncKappa, FieldClass::All), plain);
  CHECK(unc_kappa.value == doctest::Approx(0.3151).epsilon(1e-4));
  CHECK(unc_kappa.p0 == 5);
}

TEST_CASE("witnesses are feasible for every production mode and class") {
  for (BoundMode mode : {BoundMode::GrhBs, BoundMode::GrhKappa, BoundMode::UncBs,
                         BoundMode::UncKappa}) {
    for (FieldClass cls :
         {FieldClass::All, FieldClass::TotallyReal, FieldClass::TotallyComplex}) {
      LPCoefficients coeffs = gfa::coefficients(mode, cls);
      check_witness(coeffs, gfa::lp_max(coeffs));
      check_witness(coeffs, gfa::lp_min(coeffs));
      LPSolution fixed = gfa::lp_max_fixed(coeffs, coeffs.x0_admissible ? 0.05 : 0.0,
                                           coeffs.x1_admissible ? 0.05 : 0.0);
      check_witness(coeffs, fixed);
    }
  }
}

TEST_CASE("scan cap error when no turnover is reachable") {
  gfa::ScanOptions tiny;
  tiny.prime_cap = 3;
  CHECK_THROWS_AS(gfa::lp_max(gfa::coefficients(BoundMode::GrhBs, FieldClass::All), tiny),
                  gfa::ScanCapError);
}

TEST_CASE("closed form matches the simplex oracle on truncated instances") {
  for (BoundMode mode : {BoundMode::GrhBs, BoundMode::GrhKappa, BoundMode::UncBs,
                         BoundMode::UncKappa}) {
    for (FieldClass cls :
         {FieldClass::All, FieldClass::TotallyReal, FieldClass::TotallyComplex}) {
      LPCoefficients coeffs = gfa::coefficients(mode, cls);
      coeffs.prime_limit = 50;
      double oracle_max = testutil::lp_simplex_extremum(coeffs, 50, true);
      double oracle_min = testutil::lp_simplex_extremum(coeffs, 50, false);
      LPSolution mx = gfa::lp_max(coeffs);
      LPSolution mn = gfa::lp_min(coeffs);
      CHECK_MESSAGE(mx.value == doctest::Approx(oracle_max).epsilon(1e-9),
                    "mode=", (int)mode, " class=", (int)cls);
      CHECK_MESSAGE(mn.value == doctest::Approx(oracle_min).epsilon(1e-9),
                    "mode=", (int)mode, " class=", (int)cls);
      check_witness(coeffs, mx);
    }
  }
}

TEST_CASE("lp_max_fixed reproduces the degree-20 instance") {
  // fixed x1 = 10/g, norms below 23 excluded, kappa-type objective
  double g = 45.25784097;
  LPCoefficients coeffs = gfa::coefficients(BoundMode::GrhKappa, FieldClass::All);
  LPSolution sol = gfa::lp_max_fixed(coeffs, 0, 10 / g, {2, 3, 5, 7, 11, 13, 17, 19});
  REQUIRE(!sol.xq.empty());
  CHECK(sol.xq[0].first == 23);
  CHECK(sol.xq[0].second == doctest::Approx(0.1938).epsilon(2e-4));
  CHECK(sol.value == doctest::Approx(0.00861).epsilon(2e-3));
  CHECK(sol.boundary_q == 23);
}

TEST_CASE("lp_max_fixed degenerate and error cases") {
  LPCoefficients coeffs = gfa::coefficients(BoundMode::GrhBs, FieldClass::All);
  LPSolution zero = gfa::lp_max_fixed(coeffs, 0, 0);
  CHECK(zero.value == 0.0);
  CHECK(zero.xq.empty());
  CHECK_THROWS_AS(gfa::lp_max_fixed(coeffs, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("greedy_fill reproduces the real quartic instance") {
  // x0 = 4/g with one place of norm 2, two of norm 7, anything from 11 on
  double g = 13.92933912;
  LPCoefficients coeffs = gfa::coefficients(BoundMode::GrhKappa, FieldClass::All);
  double base = gfa::coefficients(BoundMode::GrhBs, FieldClass::All).a0 * 4 / g;
  LPSolution sol =
      gfa::greedy_fill(coeffs, base, {{2, 1 / g}, {7, 2 / g}}, 11, 4 / g);
  CHECK(sol.value == doctest::Approx(0.0639).epsilon(2e-4));
  CHECK(sol.boundary_q == 7);
  // x_2 hit its cap, x_7 the budget
  REQUIRE(sol.xq.size() == 2);
  CHECK(sol.xq[0].second == doctest::Approx(1 / g).epsilon(1e-12));
  CHECK(sol.alpha > 0);
  CHECK(sol.alpha <= 1);
}

TEST_CASE("greedy_fill against the simplex oracle with caps") {
  // random-ish capped instance, primes <= 50
  LPCoefficients coeffs = gfa::coefficients(BoundMode::GrhKappa, FieldClass::All);
  coeffs.prime_limit = 50;
  double base = 0.3;
  std::vector<gfa::GreedyItem> items;
  std::vector<double> caps;
  auto primes = gfa::primes_up_to(50);
  for (size_t i = 0; i < primes.size(); ++i) {
    double cap = 0.01 + 0.013 * (double)((i * 7) % 5);
    items.push_back({primes[i], cap});
    caps.push_back(cap);
  }
  LPSolution sol = gfa::greedy_fill(coeffs, base, items);
  // oracle: maximize sum b x subject to sum a x <= 1 - base, 0 <= x <= cap
  int n = (int)primes.size();
  std::vector<std::vector<double>> A;
  std::vector<double> b, c(n);
  std::vector<double> row(n);
  for (int i = 0; i < n; ++i) row[i] = coeffs.a(primes[i]);
  A.push_back(row);
  b.push_back(1 - base);
  for (int i = 0; i < n; ++i) {
    std::vector<double> cap_row(n, 0.0);
    cap_row[i] = 1;
    A.push_back(cap_row);
    b.push_back(caps[i]);
    c[i] = coeffs.b(primes[i]);
  }
  std::vector<double> x;
  double oracle = testutil::Simplex(A, b, c).solve(x);
  CHECK(sol.value == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("kappa never exceeds the fixed-archimedean maximum") {
  // The linear comparisons quoted for kappa in terms of phi_R, phi_C are not
  // re-derived; what is literally true is kappa(phi) <= max of the kappa
  // objective with the archimedean variables pinned to phi's.
  std::mt19937_64 rng(909);
  LPCoefficients coeffs = gfa::coefficients(BoundMode::GrhKappa, FieldClass::All);
  int checked = 0;
  while (checked < 100) {
    gfa::PhiSystem phi = testutil::random_number_field_phi(rng);
    if (gfa::inequality_lhs(phi, gfa::InequalityMode::Grh) > 1) continue;
    ++checked;
    LPSolution sol = gfa::lp_max_fixed(coeffs, phi.phi_real(), phi.phi_complex());
    CHECK(gfa::kappa(phi) <= sol.value + 1e-10);
  }
}

TEST_CASE("function-field analogue attains the global upper bound at m = 1") {
  for (std::uint64_t r : {2, 3, 4, 9, 25}) {
    double rd = (double)r;
    double lr = std::log(rd);
    // single-constraint LP: optimum is the best b/a ratio
    double best = 0;
    int best_m = 0;
    for (int m = 1; m <= 12; ++m) {
      double a = m / (std::pow(rd, m / 2.0) - 1);
      double b = std::log(std::pow(rd, m) / (std::pow(rd, m) - 1)) / lr;
      if (b / a > best) {
        best = b / a;
        best_m = m;
      }
    }
    CHECK(best_m == 1);
    auto [lo, hi] = gfa::ff_global_bounds(r);
    CHECK(lo == 1.0);
    CHECK(1 + best == doctest::Approx(hi).epsilon(1e-12));
    // the maximising phi is phi_r = sqrt(r) - 1
    CHECK((std::sqrt(rd) - 1) * std::log(rd / (rd - 1)) / lr ==
          doctest::Approx(hi - 1).epsilon(1e-12));
  }
}
