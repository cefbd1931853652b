// Test-only helpers: independent oracles (series digamma, dense simplex,
// quadrature) and random phi generators.  Nothing here may call the library
// path it is used to check.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "gfa/lp.hpp"
#include "gfa/numerics.hpp"
#include "gfa/phi.hpp"

namespace testutil {

// --- digamma by direct series summation -----------------------------------
// psi(z) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+z)), summed to N with the
// exact integral of the tail plus Euler-Maclaurin corrections; good to about
// 1e-14 for moderate |z|.
inline std::complex<double> digamma_series(std::complex<double> z, int N = 200000) {
  const double gamma = 0.577215664901532860606512090082;
  std::complex<double> sum = -gamma;
  for (int n = 0; n < N; ++n) sum += 1.0 / (n + 1.0) - 1.0 / (z + (double)n);
  // tail: integral is exactly log((N+z)/(N+1)); then g(N)/2 - g'(N)/12
  std::complex<double> nz = z + (double)N;
  sum += std::log(nz / (N + 1.0));
  sum += 0.5 * (1.0 / (N + 1.0) - 1.0 / nz);
  sum -= (1.0 / ((N + 1.0) * (N + 1.0)) - 1.0 / (nz * nz)) / 12.0;
  return sum;
}

// --- log gamma via a deep shift and a short Stirling tail ------------------
// Independent of the library path: shifts far enough that three series terms
// reach 1e-14.
inline std::complex<double> log_gamma_reference(std::complex<double> z) {
  const double pi = 3.14159265358979323846264338328;
  std::complex<double> acc = 0.0;
  while (z.real() < 60.0) {
    acc -= std::log(z);
    z += 1.0;
  }
  std::complex<double> inv = 1.0 / z;
  std::complex<double> inv2 = inv * inv;
  std::complex<double> series = inv / 12.0 - inv * inv2 / 360.0 + inv * inv2 * inv2 / 1260.0;
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + series + acc;
}

// --- dense simplex oracle ---------------------------------------------------
// max c'x subject to Ax <= b, x >= 0.  Bland-free two-phase simplex on the
// tableau; adequate for the few dozen columns the truncated LP instances
// need.  Returns the optimal value; infeasible/unbounded cases do not arise
// in the instances under test.
class Simplex {
 public:
  Simplex(std::vector<std::vector<double>> A, std::vector<double> b, std::vector<double> c)
      : m_((int)b.size()), n_((int)c.size()), N_(n_ + 1), B_(m_),
        D_(m_ + 2, std::vector<double>(n_ + 2)) {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) D_[i][j] = A[i][j];
    for (int i = 0; i < m_; ++i) {
      B_[i] = n_ + i;
      D_[i][n_] = -1;
      D_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      N_[j] = j;
      D_[m_][j] = -c[j];
    }
    N_[n_] = -1;
    D_[m_ + 1][n_] = 1;
  }

  double solve(std::vector<double>& x) {
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (D_[i][n_ + 1] < D_[r][n_ + 1]) r = i;
    if (D_[r][n_ + 1] < -eps_) {
      pivot(r, n_);
      if (!simplex(2) || D_[m_ + 1][n_ + 1] < -eps_) return nan("");
      for (int i = 0; i < m_; ++i)
        if (B_[i] == -1) {
          int s = 0;
          for (int j = 1; j <= n_; ++j)
            if (better(s, j, i)) s = j;
          pivot(i, s);
        }
    }
    bool ok = simplex(1);
    x.assign(n_, 0);
    for (int i = 0; i < m_; ++i)
      if (B_[i] < n_) x[B_[i]] = D_[i][n_ + 1];
    return ok ? D_[m_][n_ + 1] : nan("");
  }

 private:
  static constexpr double eps_ = 1e-11;
  int m_, n_;
  std::vector<int> N_, B_;
  std::vector<std::vector<double>> D_;

  bool better(int s, int j, int i) const {
    double a = D_[i][j], b = D_[i][s];
    return (a < b - eps_) || (a < b + eps_ && N_[j] < N_[s]);
  }

  void pivot(int r, int s) {
    double* a = D_[r].data();
    double inv = 1 / a[s];
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r && std::abs(D_[i][s]) > eps_) {
        double binv = D_[i][s] * inv;
        for (int j = 0; j < n_ + 2; ++j) D_[i][j] -= a[j] * binv;
        D_[i][s] = a[s] * binv;
      }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s) D_[r][j] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r) D_[i][s] *= -inv;
    D_[r][s] = inv;
    std::swap(B_[r], N_[s]);
  }

  bool simplex(int phase) {
    int x = m_ + phase - 1;
    while (true) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (N_[j] == -phase) continue;
        if (s == -1 || D_[x][j] < D_[x][s] - eps_ ||
            (D_[x][j] < D_[x][s] + eps_ && N_[j] < N_[s]))
          s = j;
      }
      if (D_[x][s] >= -eps_) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (D_[i][s] <= eps_) continue;
        if (r == -1 ||
            D_[i][n_ + 1] / D_[i][s] < D_[r][n_ + 1] / D_[r][s] - eps_ ||
            (D_[i][n_ + 1] / D_[i][s] < D_[r][n_ + 1] / D_[r][s] + eps_ && B_[i] < B_[r]))
          r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }
};

// The truncated bound LP as a dense instance for the simplex: variables
// [x0, x1, x_p for primes p <= prime_limit], constraints (ii)-(iv).
inline double lp_simplex_extremum(const gfa::LPCoefficients& coeffs,
                                  std::uint64_t prime_limit, bool maximize) {
  auto primes = gfa::primes_up_to(prime_limit);
  int n = 2 + (int)primes.size();
  std::vector<std::vector<double>> A;
  std::vector<double> b, c(n, 0.0);
  for (size_t i = 0; i < primes.size(); ++i) {  // (ii): x_p <= x0 + 2 x1
    std::vector<double> row(n, 0.0);
    row[0] = -1;
    row[1] = -2;
    row[2 + i] = 1;
    A.push_back(row);
    b.push_back(0);
  }
  {  // (iii)
    std::vector<double> row(n, 0.0);
    row[0] = coeffs.a0;
    row[1] = coeffs.a1;
    for (size_t i = 0; i < primes.size(); ++i) row[2 + i] = coeffs.a(primes[i]);
    A.push_back(row);
    b.push_back(1);
  }
  if (!coeffs.x0_admissible) {  // (iv)
    std::vector<double> row(n, 0.0);
    row[0] = 1;
    A.push_back(row);
    b.push_back(0);
  }
  if (!coeffs.x1_admissible) {
    std::vector<double> row(n, 0.0);
    row[1] = 1;
    A.push_back(row);
    b.push_back(0);
  }
  c[0] = -coeffs.b0;
  c[1] = -coeffs.b1;
  for (size_t i = 0; i < primes.size(); ++i) c[2 + i] = coeffs.b(primes[i]);
  if (!maximize)
    for (double& v : c) v = -v;
  std::vector<double> x;
  double value = Simplex(A, b, c).solve(x);
  return maximize ? value : -value;
}

// --- quadrature -------------------------------------------------------------
// Composite Simpson; fine for the smooth integrands used here.
template <class F>
double simpson(F f, double a, double b, int n) {
  if (n % 2) ++n;
  double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4 : 2);
  return sum * h / 3;
}

// Trapezoid rule; spectrally accurate on periodic integrands.
template <class F>
double periodic_trapezoid(F f, double a, double b, int n) {
  double h = (b - a) / n;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += f(a + i * h);
  return sum * h;
}

// --- random phi generators --------------------------------------------------
inline gfa::PhiSystem random_number_field_phi(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double phi_r = 0.35 * unit(rng);
  double phi_c = 0.35 * unit(rng);
  double budget = phi_r + 2 * phi_c;
  std::map<std::uint64_t, double> entries;
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  for (std::uint64_t p : primes) {
    if (unit(rng) < 0.5) continue;
    double share = unit(rng) * budget;
    if (unit(rng) < 0.25) {
      entries[p * p] += share / 2;  // weight m = 2
    } else {
      entries[p] += share;
    }
  }
  return gfa::PhiSystem::number_field(phi_r, phi_c, entries);
}

inline gfa::PhiSystem random_function_field_phi(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::uint64_t rs[] = {2, 3, 4, 5, 8, 9};
  std::uint64_t r = rs[rng() % 6];
  std::map<std::uint64_t, double> entries;
  std::uint64_t q = r;
  for (int m = 1; m <= 3; ++m) {
    if (unit(rng) < 0.7) entries[q] += 0.5 * unit(rng) * (std::sqrt((double)r) - 1);
    q *= r;
  }
  return gfa::PhiSystem::function_field(r, entries);
}

}  // namespace testutil
