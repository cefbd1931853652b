#include "gfa/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace gfa {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

void check_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error(std::string(what) + ": non-finite result");
}

// B_{2n}/(2n) for the digamma asymptotic series.
constexpr double kDigammaCoef[] = {
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
    1.0 / 132, -691.0 / 32760, 1.0 / 12, -3617.0 / 8160,
};

// B_{2n}/(2n(2n-1)) for the Stirling series.
constexpr double kStirlingCoef[] = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
    1.0 / 1188, -691.0 / 360360, 1.0 / 156, -3617.0 / 122400,
};

constexpr double kShiftTo = 12.0;

Complex digamma_asymptotic(Complex z) {
  Complex inv2 = 1.0 / (z * z);
  Complex sum = 0.0;
  Complex term = inv2;
  for (double c : kDigammaCoef) {
    sum += c * term;
    term *= inv2;
  }
  return std::log(z) - 0.5 / z - sum;
}

Complex log_gamma_asymptotic(Complex z) {
  Complex inv = 1.0 / z;
  Complex inv2 = inv * inv;
  Complex sum = 0.0;
  Complex term = inv;
  for (double c : kStirlingCoef) {
    sum += c * term;
    term *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + sum;
}

}  // namespace

Complex digamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("digamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi*cot(pi z)
    Complex w = kPi * z;
    Complex r = digamma(1.0 - z) - kPi * std::cos(w) / std::sin(w);
    check_finite(r, "digamma");
    return r;
  }
  Complex acc = 0.0;
  while (z.real() < kShiftTo) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  Complex r = digamma_asymptotic(z) + acc;
  check_finite(r, "digamma");
  return r;
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("log_gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z); principal logs.
    Complex w = kPi * z;
    Complex r = std::log(Complex(kPi)) - std::log(std::sin(w)) - log_gamma(1.0 - z);
    check_finite(r, "log_gamma");
    return r;
  }
  Complex acc = 0.0;
  while (z.real() < kShiftTo) {
    acc -= std::log(z);
    z += 1.0;
  }
  Complex r = log_gamma_asymptotic(z) + acc;
  check_finite(r, "log_gamma");
  return r;
}

int kronecker_symbol(long long a, long long n) {
  if (n <= 0) throw std::invalid_argument("kronecker_symbol: n must be positive");
  int result = 1;
  // strip factors of two from n
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    long long am = ((a % 8) + 8) % 8;
    if (am == 3 || am == 5) result = -result;
  }
  // now n odd; Jacobi symbol loop
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long nm = n % 8;
      if (nm == 3 || nm == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker_symbol_factored(bool negative, const std::vector<long long>& factors,
                              long long n) {
  int result = negative ? kronecker_symbol(-1, n) : 1;
  for (long long f : factors) {
    int s = kronecker_symbol(f, n);
    if (s == 0) return 0;
    result *= s;
  }
  return result;
}

long long multiplicative_order(long long a, long long n) {
  if (n <= 1) throw std::invalid_argument("multiplicative_order: n must exceed 1");
  a %= n;
  if (a < 0) a += n;
  if (std::gcd(a, n) != 1)
    throw std::invalid_argument("multiplicative_order: arguments not coprime");
  long long x = a % n;
  long long f = 1;
  while (x != 1) {
    x = (__int128)x * a % n;
    ++f;
  }
  return f;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit > 10000000) throw std::invalid_argument("primes_up_to: limit above 1e7");
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> sieve(limit + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

std::vector<PrimePower> prime_powers(std::uint64_t limit) {
  std::vector<PrimePower> out;
  if (limit < 2) return out;
  for (std::uint64_t p : primes_up_to(limit)) {
    std::uint64_t q = p;
    int m = 1;
    while (q <= limit) {
      out.push_back({q, p, m});
      if (q > limit / p) break;
      q *= p;
      ++m;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.q < y.q; });
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool factor_prime_power(std::uint64_t q, std::uint64_t& p, int& m) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      m = 0;
      while (q % d == 0) {
        q /= d;
        ++m;
      }
      return q == 1;
    }
  }
  p = q;
  m = 1;
  return true;
}

}  // namespace gfa
