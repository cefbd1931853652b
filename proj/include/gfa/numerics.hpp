// Special functions and elementary number-theoretic primitives shared by the
// rest of the library: complex digamma / log-gamma, Kronecker symbols,
// multiplicative orders and prime-power enumeration.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace gfa {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// psi(z) = Gamma'(z)/Gamma(z).  Upward recurrence to Re z >= 10 followed by
// the Bernoulli asymptotic series; reflection for Re z < 1/2.  Absolute error
// <= 1e-12 for |z| <= 100.  Throws std::domain_error at the poles
// z = 0, -1, -2, ...
Complex digamma(Complex z);

// log Gamma on the principal branch (the analytic continuation that is real
// on the positive axis), same recurrence + Stirling scheme and accuracy
// contract as digamma.  For Re z < 1/2 the reflection formula is applied
// with principal logarithms: exp(log_gamma(z)) is Gamma(z) there, but the
// imaginary part may sit on another 2 pi i branch.  Throws std::domain_error
// at the poles.
Complex log_gamma(Complex z);

// Kronecker symbol (a|n) for n > 0.  Equals the Legendre symbol for odd
// prime n.
int kronecker_symbol(long long a, long long n);

// (a|n) where a = sign * prod(factors); avoids building huge products.
int kronecker_symbol_factored(bool negative, const std::vector<long long>& factors,
                              long long n);

// Least f >= 1 with a^f = 1 mod n, by direct iteration (intended for small
// moduli).  Throws std::invalid_argument unless gcd(a, n) = 1 and n > 1.
long long multiplicative_order(long long a, long long n);

struct PrimePower {
  std::uint64_t q;  // q = p^m
  std::uint64_t p;
  int m;
};

// All prime powers q <= limit, increasing.  limit capped at 10^7.
std::vector<PrimePower> prime_powers(std::uint64_t limit);

// Primes <= limit, increasing.  Same cap.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);

// Factors q as p^m; returns false if q is not a prime power (or q < 2).
bool factor_prime_power(std::uint64_t q, std::uint64_t& p, int& m);

}  // namespace gfa
