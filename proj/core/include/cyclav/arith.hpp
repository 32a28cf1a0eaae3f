#pragma once

// Exact integer and rational helpers used throughout the library.
//
// Integers are GMP mpz_class values. Signs are carried by the caller: the
// radical/hat/factorization functions all work on |n|.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclav {

using Int = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization of |n|. Entries are sorted by strictly increasing
// prime; an empty list means |n| == 1.
struct Factorization {
  std::vector<PrimePower> entries;

  Int value() const;
  std::vector<Int> primes() const;
  bool divisible_by(const Int& prime) const;
};

struct FactorOptions {
  // Trial division runs over primes below this bound before Pollard-rho.
  std::uint32_t trial_bound = 1'000'000;
};

Factorization factorize(const Int& n, const FactorOptions& options = {});

bool is_prime(const Int& n);

// Product of the distinct primes dividing |n|; radical(+-1) == 1.
Int radical(const Int& n);

// |n| / radical(n). Equals 1 exactly when n is squarefree.
Int hat(const Int& n);

// Exponent of ell in n. n must be nonzero and ell prime.
unsigned valuation(const Int& n, const Int& ell);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int ipow(const Int& base, unsigned long exponent);
Int isqrt(const Int& n);
Int euler_phi(const Int& n);

// 1 - prod_{x in primes} (1 - 1/x^2), exactly.
Rational xi(std::span<const Int> primes);

// Inclusion-exclusion sum of ceil(n / prod_{x in R} x^2) over nonempty R.
Int sigma(const Int& n, std::span<const Int> primes);

// Whether ell divides both x0 + dx*i and y0 + dy*i for some i >= 0,
// decided by dx*y0 == dy*x0 (mod ell). Requires ell not dividing dx.
bool ap_common_prime(const Int& x0, const Int& dx, const Int& y0,
                     const Int& dy, const Int& ell);

// #{x in (Z/n)^*, t*x + s in (Z/n)^*} / #(Z/n)^* through the closed-form
// product over primes of n not dividing t*s. Requires gcd(t, s, n) == 1.
Rational unit_translate_density(const Int& t, const Int& s, const Int& n);

// Order of p in (Z/n)^* equals #(Z/n)^*. False whenever the group is not
// cyclic. Requires gcd(p, n) == 1.
bool is_primitive_root(const Int& p, const Int& n);

bool is_square_integer(const Int& z);

// Distinct primes of n; for n == 0 this is every prime, which callers treat
// as "no restriction". The flag reports that case.
struct PrimeSupport {
  std::vector<Int> primes;
  bool everything = false;

  bool contains(const Int& ell) const;
};
PrimeSupport prime_support(const Int& n);

std::string to_string(const Int& n);
std::string to_string(const Rational& r);
Int parse_int(const std::string& text);

}  // namespace cyclav
