#include "cyclav/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "cyclav/error.hpp"

namespace cyclav {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

std::vector<std::uint32_t> sieve(std::uint32_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  static const std::vector<std::uint32_t> table = sieve(1'000'000);
  if (bound <= 1'000'000) return table;
  // Larger bounds are rare; cache the largest one requested.
  static std::mutex mu;
  static std::vector<std::uint32_t> extended;
  std::lock_guard lock(mu);
  if (extended.empty() || extended.back() < bound) extended = sieve(bound);
  return extended;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; returns a nontrivial divisor of composite n.
u64 rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[Int(static_cast<unsigned long>(n))] += 1;
    return;
  }
  u64 d = rho_u64(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

bool is_prime_mpz(const Int& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
  static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : bases) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Int n_minus_1 = n - 1;
  Int x;
  for (unsigned a : bases) {
    Int base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Int rho_mpz(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x = 2, g = 1, q = 1, ys = 2, diff;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto step = [&](Int& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = cyclav::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = cyclav::gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_mpz(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    split_u64(n.get_ui(), out);
    return;
  }
  if (is_prime_mpz(n)) {
    out[n] += 1;
    return;
  }
  Int d = rho_mpz(n);
  split_mpz(d, out);
  split_mpz(Int(n / d), out);
}

void require_nonzero(const Int& n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + ": zero input");
}

}  // namespace

Int Factorization::value() const {
  Int v = 1;
  for (const auto& e : entries) v *= ipow(e.prime, e.exponent);
  return v;
}

std::vector<Int> Factorization::primes() const {
  std::vector<Int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.prime);
  return out;
}

bool Factorization::divisible_by(const Int& prime) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const PrimePower& e) { return e.prime == prime; });
}

Factorization factorize(const Int& n, const FactorOptions& options) {
  require_nonzero(n, "factorize");
  std::map<Int, unsigned> found;
  Int rest = abs(n);
  const auto& primes = small_primes(options.trial_bound);

  if (mpz_fits_ulong_p(rest.get_mpz_t())) {
    u64 m = rest.get_ui();
    bool exhausted = true;
    for (std::uint32_t p : primes) {
      if (p >= options.trial_bound) break;
      if (static_cast<u64>(p) * p > m) {
        exhausted = false;
        break;
      }
      if (m % p == 0) {
        unsigned e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        found[Int(p)] = e;
      }
    }
    if (m > 1) {
      if (!exhausted) {
        found[Int(static_cast<unsigned long>(m))] += 1;
      } else {
        split_u64(m, found);
      }
    }
  } else {
    for (std::uint32_t p : primes) {
      if (p >= options.trial_bound) break;
      if (mpz_fits_ulong_p(rest.get_mpz_t())) {
        if (rest == 1) break;
        if (static_cast<u64>(p) * p > rest.get_ui()) break;
      }
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
          mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
          ++e;
        }
        found[Int(p)] = e;
      }
    }
    if (rest > 1) {
      // Everything left has no factor below the bound; if it is below the
      // squared bound it is prime.
      Int bound_sq = Int(options.trial_bound) * options.trial_bound;
      if (rest < bound_sq) {
        found[rest] += 1;
      } else {
        split_mpz(rest, found);
      }
    }
  }

  Factorization out;
  out.entries.reserve(found.size());
  for (auto& [p, e] : found) out.entries.push_back({p, e});
  return out;
}

bool is_prime(const Int& n) { return is_prime_mpz(n); }

Int radical(const Int& n) {
  require_nonzero(n, "radical");
  Int r = 1;
  for (const auto& e : factorize(n).entries) r *= e.prime;
  return r;
}

Int hat(const Int& n) {
  require_nonzero(n, "hat");
  return Int(abs(n) / radical(n));
}

unsigned valuation(const Int& n, const Int& ell) {
  require_nonzero(n, "valuation");
  if (ell < 2) throw InvalidArgument("valuation: modulus must be >= 2");
  Int rest;
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t()));
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int ipow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Int isqrt(const Int& n) {
  if (n < 0) throw InvalidArgument("isqrt: negative input");
  Int out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

Int euler_phi(const Int& n) {
  if (n <= 0) throw InvalidArgument("euler_phi: input must be positive");
  Int phi = n;
  for (const auto& e : factorize(n).entries) {
    phi /= e.prime;
    phi *= e.prime - 1;
  }
  return phi;
}

Rational xi(std::span<const Int> primes) {
  std::vector<Int> seen;
  Rational product = 1;
  for (const Int& x : primes) {
    if (!is_prime(x)) throw InvalidArgument("xi: " + to_string(x) + " is not prime");
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) {
      throw InvalidArgument("xi: repeated prime " + to_string(x));
    }
    seen.push_back(x);
    Rational sq(Int(x * x));
    product *= 1 - 1 / sq;
  }
  Rational out = 1 - product;
  out.canonicalize();
  return out;
}

Int sigma(const Int& n, std::span<const Int> primes) {
  if (n < 1) throw InvalidArgument("sigma: n must be positive");
  if (primes.size() > 30) throw InvalidArgument("sigma: prime set too large");
  const std::size_t k = primes.size();
  Int total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Int denom = 1;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        denom *= primes[i] * primes[i];
        ++bits;
      }
    }
    Int term;
    mpz_cdiv_q(term.get_mpz_t(), n.get_mpz_t(), denom.get_mpz_t());
    if (bits % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

bool ap_common_prime(const Int& x0, const Int& dx, const Int& y0,
                     const Int& dy, const Int& ell) {
  if (!is_prime(ell)) throw InvalidArgument("ap_common_prime: ell must be prime");
  if (mpz_divisible_p(dx.get_mpz_t(), ell.get_mpz_t())) {
    throw InvalidArgument("ap_common_prime: ell divides the step dx");
  }
  Int lhs = dx * y0 - dy * x0;
  return mpz_divisible_p(lhs.get_mpz_t(), ell.get_mpz_t()) != 0;
}

Rational unit_translate_density(const Int& t, const Int& s, const Int& n) {
  if (n < 1) throw InvalidArgument("unit_translate_density: n must be positive");
  if (gcd(gcd(t, s), n) != 1) {
    throw InvalidArgument("unit_translate_density: t, s, n share a common factor");
  }
  const Int ts = t * s;
  Rational out = 1;
  for (const auto& e : factorize(n).entries) {
    if (ts == 0 || mpz_divisible_p(ts.get_mpz_t(), e.prime.get_mpz_t())) continue;
    out *= Rational(e.prime - 2, e.prime - 1);
  }
  out.canonicalize();
  return out;
}

bool is_primitive_root(const Int& p, const Int& n) {
  if (n < 1) throw InvalidArgument("is_primitive_root: n must be positive");
  if (gcd(p, n) != 1) throw InvalidArgument("is_primitive_root: p is not a unit mod n");
  if (n <= 2) return true;
  // (Z/n)^* is cyclic only for n = 4, l^k, 2 l^k with l an odd prime.
  auto fac = factorize(n);
  const auto& entries = fac.entries;
  bool cyclic_group = false;
  if (n == 4) {
    cyclic_group = true;
  } else if (entries.size() == 1 && entries[0].prime != 2) {
    cyclic_group = true;
  } else if (entries.size() == 2 && entries[0].prime == 2 &&
             entries[0].exponent == 1) {
    cyclic_group = true;
  }
  if (!cyclic_group) return false;

  const Int phi = euler_phi(n);
  Int base = p % n;
  if (base < 0) base += n;
  Int x;
  for (const auto& e : factorize(phi).entries) {
    Int exponent = phi / e.prime;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), n.get_mpz_t());
    if (x == 1) return false;
  }
  return true;
}

bool is_square_integer(const Int& z) {
  if (z < 0) return false;
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool PrimeSupport::contains(const Int& ell) const {
  return everything || std::find(primes.begin(), primes.end(), ell) != primes.end();
}

PrimeSupport prime_support(const Int& n) {
  PrimeSupport out;
  if (n == 0) {
    out.everything = true;
    return out;
  }
  out.primes = factorize(n).primes();
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Int parse_int(const std::string& text) {
  Int out;
  std::string trimmed = text;
  if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
  if (trimmed.empty() || out.set_str(trimmed, 10) != 0) {
    throw InvalidArgument("not an integer: '" + text + "'");
  }
  return out;
}

}  // namespace cyclav
