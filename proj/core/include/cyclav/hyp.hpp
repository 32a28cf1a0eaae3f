#pragma once

// Witnesses (eta, t, s) controlling the common prime divisors of f(1) and
// f'(1) uniformly in q: every such prime divides eta * (t q + s), and
// gcd(eta, t q + s) = 1 forces the class to be cyclic.

#include <span>
#include <string>
#include <vector>

#include "cyclav/arith.hpp"
#include "cyclav/weil.hpp"

namespace cyclav {

struct HypWitness {
  Int eta;  // >= 0; stored as |eta|
  Int t;
  Int s;

  bool operator==(const HypWitness&) const = default;
};

// Divide out of eta every prime that also divides gcd(t, s), restoring
// gcd(eta, t, s) = 1. The set of primes of eta outside P(ts) is unchanged.
HypWitness normalize_witness(HypWitness w);

bool witness_is_normal(const HypWitness& w);

// Resultant in q of N = 1+a(q+1)+b+q^2 and J = 4+a(q+3)+2b, up to sign:
// (2a+b+2)(a^2-4a-4b-8). Every gcd(N, J) divides it.
Int surface_eta(const Int& a, const Int& b);

// Surfaces: eta = |surface_eta(a, b)|, t = a, s = 4+3a+2b.
// Requires a odd and gcd(a, b+2) = 1.
HypWitness surface_witness(const Int& a, const Int& b);

// Elliptic curves with f = t^2 + a t + q: (|2+a|, 1, 1+a).
HypWitness elliptic_witness(const Int& a);

// (gcd(eta1, eta2), t1, s1), normalized.
HypWitness combine_witnesses(const HypWitness& w1, const HypWitness& w2);

// (eta/ell, t*ell, s*ell), normalized. Requires eta1 == eta2, ell prime,
// ell | eta and ell in P(t2 s2) \ P(t s).
HypWitness reduce_witness(const HypWitness& w, const HypWitness& w2, const Int& ell);

struct WitnessViolation {
  Int q;
  std::string kind;  // "common-divisor" or "cyclicity"
  std::string detail;
};

struct WitnessReport {
  std::size_t samples = 0;
  std::size_t skipped = 0;  // sampled q where f(1) <= 0
  std::vector<WitnessViolation> violations;

  bool verified() const { return violations.empty(); }
};

// Empirical check of both properties over sampled fields. Sample fields
// where f(1) <= 0 are counted as skipped.
WitnessReport verify_witness(unsigned g, std::span<const Int> b_vec, const HypWitness& w,
                             std::span<const FieldSize> q_samples);

// All prime powers p^r <= bound, ordered by q.
std::vector<FieldSize> prime_powers_up_to(const Int& bound);

}  // namespace cyclav
