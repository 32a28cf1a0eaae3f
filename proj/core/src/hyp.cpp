#include "cyclav/hyp.hpp"

#include <algorithm>

#include "cyclav/error.hpp"

namespace cyclav {

HypWitness normalize_witness(HypWitness w) {
  w.eta = abs(w.eta);
  const Int common = gcd(w.t, w.s);
  if (common == 0 || w.eta == 0) {
    // t = s = 0 leaves gcd(eta, 0, 0) = eta; nothing to strip sensibly.
    return w;
  }
  for (Int d = gcd(w.eta, common); d > 1; d = gcd(w.eta, common)) w.eta /= d;
  return w;
}

bool witness_is_normal(const HypWitness& w) { return gcd(gcd(w.eta, w.t), w.s) == 1; }

Int surface_eta(const Int& a, const Int& b) { return (2 * a + b + 2) * (a * a - 4 * a - 4 * b - 8); }

HypWitness surface_witness(const Int& a, const Int& b) {
  if (mpz_even_p(a.get_mpz_t())) throw InvalidArgument("surface_witness: a must be odd");
  if (gcd(a, b + 2) != 1) throw InvalidArgument("surface_witness: gcd(a, b+2) must be 1");
  HypWitness w;
  w.eta = abs(surface_eta(a, b));
  w.t = a;
  w.s = 4 + 3 * a + 2 * b;
  return w;
}

HypWitness elliptic_witness(const Int& a) { return {abs(Int(2 + a)), 1, 1 + a}; }

HypWitness combine_witnesses(const HypWitness& w1, const HypWitness& w2) {
  return normalize_witness({gcd(w1.eta, w2.eta), w1.t, w1.s});
}

HypWitness reduce_witness(const HypWitness& w, const HypWitness& w2, const Int& ell) {
  if (!is_prime(ell)) throw InvalidArgument("reduce_witness: ell must be prime");
  if (abs(w.eta) != abs(w2.eta)) throw InvalidArgument("reduce_witness: witnesses must share eta");
  if (w.eta == 0 || w.eta % ell != 0) throw InvalidArgument("reduce_witness: ell must divide eta");
  const Int ts = w.t * w.s;
  if (ts == 0 || ts % ell == 0) throw InvalidArgument("reduce_witness: ell must not divide t*s");
  const Int ts2 = w2.t * w2.s;
  if (ts2 != 0 && ts2 % ell != 0) throw InvalidArgument("reduce_witness: ell must divide t2*s2");
  return normalize_witness({abs(w.eta) / ell, w.t * ell, w.s * ell});
}

WitnessReport verify_witness(unsigned g, std::span<const Int> b_vec, const HypWitness& w,
                             std::span<const FieldSize> q_samples) {
  if (b_vec.size() != g) throw InvalidArgument("verify_witness: b_vec must have length g");
  WitnessReport report;
  const std::vector<Int> coeffs(b_vec.begin(), b_vec.end());
  for (const FieldSize& field : q_samples) {
    IsogenyClass c(g, field, coeffs);
    const Int N = eval_at_one(c);
    if (N <= 0) {
      ++report.skipped;
      continue;
    }
    ++report.samples;
    const Int dN = derivative_at_one(c);
    const Int jq = w.t * field.q + w.s;
    const Int control = w.eta * jq;
    // (i) strip every prime shared with the control value; anything left
    // over in gcd(N, dN) is a prime the witness does not account for.
    Int common = gcd(N, dN);
    for (Int d = gcd(common, control); d > 1; d = gcd(common, control)) common /= d;
    if (common != 1) {
      report.violations.push_back({field.q, "common-divisor",
                                   "gcd(f(1), f'(1)) has a prime outside eta*(tq+s): residue " + to_string(common)});
    }
    // (ii)
    if (gcd(w.eta, jq) == 1) {
      const CyclicityVerdict v = cyclicity_from_values(N, dN);
      if (!v.cyclic) {
        report.violations.push_back({field.q, "cyclicity",
                                     "gcd(eta, tq+s) = 1 but witness gcd is " + to_string(v.witness_gcd)});
      }
    }
  }
  return report;
}

std::vector<FieldSize> prime_powers_up_to(const Int& bound) {
  std::vector<FieldSize> out;
  if (bound < 2) return out;
  if (!bound.fits_ulong_p()) throw InvalidArgument("prime_powers_up_to: bound too large");
  const unsigned long n = bound.get_ui();
  std::vector<bool> composite(n + 1, false);
  for (unsigned long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (unsigned long m = p * p; m <= n; m += p) composite[m] = true;
    unsigned r = 1;
    for (unsigned long q = p; q <= n; q *= p, ++r) {
      out.push_back(FieldSize::make(Int(p), r));
      if (q > n / p) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const FieldSize& x, const FieldSize& y) { return x.q < y.q; });
  return out;
}

}  // namespace cyclav
