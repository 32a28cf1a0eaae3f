#include "cyclav/stats.hpp"

#include <cmath>

#include "cyclav/enumerate.hpp"
#include "cyclav/error.hpp"
#include "cyclav/parallel.hpp"

namespace cyclav {
namespace {

std::optional<Rational> ratio(const Int& num, const Int& den) {
  if (den == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct Counts {
  Int cyclic = 0;
  Int valid = 0;
};

// Fold per-index counts into a cumulative estimate, emitting series points.
DensityEstimate accumulate(const std::vector<Int>& indices, const std::vector<Counts>& counts,
                           const DensityOptions& options) {
  DensityEstimate est;
  est.mode = options.mode;
  est.numerator = options.base_numerator;
  est.denominator = options.base_denominator;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    est.numerator += counts[k].cyclic;
    est.denominator += counts[k].valid;
    SeriesPoint pt{indices[k], est.numerator, est.denominator, ratio(est.numerator, est.denominator)};
    if (options.on_point) options.on_point(pt);
    est.series.push_back(std::move(pt));
  }
  est.value = ratio(est.numerator, est.denominator);
  return est;
}

void require_prime(const Int& p, const char* what) {
  if (!is_prime(p)) throw InvalidArgument(std::string(what) + ": p must be prime");
}

void require_g12(std::size_t g, const char* what) {
  if (g < 1 || g > 2) throw InvalidArgument(std::string(what) + ": needs g in {1, 2}");
}

}  // namespace

DensityEstimate density_r(const Int& p, std::span<const Int> a_vec, unsigned n, const DensityOptions& options) {
  require_prime(p, "density_r");
  const unsigned g = static_cast<unsigned>(a_vec.size()) + 1;
  require_g12(g, "density_r");
  if (options.from_index < 1) throw InvalidArgument("density_r: from_index must be >= 1");
  DensityEstimate est;
  est.mode = options.mode;
  est.numerator = options.base_numerator;
  est.denominator = options.base_denominator;
  const EnumOptions eo{options.mode, options.jobs};
  for (unsigned i = options.from_index; i <= n; ++i) {
    const auto pair = enumerate_both(g, a_vec, FieldSize::make(p, i), eo);
    est.numerator += static_cast<unsigned long>(pair.cyclic.size());
    est.denominator += static_cast<unsigned long>(pair.all.size());
    SeriesPoint pt{Int(i), est.numerator, est.denominator, ratio(est.numerator, est.denominator)};
    if (options.on_point) options.on_point(pt);
    est.series.push_back(std::move(pt));
  }
  est.value = ratio(est.numerator, est.denominator);
  if (options.with_bound) est.bound = bound_thm2(p, g, a_vec);
  return est;
}

DensityEstimate density_x(std::span<const Int> b_vec, const Int& n_max, const DensityOptions& options) {
  const unsigned g = static_cast<unsigned>(b_vec.size());
  require_g12(g, "density_x");
  const std::vector<Int> coeffs(b_vec.begin(), b_vec.end());
  std::vector<Int> primes;
  for (Int ell = 2; ell <= n_max; mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t())) primes.push_back(ell);
  auto counts = parallel_map(primes.size(), options.jobs, [&](std::size_t k) {
    IsogenyClass c(g, FieldSize::make(primes[k], 1), coeffs);
    Counts out;
    if (validate(c, options.mode).valid) {
      out.valid = 1;
      out.cyclic = is_cyclic_class(c).cyclic ? 1 : 0;
    }
    return out;
  });
  DensityOptions opts = options;
  opts.base_numerator = opts.base_denominator = 0;
  return accumulate(primes, counts, opts);
}

DensityEstimate density_y(const Int& p, std::span<const Int> b_vec, unsigned n, const DensityOptions& options) {
  require_prime(p, "density_y");
  const unsigned g = static_cast<unsigned>(b_vec.size());
  require_g12(g, "density_y");
  if (options.from_index < 1) throw InvalidArgument("density_y: from_index must be >= 1");
  const std::vector<Int> coeffs(b_vec.begin(), b_vec.end());
  std::vector<Int> indices;
  for (unsigned i = options.from_index; i <= n; ++i) indices.emplace_back(i);
  auto counts = parallel_map(indices.size(), options.jobs, [&](std::size_t k) {
    IsogenyClass c(g, FieldSize::make(p, static_cast<unsigned>(indices[k].get_ui())), coeffs);
    Counts out;
    if (validate(c, options.mode).valid) {
      out.valid = 1;
      out.cyclic = is_cyclic_class(c).cyclic ? 1 : 0;
    }
    return out;
  });
  return accumulate(indices, counts, options);
}

long double bound_thm2(const Int& p, unsigned g, std::span<const Int> a_vec) {
  require_prime(p, "bound_thm2");
  if (a_vec.size() + 1 != g) throw InvalidArgument("bound_thm2: a_vec must have length g - 1");
  const Int h = h_value(g, p, a_vec);
  if (h == 0) throw InvalidArgument("bound_thm2: h(p, a) = 0 has no prime support");
  const std::vector<Int> primes = factorize(h).primes();
  const Rational xi_val = xi(primes);
  const long double pd = static_cast<long double>(p.get_d());
  const long double inv = std::pow(pd, -static_cast<long double>(g) / 2.0L);
  const long double x = static_cast<long double>(xi_val.get_d());
  return 1.0L - pd / (pd - 1.0L) * (x * (1.0L - inv) + inv);
}

Rational bound_thm3(const HypWitness& w) {
  if (w.eta <= 0) throw InvalidArgument("bound_thm3: eta must be positive");
  if (!witness_is_normal(w)) throw InvalidArgument("bound_thm3: gcd(eta, t, s) must be 1");
  return unit_translate_density(w.t, w.s, w.eta);
}

Thm3Check thm3_check(std::span<const Int> b_vec, const Int& p, const HypWitness& w) {
  require_prime(p, "thm3_check");
  if (b_vec.empty()) throw InvalidArgument("thm3_check: empty coefficient vector");
  Thm3Check out;
  out.p_odd = p > 2;
  out.p_not_dividing_last = b_vec.back() % p != 0;
  out.primitive_root = w.eta > 0 && gcd(p, w.eta) == 1 && is_primitive_root(p, w.eta);
  out.applicable = out.p_odd && out.p_not_dividing_last && out.primitive_root;
  if (out.applicable && witness_is_normal(w)) out.bound = bound_thm3(w);
  return out;
}

}  // namespace cyclav
