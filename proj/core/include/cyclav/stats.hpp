#pragma once

// Densities of cyclic classes among valid ones, over q = p^i (r), over
// primes ell (x) and over powers of a fixed prime for a fixed vector (y),
// with the closed-form lower bounds they are compared against.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclav/arith.hpp"
#include "cyclav/hyp.hpp"
#include "cyclav/validity.hpp"

namespace cyclav {

struct SeriesPoint {
  Int index;        // i for r and y; the prime ell for x
  Int numerator;    // cumulative
  Int denominator;  // cumulative
  std::optional<Rational> value;
};

struct DensityEstimate {
  Int numerator = 0;
  Int denominator = 0;
  std::optional<Rational> value;  // unset when the denominator is zero
  std::vector<SeriesPoint> series;
  std::optional<long double> bound;
  Mode mode = Mode::Either;
};

struct DensityOptions {
  Mode mode = Mode::Either;
  unsigned jobs = 1;
  // First index to evaluate (r and y). Earlier indices contribute nothing,
  // which lets a long sweep resume from a saved cumulative state.
  unsigned from_index = 1;
  Int base_numerator = 0;
  Int base_denominator = 0;
  bool with_bound = false;
  // Called with each series point as soon as it is final.
  std::function<void(const SeriesPoint&)> on_point;
};

DensityEstimate density_r(const Int& p, std::span<const Int> a_vec, unsigned n,
                          const DensityOptions& options = {});
DensityEstimate density_x(std::span<const Int> b_vec, const Int& n_max, const DensityOptions& options = {});
DensityEstimate density_y(const Int& p, std::span<const Int> b_vec, unsigned n,
                          const DensityOptions& options = {});

// 1 - p/(p-1) [ xi(P(h)) (1 - p^{-g/2}) + p^{-g/2} ], h = h_value(g, p, a_vec).
long double bound_thm2(const Int& p, unsigned g, std::span<const Int> a_vec);

// prod over ell in P(eta) \ P(t s) of (ell-2)/(ell-1).
Rational bound_thm3(const HypWitness& w);

struct Thm3Check {
  bool p_odd = false;
  bool p_not_dividing_last = false;
  bool primitive_root = false;
  bool applicable = false;
  std::optional<Rational> bound;  // L when applicable
};

Thm3Check thm3_check(std::span<const Int> b_vec, const Int& p, const HypWitness& w);

}  // namespace cyclav
