#pragma once

// Dense univariate integer polynomials, ascending order: c[k] multiplies t^k.

#include <complex>
#include <vector>

#include "cyclav/arith.hpp"

namespace cyclav::poly {

using IntPoly = std::vector<Int>;

int degree(const IntPoly& f);
void trim(IntPoly& f);

Int eval(const IntPoly& f, const Int& x);
IntPoly derivative(const IntPoly& f);
IntPoly multiply(const IntPoly& f, const IntPoly& g);

// f(t + shift).
IntPoly taylor_shift(const IntPoly& f, const Int& shift);

// f / gcd(f, f') for monic f; the result is again monic with integer
// coefficients.
IntPoly squarefree_part(const IntPoly& monic);

// Discriminant up to sign (only its valuations and vanishing are used).
Int discriminant(const IntPoly& f);

// Complex roots by Aberth iteration. Intended for squarefree input.
std::vector<std::complex<long double>> numeric_roots(const IntPoly& f);

}  // namespace cyclav::poly
