#pragma once

// Weil polynomials of isogeny classes and the cyclicity criterion: a class
// is cyclic iff f'(1) is coprime to hat(f(1)).

#include <optional>
#include <span>
#include <vector>

#include "cyclav/arith.hpp"
#include "cyclav/poly.hpp"

namespace cyclav {

// q = p^r. sqrt_q is set exactly when r is even.
struct FieldSize {
  Int p;
  unsigned r = 1;
  Int q;
  std::optional<Int> sqrt_q;

  static FieldSize make(const Int& p, unsigned r);

  bool operator==(const FieldSize& other) const { return p == other.p && r == other.r; }
};

// f(t) = t^{2g} + a_1 t^{2g-1} + ... + a_g t^g + a_{g-1} q t^{g-1} + ... + q^g.
//
// full_coeffs is stored leading coefficient first: full_coeffs[i] is the
// coefficient of t^{2g-i}. For g = 1 the Frobenius trace is -a_1.
class IsogenyClass {
 public:
  IsogenyClass(unsigned g, FieldSize field, std::vector<Int> coeffs);

  unsigned g() const { return g_; }
  const FieldSize& field() const { return field_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const std::vector<Int>& full_coeffs() const { return full_; }

  // Ascending-order copy for the polynomial helpers.
  poly::IntPoly ascending() const;

 private:
  unsigned g_;
  FieldSize field_;
  std::vector<Int> coeffs_;
  std::vector<Int> full_;
};

// Palindromic extension of (a_1..a_g) over q, leading coefficient first.
std::vector<Int> weil_full_coefficients(unsigned g, const Int& q, std::span<const Int> coeffs);

IsogenyClass make_class(unsigned g, const Int& p, unsigned r, std::vector<Int> coeffs);

Int eval_at_one(const IsogenyClass& c);
Int derivative_at_one(const IsogenyClass& c);

struct CyclicityVerdict {
  Int N;            // f(1), the number of rational points
  Int dN;           // f'(1)
  Int hatN;
  Int witness_gcd;  // gcd(hatN, |dN|)
  bool cyclic = false;
};

// Throws InvalidArgument when f(1) <= 0 (no such class exists).
CyclicityVerdict is_cyclic_class(const IsogenyClass& c);
CyclicityVerdict cyclicity_from_values(const Int& N, const Int& dN);

// Product of two classes over the same field; dimension g1 + g2.
IsogenyClass product_class(const IsogenyClass& c1, const IsogenyClass& c2);

// g f(1) - f'(1) for f = f_{X,(a_vec, z)}; independent of z.
Int h_value(unsigned g, const Int& X, std::span<const Int> a_vec, const Int& z = 0);

}  // namespace cyclav
