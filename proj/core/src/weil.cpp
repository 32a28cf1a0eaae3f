#include "cyclav/weil.hpp"

#include "cyclav/error.hpp"

namespace cyclav {

FieldSize FieldSize::make(const Int& p, unsigned r) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + to_string(p) + " is not prime");
  if (r < 1) throw InvalidArgument("field degree r must be >= 1");
  FieldSize f;
  f.p = p;
  f.r = r;
  f.q = ipow(p, r);
  if (r % 2 == 0) f.sqrt_q = ipow(p, r / 2);
  return f;
}

std::vector<Int> weil_full_coefficients(unsigned g, const Int& q, std::span<const Int> coeffs) {
  if (coeffs.size() != g) throw InvalidArgument("coefficient vector length must equal g");
  std::vector<Int> a;
  a.reserve(g + 1);
  a.emplace_back(1);
  a.insert(a.end(), coeffs.begin(), coeffs.end());
  std::vector<Int> full(2 * g + 1);
  for (unsigned i = 0; i <= g; ++i) full[i] = a[i];
  Int qpow = 1;
  for (unsigned j = 1; j <= g; ++j) {
    qpow *= q;
    full[g + j] = a[g - j] * qpow;
  }
  return full;
}

IsogenyClass::IsogenyClass(unsigned g, FieldSize field, std::vector<Int> coeffs)
    : g_(g), field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (g_ < 1) throw InvalidArgument("dimension g must be >= 1");
  full_ = weil_full_coefficients(g_, field_.q, coeffs_);
}

poly::IntPoly IsogenyClass::ascending() const { return {full_.rbegin(), full_.rend()}; }

IsogenyClass make_class(unsigned g, const Int& p, unsigned r, std::vector<Int> coeffs) {
  if (coeffs.size() != g) {
    throw InvalidArgument("expected " + std::to_string(g) + " coefficients, got " +
                          std::to_string(coeffs.size()));
  }
  return IsogenyClass(g, FieldSize::make(p, r), std::move(coeffs));
}

Int eval_at_one(const IsogenyClass& c) {
  Int sum = 0;
  for (const Int& x : c.full_coeffs()) sum += x;
  return sum;
}

Int derivative_at_one(const IsogenyClass& c) {
  const auto& full = c.full_coeffs();
  const unsigned long top = full.size() - 1;
  Int sum = 0;
  for (unsigned long i = 0; i < top; ++i) sum += full[i] * (top - i);
  return sum;
}

CyclicityVerdict cyclicity_from_values(const Int& N, const Int& dN) {
  if (N <= 0) throw InvalidArgument("f(1) = " + to_string(N) + " <= 0: not an isogeny class");
  CyclicityVerdict v;
  v.N = N;
  v.dN = dN;
  v.hatN = hat(N);
  // gcd(hatN, 0) = hatN, so f'(1) = 0 is cyclic only for squarefree N.
  v.witness_gcd = gcd(v.hatN, abs(dN));
  v.cyclic = v.witness_gcd == 1;
  return v;
}

CyclicityVerdict is_cyclic_class(const IsogenyClass& c) {
  return cyclicity_from_values(eval_at_one(c), derivative_at_one(c));
}

IsogenyClass product_class(const IsogenyClass& c1, const IsogenyClass& c2) {
  if (!(c1.field() == c2.field())) throw InvalidArgument("product_class: classes live over different fields");
  poly::IntPoly prod = poly::multiply(c1.ascending(), c2.ascending());
  const unsigned g = c1.g() + c2.g();
  std::vector<Int> coeffs(g);
  // Descending index i is ascending index 2g - i.
  for (unsigned i = 1; i <= g; ++i) coeffs[i - 1] = prod[2 * g - i];
  IsogenyClass out(g, c1.field(), std::move(coeffs));
  poly::IntPoly check = out.ascending();
  if (check != prod) throw ConsistencyError("product_class: product is not palindromic");
  return out;
}

Int h_value(unsigned g, const Int& X, std::span<const Int> a_vec, const Int& z) {
  if (g < 1) throw InvalidArgument("h_value: g must be >= 1");
  if (a_vec.size() + 1 != g) throw InvalidArgument("h_value: a_vec must have length g - 1");
  std::vector<Int> coeffs(a_vec.begin(), a_vec.end());
  coeffs.push_back(z);
  auto full = weil_full_coefficients(g, X, coeffs);
  const unsigned long top = full.size() - 1;
  Int f1 = 0, df1 = 0;
  for (unsigned long i = 0; i <= top; ++i) {
    f1 += full[i];
    df1 += full[i] * (top - i);
  }
  return Int(g * f1 - df1);
}

}  // namespace cyclav
