#include "cyclav/poly.hpp"

#include <cmath>
#include <numbers>

#include "cyclav/error.hpp"

namespace cyclav::poly {
namespace {

using QPoly = std::vector<Rational>;

void trim_q(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo nonzero g over Q.
QPoly rem_q(QPoly f, const QPoly& g) {
  trim_q(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    Rational factor = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] -= factor * g[i];
    f.pop_back();
    trim_q(f);
  }
  return f;
}

QPoly div_q(QPoly f, const QPoly& g) {
  trim_q(f);
  if (f.size() < g.size()) return {};
  QPoly quotient(f.size() - g.size() + 1);
  while (f.size() >= g.size()) {
    Rational factor = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= factor * g[i];
    f.pop_back();
    trim_q(f);
  }
  return quotient;
}

QPoly to_q(const IntPoly& f) {
  QPoly out;
  out.reserve(f.size());
  for (const Int& c : f) out.emplace_back(c);
  trim_q(out);
  return out;
}

QPoly gcd_q(QPoly a, QPoly b) {
  trim_q(a);
  trim_q(b);
  while (!b.empty()) {
    QPoly r = rem_q(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Fraction-free Gaussian elimination (Bareiss); exact determinant.
Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

int degree(const IntPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Int eval(const IntPoly& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly derivative(const IntPoly& f) {
  if (f.size() <= 1) return {};
  IntPoly out(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) out[k - 1] = f[k] * static_cast<unsigned long>(k);
  return out;
}

IntPoly multiply(const IntPoly& f, const IntPoly& g) {
  if (f.empty() || g.empty()) return {};
  IntPoly out(f.size() + g.size() - 1, Int(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

IntPoly taylor_shift(const IntPoly& f, const Int& shift) {
  // Horner in polynomial form: ((c_n)(t+s) + c_{n-1})(t+s) + ...
  IntPoly out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    IntPoly next(out.size() + 1, Int(0));
    for (std::size_t k = 0; k < out.size(); ++k) {
      next[k + 1] += out[k];
      next[k] += out[k] * shift;
    }
    next[0] += *it;
    out = std::move(next);
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& monic) {
  IntPoly f = monic;
  trim(f);
  if (f.empty() || f.back() != 1) throw InvalidArgument("squarefree_part: polynomial must be monic");
  QPoly fq = to_q(f);
  QPoly g = gcd_q(fq, to_q(derivative(f)));
  if (g.size() <= 1) return f;
  QPoly quotient = div_q(fq, g);
  IntPoly out;
  out.reserve(quotient.size());
  for (auto& c : quotient) {
    c.canonicalize();
    if (c.get_den() != 1) throw ConsistencyError("squarefree_part: non-integral factor of a monic polynomial");
    out.push_back(c.get_num());
  }
  return out;
}

Int discriminant(const IntPoly& input) {
  IntPoly f = input;
  trim(f);
  const int n = degree(f);
  if (n < 1) throw InvalidArgument("discriminant: degree must be positive");
  if (n == 1) return 1;
  IntPoly df = derivative(f);
  const int m = n - 1;
  const int size = n + m;
  // Sylvester matrix of f (m rows) and f' (n rows), descending coefficients.
  std::vector<std::vector<Int>> syl(size, std::vector<Int>(size, Int(0)));
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) syl[r][r + k] = f[n - k];
  }
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) syl[m + r][r + k] = df[m - k];
  }
  Int res = determinant(std::move(syl));
  return Int(res / f[n]);
}

std::vector<std::complex<long double>> numeric_roots(const IntPoly& input) {
  using C = std::complex<long double>;
  IntPoly f = input;
  trim(f);
  const int n = degree(f);
  if (n < 1) return {};
  std::vector<C> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = C(f[k].get_d(), 0.0L);
  const C lead = c[n];
  for (auto& x : c) x /= lead;

  auto horner = [&](C z, C& deriv) {
    C p = c[n];
    deriv = 0;
    for (int k = n - 1; k >= 0; --k) {
      deriv = deriv * z + p;
      p = p * z + c[k];
    }
    return p;
  };

  // Initial guesses on a circle of the Cauchy-like radius, slightly rotated.
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[k]), 1.0L / (n - k)));
  radius = std::max(radius, 1e-3L);
  std::vector<C> z(n);
  for (int k = 0; k < n; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0;
    for (int i = 0; i < n; ++i) {
      C deriv;
      C p = horner(z[i], deriv);
      if (p == C(0)) continue;
      C ratio = p / deriv;
      C sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      C step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (max_step < 1e-18L) break;
  }
  // Newton polish.
  for (auto& root : z) {
    for (int k = 0; k < 3; ++k) {
      C deriv;
      C p = horner(root, deriv);
      if (deriv == C(0)) break;
      root -= p / deriv;
    }
  }
  return z;
}

}  // namespace cyclav::poly
