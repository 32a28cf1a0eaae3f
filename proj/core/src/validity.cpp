#include "cyclav/validity.hpp"

#include <cmath>

#include "cyclav/error.hpp"

namespace cyclav {
namespace {

bool divides(const Int& d, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

// Valuation with v(0) = "infinity".
unsigned long val_or_inf(const Int& n, const Int& p) {
  if (n == 0) return static_cast<unsigned long>(-1) / 4;
  return valuation(n, p);
}

Int mod_positive(const Int& n, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Roots of g modulo p among 0..p-1.
std::vector<Int> roots_mod_p(const poly::IntPoly& g, const Int& p) {
  std::vector<Int> reduced;
  reduced.reserve(g.size());
  for (const Int& c : g) reduced.push_back(mod_positive(c, p));
  std::vector<Int> out;
  Int acc;
  for (Int x = 0; x < p; ++x) {
    acc = 0;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
      acc = acc * x + *it;
      mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), p.get_mpz_t());
    }
    if (acc == 0) out.push_back(x);
  }
  return out;
}

// Search for t in Z_p with g(t) = 0. g is not identically zero mod p.
bool zp_search(const poly::IntPoly& g, const Int& p, int depth, int max_depth) {
  if (depth > max_depth) throw ConsistencyError("zp_has_root: lifting depth exceeded the discriminant bound");
  const poly::IntPoly dg = poly::derivative(g);
  for (const Int& x : roots_mod_p(g, p)) {
    if (!divides(p, poly::eval(dg, x))) return true;  // simple root: Hensel lifts it
    if (poly::eval(g, x) == 0) return true;
    // g(x + p t) = p^c h(t) with h not identically zero mod p.
    poly::IntPoly h = poly::taylor_shift(g, x);
    Int scale = 1;
    for (auto& c : h) {
      c *= scale;
      scale *= p;
    }
    unsigned long content = static_cast<unsigned long>(-1);
    for (const Int& c : h) {
      if (c != 0) content = std::min<unsigned long>(content, valuation(c, p));
    }
    const Int divisor = ipow(p, content);
    for (auto& c : h) c /= divisor;
    poly::trim(h);
    if (poly::degree(h) < 1) continue;
    if (zp_search(h, p, depth + 1, max_depth)) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::RueckField: return "rueck-field";
    case Mode::Ordinary: return "ordinary";
    case Mode::Either: return "either";
  }
  return "either";
}

Mode parse_mode(std::string_view text) {
  if (text == "rueck-field") return Mode::RueckField;
  if (text == "ordinary") return Mode::Ordinary;
  if (text == "either") return Mode::Either;
  throw InvalidArgument("unknown mode '" + std::string(text) + "' (expected rueck-field, ordinary or either)");
}

std::string_view to_string(Certainty certainty) {
  return certainty == Certainty::Exact ? "exact" : "necessary-only";
}

std::string_view to_string(RueckCase c) {
  switch (c) {
    case RueckCase::A: return "3a";
    case RueckCase::B: return "3b";
    case RueckCase::C: return "3c";
    case RueckCase::None: return "none";
  }
  return "none";
}

std::string membership_label(unsigned g, Mode mode) {
  if (g == 1) return "waterhouse";
  if (g == 2) return std::string(to_string(mode));
  return "weil-roots";
}

bool is_ordinary(const IsogenyClass& c) {
  return !divides(c.field().p, c.coeffs().back());
}

ValidityVerdict validate_g1(const FieldSize& field, const Int& a) {
  ValidityVerdict v;
  v.certainty = Certainty::Exact;
  const Int& p = field.p;
  const unsigned r = field.r;
  v.ordinary = !divides(p, a);
  if (a * a > 4 * field.q) {
    v.reason = "violates the Hasse bound a^2 <= 4q";
    return v;
  }
  const Int abs_a = abs(a);
  const bool even = r % 2 == 0;
  if (v.ordinary) {
    v.valid = true;
    v.reason = "ordinary: gcd(a, p) = 1";
  } else if (even && abs_a == 2 * *field.sqrt_q) {
    v.valid = true;
    v.reason = "supersingular: r even, a = +-2 sqrt(q)";
  } else if (even && p % 3 != 1 && abs_a == *field.sqrt_q) {
    v.valid = true;
    v.reason = "supersingular: r even, p != 1 mod 3, a = +-sqrt(q)";
  } else if (!even && (p == 2 || p == 3) && abs_a == ipow(p, (r + 1) / 2)) {
    v.valid = true;
    v.reason = "supersingular: r odd, p in {2,3}, a = +-p^((r+1)/2)";
  } else if (!even && a == 0) {
    v.valid = true;
    v.reason = "supersingular: r odd, a = 0";
  } else if (even && p % 4 != 1 && a == 0) {
    v.valid = true;
    v.reason = "supersingular: r even, p != 1 mod 4, a = 0";
  } else {
    v.reason = "p divides a and no supersingular case applies";
  }
  return v;
}

bool padic_is_square(const Int& z, const Int& p) {
  if (z == 0) return true;
  if (!is_prime(p)) throw InvalidArgument("padic_is_square: p must be prime");
  Int unit;
  const unsigned long v = mpz_remove(unit.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  if (v % 2 != 0) return false;
  if (p == 2) return mod_positive(unit, Int(8)) == 1;
  return mpz_legendre(mod_positive(unit, p).get_mpz_t(), p.get_mpz_t()) == 1;
}

bool zp_has_root(const poly::IntPoly& monic, const Int& p) {
  if (!is_prime(p)) throw InvalidArgument("zp_has_root: p must be prime");
  poly::IntPoly f = monic;
  poly::trim(f);
  if (poly::degree(f) < 1) throw InvalidArgument("zp_has_root: constant polynomial");
  Int disc = poly::discriminant(f);
  if (disc == 0) {
    f = poly::squarefree_part(f);
    if (poly::degree(f) < 1) return false;
    disc = poly::discriminant(f);
  }
  if (poly::degree(f) == 1) return true;
  // Squarefree input descends finitely; the cap only guards against runaway.
  const int bound = 4 * static_cast<int>(valuation(disc, p)) + 8;
  return zp_search(f, p, 0, bound);
}

bool padic_has_root(const IsogenyClass& c) { return zp_has_root(c.ascending(), c.field().p); }

bool rueck_bounds(const Int& q, const Int& a, const Int& b) {
  const Int a2 = a * a;
  if (!(a2 < 16 * q)) return false;
  const Int big_b = b + 2 * q;
  if (big_b <= 0) return false;
  if (!(4 * a2 * q < big_b * big_b)) return false;
  return 4 * b < a2 + 8 * q;
}

RueckReport rueck_report(const FieldSize& field, const Int& a, const Int& b) {
  RueckReport rep;
  const Int& q = field.q;
  const Int& p = field.p;
  const unsigned long r = field.r;
  rep.bounds_ok = rueck_bounds(q, a, b);
  rep.delta = a * a - 4 * b + 8 * q;
  rep.delta_nonsquare = !is_square_integer(rep.delta);

  const unsigned long va = val_or_inf(a, p);
  const unsigned long vb = val_or_inf(b, p);
  if (va == 0 && 2 * vb >= r) {
    rep.case3 = RueckCase::A;
    const Int w = (b + 2 * q) * (b + 2 * q) - 4 * q * a * a;
    rep.case3_ok = !padic_is_square(w, p);
  } else if (vb == 0) {
    rep.case3 = RueckCase::B;
    rep.case3_ok = true;
  } else if (2 * va >= r && vb >= r) {
    rep.case3 = RueckCase::C;
    // Only meaningful inside the bounds; outside them the class is rejected
    // by condition 1 anyway and we skip the root search.
    if (rep.bounds_ok) {
      const std::vector<Int> coeffs{a, b};
      const auto full = weil_full_coefficients(2, q, coeffs);
      rep.case3_ok = !zp_has_root(poly::IntPoly(full.rbegin(), full.rend()), p);
    }
  }
  rep.valid = rep.bounds_ok && rep.delta_nonsquare && rep.case3_ok;
  return rep;
}

SurfaceValidity validate_g2(const FieldSize& field, const Int& a, const Int& b, Mode mode) {
  SurfaceValidity out;
  out.rueck = rueck_report(field, a, b);
  const bool ordinary = !divides(field.p, b);
  const bool ordinary_ok = out.rueck.bounds_ok && ordinary;
  auto& v = out.verdict;
  v.certainty = Certainty::Exact;
  v.ordinary = ordinary;
  switch (mode) {
    case Mode::RueckField: v.valid = out.rueck.valid; break;
    case Mode::Ordinary: v.valid = ordinary_ok; break;
    case Mode::Either: v.valid = out.rueck.valid || ordinary_ok; break;
  }
  if (!out.rueck.bounds_ok) {
    v.reason = "condition 1 fails: bounds on a, b";
  } else if (v.valid) {
    if (out.rueck.valid && mode != Mode::Ordinary) {
      v.reason = "simple-field class, case " + std::string(to_string(out.rueck.case3));
    } else {
      v.reason = "ordinary: p does not divide b";
    }
  } else if (mode == Mode::Ordinary) {
    v.reason = "p divides b";
  } else if (!out.rueck.delta_nonsquare) {
    v.reason = "delta = a^2 - 4b + 8q is a square";
  } else {
    v.reason = "condition 3 fails (case " + std::string(to_string(out.rueck.case3)) + ")";
  }
  return out;
}

bool weil_roots_on_circle(const IsogenyClass& c, long double rel_tol) {
  poly::IntPoly f = poly::squarefree_part(c.ascending());
  const long double sqrt_q = std::sqrt(static_cast<long double>(c.field().q.get_d()));
  for (const auto& z : poly::numeric_roots(f)) {
    if (std::fabs(std::abs(z) / sqrt_q - 1.0L) > rel_tol) return false;
  }
  return true;
}

ValidityVerdict validate(const IsogenyClass& c, Mode mode) {
  if (c.g() == 1) return validate_g1(c.field(), c.coeffs()[0]);
  if (c.g() == 2) return validate_g2(c.field(), c.coeffs()[0], c.coeffs()[1], mode).verdict;
  ValidityVerdict v;
  v.certainty = Certainty::NecessaryOnly;
  v.ordinary = is_ordinary(c);
  v.valid = weil_roots_on_circle(c);
  v.reason = v.valid ? "all complex roots have modulus sqrt(q)" : "a complex root is off the circle |t| = sqrt(q)";
  return v;
}

}  // namespace cyclav
