#pragma once

// Membership tests: does a coefficient vector define an isogeny class over
// F_q? Exact for g = 1 (Waterhouse) and g = 2 (Rueck's conditions for
// simple-field classes, plus the ordinary p-not-dividing-b classes);
// a necessary numeric root-modulus test for g >= 3.

#include <string>
#include <string_view>

#include "cyclav/arith.hpp"
#include "cyclav/poly.hpp"
#include "cyclav/weil.hpp"

namespace cyclav {

// Which surface classes count as members for g = 2.
enum class Mode { RueckField, Ordinary, Either };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

enum class Certainty { Exact, NecessaryOnly };
std::string_view to_string(Certainty certainty);

struct ValidityVerdict {
  bool valid = false;
  Certainty certainty = Certainty::Exact;
  std::string reason;
  bool ordinary = false;
};

enum class RueckCase { A, B, C, None };
std::string_view to_string(RueckCase c);

struct RueckReport {
  bool bounds_ok = false;       // condition 1, strict inequalities
  Int delta;                    // a^2 - 4b + 8q
  bool delta_nonsquare = false; // condition 2
  RueckCase case3 = RueckCase::None;
  bool case3_ok = false;
  bool valid = false;
};

struct SurfaceValidity {
  ValidityVerdict verdict;
  RueckReport rueck;
};

// p does not divide the middle coefficient a_g.
bool is_ordinary(const IsogenyClass& c);

ValidityVerdict validate_g1(const FieldSize& field, const Int& a);

// z is a square in Z_p.
bool padic_is_square(const Int& z, const Int& p);

// f has a root in Z_p. Works on the squarefree part when disc(f) = 0.
bool zp_has_root(const poly::IntPoly& monic, const Int& p);
bool padic_has_root(const IsogenyClass& c);

// |a| < 4 sqrt(q) and 2|a| sqrt(q) - 2q < b < a^2/4 + 2q, in exact arithmetic.
bool rueck_bounds(const Int& q, const Int& a, const Int& b);

RueckReport rueck_report(const FieldSize& field, const Int& a, const Int& b);
SurfaceValidity validate_g2(const FieldSize& field, const Int& a, const Int& b, Mode mode);

// Every complex root of f has modulus sqrt(q) within the relative tolerance.
bool weil_roots_on_circle(const IsogenyClass& c, long double rel_tol = 1e-9L);

ValidityVerdict validate(const IsogenyClass& c, Mode mode = Mode::Either);

// The membership test actually used for a class of dimension g.
std::string membership_label(unsigned g, Mode mode);

}  // namespace cyclav
