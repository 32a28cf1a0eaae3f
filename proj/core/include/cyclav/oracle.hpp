#pragma once

// Brute-force ground truth for g = 1: every short Weierstrass curve over
// F_p, its point count and group structure Z/d1 x Z/d2.

#include <cstdint>
#include <map>
#include <vector>

#include "cyclav/arith.hpp"
#include "cyclav/weil.hpp"

namespace cyclav {

struct GroupShape {
  std::uint64_t d1 = 1;
  std::uint64_t d2 = 1;

  bool cyclic() const { return d1 == 1; }
  bool operator==(const GroupShape&) const = default;
  auto operator<=>(const GroupShape&) const = default;
};

struct CurveRecord {
  std::uint64_t p = 0;
  std::uint64_t A = 0;
  std::uint64_t B = 0;
  std::uint64_t N = 0;
  std::int64_t trace = 0;
  GroupShape shape;
};

inline constexpr std::uint64_t kOracleMinPrime = 5;
inline constexpr std::uint64_t kOracleMaxPrime = 101;

// All (A, B) with 4A^3 + 27B^2 != 0, ordered by (A, B).
std::vector<CurveRecord> enumerate_curves(std::uint64_t p, unsigned jobs = 1);

struct TraceClassRow {
  std::int64_t trace = 0;
  std::uint64_t curves = 0;
  std::uint64_t cyclic_curves = 0;
  std::map<GroupShape, std::uint64_t> shapes;
  CyclicityVerdict predicted;

  bool observed_all_cyclic() const { return cyclic_curves == curves; }
  bool match() const { return observed_all_cyclic() == predicted.cyclic; }
};

struct ClassReport {
  std::uint64_t p = 0;
  std::vector<TraceClassRow> rows;  // ascending trace
  std::uint64_t total_curves = 0;
  std::uint64_t mismatches = 0;
  bool total_ok = false;  // total == p^2 - p
};

ClassReport class_report(std::uint64_t p, unsigned jobs = 1);
ClassReport class_report(const std::vector<CurveRecord>& curves, std::uint64_t p);

struct ProductReport {
  std::uint64_t p = 0;
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  CyclicityVerdict predicted;
  std::uint64_t pairs = 0;
  std::uint64_t cyclic_pairs = 0;
  // predicted cyclic implies every pair cyclic
  bool consistent = true;
  // predicted non-cyclic and some pair is non-cyclic (informational)
  bool converse_witnessed = false;
};

// Throws InvalidArgument when either trace class is empty.
ProductReport product_consistency(const std::vector<CurveRecord>& curves, std::uint64_t p, std::int64_t t1,
                                  std::int64_t t2);
ProductReport product_consistency(std::uint64_t p, std::int64_t t1, std::int64_t t2, unsigned jobs = 1);

// Shape of Z/d1 x Z/d2 x Z/e1 x Z/e2 is cyclic iff d1 = e1 = 1 and gcd(d2, e2) = 1.
bool product_group_cyclic(const GroupShape& x, const GroupShape& y);

// #{x in (Z/n)^*: t x + s in (Z/n)^*} / #(Z/n)^* by direct count.
Rational unit_translate_count(const Int& t, const Int& s, std::uint64_t n);

}  // namespace cyclav
