#include "cyclav/oracle.hpp"

#include <numeric>
#include <optional>

#include "cyclav/error.hpp"
#include "cyclav/parallel.hpp"

namespace cyclav {
namespace {

using u64 = std::uint64_t;

Int coefficient_from_trace_g1(std::int64_t trace) { return Int(static_cast<long>(-trace)); }

struct Point {
  u64 x = 0;
  u64 y = 0;
  bool inf = true;
};

// Affine arithmetic on y^2 = x^3 + A x + B over F_p with small p.
class Curve {
 public:
  Curve(u64 p, u64 A, const std::vector<u64>& inv) : p_(p), A_(A), inv_(inv) {}

  Point add(const Point& P, const Point& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    u64 lambda;
    if (P.x == Q.x) {
      if ((P.y + Q.y) % p_ == 0) return {};
      lambda = (3 * P.x % p_ * P.x % p_ + A_) % p_ * inv_[2 * P.y % p_] % p_;
    } else {
      lambda = (Q.y + p_ - P.y) % p_ * inv_[(Q.x + p_ - P.x) % p_] % p_;
    }
    const u64 x = (lambda * lambda % p_ + 2 * p_ - P.x - Q.x) % p_;
    const u64 y = (lambda * ((P.x + p_ - x) % p_) % p_ + p_ - P.y) % p_;
    return {x, y, false};
  }

  Point mul(Point P, u64 k) const {
    Point R;
    while (k) {
      if (k & 1) R = add(R, P);
      P = add(P, P);
      k >>= 1;
    }
    return R;
  }

 private:
  u64 p_;
  u64 A_;
  const std::vector<u64>& inv_;
};

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 point_order(const Curve& E, const Point& P, u64 N, const std::vector<u64>& primes) {
  u64 m = N;
  for (u64 ell : primes) {
    while (m % ell == 0 && E.mul(P, m / ell).inf) m /= ell;
  }
  return m;
}

struct FieldTables {
  u64 p;
  std::vector<u64> inv;
  std::vector<std::vector<u64>> roots;  // roots[v] = square roots of v
};

FieldTables make_tables(u64 p) {
  FieldTables t{p, std::vector<u64>(p, 0), std::vector<std::vector<u64>>(p)};
  for (u64 y = 0; y < p; ++y) t.roots[y * y % p].push_back(y);
  for (u64 x = 1; x < p; ++x) {
    for (u64 y = 1; y < p; ++y) {
      if (x * y % p == 1) {
        t.inv[x] = y;
        break;
      }
    }
  }
  return t;
}

CurveRecord analyse(const FieldTables& t, u64 A, u64 B) {
  const u64 p = t.p;
  std::vector<Point> points;
  for (u64 x = 0; x < p; ++x) {
    const u64 rhs = (x * x % p * x + A * x + B) % p;
    for (u64 y : t.roots[rhs]) points.push_back({x, y, false});
  }
  CurveRecord rec;
  rec.p = p;
  rec.A = A;
  rec.B = B;
  rec.N = points.size() + 1;
  rec.trace = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(rec.N);
  const Curve E(p, A, t.inv);
  const std::vector<u64> primes = prime_factors(rec.N);
  u64 exponent = 1;
  for (const Point& P : points) {
    exponent = std::lcm(exponent, point_order(E, P, rec.N, primes));
    if (exponent == rec.N) break;
  }
  rec.shape = {rec.N / exponent, exponent};
  return rec;
}

void check_prime(u64 p) {
  if (p < kOracleMinPrime || p > kOracleMaxPrime) {
    throw InvalidArgument("oracle: p must lie in [" + std::to_string(kOracleMinPrime) + ", " +
                          std::to_string(kOracleMaxPrime) + "]");
  }
  if (!is_prime(Int(static_cast<unsigned long>(p)))) throw InvalidArgument("oracle: p must be prime");
}

}  // namespace

std::vector<CurveRecord> enumerate_curves(u64 p, unsigned jobs) {
  check_prime(p);
  const FieldTables tables = make_tables(p);
  auto rows = parallel_map(p, jobs, [&](std::size_t A) {
    std::vector<CurveRecord> row;
    for (u64 B = 0; B < p; ++B) {
      const u64 disc = (4 * (A * A % p) % p * A + 27 * (B * B % p)) % p;
      if (disc == 0) continue;
      CurveRecord rec = analyse(tables, A, B);
      // Sanity: Hasse and d1 | p - 1.
      if (static_cast<u64>(rec.trace * rec.trace) > 4 * p || (p - 1) % rec.shape.d1 != 0 ||
          rec.shape.d2 % rec.shape.d1 != 0) {
        throw ConsistencyError("oracle: impossible group data for y^2 = x^3 + " + std::to_string(A) + "x + " +
                               std::to_string(B) + " over F_" + std::to_string(p));
      }
      row.push_back(rec);
    }
    return row;
  });
  std::vector<CurveRecord> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

ClassReport class_report(const std::vector<CurveRecord>& curves, u64 p) {
  std::map<std::int64_t, TraceClassRow> rows;
  for (const CurveRecord& c : curves) {
    TraceClassRow& row = rows[c.trace];
    row.trace = c.trace;
    ++row.curves;
    if (c.shape.cyclic()) ++row.cyclic_curves;
    ++row.shapes[c.shape];
  }
  ClassReport report;
  report.p = p;
  const FieldSize field = FieldSize::make(Int(static_cast<unsigned long>(p)), 1);
  for (auto& [trace, row] : rows) {
    const IsogenyClass cls(1, field, {coefficient_from_trace_g1(trace)});
    row.predicted = is_cyclic_class(cls);
    if (!row.match()) ++report.mismatches;
    report.total_curves += row.curves;
    report.rows.push_back(std::move(row));
  }
  report.total_ok = report.total_curves == p * p - p;
  return report;
}

ClassReport class_report(u64 p, unsigned jobs) { return class_report(enumerate_curves(p, jobs), p); }

bool product_group_cyclic(const GroupShape& x, const GroupShape& y) {
  return x.d1 == 1 && y.d1 == 1 && std::gcd(x.d2, y.d2) == 1;
}

ProductReport product_consistency(const std::vector<CurveRecord>& curves, u64 p, std::int64_t t1, std::int64_t t2) {
  std::map<GroupShape, u64> s1, s2;
  for (const CurveRecord& c : curves) {
    if (c.trace == t1) ++s1[c.shape];
    if (c.trace == t2) ++s2[c.shape];
  }
  if (s1.empty() || s2.empty()) throw InvalidArgument("product_consistency: empty trace class");
  ProductReport r;
  r.p = p;
  r.t1 = t1;
  r.t2 = t2;
  const FieldSize field = FieldSize::make(Int(static_cast<unsigned long>(p)), 1);
  const IsogenyClass prod = product_class(IsogenyClass(1, field, {coefficient_from_trace_g1(t1)}),
                                          IsogenyClass(1, field, {coefficient_from_trace_g1(t2)}));
  r.predicted = is_cyclic_class(prod);
  for (const auto& [x, nx] : s1) {
    for (const auto& [y, ny] : s2) {
      r.pairs += nx * ny;
      if (product_group_cyclic(x, y)) r.cyclic_pairs += nx * ny;
    }
  }
  if (r.predicted.cyclic) r.consistent = r.cyclic_pairs == r.pairs;
  else r.converse_witnessed = r.cyclic_pairs < r.pairs;
  return r;
}

ProductReport product_consistency(u64 p, std::int64_t t1, std::int64_t t2, unsigned jobs) {
  return product_consistency(enumerate_curves(p, jobs), p, t1, t2);
}

Rational unit_translate_count(const Int& t, const Int& s, u64 n) {
  if (n == 0) throw InvalidArgument("unit_translate_count: n must be positive");
  const Int m(static_cast<unsigned long>(n));
  u64 units = 0, good = 0;
  for (u64 x = 0; x < n; ++x) {
    const Int X(static_cast<unsigned long>(x));
    if (gcd(X, m) != 1) continue;
    ++units;
    if (gcd(Int(t * X + s), m) == 1) ++good;
  }
  Rational r(Int(static_cast<unsigned long>(good)), Int(static_cast<unsigned long>(units)));
  r.canonicalize();
  return r;
}

}  // namespace cyclav
