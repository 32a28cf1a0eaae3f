#include "cyclav/surfaces.hpp"

#include <algorithm>
#include <tuple>

#include "cyclav/enumerate.hpp"
#include "cyclav/error.hpp"
#include "cyclav/parallel.hpp"

namespace cyclav {
namespace {

Int mod(const Int& n, long m) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

}  // namespace

Int coefficient_from_trace(const Int& trace) { return -trace; }
Int trace_from_coefficient(const Int& a) { return -a; }

ClosedFormMax closed_form_max(const Int& x) { return {4 * x - 3, 6 * x * x - 6 * x + 1}; }

MaximalFieldResult maximal_field_class(const FieldSize& field, unsigned jobs) {
  if (!field.sqrt_q) throw InvalidArgument("maximal_field_class: r must be even");
  const Int& q = field.q;
  const Int a_lim = isqrt(Int(16 * q - 1));  // a^2 < 16q
  const long span = Int(2 * a_lim + 1).get_si();

  struct Best {
    bool found = false;
    Int N, a, b;
    std::size_t candidates = 0;
  };
  auto per_a = parallel_map(static_cast<std::size_t>(span), jobs, [&](std::size_t k) {
    Best best;
    const Int a = -a_lim + static_cast<long>(k);
    const std::vector<Int> a_vec{a};
    const CandidateRange range = candidate_range(2, a_vec, field);
    for (Int b = range.lo; b <= range.hi; ++b) {
      if (!rueck_report(field, a, b).valid) continue;
      ++best.candidates;
      const Int N = 1 + a * (q + 1) + b + q * q;
      if (!best.found || std::tie(N, b) > std::tie(best.N, best.b)) best = {true, N, a, b, best.candidates};
    }
    return best;
  });

  Best best;
  std::size_t total = 0;
  for (const Best& cand : per_a) {
    total += cand.candidates;
    if (!cand.found) continue;
    if (!best.found || std::tie(cand.N, cand.a, cand.b) > std::tie(best.N, best.a, best.b)) best = cand;
  }
  if (!best.found) throw ConsistencyError("maximal_field_class: no Rueck-field class found");

  MaximalFieldResult out{field, best.a, best.b, {}, false, rueck_report(field, best.a, best.b), total};
  const IsogenyClass c(2, field, {best.a, best.b});
  out.verdict = is_cyclic_class(c);
  out.ordinary = is_ordinary(c);
  const ClosedFormMax expect = closed_form_max(*field.sqrt_q);
  if (expect.a != best.a || expect.b != best.b) {
    throw ConsistencyError("maximal_field_class: search found (" + to_string(best.a) + ", " + to_string(best.b) +
                           ") but the closed form gives (" + to_string(expect.a) + ", " + to_string(expect.b) + ")");
  }
  return out;
}

Int surface_N(const Int& x) { return (((x + 4) * x + 3) * x - 2) * x - 1; }
Int surface_j(const Int& x) { return (4 * x + 9) * x * x - 3; }

Int bezout_identity_check(const Int& x) {
  const Int u = ((14 * x + 49) * x + 28) * x - 14;
  const Int v = (56 * x + 98) * x - 7;
  return u * surface_j(x) - v * surface_N(x);
}

ResidueTables residue_tables_check() {
  ResidueTables t;
  for (long x = 0; x < 5; ++x) t.j_mod5.push_back(mod(surface_j(x), 5));
  for (long x = 0; x < 25; ++x) t.N_mod25.push_back(mod(surface_N(x), 25));
  for (long x = 0; x < 7; ++x) t.j_mod7.push_back(mod(surface_j(x), 7));

  t.j_mod5_ok = std::equal(t.j_mod5.begin(), t.j_mod5.end(), kJMod5.begin(), kJMod5.end(),
                           [](const Int& got, long want) { return got == want; });
  // The listed residues are exactly those with 5 | j(x); N must be 5 there.
  t.N_mod25_ok = true;
  for (long x = 0; x < 25; ++x) {
    const bool listed = std::find(kNFiveResidues.begin(), kNFiveResidues.end(), x) != kNFiveResidues.end();
    if (listed != (t.j_mod5[x % 5] == 0)) t.N_mod25_ok = false;
    if (listed && t.N_mod25[x] != 5) t.N_mod25_ok = false;
  }
  t.j_mod7_ok = std::equal(t.j_mod7.begin(), t.j_mod7.end(), kJMod7.begin(), kJMod7.end(),
                           [](const Int& got, long want) { return got == want; });
  for (long v : kJMod7) t.j_mod7_reference.emplace_back(v);
  t.conclusion_ok = true;
  for (long ell : {5L, 7L}) {
    for (long x = 0; x < ell * ell; ++x) {
      if (mod(surface_j(x), ell) == 0 && mod(surface_N(x), ell * ell) == 0) t.conclusion_ok = false;
    }
  }
  return t;
}

std::optional<bool> NearMaxEntry::agrees() const {
  if (!verdict || !claimed_cyclic) return std::nullopt;
  return verdict->cyclic == *claimed_cyclic;
}

NearMaxReport nearmax_products(const FieldSize& field) {
  if (!field.sqrt_q) throw InvalidArgument("nearmax_products: r must be even");
  const Int x = *field.sqrt_q;
  NearMaxReport report{field, {}, false, {}};

  struct Factor {
    std::string label;
    Int a;
    bool valid;
    std::optional<bool> claim;
  };
  const bool mod3_claim = mod(field.q, 3) != 2;
  std::vector<Factor> factors;
  for (long k = 0; k < 3; ++k) {
    const Int trace = 2 * x - k;
    const Int a = coefficient_from_trace(trace);
    std::optional<bool> claim;
    if (k == 0) claim = false;
    if (k == 1) claim = mod3_claim;
    if (k == 2) claim = true;
    factors.push_back({k == 0 ? "E_max" : "E_max-" + std::to_string(k), a, validate_g1(field, a).valid, claim});
  }

  for (const Factor& f : factors) {
    NearMaxEntry e;
    e.label = f.label;
    e.g = 1;
    e.coeffs = {f.a};
    e.valid = f.valid;
    e.claimed_cyclic = f.claim;
    if (f.valid) {
      e.verdict = is_cyclic_class(IsogenyClass(1, field, e.coeffs));
    } else {
      e.note = "trace " + to_string(trace_from_coefficient(f.a)) + " is not a valid elliptic trace over F_" + to_string(field.q);
    }
    report.entries.push_back(std::move(e));
  }

  // Products: anything containing E_max inherits its claim; E_max-1 x E_max-2
  // follows E_max-1; E_max-1 squared carries no claim.
  const std::vector<std::tuple<int, int, std::optional<bool>>> pairs{
      {0, 0, false}, {0, 1, false}, {0, 2, false}, {1, 1, std::nullopt}, {1, 2, mod3_claim}};
  for (const auto& [i, j, claim] : pairs) {
    NearMaxEntry e;
    e.label = i == j ? factors[i].label + "^2" : factors[i].label + " x " + factors[j].label;
    e.g = 2;
    e.valid = factors[i].valid && factors[j].valid;
    e.claimed_cyclic = claim;
    if (e.valid) {
      const IsogenyClass prod = product_class(IsogenyClass(1, field, {factors[i].a}), IsogenyClass(1, field, {factors[j].a}));
      e.coeffs = prod.coeffs();
      e.verdict = is_cyclic_class(prod);
    } else {
      e.note = "skipped: a factor trace is not valid over F_" + to_string(field.q);
    }
    report.entries.push_back(std::move(e));
  }

  if (factors[1].valid && factors[2].valid) {
    const Int n1 = eval_at_one(IsogenyClass(1, field, {factors[1].a}));
    const Int n2 = eval_at_one(IsogenyClass(1, field, {factors[2].a}));
    report.cardinalities_coprime = gcd(n1, n2) == 1;
  }
  for (const NearMaxEntry& e : report.entries) {
    if (e.agrees() == false) {
      report.disagreements.push_back(e.label + ": claimed " + (*e.claimed_cyclic ? "cyclic" : "non-cyclic") +
                                     ", computed " + (e.verdict->cyclic ? "cyclic" : "non-cyclic") +
                                     " (N = " + to_string(e.verdict->N) + ", f'(1) = " + to_string(e.verdict->dN) +
                                     ", witness gcd = " + to_string(e.verdict->witness_gcd) + ")");
    }
  }
  return report;
}

std::string_view to_string(FamilyKind kind) { return kind == FamilyKind::Prop6 ? "prop6" : "prop7"; }

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "prop6") return FamilyKind::Prop6;
  if (text == "prop7") return FamilyKind::Prop7;
  throw InvalidArgument("unknown family '" + std::string(text) + "' (expected prop6 or prop7)");
}

namespace {

// prod_{ell | n} (ell - 1)
Int product_ell_minus_one(const Int& n) {
  Int out = 1;
  for (const Int& ell : factorize(n).primes()) out *= ell - 1;
  return out;
}

unsigned checked_step(const Int& s) {
  if (!s.fits_uint_p() || s == 0) throw InvalidArgument("family step s out of range");
  return static_cast<unsigned>(s.get_ui());
}

}  // namespace

FamilySpec check_family_spec(FamilySpec spec) {
  if (!is_prime(spec.p)) throw InvalidArgument("family: p must be prime");
  if (spec.r < 1) throw InvalidArgument("family: r must be >= 1");
  if (spec.count < 1) throw InvalidArgument("family: count must be >= 1");
  const Int q = ipow(spec.p, spec.r);
  const Int& b = spec.b;
  Int derived;
  if (spec.kind == FamilyKind::Prop6) {
    if (q <= 4) throw InvalidArgument("prop6: requires q > 4");
    if (b % spec.p == 0) throw InvalidArgument("prop6: requires p not dividing b");
    // 8 sqrt(q) - 4q <= b  <=>  b + 4q >= 0 and 64q <= (b + 4q)^2
    const Int lhs = b + 4 * q;
    if (lhs < 0 || 64 * q > lhs * lhs) throw InvalidArgument("prop6: requires 8 sqrt(q) - 4q <= b");
    if (b > 4) throw InvalidArgument("prop6: requires b <= 4");
    const Int n0 = b - 3 - 2 * q + q * q;
    const Int n0p = 2 * (b - 4);
    if (gcd(n0, n0p) != 1) throw InvalidArgument("prop6: requires gcd(N0, N0') = 1");
    derived = product_ell_minus_one(n0p);
  } else {
    if (spec.p == 2) throw InvalidArgument("prop7: requires p odd");
    if (mod(b, 4) == 2) throw InvalidArgument("prop7: requires b != 2 mod 4");
    if (!(spec.p > b + 2)) throw InvalidArgument("prop7: requires p > b + 2");
    if (gcd(Int(q * q - 1), Int(b + 2)) != 1) throw InvalidArgument("prop7: requires gcd(p^(2r) - 1, b + 2) = 1");
    derived = product_ell_minus_one(b + 2);
  }
  const unsigned s = checked_step(derived);
  if (spec.s != 0 && spec.s != s) {
    throw InvalidArgument("family: step s must be " + std::to_string(s) + " for these parameters");
  }
  spec.s = s;
  return spec;
}

std::vector<FamilyMember> family_generate(const FamilySpec& raw) {
  const FamilySpec spec = check_family_spec(raw);
  std::vector<FamilyMember> out;
  const Int ps = ipow(spec.p, spec.s);
  std::optional<Int> prev_N;
  for (unsigned i = 0; i < spec.count; ++i) {
    const unsigned exponent = spec.r + i * spec.s;
    const FieldSize field = FieldSize::make(spec.p, exponent);
    const Int& qi = field.q;
    std::vector<Int> coeffs = spec.kind == FamilyKind::Prop6 ? std::vector<Int>{-4, spec.b + 2 * qi}
                                                              : std::vector<Int>{0, spec.b};
    IsogenyClass cls(2, field, coeffs);
    FamilyMember m{i, cls, is_cyclic_class(cls), false, false, false, true};
    m.valid = validate(cls, Mode::Ordinary).valid;
    m.ordinary = is_ordinary(cls);
    if (spec.kind == FamilyKind::Prop6) {
      m.invariant_ok = m.verdict.dN == 2 * (spec.b - 4);
      // f_{i+1}(1) - f_i(1) = (p^s - 1)[q_i^2 (p^s + 1) - 2 q_i]
      if (prev_N) {
        const Int q_prev = qi / ps;
        m.recurrence_ok = m.verdict.N - *prev_N == (ps - 1) * (q_prev * q_prev * (ps + 1) - 2 * q_prev);
      }
    } else {
      m.invariant_ok = m.verdict.N == qi * qi - 1 + (spec.b + 2) && m.verdict.dN == 2 * (spec.b + 2);
      if (prev_N) {
        const Int q_prev = qi / ps;
        m.recurrence_ok = m.verdict.N - *prev_N == q_prev * q_prev * (ps + 1) * (ps - 1);
      }
    }
    prev_N = m.verdict.N;
    if (!(m.valid && m.ordinary && m.verdict.cyclic && m.invariant_ok && m.recurrence_ok)) {
      throw ConsistencyError(std::string(to_string(spec.kind)) + " member " + std::to_string(i) + " over q = " +
                             to_string(qi) + " fails: valid=" + std::to_string(m.valid) +
                             " ordinary=" + std::to_string(m.ordinary) + " cyclic=" + std::to_string(m.verdict.cyclic) +
                             " invariant=" + std::to_string(m.invariant_ok) +
                             " recurrence=" + std::to_string(m.recurrence_ok));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace cyclav
