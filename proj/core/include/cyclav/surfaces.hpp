#pragma once

// Abelian surfaces: the maximal simple-field class over square q, the
// N(x) / j(x) Bezout identity behind its cyclicity, products of the three
// near-maximal elliptic classes, and two infinite cyclic families.

#include <optional>
#include <string>
#include <vector>

#include "cyclav/arith.hpp"
#include "cyclav/validity.hpp"
#include "cyclav/weil.hpp"

namespace cyclav {

// For g = 1 the Weil coefficient is minus the Frobenius trace.
Int coefficient_from_trace(const Int& trace);
Int trace_from_coefficient(const Int& a);

// With x = sqrt(q): a = 4x - 3, b = 6x^2 - 6x + 1.
struct ClosedFormMax {
  Int a;
  Int b;
};
ClosedFormMax closed_form_max(const Int& x);

struct MaximalFieldResult {
  FieldSize field;
  Int a;
  Int b;
  CyclicityVerdict verdict;
  bool ordinary = false;
  RueckReport rueck;
  std::size_t candidates = 0;  // Rueck-field classes examined
};

// Exhaustive argmax of f(1) over Rueck-field classes. Ties prefer larger a,
// then larger b. Throws ConsistencyError when the argmax differs from the
// closed form, InvalidArgument when r is odd.
MaximalFieldResult maximal_field_class(const FieldSize& field, unsigned jobs = 1);

// N(x) = x^4 + 4x^3 + 3x^2 - 2x - 1 and j(x) = 4x^3 + 9x^2 - 3 are f(1) and
// f'(1) of the maximal class at q = x^2.
Int surface_N(const Int& x);
Int surface_j(const Int& x);

// (14x^3 + 49x^2 + 28x - 14) j(x) - (56x^2 + 98x - 7) N(x); always 35.
Int bezout_identity_check(const Int& x);

struct ResidueTables {
  std::vector<Int> j_mod5;   // j(x) mod 5, x = 0..4
  std::vector<Int> N_mod25;  // N(x) mod 25, x = 0..24
  std::vector<Int> j_mod7;   // j(x) mod 7, x = 0..6
  std::vector<Int> j_mod7_reference;  // reference row; it is 4x^3+4x^2+4 mod 7
  bool j_mod5_ok = false;
  bool N_mod25_ok = false;
  bool j_mod7_ok = false;     // computed row equals the reference row
  bool conclusion_ok = false; // no x with l | j(x) and l^2 | N(x), l in {5, 7}

  bool ok() const { return j_mod5_ok && N_mod25_ok && j_mod7_ok; }
};
ResidueTables residue_tables_check();

// Expected rows.
inline const std::vector<long> kJMod5{2, 0, 0, 1, 2};
inline const std::vector<long> kNFiveResidues{1, 2, 6, 7, 11, 12, 16, 17, 21, 22};
inline const std::vector<long> kJMod7{4, 5, 3, 1, 2, 2, 4};

struct NearMaxEntry {
  std::string label;
  unsigned g = 1;
  std::vector<Int> coeffs;
  bool valid = false;  // every factor passes the g = 1 membership test
  std::optional<CyclicityVerdict> verdict;
  std::optional<bool> claimed_cyclic;  // the stated claim, when there is one
  std::string note;

  // Unset when there is nothing to compare.
  std::optional<bool> agrees() const;
};

struct NearMaxReport {
  FieldSize field;
  std::vector<NearMaxEntry> entries;  // three factors, then five products
  bool cardinalities_coprime = false; // gcd(#E_max-1, #E_max-2) = 1
  std::vector<std::string> disagreements;
};

// Factors have traces 2x, 2x-1, 2x-2 with x = sqrt(q).
NearMaxReport nearmax_products(const FieldSize& field);

enum class FamilyKind { Prop6, Prop7 };
std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view text);

struct FamilySpec {
  FamilyKind kind = FamilyKind::Prop6;
  Int b;
  Int p;
  unsigned r = 1;
  unsigned s = 0;  // 0: derive from b
  unsigned count = 3;
};

// Validates the hypotheses and fills in s; throws InvalidArgument naming the
// first failing clause.
FamilySpec check_family_spec(FamilySpec spec);

struct FamilyMember {
  unsigned index = 0;
  IsogenyClass cls;
  CyclicityVerdict verdict;
  bool valid = false;
  bool ordinary = false;
  bool invariant_ok = false;   // f'(1) = 2(b-4) or f(1) = q^2 - 1 + (b+2)
  bool recurrence_ok = true;   // difference to the previous member
};

// Members i = 0..count-1 over q_i = p^{r + i s}. Each member is re-checked
// with the general membership test and criterion; any failure throws
// ConsistencyError.
std::vector<FamilyMember> family_generate(const FamilySpec& spec);

}  // namespace cyclav
