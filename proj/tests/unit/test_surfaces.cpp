#include <gtest/gtest.h>

#include "cyclav/error.hpp"
#include "cyclav/surfaces.hpp"

using namespace cyclav;

TEST(Trace, CoefficientIsNegatedTrace) {
  EXPECT_EQ(coefficient_from_trace(7), -7);
  EXPECT_EQ(trace_from_coefficient(-7), 7);
}

TEST(MaximalField, MatchesClosedForm) {
  struct Row {
    long p;
    unsigned r;
    long a, b, N;
  };
  for (const Row& row : {Row{2, 2, 5, 13, 55}, Row{3, 2, 9, 37, 209}, Row{5, 2, 17, 121, 1189}}) {
    const FieldSize f = FieldSize::make(row.p, row.r);
    const auto res = maximal_field_class(f, 2);
    EXPECT_EQ(res.a, row.a);
    EXPECT_EQ(res.b, row.b);
    EXPECT_EQ(res.verdict.N, row.N);
    EXPECT_TRUE(res.verdict.cyclic);
    EXPECT_TRUE(res.ordinary);
    EXPECT_EQ(res.rueck.delta, 5);
    EXPECT_GT(res.candidates, 0u);
    const auto cf = closed_form_max(*f.sqrt_q);
    EXPECT_EQ(cf.a, res.a);
    EXPECT_EQ(cf.b, res.b);
  }
  EXPECT_THROW(maximal_field_class(FieldSize::make(5, 1)), InvalidArgument);
}

TEST(MaximalField, JobsInvariant) {
  const FieldSize f = FieldSize::make(2, 4);
  const auto a = maximal_field_class(f, 1);
  const auto b = maximal_field_class(f, 3);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.b, b.b);
  EXPECT_EQ(a.candidates, b.candidates);
}

TEST(Bezout, IdentityAndPolynomials) {
  EXPECT_EQ(surface_N(1), 5);
  EXPECT_EQ(surface_j(1), 10);
  for (long x = 1; x <= 2000; ++x) ASSERT_EQ(bezout_identity_check(x), 35) << x;
  // N(x) is f(1) of the maximal class with sqrt(q) = x.
  for (long x : {2, 3, 5, 7, 13}) {
    const auto cf = closed_form_max(x);
    const FieldSize f = FieldSize::make(x, 2);
    EXPECT_EQ(eval_at_one(IsogenyClass(2, f, {cf.a, cf.b})), surface_N(x));
    EXPECT_EQ(derivative_at_one(IsogenyClass(2, f, {cf.a, cf.b})), surface_j(x));
  }
}

TEST(Bezout, ResidueTables) {
  const auto t = residue_tables_check();
  EXPECT_TRUE(t.j_mod5_ok);
  EXPECT_TRUE(t.N_mod25_ok);
  EXPECT_TRUE(t.conclusion_ok);
  EXPECT_EQ(t.j_mod5, (std::vector<Int>{2, 0, 0, 1, 2}));
  // The reference mod-7 row reduces 9x^2 as 4x^2; both rows are zero-free.
  EXPECT_EQ(t.j_mod7, (std::vector<Int>{4, 3, 2, 4, 5, 1, 2}));
  EXPECT_EQ(t.j_mod7_reference, (std::vector<Int>{4, 5, 3, 1, 2, 2, 4}));
  EXPECT_FALSE(t.j_mod7_ok);
  EXPECT_FALSE(t.ok());
  ASSERT_EQ(t.N_mod25.size(), 25u);
  for (long x : {1, 2, 6, 7, 11, 12, 16, 17, 21, 22}) EXPECT_EQ(t.N_mod25[x], 5) << x;
}

namespace {

const NearMaxEntry& entry(const NearMaxReport& r, std::string_view label) {
  for (const auto& e : r.entries) {
    if (e.label == label) return e;
  }
  throw std::runtime_error("missing entry " + std::string(label));
}

}  // namespace

TEST(NearMax, NineFromFactorsAndProducts) {
  const auto r = nearmax_products(FieldSize::make(3, 2));
  ASSERT_EQ(r.entries.size(), 8u);
  const auto& sq = entry(r, "E_max^2");
  ASSERT_TRUE(sq.verdict);
  EXPECT_EQ(sq.verdict->N, 16);
  EXPECT_FALSE(sq.verdict->cyclic);
  const auto& mixed = entry(r, "E_max-1 x E_max-2");
  ASSERT_TRUE(mixed.verdict);
  EXPECT_EQ(mixed.verdict->N, 30);
  EXPECT_TRUE(mixed.verdict->cyclic);
  EXPECT_TRUE(r.cardinalities_coprime);
  EXPECT_FALSE(entry(r, "E_max-1^2").claimed_cyclic);
}

TEST(NearMax, KnownDisagreementsAreReported) {
  const auto r25 = nearmax_products(FieldSize::make(5, 2));
  const auto& e2 = entry(r25, "E_max-2");
  ASSERT_TRUE(e2.verdict);
  EXPECT_EQ(e2.verdict->witness_gcd, 3);
  EXPECT_EQ(e2.agrees(), false);
  EXPECT_FALSE(r25.disagreements.empty());

  const auto r361 = nearmax_products(FieldSize::make(19, 2));
  const auto& e1 = entry(r361, "E_max-1");
  ASSERT_TRUE(e1.verdict);
  EXPECT_EQ(e1.verdict->witness_gcd, 5);
  EXPECT_EQ(e1.agrees(), false);

  // q = 4: E_max has one point.
  const auto r4 = nearmax_products(FieldSize::make(2, 2));
  const auto& e0 = entry(r4, "E_max");
  ASSERT_TRUE(e0.verdict);
  EXPECT_EQ(e0.verdict->N, 1);
  EXPECT_TRUE(e0.verdict->cyclic);
  EXPECT_EQ(e0.agrees(), false);
}

TEST(NearMax, VerdictsMatchCriterionDirectly) {
  for (long p : {3, 5, 7, 11, 13}) {
    const FieldSize f = FieldSize::make(p, 2);
    for (const auto& e : nearmax_products(f).entries) {
      if (!e.verdict) continue;
      EXPECT_EQ(e.verdict->cyclic, is_cyclic_class(IsogenyClass(e.g, f, e.coeffs)).cyclic) << e.label;
    }
  }
  EXPECT_THROW(nearmax_products(FieldSize::make(5, 1)), InvalidArgument);
}

TEST(Family, Prop6) {
  FamilySpec spec;
  spec.kind = FamilyKind::Prop6;
  spec.b = 1;
  spec.p = 5;
  const FamilySpec checked = check_family_spec(spec);
  EXPECT_EQ(checked.s, 2u);
  const auto members = family_generate(spec);
  ASSERT_EQ(members.size(), 3u);
  const long expect[] = {13, 15373, 9759373};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(members[i].verdict.N, expect[i]);
    EXPECT_EQ(members[i].verdict.dN, -6);
    EXPECT_TRUE(members[i].verdict.cyclic);
    EXPECT_TRUE(members[i].valid);
    EXPECT_TRUE(members[i].ordinary);
    EXPECT_TRUE(members[i].invariant_ok);
    EXPECT_TRUE(members[i].recurrence_ok);
  }
}

TEST(Family, Prop7) {
  FamilySpec spec;
  spec.kind = FamilyKind::Prop7;
  spec.b = 3;
  spec.p = 7;
  EXPECT_EQ(check_family_spec(spec).s, 4u);
  const auto members = family_generate(spec);
  ASSERT_EQ(members.size(), 3u);
  EXPECT_EQ(members[0].verdict.N, 53);
  EXPECT_EQ(members[1].verdict.N, 282475253);
  EXPECT_EQ(members[2].verdict.N, Int("1628413597910453"));
  for (const auto& m : members) {
    EXPECT_EQ(m.verdict.dN, 10);
    EXPECT_TRUE(m.verdict.cyclic);
    EXPECT_TRUE(m.ordinary);
  }
}

TEST(Family, RejectsBadParameters) {
  FamilySpec bad6;
  bad6.kind = FamilyKind::Prop6;
  bad6.b = 5;
  bad6.p = 5;
  EXPECT_THROW(check_family_spec(bad6), InvalidArgument);
  FamilySpec small;
  small.kind = FamilyKind::Prop6;
  small.b = 1;
  small.p = 2;
  small.r = 2;  // q = 4 is excluded
  EXPECT_THROW(check_family_spec(small), InvalidArgument);
  FamilySpec bad7;
  bad7.kind = FamilyKind::Prop7;
  bad7.b = 2;  // b = 2 mod 4
  bad7.p = 7;
  EXPECT_THROW(check_family_spec(bad7), InvalidArgument);
  bad7.b = 3;
  bad7.p = 5;  // p <= b + 2
  EXPECT_THROW(check_family_spec(bad7), InvalidArgument);
  EXPECT_EQ(parse_family_kind(to_string(FamilyKind::Prop7)), FamilyKind::Prop7);
  EXPECT_THROW(parse_family_kind("prop8"), InvalidArgument);
}
