#include <gtest/gtest.h>

#include <random>

#include "cyclav/error.hpp"
#include "cyclav/validity.hpp"
#include "cyclav/weil.hpp"

using namespace cyclav;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(FieldSize, Make) {
  const FieldSize f = FieldSize::make(3, 4);
  EXPECT_EQ(f.q, 81);
  ASSERT_TRUE(f.sqrt_q);
  EXPECT_EQ(*f.sqrt_q, 9);
  EXPECT_FALSE(FieldSize::make(2, 3).sqrt_q);
  EXPECT_THROW(FieldSize::make(4, 1), InvalidArgument);
  EXPECT_THROW(FieldSize::make(5, 0), InvalidArgument);
}

TEST(MakeClass, Examples) {
  EXPECT_EQ(make_class(1, 5, 1, ints({-1})).full_coeffs(), ints({1, -1, 5}));
  const Int q = 12167;
  EXPECT_EQ(make_class(2, 23, 3, ints({438, 72293})).full_coeffs(),
            (std::vector<Int>{1, 438, 72293, Int(438 * q), Int(q * q)}));
  EXPECT_EQ(make_class(2, 2, 2, ints({5, 13})).full_coeffs(), ints({1, 5, 13, 20, 16}));
  EXPECT_THROW(make_class(2, 5, 1, ints({1})), InvalidArgument);
  EXPECT_THROW(make_class(1, 6, 1, ints({1})), InvalidArgument);
}

TEST(Evaluation, Examples) {
  const IsogenyClass c = make_class(2, 23, 3, ints({438, 72293}));
  EXPECT_EQ(eval_at_one(c), 153437767);
  EXPECT_EQ(eval_at_one(c) % 49, 0);
  EXPECT_EQ(derivative_at_one(c), 5475050);
  EXPECT_EQ(derivative_at_one(c) % 7, 0);
  EXPECT_EQ(eval_at_one(make_class(1, 5, 1, ints({-1}))), 5);
  EXPECT_EQ(eval_at_one(make_class(2, 2, 2, ints({5, 13}))), 55);
  EXPECT_EQ(derivative_at_one(make_class(2, 5, 1, ints({-4, 11}))), -6);
  for (long a = -4; a <= 4; ++a) EXPECT_EQ(derivative_at_one(make_class(1, 5, 1, ints({a}))), 2 + a);
}

TEST(Evaluation, SurfaceClosedForms) {
  for (long p : {2, 3, 5, 7}) {
    for (unsigned r = 1; r <= 3; ++r) {
      const FieldSize f = FieldSize::make(p, r);
      for (long a = -9; a <= 9; a += 3) {
        for (long b = -20; b <= 20; b += 7) {
          const IsogenyClass c(2, f, ints({a, b}));
          EXPECT_EQ(eval_at_one(c), 1 + a * (f.q + 1) + b + f.q * f.q);
          EXPECT_EQ(derivative_at_one(c), 4 + a * (f.q + 3) + 2 * b);
          EXPECT_EQ(derivative_at_one(c), a * f.q + 4 + 3 * a + 2 * b);
        }
      }
    }
  }
}

TEST(Cyclicity, Examples) {
  const CyclicityVerdict v = is_cyclic_class(make_class(2, 23, 3, ints({438, 72293})));
  EXPECT_FALSE(v.cyclic);
  EXPECT_EQ(v.witness_gcd % 7, 0);
  EXPECT_TRUE(is_cyclic_class(make_class(2, 2, 2, ints({5, 13}))).cyclic);
  const CyclicityVerdict e = is_cyclic_class(make_class(1, 5, 2, ints({-8})));
  EXPECT_FALSE(e.cyclic);
  EXPECT_EQ(e.N, 18);
  EXPECT_EQ(e.hatN, 3);
  EXPECT_EQ(e.dN, -6);
  EXPECT_EQ(e.witness_gcd, 3);
}

TEST(Cyclicity, EdgeCases) {
  EXPECT_TRUE(cyclicity_from_values(1, 0).cyclic);  // trivial group
  EXPECT_FALSE(cyclicity_from_values(4, 0).cyclic);
  EXPECT_EQ(cyclicity_from_values(4, 0).witness_gcd, 2);
  EXPECT_TRUE(cyclicity_from_values(6, 0).cyclic);
  EXPECT_THROW(cyclicity_from_values(0, 3), InvalidArgument);
  EXPECT_THROW(cyclicity_from_values(-5, 3), InvalidArgument);
}

TEST(Product, Examples) {
  const IsogenyClass c1 = make_class(1, 3, 2, ints({-5}));
  const IsogenyClass c2 = make_class(1, 3, 2, ints({-4}));
  const IsogenyClass prod = product_class(c1, c2);
  EXPECT_EQ(prod.g(), 2u);
  EXPECT_EQ(prod.full_coeffs(), ints({1, -9, 38, -81, 81}));
  EXPECT_EQ(eval_at_one(prod), 30);
  EXPECT_EQ(derivative_at_one(prod), -28);
  const IsogenyClass emax = make_class(1, 3, 2, ints({-6}));
  EXPECT_EQ(eval_at_one(product_class(emax, emax)), 16);
  EXPECT_THROW(product_class(c1, make_class(1, 5, 1, ints({1}))), InvalidArgument);
}

namespace {

// Random valid elliptic classes over small fields.
std::vector<IsogenyClass> random_elliptic(std::mt19937_64& rng, const FieldSize& f, int count) {
  std::vector<IsogenyClass> out;
  const long lim = isqrt(Int(4 * f.q)).get_si();
  std::uniform_int_distribution<long> dist(-lim, lim);
  while (static_cast<int>(out.size()) < count) {
    IsogenyClass c(1, f, {Int(dist(rng))});
    if (validate(c).valid) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST(Product, MultiplicativityAndNonCyclicityRules) {
  std::mt19937_64 rng(3);
  for (long p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned r = 1; r <= 2; ++r) {
      const FieldSize f = FieldSize::make(p, r);
      const auto cs = random_elliptic(rng, f, 12);
      for (const auto& c1 : cs) {
        for (const auto& c2 : cs) {
          const IsogenyClass prod = product_class(c1, c2);
          const Int n1 = eval_at_one(c1), n2 = eval_at_one(c2);
          ASSERT_EQ(eval_at_one(prod), n1 * n2);
          const bool cyc = is_cyclic_class(prod).cyclic;
          if (gcd(n1, n2) > 1) EXPECT_FALSE(cyc);
          if (!is_cyclic_class(c1).cyclic || !is_cyclic_class(c2).cyclic) EXPECT_FALSE(cyc);
        }
      }
    }
  }
}

TEST(FunctionalEquation, PalindromicOnRandomClasses) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int k = 0; k < 1000; ++k) {
    const unsigned g = 1 + k % 4;
    const FieldSize f = FieldSize::make(primes[k % 6], 1 + k % 3);
    std::vector<Int> coeffs;
    for (unsigned i = 0; i < g; ++i) coeffs.emplace_back(coef(rng));
    const IsogenyClass c(g, f, coeffs);
    const auto asc = c.ascending();
    const unsigned d = 2 * g;
    // t^{2g} f(q/t): coefficient of t^j is c_{2g-j} q^{2g-j}.
    for (unsigned j = 0; j <= d; ++j) {
      ASSERT_EQ(asc[d - j] * ipow(f.q, d - j), ipow(f.q, g) * asc[j]);
    }
  }
}

TEST(SquarefreeOrder, ImpliesCyclic) {
  for (long n = 1; n <= 2000; ++n) {
    if (hat(n) != 1) continue;
    for (long d = -50; d <= 50; ++d) EXPECT_TRUE(cyclicity_from_values(n, d).cyclic);
  }
}

TEST(HValue, Examples) {
  EXPECT_EQ(h_value(1, 7, {}), 6);
  EXPECT_EQ(h_value(2, 5, ints({-4})), 32);
  for (long X : {2, 3, 5, 101}) {
    EXPECT_EQ(h_value(1, X, {}), X - 1);
    for (long a = -10; a <= 10; ++a) {
      const auto av = ints({a});
      EXPECT_EQ(h_value(2, X, av), (X - 1) * (2 * (X + 1) + a));
      EXPECT_EQ(h_value(2, X, av, 0), h_value(2, X, av, 1));
      EXPECT_EQ(h_value(2, X, av, 0), h_value(2, X, av, 17));
    }
  }
  const auto av3 = ints({3, -7});
  EXPECT_EQ(h_value(3, 11, av3, 0), h_value(3, 11, av3, 17));
}
