#include <doctest.h>

#include <random>

#include "hurwitz/factorize.hpp"
#include "hurwitz/series.hpp"

using namespace hurwitz;

namespace {

PSeries random_series(std::mt19937& rng, int N, int terms) {
  const auto shapes = partitions_up_to(N);
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  PSeries f(N);
  for (int i = 0; i < terms; ++i) f.add_term(shapes[pick(rng)], ratio(num(rng), den(rng)));
  return f;
}

// Terms of z-degree at most m.
PSeries low(const PSeries& f, int m) {
  PSeries out(m);
  for (const auto& [a, c] : f.terms()) out.add_term(a, c);
  return out;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("terms, truncation and zero removal") {
    PSeries f(3);
    f.add_term(Partition{2, 1}, 2);
    f.add_term(Partition{4}, 5);
    CHECK(f.size() == 1);
    f.add_term(Partition{2, 1}, -2);
    CHECK(f.is_zero());
    CHECK(f.max_weight() == -1);
    f.add_term(Partition{}, 1);
    CHECK(f.coeff(Partition{}) == 1);
    CHECK(f.max_weight() == 0);
    CHECK_THROWS_AS(PSeries(-1), std::invalid_argument);
  }

  TEST_CASE("products truncate and require matching truncations") {
    const auto a = PSeries::monomial(4, Partition{1}, 2) + PSeries::monomial(4, Partition{3});
    const auto b = PSeries::monomial(4, Partition{2}, 3);
    const auto c = a * b;
    CHECK(c.coeff(Partition{2, 1}) == 6);
    CHECK(c.size() == 1);
    CHECK_THROWS_AS(a * PSeries(3), std::invalid_argument);
    CHECK_THROWS_AS(a + PSeries(3), std::invalid_argument);
    CHECK(mul(a, b) == c);
    CHECK(add(a, b) == a + b);
    CHECK(scale(2, a) == a + a);
  }

  TEST_CASE("derivatives and Euler operators") {
    const auto f = PSeries::monomial(5, Partition{2, 1, 1}, 3);
    CHECK(d_dp(1, f) == PSeries::monomial(5, Partition{2, 1}, 6));
    CHECK(d_dp(2, f) == PSeries::monomial(5, Partition{1, 1}, 3));
    CHECK(d_dp(3, f).is_zero());
    CHECK(euler_z(f) == PSeries::monomial(5, Partition{2, 1, 1}, 12));
    CHECK(euler_p(f) == PSeries::monomial(5, Partition{2, 1, 1}, 9));
    CHECK(euler_shift(f) == PSeries::monomial(5, Partition{2, 1, 1}, 15));
    CHECK(mul_by_p(2, f).is_zero());
    CHECK(mul_by_p(1, f) == PSeries::monomial(5, Partition{2, 1, 1, 1}, 3));
    CHECK(mul_by_monomial(Partition{1}, f) == mul_by_p(1, f));
    CHECK(phi(Partition{3, 1}).truncation() == 4);
  }

  TEST_CASE("u-weights") {
    const auto f = PSeries::monomial(4, Partition{1, 1, 1}, 6) + PSeries::monomial(4, Partition{2, 2});
    const auto g = du_at_one(3, f);
    CHECK(g.coeff(Partition{1, 1, 1}) == 12);
    CHECK(g.coeff(Partition{2, 2}) == 2);
    CHECK(u_weight(3, Partition{2, 1}) == ratio(3, 2));
  }

  TEST_CASE("Leibniz rule holds for random series") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_series(rng, 6, 8);
      const auto g = random_series(rng, 6, 8);
      // d/dp_i of a truncated product is exact only below z-degree 6 - i.
      for (int i = 1; i <= 6; ++i) {
        CHECK(low(d_dp(i, f * g), 6 - i) == low(d_dp(i, f) * g + f * d_dp(i, g), 6 - i));
      }
      CHECK(euler_z(f * g) == euler_z(f) * g + f * euler_z(g));
    }
  }

  TEST_CASE("build_F weights counts by class size") {
    CountTable t;
    t.set({1, 3, 0, Partition{1}, true}, 1);
    t.set({2, 3, 1, Partition{1, 1}, true}, 0);
    t.set({3, 3, 1, Partition{3}, true}, 1);
    t.set({3, 3, 2, Partition{1, 1, 1}, true}, 2);
    const auto F = build_F(3, 3, t);
    CHECK(F.coeff(Partition{1}) == 1);
    CHECK(F.coeff(Partition{3}) == ratio(1, 3));
    CHECK(F.coeff(Partition{1, 1, 1}) == ratio(1, 6));
    CHECK(F.size() == 3);

    CountTable missing;
    CHECK_THROWS_AS(build_F(3, 3, missing), std::out_of_range);
  }
}
