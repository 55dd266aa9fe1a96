#include <doctest.h>

#include "hurwitz/factorize.hpp"
#include "hurwitz/perm.hpp"
#include "oracle.hpp"

using namespace hurwitz;

namespace {

Permutation from_oracle(const oracle::Perm& p) {
  std::vector<int> images;
  for (int x : p) images.push_back(x + 1);
  return Permutation::from_images(images);
}

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("parse and print") {
    const auto p = Permutation::parse("(1 2 4)(3 5 6)");
    CHECK(p.degree() == 6);
    CHECK(p(1) == 2);
    CHECK(p(4) == 1);
    CHECK(p.str() == "(1 2 4)(3 5 6)");
    CHECK(Permutation::parse("(2 3)", 4).str() == "(1)(2 3)(4)");
    CHECK_THROWS_AS(Permutation::parse("(1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({1, 1}), std::invalid_argument);
  }

  TEST_CASE("right factor acts first") {
    const auto p = Permutation::parse("(1 2)", 3);
    const auto q = Permutation::parse("(2 3)", 3);
    CHECK((p * q)(3) == 1);
    CHECK((q * p)(3) == 2);
    CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), std::invalid_argument);
  }

  TEST_CASE("inverse, parity, cycle type") {
    const auto p = Permutation::parse("(1 3 2)(4 5)");
    CHECK((p * p.inverse()).is_identity());
    CHECK_FALSE(p.is_even());
    CHECK(cycle_type(p) == Partition{3, 2});
    CHECK(p.cycle_count() == 2);
    CHECK(canonical_representative(Partition{2, 2, 1}).str() == "(1 2)(3 4)(5)");
  }

  TEST_CASE("all d-cycles matches filtering S_n") {
    for (int n = 1; n <= 6; ++n) {
      for (int d = 2; d <= n + 1; ++d) {
        const auto got = all_d_cycles(n, d);
        const auto want = oracle::d_cycles(n, d);
        std::vector<Permutation> expected;
        for (const auto& w : want) expected.push_back(from_oracle(w));
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        std::sort(expected.begin(), expected.end());
        CHECK(sorted == expected);
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        for (const auto& w : got) CHECK(is_d_cycle(w, d));
      }
    }
    CHECK(all_d_cycles(7, 3).size() == 70);
  }

  TEST_CASE("case classification predicts the change in cycle count") {
    for (int n = 3; n <= 6; ++n) {
      const auto omegas = all_d_cycles(n, 3);
      for (const auto& s : oracle::symmetric_group(n)) {
        const auto sigma = from_oracle(s);
        for (const auto& w : omegas) {
          const auto tag = classify_3cycle_case(w, sigma);
          CHECK((w * sigma).cycle_count() - sigma.cycle_count() == cycle_count_delta(tag));
        }
      }
    }
  }

  TEST_CASE("case classification examples") {
    const auto w = Permutation::parse("(1 2 3)", 5);
    // w = (j3 j2 j1) with j3 = 1, j2 = 2, j1 = 3.
    CHECK(classify_3cycle_case(w, Permutation(5)) == CaseTag::Case1);
    CHECK(classify_3cycle_case(w, Permutation::parse("(1 2)", 5)) == CaseTag::Case2);
    CHECK(classify_3cycle_case(w, Permutation::parse("(3 2 1)", 5)) == CaseTag::Case3);
    CHECK(classify_3cycle_case(w, Permutation::parse("(1 2 3)", 5)) == CaseTag::Case4);
    CHECK(classify_3cycle_case(w, Permutation::parse("(3 4 2 5 1)", 5)) == CaseTag::Case3);
    CHECK_THROWS_AS(classify_3cycle_case(Permutation::parse("(1 2)", 5), Permutation(5)), std::invalid_argument);
    CHECK_THROWS_AS(classify_3cycle_case(w, Permutation(4)), std::invalid_argument);
    CHECK(to_string(CaseTag::Case4) == "Case4");
  }

  TEST_CASE("classification is independent of how omega is written") {
    const auto sigma = Permutation::parse("(1 5 2 6)(3 4)");
    for (const auto& text : {"(2 4 6)", "(4 6 2)", "(6 2 4)"}) {
      CHECK(classify_3cycle_case(Permutation::parse(text, 6), sigma) == CaseTag::Case2);
    }
  }

  TEST_CASE("dist") {
    const auto sigma = Permutation::parse("(1 4 2 5 3)");
    const std::array<int, 3> J{1, 2, 3};
    CHECK(dist(1, sigma, J) == 2);
    CHECK(dist(2, sigma, J) == 2);
    CHECK(dist(3, sigma, J) == 1);
    CHECK_THROWS_AS(dist(4, sigma, J), std::invalid_argument);
  }

  TEST_CASE("explicit minimal 3-cycle chains") {
    for (int n = 3; n <= 11; ++n) {
      const auto chain = minimal_3cycle_chain(n);
      Permutation prod(n);
      for (const auto& c : chain) {
        CHECK(is_d_cycle(c, 3));
        prod = prod * c;
      }
      std::vector<int> down(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i)] = n - i;
      Permutation expected(n);
      if (n % 2 == 1) {
        expected = Permutation::from_cycles(n, {down});
      } else {
        std::vector<int> rest(down.begin() + 2, down.end());
        expected = Permutation::from_cycles(n, {{n, n - 1}, rest});
      }
      CHECK(prod == expected);
      CHECK(static_cast<int>(chain.size()) == mu(3, cycle_type(expected)).as_int());
      CHECK(generates_transitive(n, chain));
    }
    CHECK_THROWS(minimal_3cycle_chain(2));
  }
}
