#include <doctest.h>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "oracle.hpp"

using namespace hurwitz;

TEST_SUITE("core") {
  TEST_CASE("rational parsing and canonical strings") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK(to_string(ratio(6, 4)) == "3/2");
  }

  TEST_CASE("factorial, binomial, power") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 5) == 0);
    CHECK(power(Rational(3), -2) == ratio(1, 9));
    CHECK(power(ratio(2, 3), 3) == ratio(8, 27));
    CHECK_THROWS(power(Rational(0), -1));
  }

  TEST_CASE("partition basics") {
    const Partition p{1, 3, 1};
    CHECK(p.parts() == std::vector<int>{3, 1, 1});
    CHECK(p.weight() == 5);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.str() == "3,1,1");
    CHECK(p.without_part(1) == Partition{3, 1});
    CHECK(p.with_part(2) == Partition{3, 2, 1, 1});
    CHECK_THROWS_AS(p.without_part(2), std::invalid_argument);
    CHECK(p.minus(Partition{1, 1}) == Partition{3});
    CHECK_THROWS_AS(p.minus(Partition{3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition().str().empty());
  }

  TEST_CASE("partition ordering is by weight then parts") {
    CHECK(Partition{1, 1, 1} < Partition{2, 1});
    CHECK(Partition{2, 1} < Partition{3});
    CHECK(Partition{3} < Partition{1, 1, 1, 1});
  }

  TEST_CASE("partition counts and class sizes") {
    const std::vector<std::size_t> p_n{1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) {
      const auto ps = partitions_of(n);
      CHECK(ps.size() == p_n[static_cast<std::size_t>(n - 1)]);
      CHECK(std::is_sorted(ps.begin(), ps.end()));
      BigInt total = 0;
      for (const auto& a : ps) total += class_size(a);
      CHECK(total == factorial(n));
    }
    CHECK(partitions_up_to(4).size() == 1 + 2 + 3 + 5);
  }

  TEST_CASE("class sizes agree with counting S_n") {
    for (int n = 1; n <= 6; ++n) {
      std::map<Partition, long> counts;
      for (const auto& p : oracle::symmetric_group(n)) ++counts[oracle::type_of(p)];
      for (const auto& [alpha, c] : counts) CHECK(class_size(alpha) == c);
    }
  }

  TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(Partition{1, 1, 1}) == 6);
    CHECK(automorphism_count(Partition{2, 2, 1}) == 2);
    CHECK(automorphism_count(Partition{3}) == 1);
  }

  TEST_CASE("mu values") {
    CHECK(mu(2, Partition{3}).as_int() == 2);
    CHECK(mu(3, Partition{1, 1, 1}).as_int() == 2);
    CHECK(mu(3, Partition{3}).as_int() == 1);
    const auto m = mu(3, Partition{2, 1});
    CHECK_FALSE(m.admissible);
    CHECK(m.value == ratio(3, 2));
    CHECK_THROWS(m.as_int());
    CHECK(mu(4, Partition{4}).as_int() == 1);
    CHECK(mu(2, Partition{1}).as_int() == 0);
    CHECK_THROWS_AS(mu(1, Partition{1}), std::invalid_argument);
  }
}
