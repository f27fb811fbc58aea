#include "oracles.hpp"

#include "sasakilink/homology.hpp"

#include <doctest.h>

using namespace sasakilink;
using oracle::ints;

TEST_SUITE_BEGIN("homology");

TEST_CASE("canonical forms") {
  auto t = TorsionGroup::from_cyclic_orders(ints({2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(t.to_string() == "(Z/2)^8");
  CHECK(t.order() == 256);
  CHECK(TorsionGroup().to_string() == "0");
  CHECK(TorsionGroup().trivial());
  CHECK(TorsionGroup::from_cyclic_orders(ints({1, 1})).trivial());
  CHECK(TorsionGroup::from_cyclic_orders(ints({4})).to_string() == "Z/4");
  // Z/2 + Z/3 = Z/6
  CHECK(TorsionGroup::from_cyclic_orders(ints({2, 3})).invariant_factors() == ints({6}));
  CHECK(TorsionGroup::from_cyclic_orders(ints({6, 6, 3})).to_string() == "(Z/6)^2 + Z/3");
}

TEST_CASE("invariant factors in either chain order") {
  auto a = TorsionGroup::from_invariant_factors(ints({12, 6, 2, 1}));
  auto b = TorsionGroup::from_invariant_factors(ints({2, 6, 12}));
  CHECK(a == b);
  CHECK(a.invariant_factors() == ints({12, 6, 2}));
  CHECK_THROWS_AS(TorsionGroup::from_invariant_factors(ints({4, 6})), Error);
}

TEST_CASE("elementary divisors") {
  auto t = TorsionGroup::from_cyclic_orders(ints({12, 18}));
  // Z/12 + Z/18 = Z/4 + Z/3 + Z/2 + Z/9
  auto e = t.elementary_divisors();
  REQUIRE(e.size() == 4);
  CHECK(e[0] == PrimePower{2, 1, 1});
  CHECK(e[1] == PrimePower{2, 2, 1});
  CHECK(e[2] == PrimePower{3, 1, 1});
  CHECK(e[3] == PrimePower{3, 2, 1});
  CHECK(TorsionGroup::from_elementary_divisors(e) == t);
}

TEST_CASE("cyclic sums agree with diagonal Smith reduction") {
  for (int trial = 0; trial < 400; ++trial) {
    auto xs = oracle::random_tuple(static_cast<std::size_t>(oracle::uniform(0, 7)), 1, 60);
    auto t = TorsionGroup::from_cyclic_orders(ints(xs));
    auto expected = oracle::smith_diagonal({xs.begin(), xs.end()});
    std::vector<Integer> got = t.invariant_factors();
    std::reverse(got.begin(), got.end());
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].str() == oracle::str(expected[i]));
    // Both representations describe the same group.
    CHECK(TorsionGroup::from_elementary_divisors(t.elementary_divisors()) == t);
    Integer order = 1;
    for (auto x : xs) order *= x;
    CHECK(t.order() == order);
  }
}

TEST_CASE("pairing of elementary divisors") {
  CHECK(torsion_pairs(TorsionGroup()));
  CHECK(torsion_pairs(TorsionGroup::from_cyclic_orders(ints({2, 2}))));
  CHECK(torsion_pairs(TorsionGroup::from_cyclic_orders(ints({6, 2, 3}))));
  CHECK_FALSE(torsion_pairs(TorsionGroup::from_cyclic_orders(ints({2}))));
  CHECK_FALSE(torsion_pairs(TorsionGroup::from_cyclic_orders(ints({4, 2}))));
}

TEST_SUITE_END();
