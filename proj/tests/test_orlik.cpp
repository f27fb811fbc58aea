#include "oracles.hpp"

#include "sasakilink/orlik.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sasakilink;
using oracle::ints;

namespace {

Subset mask(std::initializer_list<std::size_t> idx) {
  Subset s = 0;
  for (auto i : idx) s |= Subset{1} << i;
  return s;
}

FractionalWeights fw_of(std::vector<long long> w, long long d) {
  return fractional_weights(LinkDescriptor(ints(w), d));
}

FractionalWeights random_fw() {
  auto w = oracle::random_tuple(static_cast<std::size_t>(oracle::uniform(3, 6)), 1, 40);
  return fw_of(w, oracle::uniform(1, 120));
}

}  // namespace

TEST_SUITE_BEGIN("orlik");

TEST_CASE("subset order and labels") {
  auto s = subsets_in_order(3);
  REQUIRE(s.size() == 8);
  CHECK(s[0] == 0);
  CHECK(s[1] == mask({0}));
  CHECK(s[3] == mask({2}));
  CHECK(s[4] == mask({0, 1}));
  CHECK(s[6] == mask({1, 2}));
  CHECK(s[7] == mask({0, 1, 2}));
  CHECK(subset_label(0) == "{}");
  CHECK(subset_label(mask({0, 1, 3})) == "{0,1,3}");
}

TEST_CASE("c table by hand") {
  auto c = orlik_c_table(ints({2, 3, 3, 18}));
  CHECK(c[0] == 1);
  CHECK(c[mask({0})] == 3);
  CHECK(c[mask({1})] == 1);
  CHECK(c[mask({2})] == 1);
  CHECK(c[mask({3})] == 1);
  CHECK(c[mask({1, 2})] == 2);
  for (Subset pair : {mask({0, 1}), mask({0, 2}), mask({0, 3}), mask({1, 3}), mask({2, 3})}) CHECK(c[pair] == 1);
  CHECK(c[mask({0, 1, 2})] == 3);
  CHECK(c[mask({0, 1, 3})] == 1);
  CHECK(c[mask({0, 2, 3})] == 1);
  CHECK(c[mask({1, 2, 3})] == 1);

  c = orlik_c_table(ints({34, 34, 4, 2}));
  CHECK(c[0] == 2);
  CHECK(c[mask({2, 3})] == 17);
  CHECK(c[mask({0, 1, 3})] == 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(c[mask({i})] == 1);

  for (const auto& x : orlik_c_table(ints({1, 1, 1, 1}))) CHECK(x == 1);
}

TEST_CASE("k table by hand") {
  auto k = orlik_k_table(fw_of({9, 6, 6, 1}, 18));
  CHECK(k[mask({1, 2, 3})] == 2);
  CHECK(k[0] == 0);
  k = orlik_k_table(fw_of({2, 22, 17, 34}, 68));
  CHECK(k[mask({0, 1, 3})] == 2);
  CHECK(k[mask({1, 2, 3})] == Rational(-10, 11));
}

TEST_CASE("torsion examples") {
  auto t = orlik_torsion(fractional_weights(from_bp(BPExponents(ints({2, 3, 5, 75})))));
  CHECK(t.invariant_factors() == ints({2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(t.to_string() == "(Z/2)^8");
  CHECK(orlik_torsion(fractional_weights(from_bp(BPExponents(ints({2, 3, 3, 18}))))).trivial());
  CHECK(orlik_torsion(fw_of({2, 22, 17, 34}, 68)).invariant_factors() == ints({2, 2}));
}

TEST_CASE("c values agree with Moebius inversion of the complement gcds") {
  for (int trial = 0; trial < 150; ++trial) {
    auto fw = random_fw();
    auto c = orlik_c_table(fw.u);
    auto u = oracle::to_i128(fw.u);
    for (Subset s : subsets_in_order(fw.size())) {
      auto expected = oracle::moebius_c(u, s);
      REQUIRE(expected.q == 1);
      CHECK(c[s].str() == oracle::str(expected.p));
      CHECK(c[s] >= 1);
    }
  }
}

TEST_CASE("k values agree with the direct alternating sum") {
  for (int trial = 0; trial < 150; ++trial) {
    auto fw = random_fw();
    auto k = orlik_k_table(fw);
    auto u = oracle::to_i128(fw.u), v = oracle::to_i128(fw.v);
    for (Subset s : subsets_in_order(fw.size())) CHECK(oracle::to_q(k[s]) == oracle::k_value(u, v, s));
  }
}

TEST_CASE("reconstruction identity") {
  for (int trial = 0; trial < 150; ++trial) {
    auto fw = random_fw();
    auto c = orlik_c_table(fw.u);
    for (Subset s : subsets_in_order(fw.size())) {
      Integer product = 1;
      for (Subset t = s;; t = (t - 1) & s) {
        product *= c[t];
        if (t == 0) break;
      }
      CHECK(product == complement_gcd(fw.u, s));
    }
  }
}

TEST_CASE("torsion orders form a divisibility chain") {
  for (int trial = 0; trial < 200; ++trial) {
    auto table = orlik_table(random_fw());
    CHECK(table.r >= 0);
    CHECK(Integer(table.invariant_factors.size()) == table.r);
    for (std::size_t j = 0; j + 1 < table.invariant_factors.size(); ++j)
      CHECK(table.invariant_factors[j] % table.invariant_factors[j + 1] == 0);
    Rational max_k = table.k.front();
    for (const auto& x : table.k) max_k = std::max(max_k, x);
    CHECK(table.r == std::max(Integer(0), floor(max_k)));
  }
}

TEST_CASE("pairwise coprime BP exponents give trivial torsion") {
  const std::vector<long long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> pool = primes;
    std::shuffle(pool.begin(), pool.end(), oracle::rng());
    std::size_t size = static_cast<std::size_t>(oracle::uniform(3, 5));
    std::vector<long long> a;
    for (std::size_t i = 0; i < size; ++i) a.push_back(pool[i] * (oracle::uniform(0, 1) ? pool[i] : 1));
    CHECK(orlik_torsion(fractional_weights(from_bp(BPExponents(ints(a))))).trivial());
  }
}

TEST_CASE("higher-dimensional links") {
  // Brieskorn spheres in dimension 7: (2,2,2,3,5) is the homotopy 7-sphere family.
  auto fw = fractional_weights(from_bp(BPExponents(ints({2, 2, 2, 3, 5}))));
  CHECK(orlik_torsion(fw).trivial());
  CHECK_THROWS_AS(orlik_c_table(std::vector<Integer>(kMaxOrlikVariables + 1, 2)), Error);
}

TEST_SUITE_END();
