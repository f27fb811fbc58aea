#include "oracles.hpp"

#include "sasakilink/classify.hpp"
#include "sasakilink/tables.hpp"

#include <doctest.h>

using namespace sasakilink;
using oracle::ints;

namespace {

const SeTable& table1() {
  static const SeTable t = SeTable::load(default_data_dir() / "table1.tsv");
  return t;
}

SeTableVerdict lookup(const std::string& name) { return se_table_lookup(parse_smale_name(name), table1()); }

LinkDescriptor bp_link(std::vector<long long> a) { return from_bp(BPExponents(ints(a))); }

bool pairwise_coprime(const std::vector<long long>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (oracle::gcd(a[i], a[j]) != 1) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("Smale names") {
  CHECK(smale_name({0, {}}).render() == "S^5");
  CHECK(smale_name({1, {}}).render() == "M_∞");
  CHECK(smale_name({4, {}}).render() == "4M_∞");
  auto t = TorsionGroup::from_cyclic_orders(std::vector<Integer>(8, 2));
  CHECK(smale_name({0, t}).render() == "4M_2");
  CHECK(smale_name({3, TorsionGroup::from_cyclic_orders(ints({2, 2}))}).render() == "3M_∞ # M_2");
  // (Z/2)^2 + (Z/6)^2 halves to Z/2 + Z/6.
  auto mixed = smale_name({1, TorsionGroup::from_cyclic_orders(ints({2, 2, 6, 6}))});
  CHECK(mixed.ms == ints({2, 6}));
  CHECK(mixed.render() == "M_∞ # M_2 # M_6");
  CHECK(mixed.torsion() == TorsionGroup::from_cyclic_orders(ints({2, 2, 6, 6})));
  try {
    smale_name({0, TorsionGroup::from_cyclic_orders(ints({2, 2, 2}))});
    FAIL("accepted unpaired torsion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnpairedTorsion);
  }
}

TEST_CASE("parsing Smale names") {
  CHECK(parse_smale_name("S^5") == SmaleName{0, {}});
  CHECK(parse_smale_name("M_inf") == SmaleName{1, {}});
  CHECK(parse_smale_name("7M_oo") == SmaleName{7, {}});
  CHECK(parse_smale_name("3M_∞ # M_2") == SmaleName{3, ints({2})});
  CHECK(parse_smale_name("M_∞ # 2M_4") == SmaleName{1, ints({4, 4})});
  CHECK(parse_smale_name("4M_3") == SmaleName{0, ints({3, 3, 3, 3})});
  CHECK_THROWS_AS(parse_smale_name("3X_2"), Error);
  CHECK_THROWS_AS(parse_smale_name("M_"), Error);
  CHECK_THROWS_AS(parse_smale_name("M_0"), Error);
}

TEST_CASE("render and parse round trip") {
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Integer> cyclic;
    int pieces = oracle::uniform(0, 4);
    for (int p = 0; p < pieces; ++p) {
      Integer m = oracle::uniform(2, 12);
      cyclic.push_back(m);
      cyclic.push_back(m);
    }
    SmaleName name = smale_name({oracle::uniform(0, 20), TorsionGroup::from_cyclic_orders(cyclic)});
    CHECK(parse_smale_name(name.render()) == name);
    for (std::size_t i = 1; i < name.ms.size(); ++i) CHECK(name.ms[i] % name.ms[i - 1] == 0);
    CHECK(name.torsion() == TorsionGroup::from_cyclic_orders(cyclic));
  }
}

TEST_CASE("Lichnerowicz obstruction") {
  CHECK(lichnerowicz_check(bp_link({2, 3, 3, 18})) == Lichnerowicz::Obstructed);  // I = 4 > 3
  CHECK(lichnerowicz_check(bp_link({2, 3, 5, 75})) == Lichnerowicz::Obstructed);
  CHECK(lichnerowicz_check(LinkDescriptor(ints({1, 9, 7, 14}), 28)) == Lichnerowicz::Borderline);
  CHECK(lichnerowicz_check(bp_link({2, 2, 2, 2})) == Lichnerowicz::NotObstructed);  // S^2 x S^3 quadric
  CHECK(lichnerowicz_check(bp_link({2, 3, 7, 43})) == Lichnerowicz::NotApplicable);
  CHECK(lichnerowicz_check(bp_link({4, 4, 4, 4})) == Lichnerowicz::NotApplicable);  // null
  CHECK(lichnerowicz_check(bp_link({3, 3, 3, 3})) == Lichnerowicz::NotObstructed);  // I = 1
}

TEST_CASE("Klt estimate") {
  auto k = klt_check(BPExponents(ints({2, 3, 7, 41})));
  CHECK(k.C == ints({861, 574, 246, 42}));
  CHECK(k.b == ints({1, 1, 1, 1}));
  CHECK(k.sum == Rational(1, 2) + Rational(1, 3) + Rational(1, 7) + Rational(1, 41));
  CHECK(k.upper == 1 + Rational(3, 2) * Rational(1, 41));
  CHECK(k.verdict);
  CHECK_FALSE(klt_check(BPExponents(ints({2, 3, 7, 43}))).verdict);
  auto shared = klt_check(BPExponents(ints({2, 4, 4, 4})));
  CHECK(shared.b == ints({2, 4, 4, 4}));
  CHECK_THROWS_AS(klt_check(BPExponents(ints({2, 3}))), Error);
}

TEST_CASE("extremality for coprime exponents") {
  CHECK(gk_coprime_check(BPExponents(ints({2, 3, 7, 41}))) == GkVerdict::ExtremalYes);
  CHECK(gk_coprime_check(BPExponents(ints({2, 3, 5, 7}))) == GkVerdict::ExtremalYes);
  CHECK(gk_coprime_check(BPExponents(ints({2, 3, 5, 61}))) == GkVerdict::ExtremalNo);
  CHECK(gk_coprime_check(BPExponents(ints({2, 3, 5, 59}))) == GkVerdict::ExtremalYes);
  CHECK(gk_coprime_check(BPExponents(ints({2, 3, 3, 18}))) == GkVerdict::NotApplicable);
  CHECK(gk_coprime_check(BPExponents(ints({2, 3, 7, 43}))) == GkVerdict::NotApplicable);
}

TEST_CASE("cone dimension, eta-Einstein and torsion allow-list") {
  CHECK(cone_dim_bound(bp_link({2, 3, 3, 18})) == ConeDim::ExactlyOne);
  CHECK(cone_dim_bound(LinkDescriptor(ints({3, 3, 2, 2}), 6)) == ConeDim::Undetermined);
  CHECK(eta_einstein_check(bp_link({2, 3, 7, 43})) == EtaEinstein::ExistsByTransverseAubinYau);
  CHECK(eta_einstein_check(bp_link({4, 4, 4, 4})) == EtaEinstein::ExistsByTransverseAubinYau);
  CHECK(eta_einstein_check(bp_link({2, 3, 3, 18})) == EtaEinstein::Unknown);
  CHECK(positive_torsion_allowed({}));
  CHECK(positive_torsion_allowed(TorsionGroup::from_cyclic_orders(ints({7, 7}))));
  CHECK(positive_torsion_allowed(TorsionGroup::from_cyclic_orders(ints({5, 5, 5, 5}))));
  CHECK(positive_torsion_allowed(TorsionGroup::from_cyclic_orders(ints({3, 3, 3, 3, 3, 3, 3, 3}))));
  CHECK(positive_torsion_allowed(TorsionGroup::from_cyclic_orders(std::vector<Integer>(10, 2))));
  CHECK_FALSE(positive_torsion_allowed(TorsionGroup::from_cyclic_orders(ints({7, 7, 7, 7}))));
  CHECK_FALSE(positive_torsion_allowed(TorsionGroup::from_cyclic_orders(ints({3, 3, 3, 3, 3, 3, 3, 3, 3, 3}))));
  CHECK_FALSE(positive_torsion_allowed(TorsionGroup::from_cyclic_orders(ints({2, 2, 3, 3, 3, 3}))));
}

TEST_CASE("Sasaki-Einstein table lookups") {
  CHECK(lookup("S^5") == SeTableVerdict::Yes);
  CHECK(lookup("9M_∞") == SeTableVerdict::Yes);
  CHECK(lookup("M_5") == SeTableVerdict::Yes);
  CHECK(lookup("8M_∞ # M_3") == SeTableVerdict::Open);
  CHECK(lookup("8M_∞ # M_5") == SeTableVerdict::Yes);
  CHECK(lookup("3M_∞ # M_8") == SeTableVerdict::Open);
  CHECK(lookup("3M_∞ # M_9") == SeTableVerdict::Yes);
  CHECK(lookup("5M_∞ # M_11") == SeTableVerdict::Open);
  CHECK(lookup("5M_∞ # M_12") == SeTableVerdict::Yes);
  CHECK(lookup("10M_∞ # M_5") == SeTableVerdict::Open);
  CHECK(lookup("10M_∞ # M_12") == SeTableVerdict::NotListed);
  CHECK(lookup("2M_5") == SeTableVerdict::Yes);
  CHECK(lookup("M_∞ # 2M_4") == SeTableVerdict::Yes);
  CHECK(lookup("2M_∞ # 2M_4") == SeTableVerdict::NotListed);
  CHECK(lookup("2M_3") == SeTableVerdict::Yes);
  CHECK(lookup("2M_∞ # 2M_3") == SeTableVerdict::Open);
  CHECK(lookup("M_2") == SeTableVerdict::Yes);
  CHECK(lookup("2M_2") == SeTableVerdict::Open);
  CHECK(lookup("M_∞ # 3M_2") == SeTableVerdict::Yes);
  CHECK(lookup("2M_∞ # M_2") == SeTableVerdict::Open);
  CHECK(lookup("M_2 # M_6") == SeTableVerdict::NotListed);
}

TEST_CASE("table rows and matching") {
  const auto& rows = table1().rows();
  CHECK(rows.size() == 18);
  auto hit = table1().match(parse_smale_name("3M_∞ # M_9"));
  REQUIRE(hit);
  CHECK(rows[hit->first].manifold.rfind("3M_∞", 0) == 0);
  CHECK(hit->second.at("k") == 3);
  CHECK(hit->second.at("m") == 9);
  auto n2 = table1().match(parse_smale_name("M_∞ # 3M_2"));
  REQUIRE(n2);
  CHECK(n2->second.at("n") == 3);
  CHECK(table1().match_row(parse_smale_name("M_5"), 1) == std::nullopt);
  CHECK_THROWS_AS(SeTable::parse("x\ty\n"), Error);
}

TEST_CASE("every free rank has a Sasaki-Einstein metric") {
  for (int k = 0; k <= 200; ++k) CHECK(se_table_lookup(SmaleName{k, {}}, table1()) == SeTableVerdict::Yes);
}

TEST_CASE("extremality failure coincides with the Lichnerowicz bound") {
  int seen = 0;
  for (long long a0 = 2; a0 <= 11; ++a0)
    for (long long a1 = a0 + 1; a1 <= 13; ++a1)
      for (long long a2 = a1 + 1; a2 <= 17; ++a2)
        for (long long a3 = a2 + 1; a3 <= 400; ++a3) {
          std::vector<long long> a{a0, a1, a2, a3};
          if (!pairwise_coprime(a)) continue;
          auto gk = gk_coprime_check(BPExponents(ints(a)));
          if (gk == GkVerdict::NotApplicable) continue;
          ++seen;
          auto lich = lichnerowicz_check(bp_link(a));
          CHECK((gk == GkVerdict::ExtremalNo) == (lich == Lichnerowicz::Obstructed || lich == Lichnerowicz::Borderline));
        }
  CHECK(seen > 20);
}

TEST_CASE("Klt links are positive; non-positive links are eta-Einstein") {
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = oracle::random_tuple(4, 2, 60);
    auto link = bp_link(a);
    auto sign = link_index(link).sign;
    if (klt_check(BPExponents(ints(a))).verdict) CHECK(sign == LinkSign::Positive);
    CHECK((eta_einstein_check(link) == EtaEinstein::ExistsByTransverseAubinYau) == (sign != LinkSign::Positive));
    CHECK((lichnerowicz_check(link) == Lichnerowicz::NotApplicable) == (sign != LinkSign::Positive));
  }
}

TEST_CASE("cone bound counts weights at least half the degree") {
  for (int trial = 0; trial < 500; ++trial) {
    auto w = oracle::random_tuple(4, 1, 30);
    long long d = oracle::uniform(2, 90);
    int big = 0;
    for (auto x : w) big += 2 * x >= d;
    CHECK((cone_dim_bound(LinkDescriptor(ints(w), d)) == ConeDim::ExactlyOne) == (big <= 1));
  }
}

TEST_CASE("classifying links") {
  auto r = classify_link(bp_link({2, 3, 3, 18}), nullptr, std::nullopt, &table1());
  REQUIRE(r.smale);
  CHECK(r.smale->render() == "4M_∞");
  CHECK(r.index.index == 4);
  CHECK(r.lichnerowicz == Lichnerowicz::Obstructed);
  CHECK(r.se_table == SeTableVerdict::Yes);
  CHECK(r.routes_agree == true);
  CHECK(r.bp == BPExponents(ints({2, 3, 3, 18})));
  CHECK_FALSE(r.quasi_smooth_checked);

  r = classify_link(bp_link({2, 3, 5, 75}), nullptr, std::nullopt, &table1());
  CHECK(r.smale->render() == "4M_2");
  CHECK(r.homology->torsion.to_string() == "(Z/2)^8");
  CHECK(r.torsion_allowed == true);

  LinkDescriptor t3(ints({2, 22, 17, 34}), 68);
  auto f = general_polynomial(t3);
  r = classify_link(t3, &f);
  CHECK(r.quasi_smooth_checked);
  CHECK(r.smale->render() == "3M_∞ # M_2");
  CHECK_FALSE(r.bp);
  CHECK_FALSE(r.klt);
  CHECK_FALSE(r.se_table);

  // Curves: only the subset algorithm and the verdicts apply.
  auto curve = classify_link(LinkDescriptor(ints({1, 1, 1}), 3));
  CHECK_FALSE(curve.homology);
  CHECK(curve.orlik_torsion.to_string() == "Z/3");  // circle bundle of degree 3 over an elliptic curve
  CHECK(curve.lichnerowicz == Lichnerowicz::NotApplicable);
}

TEST_CASE("classification errors") {
  try {
    classify_link(LinkDescriptor(ints({2, 2, 2, 2}), 6));
    FAIL("accepted non-primitive weights");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
  CHECK_THROWS_AS(classify_link(bp_link({2, 3, 3, 18}), nullptr, BPExponents(ints({2, 3, 3}))), Error);
  CHECK_THROWS_AS(classify_link(bp_link({2, 3, 3, 18}), nullptr, BPExponents(ints({2, 3, 3, 17}))), Error);
  LinkDescriptor l(ints({3, 2, 2, 1}), 6);
  auto not_qs = parse_polynomial("z0^2+z1^3+z2^3", 4);
  try {
    classify_link(l, &not_qs);
    FAIL("accepted a polynomial that is not quasi-smooth");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotQuasiSmooth);
  }
  auto wrong = parse_polynomial("z0^3+z1^3+z2^3+z3^3", 4);
  try {
    classify_link(l, &wrong);
    FAIL("accepted an inhomogeneous polynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotWeightedHomogeneous);
  }
}

TEST_SUITE_END();
