#include "sasakilink/homology.hpp"

#include <algorithm>
#include <map>

namespace sasakilink {

Integer PrimePower::value() const { return boost::multiprecision::pow(prime, exponent); }

TorsionGroup TorsionGroup::from_invariant_factors(std::vector<Integer> factors) {
  std::erase_if(factors, [](const Integer& x) { return x == 1; });
  for (const auto& x : factors)
    if (x < 1) throw Error(ErrorCode::InvalidInput, "invariant factors must be positive, got " + x.str());
  if (factors.size() > 1 && factors.front() < factors.back()) std::reverse(factors.begin(), factors.end());
  for (std::size_t j = 0; j + 1 < factors.size(); ++j)
    if (factors[j] % factors[j + 1] != 0)
      throw Error(ErrorCode::InvalidInput, "invariant factors must form a divisibility chain");
  TorsionGroup t;
  t.factors_ = std::move(factors);
  return t;
}

TorsionGroup TorsionGroup::from_cyclic_orders(std::span<const Integer> orders) {
  std::map<std::pair<Integer, unsigned>, std::size_t> counts;
  for (const auto& m : orders) {
    if (m < 1) throw Error(ErrorCode::InvalidInput, "cyclic orders must be positive, got " + m.str());
    for (const auto& [p, e] : factorize(m)) ++counts[{p, e}];
  }
  std::vector<PrimePower> divisors;
  for (const auto& [pe, c] : counts) divisors.push_back({pe.first, pe.second, c});
  return from_elementary_divisors(divisors);
}

TorsionGroup TorsionGroup::from_elementary_divisors(std::span<const PrimePower> divisors) {
  // Per prime, the powers sorted descending; d_j takes the j-th largest of each.
  std::map<Integer, std::vector<Integer>> by_prime;
  for (const auto& pp : divisors) {
    if (pp.prime < 2 || pp.exponent == 0)
      throw Error(ErrorCode::InvalidInput, "elementary divisors must be prime powers");
    for (std::size_t i = 0; i < pp.multiplicity; ++i) by_prime[pp.prime].push_back(pp.value());
  }
  std::size_t length = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    length = std::max(length, powers.size());
  }
  std::vector<Integer> factors(length, Integer(1));
  for (const auto& [p, powers] : by_prime)
    for (std::size_t j = 0; j < powers.size(); ++j) factors[j] *= powers[j];
  TorsionGroup t;
  t.factors_ = std::move(factors);
  return t;
}

std::vector<PrimePower> TorsionGroup::elementary_divisors() const {
  std::map<std::pair<Integer, unsigned>, std::size_t> counts;
  for (const auto& d : factors_)
    for (const auto& [p, e] : factorize(d)) ++counts[{p, e}];
  std::vector<PrimePower> out;
  for (const auto& [pe, c] : counts) out.push_back({pe.first, pe.second, c});
  return out;
}

Integer TorsionGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::string TorsionGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < factors_.size();) {
    std::size_t k = j;
    while (k < factors_.size() && factors_[k] == factors_[j]) ++k;
    if (!out.empty()) out += " + ";
    std::size_t count = k - j;
    out += count == 1 ? "Z/" + factors_[j].str() : "(Z/" + factors_[j].str() + ")^" + std::to_string(count);
    j = k;
  }
  return out;
}

bool torsion_pairs(const TorsionGroup& t) {
  auto divisors = t.elementary_divisors();
  return std::all_of(divisors.begin(), divisors.end(), [](const PrimePower& p) { return p.multiplicity % 2 == 0; });
}

}  // namespace sasakilink
