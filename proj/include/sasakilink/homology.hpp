#pragma once

#include "sasakilink/core.hpp"

#include <span>
#include <string>
#include <vector>

namespace sasakilink {

struct PrimePower {
  Integer prime;
  unsigned exponent = 1;
  std::size_t multiplicity = 1;

  Integer value() const;
  bool operator==(const PrimePower&) const = default;
};

// Finite abelian group in canonical form: invariant factors d_1, d_2, ...
// with d_{j+1} | d_j and no factor equal to 1.
class TorsionGroup {
 public:
  TorsionGroup() = default;

  // Any list satisfying the divisibility chain in either direction; ones are dropped.
  static TorsionGroup from_invariant_factors(std::vector<Integer> factors);
  // Direct sum of cyclic groups of the given orders, in any order.
  static TorsionGroup from_cyclic_orders(std::span<const Integer> orders);
  static TorsionGroup from_elementary_divisors(std::span<const PrimePower> divisors);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  // Sorted by prime, then exponent.
  std::vector<PrimePower> elementary_divisors() const;

  bool trivial() const { return factors_.empty(); }
  Integer order() const;

  // "0", "Z/4", "(Z/2)^8", "(Z/6)^2 + Z/3"
  std::string to_string() const;

  bool operator==(const TorsionGroup&) const = default;

 private:
  std::vector<Integer> factors_;
};

struct HomologySummary {
  Integer b2;
  TorsionGroup torsion;

  bool operator==(const HomologySummary&) const = default;
};

// Every elementary divisor occurs with even multiplicity, as H_2 of a simply
// connected spin 5-manifold requires.
bool torsion_pairs(const TorsionGroup& t);

}  // namespace sasakilink
