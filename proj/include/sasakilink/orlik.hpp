#pragma once

#include "sasakilink/core.hpp"
#include "sasakilink/homology.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sasakilink {

// Subsets of {0, .., n} as bitmasks; bit i set means index i is in the subset.
using Subset = std::uint32_t;

// Largest index set the subset recursion accepts (its cost grows like 3^count).
inline constexpr std::size_t kMaxOrlikVariables = 14;

// All subsets of {0, .., count-1}, by cardinality then lexicographically.
std::vector<Subset> subsets_in_order(std::size_t count);

std::string subset_label(Subset s);  // "{}", "{0}", "{0,1,3}"

inline bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline std::size_t cardinality(Subset s) { return static_cast<std::size_t>(__builtin_popcount(s)); }

// gcd(u_i : i not in S). For the full index set the complement is empty and
// the value is taken to be lcm(u), which makes c_full = 1 and keeps
// gcd(u_i : i not in S) = prod_{T in S} c_T true for every S.
Integer complement_gcd(std::span<const Integer> u, Subset s);

// c_S indexed by mask. c_{} = gcd(u); c_S = gcd(complement) / prod_{T proper in S} c_T.
std::vector<Integer> orlik_c_table(std::span<const Integer> u);

// k_S indexed by mask. k_S = eps_{n-|S|+1} * sum over all T in S (including
// the empty set and S itself) of (-1)^{|S|-|T|} prod_T u / (prod_T v * lcm_T u),
// eps_m = 1 for odd m and 0 for even m.
std::vector<Rational> orlik_k_table(const FractionalWeights& fw);

struct OrlikTable {
  std::size_t variables = 0;
  std::vector<Integer> c;
  std::vector<Rational> k;
  Integer r;                              // floor(max k), at least 0
  std::vector<Integer> invariant_factors;  // d_1 .. d_r, including unit factors
};

OrlikTable orlik_table(const FractionalWeights& fw);

// Torsion of H_{n-1} of the link, as predicted by the subset algorithm.
TorsionGroup orlik_torsion(const FractionalWeights& fw);

}  // namespace sasakilink
