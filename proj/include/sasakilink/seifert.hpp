#pragma once

#include "sasakilink/core.hpp"
#include "sasakilink/homology.hpp"
#include "sasakilink/polynomial.hpp"

#include <array>
#include <optional>

namespace sasakilink {

// Genus of a quasi-smooth curve of degree `degree` in P(w0, w1, w2), gcd(w) = 1:
//   g = (d^2/(w0 w1 w2) - d sum_{i<j} gcd(w_i,w_j)/(w_i w_j) + sum_i gcd(d,w_i)/w_i - 1) / 2
// Throws NonIntegralGenus when that is not a non-negative integer.
Integer divisor_genus(const std::array<Integer, 3>& weights, const Integer& degree);

// m_i = gcd of the three weights other than w_i.
std::array<Integer, 4> ramification_indices(const LinkDescriptor& link);

// The orbifold divisor {z_i = 0} of the Seifert base.
struct BranchDivisor {
  std::size_t index = 0;
  Integer ramification;                   // m_i
  std::array<Integer, 3> normalized_weights;  // w_j / m_i for j != i
  std::optional<Integer> reduced_degree;  // d / m_i, when m_i | d
  std::optional<Integer> genus;           // computed for contributing divisors (m_i > 1)
};

std::array<BranchDivisor, 4> branch_divisors(const LinkDescriptor& link);

// H_2 of a 5-dimensional link from its Seifert structure: b2 from the
// polytope, torsion sum_i (Z/m_i)^{2 g(D_i)} over divisors with m_i > 1.
// With f given, f must be quasi-smooth for the descriptor; without it
// quasi-smoothness is assumed.
HomologySummary kollar_homology(const LinkDescriptor& link, const Polynomial* f = nullptr);

}  // namespace sasakilink
