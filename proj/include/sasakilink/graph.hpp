#pragma once

#include "sasakilink/core.hpp"
#include "sasakilink/homology.hpp"

#include <array>
#include <cstddef>
#include <utility>

namespace sasakilink {

// Edge order of the tetrahedron: 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::size_t edge_index(std::size_t i, std::size_t j);

// The three vertices of the face opposite vertex i, ascending.
std::array<std::size_t, 3> opposite_face(std::size_t i);

// Labelled tetrahedron built from the fractional weights of a 5-dimensional link.
struct BrieskornGraph {
  std::array<Integer, 4> u;
  std::array<Integer, 4> v;
  std::array<Rational, 4> vertex;  // alpha_i = 1 - 1/v_j - 1/v_k - 1/v_l
  std::array<Rational, 6> edge;    // alpha_ij = gcd(u_i, u_j) / (v_i v_j), in kEdges order
  std::array<Rational, 4> face;    // face[i] is alpha_jkl for the face opposite vertex i
  Rational t;                      // u0u1u2u3 / (v0v1v2v3 lcm(u))
  Rational tau;                    // -1 + sum 1/v_i
  std::array<Integer, 4> reduced_index;  // m_i
  // 2g_i. A non-negative even integer wherever m_i > 1; where m_i = 1 the
  // value never enters H_2 and may be any rational.
  std::array<Rational, 4> two_genus;
  Integer kappa;

  // g_i for a vertex with m_i > 1.
  Integer genus(std::size_t i) const { return numerator(two_genus[i]) / 2; }
};

// Throws WrongDimension unless there are exactly four weights, and
// NonIntegralInvariant if 2g_i is not a non-negative even integer at a vertex
// with m_i > 1, or kappa is not a non-negative integer.
BrieskornGraph build_graph(const FractionalWeights& fw);

// Z^kappa + sum_i (Z/m_i)^{2 g_i}.
HomologySummary graph_homology(const BrieskornGraph& g);

}  // namespace sasakilink
