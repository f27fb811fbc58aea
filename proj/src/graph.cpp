#include "sasakilink/graph.hpp"

#include "sasakilink/orlik.hpp"

#include <boost/multiprecision/integer.hpp>

namespace sasakilink {

namespace mp = boost::multiprecision;

std::size_t edge_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  for (std::size_t e = 0; e < kEdges.size(); ++e)
    if (kEdges[e].first == i && kEdges[e].second == j) return e;
  throw Error(ErrorCode::InvalidInput, "not an edge of the tetrahedron");
}

std::array<std::size_t, 3> opposite_face(std::size_t i) {
  std::array<std::size_t, 3> out{};
  std::size_t k = 0;
  for (std::size_t j = 0; j < 4; ++j)
    if (j != i) out[k++] = j;
  return out;
}

namespace {

// m_i from the closed gcd expression, e.g.
// m_0 = u_0 g(012) g(013) g(023) / (g(0123) g(01) g(02) g(03)).
Integer reduced_index_closed_form(const std::array<Integer, 4>& u, std::size_t i) {
  auto g = [&](std::initializer_list<std::size_t> idx) {
    Integer r = 0;
    for (auto k : idx) r = mp::gcd(r, u[k]);
    return r;
  };
  auto [a, b, c] = opposite_face(i);
  Integer num = u[i] * g({i, a, b}) * g({i, a, c}) * g({i, b, c});
  Integer den = g({0, 1, 2, 3}) * g({i, a}) * g({i, b}) * g({i, c});
  return num / den;
}

}  // namespace

BrieskornGraph build_graph(const FractionalWeights& fw) {
  if (fw.size() != 4 || fw.v.size() != 4)
    throw Error(ErrorCode::WrongDimension, "the polytope is defined for 5-dimensional links (4 weights)");
  BrieskornGraph g;
  for (std::size_t i = 0; i < 4; ++i) {
    g.u[i] = fw.u[i];
    g.v[i] = fw.v[i];
  }
  const auto& u = g.u;
  const auto& v = g.v;

  for (std::size_t i = 0; i < 4; ++i) {
    Rational a = 1;
    for (auto j : opposite_face(i)) a -= Rational(1, v[j]);
    g.vertex[i] = a;
  }
  for (std::size_t e = 0; e < 6; ++e) {
    auto [i, j] = kEdges[e];
    g.edge[e] = Rational(mp::gcd(u[i], u[j]), v[i] * v[j]);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    auto [a, b, c] = opposite_face(i);
    g.face[i] = Rational(mp::gcd(mp::gcd(u[a], u[b]), u[c]), v[a] * v[b] * v[c]);
  }
  Integer lcm_all = lcm_many(u);
  g.t = Rational(u[0] * u[1] * u[2] * u[3], v[0] * v[1] * v[2] * v[3] * lcm_all);
  g.tau = -1;
  for (std::size_t i = 0; i < 4; ++i) g.tau += Rational(1, v[i]);

  // m_i is the c-value of the complementary triple.
  auto c = orlik_c_table(fw.u);
  for (std::size_t i = 0; i < 4; ++i) {
    Subset triple = 0;
    for (auto j : opposite_face(i)) triple |= Subset{1} << j;
    g.reduced_index[i] = c[triple];
    if (g.reduced_index[i] != reduced_index_closed_form(u, i))
      throw Error(ErrorCode::InternalInconsistency, "reduced index m_" + std::to_string(i) +
                                                        " differs between c-table and closed form");
  }

  // Face term for the face opposite i: product of its three edges over its face number.
  std::array<Rational, 4> face_term;
  for (std::size_t i = 0; i < 4; ++i) {
    auto [a, b, c2] = opposite_face(i);
    Rational product = g.edge[edge_index(a, b)] * g.edge[edge_index(a, c2)] * g.edge[edge_index(b, c2)];
    face_term[i] = product / g.face[i];
    Rational sum = g.edge[edge_index(a, b)] + g.edge[edge_index(a, c2)] + g.edge[edge_index(b, c2)];
    g.two_genus[i] = face_term[i] - sum - g.vertex[i];
    const Rational& two_g = g.two_genus[i];
    if (g.reduced_index[i] > 1 && (!is_integer(two_g) || two_g < 0 || numerator(two_g) % 2 != 0))
      throw Error(ErrorCode::NonIntegralInvariant,
                  "2g_" + std::to_string(i) + " = " + to_fraction(two_g) + " is not a non-negative even integer");
  }

  Rational kappa = -g.tau + g.t;
  for (const auto& e : g.edge) kappa += e;
  for (const auto& f : face_term) kappa -= f;
  if (!is_integer(kappa) || kappa < 0)
    throw Error(ErrorCode::NonIntegralInvariant, "kappa = " + to_fraction(kappa) + " is not a non-negative integer");
  g.kappa = numerator(kappa);
  return g;
}

HomologySummary graph_homology(const BrieskornGraph& g) {
  std::vector<Integer> cyclic;
  for (std::size_t i = 0; i < 4; ++i) {
    if (g.reduced_index[i] == 1) continue;
    for (Integer k = 0; k < numerator(g.two_genus[i]); ++k) cyclic.push_back(g.reduced_index[i]);
  }
  return {g.kappa, TorsionGroup::from_cyclic_orders(cyclic)};
}

}  // namespace sasakilink
