#include "sasakilink/seifert.hpp"

#include "sasakilink/graph.hpp"

#include <boost/multiprecision/integer.hpp>

namespace sasakilink {

namespace mp = boost::multiprecision;

Integer divisor_genus(const std::array<Integer, 3>& w, const Integer& d) {
  for (const auto& x : w)
    if (x < 1) throw Error(ErrorCode::InvalidInput, "weights must be positive");
  if (d < 1) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  if (gcd_many(w) != 1) throw Error(ErrorCode::InvalidInput, "weights of a divisor must be normalized (gcd 1)");

  Rational twice = Rational(d * d, w[0] * w[1] * w[2]) - 1;
  for (std::size_t i = 0; i < 3; ++i) {
    twice += Rational(mp::gcd(d, w[i]), w[i]);
    for (std::size_t j = i + 1; j < 3; ++j) twice -= Rational(d * mp::gcd(w[i], w[j]), w[i] * w[j]);
  }
  if (!is_integer(twice) || twice < 0 || numerator(twice) % 2 != 0)
    throw Error(ErrorCode::NonIntegralGenus, "genus formula gives " + to_fraction(twice / 2) + " for weights (" +
                                                 w[0].str() + "," + w[1].str() + "," + w[2].str() + "), degree " +
                                                 d.str());
  return numerator(twice) / 2;
}

namespace {

void require_surface(const LinkDescriptor& link) {
  if (link.n() != 3) throw Error(ErrorCode::WrongDimension, "the Seifert route needs exactly 4 weights");
}

}  // namespace

std::array<Integer, 4> ramification_indices(const LinkDescriptor& link) {
  require_surface(link);
  const auto& w = link.weights();
  std::array<Integer, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    Integer g = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) g = mp::gcd(g, w[j]);
    m[i] = g;
  }
  return m;
}

std::array<BranchDivisor, 4> branch_divisors(const LinkDescriptor& link) {
  auto m = ramification_indices(link);
  const auto& w = link.weights();
  std::array<BranchDivisor, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    BranchDivisor& D = out[i];
    D.index = i;
    D.ramification = m[i];
    std::size_t k = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) D.normalized_weights[k++] = w[j] / m[i];
    if (link.degree() % m[i] == 0) D.reduced_degree = link.degree() / m[i];
    if (m[i] > 1) {
      if (!D.reduced_degree)
        throw Error(ErrorCode::NotQuasiSmooth, "ramification index m_" + std::to_string(i) + " = " + m[i].str() +
                                                   " does not divide the degree");
      D.genus = divisor_genus(D.normalized_weights, *D.reduced_degree);
    }
  }
  return out;
}

HomologySummary kollar_homology(const LinkDescriptor& link, const Polynomial* f) {
  require_surface(link);
  if (f) {
    auto report = quasismooth_surface(*f, link);
    if (!report.verdict) throw Error(ErrorCode::NotQuasiSmooth, "polynomial is not quasi-smooth");
  }
  auto divisors = branch_divisors(link);
  std::vector<Integer> cyclic;
  for (const auto& D : divisors) {
    if (D.ramification == 1) continue;
    for (Integer k = 0; k < 2 * *D.genus; ++k) cyclic.push_back(D.ramification);
  }
  auto graph = build_graph(fractional_weights(link));
  return {graph.kappa, TorsionGroup::from_cyclic_orders(cyclic)};
}

}  // namespace sasakilink
