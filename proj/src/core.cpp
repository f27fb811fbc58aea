#include "sasakilink/core.hpp"

#include <boost/multiprecision/integer.hpp>

namespace sasakilink {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoPositiveWeights: return "NoPositiveWeights";
    case ErrorCode::AmbiguousWeights: return "AmbiguousWeights";
    case ErrorCode::NotWeightedHomogeneous: return "NotWeightedHomogeneous";
    case ErrorCode::DegenerateExponent: return "DegenerateExponent";
    case ErrorCode::NotQuasiSmooth: return "NotQuasiSmooth";
    case ErrorCode::NonIntegralC: return "NonIntegralC";
    case ErrorCode::NonIntegralInvariant: return "NonIntegralInvariant";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::UnpairedTorsion: return "UnpairedTorsion";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::DataFormat: return "DataFormat";
  }
  return "Unknown";
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_fraction(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Integer floor(const Rational& x) {
  Integer num = numerator(x);
  Integer den = denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

Integer gcd_many(std::span<const Integer> xs) {
  Integer g = 0;
  for (const auto& x : xs) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

Integer lcm_many(std::span<const Integer> xs) {
  Integer l = 1;
  for (const auto& x : xs) {
    if (x <= 0) throw Error(ErrorCode::InvalidInput, "lcm requires positive integers, got " + x.str());
    l = l / boost::multiprecision::gcd(l, x) * x;
  }
  return l;
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer x) {
  std::vector<std::pair<Integer, unsigned>> out;
  if (x < 0) x = -x;
  if (x <= 1) return out;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (Integer p = 5; p * p <= x; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

LinkDescriptor::LinkDescriptor(std::vector<Integer> weights, Integer degree)
    : weights_(std::move(weights)), degree_(std::move(degree)) {
  if (weights_.size() < 3)
    throw Error(ErrorCode::InvalidInput,
                "need >= 3 variables, got " + std::to_string(weights_.size()));
  for (const auto& w : weights_)
    if (w < 1) throw Error(ErrorCode::InvalidInput, "weights must be >= 1, got " + w.str());
  if (degree_ < 1) throw Error(ErrorCode::InvalidInput, "degree must be >= 1, got " + degree_.str());
}

BPExponents::BPExponents(std::vector<Integer> a) : a_(std::move(a)) {
  if (a_.empty()) throw Error(ErrorCode::InvalidInput, "empty exponent list");
  for (const auto& x : a_)
    if (x < 2) throw Error(ErrorCode::InvalidInput, "Brieskorn-Pham exponents must be >= 2, got " + x.str());
}

const char* to_string(LinkSign sign) {
  switch (sign) {
    case LinkSign::Positive: return "Positive";
    case LinkSign::Null: return "Null";
    case LinkSign::Negative: return "Negative";
  }
  return "Unknown";
}

LinkDescriptor from_bp(const BPExponents& a) {
  Integer d = lcm_many(a.values());
  std::vector<Integer> w;
  w.reserve(a.size());
  for (const auto& ai : a.values()) w.push_back(d / ai);
  return LinkDescriptor(std::move(w), d);
}

FractionalWeights fractional_weights(const LinkDescriptor& link) {
  FractionalWeights fw;
  const Integer& d = link.degree();
  for (const auto& w : link.weights()) {
    Integer g = boost::multiprecision::gcd(d, w);
    fw.u.push_back(d / g);
    fw.v.push_back(w / g);
  }
  return fw;
}

LinkIndex link_index(const LinkDescriptor& link) {
  Integer total = 0;
  for (const auto& w : link.weights()) total += w;
  Integer index = total - link.degree();
  LinkSign sign = index > 0 ? LinkSign::Positive : index == 0 ? LinkSign::Null : LinkSign::Negative;
  return {index, sign};
}

}  // namespace sasakilink
