#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasakilink {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  InvalidInput,
  SyntaxError,
  ZeroPolynomial,
  DimensionMismatch,
  NoPositiveWeights,
  AmbiguousWeights,
  NotWeightedHomogeneous,
  DegenerateExponent,
  NotQuasiSmooth,
  NonIntegralC,
  NonIntegralInvariant,
  NonIntegralGenus,
  WrongDimension,
  UnpairedTorsion,
  InternalInconsistency,
  DataFormat,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Decimal rendering. Rationals always come out as "p/q" (q >= 1).
std::string to_string(const Integer& x);
std::string to_fraction(const Rational& x);

Integer floor(const Rational& x);
bool is_integer(const Rational& x);

Integer gcd_many(std::span<const Integer> xs);
Integer lcm_many(std::span<const Integer> xs);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<Integer, unsigned>> factorize(Integer x);

// Weights w_0..w_n and degree d of a weighted homogeneous polynomial.
class LinkDescriptor {
 public:
  LinkDescriptor(std::vector<Integer> weights, Integer degree);

  const std::vector<Integer>& weights() const { return weights_; }
  const Integer& degree() const { return degree_; }
  // Ambient complex dimension minus one; the link has real dimension 2n-1.
  std::size_t n() const { return weights_.size() - 1; }

  bool operator==(const LinkDescriptor&) const = default;

 private:
  std::vector<Integer> weights_;
  Integer degree_;
};

// (u, v) with d / w_i = u_i / v_i in lowest terms.
struct FractionalWeights {
  std::vector<Integer> u;
  std::vector<Integer> v;

  std::size_t size() const { return u.size(); }
  bool operator==(const FractionalWeights&) const = default;
};

// Exponents of a Brieskorn-Pham polynomial z_0^a_0 + ... + z_n^a_n.
class BPExponents {
 public:
  explicit BPExponents(std::vector<Integer> a);

  const std::vector<Integer>& values() const { return a_; }
  std::size_t size() const { return a_.size(); }

  bool operator==(const BPExponents&) const = default;

 private:
  std::vector<Integer> a_;
};

enum class LinkSign { Positive, Null, Negative };

const char* to_string(LinkSign sign);

struct LinkIndex {
  Integer index;
  LinkSign sign;
};

LinkDescriptor from_bp(const BPExponents& a);
FractionalWeights fractional_weights(const LinkDescriptor& link);
LinkIndex link_index(const LinkDescriptor& link);

}  // namespace sasakilink
