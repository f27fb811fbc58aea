#include "sasakilink/orlik.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace sasakilink {

namespace {

void check_size(std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidInput, "empty fractional weights");
  if (count > kMaxOrlikVariables)
    throw Error(ErrorCode::InvalidInput, "at most " + std::to_string(kMaxOrlikVariables) + " variables supported");
}

// Visits every proper submask of s, the empty set included.
template <typename F>
void for_proper_submasks(Subset s, F&& f) {
  if (s == 0) return;
  for (Subset t = (s - 1) & s;; t = (t - 1) & s) {
    f(t);
    if (t == 0) break;
  }
}

}  // namespace

std::vector<Subset> subsets_in_order(std::size_t count) {
  std::vector<Subset> out;
  const Subset full = count == 32 ? ~Subset{0} : (Subset{1} << count) - 1;
  for (Subset s = 0;; ++s) {
    out.push_back(s);
    if (s == full) break;
  }
  auto lex_key = [](Subset s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 32; ++i)
      if (contains(s, i)) idx.push_back(i);
    return idx;
  };
  std::sort(out.begin(), out.end(), [&](Subset a, Subset b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return lex_key(a) < lex_key(b);
  });
  return out;
}

std::string subset_label(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!contains(s, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Integer complement_gcd(std::span<const Integer> u, Subset s) {
  std::vector<Integer> rest;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!contains(s, i)) rest.push_back(u[i]);
  if (rest.empty()) return lcm_many(u);
  return gcd_many(rest);
}

std::vector<Integer> orlik_c_table(std::span<const Integer> u) {
  check_size(u.size());
  for (const auto& x : u)
    if (x < 1) throw Error(ErrorCode::InvalidInput, "u values must be positive");
  std::vector<Integer> c(std::size_t{1} << u.size(), Integer(0));
  for (Subset s : subsets_in_order(u.size())) {
    Integer denom = 1;
    for_proper_submasks(s, [&](Subset t) { denom *= c[t]; });
    Integer num = complement_gcd(u, s);
    if (denom == 0 || num % denom != 0 || num / denom < 1)
      throw Error(ErrorCode::NonIntegralC, "c" + subset_label(s) + " = " + num.str() + "/" + denom.str() +
                                               " is not a positive integer");
    c[s] = num / denom;
  }
  return c;
}

std::vector<Rational> orlik_k_table(const FractionalWeights& fw) {
  const std::size_t count = fw.size();
  check_size(count);
  if (fw.v.size() != count) throw Error(ErrorCode::DimensionMismatch, "u and v differ in length");
  const std::size_t masks = std::size_t{1} << count;

  // term(T) = prod_T u / (prod_T v * lcm_T u); term({}) = 1.
  std::vector<Rational> term(masks);
  for (Subset t = 0; t < masks; ++t) {
    Integer pu = 1, pv = 1, l = 1;
    for (std::size_t i = 0; i < count; ++i) {
      if (!contains(t, i)) continue;
      pu *= fw.u[i];
      pv *= fw.v[i];
      l = boost::multiprecision::lcm(l, fw.u[i]);
    }
    term[t] = Rational(pu, pv * l);
  }

  std::vector<Rational> k(masks);
  for (Subset s = 0; s < masks; ++s) {
    const std::size_t size = cardinality(s);
    // eps_{n-s+1}; n - s + 1 = count - s >= 0
    if ((count - size) % 2 == 0) continue;
    Rational sum = term[s];
    for_proper_submasks(s, [&](Subset t) {
      if ((size - cardinality(t)) % 2 == 0)
        sum += term[t];
      else
        sum -= term[t];
    });
    k[s] = sum;
  }
  return k;
}

OrlikTable orlik_table(const FractionalWeights& fw) {
  OrlikTable table;
  table.variables = fw.size();
  table.c = orlik_c_table(fw.u);
  table.k = orlik_k_table(fw);
  Rational max_k = 0;
  for (const auto& x : table.k) max_k = std::max(max_k, x);
  table.r = std::max(Integer(0), floor(max_k));
  for (Integer j = 1; j <= table.r; ++j) {
    Integer d = 1;
    for (std::size_t s = 0; s < table.k.size(); ++s)
      if (table.k[s] >= Rational(j)) d *= table.c[s];
    table.invariant_factors.push_back(d);
  }
  return table;
}

TorsionGroup orlik_torsion(const FractionalWeights& fw) {
  return TorsionGroup::from_invariant_factors(orlik_table(fw).invariant_factors);
}

}  // namespace sasakilink
