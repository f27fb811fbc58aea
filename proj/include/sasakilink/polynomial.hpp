#pragma once

#include "sasakilink/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sasakilink {

using Exponents = std::vector<std::uint32_t>;

struct Monomial {
  Rational coefficient;
  Exponents exponents;

  bool operator==(const Monomial&) const = default;
};

// Nonempty sum of monomials with distinct exponent vectors. Monomials are
// kept in descending lexicographic order of exponents, so z0^2 precedes z1^3.
class Polynomial {
 public:
  // Merges equal exponent vectors by adding coefficients and drops zeros.
  Polynomial(std::size_t variables, std::vector<Monomial> monomials);

  std::size_t variables() const { return variables_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }

  bool operator==(const Polynomial&) const = default;

 private:
  std::size_t variables_;
  std::vector<Monomial> monomials_;
};

// Grammar (whitespace ignored, 'z' or 'Z'):
//   poly   := term (('+' | '-') term)*
//   term   := [coeff '*'] factor ('*' factor)* | coeff
//   factor := 'z' INDEX ['^' EXPONENT]
//   coeff  := INTEGER ['/' INTEGER]
// A leading '-' negates the first coefficient. When `variables` is given,
// every index must be below it; otherwise the count is max index + 1.
Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> variables = {});

// Canonical text; parse_polynomial(render(f)) == f.
std::string render(const Polynomial& f);

enum class StandardKind { BP, Chain };

// BP: sum z_i^a_i. Chain: z0^a0 + z0 z1^a1 + ... + z_{n-1} z_n^a_n.
Polynomial make_standard(StandardKind kind, const std::vector<Integer>& a);

// Primitive positive integer solution (w, d) of <b, w> = d over the support.
LinkDescriptor infer_weights(const Polynomial& f);

bool is_weighted_homogeneous(const Polynomial& f, const LinkDescriptor& link);

// Support of a general polynomial of the given weights and degree, i.e. every
// exponent vector of weighted degree d, with unit coefficients. Throws
// ZeroPolynomial if there is none.
Polynomial general_polynomial(const LinkDescriptor& link);

struct QuasiSmoothCondition {
  int clause = 0;                    // numbering of the criterion, from 1
  std::vector<std::size_t> indices;  // variable i, or the pair (i, j)
  bool satisfied = false;
  std::vector<Exponents> witnesses;
};

struct QuasiSmoothReport {
  bool verdict = false;
  // Verdicts are read off the monomial support and hold for general
  // coefficients with that support.
  bool assumes_general_coefficients = true;
  std::vector<QuasiSmoothCondition> conditions;

  const QuasiSmoothCondition* first_failure() const;
};

// Curves in P(w0, w1, w2). For each i: (1) a monomial z_i^a z_j with j = i
// allowed (a pure power); (2) a monomial not involving z_i.
QuasiSmoothReport quasismooth_curve(const Polynomial& f, const LinkDescriptor& link);

// Surfaces in P(w0, .., w3). Zero exponents are accepted in the two-variable
// monomials of clauses (2) and (3), so pure powers count.
QuasiSmoothReport quasismooth_surface(const Polynomial& f, const LinkDescriptor& link);

}  // namespace sasakilink
