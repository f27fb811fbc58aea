#include "sasakilink/polynomial.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace sasakilink {

Polynomial::Polynomial(std::size_t variables, std::vector<Monomial> monomials) : variables_(variables) {
  std::map<Exponents, Rational, std::greater<>> merged;
  for (auto& m : monomials) {
    if (m.exponents.size() != variables_)
      throw Error(ErrorCode::DimensionMismatch, "monomial has " + std::to_string(m.exponents.size()) +
                                                    " exponents, polynomial has " + std::to_string(variables_) +
                                                    " variables");
    merged[std::move(m.exponents)] += m.coefficient;
  }
  for (auto& [e, c] : merged)
    if (c != 0) monomials_.push_back({c, e});
  if (monomials_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  struct Term {
    Rational coefficient;
    std::map<std::size_t, std::uint64_t> powers;
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negate) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negate = c == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, "syntax error at byte " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_var(char c) { return c == 'z' || c == 'Z'; }

  std::string digits() {
    skip();
    if (!is_digit(peek())) fail("expected a decimal integer");
    std::string s;
    while (is_digit(peek())) {
      s.push_back(peek());
      ++pos_;
      // digits are contiguous; whitespace inside a number is not allowed
    }
    return s;
  }

  std::uint64_t small_number(const char* what) {
    std::string s = digits();
    Integer v(s);
    if (v > std::numeric_limits<std::uint32_t>::max()) fail(std::string(what) + " too large");
    return static_cast<std::uint64_t>(v);
  }

  Rational coeff() {
    Integer num(digits());
    skip();
    if (peek() == '/') {
      ++pos_;
      Integer den(digits());
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  void factor(Term& t) {
    skip();
    if (!is_var(peek())) fail("expected variable 'z<index>'");
    ++pos_;
    if (!is_digit(peek())) fail("expected variable index");
    std::size_t index = small_number("variable index");
    std::uint64_t e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      e = small_number("exponent");
    }
    t.powers[index] += e;
    if (t.powers[index] > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
  }

  Term term() {
    Term t{Rational(1), {}};
    skip();
    if (is_digit(peek())) {
      t.coefficient = coeff();
      skip();
      if (peek() != '*') return t;
      ++pos_;
      factor(t);
    } else if (is_var(peek())) {
      factor(t);
    } else {
      fail("expected coefficient or variable");
    }
    for (;;) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> variables) {
  auto terms = Parser(text).parse();
  std::size_t count = 0;
  for (const auto& t : terms)
    for (const auto& [i, e] : t.powers) count = std::max(count, i + 1);
  if (variables) {
    if (count > *variables)
      throw Error(ErrorCode::InvalidInput, "variable index z" + std::to_string(count - 1) + " out of range for " +
                                               std::to_string(*variables) + " variables");
    count = *variables;
  }
  std::vector<Monomial> monomials;
  for (const auto& t : terms) {
    Exponents e(count, 0);
    for (const auto& [i, p] : t.powers) e[i] = static_cast<std::uint32_t>(p);
    monomials.push_back({t.coefficient, std::move(e)});
  }
  return Polynomial(count, std::move(monomials));
}

std::string render(const Polynomial& f) {
  std::string out;
  bool first = true;
  for (const auto& m : f.monomials()) {
    Rational c = m.coefficient;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    bool constant = std::all_of(m.exponents.begin(), m.exponents.end(), [](auto e) { return e == 0; });
    std::string coeff = denominator(c) == 1 ? numerator(c).str() : to_fraction(c);
    if (constant) {
      out += coeff;
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      out += coeff;
      need_star = true;
    }
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (need_star) out += "*";
      out += "z" + std::to_string(i);
      if (m.exponents[i] != 1) out += "^" + std::to_string(m.exponents[i]);
      need_star = true;
    }
  }
  return out;
}

Polynomial make_standard(StandardKind kind, const std::vector<Integer>& a) {
  if (a.empty()) throw Error(ErrorCode::InvalidInput, "empty exponent list");
  std::vector<std::uint32_t> exps;
  for (const auto& x : a) {
    if (x < 2) throw Error(ErrorCode::InvalidInput, "exponents must be >= 2, got " + x.str());
    if (x > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::InvalidInput, "exponent too large");
    exps.push_back(static_cast<std::uint32_t>(x));
  }
  const std::size_t n = exps.size();
  std::vector<Monomial> monomials;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = exps[i];
    if (kind == StandardKind::Chain && i > 0) e[i - 1] = 1;
    monomials.push_back({Rational(1), std::move(e)});
  }
  return Polynomial(n, std::move(monomials));
}

LinkDescriptor infer_weights(const Polynomial& f) {
  // Unknowns (w_0..w_n, d); one row <b, w> - d = 0 per monomial.
  const std::size_t cols = f.variables() + 1;
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : f.monomials()) {
    std::vector<Rational> row(cols);
    for (std::size_t i = 0; i < f.variables(); ++i) row[i] = m.exponents[i];
    row[cols - 1] = -1;
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<std::vector<Rational>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) != pivot_cols.end()) continue;
    std::vector<Rational> x(cols);
    x[c] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -rows[i][c];
    basis.push_back(std::move(x));
  }

  if (basis.empty()) throw Error(ErrorCode::NoPositiveWeights, "only the zero solution: no positive weights");
  for (std::size_t c = 0; c < cols; ++c) {
    bool zero = std::all_of(basis.begin(), basis.end(), [&](const auto& x) { return x[c] == 0; });
    if (zero)
      throw Error(ErrorCode::NoPositiveWeights, c + 1 == cols ? "degree forced to zero"
                                                              : "weight w" + std::to_string(c) + " forced to zero");
  }
  if (basis.size() > 1)
    throw Error(ErrorCode::AmbiguousWeights,
                "solution space has dimension " + std::to_string(basis.size()) + ": weights not determined");

  auto x = basis.front();
  bool all_pos = std::all_of(x.begin(), x.end(), [](const Rational& q) { return q > 0; });
  bool all_neg = std::all_of(x.begin(), x.end(), [](const Rational& q) { return q < 0; });
  if (!all_pos && !all_neg) throw Error(ErrorCode::NoPositiveWeights, "solution ray has mixed signs");

  Integer den = 1;
  for (const auto& q : x) den = boost::multiprecision::lcm(den, denominator(q));
  std::vector<Integer> ints;
  for (const auto& q : x) ints.push_back(abs(numerator(q) * (den / denominator(q))));
  Integer g = gcd_many(ints);
  for (auto& v : ints) v /= g;
  Integer d = ints.back();
  ints.pop_back();
  return LinkDescriptor(std::move(ints), d);
}

namespace {

Integer weighted_degree(const Exponents& e, const std::vector<Integer>& w) {
  Integer s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += Integer(e[i]) * w[i];
  return s;
}

void require_homogeneous(const Polynomial& f, const LinkDescriptor& link, std::size_t variables) {
  if (f.variables() != variables || link.weights().size() != variables)
    throw Error(ErrorCode::WrongDimension, "criterion needs exactly " + std::to_string(variables) + " variables");
  if (!is_weighted_homogeneous(f, link))
    throw Error(ErrorCode::NotWeightedHomogeneous, "polynomial is not weighted homogeneous for the given weights");
}

std::size_t support_size(const Exponents& e) {
  return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](auto x) { return x != 0; }));
}

// z_i^a z_j, with j == i meaning a pure power of z_i.
bool is_power_times_variable(const Exponents& e, std::size_t i) {
  if (e[i] == 0) return false;
  std::size_t others = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k == i || e[k] == 0) continue;
    if (e[k] != 1) return false;
    ++others;
  }
  return others <= 1;
}

bool supported_in(const Exponents& e, std::initializer_list<std::size_t> allowed) {
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0 && std::find(allowed.begin(), allowed.end(), k) == allowed.end()) return false;
  return true;
}

template <typename Pred>
const Exponents* find_monomial(const Polynomial& f, Pred pred) {
  for (const auto& m : f.monomials())
    if (pred(m.exponents)) return &m.exponents;
  return nullptr;
}

}  // namespace

bool is_weighted_homogeneous(const Polynomial& f, const LinkDescriptor& link) {
  if (f.variables() != link.weights().size())
    throw Error(ErrorCode::DimensionMismatch, "polynomial has " + std::to_string(f.variables()) +
                                                  " variables, descriptor has " +
                                                  std::to_string(link.weights().size()) + " weights");
  return std::all_of(f.monomials().begin(), f.monomials().end(),
                     [&](const Monomial& m) { return weighted_degree(m.exponents, link.weights()) == link.degree(); });
}

Polynomial general_polynomial(const LinkDescriptor& link) {
  constexpr std::size_t kLimit = 2'000'000;
  const auto& w = link.weights();
  const std::size_t n = w.size();
  std::vector<Monomial> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, const Integer& rest) -> void {
    if (i + 1 == n) {
      if (rest % w[i] != 0) return;
      Integer q = rest / w[i];
      if (q > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::InvalidInput, "exponent too large");
      e[i] = static_cast<std::uint32_t>(q);
      out.push_back({Rational(1), e});
      if (out.size() > kLimit) throw Error(ErrorCode::InvalidInput, "too many monomials of this degree");
      return;
    }
    Integer r = rest;
    for (std::uint32_t k = 0;; ++k) {
      e[i] = k;
      self(self, i + 1, r);
      if (r < w[i]) break;
      r -= w[i];
    }
    e[i] = 0;
  };
  rec(rec, 0, link.degree());
  if (out.empty()) throw Error(ErrorCode::ZeroPolynomial, "no monomial has the requested weighted degree");
  return Polynomial(n, std::move(out));
}

const QuasiSmoothCondition* QuasiSmoothReport::first_failure() const {
  for (const auto& c : conditions)
    if (!c.satisfied) return &c;
  return nullptr;
}

QuasiSmoothReport quasismooth_curve(const Polynomial& f, const LinkDescriptor& link) {
  require_homogeneous(f, link, 3);
  QuasiSmoothReport report;
  for (std::size_t i = 0; i < 3; ++i) {
    QuasiSmoothCondition first{1, {i}, false, {}};
    bool any_candidate = false;
    for (const auto& m : f.monomials()) {
      if (!is_power_times_variable(m.exponents, i)) continue;
      any_candidate = true;
      // z_i^a z_j: a pure power z_i^e reads as z_i^(e-1) z_i.
      Integer a = support_size(m.exponents) == 1 ? Integer(m.exponents[i] - 1) : Integer(m.exponents[i]);
      if (a < link.degree()) {
        first.satisfied = true;
        first.witnesses.push_back(m.exponents);
        break;
      }
    }
    if (any_candidate && !first.satisfied)
      throw Error(ErrorCode::DegenerateExponent, "criterion requires d > a_" + std::to_string(i));
    report.conditions.push_back(std::move(first));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    QuasiSmoothCondition second{2, {i}, false, {}};
    if (auto* e = find_monomial(f, [&](const Exponents& x) { return x[i] == 0; })) {
      second.satisfied = true;
      second.witnesses.push_back(*e);
    }
    report.conditions.push_back(std::move(second));
  }
  report.verdict = std::all_of(report.conditions.begin(), report.conditions.end(),
                               [](const auto& c) { return c.satisfied; });
  return report;
}

QuasiSmoothReport quasismooth_surface(const Polynomial& f, const LinkDescriptor& link) {
  require_homogeneous(f, link, 4);
  const auto& w = link.weights();
  QuasiSmoothReport report;

  for (std::size_t i = 0; i < 4; ++i) {
    QuasiSmoothCondition c{1, {i}, false, {}};
    if (auto* e = find_monomial(f, [&](const Exponents& x) { return is_power_times_variable(x, i); })) {
      c.satisfied = true;
      c.witnesses.push_back(*e);
    }
    report.conditions.push_back(std::move(c));
  }

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (boost::multiprecision::gcd(w[i], w[j]) == 1) continue;
      QuasiSmoothCondition c{2, {i, j}, false, {}};
      if (auto* e = find_monomial(f, [&](const Exponents& x) { return supported_in(x, {i, j}); })) {
        c.satisfied = true;
        c.witnesses.push_back(*e);
      }
      report.conditions.push_back(std::move(c));
    }
  }

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      QuasiSmoothCondition c{3, {i, j}, false, {}};
      if (auto* e = find_monomial(f, [&](const Exponents& x) { return supported_in(x, {i, j}); })) {
        c.satisfied = true;
        c.witnesses.push_back(*e);
      } else {
        std::size_t k = 0;
        while (k == i || k == j) ++k;
        std::size_t l = k + 1;
        while (l == i || l == j) ++l;
        auto* ek = find_monomial(f, [&](const Exponents& x) { return x[k] == 1 && supported_in(x, {i, j, k}); });
        auto* el = find_monomial(f, [&](const Exponents& x) { return x[l] == 1 && supported_in(x, {i, j, l}); });
        if (ek && el) {
          c.satisfied = true;
          c.witnesses.push_back(*ek);
          c.witnesses.push_back(*el);
        }
      }
      report.conditions.push_back(std::move(c));
    }
  }

  report.verdict = std::all_of(report.conditions.begin(), report.conditions.end(),
                               [](const auto& c) { return c.satisfied; });
  return report;
}

}  // namespace sasakilink
