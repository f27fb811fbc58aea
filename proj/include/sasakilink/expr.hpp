#pragma once

#include "sasakilink/core.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sasakilink {

using Bindings = std::map<std::string, Integer, std::less<>>;

// Integer arithmetic over named parameters: + - * and parentheses, e.g.
// "2*(3*l+1)" or "k-1".
class Expr {
 public:
  static Expr parse(std::string_view text);

  Integer evaluate(const Bindings& vars) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// Disjunction of conjunctions of comparisons, e.g. "m=7 | m=9 | m>10" or
// "k=0 & n=1 | k=1". "true" always holds. Operators: = != < <= > >=.
class Predicate {
 public:
  static Predicate parse(std::string_view text);

  bool operator()(const Bindings& vars) const;
  const std::string& text() const { return text_; }

 private:
  struct Comparison {
    Expr lhs;
    std::string op;
    Expr rhs;
  };
  std::vector<std::vector<Comparison>> clauses_;
  std::string text_;
};

// Splits on a delimiter and trims ASCII whitespace from each piece.
std::vector<std::string> split_trimmed(std::string_view text, char delim);

}  // namespace sasakilink
