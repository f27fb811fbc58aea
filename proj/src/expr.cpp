#include "sasakilink/expr.hpp"

#include <cctype>

namespace sasakilink {

struct Expr::Node {
  enum class Kind { Number, Variable, Add, Sub, Mul, Neg } kind;
  Integer value;
  std::string name;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    auto n = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::DataFormat, "bad expression \"" + std::string(text_) + "\": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  static NodePtr make(Kind k, NodePtr a, NodePtr b) {
    return std::make_shared<Expr::Node>(Expr::Node{k, 0, {}, std::move(a), std::move(b)});
  }

  NodePtr sum() {
    auto n = product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      n = make(c == '+' ? Kind::Add : Kind::Sub, n, product());
    }
    return n;
  }
  NodePtr product() {
    auto n = unary();
    while (peek() == '*') {
      ++pos_;
      n = make(Kind::Mul, n, unary());
    }
    return n;
  }
  NodePtr unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return make(Kind::Neg, unary(), nullptr);
    }
    if (c == '(') {
      ++pos_;
      auto n = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
      return std::make_shared<Expr::Node>(Expr::Node{Kind::Number, Integer(digits), {}, nullptr, nullptr});
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
      return std::make_shared<Expr::Node>(Expr::Node{Kind::Variable, 0, name, nullptr, nullptr});
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Integer eval(const Expr::Node& n, const Bindings& vars) {
  switch (n.kind) {
    case Kind::Number: return n.value;
    case Kind::Variable: {
      auto it = vars.find(n.name);
      if (it == vars.end()) throw Error(ErrorCode::DataFormat, "unbound parameter '" + n.name + "'");
      return it->second;
    }
    case Kind::Add: return eval(*n.lhs, vars) + eval(*n.rhs, vars);
    case Kind::Sub: return eval(*n.lhs, vars) - eval(*n.rhs, vars);
    case Kind::Mul: return eval(*n.lhs, vars) * eval(*n.rhs, vars);
    case Kind::Neg: return -eval(*n.lhs, vars);
  }
  return 0;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = ExprParser(text).parse_all();
  e.text_ = trim(text);
  return e;
}

Integer Expr::evaluate(const Bindings& vars) const { return eval(*root_, vars); }

std::vector<std::string> split_trimmed(std::string_view text, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(delim, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Predicate Predicate::parse(std::string_view text) {
  Predicate p;
  p.text_ = trim(text);
  if (p.text_ == "true") {
    p.clauses_.push_back({});
    return p;
  }
  static const char* const kOps[] = {"<=", ">=", "!=", "=", "<", ">"};
  for (const auto& clause : split_trimmed(text, '|')) {
    std::vector<Comparison> conj;
    for (const auto& atom : split_trimmed(clause, '&')) {
      bool found = false;
      for (const char* op : kOps) {
        auto pos = atom.find(op);
        if (pos == std::string::npos) continue;
        std::string_view a(atom);
        conj.push_back({Expr::parse(a.substr(0, pos)), op, Expr::parse(a.substr(pos + std::string_view(op).size()))});
        found = true;
        break;
      }
      if (!found) throw Error(ErrorCode::DataFormat, "bad comparison \"" + atom + "\"");
    }
    p.clauses_.push_back(std::move(conj));
  }
  return p;
}

bool Predicate::operator()(const Bindings& vars) const {
  for (const auto& conj : clauses_) {
    bool all = true;
    for (const auto& c : conj) {
      Integer a = c.lhs.evaluate(vars), b = c.rhs.evaluate(vars);
      bool ok = c.op == "=" ? a == b : c.op == "!=" ? a != b : c.op == "<" ? a < b : c.op == "<=" ? a <= b
                : c.op == ">" ? a > b : a >= b;
      if (!ok) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace sasakilink
