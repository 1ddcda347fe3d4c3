#include "fstruct/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "fstruct/errors.hpp"

namespace fstruct {

namespace {

std::shared_ptr<ExprTree> make_node(ExprTree::Kind kind, std::size_t pos, ExprTreePtr lhs = nullptr,
                                    ExprTreePtr rhs = nullptr) {
  auto n = std::make_shared<ExprTree>();
  n->kind = kind;
  n->position = pos;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> vars) : src_(src), vars_(vars) {}

  ExprTreePtr parse() {
    auto e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  ExprTreePtr expr() {
    auto lhs = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      std::size_t at = pos_++;
      lhs = make_node(c == '+' ? ExprTree::Kind::kAdd : ExprTree::Kind::kSub, at, lhs, term());
    }
  }

  ExprTreePtr term() {
    auto lhs = factor();
    for (;;) {
      char c = peek();
      if (c != '*' && c != '/') return lhs;
      std::size_t at = pos_++;
      lhs = make_node(c == '*' ? ExprTree::Kind::kMul : ExprTree::Kind::kDiv, at, lhs, factor());
    }
  }

  ExprTreePtr factor() {
    if (peek() == '-') {
      std::size_t at = pos_++;
      return make_node(ExprTree::Kind::kNegate, at, factor());
    }
    auto b = base();
    if (peek() == '^') {
      std::size_t at = pos_++;
      auto node = make_node(ExprTree::Kind::kPow, at, b);
      node->exponent = exponent();
      return node;
    }
    return b;
  }

  long exponent() {
    bool paren = accept('(');
    skip_space();
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer literal");
    if (pos_ < src_.size() && src_[pos_] == '.') fail("exponent must be an integer literal");
    std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    long k = std::stol(digits);
    if (paren && !accept(')')) {
      fail("exponent must be an integer literal");
    }
    return negative ? -k : k;
  }

  ExprTreePtr base() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '.') {
        fail("floating-point literals are not supported");
      }
      auto n = make_node(ExprTree::Kind::kNumber, at);
      n->number = Rational(mpz_class(std::string(src_.substr(at, pos_ - at)), 10));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(src_.substr(at, pos_ - at));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", at);
      auto n = make_node(ExprTree::Kind::kVariable, at);
      n->variable = static_cast<std::size_t>(it - vars_.begin());
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprTreePtr parse_tree(std::string_view source, std::span<const std::string> vars) {
  return Parser(source, vars).parse();
}

Expr canonicalize(const ExprTree& t, std::size_t nvars) {
  using K = ExprTree::Kind;
  switch (t.kind) {
    case K::kNumber:
      return Expr::constant(nvars, t.number);
    case K::kVariable:
      return Expr::variable(nvars, t.variable);
    case K::kNegate:
      return -canonicalize(*t.lhs, nvars);
    case K::kAdd:
      return canonicalize(*t.lhs, nvars) + canonicalize(*t.rhs, nvars);
    case K::kSub:
      return canonicalize(*t.lhs, nvars) - canonicalize(*t.rhs, nvars);
    case K::kMul:
      return canonicalize(*t.lhs, nvars) * canonicalize(*t.rhs, nvars);
    case K::kDiv: {
      Expr d = canonicalize(*t.rhs, nvars);
      if (d.is_zero()) throw ParseError("division by an identically zero expression", t.position);
      return canonicalize(*t.lhs, nvars) / d;
    }
    case K::kPow: {
      Expr b = canonicalize(*t.lhs, nvars);
      if (t.exponent < 0 && b.is_zero()) {
        throw ParseError("negative power of an identically zero expression", t.position);
      }
      return b.pow(t.exponent);
    }
  }
  throw std::logic_error("unreachable expression kind");
}

std::optional<Rational> evaluate(const ExprTree& t, std::span<const Rational> point) {
  using K = ExprTree::Kind;
  switch (t.kind) {
    case K::kNumber:
      return t.number;
    case K::kVariable:
      return point[t.variable];
    case K::kNegate: {
      auto v = evaluate(*t.lhs, point);
      if (!v) return std::nullopt;
      return Rational(-*v);
    }
    case K::kPow: {
      auto v = evaluate(*t.lhs, point);
      if (!v) return std::nullopt;
      if (t.exponent < 0 && is_zero(*v)) return std::nullopt;
      Rational r(1);
      for (long k = 0; k < std::abs(t.exponent); ++k) r *= *v;
      if (t.exponent < 0) r = 1 / r;
      return r;
    }
    default:
      break;
  }
  auto a = evaluate(*t.lhs, point);
  auto b = evaluate(*t.rhs, point);
  if (!a || !b) return std::nullopt;
  switch (t.kind) {
    case K::kAdd:
      return Rational(*a + *b);
    case K::kSub:
      return Rational(*a - *b);
    case K::kMul:
      return Rational(*a * *b);
    case K::kDiv:
      if (is_zero(*b)) return std::nullopt;
      return Rational(*a / *b);
    default:
      throw std::logic_error("unreachable expression kind");
  }
}

std::string to_string(const ExprTree& t, std::span<const std::string> vars) {
  using K = ExprTree::Kind;
  auto bin = [&](const char* op) {
    return "(" + to_string(*t.lhs, vars) + " " + op + " " + to_string(*t.rhs, vars) + ")";
  };
  switch (t.kind) {
    case K::kNumber:
      if (t.number.get_den() != 1 || sgn(t.number) < 0) return "(" + to_string(t.number) + ")";
      return to_string(t.number);
    case K::kVariable:
      return vars[t.variable];
    case K::kNegate:
      return "(-" + to_string(*t.lhs, vars) + ")";
    case K::kAdd:
      return bin("+");
    case K::kSub:
      return bin("-");
    case K::kMul:
      return bin("*");
    case K::kDiv:
      return bin("/");
    case K::kPow:
      return "(" + to_string(*t.lhs, vars) + ")^(" + std::to_string(t.exponent) + ")";
  }
  throw std::logic_error("unreachable expression kind");
}

Expr parse_expr(std::string_view source, std::span<const std::string> vars) {
  return canonicalize(*parse_tree(source, vars), vars.size());
}

}  // namespace fstruct
