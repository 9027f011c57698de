#include "gqca/expression.hpp"

#include <cctype>

#include "gqca/errors.hpp"

namespace gqca {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprNode parse() {
    ExprNode node = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer unsigned_int() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  long long small_int() {
    const std::size_t start = pos_;
    const bool negative = accept('-');
    const Integer v = unsigned_int();
    if (v > 1000000000) {
      pos_ = start;
      fail("integer out of range");
    }
    const long long x = static_cast<long long>(v);
    return negative ? -x : x;
  }

  static ExprNode binary(ExprNode::Kind kind, ExprNode lhs, ExprNode rhs, std::size_t at) {
    ExprNode n;
    n.kind = kind;
    n.position = at;
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  ExprNode sum() {
    ExprNode lhs = product();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(ExprNode::Kind::Add, std::move(lhs), product(), at);
      } else if (accept('-')) {
        lhs = binary(ExprNode::Kind::Sub, std::move(lhs), product(), at);
      } else {
        return lhs;
      }
    }
  }

  ExprNode product() {
    ExprNode lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(ExprNode::Kind::Mul, std::move(lhs), unary(), at);
    }
  }

  ExprNode unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      ExprNode n;
      n.kind = ExprNode::Kind::Neg;
      n.position = at;
      n.children.push_back(unary());
      return n;
    }
    return power();
  }

  ExprNode power() {
    ExprNode base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    long long e = 0;
    if (accept('(')) {
      e = small_int();
      expect(')');
    } else {
      e = small_int();
    }
    ExprNode n;
    n.kind = ExprNode::Kind::Pow;
    n.position = at;
    n.index = e;
    n.children.push_back(std::move(base));
    return n;
  }

  ExprNode atom() {
    skip_space();
    ExprNode n;
    n.position = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (at_digit()) {
      n.kind = ExprNode::Kind::Integer;
      n.value = unsigned_int();
      return n;
    }
    if (accept('(')) {
      ExprNode inner = sum();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "q") {
      n.kind = ExprNode::Kind::Q;
    } else if (word == "qh") {
      n.kind = ExprNode::Kind::QHalf;
    } else if (word == "h") {
      n.kind = ExprNode::Kind::H;
    } else if (word == "Xd") {
      n.kind = ExprNode::Kind::XDelta;
    } else if (word == "F") {
      n.kind = ExprNode::Kind::Chebyshev;
      expect('[');
      n.index = small_int();
      expect(']');
    } else if (word == "X") {
      if (accept('[')) {
        n.kind = ExprNode::Kind::ClusterVar;
        n.index = small_int();
        expect(']');
      } else if (accept('(')) {
        n.kind = ExprNode::Kind::Monomial;
        do {
          n.exponent.push_back(static_cast<std::int32_t>(small_int()));
        } while (accept(','));
        expect(')');
      } else {
        fail("expected '[' or '(' after X");
      }
    } else {
      pos_ = start;
      fail(word.empty() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                        : "unknown symbol '" + std::string(word) + "'");
    }
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

TorusElement invert_unit_monomial(const TorusElement& x, std::size_t at) {
  if (x.size() == 1) {
    const auto& [a, c] = *x.terms().begin();
    if (auto u = c.as_unit_q_power()) {
      // (u X(a))^{-1} = u^{-1} X(-a), as Lambda(a, -a) = 0.
      return TorusElement::monomial(x.form(), scale(a, -1),
                                    Coefficient::monomial(u->sign, -u->qhalf, 0));
    }
  }
  throw ParseError(at, "negative power of a non-invertible element");
}

TorusElement eval(const ExprNode& n, const KroneckerAlgebra& alg) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Integer:
      return alg.constant(Coefficient(n.value));
    case K::Q:
      return alg.constant(Coefficient::q_power(2));
    case K::QHalf:
      return alg.constant(Coefficient::q_power(1));
    case K::H:
      return alg.constant(Coefficient::h_power(1));
    case K::XDelta:
      return alg.x_delta();
    case K::ClusterVar:
      return alg.cluster_var(static_cast<int>(n.index));
    case K::Chebyshev:
      return alg.chebyshev(static_cast<int>(n.index));
    case K::Monomial:
      if (static_cast<int>(n.exponent.size()) != alg.form().rank()) {
        throw ParseError(n.position, "monomial rank does not match the torus");
      }
      return TorusElement::monomial(alg.form(), n.exponent);
    case K::Neg:
      return -eval(n.children[0], alg);
    case K::Add:
      return eval(n.children[0], alg) + eval(n.children[1], alg);
    case K::Sub:
      return eval(n.children[0], alg) - eval(n.children[1], alg);
    case K::Mul:
      return eval(n.children[0], alg) * eval(n.children[1], alg);
    case K::Pow: {
      TorusElement base = eval(n.children[0], alg);
      if (n.index < 0) base = invert_unit_monomial(base, n.position);
      const long long e = n.index < 0 ? -n.index : n.index;
      if (e > 4096) throw LimitExceeded("exponent too large");
      return base.power(static_cast<int>(e));
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  return Expression(Parser(text).parse());
}

TorusElement evaluate(const Expression& expr, const KroneckerAlgebra& alg) {
  return eval(expr.root(), alg);
}

TorusElement evaluate(std::string_view text, const KroneckerAlgebra& alg) {
  return evaluate(Expression::parse(text), alg);
}

}  // namespace gqca
