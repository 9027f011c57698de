#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gqca/coefficient.hpp"
#include "gqca/kronecker.hpp"
#include "gqca/torus.hpp"

namespace gqca {

/// Syntax tree of an algebra expression.
///
/// Grammar (whitespace ignored):
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' exponent)?
///   exponent:= int | '-' int | '(' '-'? int ')'
///   atom    := int | 'q' | 'qh' | 'h' | 'Xd' | 'X[' int ']' | 'F[' int ']'
///            | 'X(' int (',' int)* ')' | '(' sum ')'
///
/// `qh` is q^{1/2}, `X[k]` the cluster variable X_k, `F[n]` the Chebyshev
/// element F_n(X_delta), `Xd` is X_delta and `X(a1,a2)` a torus monomial.
/// Products keep their written order. Negative powers are accepted only for
/// invertible (single unit-coefficient monomial) bases.
struct ExprNode {
  enum class Kind {
    Integer,
    Q,
    QHalf,
    H,
    XDelta,
    ClusterVar,
    Chebyshev,
    Monomial,
    Neg,
    Add,
    Sub,
    Mul,
    Pow,
  };

  Kind kind = Kind::Integer;
  Integer value;          // Integer literal
  long long index = 0;    // ClusterVar k, Chebyshev n, Pow exponent
  ExponentVector exponent;  // Monomial
  std::vector<ExprNode> children;
  std::size_t position = 0;  // source offset, for evaluation errors
};

class Expression {
 public:
  /// Throws ParseError with the offending offset.
  static Expression parse(std::string_view text);

  const ExprNode& root() const { return root_; }

 private:
  explicit Expression(ExprNode root) : root_(std::move(root)) {}
  ExprNode root_;
};

/// Evaluates left to right in the Kronecker torus.
TorusElement evaluate(const Expression& expr, const KroneckerAlgebra& alg);

/// Convenience: parse then evaluate.
TorusElement evaluate(std::string_view text, const KroneckerAlgebra& alg);

}  // namespace gqca
