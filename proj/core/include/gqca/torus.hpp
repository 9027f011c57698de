#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gqca/coefficient.hpp"
#include "gqca/matrix.hpp"

namespace gqca {

/// Exponent a in Z^m of a torus monomial X(a). Ordered lexicographically.
using ExponentVector = boost::container::small_vector<std::int32_t, 4>;

ExponentVector unit_vector(int rank, int k);  // e_k, 0-based k
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
ExponentVector scale(const ExponentVector& a, std::int32_t s);
bool componentwise_leq(const ExponentVector& a, const ExponentVector& b);
std::string to_string(const ExponentVector& a);

/// Skew-symmetric integer form Lambda(a, b) = a^T Lambda b.
///
/// Cheap to copy; copies share the matrix, and equality short-circuits on
/// shared storage.
class SkewForm {
 public:
  explicit SkewForm(IntMatrix lambda);
  /// [[0, 1], [-1, 0]]
  static SkewForm kronecker();

  int rank() const { return matrix_->rows(); }
  const IntMatrix& matrix() const { return *matrix_; }
  std::int64_t pairing(const ExponentVector& a, const ExponentVector& b) const;

  friend bool operator==(const SkewForm& a, const SkewForm& b) {
    return a.matrix_ == b.matrix_ || *a.matrix_ == *b.matrix_;
  }

 private:
  std::shared_ptr<const IntMatrix> matrix_;
};

std::int64_t lambda_pairing(const SkewForm& form, const ExponentVector& a,
                            const ExponentVector& b);

/// Componentwise-minimal support exponent and its unit coefficient.
struct PointedForm {
  ExponentVector point;
  QUnit unit;
};

/// One term c * X_1^{a_1} ... X_m^{a_m} of an ordered-word expansion.
struct StandardTerm {
  Coefficient coeff;
  ExponentVector word;
};

enum class Side { Left, Right };

/// Element of the quantum torus over Z[q^{+-1/2}, h]:
/// a finite sum of c * X(a) with X(a)X(b) = q^{Lambda(a,b)/2} X(a+b).
class TorusElement {
 public:
  using TermMap = std::map<ExponentVector, Coefficient>;

  explicit TorusElement(SkewForm form);
  static TorusElement constant(SkewForm form, Coefficient c);
  static TorusElement monomial(SkewForm form, ExponentVector a,
                               Coefficient c = 1);

  const SkewForm& form() const { return form_; }
  int rank() const { return form_.rank(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Zero if a is not in the support.
  Coefficient coefficient(const ExponentVector& a) const;

  TorusElement& operator+=(const TorusElement& other);
  TorusElement& operator-=(const TorusElement& other);
  TorusElement& operator*=(const Coefficient& c);
  TorusElement operator-() const;

  friend TorusElement operator+(TorusElement a, const TorusElement& b) {
    return a += b;
  }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) {
    return a -= b;
  }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const Coefficient& c, TorusElement x) {
    return x *= c;
  }
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  /// Adds c * X(a).
  void add_term(const ExponentVector& a, const Coefficient& c);

  /// x^n for n >= 0; x^0 = 1.
  TorusElement power(int n) const;
  /// Coefficient-wise q^{r/2} -> q^{-r/2} in the X(a) basis.
  TorusElement bar() const;

  /// Componentwise-minimal support exponents, lexicographically ascending.
  std::vector<ExponentVector> minimal_exponents() const;
  /// Throws NotPointed unless the support has a least element with a
  /// coefficient of the form +-q^{r/2}.
  PointedForm pointed() const;
  std::optional<PointedForm> try_pointed() const;

  /// Rewrites each X(a) as q^{(1/2) sum_{i<j} lambda_ji a_i a_j} X_1^{a_1}...X_m^{a_m}.
  std::vector<StandardTerm> to_standard_form() const;
  static TorusElement from_standard_form(SkewForm form,
                                         const std::vector<StandardTerm>& terms);

  /// Sum of `c*X(a1,a2)` terms in lexicographic exponent order.
  std::string to_string() const;

 private:
  void require_same_form(const TorusElement& other) const;

  SkewForm form_;
  TermMap terms_;
};

inline TorusElement bar(const TorusElement& x) { return x.bar(); }

/// X(a) X(b) as a single-term element.
TorusElement mono_mul(const SkewForm& form, const ExponentVector& a,
                      const ExponentVector& b);

inline constexpr std::size_t kDefaultDivisionCap = 100000;

/// Solves g * Q = f (Side::Left) or Q * g = f (Side::Right) for Q.
///
/// g must be pointed with a unit minimal coefficient. The remainder's
/// lexicographically least minimal term is cancelled against that pivot at
/// each step. Throws DivisionNotExact if the cap is reached or the
/// reconstructed product differs from f.
TorusElement exact_divide(Side side, const TorusElement& g,
                          const TorusElement& f,
                          std::size_t max_steps = kDefaultDivisionCap);

}  // namespace gqca
