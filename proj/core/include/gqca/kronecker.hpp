#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gqca/coefficient.hpp"
#include "gqca/torus.hpp"

namespace gqca {

inline constexpr int kDefaultMaxK = 64;

/// Cluster variables, X_delta and its Chebyshev family in A_q(2,2),
/// expanded in the initial torus Z[q^{+-1/2}, h][X_1^{+-1}, X_2^{+-1}]
/// with X_1 X_2 = q X_2 X_1.
///
/// Variables are generated from X_1 = X(1,0), X_2 = X(0,1) by exact division
/// against X_{k-1} X_{k+1} = q X_k^2 + q^{1/2} h X_k + 1 and memoized. All
/// caches are guarded, so one instance can be shared across threads.
class KroneckerAlgebra {
 public:
  explicit KroneckerAlgebra(int max_k = kDefaultMaxK,
                            std::size_t division_cap = kDefaultDivisionCap);

  const SkewForm& form() const { return form_; }
  int max_k() const { return max_k_; }

  TorusElement one() const;
  TorusElement constant(const Coefficient& c) const;

  /// X_k for any |k| <= max_k; throws LimitExceeded otherwise.
  TorusElement cluster_var(int k) const;
  /// q X^2 + q^{1/2} h X + 1
  TorusElement exchange_rhs(const TorusElement& x) const;

  /// q^{1/2} X_0 X_3 - q^{1/2} (q^{1/2} X_1 + h)(q^{1/2} X_2 + h), checked
  /// against its five-term closed form.
  TorusElement x_delta() const;
  /// F_n(X_delta) with F_0 = 1, F_1 = x, F_2 = x^2 - 2,
  /// F_{n+1} = F_n x - F_{n-1}; zero for n < 0.
  TorusElement chebyshev(int n) const;
  /// q^{1/2} X_m X_{m+3} - q^{1/2} (q^{1/2} X_{m+1} + h)(q^{1/2} X_{m+2} + h)
  TorusElement shifted_delta(int m) const;

  /// Snapshot of every memoized cluster variable.
  std::map<int, TorusElement> cached_variables() const;
  /// Installs previously computed variables after checking that they are
  /// a contiguous run through X_1, X_2 obeying the exchange relation.
  /// Returns false (and installs nothing) if any check fails.
  bool preload(const std::map<int, TorusElement>& vars);

 private:
  SkewForm form_;
  int max_k_;
  std::size_t division_cap_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<int, TorusElement> vars_;
  mutable std::map<int, TorusElement> chebyshev_;
};

/// a_i = i(i+1)/2
Integer a_sequence(int i);
/// b_i = (i^2 - 1)/4 for odd i, i^2/4 for even i.
Integer b_sequence(int i);
/// The coefficients c_l appearing in the X_m X_{m+n} formula.
Coefficient c_sequence(int l);

/// Factor of a formula product: a cluster variable X_k or F_n(X_delta).
struct Factor {
  enum class Kind { Var, Chebyshev };
  Kind kind;
  int index;

  static Factor var(int k) { return {Kind::Var, k}; }
  static Factor cheb(int n) { return {Kind::Chebyshev, n}; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// coeff * (ordered product of factors); an empty product is 1.
struct FormulaTerm {
  Coefficient coeff;
  std::vector<Factor> factors;
};

/// lhs-product = sum of rhs terms.
struct ProductIdentity {
  std::vector<Factor> lhs;
  std::vector<FormulaTerm> rhs;
};

/// F_m F_n = F_{m+n} + F_{m-n}  (m > n >= 1), F_n F_n = F_{2n} + 2.
ProductIdentity cheb_cheb_identity(int m, int n);
/// X_m F_n = q^{-n/2} X_{m-n} + q^{n/2} X_{m+n} + sum_k (...) h F_{n-k}.
ProductIdentity var_cheb_identity(int m, int n);
/// X_m X_{m+n} for n >= 2.
ProductIdentity var_var_identity(int m, int n);
/// Image under bar: every product reversed, every coefficient barred.
ProductIdentity bar_image(const ProductIdentity& id);

TorusElement evaluate(const KroneckerAlgebra& alg, const std::vector<Factor>& f);
TorusElement evaluate(const KroneckerAlgebra& alg, const FormulaTerm& t);

/// Outcome of one exact identity check; diff = lhs - rhs.
struct VerificationReport {
  std::string formula;
  std::vector<std::pair<std::string, long long>> params;
  bool ok = false;
  TorusElement diff;
  std::string error;  // set when the check threw instead of comparing
};

VerificationReport verify_identity(const KroneckerAlgebra& alg,
                                   const ProductIdentity& id, std::string formula,
                                   std::vector<std::pair<std::string, long long>> params);

enum class FormulaId { ChebCheb, VarCheb, VarVar };

VerificationReport verify_cheb_cheb(const KroneckerAlgebra& alg, int m, int n);
VerificationReport verify_var_cheb(const KroneckerAlgebra& alg, int m, int n);
VerificationReport verify_var_var(const KroneckerAlgebra& alg, int m, int n);
VerificationReport verify_bar_images(const KroneckerAlgebra& alg, FormulaId which,
                                     int m, int n);
/// shifted_delta(m) == x_delta()
VerificationReport verify_sigma(const KroneckerAlgebra& alg, int m);
/// X_{k-1} X_{k+1} == q X_k^2 + q^{1/2} h X_k + 1
VerificationReport verify_exchange(const KroneckerAlgebra& alg, int k);
/// X_m X_{m+1} == q X_{m+1} X_m
VerificationReport verify_q_commute(const KroneckerAlgebra& alg, int m);

/// Predicted componentwise-minimal exponent of X_k:
/// (2-k, 3-k) for k >= 2 and (k, k-1) for k <= 1.
/// Every coefficient of X_k is nonnegative. diff holds the offending terms.
VerificationReport verify_positivity_var(const KroneckerAlgebra& alg, int k);
/// Every coefficient of F_n(X_delta) is nonnegative.
VerificationReport verify_positivity_cheb(const KroneckerAlgebra& alg, int n);
/// bar(X_k) = X_k.
VerificationReport verify_bar_var(const KroneckerAlgebra& alg, int k);
/// bar(F_n(X_delta)) = F_n(X_delta).
VerificationReport verify_bar_cheb(const KroneckerAlgebra& alg, int n);
/// q^{-a1 a2/2} X_m^{a1} X_{m+1}^{a2} is bar-invariant.
VerificationReport verify_bar_monomial(const KroneckerAlgebra& alg, int m,
                                       int a1, int a2);

ExponentVector cluster_var_point(int k);

}  // namespace gqca
