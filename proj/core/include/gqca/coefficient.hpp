#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gqca {

using Integer = boost::multiprecision::cpp_int;

/// One term c * q^{qhalf/2} * h^{hdeg}.
struct CoeffTerm {
  std::int32_t qhalf = 0;
  std::int32_t hdeg = 0;
  Integer c;

  friend bool operator==(const CoeffTerm&, const CoeffTerm&) = default;
};

/// A unit of the form sign * q^{qhalf/2}.
struct QUnit {
  int sign = 1;
  std::int32_t qhalf = 0;

  friend bool operator==(const QUnit&, const QUnit&) = default;
};

/// Element of the commutative ring Z[q^{+-1/2}, h].
///
/// Stored as a sparse list of terms sorted by (qhalf, hdeg) with no zero
/// integer, so structural equality is ring equality. h is a formal
/// indeterminate fixed by the bar involution.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long long n);  // NOLINT(google-explicit-constructor)
  explicit Coefficient(const Integer& n);

  /// c * q^{qhalf/2} * h^{hdeg}
  static Coefficient monomial(const Integer& c, std::int32_t qhalf,
                              std::int32_t hdeg);
  /// q^{qhalf/2}
  static Coefficient q_power(std::int32_t qhalf);
  static Coefficient h_power(std::int32_t hdeg);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Coefficient from_terms(std::vector<CoeffTerm> terms);
  /// Adopts terms that are already sorted, merged and nonzero.
  static Coefficient from_canonical_terms(std::vector<CoeffTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  std::span<const CoeffTerm> terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  Coefficient operator-() const;

  friend Coefficient operator+(Coefficient a, const Coefficient& b) {
    return a += b;
  }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) {
    return a -= b;
  }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  /// Multiplies by q^{qhalf/2}.
  Coefficient shifted(std::int32_t qhalf) const;
  Coefficient scaled(const Integer& n) const;

  /// q^{r/2} -> q^{-r/2}, h fixed.
  Coefficient bar() const;
  /// True iff every stored integer is nonnegative.
  bool is_positive() const;
  /// Substitutes q^{1/2} = 1 and/or h = 0.
  Coefficient specialize(bool q_to_one, bool h_to_zero) const;
  /// (sign, r) iff this equals sign * q^{r/2} exactly.
  std::optional<QUnit> as_unit_q_power() const;
  /// Constant integer value if the coefficient has no q or h dependence.
  std::optional<Integer> as_integer() const;

  /// Expression-syntax rendering, e.g. "q^(-1) + h^2 + q" or "2*qh*h".
  std::string to_string() const;

 private:
  std::vector<CoeffTerm> terms_;
};

inline Coefficient bar(const Coefficient& c) { return c.bar(); }
inline bool is_positive(const Coefficient& c) { return c.is_positive(); }

/// Multiplies a unit back out into a coefficient.
Coefficient to_coefficient(const QUnit& u);

}  // namespace gqca
