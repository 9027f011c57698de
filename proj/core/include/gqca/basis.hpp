#pragma once

#include <array>
#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <variant>

#include "gqca/coefficient.hpp"
#include "gqca/kronecker.hpp"
#include "gqca/torus.hpp"

namespace gqca {

struct IdentityIndex {
  friend auto operator<=>(const IdentityIndex&, const IdentityIndex&) = default;
};

/// q^{-a1 a2 / 2} X_m^{a1} X_{m+1}^{a2} with a1 >= 1, a2 >= 0.
struct MonomialIndex {
  int m;
  int a1;
  int a2;
  friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;
};

/// F_n(X_delta), n >= 1.
struct ImaginaryIndex {
  int n;
  friend auto operator<=>(const ImaginaryIndex&, const ImaginaryIndex&) = default;
};

/// Canonical label of a basis element. Build monomials through
/// make_monomial_index so that duplicates collapse.
using BasisIndex = std::variant<IdentityIndex, MonomialIndex, ImaginaryIndex>;

/// Canonicalizes (m, a1, a2): (0, 0) is the identity and X_{m+1}^{a2} alone
/// is stored as {m+1, a2, 0}. Throws on negative exponents.
BasisIndex make_monomial_index(int m, int a1, int a2);
BasisIndex make_imaginary_index(int n);
bool is_canonical(const BasisIndex& ix);
std::string to_string(const BasisIndex& ix);

using Point = std::array<int, 2>;

/// Minimal exponent of the basis element labelled ix.
Point pointing_exponent(const BasisIndex& ix);
/// Inverse of pointing_exponent on Z^2.
BasisIndex index_from_point(const Point& p);

struct BasisExpansion {
  std::map<BasisIndex, Coefficient> coords;

  void add(const BasisIndex& ix, const Coefficient& c);
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

BasisExpansion operator+(const BasisExpansion& a, const BasisExpansion& b);

inline constexpr std::size_t kDefaultExpansionCap = 10000;

/// The bar-invariant basis {q^{-a1 a2/2} X_m^{a1} X_{m+1}^{a2}} and
/// {F_n(X_delta)} of A_q(2,2), with memoized elements.
class Basis {
 public:
  explicit Basis(const KroneckerAlgebra& alg,
                 std::size_t expansion_cap = kDefaultExpansionCap);

  const KroneckerAlgebra& algebra() const { return alg_; }

  TorusElement element(const BasisIndex& ix) const;

  /// Greedy triangular expansion: repeatedly cancel the remainder's
  /// lexicographically least minimal term against the basis element pointed
  /// there. The result is re-expanded and compared before returning.
  /// Throws NotInSpan on failure, with the remainder in the message.
  BasisExpansion expand(const TorusElement& z) const;
  /// Sum of coeff * element over the expansion.
  TorusElement reassemble(const BasisExpansion& e) const;

  BasisExpansion structure_constants(const BasisIndex& a, const BasisIndex& b) const;

 private:
  const KroneckerAlgebra& alg_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<BasisIndex, TorusElement> cache_;
};

/// Every coefficient lies in Z_{>=0}[q^{+-1/2}, h] (initial cluster only).
/// Pointing bijection and self-expansion round trip at one lattice point.
VerificationReport verify_basis_roundtrip(const Basis& basis, const Point& p);
/// Structure constants of b[p] * b[r] are positive and reassemble the product.
VerificationReport verify_structure_positivity(const Basis& basis,
                                               const Point& p, const Point& r);

bool is_positive_element(const TorusElement& z);
bool is_positive_expansion(const BasisExpansion& e);

/// Coordinates at q = 1, h = 0.
std::map<BasisIndex, Integer> specialize_expansion(const BasisExpansion& e);

}  // namespace gqca
