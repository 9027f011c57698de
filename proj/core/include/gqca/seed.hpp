#pragma once

#include <cstdint>
#include <vector>

#include "gqca/coefficient.hpp"
#include "gqca/matrix.hpp"
#include "gqca/torus.hpp"

namespace gqca {

/// Mutation direction, 1-based as in the exchange-matrix column index.
struct Direction {
  int index;
};

enum class Sign : int { Plus = 1, Minus = -1 };

/// m x n integer matrix with m >= n >= 1; the principal part is the top
/// n x n block.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(IntMatrix b);

  int m() const { return b_.rows(); }
  int n() const { return b_.cols(); }
  const IntMatrix& matrix() const { return b_; }
  IntMatrix principal() const;
  /// 1-based entry b_{kl}.
  std::int64_t at(int k, int l) const { return b_(k - 1, l - 1); }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  IntMatrix b_;
};

/// (Lambda, B~) with sum_k lambda_ki b_kj = diag_j delta_ij for all i <= m,
/// j <= n and positive diag.
struct CompatiblePair {
  SkewForm lambda;
  ExchangeMatrix b;
  std::vector<std::int64_t> diag;

  friend bool operator==(const CompatiblePair& x, const CompatiblePair& y) {
    return x.lambda == y.lambda && x.b == y.b && x.diag == y.diag;
  }
};

/// Palindromic coefficient vector (h_0, ..., h_d) with h_0 = h_d = 1 and
/// bar-invariant entries.
class HVector {
 public:
  explicit HVector(std::vector<Coefficient> coeffs);
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coefficient>& coeffs() const { return coeffs_; }
  const Coefficient& operator[](int r) const { return coeffs_.at(r); }

 private:
  std::vector<Coefficient> coeffs_;
};

/// Compatible pair plus a d-vector (d_i divides column i) and h-vectors.
class QuantumSeed {
 public:
  QuantumSeed(CompatiblePair pair, std::vector<int> dvec,
              std::vector<HVector> hvecs);

  const CompatiblePair& pair() const { return pair_; }
  const std::vector<int>& dvec() const { return dvec_; }
  const std::vector<HVector>& hvecs() const { return hvecs_; }
  /// beta^i = b^i / d_i, 1-based i.
  ExponentVector beta(Direction i) const;

 private:
  CompatiblePair pair_;
  std::vector<int> dvec_;
  std::vector<HVector> hvecs_;
};

/// Throws NotCompatible naming the first offending (i, j).
CompatiblePair check_compatible(const SkewForm& lambda, const ExchangeMatrix& b);

ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, Direction i);

/// E_eps: identity except column i, which has -1 on the diagonal and
/// [-eps * b_ki]_+ elsewhere.
IntMatrix e_matrix(const ExchangeMatrix& b, Direction i, Sign eps);

/// (E^T Lambda E, mu_i(B~)); the result is re-checked for compatibility and
/// must keep the same diagonal.
CompatiblePair mutate_pair(const CompatiblePair& p, Direction i, Sign eps);

/// The new variable X'(e_i) = sum_r h_{i,r} X(r[beta]_+ + (d-r)[-beta]_+ - e_i)
/// in the seed's own torus.
TorusElement mutate_variable(const QuantumSeed& seed, Direction i);

/// The A_q(2,2) seed: Kronecker Lambda and B, d = (2, 2), h-vectors (1, h, 1).
QuantumSeed kronecker_seed();

}  // namespace gqca
