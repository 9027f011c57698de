#include "gqca/seed.hpp"

#include <cstdlib>
#include <string>

#include "gqca/errors.hpp"

namespace gqca {
namespace {

std::int64_t positive_part(std::int64_t x) { return x > 0 ? x : 0; }

void require_direction(int n, Direction i) {
  if (i.index < 1 || i.index > n) {
    throw std::out_of_range("mutation direction " + std::to_string(i.index) +
                            " outside 1.." + std::to_string(n));
  }
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
  if (b_.cols() < 1 || b_.rows() < b_.cols()) {
    throw std::invalid_argument("exchange matrix must be m x n with m >= n >= 1");
  }
}

IntMatrix ExchangeMatrix::principal() const {
  IntMatrix p(n(), n());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) p(i, j) = b_(i, j);
  return p;
}

HVector::HVector(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw InvalidSeed("h-vector needs degree >= 1");
  const int d = degree();
  if (!(coeffs_.front() == Coefficient(1)) || !(coeffs_.back() == Coefficient(1))) {
    throw InvalidSeed("h-vector must start and end with 1");
  }
  for (int l = 0; l <= d; ++l) {
    if (!(coeffs_[l] == coeffs_[d - l])) {
      throw InvalidSeed("h-vector is not palindromic at position " +
                        std::to_string(l));
    }
    if (!(coeffs_[l] == coeffs_[l].bar())) {
      throw InvalidSeed("h-vector entry " + std::to_string(l) +
                        " is not bar-invariant");
    }
  }
}

QuantumSeed::QuantumSeed(CompatiblePair pair, std::vector<int> dvec,
                         std::vector<HVector> hvecs)
    : pair_(std::move(pair)), dvec_(std::move(dvec)), hvecs_(std::move(hvecs)) {
  const int n = pair_.b.n();
  if (static_cast<int>(dvec_.size()) != n || static_cast<int>(hvecs_.size()) != n) {
    throw InvalidSeed("d-vector and h-vectors need one entry per column");
  }
  for (int i = 0; i < n; ++i) {
    if (dvec_[i] < 1) throw InvalidSeed("d-vector entries must be positive");
    if (hvecs_[i].degree() != dvec_[i]) {
      throw InvalidSeed("h-vector " + std::to_string(i + 1) + " has degree " +
                        std::to_string(hvecs_[i].degree()) + ", expected " +
                        std::to_string(dvec_[i]));
    }
    for (int k = 0; k < pair_.b.m(); ++k) {
      if (pair_.b.matrix()(k, i) % dvec_[i] != 0) {
        throw InvalidSeed("d_" + std::to_string(i + 1) +
                          " does not divide column " + std::to_string(i + 1));
      }
    }
  }
}

ExponentVector QuantumSeed::beta(Direction i) const {
  require_direction(pair_.b.n(), i);
  ExponentVector out;
  for (int k = 1; k <= pair_.b.m(); ++k) {
    out.push_back(static_cast<std::int32_t>(pair_.b.at(k, i.index) /
                                            dvec_[i.index - 1]));
  }
  return out;
}

CompatiblePair check_compatible(const SkewForm& lambda, const ExchangeMatrix& b) {
  const int m = b.m();
  const int n = b.n();
  if (lambda.rank() != m) {
    throw NotCompatible(0, 0, "Lambda is " + std::to_string(lambda.rank()) +
                                  "x" + std::to_string(lambda.rank()) +
                                  " but B has " + std::to_string(m) + " rows");
  }
  const IntMatrix prod = lambda.matrix().transpose() * b.matrix();
  std::vector<std::int64_t> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t v = prod(i, j);
      if (i == j) {
        if (v <= 0) {
          throw NotCompatible(i + 1, j + 1,
                              "diagonal entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") of Lambda^T B is " +
                                  std::to_string(v) + ", not positive");
        }
        diag[j] = v;
      } else if (v != 0) {
        throw NotCompatible(i + 1, j + 1,
                            "entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") of Lambda^T B is " +
                                std::to_string(v) + ", expected 0");
      }
    }
  }
  return {lambda, b, std::move(diag)};
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, Direction i) {
  require_direction(b.n(), i);
  const int c = i.index - 1;
  const IntMatrix& old = b.matrix();
  IntMatrix out(b.m(), b.n());
  for (int k = 0; k < b.m(); ++k) {
    for (int l = 0; l < b.n(); ++l) {
      if (k == c || l == c) {
        out(k, l) = -old(k, l);
      } else {
        const std::int64_t bki = old(k, c);
        const std::int64_t bil = old(c, l);
        out(k, l) = old(k, l) + (std::llabs(bki) * bil + bki * std::llabs(bil)) / 2;
      }
    }
  }
  return ExchangeMatrix(std::move(out));
}

IntMatrix e_matrix(const ExchangeMatrix& b, Direction i, Sign eps) {
  require_direction(b.n(), i);
  const int c = i.index - 1;
  const auto s = static_cast<std::int64_t>(eps);
  IntMatrix e = IntMatrix::identity(b.m());
  for (int k = 0; k < b.m(); ++k) {
    e(k, c) = k == c ? -1 : positive_part(-s * b.matrix()(k, c));
  }
  return e;
}

CompatiblePair mutate_pair(const CompatiblePair& p, Direction i, Sign eps) {
  const IntMatrix e = e_matrix(p.b, i, eps);
  SkewForm lambda(e.transpose() * p.lambda.matrix() * e);
  ExchangeMatrix b = matrix_mutate(p.b, i);
  CompatiblePair out = [&] {
    try {
      return check_compatible(lambda, b);
    } catch (const NotCompatible& err) {
      throw ConsistencyError(std::string("mutated pair lost compatibility: ") +
                             err.what());
    }
  }();
  if (out.diag != p.diag) {
    throw ConsistencyError("mutation changed the compatibility diagonal");
  }
  return out;
}

TorusElement mutate_variable(const QuantumSeed& seed, Direction i) {
  const ExponentVector beta = seed.beta(i);
  const int m = seed.pair().b.m();
  const int d = seed.dvec()[i.index - 1];
  const HVector& hv = seed.hvecs()[i.index - 1];
  ExponentVector plus(beta.size()), minus(beta.size());
  for (std::size_t k = 0; k < beta.size(); ++k) {
    plus[k] = beta[k] > 0 ? beta[k] : 0;
    minus[k] = beta[k] < 0 ? -beta[k] : 0;
  }
  const ExponentVector ei = unit_vector(m, i.index - 1);
  TorusElement out(seed.pair().lambda);
  for (int r = 0; r <= d; ++r) {
    out.add_term(scale(plus, r) + scale(minus, d - r) - ei, hv[r]);
  }
  return out;
}

QuantumSeed kronecker_seed() {
  CompatiblePair pair = check_compatible(
      SkewForm::kronecker(), ExchangeMatrix(IntMatrix{{0, 2}, {-2, 0}}));
  HVector hv({Coefficient(1), Coefficient::h_power(1), Coefficient(1)});
  return QuantumSeed(std::move(pair), {2, 2}, {hv, hv});
}

}  // namespace gqca
