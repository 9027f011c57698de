#include "gqca/kronecker.hpp"

#include <cstdlib>

#include "gqca/errors.hpp"

namespace gqca {
namespace {

ExponentVector ev(std::int32_t a, std::int32_t b) { return ExponentVector{a, b}; }

// q^{-j} + q^{j}
Coefficient symmetric_q(int j) {
  return Coefficient::q_power(-2 * j) + Coefficient::q_power(2 * j);
}

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

KroneckerAlgebra::KroneckerAlgebra(int max_k, std::size_t division_cap)
    : form_(SkewForm::kronecker()), max_k_(max_k), division_cap_(division_cap) {
  if (max_k < 2) throw std::invalid_argument("max_k must be at least 2");
  vars_.emplace(1, TorusElement::monomial(form_, ev(1, 0)));
  vars_.emplace(2, TorusElement::monomial(form_, ev(0, 1)));
}

TorusElement KroneckerAlgebra::one() const {
  return TorusElement::constant(form_, 1);
}

TorusElement KroneckerAlgebra::constant(const Coefficient& c) const {
  return TorusElement::constant(form_, c);
}

TorusElement KroneckerAlgebra::exchange_rhs(const TorusElement& x) const {
  TorusElement out = Coefficient::q_power(2) * (x * x);
  out += Coefficient::monomial(1, 1, 1) * x;
  out += one();
  return out;
}

TorusElement KroneckerAlgebra::cluster_var(int k) const {
  if (std::abs(k) > max_k_) {
    throw LimitExceeded("|k| = " + std::to_string(std::abs(k)) +
                        " exceeds the configured limit " + std::to_string(max_k_));
  }
  std::lock_guard lock(mutex_);
  if (auto it = vars_.find(k); it != vars_.end()) return it->second;
  if (k > 2) {
    int top = vars_.rbegin()->first;
    for (int j = top + 1; j <= k; ++j) {
      // X_{j-2} X_j = q X_{j-1}^2 + q^{1/2} h X_{j-1} + 1
      vars_.emplace(j, exact_divide(Side::Left, vars_.at(j - 2),
                                    exchange_rhs(vars_.at(j - 1)), division_cap_));
    }
  } else {
    int bottom = vars_.begin()->first;
    for (int j = bottom - 1; j >= k; --j) {
      // X_j X_{j+2} = q X_{j+1}^2 + q^{1/2} h X_{j+1} + 1
      vars_.emplace(j, exact_divide(Side::Right, vars_.at(j + 2),
                                    exchange_rhs(vars_.at(j + 1)), division_cap_));
    }
  }
  return vars_.at(k);
}

TorusElement KroneckerAlgebra::x_delta() const {
  return chebyshev(1);
}

TorusElement KroneckerAlgebra::chebyshev(int n) const {
  if (n < 0) return TorusElement(form_);
  if (n > max_k_) {
    throw LimitExceeded("Chebyshev index " + std::to_string(n) +
                        " exceeds the configured limit " + std::to_string(max_k_));
  }
  std::lock_guard lock(mutex_);
  if (auto it = chebyshev_.find(n); it != chebyshev_.end()) return it->second;
  if (chebyshev_.empty()) {
    const Coefficient qh = Coefficient::q_power(1);
    const Coefficient h = Coefficient::h_power(1);
    TorusElement delta = qh * (cluster_var(0) * cluster_var(3));
    delta -= qh * ((qh * cluster_var(1) + constant(h)) *
                   (qh * cluster_var(2) + constant(h)));
    TorusElement closed(form_);
    closed.add_term(ev(-1, -1), 1);
    closed.add_term(ev(-1, 0), h);
    closed.add_term(ev(0, -1), h);
    closed.add_term(ev(-1, 1), 1);
    closed.add_term(ev(1, -1), 1);
    if (!(delta == closed)) {
      throw ConsistencyError("X_delta expansion " + delta.to_string() +
                             " differs from its closed form");
    }
    chebyshev_.emplace(0, one());
    chebyshev_.emplace(1, delta);
    chebyshev_.emplace(2, delta * delta - constant(2));
  }
  const TorusElement& x = chebyshev_.at(1);
  for (int j = chebyshev_.rbegin()->first + 1; j <= n; ++j) {
    chebyshev_.emplace(j, chebyshev_.at(j - 1) * x - chebyshev_.at(j - 2));
  }
  return chebyshev_.at(n);
}

TorusElement KroneckerAlgebra::shifted_delta(int m) const {
  const Coefficient qh = Coefficient::q_power(1);
  const TorusElement h = constant(Coefficient::h_power(1));
  TorusElement out = qh * (cluster_var(m) * cluster_var(m + 3));
  out -= qh * ((qh * cluster_var(m + 1) + h) * (qh * cluster_var(m + 2) + h));
  return out;
}

std::map<int, TorusElement> KroneckerAlgebra::cached_variables() const {
  std::lock_guard lock(mutex_);
  return vars_;
}

bool KroneckerAlgebra::preload(const std::map<int, TorusElement>& vars) {
  if (vars.empty()) return false;
  if (!vars.contains(1) || !vars.contains(2)) return false;
  const int lo = vars.begin()->first;
  const int hi = vars.rbegin()->first;
  if (static_cast<int>(vars.size()) != hi - lo + 1) return false;
  if (std::abs(lo) > max_k_ || std::abs(hi) > max_k_) return false;
  for (const auto& [k, x] : vars) {
    if (!(x.form() == form_)) return false;
  }
  if (!(vars.at(1) == TorusElement::monomial(form_, ev(1, 0))) ||
      !(vars.at(2) == TorusElement::monomial(form_, ev(0, 1)))) {
    return false;
  }
  // With X_1, X_2 fixed the exchange relations determine every neighbour.
  for (int k = lo + 1; k < hi; ++k) {
    if (!(vars.at(k - 1) * vars.at(k + 1) == exchange_rhs(vars.at(k)))) return false;
  }
  std::lock_guard lock(mutex_);
  for (const auto& [k, x] : vars) vars_.insert_or_assign(k, x);
  return true;
}

Integer a_sequence(int i) {
  return Integer(i) * (i + 1) / 2;
}

Integer b_sequence(int i) {
  const Integer sq = Integer(i) * i;
  if (i % 2 != 0) return (sq - 1) / 4;
  return sq / 4;
}

Coefficient c_sequence(int l) {
  if (l < 1) throw std::invalid_argument("c_l needs l >= 1");
  const Coefficient h2 = Coefficient::h_power(2);
  if (l == 1) return 1;
  if (l == 2) return h2;
  if (l % 2 == 0) {
    const int k = l / 2;
    Coefficient inner(a_sequence(k));
    for (int i = 1; i < k; ++i) inner += symmetric_q(k - i).scaled(a_sequence(i));
    return inner * h2;
  }
  const int k = (l + 1) / 2;
  Coefficient inner(b_sequence(k));
  for (int i = 1; i < k; ++i) inner += symmetric_q(k - i).scaled(b_sequence(i));
  Coefficient out = (inner * h2).scaled(2);
  const int top = k % 2 == 0 ? k / 2 : (k - 1) / 2;
  for (int i = 1; i <= top; ++i) out += symmetric_q(k + 1 - 2 * i);
  if (k % 2 != 0) out += Coefficient(1);
  return out;
}

ProductIdentity cheb_cheb_identity(int m, int n) {
  if (n < 1 || m < n) throw std::invalid_argument("need m >= n >= 1");
  ProductIdentity id{{Factor::cheb(m), Factor::cheb(n)}, {}};
  if (m > n) {
    id.rhs.push_back({1, {Factor::cheb(m + n)}});
    id.rhs.push_back({1, {Factor::cheb(m - n)}});
  } else {
    id.rhs.push_back({1, {Factor::cheb(2 * n)}});
    id.rhs.push_back({2, {}});
  }
  return id;
}

ProductIdentity var_cheb_identity(int m, int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  ProductIdentity id{{Factor::var(m), Factor::cheb(n)}, {}};
  id.rhs.push_back({Coefficient::q_power(-n), {Factor::var(m - n)}});
  id.rhs.push_back({Coefficient::q_power(n), {Factor::var(m + n)}});
  for (int k = 1; k <= n; ++k) {
    Coefficient c;
    for (int l = 1; l <= k; ++l) c += Coefficient::monomial(1, 2 * l - (k + 1), 1);
    id.rhs.push_back({c, {Factor::cheb(n - k)}});
  }
  return id;
}

ProductIdentity var_var_identity(int m, int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  ProductIdentity id{{Factor::var(m), Factor::var(m + n)}, {}};
  const int lo = m + floor_div2(n);
  const int hi = n % 2 == 0 ? lo : lo + 1;
  id.rhs.push_back({Coefficient::q_power(2 * floor_div2(n)),
                    {Factor::var(lo), Factor::var(hi)}});
  for (int k = 1; k <= n - 1; ++k) {
    Coefficient c;
    for (int l = 1; l <= std::min(k, n - k); ++l) {
      c += Coefficient::monomial(1, 2 * l - 1, 1);
    }
    id.rhs.push_back({c, {Factor::var(m + n - k)}});
  }
  for (int l = 1; l <= n - 1; ++l) {
    id.rhs.push_back({c_sequence(l).shifted(-(n - 1 - l)),
                      {Factor::cheb(n - 1 - l)}});
  }
  return id;
}

ProductIdentity bar_image(const ProductIdentity& id) {
  ProductIdentity out{{id.lhs.rbegin(), id.lhs.rend()}, {}};
  for (const auto& t : id.rhs) {
    out.rhs.push_back({t.coeff.bar(), {t.factors.rbegin(), t.factors.rend()}});
  }
  return out;
}

TorusElement evaluate(const KroneckerAlgebra& alg, const std::vector<Factor>& f) {
  TorusElement out = alg.one();
  for (const auto& factor : f) {
    out = out * (factor.kind == Factor::Kind::Var ? alg.cluster_var(factor.index)
                                                  : alg.chebyshev(factor.index));
  }
  return out;
}

TorusElement evaluate(const KroneckerAlgebra& alg, const FormulaTerm& t) {
  return t.coeff * evaluate(alg, t.factors);
}

VerificationReport verify_identity(
    const KroneckerAlgebra& alg, const ProductIdentity& id, std::string formula,
    std::vector<std::pair<std::string, long long>> params) {
  VerificationReport report{std::move(formula), std::move(params), false,
                            TorusElement(alg.form()), {}};
  try {
    TorusElement diff = evaluate(alg, id.lhs);
    for (const auto& t : id.rhs) diff -= evaluate(alg, t);
    report.ok = diff.is_zero();
    report.diff = std::move(diff);
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

VerificationReport verify_cheb_cheb(const KroneckerAlgebra& alg, int m, int n) {
  return verify_identity(alg, cheb_cheb_identity(m, n), "thm3.4-1",
                         {{"m", m}, {"n", n}});
}

VerificationReport verify_var_cheb(const KroneckerAlgebra& alg, int m, int n) {
  return verify_identity(alg, var_cheb_identity(m, n), "thm3.4-2",
                         {{"m", m}, {"n", n}});
}

VerificationReport verify_var_var(const KroneckerAlgebra& alg, int m, int n) {
  return verify_identity(alg, var_var_identity(m, n), "thm3.4-3",
                         {{"m", m}, {"n", n}});
}

VerificationReport verify_bar_images(const KroneckerAlgebra& alg, FormulaId which,
                                     int m, int n) {
  switch (which) {
    case FormulaId::ChebCheb:
      return verify_identity(alg, bar_image(cheb_cheb_identity(m, n)),
                             "bar-thm3.4-1", {{"m", m}, {"n", n}});
    case FormulaId::VarCheb:
      return verify_identity(alg, bar_image(var_cheb_identity(m, n)),
                             "bar-thm3.4-2", {{"m", m}, {"n", n}});
    case FormulaId::VarVar:
      return verify_identity(alg, bar_image(var_var_identity(m, n)),
                             "bar-thm3.4-3", {{"m", m}, {"n", n}});
  }
  throw std::invalid_argument("unknown formula id");
}

namespace {

VerificationReport compare(const KroneckerAlgebra& alg, std::string formula,
                           std::vector<std::pair<std::string, long long>> params,
                           const auto& compute) {
  VerificationReport report{std::move(formula), std::move(params), false,
                            TorusElement(alg.form()), {}};
  try {
    report.diff = compute();
    report.ok = report.diff.is_zero();
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

}  // namespace

VerificationReport verify_sigma(const KroneckerAlgebra& alg, int m) {
  return compare(alg, "sigma", {{"m", m}},
                 [&] { return alg.shifted_delta(m) - alg.x_delta(); });
}

VerificationReport verify_exchange(const KroneckerAlgebra& alg, int k) {
  return compare(alg, "exchange", {{"k", k}}, [&] {
    return alg.cluster_var(k - 1) * alg.cluster_var(k + 1) -
           alg.exchange_rhs(alg.cluster_var(k));
  });
}

VerificationReport verify_q_commute(const KroneckerAlgebra& alg, int m) {
  return compare(alg, "q-commute", {{"m", m}}, [&] {
    const TorusElement a = alg.cluster_var(m);
    const TorusElement b = alg.cluster_var(m + 1);
    return a * b - Coefficient::q_power(2) * (b * a);
  });
}

namespace {

TorusElement negative_part(const TorusElement& x) {
  TorusElement out(x.form());
  for (const auto& [a, c] : x.terms()) {
    std::vector<CoeffTerm> bad;
    for (const auto& t : c.terms()) {
      if (t.c < 0) bad.push_back(t);
    }
    if (!bad.empty()) out.add_term(a, Coefficient::from_terms(std::move(bad)));
  }
  return out;
}

}  // namespace

VerificationReport verify_positivity_var(const KroneckerAlgebra& alg, int k) {
  return compare(alg, "positivity", {{"k", k}},
                 [&] { return negative_part(alg.cluster_var(k)); });
}

VerificationReport verify_positivity_cheb(const KroneckerAlgebra& alg, int n) {
  return compare(alg, "positivity", {{"n", n}},
                 [&] { return negative_part(alg.chebyshev(n)); });
}

VerificationReport verify_bar_var(const KroneckerAlgebra& alg, int k) {
  return compare(alg, "bar-var", {{"k", k}}, [&] {
    const TorusElement x = alg.cluster_var(k);
    return x.bar() - x;
  });
}

VerificationReport verify_bar_cheb(const KroneckerAlgebra& alg, int n) {
  return compare(alg, "bar-cheb", {{"n", n}}, [&] {
    const TorusElement x = alg.chebyshev(n);
    return x.bar() - x;
  });
}

VerificationReport verify_bar_monomial(const KroneckerAlgebra& alg, int m,
                                       int a1, int a2) {
  return compare(alg, "bar-monomial", {{"m", m}, {"a1", a1}, {"a2", a2}}, [&] {
    const TorusElement x =
        Coefficient::q_power(-a1 * a2) *
        (alg.cluster_var(m).power(a1) * alg.cluster_var(m + 1).power(a2));
    return x.bar() - x;
  });
}

ExponentVector cluster_var_point(int k) {
  return k >= 2 ? ev(2 - k, 3 - k) : ev(k, k - 1);
}

}  // namespace gqca
