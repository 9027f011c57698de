#include "gqca/basis.hpp"

#include <cstdlib>
#include <set>

#include "gqca/errors.hpp"

namespace gqca {
namespace {

Point point_of_var(int k) {
  const ExponentVector e = cluster_var_point(k);
  return {e[0], e[1]};
}

}  // namespace

BasisIndex make_monomial_index(int m, int a1, int a2) {
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("negative basis exponent");
  if (a1 == 0 && a2 == 0) return IdentityIndex{};
  if (a1 == 0) return MonomialIndex{m + 1, a2, 0};
  return MonomialIndex{m, a1, a2};
}

BasisIndex make_imaginary_index(int n) {
  if (n < 1) throw std::invalid_argument("imaginary index needs n >= 1");
  return ImaginaryIndex{n};
}

bool is_canonical(const BasisIndex& ix) {
  if (const auto* mono = std::get_if<MonomialIndex>(&ix)) {
    return mono->a1 >= 1 && mono->a2 >= 0;
  }
  if (const auto* im = std::get_if<ImaginaryIndex>(&ix)) return im->n >= 1;
  return true;
}

std::string to_string(const BasisIndex& ix) {
  struct Visitor {
    std::string operator()(const IdentityIndex&) const { return "1"; }
    std::string operator()(const MonomialIndex& x) const {
      return "monomial(m=" + std::to_string(x.m) + ",a1=" + std::to_string(x.a1) +
             ",a2=" + std::to_string(x.a2) + ")";
    }
    std::string operator()(const ImaginaryIndex& x) const {
      return "F" + std::to_string(x.n);
    }
  };
  return std::visit(Visitor{}, ix);
}

Point pointing_exponent(const BasisIndex& ix) {
  if (std::holds_alternative<IdentityIndex>(ix)) return {0, 0};
  if (const auto* im = std::get_if<ImaginaryIndex>(&ix)) return {-im->n, -im->n};
  const auto& mono = std::get<MonomialIndex>(ix);
  const Point u = point_of_var(mono.m);
  const Point v = point_of_var(mono.m + 1);
  return {mono.a1 * u[0] + mono.a2 * v[0], mono.a1 * u[1] + mono.a2 * v[1]};
}

BasisIndex index_from_point(const Point& p) {
  if (p[0] == 0 && p[1] == 0) return IdentityIndex{};
  if (p[0] == p[1] && p[0] < 0) return ImaginaryIndex{-p[0]};
  // Consecutive pointing vectors form unimodular cones that tile the plane
  // minus the negative diagonal.
  const int window = std::abs(p[0]) + std::abs(p[1]) + 3;
  std::set<BasisIndex> found;
  for (int m = -window; m <= window; ++m) {
    const Point u = point_of_var(m);
    const Point v = point_of_var(m + 1);
    const long long det = 1LL * u[0] * v[1] - 1LL * u[1] * v[0];
    if (det != 1 && det != -1) {
      throw ConsistencyError("non-unimodular cone at m = " + std::to_string(m));
    }
    const long long a1 = (1LL * p[0] * v[1] - 1LL * p[1] * v[0]) / det;
    const long long a2 = (1LL * u[0] * p[1] - 1LL * u[1] * p[0]) / det;
    if (a1 >= 0 && a2 >= 0) {
      found.insert(make_monomial_index(m, static_cast<int>(a1), static_cast<int>(a2)));
    }
  }
  if (found.size() != 1) {
    throw ConsistencyError("point (" + std::to_string(p[0]) + "," +
                           std::to_string(p[1]) + ") lies in " +
                           std::to_string(found.size()) + " cones");
  }
  return *found.begin();
}

void BasisExpansion::add(const BasisIndex& ix, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.try_emplace(ix, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

BasisExpansion operator+(const BasisExpansion& a, const BasisExpansion& b) {
  BasisExpansion out = a;
  for (const auto& [ix, c] : b.coords) out.add(ix, c);
  return out;
}

Basis::Basis(const KroneckerAlgebra& alg, std::size_t expansion_cap)
    : alg_(alg), cap_(expansion_cap) {}

TorusElement Basis::element(const BasisIndex& ix) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(ix); it != cache_.end()) return it->second;
  }
  if (!is_canonical(ix)) {
    throw std::invalid_argument("non-canonical basis index " + to_string(ix));
  }
  TorusElement value = [&] {
    if (std::holds_alternative<IdentityIndex>(ix)) return alg_.one();
    if (const auto* im = std::get_if<ImaginaryIndex>(&ix)) {
      return alg_.chebyshev(im->n);
    }
    const auto& mono = std::get<MonomialIndex>(ix);
    TorusElement x = alg_.cluster_var(mono.m).power(mono.a1) *
                     alg_.cluster_var(mono.m + 1).power(mono.a2);
    return Coefficient::q_power(-mono.a1 * mono.a2) * std::move(x);
  }();
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(ix, std::move(value)).first->second;
}

BasisExpansion Basis::expand(const TorusElement& z) const {
  if (!(z.form() == alg_.form())) {
    throw FormMismatch("element does not live in the Kronecker torus");
  }
  BasisExpansion out;
  TorusElement remainder = z;
  std::size_t steps = 0;
  while (!remainder.is_zero()) {
    if (steps++ >= cap_) {
      throw NotInSpan("expansion did not terminate within " +
                      std::to_string(cap_) + " steps; remainder " +
                      remainder.to_string());
    }
    const auto& [e, c] = *remainder.terms().begin();
    const BasisIndex ix = index_from_point({e[0], e[1]});
    const TorusElement b = element(ix);
    const auto pf = b.try_pointed();
    if (!pf) {
      throw NotInSpan("basis element " + to_string(ix) +
                      " has no unit minimal term: " + b.to_string());
    }
    if (pf->point != e) {
      throw ConsistencyError("basis element " + to_string(ix) + " is pointed at " +
                             gqca::to_string(pf->point) + ", expected " +
                             gqca::to_string(e));
    }
    Coefficient t = c.shifted(-pf->unit.qhalf);
    if (pf->unit.sign < 0) t = -t;
    remainder -= t * b;
    out.add(ix, t);
  }
  if (!(reassemble(out) == z)) {
    throw ConsistencyError("basis expansion failed the re-expansion check");
  }
  return out;
}

TorusElement Basis::reassemble(const BasisExpansion& e) const {
  TorusElement out(alg_.form());
  for (const auto& [ix, c] : e.coords) out += c * element(ix);
  return out;
}

BasisExpansion Basis::structure_constants(const BasisIndex& a,
                                          const BasisIndex& b) const {
  return expand(element(a) * element(b));
}

VerificationReport verify_basis_roundtrip(const Basis& basis, const Point& p) {
  VerificationReport report{"basis-roundtrip", {{"x", p[0]}, {"y", p[1]}}, false,
                            TorusElement(basis.algebra().form()), {}};
  try {
    const BasisIndex ix = index_from_point(p);
    if (pointing_exponent(ix) != p) {
      report.error = to_string(ix) + " does not point back";
      return report;
    }
    const TorusElement b = basis.element(ix);
    const auto pf = b.try_pointed();
    if (!pf || pf->point != ExponentVector{p[0], p[1]} ||
        !(pf->unit == QUnit{1, 0})) {
      report.error = to_string(ix) + " is not pointed at its exponent";
      return report;
    }
    const BasisExpansion e = basis.expand(b);
    BasisExpansion expected;
    expected.add(ix, 1);
    report.diff = basis.reassemble(e) - b;
    report.ok = e == expected && report.diff.is_zero();
    if (!report.ok && report.diff.is_zero()) {
      report.error = to_string(ix) + " does not expand to itself";
    }
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

VerificationReport verify_structure_positivity(const Basis& basis,
                                               const Point& p, const Point& r) {
  VerificationReport report{"structure-positivity",
                            {{"x1", p[0]}, {"y1", p[1]}, {"x2", r[0]}, {"y2", r[1]}},
                            false,
                            TorusElement(basis.algebra().form()),
                            {}};
  try {
    const TorusElement product =
        basis.element(index_from_point(p)) * basis.element(index_from_point(r));
    const BasisExpansion e = basis.expand(product);
    report.diff = basis.reassemble(e) - product;
    report.ok = report.diff.is_zero() && is_positive_expansion(e);
    if (!report.ok && report.diff.is_zero()) {
      for (const auto& [ix, c] : e.coords) {
        if (!c.is_positive()) {
          report.error = "negative coefficient " + c.to_string() + " at " +
                         to_string(ix);
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

bool is_positive_element(const TorusElement& z) {
  for (const auto& [a, c] : z.terms()) {
    if (!c.is_positive()) return false;
  }
  return true;
}

bool is_positive_expansion(const BasisExpansion& e) {
  for (const auto& [ix, c] : e.coords) {
    if (!c.is_positive()) return false;
  }
  return true;
}

std::map<BasisIndex, Integer> specialize_expansion(const BasisExpansion& e) {
  std::map<BasisIndex, Integer> out;
  for (const auto& [ix, c] : e.coords) {
    const auto value = c.specialize(true, true).as_integer();
    if (value && !value->is_zero()) out.emplace(ix, *value);
  }
  return out;
}

}  // namespace gqca
