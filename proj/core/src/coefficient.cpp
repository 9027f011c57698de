#include "gqca/coefficient.hpp"

#include <algorithm>
#include <sstream>

namespace gqca {
namespace {

bool key_less(const CoeffTerm& a, const CoeffTerm& b) {
  return a.qhalf != b.qhalf ? a.qhalf < b.qhalf : a.hdeg < b.hdeg;
}

bool same_key(const CoeffTerm& a, const CoeffTerm& b) {
  return a.qhalf == b.qhalf && a.hdeg == b.hdeg;
}

// Sorts, merges equal keys and drops zeros in place.
void canonicalize(std::vector<CoeffTerm>& terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    CoeffTerm acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && same_key(acc, terms[j]); ++j) acc.c += terms[j].c;
    if (!acc.c.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists; sign = +1 adds, -1 subtracts.
std::vector<CoeffTerm> merge(const std::vector<CoeffTerm>& a,
                             const std::vector<CoeffTerm>& b, int sign) {
  std::vector<CoeffTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().c = -out.back().c;
    } else {
      Integer c = a[i].c;
      if (sign > 0) {
        c += b[j].c;
      } else {
        c -= b[j].c;
      }
      if (!c.is_zero()) out.push_back({a[i].qhalf, a[i].hdeg, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string power_text(const char* base, long long e) {
  if (e == 1) return base;
  std::ostringstream os;
  os << base << '^';
  if (e < 0) {
    os << '(' << e << ')';
  } else {
    os << e;
  }
  return os.str();
}

}  // namespace

Coefficient::Coefficient(long long n) {
  if (n != 0) terms_.push_back({0, 0, Integer(n)});
}

Coefficient::Coefficient(const Integer& n) {
  if (!n.is_zero()) terms_.push_back({0, 0, n});
}

Coefficient Coefficient::monomial(const Integer& c, std::int32_t qhalf,
                                  std::int32_t hdeg) {
  Coefficient out;
  if (!c.is_zero()) out.terms_.push_back({qhalf, hdeg, c});
  return out;
}

Coefficient Coefficient::q_power(std::int32_t qhalf) {
  return monomial(1, qhalf, 0);
}

Coefficient Coefficient::h_power(std::int32_t hdeg) {
  return monomial(1, 0, hdeg);
}

Coefficient Coefficient::from_terms(std::vector<CoeffTerm> terms) {
  for (const auto& t : terms) {
    if (t.hdeg < 0) throw std::invalid_argument("negative h degree");
  }
  Coefficient out;
  canonicalize(terms);
  out.terms_ = std::move(terms);
  return out;
}

Coefficient Coefficient::from_canonical_terms(std::vector<CoeffTerm> terms) {
  Coefficient out;
  out.terms_ = std::move(terms);
  return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  *this = *this * other;
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient out = *this;
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.terms_.size() == 1) {
    const CoeffTerm& u = b.terms_.front();
    out.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
      out.terms_.push_back({t.qhalf + u.qhalf, t.hdeg + u.hdeg, t.c * u.c});
    }
    return out;  // order is preserved by a uniform shift
  }
  if (a.terms_.size() == 1) return b * a;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.terms_.push_back({s.qhalf + t.qhalf, s.hdeg + t.hdeg, s.c * t.c});
    }
  }
  canonicalize(out.terms_);
  return out;
}

Coefficient Coefficient::shifted(std::int32_t qhalf) const {
  Coefficient out = *this;
  for (auto& t : out.terms_) t.qhalf += qhalf;
  return out;
}

Coefficient Coefficient::scaled(const Integer& n) const {
  if (n.is_zero()) return {};
  Coefficient out = *this;
  for (auto& t : out.terms_) t.c *= n;
  return out;
}

Coefficient Coefficient::bar() const {
  Coefficient out = *this;
  for (auto& t : out.terms_) t.qhalf = -t.qhalf;
  canonicalize(out.terms_);
  return out;
}

bool Coefficient::is_positive() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const CoeffTerm& t) { return t.c.sign() > 0; });
}

Coefficient Coefficient::specialize(bool q_to_one, bool h_to_zero) const {
  std::vector<CoeffTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (h_to_zero && t.hdeg > 0) continue;
    terms.push_back({q_to_one ? 0 : t.qhalf, t.hdeg, t.c});
  }
  return from_terms(std::move(terms));
}

std::optional<QUnit> Coefficient::as_unit_q_power() const {
  if (terms_.size() != 1) return std::nullopt;
  const CoeffTerm& t = terms_.front();
  if (t.hdeg != 0) return std::nullopt;
  if (t.c == 1) return QUnit{1, t.qhalf};
  if (t.c == -1) return QUnit{-1, t.qhalf};
  return std::nullopt;
}

std::optional<Integer> Coefficient::as_integer() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_.front().qhalf == 0 &&
      terms_.front().hdeg == 0) {
    return terms_.front().c;
  }
  return std::nullopt;
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    const Integer mag = negative ? Integer(-t.c) : t.c;
    if (t.qhalf != 0) {
      factors.push_back(t.qhalf % 2 == 0 ? power_text("q", t.qhalf / 2)
                                         : power_text("qh", t.qhalf));
    }
    if (t.hdeg != 0) factors.push_back(power_text("h", t.hdeg));
    if (mag != 1 || factors.empty()) factors.insert(factors.begin(), mag.str());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

Coefficient to_coefficient(const QUnit& u) {
  return Coefficient::monomial(u.sign, u.qhalf, 0);
}

}  // namespace gqca
