#include "gqca/torus.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "gqca/errors.hpp"

namespace gqca {

ExponentVector unit_vector(int rank, int k) {
  ExponentVector e(static_cast<std::size_t>(rank), 0);
  e.at(static_cast<std::size_t>(k)) = 1;
  return e;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw RankMismatch("exponent rank mismatch");
  ExponentVector s(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw RankMismatch("exponent rank mismatch");
  ExponentVector s(a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
  return s;
}

ExponentVector scale(const ExponentVector& a, std::int32_t s) {
  ExponentVector out(a);
  for (auto& v : out) v *= s;
  return out;
}

bool componentwise_leq(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw RankMismatch("exponent rank mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string to_string(const ExponentVector& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

SkewForm::SkewForm(IntMatrix lambda)
    : matrix_(std::make_shared<const IntMatrix>(std::move(lambda))) {
  if (!matrix_->is_skew_symmetric() || matrix_->rows() == 0) {
    throw std::invalid_argument("form matrix must be nonempty and skew-symmetric");
  }
}

SkewForm SkewForm::kronecker() {
  static const SkewForm form(IntMatrix{{0, 1}, {-1, 0}});
  return form;
}

std::int64_t SkewForm::pairing(const ExponentVector& a,
                               const ExponentVector& b) const {
  const int m = rank();
  if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m) {
    throw RankMismatch("exponent rank does not match the form");
  }
  const IntMatrix& lam = *matrix_;
  std::int64_t sum = 0;
  for (int i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < m; ++j) row += lam(i, j) * b[j];
    sum += a[i] * row;
  }
  return sum;
}

std::int64_t lambda_pairing(const SkewForm& form, const ExponentVector& a,
                            const ExponentVector& b) {
  return form.pairing(a, b);
}

TorusElement::TorusElement(SkewForm form) : form_(std::move(form)) {}

TorusElement TorusElement::constant(SkewForm form, Coefficient c) {
  const int m = form.rank();
  TorusElement x(std::move(form));
  if (!c.is_zero()) {
    x.terms_.emplace(ExponentVector(static_cast<std::size_t>(m), 0),
                     std::move(c));
  }
  return x;
}

TorusElement TorusElement::monomial(SkewForm form, ExponentVector a,
                                    Coefficient c) {
  if (static_cast<int>(a.size()) != form.rank()) {
    throw RankMismatch("exponent rank does not match the form");
  }
  TorusElement x(std::move(form));
  if (!c.is_zero()) x.terms_.emplace(std::move(a), std::move(c));
  return x;
}

Coefficient TorusElement::coefficient(const ExponentVector& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Coefficient{} : it->second;
}

void TorusElement::require_same_form(const TorusElement& other) const {
  if (!(form_ == other.form_)) {
    throw FormMismatch("torus elements belong to different skew forms");
  }
}

void TorusElement::add_term(const ExponentVector& a, const Coefficient& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(a.size()) != rank()) {
    throw RankMismatch("exponent rank does not match the form");
  }
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& other) {
  require_same_form(other);
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& other) {
  require_same_form(other);
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

TorusElement& TorusElement::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement out = *this;
  for (auto& [a, c] : out.terms_) c = -c;
  return out;
}

namespace {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

struct FlatCoeff {
  std::vector<std::int32_t> q;
  std::vector<std::int32_t> h;
  std::vector<std::int64_t> c;
  std::int32_t qmin = 0;
  std::int32_t qmax = 0;
  std::int32_t hmax = 0;
};

struct FlatElement {
  std::vector<const ExponentVector*> exps;
  std::vector<FlatCoeff> coeffs;
  long double norm = 0;  // sum of absolute values of all integers
};

const Integer kInt64Max = Integer(std::numeric_limits<std::int64_t>::max());

bool flatten(const TorusElement::TermMap& terms, FlatElement& out) {
  out.exps.reserve(terms.size());
  out.coeffs.reserve(terms.size());
  for (const auto& [a, coeff] : terms) {
    FlatCoeff f;
    const auto ts = coeff.terms();
    f.q.reserve(ts.size());
    f.h.reserve(ts.size());
    f.c.reserve(ts.size());
    f.qmin = ts.front().qhalf;
    f.qmax = ts.back().qhalf;
    for (const auto& t : ts) {
      if (t.c > kInt64Max || t.c < -kInt64Max) return false;
      const auto v = static_cast<std::int64_t>(t.c);
      f.q.push_back(t.qhalf);
      f.h.push_back(t.hdeg);
      f.c.push_back(v);
      f.hmax = std::max(f.hmax, t.hdeg);
      out.norm += static_cast<long double>(v < 0 ? -v : v);
    }
    out.exps.push_back(&a);
    out.coeffs.push_back(std::move(f));
  }
  return true;
}

struct Pair {
  std::uint32_t i;
  std::uint32_t j;
  std::int32_t shift;
};

struct Bucket {
  std::int32_t qlo = std::numeric_limits<std::int32_t>::max();
  std::int32_t qhi = std::numeric_limits<std::int32_t>::min();
  std::int32_t hhi = 0;
  std::vector<Pair> pairs;
};

Integer to_integer(Int128 v) {
  const bool neg = v < 0;
  UInt128 u = neg ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
  Integer r(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? Integer(-r) : r;
}

Integer to_integer(std::int64_t v) { return Integer(v); }

// Accumulates each result exponent into a dense (qhalf, hdeg) buffer.
template <typename Acc>
void dense_product(const FlatElement& x, const FlatElement& y,
                   std::map<ExponentVector, Bucket>& buckets,
                   TorusElement::TermMap& out) {
  std::int32_t hhi = 0;
  for (const auto& [c, bucket] : buckets) hhi = std::max(hhi, bucket.hhi);
  const std::int64_t hs = hhi + 1;
  std::vector<std::vector<std::int64_t>> yoff(y.coeffs.size());
  for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
    const FlatCoeff& g = y.coeffs[j];
    yoff[j].resize(g.c.size());
    for (std::size_t t = 0; t < g.c.size(); ++t) {
      yoff[j][t] = g.q[t] * hs + g.h[t];
    }
  }
  std::vector<Acc> buf;
  for (auto& [c, bucket] : buckets) {
    const std::size_t qs =
        static_cast<std::size_t>(bucket.qhi - bucket.qlo) + 1;
    buf.assign(qs * static_cast<std::size_t>(hs), Acc{0});
    for (const Pair& p : bucket.pairs) {
      const FlatCoeff& f = x.coeffs[p.i];
      const FlatCoeff& g = y.coeffs[p.j];
      const std::int64_t* off = yoff[p.j].data();
      const std::int64_t* gc = g.c.data();
      const std::size_t n = g.c.size();
      const std::int64_t base = p.shift - bucket.qlo;
      for (std::size_t s = 0; s < f.c.size(); ++s) {
        const std::int64_t fc = f.c[s];
        Acc* cell = buf.data() + (base + f.q[s]) * hs + f.h[s];
        for (std::size_t t = 0; t < n; ++t) {
          cell[off[t]] += static_cast<Acc>(fc) * static_cast<Acc>(gc[t]);
        }
      }
    }
    std::vector<CoeffTerm> terms;
    for (std::size_t qi = 0; qi < qs; ++qi) {
      for (std::int64_t hi = 0; hi < hs; ++hi) {
        const Acc v = buf[qi * static_cast<std::size_t>(hs) + hi];
        if (v != 0) {
          terms.push_back({bucket.qlo + static_cast<std::int32_t>(qi),
                           static_cast<std::int32_t>(hi), to_integer(v)});
        }
      }
    }
    if (!terms.empty()) {
      out.emplace_hint(out.end(), c,
                       Coefficient::from_canonical_terms(std::move(terms)));
    }
  }
}

}  // namespace

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
  x.require_same_form(y);
  TorusElement out(x.form_);
  if (x.is_zero() || y.is_zero()) return out;

  FlatElement fx;
  FlatElement fy;
  const long double bound = [&] {
    if (!flatten(x.terms_, fx) || !flatten(y.terms_, fy)) return 0.0L;
    return fx.norm * fy.norm;
  }();
  constexpr long double kInt64Safe = 4.0e18L;
  constexpr long double kInt128Safe = 1.0e37L;

  if (bound <= 0 || bound >= kInt128Safe) {
    for (const auto& [a, ca] : x.terms_) {
      for (const auto& [b, cb] : y.terms_) {
        const auto shift = static_cast<std::int32_t>(x.form_.pairing(a, b));
        out.add_term(a + b, (ca * cb).shifted(shift));
      }
    }
    return out;
  }

  std::map<ExponentVector, Bucket> buckets;
  for (std::uint32_t i = 0; i < fx.exps.size(); ++i) {
    for (std::uint32_t j = 0; j < fy.exps.size(); ++j) {
      const auto shift =
          static_cast<std::int32_t>(x.form_.pairing(*fx.exps[i], *fy.exps[j]));
      Bucket& b = buckets[*fx.exps[i] + *fy.exps[j]];
      const FlatCoeff& f = fx.coeffs[i];
      const FlatCoeff& g = fy.coeffs[j];
      b.qlo = std::min(b.qlo, f.qmin + g.qmin + shift);
      b.qhi = std::max(b.qhi, f.qmax + g.qmax + shift);
      b.hhi = std::max(b.hhi, f.hmax + g.hmax);
      b.pairs.push_back({i, j, shift});
    }
  }
  if (bound < kInt64Safe) {
    dense_product<std::int64_t>(fx, fy, buckets, out.terms_);
  } else {
    dense_product<Int128>(fx, fy, buckets, out.terms_);
  }
  return out;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return a.form_ == b.form_ && a.terms_ == b.terms_;
}

TorusElement TorusElement::power(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a torus element");
  TorusElement result = constant(form_, 1);
  TorusElement base = *this;
  // Powers of one element commute, so binary exponentiation is exact.
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

TorusElement TorusElement::bar() const {
  TorusElement out = *this;
  for (auto& [a, c] : out.terms_) c = c.bar();
  return out;
}

std::vector<ExponentVector> TorusElement::minimal_exponents() const {
  std::vector<ExponentVector> out;
  // A lexicographic predecessor is the only possible componentwise lower
  // bound, so each candidate is checked against the minimal ones found so far.
  for (const auto& [a, c] : terms_) {
    bool minimal = true;
    for (const auto& m : out) {
      if (componentwise_leq(m, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::optional<PointedForm> TorusElement::try_pointed() const {
  if (terms_.empty()) return std::nullopt;
  ExponentVector low = terms_.begin()->first;
  for (const auto& [a, c] : terms_)
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], a[i]);
  auto it = terms_.find(low);
  if (it == terms_.end()) return std::nullopt;
  auto unit = it->second.as_unit_q_power();
  if (!unit) return std::nullopt;
  return PointedForm{low, *unit};
}

PointedForm TorusElement::pointed() const {
  if (terms_.empty()) throw NotPointed("zero element is not pointed");
  auto p = try_pointed();
  if (!p) {
    const auto mins = minimal_exponents();
    std::string msg = "element is not pointed: ";
    if (mins.size() > 1) {
      msg += std::to_string(mins.size()) + " incomparable minimal exponents";
    } else {
      msg += "minimal coefficient " + coefficient(mins.front()).to_string() +
             " at " + gqca::to_string(mins.front()) + " is not a unit q-power";
    }
    throw NotPointed(msg);
  }
  return *p;
}

namespace {

// 2 * exponent of q in X(a) = q^{(1/2) sum_{i<j} lambda_ji a_i a_j} X_1^{a_1}...
std::int32_t standard_shift(const IntMatrix& lam, const ExponentVector& a) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      s += lam(static_cast<int>(j), static_cast<int>(i)) * a[i] * a[j];
  return static_cast<std::int32_t>(s);
}

}  // namespace

std::vector<StandardTerm> TorusElement::to_standard_form() const {
  std::vector<StandardTerm> out;
  out.reserve(terms_.size());
  for (const auto& [a, c] : terms_) {
    out.push_back({c.shifted(standard_shift(form_.matrix(), a)), a});
  }
  return out;
}

TorusElement TorusElement::from_standard_form(
    SkewForm form, const std::vector<StandardTerm>& terms) {
  TorusElement x(std::move(form));
  for (const auto& t : terms) {
    x.add_term(t.word, t.coeff.shifted(-standard_shift(x.form_.matrix(), t.word)));
  }
  return x;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    const bool is_const = std::all_of(a.begin(), a.end(),
                                      [](std::int32_t v) { return v == 0; });
    std::string body;
    bool negative = false;
    if (c.terms().size() == 1) {
      negative = c.terms().front().c.sign() < 0;
      const Coefficient mag = negative ? -c : c;
      if (is_const) {
        body = mag.to_string();
      } else {
        body = mag == Coefficient(1) ? "" : mag.to_string() + "*";
      }
    } else if (is_const) {
      body = terms_.size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
    } else {
      body = "(" + c.to_string() + ")*";
    }
    if (!is_const) {
      std::string mono = "X";
      mono += gqca::to_string(a);
      body += mono;
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    os << body;
    first = false;
  }
  return os.str();
}

TorusElement mono_mul(const SkewForm& form, const ExponentVector& a,
                      const ExponentVector& b) {
  const auto shift = static_cast<std::int32_t>(form.pairing(a, b));
  return TorusElement::monomial(form, a + b, Coefficient::q_power(shift));
}

namespace {

// Componentwise range any exact quotient must lie in: for every coordinate
// the extreme degrees of a product add.
struct QuotientBox {
  ExponentVector lo;
  ExponentVector hi;

  QuotientBox(const TorusElement& g, const TorusElement& f) {
    const auto [gmin, gmax] = extent(g);
    const auto [fmin, fmax] = extent(f);
    for (std::size_t i = 0; i < gmin.size(); ++i) {
      lo.push_back(fmin[i] - gmin[i]);
      hi.push_back(fmax[i] - gmax[i]);
    }
  }

  bool empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (lo[i] > hi[i]) return true;
    }
    return false;
  }

  bool contains(const ExponentVector& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] < lo[i] || b[i] > hi[i]) return false;
    }
    return true;
  }

  // Number of lattice points, saturating at limit + 1.
  std::size_t volume(std::size_t limit) const {
    std::size_t v = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      v *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
      if (v > limit) return limit + 1;
    }
    return v;
  }

  std::size_t offset(const ExponentVector& b) const {
    std::size_t o = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      o = o * static_cast<std::size_t>(hi[i] - lo[i] + 1) +
          static_cast<std::size_t>(b[i] - lo[i]);
    }
    return o;
  }

  void require(const ExponentVector& b) const {
    if (!contains(b)) {
      throw DivisionNotExact("quotient term leaves the feasible exponent range");
    }
  }

 private:
  static std::pair<ExponentVector, ExponentVector> extent(const TorusElement& x) {
    ExponentVector mn = x.terms().begin()->first;
    ExponentVector mx = mn;
    for (const auto& [e, c] : x.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        mn[i] = std::min(mn[i], e[i]);
        mx[i] = std::max(mx[i], e[i]);
      }
    }
    return {mn, mx};
  }
};

// Division that visits candidate quotient exponents b in lex order and pulls
// the remainder at b + p from f and the quotient terms already found, so only
// one coefficient buffer is live at a time. Returns nullopt when a value
// leaves int64/int128 range or the box is too large to walk.
std::optional<TorusElement> divide_dense(Side side, const TorusElement& g,
                                         const TorusElement& f,
                                         const PointedForm& pivot,
                                         const QuotientBox& box,
                                         std::size_t max_steps) {
  constexpr std::size_t kMaxBox = std::size_t{1} << 22;
  const std::size_t volume = box.volume(kMaxBox);
  if (volume > kMaxBox) return std::nullopt;

  FlatElement fg;
  FlatElement ff;
  if (!flatten(g.terms(), fg) || !flatten(f.terms(), ff)) return std::nullopt;
  std::map<ExponentVector, std::size_t> fpos;
  for (std::size_t i = 0; i < ff.exps.size(); ++i) fpos.emplace(*ff.exps[i], i);

  std::vector<std::size_t> others;  // non-pivot terms of g
  for (std::size_t i = 0; i < fg.exps.size(); ++i) {
    if (*fg.exps[i] != pivot.point) others.push_back(i);
  }

  const SkewForm& form = g.form();
  const std::size_t rank = box.lo.size();
  std::vector<std::int32_t> slot(volume, -1);
  std::vector<FlatCoeff> found;
  std::vector<ExponentVector> found_at;

  struct Source {
    const FlatCoeff* a;
    const FlatCoeff* b;
    std::int32_t shift;
  };
  std::vector<Source> sources;
  std::vector<Int128> buf;
  std::size_t steps = 0;

  ExponentVector b = box.lo;
  for (std::size_t n = 0; n < volume; ++n) {
    if (n > 0) {
      for (std::size_t i = rank; i-- > 0;) {
        if (++b[i] <= box.hi[i]) break;
        b[i] = box.lo[i];
      }
    }
    const ExponentVector e = b + pivot.point;

    sources.clear();
    std::int32_t qlo = std::numeric_limits<std::int32_t>::max();
    std::int32_t qhi = std::numeric_limits<std::int32_t>::min();
    std::int32_t hhi = 0;
    const FlatCoeff* fe = nullptr;
    if (const auto it = fpos.find(e); it != fpos.end()) {
      fe = &ff.coeffs[it->second];
      qlo = fe->qmin;
      qhi = fe->qmax;
      hhi = fe->hmax;
    }
    for (const std::size_t i : others) {
      const ExponentVector& a = *fg.exps[i];
      const ExponentVector prev = e - a;
      if (!box.contains(prev)) continue;
      const std::int32_t s = slot[box.offset(prev)];
      if (s < 0) continue;
      const FlatCoeff& ga = fg.coeffs[i];
      const FlatCoeff& tb = found[static_cast<std::size_t>(s)];
      const auto shift = static_cast<std::int32_t>(
          side == Side::Left ? form.pairing(a, prev) : form.pairing(prev, a));
      sources.push_back({&ga, &tb, shift});
      qlo = std::min(qlo, ga.qmin + tb.qmin + shift);
      qhi = std::max(qhi, ga.qmax + tb.qmax + shift);
      hhi = std::max(hhi, ga.hmax + tb.hmax);
    }
    if (!fe && sources.empty()) continue;

    const std::int64_t hs = hhi + 1;
    const auto rows = static_cast<std::size_t>(qhi - qlo + 1);
    buf.assign(rows * static_cast<std::size_t>(hs), Int128{0});
    bool overflow = false;
    if (fe) {
      for (std::size_t k = 0; k < fe->c.size(); ++k) {
        buf[static_cast<std::size_t>((fe->q[k] - qlo) * hs + fe->h[k])] = fe->c[k];
      }
    }
    for (const Source& src : sources) {
      const FlatCoeff& x = *src.a;
      const FlatCoeff& y = *src.b;
      for (std::size_t i = 0; i < x.c.size(); ++i) {
        Int128* row = buf.data() + (x.q[i] + src.shift - qlo) * hs + x.h[i];
        const auto xc = static_cast<Int128>(x.c[i]);
        for (std::size_t j = 0; j < y.c.size(); ++j) {
          Int128& cell = row[y.q[j] * hs + y.h[j]];
          overflow |= __builtin_sub_overflow(cell, xc * y.c[j], &cell);
        }
      }
    }
    if (overflow) return std::nullopt;

    const std::int64_t twist = side == Side::Left ? form.pairing(pivot.point, b)
                                                  : form.pairing(b, pivot.point);
    const auto qshift = -static_cast<std::int32_t>(twist) - pivot.unit.qhalf;
    FlatCoeff t;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::int64_t h = 0; h < hs; ++h) {
        Int128 c = buf[r * static_cast<std::size_t>(hs) + static_cast<std::size_t>(h)];
        if (c == 0) continue;
        if (pivot.unit.sign < 0) c = -c;
        if (c > std::numeric_limits<std::int64_t>::max() ||
            c < -std::numeric_limits<std::int64_t>::max()) {
          return std::nullopt;
        }
        t.q.push_back(static_cast<std::int32_t>(r) + qlo + qshift);
        t.h.push_back(static_cast<std::int32_t>(h));
        t.c.push_back(static_cast<std::int64_t>(c));
        t.hmax = std::max(t.hmax, static_cast<std::int32_t>(h));
      }
    }
    if (t.c.empty()) continue;
    if (steps++ >= max_steps) {
      throw DivisionNotExact("division did not terminate within " +
                             std::to_string(max_steps) + " steps");
    }
    t.qmin = t.q.front();
    t.qmax = t.q.back();
    slot[n] = static_cast<std::int32_t>(found.size());
    found.push_back(std::move(t));
    found_at.push_back(b);
  }

  TorusElement::TermMap qterms;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const FlatCoeff& t = found[i];
    std::vector<CoeffTerm> terms;
    terms.reserve(t.c.size());
    for (std::size_t j = 0; j < t.c.size(); ++j) {
      terms.push_back({t.q[j], t.h[j], Integer(t.c[j])});
    }
    qterms.emplace_hint(qterms.end(), found_at[i],
                        Coefficient::from_canonical_terms(std::move(terms)));
  }
  TorusElement quotient(form);
  for (auto& [e, c] : qterms) quotient.add_term(e, std::move(c));
  return quotient;
}

}  // namespace

TorusElement exact_divide(Side side, const TorusElement& g,
                          const TorusElement& f, std::size_t max_steps) {
  if (!(g.form() == f.form())) {
    throw FormMismatch("divisor and dividend belong to different skew forms");
  }
  const auto pivot = g.try_pointed();
  if (!pivot) {
    throw DivisionNotExact("divisor " + g.to_string() +
                           " is not pointed with a unit minimal coefficient");
  }
  const SkewForm& form = g.form();
  if (f.is_zero()) return TorusElement(form);
  const QuotientBox box(g, f);
  if (box.empty()) {
    throw DivisionNotExact("dividend is narrower than the divisor");
  }
  std::optional<TorusElement> fast = divide_dense(side, g, f, *pivot, box, max_steps);
  TorusElement quotient = fast ? std::move(*fast) : TorusElement(form);
  if (!fast) {
    TorusElement remainder = f;
    std::size_t steps = 0;
    while (!remainder.is_zero()) {
      if (steps++ >= max_steps) {
        throw DivisionNotExact("division did not terminate within " +
                               std::to_string(max_steps) + " steps");
      }
      // The lexicographically least support exponent is always minimal.
      const auto& [e, c] = *remainder.terms().begin();
      const ExponentVector b = e - pivot->point;
      box.require(b);
      const std::int64_t twist = side == Side::Left
                                     ? form.pairing(pivot->point, b)
                                     : form.pairing(b, pivot->point);
      Coefficient t =
          c.shifted(-static_cast<std::int32_t>(twist) - pivot->unit.qhalf);
      if (pivot->unit.sign < 0) t = -t;
      const TorusElement step = TorusElement::monomial(form, b, t);
      remainder -= side == Side::Left ? g * step : step * g;
      quotient += step;
    }
  }
  const TorusElement check = side == Side::Left ? g * quotient : quotient * g;
  if (!(check == f)) {
    throw DivisionNotExact("quotient failed the product re-check");
  }
  return quotient;
}

}  // namespace gqca
