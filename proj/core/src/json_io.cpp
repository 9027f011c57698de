#include "gqca/json_io.hpp"

#include "gqca/errors.hpp"

namespace gqca {

Json to_json(const Coefficient& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms()) {
    terms.push_back({{"qhalf", t.qhalf}, {"hdeg", t.hdeg}, {"c", t.c.str()}});
  }
  return {{"terms", std::move(terms)}};
}

Coefficient coefficient_from_json(const Json& j) {
  std::vector<CoeffTerm> terms;
  for (const auto& t : j.at("terms")) {
    const Json& c = t.at("c");
    Integer value = c.is_string() ? Integer(c.get<std::string>())
                                  : Integer(c.get<long long>());
    terms.push_back({t.at("qhalf").get<std::int32_t>(), t.at("hdeg").get<std::int32_t>(),
                     std::move(value)});
  }
  return Coefficient::from_terms(std::move(terms));
}

Json to_json(const TorusElement& x) {
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms()) {
    terms.push_back({{"exp", std::vector<std::int32_t>(a.begin(), a.end())},
                     {"coeff", to_json(c)}});
  }
  return {{"rank", x.rank()}, {"terms", std::move(terms)}};
}

TorusElement torus_from_json(const Json& j, const SkewForm& form) {
  if (j.at("rank").get<int>() != form.rank()) {
    throw RankMismatch("JSON element rank does not match the form");
  }
  TorusElement x(form);
  for (const auto& t : j.at("terms")) {
    const auto exp = t.at("exp").get<std::vector<std::int32_t>>();
    x.add_term(ExponentVector(exp.begin(), exp.end()), coefficient_from_json(t.at("coeff")));
  }
  return x;
}

Json to_json(const BasisIndex& ix) {
  if (std::holds_alternative<IdentityIndex>(ix)) return {{"kind", "identity"}};
  if (const auto* im = std::get_if<ImaginaryIndex>(&ix)) {
    return {{"kind", "imaginary"}, {"n", im->n}};
  }
  const auto& mono = std::get<MonomialIndex>(ix);
  return {{"kind", "monomial"}, {"m", mono.m}, {"a1", mono.a1}, {"a2", mono.a2}};
}

BasisIndex basis_index_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "identity") return IdentityIndex{};
  if (kind == "imaginary") return make_imaginary_index(j.at("n").get<int>());
  if (kind == "monomial") {
    return make_monomial_index(j.at("m").get<int>(), j.at("a1").get<int>(),
                               j.at("a2").get<int>());
  }
  throw std::invalid_argument("unknown basis index kind '" + kind + "'");
}

Json to_json(const BasisExpansion& e) {
  Json coords = Json::array();
  for (const auto& [ix, c] : e.coords) {
    coords.push_back({{"index", to_json(ix)}, {"coeff", to_json(c)}});
  }
  return {{"coords", std::move(coords)}};
}

BasisExpansion expansion_from_json(const Json& j) {
  BasisExpansion e;
  for (const auto& entry : j.at("coords")) {
    e.add(basis_index_from_json(entry.at("index")),
          coefficient_from_json(entry.at("coeff")));
  }
  return e;
}

Json to_json(const VerificationReport& r) {
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  Json out = {{"formula", r.formula}, {"params", std::move(params)}, {"ok", r.ok}};
  if (!r.ok) {
    if (!r.error.empty()) {
      out["error"] = r.error;
    } else {
      out["diff"] = to_json(r.diff);
    }
  }
  return out;
}

Json to_json(const IntMatrix& m) { return m.to_rows(); }

IntMatrix matrix_from_json(const Json& j) {
  return IntMatrix::from_rows(j.get<std::vector<std::vector<std::int64_t>>>());
}

Json to_json(const QuantumSeed& s) {
  Json h = Json::array();
  for (const auto& hv : s.hvecs()) {
    Json row = Json::array();
    for (const auto& c : hv.coeffs()) row.push_back(to_json(c));
    h.push_back(std::move(row));
  }
  return {{"lambda", to_json(s.pair().lambda.matrix())},
          {"b", to_json(s.pair().b.matrix())},
          {"d", s.dvec()},
          {"h", std::move(h)}};
}

QuantumSeed seed_from_json(const Json& j) {
  SkewForm lambda(matrix_from_json(j.at("lambda")));
  ExchangeMatrix b(matrix_from_json(j.at("b")));
  CompatiblePair pair = check_compatible(lambda, b);
  auto d = j.at("d").get<std::vector<int>>();
  std::vector<HVector> hvecs;
  for (const auto& row : j.at("h")) {
    std::vector<Coefficient> coeffs;
    for (const auto& c : row) coeffs.push_back(coefficient_from_json(c));
    hvecs.emplace_back(std::move(coeffs));
  }
  return QuantumSeed(std::move(pair), std::move(d), std::move(hvecs));
}

}  // namespace gqca
