#pragma once

#include <nlohmann/json.hpp>

#include "gqca/basis.hpp"
#include "gqca/coefficient.hpp"
#include "gqca/kronecker.hpp"
#include "gqca/seed.hpp"
#include "gqca/torus.hpp"

namespace gqca {

using Json = nlohmann::ordered_json;

// {"terms":[{"qhalf":r,"hdeg":d,"c":"<decimal>"},...]} sorted by (r, d).
Json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const Json& j);

// {"rank":m,"terms":[{"exp":[...],"coeff":<coefficient>},...]} sorted by exp.
Json to_json(const TorusElement& x);
TorusElement torus_from_json(const Json& j, const SkewForm& form);

// {"kind":"monomial","m":..,"a1":..,"a2":..} | {"kind":"imaginary","n":..}
// | {"kind":"identity"}
Json to_json(const BasisIndex& ix);
BasisIndex basis_index_from_json(const Json& j);

// {"coords":[{"index":<index>,"coeff":<coefficient>},...]}
Json to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const Json& j);

// {"formula":..,"params":{..},"ok":bool[,"diff":<torus>][,"error":".."]}
Json to_json(const VerificationReport& r);

// {"lambda":[[..]],"b":[[..]],"d":[..],"h":[[<coefficient>,..],..]}
Json to_json(const QuantumSeed& s);
/// Validates compatibility, d-vector divisibility and h-vectors.
QuantumSeed seed_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

}  // namespace gqca
