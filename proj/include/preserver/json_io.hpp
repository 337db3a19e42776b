#ifndef PRESERVER_JSON_IO_HPP
#define PRESERVER_JSON_IO_HPP

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "preserver/classify.hpp"
#include "preserver/hankel.hpp"
#include "preserver/operators.hpp"
#include "preserver/poly.hpp"
#include "preserver/witness.hpp"

namespace preserver {

using json = nlohmann::json;

/// "n" / "n/d" strings, with plain JSON integers accepted as shorthand.
Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

/// {"coeffs": ["num/den", ...]} ascending degree; a JSON string is parsed as
/// polynomial shorthand ("x^2+1", "305x^4+800x^3+...").
RatPoly poly_from_json(const json& j);
json poly_to_json(const RatPoly& p);

/// Parses either a JSON document or, failing that, shorthand text.
RatPoly poly_from_text(const std::string& text);

using OperatorValue = std::variant<DiffOperator, DiagSequence, ConstCoeffOperator>;

/// {"type":"differential","coeffs":[poly,...]} |
/// {"type":"diagonal","lambdas":["num/den",...]} |
/// {"type":"generator","kind":"rational_formula","formula":...,"truncate":n,
///  "as":"diagonal"(default)|"constant"}
OperatorValue operator_from_json(const json& j);
OperatorValue operator_from_text(const std::string& text);
json operator_to_json(const OperatorValue& op);

/// The constant-coefficient view of a differential operator whose
/// coefficients are all constants.
std::optional<ConstCoeffOperator> as_const_coeff(const DiffOperator& u);

json polyclass_to_json(const PolyClass& c);
json sos_to_json(const SosWitness& w);
json hankel_to_json(const HankelReport& r);
json violations_to_json(const std::vector<NecessaryViolation>& v);
json certificate_to_json(const WitnessCertificate& c);

}  // namespace preserver

#endif
