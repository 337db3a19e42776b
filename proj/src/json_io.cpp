#include "preserver/json_io.hpp"

#include "preserver/formula.hpp"

namespace preserver {

Rat rat_from_json(const json& j) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string())
        return Rat::from_string(j.get<std::string>());
    throw std::invalid_argument("expected an integer or \"num/den\" string");
}

json rat_to_json(const Rat& r) { return r.str(); }

RatPoly poly_from_json(const json& j) {
    if (j.is_string())
        return Formula::parse(j.get<std::string>()).as_poly();
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("polynomial: expected {\"coeffs\": [...]} or shorthand string");
    std::vector<Rat> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& c : j["coeffs"])
        coeffs.push_back(rat_from_json(c));
    return RatPoly(std::move(coeffs));
}

json poly_to_json(const RatPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(rat_to_json(c));
    return json{{"coeffs", coeffs}};
}

RatPoly poly_from_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (!j.is_discarded() && (j.is_object() || j.is_string()))
        return poly_from_json(j);
    return Formula::parse(text).as_poly();
}

OperatorValue operator_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("operator: expected an object with a \"type\" field");
    std::string type = j["type"].get<std::string>();
    if (type == "differential") {
        if (!j.contains("coeffs") || !j["coeffs"].is_array())
            throw std::invalid_argument("differential operator: missing \"coeffs\" array");
        std::vector<RatPoly> q;
        q.reserve(j["coeffs"].size());
        for (const auto& c : j["coeffs"])
            q.push_back(poly_from_json(c));
        return DiffOperator(std::move(q));
    }
    if (type == "diagonal") {
        if (!j.contains("lambdas") || !j["lambdas"].is_array())
            throw std::invalid_argument("diagonal operator: missing \"lambdas\" array");
        std::vector<Rat> l;
        l.reserve(j["lambdas"].size());
        for (const auto& c : j["lambdas"])
            l.push_back(rat_from_json(c));
        return DiagSequence(std::move(l));
    }
    if (type == "generator") {
        if (j.value("kind", "rational_formula") != "rational_formula")
            throw std::invalid_argument("generator: unsupported kind");
        if (!j.contains("formula") || !j.contains("truncate"))
            throw std::invalid_argument("generator: needs \"formula\" and \"truncate\"");
        Formula f = Formula::parse(j["formula"].get<std::string>());
        int n = j["truncate"].get<int>();
        std::string as = j.value("as", "diagonal");
        if (as == "diagonal")
            return truncate_to_diag(f, n);
        if (as == "constant")
            return truncate_to_const_coeff(f, n);
        throw std::invalid_argument("generator: \"as\" must be \"diagonal\" or \"constant\"");
    }
    throw std::invalid_argument("operator: unknown type '" + type + "'");
}

OperatorValue operator_from_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("operator: not valid JSON");
    return operator_from_json(j);
}

json operator_to_json(const OperatorValue& op) {
    if (const auto* d = std::get_if<DiffOperator>(&op)) {
        json coeffs = json::array();
        for (const auto& q : d->q())
            coeffs.push_back(poly_to_json(q));
        return json{{"type", "differential"}, {"coeffs", coeffs}};
    }
    if (const auto* t = std::get_if<DiagSequence>(&op)) {
        json l = json::array();
        for (const auto& x : t->lambdas())
            l.push_back(rat_to_json(x));
        return json{{"type", "diagonal"}, {"lambdas", l}};
    }
    const auto& u = std::get<ConstCoeffOperator>(op);
    json coeffs = json::array();
    for (const auto& a : u.alpha())
        coeffs.push_back(poly_to_json(RatPoly::constant(a)));
    return json{{"type", "differential"}, {"coeffs", coeffs}};
}

std::optional<ConstCoeffOperator> as_const_coeff(const DiffOperator& u) {
    std::vector<Rat> alpha;
    alpha.reserve(u.q().size());
    for (const auto& qi : u.q()) {
        if (qi.degree() > 0)
            return std::nullopt;
        alpha.push_back(qi.is_zero() ? Rat(0) : qi.lc());
    }
    return ConstCoeffOperator(std::move(alpha));
}

json polyclass_to_json(const PolyClass& c) {
    json out{{"hyperbolic", to_string(c.hyperbolic)},
             {"elliptic", to_string(c.elliptic)},
             {"positive", to_string(c.positive)},
             {"nonnegative", to_string(c.nonnegative)}};
    out["sos_witness"] = c.sos_witness ? sos_to_json(*c.sos_witness) : json(nullptr);
    return out;
}

json sos_to_json(const SosWitness& w) {
    return json{{"p1", poly_to_json(w.p1)},
                {"p2", poly_to_json(w.p2)},
                {"residual_bound", rat_to_json(w.residual_bound)},
                {"exact", w.exact}};
}

json hankel_to_json(const HankelReport& r) {
    json entries = json::array();
    for (const auto& row : r.entries) {
        json jr = json::array();
        for (const auto& e : row)
            jr.push_back(rat_to_json(e));
        entries.push_back(jr);
    }
    json minors = json::array();
    for (const auto& m : r.leading_minors)
        minors.push_back(rat_to_json(m));
    return json{{"size", r.size},
                {"entries", entries},
                {"leading_minors", minors},
                {"verdict", to_string(r.verdict)}};
}

json violations_to_json(const std::vector<NecessaryViolation>& v) {
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(json{{"kind", x.kind == NecessaryViolation::negative_even_lambda
                                        ? "negative_even_lambda"
                                        : "cauchy_schwarz"},
                           {"index", x.index},
                           {"detail", x.detail}});
    }
    return out;
}

json certificate_to_json(const WitnessCertificate& c) {
    return json{{"construction", to_string(c.construction)},
                {"p", poly_to_json(c.p)},
                {"p_text", c.p.str()},
                {"x0", rat_to_json(c.x0)},
                {"value", rat_to_json(c.value)},
                {"degree_used", c.degree_used},
                {"nonneg_proof",
                 json{{"verdict", to_string(c.nonneg_proof.verdict)},
                      {"degree", c.nonneg_proof.degree},
                      {"leading_coeff", rat_to_json(c.nonneg_proof.leading_coeff)},
                      {"odd_multiplicity_real_roots", c.nonneg_proof.odd_multiplicity_real_roots}}}};
}

}  // namespace preserver
