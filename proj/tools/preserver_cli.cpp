#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "preserver/classify.hpp"
#include "preserver/hankel.hpp"
#include "preserver/json_io.hpp"
#include "preserver/repro.hpp"
#include "preserver/roots.hpp"
#include "preserver/witness.hpp"

namespace {

using namespace preserver;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitRetryExhausted = 3;

std::string read_arg(const std::string& arg) {
    if (arg != "-")
        return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

struct CheckOutput {
    json report;
    json witness = nullptr;
    json violations = json::array();
};

json check_diag(const DiagSequence& t, int degree_override) {
    DiagSequence seq = t;
    if (degree_override >= 0) {
        if (degree_override > t.truncation_degree())
            throw std::invalid_argument("--degree exceeds the sequence truncation");
        std::vector<Rat> l(t.lambdas().begin(),
                           t.lambdas().begin() + degree_override + 1);
        seq = DiagSequence(std::move(l));
    }
    HankelReport rep = diag_hankel(seq);
    json out{{"operator", "diagonal"}, {"report", hankel_to_json(rep)}};
    out["necessary_violations"] = violations_to_json(necessary_conditions(seq));
    if (rep.verdict == Definiteness::indefinite) {
        auto w = violating_positive_poly(seq);
        out["witness"] = w ? json{{"p", poly_to_json(w->first)},
                                  {"p_text", w->first.str()},
                                  {"form_value", rat_to_json(w->second)}}
                           : json(nullptr);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json check_const_coeff(const ConstCoeffOperator& u, int degree_override) {
    int k = degree_override;
    if (k < 0) {
        k = static_cast<int>(u.alpha().size()) - 1;
        if (k % 2 == 1)
            ++k;  // smallest even degree covering the list
        if (k < 0)
            k = 0;
    }
    HankelReport rep = const_coeff_hankel(u, k);
    json out{{"operator", "constant_coefficient"}, {"degree", k},
             {"report", hankel_to_json(rep)}};
    if (rep.verdict == Definiteness::indefinite) {
        auto w = violating_positive_poly(u, k);
        out["witness"] = w ? json{{"p", poly_to_json(w->first)},
                                  {"p_text", w->first.str()},
                                  {"form_value", rat_to_json(w->second)}}
                           : json(nullptr);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic lab for positivity-preserving linear operators on polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty = false;
    bool compact = false;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_flag("--json", compact, "compact JSON output (default)");
    uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized constructions (default 0)");

    std::string poly_arg, op_arg, case_id, construction = "auto";
    int degree = -1;
    bool all_cases = false;

    auto* cmd_classify = app.add_subcommand("classify", "class membership of a polynomial");
    cmd_classify->add_option("poly", poly_arg, "polynomial (JSON or shorthand, '-' for stdin)")
        ->required();

    auto* cmd_apply = app.add_subcommand("apply", "apply an operator to a polynomial");
    cmd_apply->add_option("operator", op_arg, "operator JSON ('-' for stdin)")->required();
    cmd_apply->add_option("poly", poly_arg, "polynomial (JSON or shorthand)")->required();

    auto* cmd_check =
        app.add_subcommand("check", "Hankel preserver check for diagonal or constant-coefficient operators");
    cmd_check->add_option("operator", op_arg, "operator JSON ('-' for stdin)")->required();
    cmd_check->add_option("--degree", degree, "degree bound (even)");

    auto* cmd_hankel = app.add_subcommand("hankel", "Hankel matrix, minors and verdict");
    cmd_hankel->add_option("operator", op_arg, "operator JSON ('-' for stdin)")->required();
    cmd_hankel->add_option("--degree", degree, "degree bound (even)");

    auto* cmd_witness = app.add_subcommand("witness", "non-preservation certificate for a differential operator");
    cmd_witness->add_option("operator", op_arg, "operator JSON ('-' for stdin)")->required();
    cmd_witness->add_option("--construction", construction, "auto|t1|t2|t3")
        ->check(CLI::IsMember({"auto", "t1", "t2", "t3"}));

    auto* cmd_sos = app.add_subcommand("sos", "sum-of-two-squares decomposition");
    cmd_sos->add_option("poly", poly_arg, "polynomial (JSON or shorthand, '-' for stdin)")
        ->required();

    auto* cmd_repro = app.add_subcommand("repro", "run the built-in regression corpus");
    cmd_repro->add_option("case", case_id, "case id");
    cmd_repro->add_flag("--all", all_cases, "run every case");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_classify) {
            RatPoly p = poly_from_text(read_arg(poly_arg));
            emit(polyclass_to_json(classify(p)), pretty);
            return kExitOk;
        }
        if (*cmd_apply) {
            OperatorValue op = operator_from_text(read_arg(op_arg));
            RatPoly p = poly_from_text(read_arg(poly_arg));
            RatPoly image;
            if (const auto* d = std::get_if<DiffOperator>(&op))
                image = d->apply(p);
            else if (const auto* t = std::get_if<DiagSequence>(&op))
                image = t->apply(p);
            else
                image = std::get<ConstCoeffOperator>(op).apply(p);
            json out = poly_to_json(image);
            out["text"] = image.str();
            emit(out, pretty);
            return kExitOk;
        }
        if (*cmd_check || *cmd_hankel) {
            OperatorValue op = operator_from_text(read_arg(op_arg));
            json out;
            if (const auto* t = std::get_if<DiagSequence>(&op)) {
                out = check_diag(*t, degree);
            } else if (const auto* u = std::get_if<ConstCoeffOperator>(&op)) {
                out = check_const_coeff(*u, degree);
            } else {
                const auto& d = std::get<DiffOperator>(op);
                auto cc = as_const_coeff(d);
                if (!cc) {
                    std::cerr << "check: operator has non-constant polynomial coefficients; no "
                                 "finite-order differential operator preserves positivity, "
                                 "non-negativity or ellipticity -- use the `witness` subcommand "
                                 "for a certificate\n";
                    return kExitInputError;
                }
                out = check_const_coeff(*cc, degree);
            }
            if (*cmd_hankel)
                out = out["report"];
            emit(out, pretty);
            return kExitOk;
        }
        if (*cmd_witness) {
            OperatorValue op = operator_from_text(read_arg(op_arg));
            const DiffOperator* d = std::get_if<DiffOperator>(&op);
            DiffOperator materialized;
            if (!d) {
                if (const auto* cc = std::get_if<ConstCoeffOperator>(&op)) {
                    materialized = cc->as_diff();
                    d = &materialized;
                } else {
                    std::cerr << "witness: expected a differential operator (diagonal operators "
                                 "are handled by `check`)\n";
                    return kExitInputError;
                }
            }
            WitnessCertificate cert;
            if (construction == "auto")
                cert = witness_auto(*d, seed);
            else if (construction == "t1")
                cert = witness_t1(*d, seed);
            else if (construction == "t2")
                cert = witness_t2(*d);
            else
                cert = witness_t3(*d);
            emit(certificate_to_json(cert), pretty);
            return kExitOk;
        }
        if (*cmd_sos) {
            RatPoly p = poly_from_text(read_arg(poly_arg));
            emit(sos_to_json(sos_decompose(p)), pretty);
            return kExitOk;
        }
        if (*cmd_repro) {
            std::vector<ReproResult> results;
            if (all_cases || case_id.empty())
                results = run_all_repro_cases(seed);
            else
                results.push_back(run_repro_case(case_id, seed));
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "\n";
                for (const auto& line : r.lines)
                    std::cout << line << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? kExitOk : kExitCheckFailed;
        }
    } catch (const RetryExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRetryExhausted;
    } catch (const RootCertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRetryExhausted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
