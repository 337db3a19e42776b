#include "preserver/repro.hpp"

#include <stdexcept>

#include "preserver/classify.hpp"
#include "preserver/formula.hpp"
#include "preserver/hankel.hpp"
#include "preserver/operators.hpp"
#include "preserver/rng.hpp"
#include "preserver/roots.hpp"
#include "preserver/witness.hpp"

namespace preserver {

namespace {

struct Checker {
    ReproResult res;

    explicit Checker(std::string id) { res.id = std::move(id); res.pass = true; }

    void check(bool ok, const std::string& what) {
        res.lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
        if (!ok)
            res.pass = false;
    }
};

const Rat kLam29[] = {Rat(1, 29), Rat(1, 68), Rat(1, 123), Rat(1, 200), Rat(1, 305)};

ReproResult case_count_i() {
    Checker c("count-i");
    DiagSequence t(std::vector<Rat>(std::begin(kLam29), std::end(kLam29)));
    HankelReport rep = diag_hankel(t);
    c.check(rep.verdict == Definiteness::positive_definite,
            "Hankel verdict positive_definite, got " + to_string(rep.verdict));
    // minors cross-checked by cofactor expansion
    const char* expected[] = {"1/29", "1057/16493808", "238253857/38054060237880000"};
    for (int i = 0; i < 3; ++i)
        c.check(rep.leading_minors[static_cast<size_t>(i)] == Rat::from_string(expected[i]),
                "minor " + std::to_string(i) + " = " + expected[i] + ", got " +
                    rep.leading_minors[static_cast<size_t>(i)].str());
    Formula gen = Formula::parse("1/(i^3+5i^2+33i+29)");
    std::vector<Rat> vals = truncate_generator(gen, 4);
    bool all = true;
    for (int i = 0; i <= 4; ++i)
        all = all && vals[static_cast<size_t>(i)] == kLam29[i];
    c.check(all, "generator 1/(i^3+5i^2+33i+29) reproduces all five values");
    return c.res;
}

ReproResult case_count_ii() {
    Checker c("count-ii");
    DiagSequence t(std::vector<Rat>(std::begin(kLam29), std::end(kLam29)));
    DiagSequence inv = t.inverse();
    c.check(inv.lambdas() ==
                std::vector<Rat>{Rat(29), Rat(68), Rat(123), Rat(200), Rat(305)},
            "inverse sequence is (29, 68, 123, 200, 305)");
    RatPoly p = Formula::parse("(x+1)^4").as_poly();
    RatPoly image = inv.apply(p);
    RatPoly expected = Formula::parse("305x^4+800x^3+738x^2+272x+29").as_poly();
    c.check(image == expected, "image of (x+1)^4 is 305x^4+800x^3+738x^2+272x+29, got " +
                                   image.str());
    c.check(count_real_roots(image, false) == 2,
            "image has exactly 2 real roots, got " + std::to_string(count_real_roots(image)));
    c.check(count_real_roots(image, true) == 2, "image real roots are simple");
    return c.res;
}

ReproResult case_count_iii() {
    Checker c("count-iii");
    Formula gen = Formula::parse("1+i+i^2");
    // a fixed hyperbolic suite, instance-level check that truncations of the
    // sequence preserve hyperbolicity
    std::vector<RatPoly> suite = {
        Formula::parse("x").as_poly(),
        Formula::parse("x^2-1").as_poly(),
        Formula::parse("x^3-x").as_poly(),
        Formula::parse("(x-1)(x-2)(x+3)").as_poly(),
        Formula::parse("x(x+1)(x-2)(x+5)").as_poly(),
        Formula::parse("(x+2)^2(x-3)").as_poly(),
    };
    for (const auto& p : suite) {
        DiagSequence t = truncate_to_diag(gen, p.degree());
        bool in_ok = classify_verdicts(p).hyperbolic == Verdict::yes;
        bool out_ok = classify_verdicts(t.apply(p)).hyperbolic == Verdict::yes;
        c.check(in_ok && out_ok, "hyperbolicity preserved on " + p.str());
    }

    // The inverse sequence is not a positivity preserver; its truncations stay
    // positive definite through degree 4 and first fail at degree 6, where a
    // violating positive polynomial exists.
    Formula inv_gen = Formula::parse("1/(1+i+i^2)");
    c.check(diag_hankel(truncate_to_diag(inv_gen, 4)).verdict == Definiteness::positive_definite,
            "degree-4 truncation of the inverse sequence is still positive definite");
    bool exhibited = false;
    for (int n = 4; n <= 16 && !exhibited; n += 2) {
        DiagSequence t = truncate_to_diag(inv_gen, n);
        if (diag_hankel(t).verdict == Definiteness::positive_definite)
            continue;
        auto witness = violating_positive_poly(t);
        c.check(witness.has_value(),
                "violating direction found at truncation degree " + std::to_string(n));
        if (!witness)
            break;
        const auto& [p, form] = *witness;
        bool positive = classify_verdicts(p).positive == Verdict::yes;
        bool image_bad = classify_verdicts(t.apply(p)).positive != Verdict::yes;
        c.check(positive, "witness " + p.str() + " is positive");
        c.check(form.sign() <= 0, "preserver form value " + form.str() + " is non-positive");
        c.check(image_bad, "image of the witness is not positive");
        exhibited = positive && form.sign() <= 0 && image_bad;
    }
    c.check(exhibited, "positive polynomial with non-positive image exhibited");
    return c.res;
}

ReproResult case_ehr() {
    Checker c("ehr");
    ConstCoeffOperator ones(std::vector<Rat>(13, Rat(1)));
    HankelReport rep = const_coeff_hankel(ones, 12);
    Rat expected(1);
    for (int l = 0; l <= 6; ++l) {
        if (l > 0) {
            Rat f = factorial(static_cast<unsigned>(l));
            expected *= f * f;
        }
        c.check(rep.leading_minors[static_cast<size_t>(l)] == expected,
                "Delta_" + std::to_string(l) + " = " + expected.str() + ", got " +
                    rep.leading_minors[static_cast<size_t>(l)].str());
    }
    return c.res;
}

ReproResult case_ex_exists(uint64_t seed) {
    Checker c("ex-exists");
    DetRng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int k : {2, 4}) {
        Rat a = Rat(rng.int_in(0, 5), rng.int_in(1, 4));
        Rat b = Rat(rng.int_in(0, 5), rng.int_in(1, 4));
        std::vector<RatPoly> q(static_cast<size_t>(k) + 1);
        q[0] = RatPoly::constant(Rat(1));
        q[static_cast<size_t>(k)] =
            RatPoly::monomial(k, a) + RatPoly::constant(b);  // a x^k + b
        DiffOperator u(std::move(q));
        int failures = 0;
        for (int trial = 0; trial < 100; ++trial) {
            RatPoly p = rng.positive_poly(k);
            if (classify_verdicts(u.apply(p)).positive != Verdict::yes)
                ++failures;
        }
        c.check(failures == 0, "k=" + std::to_string(k) + ", a=" + a.str() + ", b=" + b.str() +
                                   ": 100 positive polynomials map to positive (failures: " +
                                   std::to_string(failures) + ")");
    }
    return c.res;
}

}  // namespace

const std::vector<std::string>& repro_case_ids() {
    static const std::vector<std::string> ids = {"count-i", "count-ii", "count-iii", "ehr",
                                                 "ex-exists"};
    return ids;
}

ReproResult run_repro_case(const std::string& id, uint64_t seed) {
    if (id == "count-i")
        return case_count_i();
    if (id == "count-ii")
        return case_count_ii();
    if (id == "count-iii")
        return case_count_iii();
    if (id == "ehr")
        return case_ehr();
    if (id == "ex-exists")
        return case_ex_exists(seed);
    throw std::invalid_argument("unknown repro case '" + id + "'");
}

std::vector<ReproResult> run_all_repro_cases(uint64_t seed) {
    std::vector<ReproResult> out;
    for (const auto& id : repro_case_ids())
        out.push_back(run_repro_case(id, seed));
    return out;
}

}  // namespace preserver
