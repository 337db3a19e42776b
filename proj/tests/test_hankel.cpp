#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "preserver/classify.hpp"
#include "preserver/formula.hpp"
#include "preserver/hankel.hpp"
#include "preserver/rng.hpp"

using namespace preserver;

namespace {

RatPoly parse(const std::string& s) { return Formula::parse(s).as_poly(); }

// independent determinant oracle: cofactor expansion
Rat det_cofactor(const std::vector<std::vector<Rat>>& m) {
    size_t n = m.size();
    if (n == 0)
        return Rat(1);
    if (n == 1)
        return m[0][0];
    Rat s(0);
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Rat>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Rat> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        s += Rat(sign) * m[0][j] * det_cofactor(minor);
        sign = -sign;
    }
    return s;
}

Rat leading_minor_oracle(const std::vector<std::vector<Rat>>& m, size_t k) {
    std::vector<std::vector<Rat>> sub;
    for (size_t i = 0; i <= k; ++i)
        sub.emplace_back(m[i].begin(), m[i].begin() + static_cast<long>(k) + 1);
    return det_cofactor(sub);
}

// moment sequence of a finite atomic measure with the given positive weights
// and distinct nodes; with more nodes than the matrix size this is positive
// definite
std::vector<Rat> moment_sequence(DetRng& rng, int n) {
    int nodes = n / 2 + 1;
    std::vector<Rat> ts, ws;
    for (int j = 0; j < nodes; ++j) {
        Rat t;
        bool fresh = false;
        while (!fresh) {
            t = rng.rat(6, 3);
            fresh = true;
            for (const auto& prev : ts)
                if (prev == t)
                    fresh = false;
        }
        ts.push_back(t);
        ws.push_back(rng.positive_rat(5, 3));
    }
    std::vector<Rat> s;
    for (int m = 0; m <= n; ++m) {
        Rat sum(0);
        for (int j = 0; j < nodes; ++j)
            sum += ws[static_cast<size_t>(j)] * ts[static_cast<size_t>(j)].pow(static_cast<unsigned>(m));
        s.push_back(sum);
    }
    return s;
}

}  // namespace

TEST_CASE("diag_hankel on the positivity-preserving sequence") {
    DiagSequence t({Rat(1, 29), Rat(1, 68), Rat(1, 123), Rat(1, 200), Rat(1, 305)});
    HankelReport rep = diag_hankel(t);
    CHECK(rep.size == 3);
    CHECK(rep.verdict == Definiteness::positive_definite);
    REQUIRE(rep.leading_minors.size() == 3);
    for (size_t k = 0; k < 3; ++k)
        CHECK(rep.leading_minors[k] == leading_minor_oracle(rep.entries, k));
    CHECK(rep.leading_minors[1] == Rat::from_string("1057/16493808"));
    CHECK(rep.leading_minors[2] == Rat::from_string("238253857/38054060237880000"));
}

TEST_CASE("diag_hankel degenerate and indefinite examples") {
    HankelReport deg = diag_hankel(DiagSequence({Rat(1), Rat(0), Rat(0)}));
    CHECK(deg.leading_minors == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(deg.verdict == Definiteness::positive_semidefinite_degenerate);

    HankelReport ind = diag_hankel(DiagSequence({Rat(1), Rat(0), Rat(-1)}));
    CHECK(ind.leading_minors[1] == Rat(-1));
    CHECK(ind.verdict == Definiteness::indefinite);
}

TEST_CASE("odd truncation reduces to even") {
    HankelReport rep = diag_hankel(DiagSequence({Rat(1), Rat(0), Rat(0), Rat(-5)}));
    CHECK(rep.size == 2);  // lambda_3 ignored
    CHECK(rep.verdict == Definiteness::positive_semidefinite_degenerate);
}

TEST_CASE("const_coeff_hankel examples") {
    ConstCoeffOperator ones(std::vector<Rat>(5, Rat(1)));
    HankelReport rep = const_coeff_hankel(ones, 4);
    CHECK(rep.leading_minors == std::vector<Rat>{Rat(1), Rat(1), Rat(4)});
    CHECK(rep.verdict == Definiteness::positive_definite);

    ConstCoeffOperator identity({Rat(1)});
    HankelReport idrep = const_coeff_hankel(identity, 2);
    CHECK(idrep.entries == std::vector<std::vector<Rat>>{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}});
    CHECK(idrep.verdict == Definiteness::positive_semidefinite_degenerate);

    ConstCoeffOperator mixed({Rat(1), Rat(0), Rat(-1)});
    HankelReport mrep = const_coeff_hankel(mixed, 2);
    CHECK(mrep.entries[1][1] == Rat(-2));
    CHECK(mrep.verdict == Definiteness::indefinite);

    CHECK_THROWS_AS(const_coeff_hankel(ones, 3), std::domain_error);
}

TEST_CASE("factorial-square identity for the all-ones operator") {
    ConstCoeffOperator ones(std::vector<Rat>(13, Rat(1)));
    HankelReport rep = const_coeff_hankel(ones, 12);
    Rat expected(1);
    for (int l = 0; l <= 6; ++l) {
        if (l > 0) {
            Rat f = factorial(static_cast<unsigned>(l));
            expected *= f * f;
        }
        CHECK(rep.leading_minors[static_cast<size_t>(l)] == expected);
    }
}

TEST_CASE("Hankel structure: entries depend only on i+j") {
    DetRng rng(89);
    std::vector<Rat> lam;
    for (int i = 0; i <= 8; ++i)
        lam.push_back(rng.rat(9, 4));
    HankelReport rep = diag_hankel(DiagSequence(lam));
    int n = rep.size;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2)
                    if (i + j == i2 + j2)
                        CHECK(rep.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                              rep.entries[static_cast<size_t>(i2)][static_cast<size_t>(j2)]);
}

TEST_CASE("bareiss minors agree with cofactor expansion on random sequences") {
    DetRng rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> lam;
        for (int i = 0; i <= 6; ++i)
            lam.push_back(rng.rat(7, 5));
        HankelReport rep = diag_hankel(DiagSequence(lam));
        for (size_t k = 0; k < rep.leading_minors.size(); ++k)
            CHECK(rep.leading_minors[k] == leading_minor_oracle(rep.entries, k));
    }
}

TEST_CASE("necessary_conditions") {
    DiagSequence good({Rat(1, 29), Rat(1, 68), Rat(1, 123), Rat(1, 200), Rat(1, 305)});
    CHECK(necessary_conditions(good).empty());

    auto v1 = necessary_conditions(DiagSequence({Rat(1), Rat(2), Rat(1)}));
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].kind == NecessaryViolation::cauchy_schwarz);
    CHECK(v1[0].index == 1);

    auto v2 = necessary_conditions(DiagSequence({Rat(1), Rat(0), Rat(-1)}));
    REQUIRE(v2.size() >= 1);
    CHECK(v2[0].kind == NecessaryViolation::negative_even_lambda);
    CHECK(v2[0].index == 2);

    // lambda_0 < 0 normalizes by negation first
    auto v3 = necessary_conditions(DiagSequence({Rat(-1), Rat(-2), Rat(-1)}));
    REQUIRE(v3.size() == 1);
    CHECK(v3[0].kind == NecessaryViolation::cauchy_schwarz);
}

TEST_CASE("eval_preserver_form") {
    ConstCoeffOperator u({Rat(1), Rat(1)});
    CHECK(eval_preserver_form(u, parse("x+5")) == Rat(6));
    ConstCoeffOperator proj({Rat(1), Rat(0)});
    CHECK(eval_preserver_form(proj, parse("9x^3-4x+7")) == Rat(7));

    DiagSequence t({Rat(1), Rat(3), Rat(7)});
    RatPoly p = parse("x^2+2x+1");
    CHECK(eval_preserver_form(t, p) == Rat(14));
    CHECK(eval_preserver_form(t, p) == t.apply(p).eval(Rat(1)));
    CHECK_THROWS_AS(eval_preserver_form(t, parse("x^3")), std::domain_error);
}

TEST_CASE("preserver form equals the operator action route") {
    DetRng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> alpha, lam;
        for (int i = 0; i <= 4; ++i) {
            alpha.push_back(rng.rat(5, 3));
            lam.push_back(rng.rat(5, 3));
        }
        RatPoly p = rng.poly(4, 6, 3);
        ConstCoeffOperator u(alpha);
        CHECK(eval_preserver_form(u, p) == u.apply(p).eval(Rat(0)));
        DiagSequence t(lam);
        CHECK(eval_preserver_form(t, p) == t.apply(p).eval(Rat(1)));
    }
}

TEST_CASE("moment sequences are positive definite and pass necessary conditions") {
    DetRng rng(103);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 * static_cast<int>(rng.int_in(1, 4));
        DiagSequence t(moment_sequence(rng, n));
        HankelReport rep = diag_hankel(t);
        CHECK(rep.verdict == Definiteness::positive_definite);
        CHECK(necessary_conditions(t).empty());
        CHECK_FALSE(violating_positive_poly(t).has_value());
    }
}

TEST_CASE("negative_direction finds strict directions") {
    DetRng rng(107);
    int found = 0;
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = static_cast<size_t>(rng.int_in(2, 4));
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j)
                m[i][j] = m[j][i] = rng.rat(5, 2);
        auto dir = negative_direction(m);
        if (!dir)
            continue;
        ++found;
        Rat q(0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                q += (*dir)[i] * m[i][j] * (*dir)[j];
        CHECK(q.sign() < 0);
    }
    CHECK(found > 10);  // random symmetric matrices are usually indefinite
}

TEST_CASE("negative_direction is consistent with the PSD verdict") {
    DetRng rng(109);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Rat> lam;
        for (int i = 0; i <= 4; ++i)
            lam.push_back(rng.rat(4, 2));
        HankelReport rep = diag_hankel(DiagSequence(lam));
        bool has_direction = negative_direction(rep.entries).has_value();
        CHECK(has_direction == (rep.verdict == Definiteness::indefinite));
    }
}

TEST_CASE("PD constant-coefficient verdicts keep the preserver form positive") {
    DetRng rng(211);
    int pd_seen = 0;
    for (int trial = 0; trial < 12; ++trial) {
        int k = 2 * static_cast<int>(rng.int_in(1, 3));
        // alpha_m = s_m / m! from a finite atomic moment sequence gives a
        // positive-definite Hankel matrix
        std::vector<Rat> s = moment_sequence(rng, k);
        std::vector<Rat> alpha;
        for (int m = 0; m <= k; ++m)
            alpha.push_back(s[static_cast<size_t>(m)] /
                            factorial(static_cast<unsigned>(m)));
        ConstCoeffOperator u(alpha);
        if (const_coeff_hankel(u, k).verdict != Definiteness::positive_definite)
            continue;
        ++pd_seen;
        for (int inner = 0; inner < 10; ++inner) {
            RatPoly p = rng.positive_poly(k);
            CHECK(eval_preserver_form(u, p).sign() > 0);
        }
    }
    CHECK(pd_seen == 12);
}

TEST_CASE("violating_positive_poly on the crafted indefinite sequence") {
    DiagSequence t({Rat(1), Rat(2, 1), Rat(1)});
    auto w = violating_positive_poly(t);
    REQUIRE(w.has_value());
    const auto& [p, form] = *w;
    CHECK(classify_verdicts(p).positive == Verdict::yes);
    CHECK(form.sign() < 0);
    CHECK(form == eval_preserver_form(t, p));
    CHECK(classify_verdicts(t.apply(p)).positive != Verdict::yes);
}
