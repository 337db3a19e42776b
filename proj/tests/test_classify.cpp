#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "preserver/classify.hpp"
#include "preserver/formula.hpp"
#include "preserver/rng.hpp"
#include "preserver/roots.hpp"

using namespace preserver;

namespace {

RatPoly parse(const std::string& s) { return Formula::parse(s).as_poly(); }

// construction with classification readable off the factors
struct KnownPoly {
    RatPoly p;
    bool hyperbolic, elliptic, positive, nonnegative;
};

KnownPoly random_known(DetRng& rng) {
    Rat c = rng.nonzero_rat(4, 3);
    RatPoly p = RatPoly::constant(c);
    int real_mult = 0, odd_real = 0, quad_mult = 0;
    std::vector<Rat> lin_roots;
    int n_lin = static_cast<int>(rng.int_in(0, 2));
    for (int i = 0; i < n_lin; ++i)
        lin_roots.push_back(Rat(rng.int_in(-3, 3)));
    std::sort(lin_roots.begin(), lin_roots.end(),
              [](const Rat& a, const Rat& b) { return a < b; });
    lin_roots.erase(std::unique(lin_roots.begin(), lin_roots.end()), lin_roots.end());
    for (const auto& r : lin_roots) {
        int e = static_cast<int>(rng.int_in(1, 3));
        p *= RatPoly{-r, Rat(1)}.pow(static_cast<unsigned>(e));
        real_mult += e;
        if (e % 2 == 1)
            ++odd_real;
    }
    int n_quad = static_cast<int>(rng.int_in(0, 2));
    for (int i = 0; i < n_quad; ++i) {
        Rat a = rng.rat(2, 2);
        Rat b = rng.positive_rat(2, 2);
        int f = static_cast<int>(rng.int_in(1, 2));
        p *= RatPoly{a * a + b * b, Rat(-2) * a, Rat(1)}.pow(static_cast<unsigned>(f));
        quad_mult += 2 * f;
    }
    KnownPoly k;
    k.p = p;
    int deg = real_mult + quad_mult;
    k.hyperbolic = deg >= 1 && quad_mult == 0;
    k.elliptic = real_mult == 0;
    k.nonnegative = odd_real == 0 && p.lc().sign() > 0 && deg % 2 == 0;
    k.positive = k.nonnegative && k.elliptic;
    return k;
}

}  // namespace

TEST_CASE("classify on the named examples") {
    PolyClass a = classify_verdicts(parse("x^2+1"));
    CHECK(a.positive == Verdict::yes);
    CHECK(a.elliptic == Verdict::yes);
    CHECK(a.nonnegative == Verdict::yes);
    CHECK(a.hyperbolic == Verdict::no);

    PolyClass b = classify_verdicts(parse("x^2"));
    CHECK(b.nonnegative == Verdict::yes);
    CHECK(b.positive == Verdict::no);
    CHECK(b.elliptic == Verdict::no);
    CHECK(b.hyperbolic == Verdict::yes);

    PolyClass c = classify_verdicts(parse("x^2-1"));
    CHECK(c.hyperbolic == Verdict::yes);
    CHECK(c.nonnegative == Verdict::no);
    CHECK(c.positive == Verdict::no);
    CHECK(c.elliptic == Verdict::no);
}

TEST_CASE("classify zero and constants") {
    PolyClass z = classify_verdicts(RatPoly::zero());
    CHECK(z.nonnegative == Verdict::yes);
    CHECK(z.positive == Verdict::no);
    CHECK(z.elliptic == Verdict::no);
    CHECK(z.hyperbolic == Verdict::not_applicable);

    PolyClass five = classify_verdicts(RatPoly::constant(Rat(5)));
    CHECK(five.positive == Verdict::yes);
    CHECK(five.elliptic == Verdict::yes);
    CHECK(five.hyperbolic == Verdict::not_applicable);

    PolyClass neg = classify_verdicts(RatPoly::constant(Rat(-3)));
    CHECK(neg.positive == Verdict::no);
    CHECK(neg.nonnegative == Verdict::no);
    CHECK(neg.elliptic == Verdict::yes);
    CHECK(neg.hyperbolic == Verdict::not_applicable);
}

TEST_CASE("classify matches known constructions and sign sampling") {
    DetRng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        KnownPoly k = random_known(rng);
        PolyClass c = classify_verdicts(k.p);
        CHECK(c.nonnegative == (k.nonnegative ? Verdict::yes : Verdict::no));
        CHECK(c.positive == (k.positive ? Verdict::yes : Verdict::no));
        if (k.p.degree() >= 1) {
            CHECK(c.elliptic == (k.elliptic ? Verdict::yes : Verdict::no));
            CHECK(c.hyperbolic == (k.hyperbolic ? Verdict::yes : Verdict::no));
            Rat bound = root_bound(k.p);
            for (int s = -20; s <= 20; ++s) {
                Rat x = bound * Rat(s, 20);
                int sign = k.p.eval(x).sign();
                if (c.nonnegative == Verdict::yes)
                    CHECK(sign >= 0);
                if (c.positive == Verdict::yes)
                    CHECK(sign > 0);
            }
        }
    }
}

TEST_CASE("lattice invariants on random polynomials") {
    DetRng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        RatPoly p = trial % 3 == 0 ? random_known(rng).p : rng.poly(6, 6, 3);
        PolyClass c = classify_verdicts(p);
        if (c.positive == Verdict::yes) {
            CHECK(c.elliptic == Verdict::yes);
            CHECK(c.nonnegative == Verdict::yes);
        }
        bool both = c.nonnegative == Verdict::yes && c.elliptic == Verdict::yes;
        CHECK((c.positive == Verdict::yes) == both);
    }
}

TEST_CASE("sos_decompose named examples") {
    SosWitness a = sos_decompose(parse("x^2+2x+2"));
    CHECK(a.exact);
    CHECK(a.p1 == parse("x+1"));
    CHECK(a.p2 == RatPoly::constant(Rat(1)));

    SosWitness b = sos_decompose(parse("(x^2+1)^2"));
    CHECK(b.exact);
    CHECK(b.p1 == parse("x^2-1"));
    CHECK(b.p2 == parse("2x"));

    SosWitness c = sos_decompose(parse("x^2"));
    CHECK(c.exact);
    CHECK(c.p1 == parse("x"));
    CHECK(c.p2 == RatPoly::zero());

    SosWitness z = sos_decompose(RatPoly::zero());
    CHECK(z.exact);
    CHECK(z.p1.is_zero());
    CHECK(z.p2.is_zero());
}

TEST_CASE("sos_decompose precondition") {
    CHECK_THROWS_AS(sos_decompose(parse("x^2-1")), std::domain_error);
    CHECK_THROWS_AS(sos_decompose(parse("x")), std::domain_error);
    CHECK_THROWS_AS(sos_decompose(RatPoly::constant(Rat(-2))), std::domain_error);
}

TEST_CASE("sos round-trip is exact on rational-square builds") {
    DetRng rng(59);
    for (int trial = 0; trial < 12; ++trial) {
        Rat d = rng.nonzero_rat(3, 2);
        RatPoly p = RatPoly::constant(d * d);
        int n_lin = static_cast<int>(rng.int_in(0, 2));
        for (int i = 0; i < n_lin; ++i) {
            RatPoly lin{-rng.rat(3, 2), Rat(1)};
            p *= (lin * lin).pow(static_cast<unsigned>(rng.int_in(1, 2)));
        }
        int n_quad = static_cast<int>(rng.int_in(0, 2));
        for (int i = 0; i < n_quad; ++i) {
            Rat a = rng.rat(2, 2);
            Rat b = rng.positive_rat(2, 2);
            p *= RatPoly{a * a + b * b, Rat(-2) * a, Rat(1)}.pow(
                static_cast<unsigned>(rng.int_in(1, 2)));
        }
        SosWitness w = sos_decompose(p);
        CHECK(w.exact);
        CHECK(w.p1 * w.p1 + w.p2 * w.p2 == p);
    }
}

TEST_CASE("sos residual bound holds with irrational roots") {
    DetRng rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        // (x^2 - c)^2 + s with c a positive non-square: irrational roots
        Rat c = Rat(2) + Rat(rng.int_in(0, 1) * 3);
        Rat s = rng.positive_rat(3, 2);
        RatPoly base = parse("x^2") - RatPoly::constant(c);
        RatPoly p = base * base + RatPoly::constant(s);
        SosWitness w = sos_decompose(p);
        RatPoly resid = p - w.p1 * w.p1 - w.p2 * w.p2;
        Rat bound = resid.max_abs_coeff();
        CHECK(bound <= Rat(1, 1000000000L) * (Rat(1) + p.max_abs_coeff()));
        CHECK(bound <= w.residual_bound);
    }
}

TEST_CASE("classify attaches an SOS witness exactly when non-negative") {
    DetRng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        RatPoly p = trial % 2 == 0 ? random_known(rng).p : rng.poly(4, 4, 2);
        PolyClass c = classify(p);
        CHECK((c.nonnegative == Verdict::yes) == c.sos_witness.has_value());
        if (c.sos_witness && c.sos_witness->exact)
            CHECK(c.sos_witness->p1 * c.sos_witness->p1 +
                      c.sos_witness->p2 * c.sos_witness->p2 ==
                  p);
    }
}

TEST_CASE("full real-root count characterizes hyperbolicity") {
    DetRng rng(139);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly p = trial % 2 == 0 ? random_known(rng).p : rng.nonzero_poly(6, 6, 3);
        if (p.degree() < 1)
            continue;
        int full = count_real_roots(p, true);
        CHECK(full <= p.degree());
        CHECK((full == p.degree()) ==
              (classify_verdicts(p).hyperbolic == Verdict::yes));
    }
}

TEST_CASE("nonreal_root_count") {
    CHECK(nonreal_root_count(parse("x^2+1")) == 2);
    CHECK(nonreal_root_count(parse("x^3-x")) == 0);
    CHECK(nonreal_root_count(parse("(x^2+1)(x-1)")) == 2);
    CHECK_THROWS_AS(nonreal_root_count(RatPoly::zero()), std::domain_error);
}
