#include "preserver/classify.hpp"

#include <gmpxx.h>

#include <optional>

#include "preserver/cxpoly.hpp"
#include "preserver/roots.hpp"

namespace preserver {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

int nonreal_root_count(const RatPoly& p) {
    if (p.is_zero())
        throw std::domain_error("nonreal_root_count: zero polynomial");
    return p.degree() - count_real_roots(p, true);
}

int odd_multiplicity_real_root_count(const RatPoly& p) {
    if (p.is_zero())
        throw std::domain_error("odd_multiplicity_real_root_count: zero polynomial");
    int n = 0;
    for (const auto& [factor, mult] : square_free_decomposition(p).factors)
        if (mult % 2 == 1)
            n += count_real_roots(factor, false);
    return n;
}

PolyClass classify_verdicts(const RatPoly& p) {
    PolyClass c;
    if (p.is_zero()) {
        c.nonnegative = Verdict::yes;
        c.positive = Verdict::no;
        c.elliptic = Verdict::no;
        c.hyperbolic = Verdict::not_applicable;
        return c;
    }
    if (p.degree() == 0) {
        bool pos = p.lc().sign() > 0;
        c.nonnegative = pos ? Verdict::yes : Verdict::no;
        c.positive = c.nonnegative;
        c.elliptic = Verdict::yes;  // no real roots
        c.hyperbolic = Verdict::not_applicable;
        return c;
    }
    int distinct = count_real_roots(p, false);
    c.elliptic = distinct == 0 ? Verdict::yes : Verdict::no;
    c.hyperbolic = count_real_roots(p, true) == p.degree() ? Verdict::yes : Verdict::no;
    bool nonneg = p.lc().sign() > 0 && p.degree() % 2 == 0 &&
                  odd_multiplicity_real_root_count(p) == 0;
    c.nonnegative = nonneg ? Verdict::yes : Verdict::no;
    c.positive = (c.nonnegative == Verdict::yes && c.elliptic == Verdict::yes) ? Verdict::yes
                                                                               : Verdict::no;
    return c;
}

namespace {

// c = a^2 + b^2 over the rationals, found when c is a perfect square or the
// integer num(c)*den(c) has a small two-square representation.
bool sum_of_two_squares(const Rat& c, Rat* a, Rat* b) {
    if (c.sign() < 0)
        return false;
    Rat s;
    if (c.sqrt_exact(&s)) {
        *a = s;
        *b = Rat(0);
        return true;
    }
    mpz_class w = c.num() * c.den();
    if (mpz_sizeinbase(w.get_mpz_t(), 2) > 44)
        return false;  // bounded search only
    mpz_class limit;
    mpz_sqrt(limit.get_mpz_t(), w.get_mpz_t());
    for (mpz_class A = 0; A <= limit; ++A) {
        mpz_class rest = w - A * A;
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class B;
            mpz_sqrt(B.get_mpz_t(), rest.get_mpz_t());
            *a = Rat(A, c.den());
            *b = Rat(B, c.den());
            return true;
        }
    }
    return false;
}

void normalize_signs(RatPoly* p1, RatPoly* p2) {
    if (!p1->is_zero() && p1->lc().sign() < 0)
        *p1 = -*p1;
    if (!p2->is_zero() && p2->lc().sign() < 0)
        *p2 = -*p2;
    if (p1->is_zero() || (!p2->is_zero() && p2->degree() > p1->degree()))
        std::swap(*p1, *p2);
}

// Exact path: complete factorization over Q(i). Real roots must be rational,
// complex roots Gaussian-rational, the leading constant a sum of two rational
// squares. Returns nullopt when any of that fails.
std::optional<SosWitness> sos_exact(const RatPoly& p) {
    Rat c = p.lc();
    Rat c1, c2;
    if (!sum_of_two_squares(c, &c1, &c2))
        return std::nullopt;
    CxRatPoly q = CxRatPoly::constant(CxRat(c1, c2));

    for (const auto& [factor, mult] : square_free_decomposition(p).factors) {
        RatPoly e = factor;
        std::vector<Rat> rr = rational_real_roots(factor);
        for (const auto& r : rr) {
            if (mult % 2 != 0)
                return std::nullopt;  // cannot happen for non-negative p
            e = e.div_exact(RatPoly{-r, Rat(1)});
            q = q * CxRatPoly::linear_from_root(CxRat(r)).pow(static_cast<unsigned>(mult / 2));
        }
        if (e.degree() > 0 && count_real_roots(e, false) > 0)
            return std::nullopt;  // irrational real roots
        // remaining roots are strict conjugate pairs; identify them as
        // Gaussian rationals by snapping certified enclosures
        for (int attempt = 0; attempt < 3 && e.degree() > 0; ++attempt) {
            Rat radius = Rat(1, mpz_class(1) << (30 + 30 * attempt));
            std::vector<CxRoot> roots;
            try {
                roots = approx_roots(e, radius);
            } catch (const RootCertificationError&) {
                return std::nullopt;
            }
            bool progressed = false;
            for (const auto& root : roots) {
                if (root.im_center.sign() <= 0)
                    continue;
                Rat a = simplest_rational_between(root.re_center - root.radius,
                                                  root.re_center + root.radius);
                Rat b = simplest_rational_between(root.im_center - root.radius,
                                                  root.im_center + root.radius);
                if (b.sign() <= 0)
                    continue;
                RatPoly quad{a * a + b * b, Rat(-2) * a, Rat(1)};
                if (e.divisible_by(quad)) {
                    e = e.div_exact(quad);
                    q = q * CxRatPoly::linear_from_root(CxRat(a, b)).pow(
                                static_cast<unsigned>(mult));
                    progressed = true;
                }
            }
            if (!progressed)
                break;
        }
        if (e.degree() > 0)
            return std::nullopt;
    }

    SosWitness w;
    w.p1 = q.real_part();
    w.p2 = q.imag_part();
    if (w.p1 * w.p1 + w.p2 * w.p2 != p)
        return std::nullopt;
    normalize_signs(&w.p1, &w.p2);
    w.residual_bound = Rat(0);
    w.exact = true;
    return w;
}

Rat dyadic_sqrt(const Rat& c, unsigned prec) {
    mpf_class x(c.raw(), prec);
    mpf_class r(0, prec);
    mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
    mpf_class scaled = r;
    mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), prec / 2);
    mpf_class fl;
    mpf_floor(fl.get_mpf_t(), scaled.get_mpf_t());
    mpz_class n;
    mpz_set_f(n.get_mpz_t(), fl.get_mpf_t());
    return Rat(n, mpz_class(1) << (prec / 2));
}

SosWitness sos_approx(const RatPoly& p) {
    Rat target = Rat(1, mpz_class(1000000000)) * (Rat(1) + p.max_abs_coeff());
    for (int attempt = 0; attempt < 8; ++attempt) {
        unsigned prec = 192u << attempt;
        Rat radius = Rat(1, mpz_class(1) << (prec / 2));
        CxRatPoly q = CxRatPoly::constant(CxRat(dyadic_sqrt(p.lc(), prec)));
        bool ok = true;
        for (const auto& [factor, mult] : square_free_decomposition(p).factors) {
            std::vector<CxRoot> roots;
            try {
                roots = approx_roots(factor, radius);
            } catch (const RootCertificationError&) {
                ok = false;
                break;
            }
            for (const auto& root : roots) {
                if (root.im_center.sign() < 0)
                    continue;
                if (root.is_real()) {
                    // even multiplicity for non-negative input
                    q = q * CxRatPoly::linear_from_root(CxRat(root.re_center))
                                .pow(static_cast<unsigned>(mult / 2));
                } else {
                    q = q * CxRatPoly::linear_from_root(root.center())
                                .pow(static_cast<unsigned>(mult));
                }
            }
        }
        if (!ok)
            continue;
        SosWitness w;
        w.p1 = q.real_part();
        w.p2 = q.imag_part();
        RatPoly resid = p - w.p1 * w.p1 - w.p2 * w.p2;
        Rat bound = resid.max_abs_coeff();
        if (bound <= target) {
            normalize_signs(&w.p1, &w.p2);
            w.residual_bound = bound;
            w.exact = bound.is_zero();
            return w;
        }
    }
    throw std::runtime_error("sos_decompose: residual target not reached within budget");
}

}  // namespace

SosWitness sos_decompose(const RatPoly& p) {
    if (classify_verdicts(p).nonnegative != Verdict::yes)
        throw std::domain_error("sos_decompose: polynomial is not non-negative");
    if (p.is_zero())
        return SosWitness{RatPoly(), RatPoly(), Rat(0), true};
    if (auto exact = sos_exact(p))
        return *exact;
    return sos_approx(p);
}

PolyClass classify(const RatPoly& p) {
    PolyClass c = classify_verdicts(p);
    if (c.nonnegative == Verdict::yes)
        c.sos_witness = sos_decompose(p);
    return c;
}

}  // namespace preserver
