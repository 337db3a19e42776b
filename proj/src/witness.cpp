#include "preserver/witness.hpp"

#include <algorithm>
#include <random>

#include "preserver/cxpoly.hpp"
#include "preserver/roots.hpp"

namespace preserver {

std::string to_string(Construction c) {
    switch (c) {
        case Construction::t1: return "t1";
        case Construction::t2: return "t2";
        case Construction::t3: return "t3";
        case Construction::ct3_restriction: return "ct3_restriction";
    }
    return "?";
}

Rat GlTable::eval(int l, std::span<const Rat> u) const {
    if (l < 1 || l > k)
        throw std::domain_error("GlTable::eval: l out of range");
    Rat out(0);
    for (const auto& t : terms[static_cast<size_t>(l)])
        out += t.coeff * u[static_cast<size_t>(t.i - 1)] * u[static_cast<size_t>(t.j - 1)];
    return out;
}

GlTable gl_table(int k) {
    if (k < 1)
        throw std::domain_error("gl_table: k >= 1 required");
    GlTable table;
    table.k = k;
    table.terms.resize(static_cast<size_t>(k) + 1);
    for (int l = 2; l <= k; ++l) {
        for (int i = 1; 2 * i <= l; ++i) {
            int j = l - i;
            // ordered pairs (i,j) and (j,i) both contribute C(l,i) i! j!
            Rat coeff = binomial(static_cast<unsigned>(l), static_cast<unsigned>(i)) *
                        factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(j));
            if (i != j)
                coeff *= Rat(2);
            table.terms[static_cast<size_t>(l)].push_back({i, j, coeff});
        }
    }
    return table;
}

std::vector<Rat> b_from_a(std::span<const Rat> a, const GlTable& table) {
    const int k = static_cast<int>(a.size());
    if (k < 1 || table.k < k)
        throw std::domain_error("b_from_a: need 1 <= len(a) <= table.k");
    std::vector<Rat> b;
    b.reserve(a.size());
    b.push_back(a[0]);  // b_1 = a_1
    for (int i = 2; i <= k; ++i) {
        Rat gi = table.eval(i, std::span<const Rat>(b.data(), b.size()));
        b.push_back((a[static_cast<size_t>(i - 1)] - gi) /
                    (Rat(2) * factorial(static_cast<unsigned>(i))));
    }
    return b;
}

Rat find_x0(const DiffOperator& u) {
    if (u.is_zero())
        throw std::domain_error("find_x0: zero operator");
    for (long m = 1;; ++m) {
        for (long cand : {m, -m}) {
            bool ok = true;
            for (const auto& qi : u.q()) {
                if (!qi.is_zero() && qi.eval(Rat(cand)).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return Rat(cand);
        }
    }
}

namespace {

NonnegEvidence nonneg_evidence(const RatPoly& p) {
    NonnegEvidence e;
    e.verdict = classify_verdicts(p).nonnegative;
    e.degree = p.degree();
    e.leading_coeff = p.is_zero() ? Rat(0) : p.lc();
    e.odd_multiplicity_real_roots = p.is_zero() ? 0 : odd_multiplicity_real_root_count(p);
    return e;
}

WitnessCertificate make_certificate(const DiffOperator& u, RatPoly p, Rat x0,
                                    Construction construction) {
    WitnessCertificate cert;
    cert.p = std::move(p);
    cert.x0 = std::move(x0);
    cert.value = u.apply(cert.p).eval(cert.x0);
    cert.degree_used = cert.p.degree();
    cert.construction = construction;
    cert.nonneg_proof = nonneg_evidence(cert.p);
    return cert;
}

bool certificate_valid(const WitnessCertificate& c) {
    return c.nonneg_proof.verdict == Verdict::yes && c.value.sign() < 0;
}

// Deterministic small rational in [-1/16, 1/16] \ {0}.
Rat small_perturbation(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 31) - 15;  // -15..15
    if (num == 0)
        num = 7;
    long den = static_cast<long>(rng() % 4) + 1;
    return Rat(num, 15 * 16 * den);
}

// The witness polynomial prod (x - t_i)^2 assembled from the certified root
// enclosures of the z-polynomial: t = x0 - 1/z, re/im parts rounded to the
// dyadic grid, real roots giving squared linear factors and conjugate pairs
// squared quadratic norms. Non-negativity is structural.
RatPoly assemble_witness_poly(const std::vector<CxRoot>& zroots, const Rat& x0, unsigned bits) {
    RatPoly p = RatPoly::constant(Rat(1));
    for (const auto& z : zroots) {
        if (z.im_center.sign() < 0)
            continue;  // conjugates are handled with their upper partner
        CxRat t = CxRat(x0) - z.center().inverse();
        if (z.is_real()) {
            Rat tr = round_dyadic(t.re, bits);
            RatPoly lin{-tr, Rat(1)};
            p *= (lin * lin).pow(static_cast<unsigned>(z.multiplicity));
        } else {
            Rat re = round_dyadic(t.re, bits);
            Rat im = round_dyadic(t.im.abs(), bits);
            RatPoly quad{re * re + im * im, Rat(-2) * re, Rat(1)};
            p *= (quad * quad).pow(static_cast<unsigned>(z.multiplicity));
        }
    }
    return p;
}

}  // namespace

bool verify_certificate(const DiffOperator& u, const WitnessCertificate& cert) {
    if (classify_verdicts(cert.p).nonnegative != Verdict::yes)
        return false;
    Rat value = u.apply(cert.p).eval(cert.x0);
    return value == cert.value && value.sign() < 0;
}

WitnessCertificate witness_t1(const DiffOperator& u, uint64_t seed) {
    if (u.is_zero())
        throw std::domain_error("witness_t1: zero operator");

    // Degenerate fast path: a point where q_0 < 0 makes p = 1 a witness.
    RatPoly q0 = u.coeff(0);
    if (auto neg = find_negative_point(q0)) {
        auto cert = make_certificate(u, RatPoly::constant(Rat(1)), *neg, Construction::t1);
        if (!certificate_valid(cert))
            throw RetryExhausted("witness_t1: fast-path certificate failed verification");
        return cert;
    }

    const int k = u.order();
    if (k < 1)
        throw std::domain_error("witness_t1: operator order must be >= 1");

    const Rat x0 = find_x0(u);
    std::vector<Rat> alpha;  // alpha[i-1] = q_i(x0), i = 1..k
    alpha.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i)
        alpha.push_back(u.coeff(i).eval(x0));

    // support coordinate: largest |alpha_j| among nonzero entries
    int support = -1;
    for (int i = 0; i < k; ++i)
        if (!alpha[static_cast<size_t>(i)].is_zero() &&
            (support < 0 ||
             alpha[static_cast<size_t>(i)].abs() > alpha[static_cast<size_t>(support)].abs()))
            support = i;
    if (support < 0)
        throw std::domain_error("witness_t1: all q_i(x0) vanish for i >= 1");

    const Rat q0_at = q0.eval(x0);
    const GlTable table = gl_table(k);
    std::mt19937_64 rng(seed);

    std::string last_failure = "no attempt";
    for (int retry = 0; retry < 64; ++retry) {
        std::vector<Rat> a(static_cast<size_t>(k), Rat(0));
        if (retry > 0 && k > 1) {
            int coord = (support + 1 + static_cast<int>(rng() % static_cast<uint64_t>(k - 1))) % k;
            a[static_cast<size_t>(coord)] += small_perturbation(rng);
        }
        // Solve the support coordinate so the achieved linear form equals -1:
        // the construction realizes w_1 = 2 a_1 and w_i = a_i (i >= 2).
        Rat weight = support == 0 ? Rat(2) : Rat(1);
        Rat others(0);
        for (int i = 0; i < k; ++i) {
            if (i == support)
                continue;
            Rat w = (i == 0 ? Rat(2) : Rat(1));
            others += w * alpha[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
        }
        a[static_cast<size_t>(support)] =
            (Rat(-1) - q0_at - others) / (weight * alpha[static_cast<size_t>(support)]);

        std::vector<Rat> b = b_from_a(std::span<const Rat>(a.data(), a.size()), table);
        if (b.back().is_zero()) {
            last_failure = "z-polynomial has a zero root (b_k = 0)";
            continue;
        }
        RatPoly zpoly = elementary_symmetric_to_monic(b, k);

        unsigned bits = 24;
        for (int refine = 0; refine < 8; ++refine, bits *= 2) {
            std::vector<CxRoot> zroots;
            try {
                zroots = approx_roots(zpoly, Rat(1, mpz_class(1) << (bits + 8)));
            } catch (const RootCertificationError& err) {
                last_failure = err.what();
                break;
            }
            bool zero_root = false;
            for (const auto& z : zroots)
                if (z.center().is_zero())
                    zero_root = true;
            if (zero_root) {
                last_failure = "certified enclosure centered at zero";
                break;
            }
            RatPoly p = assemble_witness_poly(zroots, x0, bits);
            auto cert = make_certificate(u, std::move(p), x0, Construction::t1);
            if (certificate_valid(cert))
                return cert;
            last_failure = "rounded witness lost negativity at " + std::to_string(bits) + " bits";
        }
    }
    throw RetryExhausted("witness_t1: retry budget exhausted (" + last_failure + ")");
}

namespace {

// g(x0, u) = sum_i m!/(m-i)! q_i(x0) u^i for the (x - t)^m family.
RatPoly pole_form(const DiffOperator& op, int m, const Rat& x0) {
    std::vector<Rat> g(static_cast<size_t>(std::min(m, op.order())) + 1, Rat(0));
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
        Rat falling = factorial(static_cast<unsigned>(m)) / factorial(static_cast<unsigned>(m - i));
        g[static_cast<size_t>(i)] = falling * op.coeff(i).eval(x0);
    }
    return RatPoly(std::move(g));
}

// Walks u = dir, 2 dir, 4 dir, ... until g(u) < 0.
Rat walk_to_negative(const RatPoly& g, int dir) {
    Rat u(dir);
    for (int step = 0; step < 512; ++step) {
        if (g.eval(u).sign() < 0)
            return u;
        u *= Rat(2);
    }
    throw RetryExhausted("witness: sign walk failed to reach a negative value");
}

WitnessCertificate powered_witness(const DiffOperator& u, int m, const Rat& x0, const Rat& u0,
                                   Construction construction) {
    Rat t0 = x0 - u0.inverse();
    RatPoly lin{-t0, Rat(1)};
    RatPoly p = lin.pow(static_cast<unsigned>(m));
    auto cert = make_certificate(u, std::move(p), x0, construction);
    if (!certificate_valid(cert))
        throw RetryExhausted("witness: powered construction failed exact verification");
    return cert;
}

}  // namespace

WitnessCertificate witness_t2(const DiffOperator& u) {
    if (u.is_zero())
        throw std::domain_error("witness_t2: zero operator");
    const int k = u.order();
    if (k < 1 || k % 2 == 0)
        throw std::domain_error("witness_t2: operator order must be odd");

    // any x0 with q_k(x0) != 0, from the deterministic ladder
    Rat x0(1);
    for (long m = 1;; ++m) {
        bool found = false;
        for (long cand : {m, -m}) {
            if (!u.coeff(k).eval(Rat(cand)).is_zero()) {
                x0 = Rat(cand);
                found = true;
                break;
            }
        }
        if (found)
            break;
    }

    RatPoly g = pole_form(u, k + 1, x0);  // odd degree k in u
    int dir = g.lc().sign() > 0 ? -1 : 1;
    Rat u0 = walk_to_negative(g, dir);
    return powered_witness(u, k + 1, x0, u0, Construction::t2);
}

WitnessCertificate witness_t3(const DiffOperator& u) {
    if (u.is_zero())
        throw std::domain_error("witness_t3: zero operator");
    const int k = u.order();
    if (k < 2 || k % 2 == 1)
        throw std::domain_error("witness_t3: operator order must be even and >= 2");

    const RatPoly qk = u.coeff(k);
    const RatPoly qk1 = u.coeff(k - 1);

    std::optional<Rat> x0;
    for (long m = 1; m <= 8 && !x0; ++m)
        for (long cand : {m, -m})
            if (qk.eval(Rat(cand)).sign() < 0) {
                x0 = Rat(cand);
                break;
            }
    if (!x0)
        x0 = find_negative_point(qk);
    bool degenerate_leading = false;
    if (!x0) {
        for (const auto& r : rational_real_roots(qk)) {
            if (!qk1.eval(r).is_zero()) {
                x0 = r;
                degenerate_leading = true;
                break;
            }
        }
    }
    if (!x0)
        throw PreconditionNotFound(
            "witness_t3: no x0 with q_k(x0) < 0, and no rational root of q_k with "
            "q_{k-1}(x0) != 0");

    RatPoly g = pole_form(u, k, *x0);
    // q_k(x0) < 0 gives an even polynomial in u with negative leading term
    // (negative for large |u|); q_k(x0) = 0 leaves odd effective degree k-1.
    int dir;
    if (!degenerate_leading)
        dir = 1;
    else
        dir = g.lc().sign() > 0 ? -1 : 1;
    Rat u0 = walk_to_negative(g, dir);
    return powered_witness(u, k, *x0, u0, Construction::t3);
}

WitnessCertificate witness_ct3(const DiffOperator& u, int i) {
    if (i < 2 || i % 2 == 1)
        throw std::domain_error("witness_ct3: restriction order must be even and >= 2");
    DiffOperator restricted = u.restricted(i);
    if (restricted.is_zero() || restricted.order() != i)
        throw std::domain_error("witness_ct3: q_i vanishes identically, restriction has lower order");
    WitnessCertificate cert = witness_t3(restricted);
    // deg p = i, so derivatives above order i vanish and the full operator
    // agrees with the restriction on p
    cert.construction = Construction::ct3_restriction;
    cert.value = u.apply(cert.p).eval(cert.x0);
    if (!certificate_valid(cert))
        throw RetryExhausted("witness_ct3: certificate failed verification against full operator");
    return cert;
}

WitnessCertificate witness_auto(const DiffOperator& u, uint64_t seed) {
    if (u.is_zero())
        throw std::domain_error("witness_auto: zero operator");
    const int k = u.order();
    if (k >= 2 && k % 2 == 0) {
        try {
            return witness_t3(u);
        } catch (const PreconditionNotFound&) {
            // fall through to the general construction
        }
    }
    if (k >= 1 && k % 2 == 1)
        return witness_t2(u);
    return witness_t1(u, seed);
}

}  // namespace preserver
