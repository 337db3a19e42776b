#include "preserver/roots.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace preserver {

// ---------------------------------------------------------------------------
// Sturm chains and exact real-root counting
// ---------------------------------------------------------------------------

SturmChain SturmChain::build(const RatPoly& square_free) {
    if (square_free.is_zero())
        throw std::domain_error("SturmChain: zero polynomial");
    SturmChain chain;
    chain.polys.push_back(square_free);
    if (square_free.degree() == 0)
        return chain;
    chain.polys.push_back(square_free.derivative());
    while (chain.polys.back().degree() > 0) {
        const RatPoly& a = chain.polys[chain.polys.size() - 2];
        const RatPoly& b = chain.polys.back();
        RatPoly r = -(a.divmod(b).second);
        if (r.is_zero())
            break;
        chain.polys.push_back(std::move(r));
    }
    return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys)
        signs.push_back(p.eval(x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys)
        signs.push_back(p.degree() % 2 == 0 ? p.lc().sign() : -p.lc().sign());
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys)
        signs.push_back(p.lc().sign());
    return count_variations(signs);
}

int SturmChain::count_open(const Rat& a, const Rat& b) const {
    if (!polys.empty() && (polys[0].eval(a).is_zero() || polys[0].eval(b).is_zero()))
        throw std::domain_error("SturmChain::count_open: endpoint is a root");
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

int count_real_roots(const RatPoly& p, bool with_multiplicity) {
    if (p.is_zero())
        throw std::domain_error("count_real_roots: zero polynomial");
    if (p.degree() == 0)
        return 0;
    if (!with_multiplicity)
        return SturmChain::build(square_free_part(p)).count_all();
    int total = 0;
    RatPoly f = p;
    while (f.degree() > 0) {
        total += count_real_roots(f, false);
        f = poly_gcd(f, f.derivative());
    }
    return total;
}

Rat root_bound(const RatPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        return Rat(2);
    Rat m(0);
    Rat l = p.lc().abs();
    for (int i = 0; i < p.degree(); ++i) {
        Rat q = p.coeff(i).abs() / l;
        if (q > m)
            m = q;
    }
    return m + Rat(2);
}

namespace {

// A bisection point of (a, b) that is not a root of sf; exists because sf has
// finitely many roots.
Rat non_root_split(const RatPoly& sf, const Rat& a, const Rat& b) {
    Rat m = (a + b) / Rat(2);
    Rat step = (b - a) / Rat(8);
    while (sf.eval(m).is_zero()) {
        m += step;
        step /= Rat(2);
        if (m >= b)
            m = (a + b) / Rat(2) - step;
    }
    return m;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RatPoly& p, const Rat& max_width) {
    if (p.is_zero())
        throw std::domain_error("isolate_real_roots: zero polynomial");
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() < 1)
        return out;
    RatPoly sf = square_free_part(p);
    if (sf.degree() < 1)
        return out;
    SturmChain chain = SturmChain::build(sf);
    Rat bound = root_bound(sf);

    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> work;
    work.push_back({-bound, bound, chain.count_open(-bound, bound)});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0)
            continue;
        if (s.count == 1 && (max_width.sign() <= 0 || s.b - s.a <= max_width)) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rat m = non_root_split(sf, s.a, s.b);
        int left = chain.count_open(s.a, m);
        work.push_back({s.a, m, left});
        work.push_back({m, s.b, s.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::vector<Rat> rational_real_roots(const RatPoly& p) {
    if (p.is_zero())
        throw std::domain_error("rational_real_roots: zero polynomial");
    std::vector<Rat> out;
    RatPoly f = p;
    if (f.degree() < 1)
        return out;
    if (f.coeff(0).is_zero()) {
        out.push_back(Rat(0));
        while (f.degree() > 0 && f.coeff(0).is_zero())
            f = f.div_exact(RatPoly::x());
    }
    if (f.degree() < 1)
        return out;

    RatPoly sf = square_free_part(f);
    // Integer-scale: any rational root n/d in lowest terms has d | lc and
    // n | constant term, so den(root) <= |scaled lc|.
    mpz_class den_lcm(1);
    for (const auto& c : sf.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    Rat scaled_lc = sf.lc() * Rat(den_lcm);
    mpz_class den_bound = scaled_lc.num();
    mpz_class den_bound_abs;
    mpz_abs(den_bound_abs.get_mpz_t(), den_bound.get_mpz_t());
    Rat min_gap = Rat(mpz_class(1), den_bound_abs * den_bound_abs);

    for (auto [a, b] : isolate_real_roots(sf)) {
        bool decided = false;
        while (!decided) {
            Rat s = simplest_rational_between(a, b);
            if (sf.eval(s).is_zero()) {
                out.push_back(s);
                decided = true;
            } else if (b - a < min_gap) {
                decided = true;  // root is irrational
            } else {
                // shrink around the (simple, sign-changing) root
                Rat m = non_root_split(sf, a, b);
                if (sf.eval(a).sign() * sf.eval(m).sign() < 0)
                    b = m;
                else
                    a = m;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Rat> find_negative_point(const RatPoly& p) {
    if (p.is_zero())
        return std::nullopt;
    for (long x : {0L, 1L, -1L, 2L, -2L})
        if (p.eval(Rat(x)).sign() < 0)
            return Rat(x);
    if (p.degree() < 1)
        return std::nullopt;

    // p has constant sign on each interval between consecutive real roots;
    // the endpoints of the isolating intervals plus the outer bound points
    // hit every such interval.
    Rat bound = root_bound(p);
    std::vector<Rat> candidates{-bound, bound};
    for (const auto& [a, b] : isolate_real_roots(p)) {
        candidates.push_back(a);
        candidates.push_back(b);
    }
    std::sort(candidates.begin(), candidates.end(), [](const Rat& x, const Rat& y) {
        if (x.abs() != y.abs())
            return x.abs() < y.abs();
        return x > y;
    });
    for (const auto& x : candidates)
        if (p.eval(x).sign() < 0)
            return x;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Complex root approximation: Aberth-Ehrlich refinement in escalating float
// precision, then exact a-posteriori certification via Weierstrass disks.
// ---------------------------------------------------------------------------

unsigned root_refinement_start_precision() {
    static unsigned prec = [] {
        if (const char* env = std::getenv("PRESERVER_LAB_PRECISION")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 32 && v <= 1 << 20)
                return static_cast<unsigned>(v);
        }
        return 128u;
    }();
    return prec;
}

namespace {

struct Cf {
    mpf_class re, im;
};

Cf cf_sub(const Cf& a, const Cf& b) { return {a.re - b.re, a.im - b.im}; }
Cf cf_mul(const Cf& a, const Cf& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cf cf_div(const Cf& a, const Cf& b) {
    mpf_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
mpf_class cf_abs2(const Cf& a) { return a.re * a.re + a.im * a.im; }

Cf horner(const std::vector<Cf>& coeffs, const Cf& z, unsigned prec) {
    Cf r{mpf_class(0, prec), mpf_class(0, prec)};
    for (size_t i = coeffs.size(); i-- > 0;) {
        r = cf_mul(r, z);
        r.re += coeffs[i].re;
        r.im += coeffs[i].im;
    }
    return r;
}

// One full float pass; returns candidate root approximations of the monic
// square-free polynomial (no guarantees, certification happens later).
std::vector<Cf> aberth_candidates(const RatPoly& monic_sf, unsigned prec) {
    const int d = monic_sf.degree();
    std::vector<Cf> coeffs, dcoeffs;
    coeffs.reserve(static_cast<size_t>(d) + 1);
    for (const auto& c : monic_sf.coeffs())
        coeffs.push_back({mpf_class(c.raw(), prec), mpf_class(0, prec)});
    RatPoly deriv = monic_sf.derivative();
    dcoeffs.reserve(static_cast<size_t>(d));
    for (const auto& c : deriv.coeffs())
        dcoeffs.push_back({mpf_class(c.raw(), prec), mpf_class(0, prec)});

    double radius = root_bound(monic_sf).to_double();
    std::vector<Cf> z;
    z.reserve(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        double theta = 2.0 * 3.14159265358979323846 * j / d + 0.4;
        double r = radius * (0.3 + 0.6 * (j + 1) / d);
        z.push_back({mpf_class(r * std::cos(theta), prec), mpf_class(r * std::sin(theta), prec)});
    }

    mpf_class tiny(1, prec);
    tiny >>= (prec > 16 ? prec - 8 : 8);  // 2^-(prec-8)
    const int max_iters = 80 + 12 * d;
    for (int iter = 0; iter < max_iters; ++iter) {
        mpf_class worst(0, prec);
        for (int i = 0; i < d; ++i) {
            Cf pz = horner(coeffs, z[static_cast<size_t>(i)], prec);
            Cf dz = horner(dcoeffs, z[static_cast<size_t>(i)], prec);
            if (cf_abs2(dz) == 0) {
                z[static_cast<size_t>(i)].re += mpf_class(1, prec) / 1024;
                continue;
            }
            Cf newton = cf_div(pz, dz);
            Cf s{mpf_class(0, prec), mpf_class(0, prec)};
            bool collision = false;
            for (int j = 0; j < d; ++j) {
                if (j == i)
                    continue;
                Cf diff = cf_sub(z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]);
                if (cf_abs2(diff) == 0) {
                    collision = true;
                    break;
                }
                Cf inv = cf_div({mpf_class(1, prec), mpf_class(0, prec)}, diff);
                s.re += inv.re;
                s.im += inv.im;
            }
            if (collision) {
                z[static_cast<size_t>(i)].re += mpf_class(1, prec) / 1024;
                continue;
            }
            Cf denom{mpf_class(1, prec) - (newton.re * s.re - newton.im * s.im),
                     mpf_class(0, prec) - (newton.re * s.im + newton.im * s.re)};
            Cf w = cf_abs2(denom) == 0 ? newton : cf_div(newton, denom);
            z[static_cast<size_t>(i)].re -= w.re;
            z[static_cast<size_t>(i)].im -= w.im;
            mpf_class rel = cf_abs2(w) / (cf_abs2(z[static_cast<size_t>(i)]) + 1);
            if (rel > worst)
                worst = rel;
        }
        if (worst < tiny * tiny)
            break;
    }
    return z;
}

Rat mpf_to_dyadic(const mpf_class& x, unsigned bits) {
    mpf_class scaled = x;
    mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), bits);
    scaled += 0.5;
    mpf_class fl;
    mpf_floor(fl.get_mpf_t(), scaled.get_mpf_t());
    mpz_class n;
    mpz_set_f(n.get_mpz_t(), fl.get_mpf_t());
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
    return Rat(n, den);
}

struct FactorRoots {
    std::vector<CxRoot> roots;
    bool certified = false;
};

// Exact certification of one square-free factor's candidate centers: every
// root of sf lies in the union of the Weierstrass disks D(z_i, d*|W_i|), and
// if the disks are pairwise disjoint each contains exactly one root. A disk
// centered on the real axis then holds a real root, and a disk with
// |im| > radius holds a non-real one.
FactorRoots certify(const RatPoly& sf, const std::vector<CxRat>& centers,
                    int expected_real, const Rat& radius_bound) {
    FactorRoots out;
    const int d = sf.degree();
    CxRatPoly monic(sf.monic());

    std::vector<Rat> radii;
    radii.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        CxRat w = monic.eval(centers[static_cast<size_t>(i)]);
        for (int j = 0; j < d; ++j) {
            if (j == i)
                continue;
            CxRat diff = centers[static_cast<size_t>(i)] - centers[static_cast<size_t>(j)];
            if (diff.is_zero())
                return out;  // coincident candidates, needs more precision
            w = w / diff;
        }
        Rat r = Rat(d) * w.abs_upper();
        if (r > radius_bound)
            return out;
        radii.push_back(r);
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            Rat rr = radii[static_cast<size_t>(i)] + radii[static_cast<size_t>(j)];
            CxRat diff = centers[static_cast<size_t>(i)] - centers[static_cast<size_t>(j)];
            if (!(rr * rr < diff.norm2()))
                return out;  // disks not provably disjoint
        }
    }
    int real_count = 0;
    for (int i = 0; i < d; ++i) {
        const CxRat& c = centers[static_cast<size_t>(i)];
        if (c.is_real()) {
            ++real_count;
        } else if (!(c.im.abs() > radii[static_cast<size_t>(i)])) {
            return out;  // cannot prove the enclosed root is non-real
        }
    }
    if (real_count != expected_real)
        return out;

    for (int i = 0; i < d; ++i) {
        CxRoot r;
        r.re_center = centers[static_cast<size_t>(i)].re;
        r.im_center = centers[static_cast<size_t>(i)].im;
        r.radius = radii[static_cast<size_t>(i)];
        out.roots.push_back(std::move(r));
    }
    out.certified = true;
    return out;
}

std::vector<CxRoot> roots_of_square_free(const RatPoly& sf, const Rat& radius_bound) {
    const int d = sf.degree();
    if (d == 1) {
        CxRoot r;
        r.re_center = -sf.coeff(0) / sf.coeff(1);
        r.im_center = Rat(0);
        r.radius = Rat(0);
        return {r};
    }
    const int expected_real = count_real_roots(sf, false);
    RatPoly monic = sf.monic();

    unsigned prec = root_refinement_start_precision();
    for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
        std::vector<Cf> cand = aberth_candidates(monic, prec);

        // impose the exact real/conjugate structure before certifying
        std::sort(cand.begin(), cand.end(), [](const Cf& a, const Cf& b) {
            return abs(a.im) < abs(b.im);
        });
        unsigned bits = prec / 2;
        std::vector<CxRat> centers;
        centers.reserve(static_cast<size_t>(d));
        bool structure_ok = true;
        for (int i = 0; i < expected_real; ++i)
            centers.emplace_back(mpf_to_dyadic(cand[static_cast<size_t>(i)].re, bits), Rat(0));
        std::vector<Cf> upper, lower;
        for (size_t i = static_cast<size_t>(expected_real); i < cand.size(); ++i) {
            if (cand[i].im > 0)
                upper.push_back(cand[i]);
            else
                lower.push_back(cand[i]);
        }
        if (upper.size() != lower.size()) {
            structure_ok = false;
        } else {
            // match each upper-half candidate with its nearest conjugate in
            // the lower half, then symmetrize the pair
            std::vector<bool> taken(lower.size(), false);
            for (const Cf& u : upper) {
                size_t best = lower.size();
                mpf_class best_d2;
                for (size_t j = 0; j < lower.size(); ++j) {
                    if (taken[j])
                        continue;
                    Cf mirror{lower[j].re, -lower[j].im};
                    mpf_class d2 = cf_abs2(cf_sub(u, mirror));
                    if (best == lower.size() || d2 < best_d2) {
                        best = j;
                        best_d2 = d2;
                    }
                }
                taken[best] = true;
                Rat re = mpf_to_dyadic((u.re + lower[best].re) / 2, bits);
                Rat im = mpf_to_dyadic((u.im - lower[best].im) / 2, bits);
                if (im.sign() <= 0) {
                    structure_ok = false;
                    break;
                }
                centers.emplace_back(re, im);
                centers.emplace_back(re, -im);
            }
        }
        if (!structure_ok)
            continue;

        FactorRoots fr = certify(sf, centers, expected_real, radius_bound);
        if (fr.certified)
            return fr.roots;
    }
    throw RootCertificationError("approx_roots: certification budget exhausted for factor " +
                                 sf.str());
}

}  // namespace

std::vector<CxRoot> approx_roots(const RatPoly& p, const Rat& radius_bound) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("approx_roots: need a nonzero polynomial of degree >= 1");
    if (radius_bound.sign() <= 0)
        throw std::domain_error("approx_roots: radius bound must be positive");

    std::vector<CxRoot> out;
    for (const auto& [factor, mult] : square_free_decomposition(p).factors) {
        for (auto r : roots_of_square_free(factor, radius_bound)) {
            r.multiplicity = mult;
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const CxRoot& a, const CxRoot& b) {
        if (a.re_center != b.re_center)
            return a.re_center < b.re_center;
        return a.im_center < b.im_center;
    });
    return out;
}

}  // namespace preserver
