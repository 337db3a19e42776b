#include "preserver/hankel.hpp"

#include <gmpxx.h>

#include <functional>

namespace preserver {

std::string to_string(Definiteness v) {
    switch (v) {
        case Definiteness::positive_definite: return "positive_definite";
        case Definiteness::positive_semidefinite_degenerate:
            return "positive_semidefinite_degenerate";
        case Definiteness::indefinite: return "indefinite";
    }
    return "?";
}

namespace {

// Fraction-free determinant of an integer matrix (Bareiss with row pivoting,
// sign tracked). Divisions are exact by construction.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

struct ScaledMatrix {
    std::vector<std::vector<mpz_class>> ints;
    mpz_class scale;  // ints = scale * entries
};

ScaledMatrix integer_scale(const std::vector<std::vector<Rat>>& m) {
    ScaledMatrix out;
    out.scale = 1;
    for (const auto& row : m)
        for (const auto& e : row)
            mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), e.den().get_mpz_t());
    out.ints.reserve(m.size());
    for (const auto& row : m) {
        std::vector<mpz_class> r;
        r.reserve(row.size());
        for (const auto& e : row)
            r.push_back(e.num() * (out.scale / e.den()));
        out.ints.push_back(std::move(r));
    }
    return out;
}

// Exact determinant of the principal submatrix picked by `idx`.
Rat principal_minor(const ScaledMatrix& sm, const std::vector<size_t>& idx) {
    std::vector<std::vector<mpz_class>> sub(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
        sub[i].reserve(idx.size());
        for (size_t j = 0; j < idx.size(); ++j)
            sub[i].push_back(sm.ints[idx[i]][idx[j]]);
    }
    mpz_class d = det_bareiss(std::move(sub));
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), sm.scale.get_mpz_t(), idx.size());
    return Rat(d, denom);
}

HankelReport report_from_moments(const std::vector<Rat>& s, int size) {
    HankelReport rep;
    rep.size = size;
    rep.entries.assign(static_cast<size_t>(size), std::vector<Rat>());
    for (int i = 0; i < size; ++i) {
        rep.entries[static_cast<size_t>(i)].reserve(static_cast<size_t>(size));
        for (int j = 0; j < size; ++j)
            rep.entries[static_cast<size_t>(i)].push_back(s[static_cast<size_t>(i + j)]);
    }
    ScaledMatrix sm = integer_scale(rep.entries);

    bool all_positive = true;
    for (int k = 0; k < size; ++k) {
        std::vector<size_t> idx(static_cast<size_t>(k) + 1);
        for (size_t i = 0; i <= static_cast<size_t>(k); ++i)
            idx[i] = i;
        Rat minor = principal_minor(sm, idx);
        if (minor.sign() <= 0)
            all_positive = false;
        rep.leading_minors.push_back(std::move(minor));
    }
    if (all_positive) {
        rep.verdict = Definiteness::positive_definite;
        return rep;
    }
    bool psd;
    if (size <= 12) {
        // exhaustive principal-minor check, affordable at these sizes
        psd = true;
        const unsigned full = 1u << size;
        for (unsigned mask = 1; mask < full && psd; ++mask) {
            std::vector<size_t> idx;
            for (int i = 0; i < size; ++i)
                if (mask & (1u << i))
                    idx.push_back(static_cast<size_t>(i));
            if (principal_minor(sm, idx).sign() < 0)
                psd = false;
        }
    } else {
        // exact symmetric elimination scales to larger inputs
        psd = !negative_direction(rep.entries).has_value();
    }
    rep.verdict = psd ? Definiteness::positive_semidefinite_degenerate : Definiteness::indefinite;
    return rep;
}

}  // namespace

HankelReport diag_hankel(const DiagSequence& t) {
    int n = t.truncation_degree();
    if (n % 2 == 1)
        --n;  // odd truncations reduce to the even case
    int size = n / 2 + 1;
    std::vector<Rat> s;
    s.reserve(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m)
        s.push_back(t.lambda(m));
    return report_from_moments(s, size);
}

HankelReport const_coeff_hankel(const ConstCoeffOperator& u, int k) {
    if (k < 0 || k % 2 == 1)
        throw std::domain_error("const_coeff_hankel: degree bound must be even and >= 0");
    int size = k / 2 + 1;
    std::vector<Rat> s;
    s.reserve(static_cast<size_t>(k) + 1);
    for (int m = 0; m <= k; ++m)
        s.push_back(factorial(static_cast<unsigned>(m)) * u.coeff(m));
    return report_from_moments(s, size);
}

std::vector<NecessaryViolation> necessary_conditions(const DiagSequence& t) {
    std::vector<Rat> l = t.lambdas();
    if (!l.empty() && l[0].sign() < 0)
        for (auto& x : l)
            x = -x;
    std::vector<NecessaryViolation> out;
    const int n = static_cast<int>(l.size()) - 1;
    for (int i = 0; i <= n; i += 2) {
        if (l[static_cast<size_t>(i)].sign() < 0)
            out.push_back({NecessaryViolation::negative_even_lambda, i,
                           "lambda_" + std::to_string(i) + " = " + l[static_cast<size_t>(i)].str() +
                               " < 0"});
    }
    for (int i = 1; 2 * i <= n; ++i) {
        Rat lhs = l[static_cast<size_t>(i)] * l[static_cast<size_t>(i)];
        Rat rhs = l[0] * l[static_cast<size_t>(2 * i)];
        if (lhs > rhs)
            out.push_back({NecessaryViolation::cauchy_schwarz, i,
                           "lambda_" + std::to_string(i) + "^2 = " + lhs.str() + " > lambda_0*lambda_" +
                               std::to_string(2 * i) + " = " + rhs.str()});
    }
    return out;
}

Rat eval_preserver_form(const ConstCoeffOperator& u, const RatPoly& p) {
    // alpha beyond the supplied list is zero, so the form is defined for any
    // degree: it is exactly (U p)(0)
    Rat out(0);
    for (int i = 0; i <= p.degree() && i < static_cast<int>(u.alpha().size()); ++i)
        out += factorial(static_cast<unsigned>(i)) * p.coeff(i) * u.coeff(i);
    return out;
}

Rat eval_preserver_form(const DiagSequence& t, const RatPoly& p) {
    if (p.degree() > t.truncation_degree())
        throw std::domain_error("eval_preserver_form: degree exceeds truncation");
    Rat out(0);
    for (int i = 0; i <= p.degree(); ++i)
        out += t.lambda(i) * p.coeff(i);
    return out;
}

std::optional<std::vector<Rat>> negative_direction(const std::vector<std::vector<Rat>>& sym) {
    const size_t n = sym.size();
    std::vector<std::vector<Rat>> a = sym;
    // rows of e express the current coordinates in terms of the originals
    std::vector<std::vector<Rat>> e(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        e[i][i] = Rat(1);

    for (size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t pivot = k;
            for (size_t i = k + 1; i < n; ++i)
                if (!a[i][i].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot != k) {
                std::swap(a[k], a[pivot]);
                for (size_t i = 0; i < n; ++i)
                    std::swap(a[i][k], a[i][pivot]);
                std::swap(e[k], e[pivot]);
            } else {
                // all remaining diagonal entries vanish; a nonzero
                // off-diagonal a[k][j] makes (e_k + e_j) a usable pivot
                size_t j = k;
                for (size_t cand = k + 1; cand < n && j == k; ++cand)
                    if (!a[k][cand].is_zero())
                        j = cand;
                if (j == k)
                    continue;  // row k is entirely zero in the remaining block
                for (size_t i = 0; i < n; ++i)
                    a[k][i] += a[j][i];
                for (size_t i = 0; i < n; ++i)
                    a[i][k] += a[i][j];
                for (size_t i = 0; i < n; ++i)
                    e[k][i] += e[j][i];
            }
        }
        if (a[k][k].sign() < 0)
            return e[k];
        if (a[k][k].is_zero())
            continue;
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero())
                continue;
            Rat f = a[i][k] / a[k][k];
            for (size_t j = 0; j < n; ++j)
                a[i][j] -= f * a[k][j];
            for (size_t j = 0; j < n; ++j)
                a[j][i] -= f * a[j][k];
            for (size_t j = 0; j < n; ++j)
                e[i][j] -= f * e[k][j];
        }
    }
    // diagonalized with all diagonal entries >= 0: PSD, but the zero-pivot
    // "continue" path can skip a hidden negative block, so double-check by
    // scanning the reduced diagonal once more
    for (size_t k = 0; k < n; ++k)
        if (a[k][k].sign() < 0)
            return e[k];
    return std::nullopt;
}

namespace {

std::optional<std::pair<RatPoly, Rat>> violating_from_entries(
    const std::vector<std::vector<Rat>>& entries,
    const std::function<Rat(const RatPoly&)>& form) {
    auto dir = negative_direction(entries);
    if (!dir)
        return std::nullopt;
    RatPoly base(std::vector<Rat>(dir->begin(), dir->end()));
    RatPoly square = base * base;
    Rat qform = form(square);
    if (qform.sign() >= 0)
        return std::nullopt;  // only strict directions are usable
    // p = square + epsilon stays positive; epsilon small enough keeps the
    // form negative
    Rat s0 = form(RatPoly::constant(Rat(1)));
    Rat eps(1);
    if (s0.sign() > 0)
        eps = (-qform) / (Rat(2) * s0);
    if (eps > Rat(1))
        eps = Rat(1);
    RatPoly p = square + RatPoly::constant(eps);
    return std::make_pair(p, form(p));
}

}  // namespace

std::optional<std::pair<RatPoly, Rat>> violating_positive_poly(const DiagSequence& t) {
    HankelReport rep = diag_hankel(t);
    if (rep.verdict == Definiteness::positive_definite)
        return std::nullopt;
    return violating_from_entries(rep.entries,
                                  [&](const RatPoly& p) { return eval_preserver_form(t, p); });
}

std::optional<std::pair<RatPoly, Rat>> violating_positive_poly(const ConstCoeffOperator& u,
                                                               int k) {
    HankelReport rep = const_coeff_hankel(u, k);
    if (rep.verdict == Definiteness::positive_definite)
        return std::nullopt;
    return violating_from_entries(rep.entries,
                                  [&](const RatPoly& p) { return eval_preserver_form(u, p); });
}

}  // namespace preserver
