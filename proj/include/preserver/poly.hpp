#ifndef PRESERVER_POLY_HPP
#define PRESERVER_POLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "preserver/rat.hpp"

namespace preserver {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree (coeffs[i] is the coefficient of x^i). The coefficient
/// list never has a trailing zero; the zero polynomial is the empty list and
/// reports degree() == -1 as its sentinel.
class RatPoly {
  public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rat> ascending) : c_(ascending) { normalize(); }
    explicit RatPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { normalize(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(const Rat& a) { return RatPoly({a}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }
    static RatPoly monomial(int deg, const Rat& a) {
        if (a.is_zero())
            return RatPoly();
        std::vector<Rat> v(static_cast<size_t>(deg) + 1, Rat(0));
        v.back() = a;
        return RatPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    /// Coefficient of x^i (zero beyond the degree).
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return Rat(0);
        return c_[static_cast<size_t>(i)];
    }

    Rat lc() const {
        if (c_.empty())
            throw std::domain_error("RatPoly: leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    RatPoly operator-() const {
        std::vector<Rat> v;
        v.reserve(c_.size());
        for (const auto& a : c_)
            v.push_back(-a);
        return RatPoly(std::move(v));
    }

    RatPoly operator+(const RatPoly& o) const {
        std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            v[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i)
            v[i] += o.c_[i];
        return RatPoly(std::move(v));
    }

    RatPoly operator-(const RatPoly& o) const { return *this + (-o); }

    RatPoly operator*(const RatPoly& o) const {
        if (is_zero() || o.is_zero())
            return RatPoly();
        std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] += c_[i] * o.c_[j];
        return RatPoly(std::move(v));
    }

    RatPoly operator*(const Rat& a) const {
        if (a.is_zero())
            return RatPoly();
        std::vector<Rat> v;
        v.reserve(c_.size());
        for (const auto& ci : c_)
            v.push_back(ci * a);
        return RatPoly(std::move(v));
    }

    RatPoly operator/(const Rat& a) const { return *this * a.inverse(); }

    RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
    RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    RatPoly pow(unsigned n) const {
        RatPoly r = constant(Rat(1));
        RatPoly b = *this;
        for (; n; n >>= 1) {
            if (n & 1)
                r *= b;
            if (n > 1)
                b *= b;
        }
        return r;
    }

    /// Exact order-th derivative; order beyond the degree gives zero.
    RatPoly derivative(unsigned order = 1) const {
        RatPoly d = *this;
        for (unsigned k = 0; k < order && !d.is_zero(); ++k) {
            std::vector<Rat> v;
            v.reserve(d.c_.size() > 0 ? d.c_.size() - 1 : 0);
            for (size_t i = 1; i < d.c_.size(); ++i)
                v.push_back(d.c_[i] * Rat(static_cast<long>(i)));
            d = RatPoly(std::move(v));
        }
        return d;
    }

    /// Horner evaluation.
    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t i = c_.size(); i-- > 0;)
            r = r * x + c_[i];
        return r;
    }

    /// q with q(x) = p(x - c), computed by Ruffini-Horner re-expansion.
    RatPoly shift(const Rat& c) const {
        if (degree() <= 0)
            return *this;
        // p(x - c) = p(y + a) with y = x, a = -c: repeated synthetic division by (y - a).
        Rat a = -c;
        std::vector<Rat> w = c_;
        size_t n = w.size();
        for (size_t j = 0; j + 1 < n; ++j)
            for (size_t i = n - 1; i-- > j;)
                w[i] += w[i + 1] * a;
        return RatPoly(std::move(w));
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const {
        if (d.is_zero())
            throw std::domain_error("RatPoly: division by zero polynomial");
        RatPoly r = *this;
        if (r.degree() < d.degree())
            return {RatPoly(), r};
        std::vector<Rat> q(static_cast<size_t>(r.degree() - d.degree()) + 1, Rat(0));
        Rat dl = d.lc();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rat f = r.lc() / dl;
            q[static_cast<size_t>(k)] = f;
            r -= monomial(k, f) * d;
        }
        return {RatPoly(std::move(q)), r};
    }

    /// Exact quotient; throws if the division leaves a remainder.
    RatPoly div_exact(const RatPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero())
            throw std::domain_error("RatPoly: division is not exact");
        return q;
    }

    bool divisible_by(const RatPoly& d) const { return divmod(d).second.is_zero(); }

    RatPoly monic() const {
        if (is_zero())
            return *this;
        return *this / lc();
    }

    /// Largest absolute coefficient (zero polynomial gives 0).
    Rat max_abs_coeff() const {
        Rat m(0);
        for (const auto& a : c_)
            if (a.abs() > m)
                m = a.abs();
        return m;
    }

    std::string str(const std::string& var = "x") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline RatPoly operator*(const Rat& a, const RatPoly& p) { return p * a; }

/// Monic gcd. gcd(0, 0) is an error.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// p / gcd(p, p'), monic-normalized.
RatPoly square_free_part(const RatPoly& p);

/// Yun decomposition: p = c * prod factors[j].first ^ factors[j].second with
/// monic square-free pairwise-coprime factors, exponents strictly increasing.
struct SquareFreeDecomposition {
    Rat constant;
    std::vector<std::pair<RatPoly, int>> factors;
};
SquareFreeDecomposition square_free_decomposition(const RatPoly& p);

/// Monic degree-k polynomial whose roots have elementary symmetric functions
/// sigma_i = b[i-1] (Vieta): coefficient of z^(k-i) is (-1)^i b_i.
RatPoly elementary_symmetric_to_monic(const std::vector<Rat>& b, int k);

}  // namespace preserver

#endif
