#ifndef PRESERVER_CXPOLY_HPP
#define PRESERVER_CXPOLY_HPP

#include <vector>

#include "preserver/poly.hpp"
#include "preserver/rat.hpp"

namespace preserver {

/// Gaussian rational: re + im*i with exact rational parts.
struct CxRat {
    Rat re, im;

    CxRat() = default;
    CxRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit CxRat(const Rat& r) : re(r), im(0) {}

    bool is_real() const { return im.is_zero(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    CxRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    CxRat operator-() const { return {-re, -im}; }
    CxRat operator+(const CxRat& o) const { return {re + o.re, im + o.im}; }
    CxRat operator-(const CxRat& o) const { return {re - o.re, im - o.im}; }
    CxRat operator*(const CxRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CxRat inverse() const {
        Rat n = norm2();
        if (n.is_zero())
            throw std::domain_error("CxRat: inverse of zero");
        return {re / n, -im / n};
    }
    CxRat operator/(const CxRat& o) const { return *this * o.inverse(); }
    bool operator==(const CxRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const CxRat& o) const { return !(*this == o); }

    /// |re| + |im|, an exact upper bound for the modulus.
    Rat abs_upper() const { return re.abs() + im.abs(); }
};

/// Polynomial with Gaussian rational coefficients, ascending degree,
/// normalized like RatPoly.
class CxRatPoly {
  public:
    CxRatPoly() = default;
    explicit CxRatPoly(std::vector<CxRat> ascending) : c_(std::move(ascending)) { normalize(); }
    explicit CxRatPoly(const RatPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& a : p.coeffs())
            c_.emplace_back(a);
    }
    static CxRatPoly constant(const CxRat& a) { return CxRatPoly(std::vector<CxRat>{a}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<CxRat>& coeffs() const { return c_; }
    CxRat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return CxRat();
        return c_[static_cast<size_t>(i)];
    }

    CxRatPoly operator+(const CxRatPoly& o) const {
        std::vector<CxRat> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c_.size(); ++i)
            v[i] = v[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i)
            v[i] = v[i] + o.c_[i];
        return CxRatPoly(std::move(v));
    }

    CxRatPoly operator*(const CxRatPoly& o) const {
        if (is_zero() || o.is_zero())
            return CxRatPoly();
        std::vector<CxRat> v(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return CxRatPoly(std::move(v));
    }

    CxRatPoly pow(unsigned n) const {
        CxRatPoly r = constant(CxRat(Rat(1)));
        CxRatPoly b = *this;
        for (; n; n >>= 1) {
            if (n & 1)
                r = r * b;
            if (n > 1)
                b = b * b;
        }
        return r;
    }

    CxRat eval(const CxRat& z) const {
        CxRat r;
        for (size_t i = c_.size(); i-- > 0;)
            r = r * z + c_[i];
        return r;
    }

    RatPoly real_part() const {
        std::vector<Rat> v;
        v.reserve(c_.size());
        for (const auto& a : c_)
            v.push_back(a.re);
        return RatPoly(std::move(v));
    }
    RatPoly imag_part() const {
        std::vector<Rat> v;
        v.reserve(c_.size());
        for (const auto& a : c_)
            v.push_back(a.im);
        return RatPoly(std::move(v));
    }

    /// (x - z)
    static CxRatPoly linear_from_root(const CxRat& z) {
        return CxRatPoly(std::vector<CxRat>{-z, CxRat(Rat(1))});
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<CxRat> c_;
};

}  // namespace preserver

#endif
