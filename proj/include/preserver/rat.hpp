#ifndef PRESERVER_RAT_HPP
#define PRESERVER_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace preserver {

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den >= 1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(int n) : v_(n) {}
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0)
            throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "n" or "n/d" (arbitrary precision, optional sign).
    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rat(mpz_class(s));
            return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero())
            throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat inverse() const {
        if (is_zero())
            throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        return Rat(n, d);
    }

    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return r;
    }
    mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return r;
    }

    /// True when the value is the square of a rational; if so *root is the
    /// non-negative square root.
    bool sqrt_exact(Rat* root) const {
        if (sign() < 0)
            return false;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
            return false;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        if (root)
            *root = Rat(rn, rd);
        return true;
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline Rat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

inline Rat binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

/// Dyadic rounding: nearest multiple of 2^-bits.
inline Rat round_dyadic(const Rat& x, unsigned bits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rat scaled = x * Rat(scale);
    Rat shifted = scaled + Rat(1, 2);
    return Rat(shifted.floor(), scale);
}

/// The rational with smallest denominator in the closed interval [lo, hi]
/// (ties broken toward smaller numerator magnitude), by the Stern-Brocot walk.
inline Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (lo > hi)
        throw std::domain_error("simplest_rational_between: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0)
        return Rat(0);
    if (hi.sign() < 0)
        return -simplest_rational_between(-hi, -lo);
    // 0 < lo <= hi
    mpz_class n = lo.floor();
    if (lo == Rat(n))
        return lo;
    if (hi >= Rat(n) + Rat(1))
        return Rat(mpz_class(n + 1));
    Rat frac = simplest_rational_between((hi - Rat(n)).inverse(), (lo - Rat(n)).inverse());
    return Rat(n) + frac.inverse();
}

}  // namespace preserver

#endif
