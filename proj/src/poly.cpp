#include "preserver/poly.hpp"

#include <sstream>

namespace preserver {

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd(0, 0)");
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        RatPoly r = f.divmod(g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

RatPoly square_free_part(const RatPoly& p) {
    if (p.is_zero())
        throw std::domain_error("square_free_part of zero polynomial");
    if (p.degree() == 0)
        return RatPoly::constant(Rat(1));
    RatPoly g = poly_gcd(p, p.derivative());
    return p.div_exact(g).monic();
}

SquareFreeDecomposition square_free_decomposition(const RatPoly& p) {
    if (p.is_zero())
        throw std::domain_error("square_free_decomposition of zero polynomial");
    SquareFreeDecomposition out;
    out.constant = p.lc();
    RatPoly f = p.monic();
    if (f.degree() == 0)
        return out;
    // Yun's algorithm.
    RatPoly df = f.derivative();
    RatPoly a = poly_gcd(f, df);
    RatPoly b = f.div_exact(a);
    RatPoly c = df.div_exact(a);
    RatPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RatPoly s = poly_gcd(b, d);
        if (s.degree() > 0)
            out.factors.emplace_back(s, i);
        b = b.div_exact(s);
        c = d.div_exact(s);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

RatPoly elementary_symmetric_to_monic(const std::vector<Rat>& b, int k) {
    if (k < 1 || static_cast<int>(b.size()) != k)
        throw std::domain_error("elementary_symmetric_to_monic: need len(b) = k >= 1");
    std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
    c[static_cast<size_t>(k)] = Rat(1);
    Rat sign(1);
    for (int i = 1; i <= k; ++i) {
        sign = -sign;
        c[static_cast<size_t>(k - i)] = sign * b[static_cast<size_t>(i - 1)];
    }
    return RatPoly(std::move(c));
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat a = coeff(i);
        if (a.is_zero())
            continue;
        if (first) {
            if (a.sign() < 0)
                os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        Rat m = a.abs();
        if (i == 0 || m != Rat(1))
            os << m.str();
        if (i > 0) {
            if (m != Rat(1) && !m.is_integer())
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace preserver
