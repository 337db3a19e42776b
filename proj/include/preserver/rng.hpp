#ifndef PRESERVER_RNG_HPP
#define PRESERVER_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "preserver/poly.hpp"
#include "preserver/rat.hpp"

namespace preserver {

/// Deterministic random source for seeded suites. mt19937_64 output is fully
/// specified by the standard, and all derived draws below go through plain
/// modular reduction, so sequences are identical across platforms.
class DetRng {
  public:
    explicit DetRng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi].
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Rational with |num| <= max_num and 1 <= den <= max_den.
    Rat rat(long max_num, long max_den) {
        return Rat(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Rat nonzero_rat(long max_num, long max_den) {
        for (;;) {
            Rat r = rat(max_num, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    Rat positive_rat(long max_num, long max_den) {
        return Rat(int_in(1, max_num), int_in(1, max_den));
    }

    /// Random polynomial of degree <= max_deg (possibly zero).
    RatPoly poly(int max_deg, long max_num, long max_den) {
        std::vector<Rat> c;
        int deg = static_cast<int>(int_in(0, max_deg));
        c.reserve(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i)
            c.push_back(rat(max_num, max_den));
        return RatPoly(std::move(c));
    }

    RatPoly nonzero_poly(int max_deg, long max_num, long max_den) {
        for (;;) {
            RatPoly p = poly(max_deg, max_num, max_den);
            if (!p.is_zero())
                return p;
        }
    }

    /// Positive polynomial of degree <= max_deg, built as an even-degree sum
    /// of squares plus a positive constant.
    RatPoly positive_poly(int max_deg, long max_num = 6, long max_den = 4) {
        RatPoly f = poly(max_deg / 2, max_num, max_den);
        RatPoly g = poly(max_deg / 2, max_num, max_den);
        return f * f + g * g + RatPoly::constant(positive_rat(max_num, max_den));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace preserver

#endif
