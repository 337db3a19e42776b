#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "preserver/poly.hpp"
#include "preserver/rng.hpp"

using namespace preserver;

namespace {

RatPoly P(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending)
        c.push_back(Rat(v));
    return RatPoly(std::move(c));
}

// independent sigma_i oracle: one-root-at-a-time recurrence
std::vector<Rat> elementary_symmetric_oracle(const std::vector<Rat>& roots) {
    std::vector<Rat> cur(roots.size() + 1, Rat(0));
    cur[0] = Rat(1);
    for (const auto& r : roots)
        for (size_t i = cur.size() - 1; i >= 1; --i)
            cur[i] = cur[i] + r * cur[i - 1];
    return cur;
}

}  // namespace

TEST_CASE("Rat basics and parsing") {
    CHECK(Rat::from_string("4/6") == Rat(2, 3));
    CHECK(Rat::from_string("-5") == Rat(-5));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(2, -4).den() == 2);
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(-7, 3).floor() == -3);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat::from_string("x"), std::invalid_argument);
    Rat root;
    CHECK(Rat(9, 4).sqrt_exact(&root));
    CHECK(root == Rat(3, 2));
    CHECK_FALSE(Rat(2).sqrt_exact(&root));
    CHECK(simplest_rational_between(Rat(2, 5), Rat(3, 5)) == Rat(1, 2));
    CHECK(simplest_rational_between(Rat(-1, 3), Rat(1, 7)) == Rat(0));
    CHECK(simplest_rational_between(Rat(7, 2), Rat(19, 5)) == Rat(7, 2));
    CHECK(simplest_rational_between(Rat(18, 5), Rat(19, 5)) == Rat(11, 3));
    CHECK(round_dyadic(Rat(1, 3), 4) == Rat(5, 16));
}

TEST_CASE("add: cancellation, identity") {
    CHECK(P({1, 0, 1}) + P({0, 0, -1}) == P({1}));
    RatPoly p = P({3, -2, 5});
    CHECK(p + RatPoly::zero() == p);
    CHECK(P({1, 1}) + P({-1, 1}) == P({0, 2}));
}

TEST_CASE("mul: unit, quartic product, annihilation") {
    CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
    // (x+1)(305x^3+495x^2+243x+29), expansion hand-checked
    CHECK(P({1, 1}) * P({29, 243, 495, 305}) == P({29, 272, 738, 800, 305}));
    CHECK(P({1, 2, 3}) * RatPoly::zero() == RatPoly::zero());
}

TEST_CASE("derivative orders") {
    CHECK(P({0, 0, 1}).derivative() == P({0, 2}));
    CHECK(P({0, 0, 0, 0, 1}).derivative(2) == P({0, 0, 12}));
    CHECK(P({0, 0, 1}).derivative(3) == RatPoly::zero());
}

TEST_CASE("shift") {
    CHECK(P({0, 0, 1}).shift(Rat(1)) == P({1, -2, 1}));  // (x-1)^2
    RatPoly p = P({2, -3, 0, 5});
    CHECK(p.shift(Rat(0)) == p);
    CHECK(p.shift(Rat(7, 3)).shift(Rat(-7, 3)) == p);
}

TEST_CASE("eval, gcd, square-free part") {
    CHECK(P({-1, 0, 1}).eval(Rat(0)) == Rat(-1));
    CHECK(square_free_part(P({1, -2, 1})) == P({-1, 1}));
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK_THROWS_AS(poly_gcd(RatPoly::zero(), RatPoly::zero()), std::domain_error);
}

TEST_CASE("zero polynomial sentinel") {
    CHECK(RatPoly::zero().degree() == -1);
    CHECK(RatPoly::constant(Rat(3)).degree() == 0);
    CHECK_THROWS_AS(RatPoly::zero().lc(), std::domain_error);
}

TEST_CASE("elementary_symmetric_to_monic examples") {
    CHECK(elementary_symmetric_to_monic({Rat(3), Rat(2)}, 2) == P({2, -3, 1}));
    CHECK(elementary_symmetric_to_monic({Rat(0), Rat(0), Rat(0)}, 3) == P({0, 0, 0, 1}));
    // conjugate complex roots: discriminant 1 - 4 < 0
    RatPoly q = elementary_symmetric_to_monic({Rat(1), Rat(1)}, 2);
    CHECK(q == P({1, -1, 1}));
    Rat disc = q.coeff(1) * q.coeff(1) - Rat(4) * q.coeff(0) * q.coeff(2);
    CHECK(disc.sign() < 0);
}

TEST_CASE("ring axioms on randomized triples") {
    DetRng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly a = rng.poly(5, 8, 5);
        RatPoly b = rng.poly(5, 8, 5);
        RatPoly c = rng.poly(5, 8, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("derivative is linear and satisfies Leibniz") {
    DetRng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly p = rng.poly(6, 9, 4);
        RatPoly q = rng.poly(6, 9, 4);
        Rat a = rng.rat(5, 3), b = rng.rat(5, 3);
        CHECK((p * a + q * b).derivative() == p.derivative() * a + q.derivative() * b);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("shift agrees with evaluation") {
    DetRng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly p = rng.poly(6, 9, 4);
        Rat c = rng.rat(6, 4), x = rng.rat(6, 4);
        CHECK(p.shift(c).eval(x) == p.eval(x - c));
    }
}

TEST_CASE("Vieta inversion round-trips through rational roots") {
    DetRng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        int k = static_cast<int>(rng.int_in(1, 5));
        std::vector<Rat> roots;
        RatPoly expanded = RatPoly::constant(Rat(1));
        for (int i = 0; i < k; ++i) {
            roots.push_back(rng.rat(4, 3));
            expanded *= RatPoly{-roots.back(), Rat(1)};
        }
        std::vector<Rat> sigma = elementary_symmetric_oracle(roots);
        std::vector<Rat> b(sigma.begin() + 1, sigma.end());
        CHECK(elementary_symmetric_to_monic(b, k) == expanded);
    }
}

TEST_CASE("division with remainder") {
    DetRng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly p = rng.poly(7, 9, 4);
        RatPoly d = rng.nonzero_poly(4, 9, 4);
        auto [q, r] = p.divmod(d);
        CHECK(q * d + r == p);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("square-free decomposition reassembles") {
    DetRng rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        RatPoly p = rng.nonzero_poly(2, 5, 2).pow(static_cast<unsigned>(rng.int_in(1, 3))) *
                    rng.nonzero_poly(2, 5, 2);
        if (p.degree() < 1)
            continue;
        auto dec = square_free_decomposition(p);
        RatPoly rebuilt = RatPoly::constant(dec.constant);
        for (const auto& [f, m] : dec.factors) {
            CHECK(square_free_part(f) == f.monic());
            rebuilt *= f.pow(static_cast<unsigned>(m));
        }
        CHECK(rebuilt == p);
    }
}

TEST_CASE("pretty printing") {
    CHECK(P({29, 272, 738, 800, 305}).str() == "305x^4 + 800x^3 + 738x^2 + 272x + 29");
    CHECK(P({1, -2, 1}).str() == "x^2 - 2x + 1");
    CHECK(RatPoly::zero().str() == "0");
    CHECK(RatPoly({Rat(-1, 2), Rat(0), Rat(1, 3)}).str() == "1/3*x^2 - 1/2");
}
