#ifndef PRESERVER_CLASSIFY_HPP
#define PRESERVER_CLASSIFY_HPP

#include <optional>
#include <string>

#include "preserver/poly.hpp"

namespace preserver {

/// Three-valued verdict for class membership.
enum class Verdict { yes, no, not_applicable };

std::string to_string(Verdict v);

/// Sum-of-two-squares witness: p = p1^2 + p2^2, exactly when `exact`,
/// otherwise with every coefficient of p - p1^2 - p2^2 bounded by
/// residual_bound in absolute value (the bound itself is exact).
struct SosWitness {
    RatPoly p1, p2;
    Rat residual_bound;
    bool exact = false;
};

struct PolyClass {
    Verdict hyperbolic = Verdict::not_applicable;
    Verdict elliptic = Verdict::no;
    Verdict positive = Verdict::no;
    Verdict nonnegative = Verdict::no;
    std::optional<SosWitness> sos_witness;
};

/// Exact verdicts only (no SOS witness); cheap enough for inner loops.
PolyClass classify_verdicts(const RatPoly& p);

/// Exact verdicts plus, whenever nonnegative = yes, a sum-of-two-squares
/// witness.
PolyClass classify(const RatPoly& p);

/// Decompose a non-negative polynomial as p1^2 + p2^2. Exact rational output
/// when every root is rational or Gaussian-rational and the leading constant
/// splits as a rational square (or sum of two rational squares); otherwise a
/// dyadic-rational pair with certified coefficient-wise residual bound
/// <= 10^-9 * (1 + max |coeff of p|). Throws std::domain_error when p is not
/// non-negative.
SosWitness sos_decompose(const RatPoly& p);

/// deg p - count_real_roots(p, with multiplicity). Zero polynomial is an
/// error.
int nonreal_root_count(const RatPoly& p);

/// Number of distinct real roots of p carrying an odd multiplicity; zero for
/// every non-negative p of positive leading coefficient and even degree, and
/// exactly what classification checks. p must be nonzero.
int odd_multiplicity_real_root_count(const RatPoly& p);

}  // namespace preserver

#endif
