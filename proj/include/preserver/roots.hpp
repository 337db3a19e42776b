#ifndef PRESERVER_ROOTS_HPP
#define PRESERVER_ROOTS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "preserver/cxpoly.hpp"
#include "preserver/poly.hpp"
#include "preserver/rat.hpp"

namespace preserver {

/// Canonical Sturm sequence of a square-free polynomial: first entry the
/// input, second its derivative, then negated Euclidean remainders down to a
/// nonzero constant.
struct SturmChain {
    std::vector<RatPoly> polys;

    static SturmChain build(const RatPoly& square_free);

    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Distinct real roots in the open interval (a, b); both endpoints must
    /// be non-roots of the first chain entry.
    int count_open(const Rat& a, const Rat& b) const;
    int count_all() const;
};

/// Exact number of real roots. Distinct by default; with_multiplicity counts
/// each root as many times as its multiplicity. Zero polynomial is an error.
int count_real_roots(const RatPoly& p, bool with_multiplicity = false);

/// A Cauchy-style bound B such that all real (indeed complex) roots have
/// modulus < B.
Rat root_bound(const RatPoly& p);

/// Disjoint open intervals with rational non-root endpoints, one per distinct
/// real root of p, sorted. Each interval is no wider than max_width when
/// max_width > 0.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RatPoly& p,
                                                    const Rat& max_width = Rat(0));

/// All rational real roots of p (exact), sorted ascending. p must be nonzero.
std::vector<Rat> rational_real_roots(const RatPoly& p);

/// Some rational point where p takes a negative value, if one exists.
/// Exact decision: returns nullopt if and only if p >= 0 everywhere.
std::optional<Rat> find_negative_point(const RatPoly& p);

/// Certified complex root enclosure: the true root lies within `radius` of
/// re_center + im_center*i in the complex plane.
struct CxRoot {
    Rat re_center;
    Rat im_center;
    Rat radius;
    int multiplicity = 1;

    CxRat center() const { return {re_center, im_center}; }
    bool is_real() const { return im_center.is_zero(); }
};

struct RootCertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One enclosure per root of p (multiplicities summing to deg p), every
/// radius <= radius_bound, non-real enclosures in exact conjugate pairs,
/// ordered by (re_center, im_center). Multiplicities come from the exact
/// square-free decomposition; enclosures are certified a posteriori with
/// exact rational arithmetic (Weierstrass disk bound). Throws
/// RootCertificationError if certification does not succeed within the
/// precision escalation budget.
std::vector<CxRoot> approx_roots(const RatPoly& p, const Rat& radius_bound);

/// Starting precision (bits) for the float stage of root refinement. Reads
/// PRESERVER_LAB_PRECISION once; defaults to 128.
unsigned root_refinement_start_precision();

}  // namespace preserver

#endif
