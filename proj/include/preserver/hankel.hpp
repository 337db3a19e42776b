#ifndef PRESERVER_HANKEL_HPP
#define PRESERVER_HANKEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "preserver/operators.hpp"
#include "preserver/poly.hpp"

namespace preserver {

enum class Definiteness { positive_definite, positive_semidefinite_degenerate, indefinite };

std::string to_string(Definiteness v);

/// Exact Hankel matrix with leading minors and a three-valued verdict.
/// positive_definite iff all leading minors are strictly positive;
/// positive_semidefinite_degenerate iff not PD but every principal minor is
/// >= 0 (checked exhaustively, matrices here are tiny); indefinite otherwise.
struct HankelReport {
    int size = 0;                             // (l+1)
    std::vector<std::vector<Rat>> entries;    // entry(i,j) = s_{i+j}
    std::vector<Rat> leading_minors;          // Delta_0 .. Delta_l
    Definiteness verdict = Definiteness::indefinite;
};

/// Hankel matrix of a diagonal sequence: s_m = lambda_m, size n/2 + 1 where n
/// is the (even) truncation degree; an odd truncation is reduced to n - 1.
HankelReport diag_hankel(const DiagSequence& t);

/// Hankel matrix of a constant-coefficient operator on R_k[x], k = 2l even:
/// s_m = m! * alpha_m (alpha beyond the supplied list is zero), size l + 1.
/// PD certifies positivity preservation in R_k[x]; indefinite certifies
/// non-preservation of non-negativity; the degenerate PSD verdict is a
/// boundary report. Odd k is an error.
HankelReport const_coeff_hankel(const ConstCoeffOperator& u, int k);

struct NecessaryViolation {
    enum Kind { negative_even_lambda, cauchy_schwarz } kind;
    int index;
    std::string detail;
};

/// Exact necessary conditions for a diagonal positivity preserver:
/// lambda_i >= 0 for even i, and lambda_i^2 <= lambda_0 * lambda_{2i} for all
/// i with 2i within the truncation. If lambda_0 < 0 the sequence is negated
/// first (the usual normalization).
std::vector<NecessaryViolation> necessary_conditions(const DiagSequence& t);

/// The scalar functional whose positivity over all positive p is the
/// preserver criterion: (U p)(0) = sum_i i! a_i alpha_i for constant
/// coefficients, T(p)(1) = sum_i lambda_i a_i for diagonal sequences.
Rat eval_preserver_form(const ConstCoeffOperator& u, const RatPoly& p);
Rat eval_preserver_form(const DiagSequence& t, const RatPoly& p);

/// A rational vector c with c^T H c < 0 for a symmetric matrix that is not
/// positive semidefinite (exact Lagrange diagonalization); nullopt when the
/// matrix is PSD.
std::optional<std::vector<Rat>> negative_direction(const std::vector<std::vector<Rat>>& sym);

/// For a non-PD Hankel verdict, a positive polynomial within the truncation
/// whose preserver form is <= 0 (strictly < 0 for indefinite verdicts):
/// p = (sum c_i x^i)^2 + epsilon from the negative direction of the matrix.
/// Returns the polynomial and the exact form value.
std::optional<std::pair<RatPoly, Rat>> violating_positive_poly(const DiagSequence& t);
std::optional<std::pair<RatPoly, Rat>> violating_positive_poly(const ConstCoeffOperator& u, int k);

}  // namespace preserver

#endif
