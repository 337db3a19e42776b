#ifndef PRESERVER_WITNESS_HPP
#define PRESERVER_WITNESS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "preserver/classify.hpp"
#include "preserver/operators.hpp"
#include "preserver/poly.hpp"

namespace preserver {

/// Correction terms g_l(u_1, ..., u_{l-1}) in the expansion
/// w_l = p^(l)/p = 2 l! u_l + g_l of the logarithmic derivative data of
/// p = prod (x - x_i)^2, where u_i are the elementary symmetric functions of
/// the 1/(x - x_j). Each g_l is a sum of terms coeff * u_i * u_j with
/// i + j = l, i, j >= 1; g_1 is empty.
struct GlTable {
    struct Term {
        int i, j;   // i <= j, i + j = l
        Rat coeff;  // ordered-pair contributions summed
    };
    int k = 0;
    std::vector<std::vector<Term>> terms;  // terms[l] for l = 1..k; terms[0] unused

    /// g_l evaluated at u_1..u_{l-1} (u[0] = u_1).
    Rat eval(int l, std::span<const Rat> u) const;
};

GlTable gl_table(int k);

/// Inverts w-targets to elementary symmetric values: b_1 = a_1,
/// b_i = (a_i - g_i(b_1, ..., b_{i-1})) / (2 i!).
std::vector<Rat> b_from_a(std::span<const Rat> a, const GlTable& table);

enum class Construction { t1, t2, t3, ct3_restriction };

std::string to_string(Construction c);

/// Evidence that the witness polynomial is non-negative, as classification
/// establishes it: positive leading coefficient, even degree, and no real
/// root of odd multiplicity. The degenerate p = 1 fast path reports the
/// constant case.
struct NonnegEvidence {
    Verdict verdict = Verdict::no;
    int degree = 0;
    Rat leading_coeff;
    int odd_multiplicity_real_roots = 0;
};

/// A non-negative polynomial p with (U p)(x0) = value < 0, all exact.
struct WitnessCertificate {
    RatPoly p;
    Rat x0;
    Rat value;
    int degree_used = 0;
    Construction construction = Construction::t1;
    NonnegEvidence nonneg_proof;
};

struct RetryExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smallest-magnitude nonzero integer (1, -1, 2, -2, ...) that is a root of
/// no nonzero coefficient polynomial of U.
Rat find_x0(const DiffOperator& u);

/// Re-verifies a certificate from scratch: exact non-negativity of p via
/// classification and exact negativity of (U p)(x0).
bool verify_certificate(const DiffOperator& u, const WitnessCertificate& cert);

/// General construction: non-negative witness of degree <= 2k whose image
/// under U attains a negative value. Deterministic given the seed.
WitnessCertificate witness_t1(const DiffOperator& u, uint64_t seed = 0);

/// Odd order k: witness (x - t0)^(k+1) of degree exactly k + 1.
WitnessCertificate witness_t2(const DiffOperator& u);

/// Even order k with the sign hypothesis (q_k(x0) < 0 somewhere, or
/// q_k(x0) = 0 with q_{k-1}(x0) != 0): witness (x - t0)^k of degree exactly
/// k. Throws PreconditionNotFound when no qualifying x0 is found.
WitnessCertificate witness_t3(const DiffOperator& u);

/// Restriction route: run the degree-k construction on U truncated to order
/// i (even). Since the witness has degree i, its image under the full U
/// equals its image under the restriction, so the certificate verifies
/// against U itself.
WitnessCertificate witness_ct3(const DiffOperator& u, int i);

/// Smallest-degree applicable construction: t3 when its hypothesis holds,
/// t2 for odd order, otherwise t1.
WitnessCertificate witness_auto(const DiffOperator& u, uint64_t seed = 0);

}  // namespace preserver

#endif
