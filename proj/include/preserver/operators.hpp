#ifndef PRESERVER_OPERATORS_HPP
#define PRESERVER_OPERATORS_HPP

#include <stdexcept>
#include <vector>

#include "preserver/formula.hpp"
#include "preserver/poly.hpp"

namespace preserver {

/// Finite-order linear differential operator with polynomial coefficients:
/// U = q_0(x) + q_1(x) d/dx + ... + q_k(x) d^k/dx^k. The zero operator is
/// representable but flagged (is_zero()); order() is only defined for nonzero
/// operators.
class DiffOperator {
  public:
    DiffOperator() = default;
    explicit DiffOperator(std::vector<RatPoly> q) : q_(std::move(q)) {}

    const std::vector<RatPoly>& q() const { return q_; }
    RatPoly coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(q_.size()))
            return RatPoly();
        return q_[static_cast<size_t>(i)];
    }

    bool is_zero() const {
        for (const auto& qi : q_)
            if (!qi.is_zero())
                return false;
        return true;
    }

    /// Highest i with q_i nonzero; throws for the zero operator.
    int order() const {
        for (int i = static_cast<int>(q_.size()) - 1; i >= 0; --i)
            if (!q_[static_cast<size_t>(i)].is_zero())
                return i;
        throw std::domain_error("DiffOperator: order of the zero operator");
    }

    /// U restricted to d^0..d^i (drops higher derivative terms).
    DiffOperator restricted(int i) const {
        std::vector<RatPoly> q(q_.begin(),
                               q_.begin() + std::min<size_t>(q_.size(), static_cast<size_t>(i) + 1));
        return DiffOperator(std::move(q));
    }

    /// Exact sum_i q_i(x) * p^(i)(x).
    RatPoly apply(const RatPoly& p) const {
        RatPoly out;
        RatPoly d = p;
        for (size_t i = 0; i < q_.size(); ++i) {
            if (i > 0)
                d = d.derivative();
            if (!q_[i].is_zero() && !d.is_zero())
                out += q_[i] * d;
        }
        return out;
    }

  private:
    std::vector<RatPoly> q_;
};

/// Differential operator with constant coefficients alpha_0..alpha_k.
class ConstCoeffOperator {
  public:
    ConstCoeffOperator() = default;
    explicit ConstCoeffOperator(std::vector<Rat> alpha) : alpha_(std::move(alpha)) {}

    const std::vector<Rat>& alpha() const { return alpha_; }
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(alpha_.size()))
            return Rat(0);
        return alpha_[static_cast<size_t>(i)];
    }

    bool is_zero() const {
        for (const auto& a : alpha_)
            if (!a.is_zero())
                return false;
        return true;
    }

    DiffOperator as_diff() const {
        std::vector<RatPoly> q;
        q.reserve(alpha_.size());
        for (const auto& a : alpha_)
            q.push_back(RatPoly::constant(a));
        return DiffOperator(std::move(q));
    }

    RatPoly apply(const RatPoly& p) const { return as_diff().apply(p); }

  private:
    std::vector<Rat> alpha_;
};

/// Diagonal transformation x^i -> lambda_i x^i on polynomials of degree at
/// most the truncation degree.
class DiagSequence {
  public:
    DiagSequence() = default;
    explicit DiagSequence(std::vector<Rat> lambdas) : l_(std::move(lambdas)) {
        if (l_.empty())
            throw std::domain_error("DiagSequence: needs at least lambda_0");
    }

    const std::vector<Rat>& lambdas() const { return l_; }
    int truncation_degree() const { return static_cast<int>(l_.size()) - 1; }
    Rat lambda(int i) const {
        if (i < 0 || i > truncation_degree())
            throw std::domain_error("DiagSequence: index beyond truncation");
        return l_[static_cast<size_t>(i)];
    }

    /// Coefficient-wise a_i -> lambda_i a_i; degree overflow is an error.
    RatPoly apply(const RatPoly& p) const {
        if (p.degree() > truncation_degree())
            throw std::domain_error("DiagSequence::apply: degree exceeds truncation");
        std::vector<Rat> v;
        v.reserve(p.coeffs().size());
        for (size_t i = 0; i < p.coeffs().size(); ++i)
            v.push_back(l_[i] * p.coeffs()[i]);
        return RatPoly(std::move(v));
    }

    /// Sequence of inverses 1/lambda_i, same truncation; any zero entry is an
    /// error.
    DiagSequence inverse() const {
        std::vector<Rat> v;
        v.reserve(l_.size());
        for (const auto& x : l_) {
            if (x.is_zero())
                throw std::domain_error("DiagSequence::inverse: zero entry");
            v.push_back(x.inverse());
        }
        return DiagSequence(std::move(v));
    }

  private:
    std::vector<Rat> l_;
};

/// Materializes values f(0), f(1), ..., f(n) of a closed-form generator.
/// On R_n[x] this is exactly the action of the full (possibly infinite-order)
/// operator the generator describes.
std::vector<Rat> truncate_generator(const Formula& generator, int n);

inline DiagSequence truncate_to_diag(const Formula& generator, int n) {
    return DiagSequence(truncate_generator(generator, n));
}
inline ConstCoeffOperator truncate_to_const_coeff(const Formula& generator, int n) {
    return ConstCoeffOperator(truncate_generator(generator, n));
}

// Free-function spellings used throughout the tests.
inline RatPoly apply_diff(const DiffOperator& u, const RatPoly& p) { return u.apply(p); }
inline RatPoly apply_diag(const DiagSequence& t, const RatPoly& p) { return t.apply(p); }
inline DiagSequence invert_diag(const DiagSequence& t) { return t.inverse(); }

}  // namespace preserver

#endif
