#ifndef PRESERVER_FORMULA_HPP
#define PRESERVER_FORMULA_HPP

#include <memory>
#include <string>

#include "preserver/poly.hpp"
#include "preserver/rat.hpp"

namespace preserver {

/// A parsed arithmetic expression in one variable over the rationals:
/// integers, + - * / ^ (non-negative integer exponents), parentheses, and
/// implicit multiplication ("305x^4", "3(x+1)"). Used both for closed-form
/// sequence generators evaluated at integer indices and for polynomial
/// shorthand on the command line.
class Formula {
  public:
    /// Throws std::invalid_argument on malformed input or if more than one
    /// distinct variable name appears.
    static Formula parse(const std::string& text);

    /// Evaluates with the variable bound to the given rational. Division is
    /// exact rational division; division by zero throws std::domain_error.
    Rat eval_at(const Rat& value) const;

    /// Interprets the expression as a polynomial in the variable. Division is
    /// only allowed by nonzero constants; anything else throws
    /// std::domain_error.
    RatPoly as_poly() const;

    const std::string& variable() const { return var_; }

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
    std::string var_;
};

}  // namespace preserver

#endif
