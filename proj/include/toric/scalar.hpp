#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "toric/mpreal.hpp"

namespace toric {

/// A nonzero complex constant in exact multiplicative form,
///
///     value = (prod over primes p of p^mod_exp[p]) * e^(2*pi*i*turns)
///
/// with rational exponents and rational turns in [0, 1). Closed under
/// multiplication, integer powers and d-th roots, all computed exactly.
class ExactScalar {
  public:
    using ExponentMap = std::map<mpz_class, mpq_class>;

    ExactScalar() = default;  // the constant 1

    static ExactScalar one() { return ExactScalar(); }

    // Validates that every key is a prime > 1; drops zero exponents and
    // reduces turns mod 1.
    static ExactScalar from_parts(ExponentMap modulus_exponents, mpq_class turns);

    // Exact rational constant: sign folds into turns, |value| is factored by
    // trial division up to factor_bound (FactorBoundExceeded past it).
    static ExactScalar from_rational(const mpq_class& value,
                                     const mpz_class& factor_bound = default_factor_bound());

    static mpz_class default_factor_bound() { return mpz_class(1000000); }

    const ExponentMap& modulus_exponents() const { return mod_; }
    const mpq_class& turns() const { return turns_; }

    ExactScalar mul(const ExactScalar& o) const;
    ExactScalar pow(const mpz_class& k) const;
    ExactScalar pow(long k) const { return pow(mpz_class(k)); }
    ExactScalar inverse() const { return pow(-1); }

    // d-th root, d >= 1. branch selects among the d roots: the result has
    // turns (turns + branch) / d; branch 0 is the principal one.
    ExactScalar root(const mpz_class& d, const mpz_class& branch = 0) const;

    bool is_one() const { return mod_.empty() && turns_ == 0; }
    bool is_unit_modulus() const { return mod_.empty(); }

    bool operator==(const ExactScalar& o) const { return mod_ == o.mod_ && turns_ == o.turns_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // Numeric value at the requested precision. Computed with 32 guard bits;
    // relative error stays below 2^(8 - precision_bits).
    Complex evaluate(mpfr_prec_t precision_bits) const;

    // Compact display form: "1", "-1", "i", "-i", "2^(1/2)*e(1/3)", ...
    std::string to_string() const;

  private:
    ExponentMap mod_;
    mpq_class turns_ = 0;
};

}  // namespace toric
