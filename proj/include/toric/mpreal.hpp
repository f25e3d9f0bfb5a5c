#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace toric {

// Value-semantics wrapper around mpfr_t. Every Real carries its own
// precision; binary operations round to the larger operand precision.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real of_long(long x, mpfr_prec_t prec);
    static Real of_ulong(unsigned long x, mpfr_prec_t prec);
    static Real of_double(double x, mpfr_prec_t prec);
    static Real of_mpz(const mpz_class& z, mpfr_prec_t prec);
    static Real of_mpq(const mpq_class& q, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);
    static Real nan(mpfr_prec_t prec);

    Real rounded_to(mpfr_prec_t prec) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Deterministic decimal form, round-to-nearest at `digits` significant digits.
    std::string to_string(int digits = 20) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend Real abs(const Real& a);
    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real sin(const Real& a);
    friend Real cos(const Real& a);
    friend Real atan2(const Real& y, const Real& x);
    friend Real hypot(const Real& x, const Real& y);
    // a * 2^e, exact.
    friend Real ldexp(const Real& a, long e);

  private:
    mpfr_t v_;
};

// Complex number over Real; both parts share one precision.
class Complex {
  public:
    explicit Complex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

    static Complex from_polar(const Real& modulus, const Real& angle);
    // e^(2*pi*i*turns) for turns given as an exact rational.
    static Complex unit_from_turns(const mpq_class& turns, mpfr_prec_t prec);
    static Complex one(mpfr_prec_t prec);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    Real abs() const { return hypot(re_, im_); }
    Complex conj() const { return Complex(re_, -im_); }
    Complex rounded_to(mpfr_prec_t prec) const { return Complex(re_.rounded_to(prec), im_.rounded_to(prec)); }

    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);

    Complex inverse() const;
    // Integer power by binary powering; negative exponents invert first.
    Complex pow(const mpz_class& e) const;
    // Principal branch of w^(1/k), k a nonzero integer: modulus |w|^(1/k),
    // argument Arg(w)/k with Arg in (-pi, pi].
    Complex root(const mpz_class& k) const;

    std::string to_string(int digits = 20) const;

  private:
    Real re_, im_;
};

}  // namespace toric
